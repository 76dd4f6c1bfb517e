"""Random instances for the randomized verification items."""
import random
from fractions import Fraction
from typing import List, Tuple

from ...curves import HyperellipticModel, TwoTorsionClass, h_classes
from ...divisor import XRatio
from ...exact_math import Poly, poly_discriminant


def split_model(
    rng: random.Random, genus: int, bound: int = 20
) -> HyperellipticModel:
    roots = rng.sample(range(-bound, bound + 1), 2 * genus + 2)
    return HyperellipticModel.of(roots, rng.choice([1, -1, 2, -2]))


def random_class(rng: random.Random, m: HyperellipticModel) -> TwoTorsionClass:
    return rng.choice(h_classes(m))


def auxiliary_point(rng: random.Random, m: HyperellipticModel) -> Fraction:
    while True:
        c = Fraction(rng.randint(-60, 60), rng.randint(1, 5))
        if c not in m.roots:
            return c


def reciprocity_pair(
    rng: random.Random, m: HyperellipticModel
) -> Tuple[XRatio, XRatio]:
    """Two degree-0 x-ratios on ``m`` with disjoint supports."""
    k = rng.randint(1, m.n // 4)
    indices = rng.sample(range(m.n), 4 * k)
    return (
        XRatio(tuple(indices[:k]), tuple(indices[k : 2 * k])),
        XRatio(tuple(indices[2 * k : 3 * k]), tuple(indices[3 * k :])),
    )


def squarefree_cubic(rng: random.Random, split: bool) -> Poly:
    while True:
        if split:
            roots = rng.sample(range(-12, 13), 3)
            p = Poly.from_roots(roots, rng.choice([1, -1, 2, 3, Fraction(1, 3)]))
        else:
            p = Poly.of(*[rng.randint(-9, 9) for _ in range(3)], rng.choice([1, -2, 3]))
        if poly_discriminant(p) != 0:
            return p


def random_poly(rng: random.Random) -> Poly:
    degree = rng.randint(0, 8)
    return Poly(
        tuple(
            Fraction(rng.randint(-100, 100), rng.randint(1, 100))
            for _ in range(degree + 1)
        )
    )


def genera(rng: random.Random, count: int, low: int, high: int) -> List[int]:
    return [rng.randint(low, high) for _ in range(count)]
