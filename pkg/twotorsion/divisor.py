"""
Divisors supported on Weierstrass points and at infinity, evaluation of
x-only rational functions on them, and Weil reciprocity.

A divisor is a formal sum of root indices plus ``n * (inf+ + inf-)``;
functions of x alone take the same value at both points at infinity.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .curves import HyperellipticModel, TwoTorsionClass
from .exact_math import (
    Poly,
    RationalLike,
    SquareClass,
    poly_eval,
    square_class,
    to_rational,
)
from .exceptions import (
    DimensionMismatch,
    InvalidType,
    SharedSupport,
    SupportCollision,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Divisor:
    points: Tuple[Tuple[int, int], ...] = ()
    infinity: int = 0

    def __post_init__(self) -> None:
        merged: Dict[int, int] = {}
        for index, n in self.points:
            merged[index] = merged.get(index, 0) + n
        object.__setattr__(
            self, "points", tuple(sorted((i, n) for i, n in merged.items() if n))
        )

    @classmethod
    def of(cls, points: Mapping[int, int], infinity: int = 0) -> "Divisor":
        return cls(tuple(points.items()), infinity)

    @property
    def degree(self) -> int:
        return sum(n for _, n in self.points) + 2 * self.infinity

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.points)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.points + other.points, self.infinity + other.infinity)

    def __neg__(self) -> "Divisor":
        return Divisor(tuple((i, -n) for i, n in self.points), -self.infinity)

    def __str__(self) -> str:
        terms = ["{}*P{}".format(n, i) for i, n in self.points]
        if self.infinity:
            terms.append("{}*(inf+ + inf-)".format(self.infinity))
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class XRatio:
    """
    ``prod(x - z_i for i in num) / prod(x - z_j for j in den)`` with equal
    numbers of factors, so the function has no zero or pole at infinity.
    """

    num: Tuple[int, ...]
    den: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.num) != len(self.den):
            raise DimensionMismatch("numerator and denominator need equal degree")
        if set(self.num) & set(self.den):
            raise SharedSupport("numerator and denominator share a root")

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.num) | set(self.den)))

    def polys(self, m: HyperellipticModel) -> Tuple[Poly, Poly]:
        return (
            Poly.from_roots(m.roots[i] for i in self.num),
            Poly.from_roots(m.roots[j] for j in self.den),
        )

    def divisor(self, m: HyperellipticModel) -> Divisor:
        # x - z vanishes to order 2 at the Weierstrass point over z
        for i in self.support:
            if not 0 <= i < m.n:
                raise InvalidType("root index {} out of range".format(i))
        return Divisor(
            tuple((i, 2) for i in self.num) + tuple((j, -2) for j in self.den)
        )


def divisor_eval(
    m: HyperellipticModel, f_num: Poly, f_den: Poly, d: Divisor
) -> Fraction:
    """The product of f(P)^{n_P} over the points of ``d``."""
    if f_num.degree != f_den.degree:
        raise DimensionMismatch("f must have equal numerator and denominator degree")
    rv = Fraction(1)
    for index, n in d.points:
        z = m.roots[index]
        top, bottom = poly_eval(f_num, z), poly_eval(f_den, z)
        if top == 0 or bottom == 0:
            raise SupportCollision("P{} lies in the support of div(f)".format(index))
        rv *= (top / bottom) ** n
    if d.infinity:
        rv *= (f_num.leading / f_den.leading) ** (2 * d.infinity)
    return rv


def weil_reciprocity_sides(
    m: HyperellipticModel, f: XRatio, g: XRatio
) -> Tuple[Fraction, Fraction]:
    if set(f.support) & set(g.support):
        raise SharedSupport("f and g must have disjoint supports")
    f_num, f_den = f.polys(m)
    g_num, g_den = g.polys(m)
    return (
        divisor_eval(m, f_num, f_den, g.divisor(m)),
        divisor_eval(m, g_num, g_den, f.divisor(m)),
    )


def weil_reciprocity_check(m: HyperellipticModel, f: XRatio, g: XRatio) -> bool:
    """f(div g) == g(div f) for x-ratios with disjoint supports."""
    lhs, rhs = weil_reciprocity_sides(m, f, g)
    _LOGGER.debug("Weil reciprocity: f(div g)=%s g(div f)=%s", lhs, rhs)
    return lhs == rhs


def subset_function(
    m: HyperellipticModel, subset: Iterable[int], c: RationalLike
) -> Tuple[Poly, Poly]:
    """The function f_S = prod_{z in S}(x - z) / (x - c)^{|S|}."""
    c = to_rational(c)
    if c in m.roots:
        raise SupportCollision("auxiliary point {} is a Weierstrass root".format(c))
    indices = list(subset)
    num = Poly.from_roots(m.roots[i] for i in indices)
    return num, Poly.from_roots([c] * len(indices))


def complement_representative(m: HyperellipticModel, s: TwoTorsionClass) -> Divisor:
    """sum_{j not in S} P_j - (|S^c| / 2) * (inf+ + inf-), of degree 0."""
    rest = s.complement
    return Divisor(tuple((j, 1) for j in rest), -(len(rest) // 2))


def q2_by_divisor_eval(
    m: HyperellipticModel, s: TwoTorsionClass, c: RationalLike
) -> SquareClass:
    """q2(a_S) evaluated as f_S on the complementary representative of a_S."""
    f_num, f_den = subset_function(m, s.subset, c)
    d = complement_representative(m, s)
    return square_class(divisor_eval(m, f_num, f_den, d))


def b2_by_divisor_eval(
    m: HyperellipticModel, s: TwoTorsionClass, t: TwoTorsionClass, c: RationalLike
) -> SquareClass:
    """b2(a_S, a_T) for disjoint S and T: f_S on a degree-0 representative of a_T."""
    f_num, f_den = subset_function(m, s.subset, c)
    d = Divisor(tuple((j, 1) for j in t.subset), -(len(t.subset) // 2))
    return square_class(divisor_eval(m, f_num, f_den, d))
