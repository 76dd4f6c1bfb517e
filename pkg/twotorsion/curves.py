"""
Square-class pairings on the 2-torsion of elliptic curves and of split
even-degree hyperelliptic Jacobians over Q.

For ``y^2 = u * prod(x - z_i)`` with rational roots z_0 < ... < z_{2g+1},
a 2-torsion point is the class of an even subset S of root indices modulo
complement. Writing ``a_S`` for that class:

* ``e2(a_S, a_T) = (-1)^{|S n T|}``
* ``q2(a_S)`` is the class of ``prod(z - w)`` over ``z`` in S, ``w`` not in S
* ``b2(a_S, a_T)`` is computed from x-only representatives when
  ``|S n T|`` is even; its real sign is always available from the
  topology of the real locus.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .exact_math import (
    Poly,
    RationalLike,
    SquareClass,
    differences,
    poly_derivative,
    poly_discriminant,
    poly_eval,
    rational_roots,
    real_sign,
    sc_mul,
    sc_product,
    square_class,
    to_rational,
)
from .exceptions import (
    DegenerateModel,
    EqualRoots,
    InvalidType,
    IrrationalRealRoot,
    ModelMismatch,
    NotARoot,
    NotSquarefree,
    OddIntersection,
    RepeatedRoots,
)
from .gw_forms import GWElement, gw_sum, trace_form_weighted

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class EllipticModel:
    """``y^2 = p(x)`` with ``p`` a squarefree cubic of leading coefficient ``u``."""

    p: Poly

    def __post_init__(self) -> None:
        if self.p.degree != 3:
            raise DegenerateModel(
                "an elliptic model needs a cubic, got degree {}".format(self.p.degree)
            )
        if poly_discriminant(self.p) == 0:
            raise NotSquarefree("{} has a repeated root".format(self.p))

    @property
    def u(self) -> Fraction:
        return self.p.leading

    @property
    def monic(self) -> Poly:
        return self.p.monic()

    def rational_roots(self) -> List[Fraction]:
        return rational_roots(self.p)

    def real_root_count(self) -> int:
        return 3 if poly_discriminant(self.p) > 0 else 1


def _require_root(m: EllipticModel, z: Fraction) -> None:
    if poly_eval(m.p, z) != 0:
        raise NotARoot("{} is not a root of {}".format(z, m.p))


def elliptic_q2(m: EllipticModel, z: RationalLike) -> SquareClass:
    z = to_rational(z)
    _require_root(m, z)
    return square_class(poly_eval(poly_derivative(m.p), z) / m.u)


def elliptic_b2_offdiag(
    m: EllipticModel, z_i: RationalLike, z_j: RationalLike
) -> SquareClass:
    """
    b2 between the 2-torsion points over roots z_i != z_j. The value comes
    from a representative of P_j - O cut out by a rational line through P_j
    and does not depend on the slope.
    """
    z_i, z_j = to_rational(z_i), to_rational(z_j)
    _require_root(m, z_i)
    _require_root(m, z_j)
    if z_i == z_j:
        raise EqualRoots("off-diagonal pairing needs distinct roots")
    return square_class(m.u * (z_i - z_j))


def elliptic_b2_matrix(
    m: EllipticModel, basis: Sequence[RationalLike]
) -> List[List[SquareClass]]:
    return [
        [
            elliptic_q2(m, zi) if i == j else elliptic_b2_offdiag(m, zi, zj)
            for j, zj in enumerate(basis)
        ]
        for i, zi in enumerate(basis)
    ]


def elliptic_e2_matrix(
    m: EllipticModel, basis: Sequence[RationalLike]
) -> List[List[int]]:
    for z in basis:
        _require_root(m, to_rational(z))
    return [
        [1 if to_rational(zi) == to_rational(zj) else -1 for zj in basis]
        for zi in basis
    ]


def elliptic_signed_count(m: EllipticModel) -> int:
    roots = sorted(set(m.rational_roots()))
    if len(roots) < m.real_root_count():
        raise IrrationalRealRoot("{} has an irrational real root".format(m.p))
    rv = 1 + sum(real_sign(elliptic_q2(m, z)) for z in roots)
    _LOGGER.debug("Elliptic signed count for %s: %d", m.p, rv)
    return rv


def conjecture_lhs_elliptic(m: EllipticModel) -> GWElement:
    """<1> at the origin plus the trace form of the Weierstrass normal form."""
    return gw_sum(GWElement.of(1), trace_form_weighted(m.monic))


@dataclass(frozen=True)
class HyperellipticModel:
    """``y^2 = u * prod(x - z_i)`` with 2g + 2 distinct rational roots."""

    u: Fraction
    roots: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        u = to_rational(self.u)
        roots = tuple(sorted(to_rational(z) for z in self.roots))
        if u == 0:
            raise DegenerateModel("leading coefficient must be nonzero")
        if len(set(roots)) != len(roots):
            raise RepeatedRoots("roots must be distinct: {}".format(roots))
        if len(roots) < 4 or len(roots) % 2:
            raise DegenerateModel(
                "need an even number of at least 4 roots, got {}".format(len(roots))
            )
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "roots", roots)

    @classmethod
    def of(
        cls, roots: Iterable[RationalLike], u: RationalLike = 1
    ) -> "HyperellipticModel":
        return cls(to_rational(u), tuple(to_rational(z) for z in roots))

    @classmethod
    def from_poly(cls, p: Poly) -> "HyperellipticModel":
        if p.degree < 4 or p.degree % 2:
            raise DegenerateModel(
                "need an even degree of at least 4, got {}".format(p.degree)
            )
        roots = rational_roots(p)
        if len(roots) != p.degree:
            raise DegenerateModel("{} does not split over Q".format(p))
        if len(set(roots)) != len(roots):
            raise RepeatedRoots("{} has a repeated root".format(p))
        return cls(p.leading, tuple(roots))

    @property
    def g(self) -> int:
        return len(self.roots) // 2 - 1

    @property
    def n(self) -> int:
        return len(self.roots)

    @property
    def poly(self) -> Poly:
        return Poly.from_roots(self.roots, self.u)


def _canonical(n: int, indices: Iterable[int]) -> Tuple[int, ...]:
    subset = tuple(sorted(set(indices)))
    complement = tuple(i for i in range(n) if i not in subset)
    return min(subset, complement, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class TwoTorsionClass:
    """
    The class of an even subset of root indices modulo complement. The
    stored subset is the representative that is smaller by
    (cardinality, indices).
    """

    model: HyperellipticModel = field(repr=False)
    subset: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        indices = tuple(self.subset)
        if any(not 0 <= i < self.model.n for i in indices):
            raise InvalidType("root index out of range in {}".format(indices))
        if len(set(indices)) != len(indices):
            raise InvalidType("repeated root index in {}".format(indices))
        if len(indices) % 2:
            raise InvalidType("{} has odd cardinality".format(indices))
        object.__setattr__(self, "subset", _canonical(self.model.n, indices))

    @property
    def complement(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.model.n) if i not in self.subset)

    @property
    def is_identity(self) -> bool:
        return not self.subset

    @property
    def label(self) -> str:
        if not self.subset:
            return "0"
        sep = "" if self.model.n <= 10 else ","
        return "a" + sep.join(str(i) for i in self.subset)

    def __add__(self, other: "TwoTorsionClass") -> "TwoTorsionClass":
        _same_model(self, other)
        return TwoTorsionClass(
            self.model, tuple(set(self.subset).symmetric_difference(other.subset))
        )

    def __str__(self) -> str:
        return self.label


def _same_model(s: TwoTorsionClass, t: TwoTorsionClass) -> None:
    if s.model != t.model:
        raise ModelMismatch("2-torsion classes belong to different models")


def _check_model(m: HyperellipticModel, s: TwoTorsionClass) -> None:
    if s.model != m:
        raise ModelMismatch("{} does not belong to this model".format(s))


def h_classes(m: HyperellipticModel) -> List[TwoTorsionClass]:
    """All 2^{2g} classes: identity first, then by cardinality and indices."""
    rv = []
    for size in range(0, m.n // 2 + 1, 2):
        for subset in combinations(range(m.n), size):
            if _canonical(m.n, subset) == subset:
                rv.append(TwoTorsionClass(m, subset))
    _LOGGER.debug("Enumerated %d classes for genus %d", len(rv), m.g)
    return rv


def e2(s: TwoTorsionClass, t: TwoTorsionClass) -> int:
    _same_model(s, t)
    return -1 if len(set(s.subset) & set(t.subset)) % 2 else 1


def _values(m: HyperellipticModel, indices: Iterable[int]) -> List[Fraction]:
    return [m.roots[i] for i in indices]


def q2(m: HyperellipticModel, s: TwoTorsionClass) -> SquareClass:
    _check_model(m, s)
    return differences(_values(m, s.subset), _values(m, s.complement))


def b2(m: HyperellipticModel, s: TwoTorsionClass, t: TwoTorsionClass) -> SquareClass:
    """
    Split T into pairs lying wholly inside or wholly outside S. A pair
    outside contributes prod(z - w) over z in S, w in the pair; a pair
    inside contributes q2(pair) * prod(z - w) over z in S minus the pair.
    """
    _check_model(m, s)
    _check_model(m, t)
    inside = [i for i in t.subset if i in s.subset]
    outside = [i for i in t.subset if i not in s.subset]
    if len(inside) % 2:
        raise OddIntersection(
            "b2({}, {}) needs an even intersection".format(s.label, t.label)
        )

    rv = SquareClass.one()
    for k in range(0, len(outside), 2):
        pair = outside[k:k + 2]
        rv = sc_mul(rv, differences(_values(m, s.subset), _values(m, pair)))
    for k in range(0, len(inside), 2):
        pair = inside[k:k + 2]
        rest = [i for i in s.subset if i not in pair]
        rv = sc_mul(rv, q2(m, TwoTorsionClass(m, tuple(pair))))
        rv = sc_mul(rv, differences(_values(m, rest), _values(m, pair)))
    return rv


def q2_of_sum(m: HyperellipticModel, classes: Sequence[TwoTorsionClass]) -> SquareClass:
    """q2 of a sum through the refinement identity, without summing first."""
    sign = 1
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            sign *= e2(classes[i], classes[j])
    rv = sc_product(q2(m, c) for c in classes)
    return rv if sign == 1 else -rv


@dataclass(frozen=True)
class Interval:
    """A closed x-interval; ``None`` marks an unbounded end."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]

    def __str__(self) -> str:
        lo = "(-inf" if self.lo is None else "[{}".format(self.lo)
        hi = "inf)" if self.hi is None else "{}]".format(self.hi)
        return "{}, {}".format(lo, hi)


@dataclass(frozen=True)
class Component:
    intervals: Tuple[Interval, ...]
    roots: Tuple[int, ...]
    samples: Tuple[Fraction, ...]


@dataclass(frozen=True)
class ComponentDecomposition:
    """Real components of the curve; index 0 is X_0."""

    components: Tuple[Component, ...]

    @property
    def s(self) -> int:
        return len(self.components) - 1

    def component_of(self, root: int) -> int:
        return next(i for i, c in enumerate(self.components) if root in c.roots)


def components(m: HyperellipticModel) -> ComponentDecomposition:
    """
    The intervals where u * prod(x - z_i) >= 0. For u > 0 the two unbounded
    rays meet at infinity and form X_0; for u < 0, X_0 is the oval holding
    the smallest root.
    """
    z = m.roots
    last = m.n - 1
    ovals = []
    if m.u > 0:
        x0 = Component(
            (Interval(None, z[0]), Interval(z[last], None)),
            (0, last),
            (z[0] - 1, z[last] + 1),
        )
        starts = range(1, last, 2)
    else:
        x0 = Component((Interval(z[0], z[1]),), (0, 1), ((z[0] + z[1]) / 2,))
        starts = range(2, last, 2)
    for i in starts:
        ovals.append(
            Component((Interval(z[i], z[i + 1]),), (i, i + 1), ((z[i] + z[i + 1]) / 2,))
        )
    return ComponentDecomposition((x0,) + tuple(ovals))


def par_vec(m: HyperellipticModel, s: TwoTorsionClass) -> Tuple[int, ...]:
    """Parity of the number of roots of S on each of X_1, ..., X_s."""
    _check_model(m, s)
    decomposition = components(m)
    return tuple(
        sum(1 for i in c.roots if i in s.subset) % 2
        for c in decomposition.components[1:]
    )


def sg_vec(m: HyperellipticModel, s: TwoTorsionClass) -> Tuple[int, ...]:
    """
    Sign of f_S = prod_{z in S} (x - z), normalised to be nonnegative on
    X_0, on each of X_1, ..., X_s (0 positive, 1 negative).
    """
    _check_model(m, s)
    decomposition = components(m)
    f = Poly.from_roots(_values(m, s.subset))
    normaliser = 1 if poly_eval(f, decomposition.components[0].samples[0]) > 0 else -1
    return tuple(
        0 if normaliser * poly_eval(f, c.samples[0]) > 0 else 1
        for c in decomposition.components[1:]
    )


def b2_real_sign(m: HyperellipticModel, s: TwoTorsionClass, t: TwoTorsionClass) -> int:
    exponent = sum(p * q for p, q in zip(par_vec(m, s), sg_vec(m, t)))
    return -1 if exponent % 2 else 1


def identity_component_classes(m: HyperellipticModel) -> List[TwoTorsionClass]:
    """Classes with even parity on every X_i, i >= 1."""
    return [c for c in h_classes(m) if not any(par_vec(m, c))]


def signed_count(m: HyperellipticModel) -> int:
    rv = sum(real_sign(q2(m, c)) for c in h_classes(m))
    _LOGGER.debug("Signed count for genus %d model: %d", m.g, rv)
    return rv


def kummer_node_signs(m: HyperellipticModel) -> Tuple[int, int]:
    signs = [real_sign(q2(m, c)) for c in h_classes(m)]
    return signs.count(1), signs.count(-1)


def q2_product(m: HyperellipticModel) -> SquareClass:
    return sc_product(q2(m, c) for c in h_classes(m))


def conjecture_lhs_split(m: HyperellipticModel) -> GWElement:
    return GWElement(tuple(q2(m, c) for c in h_classes(m)))
