"""
Quadratic forms over Q, viewed as elements of the Grothendieck-Witt group.

Forms are kept diagonal. Two forms are compared through rank, signature,
discriminant and Hasse invariants, which together classify forms over Q.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Set, Tuple

from .exact_math import (
    REAL_PLACE,
    Place,
    Poly,
    RationalLike,
    SquareClass,
    hilbert_symbol,
    is_squarefree,
    poly_gcd,
    poly_derivative,
    poly_inverse_mod,
    poly_mod,
    power_sums,
    real_sign,
    sc_product,
    square_class,
    to_rational,
)
from .exceptions import (
    DimensionMismatch,
    NotInvertible,
    NotSquarefree,
    OutOfRegime,
    SingularGram,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GWElement:
    """The diagonal form <a1, ..., an>. The empty form is the zero element."""

    entries: Tuple[SquareClass, ...] = ()

    @classmethod
    def of(cls, *values: RationalLike) -> "GWElement":
        return cls(tuple(square_class(v) for v in values))

    @classmethod
    def multiple(cls, count: int, value: RationalLike) -> "GWElement":
        return cls((square_class(value),) * count)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __add__(self, other: "GWElement") -> "GWElement":
        return gw_sum(self, other)

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        counts = Counter(a.value for a in self.entries)
        # <1> and <-1> lead, the rest follow in increasing order
        order = sorted(
            counts, key=lambda v: (v not in (1, -1), -v if v in (1, -1) else v)
        )
        terms = []
        for value in order:
            k = counts[value]
            if k == 1:
                terms.append("<{}>".format(value))
            else:
                terms.append("{}*<{}>".format(k, value))
        return " + ".join(terms)


@dataclass(frozen=True)
class GramMatrix:
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(to_rational(c) for c in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise DimensionMismatch("a Gram matrix needs at least one row")
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise DimensionMismatch("Gram matrix must be symmetric")

    @classmethod
    def of(cls, rows: Iterable[Iterable[RationalLike]]) -> "GramMatrix":
        return cls(tuple(tuple(to_rational(c) for c in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.rows)


class PivotStrategy(Enum):
    FIRST = "first"
    LAST = "last"


@dataclass(frozen=True)
class FormInvariants:
    """
    Complete isometry invariants of a form over Q. ``hasse_support`` lists
    the places where the Hasse invariant is -1, in increasing order; the
    invariant is +1 everywhere else.
    """

    rank: int
    signature: int
    discriminant: SquareClass
    hasse_support: Tuple[Place, ...]

    def hasse(self, v: Place) -> int:
        return -1 if v in self.hasse_support else 1

    @property
    def hasse_map(self) -> Dict[Place, int]:
        return {v: -1 for v in self.hasse_support}


def diagonalize(
    gram: GramMatrix, strategy: PivotStrategy = PivotStrategy.FIRST
) -> GWElement:
    """
    Diagonalize ``gram`` by symmetric congruence. When every remaining
    diagonal entry vanishes, a basis vector e_i is replaced by e_i + e_j for
    an off-diagonal entry m_ij != 0, producing the pivot 2*m_ij.
    """
    m: List[List[Fraction]] = [list(row) for row in gram.rows]
    active = list(range(gram.size))
    if strategy is PivotStrategy.LAST:
        active.reverse()
    entries: List[SquareClass] = []

    while active:
        pivot = next((i for i in active if m[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and m[i][j] != 0),
                None,
            )
            if pair is None:
                raise SingularGram("Gram matrix is singular")
            i, j = pair
            _LOGGER.debug("Zero diagonal, combining basis vectors %d and %d", i, j)
            for k in active:
                if k != i:
                    m[i][k] += m[j][k]
                    m[k][i] = m[i][k]
            m[i][i] = 2 * m[i][j]
            pivot = i

        d = m[pivot][pivot]
        active.remove(pivot)
        for k in active:
            factor = m[k][pivot] / d
            if factor == 0:
                continue
            for l in active:
                m[k][l] -= factor * m[pivot][l]
        entries.append(square_class(d))

    _LOGGER.debug("Diagonalized %dx%d Gram matrix", gram.size, gram.size)
    return GWElement(tuple(entries))


def relevant_places(e: GWElement) -> List[Place]:
    """The real place, 2 and every prime dividing an entry of ``e``."""
    primes: Set[int] = {2}
    for a in e.entries:
        primes.update(a.primes)
    return [REAL_PLACE] + [Place(p) for p in sorted(primes)]


def invariants(e: GWElement) -> FormInvariants:
    signature = sum(real_sign(a) for a in e.entries)
    discriminant = sc_product(e.entries)
    support = []
    values = [a.value for a in e.entries]
    for v in relevant_places(e):
        c = 1
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                c *= hilbert_symbol(values[i], values[j], v)
        if c == -1:
            support.append(v)
    return FormInvariants(
        rank=e.rank,
        signature=signature,
        discriminant=discriminant,
        hasse_support=tuple(support),
    )


def is_isometric(e1: GWElement, e2: GWElement) -> bool:
    return invariants(e1) == invariants(e2)


def gw_sum(e1: GWElement, e2: GWElement) -> GWElement:
    return GWElement(e1.entries + e2.entries)


def trace_gram(q: Poly, alpha: Poly) -> GramMatrix:
    """
    Gram matrix of (f, g) -> tr(alpha*f*g) on Q[x]/(q) in the power basis.
    Traces of powers of x are the power sums of the roots of q.
    """
    n = q.degree
    alpha = poly_mod(alpha, q)
    sums = power_sums(q, 3 * n)
    return GramMatrix(
        tuple(
            tuple(
                sum(
                    (c * sums[i + j + k] for k, c in enumerate(alpha.coefficients)),
                    Fraction(0),
                )
                for j in range(n)
            )
            for i in range(n)
        )
    )


def _require_squarefree(p: Poly) -> None:
    if p.degree < 1 or not is_squarefree(p):
        raise NotSquarefree("{} is not squarefree of positive degree".format(p))


def trace_form_weighted(p: Poly) -> GWElement:
    """The form f -> tr(f^2 / p') on Q[x]/(p)."""
    _require_squarefree(p)
    w = poly_inverse_mod(poly_derivative(p), p)
    return diagonalize(trace_gram(p, w))


def scaled_trace_transfer(q: Poly, alpha: Poly) -> GWElement:
    """The transfer of <alpha> along Q[x]/(q) -> Q."""
    _require_squarefree(q)
    reduced = poly_mod(alpha, q)
    if reduced.is_zero or poly_gcd(reduced, q).degree != 0:
        raise NotInvertible("{} is not invertible modulo {}".format(alpha, q))
    return diagonalize(trace_gram(q, reduced))


def conjecture_rhs(g: int) -> GWElement:
    if g < 1:
        raise OutOfRegime("genus must be positive, got {}".format(g))
    half = 2 ** (g - 1)
    return GWElement.multiple(half * (2 ** g + 1), 1) + GWElement.multiple(
        half * (2 ** g - 1), -1
    )

