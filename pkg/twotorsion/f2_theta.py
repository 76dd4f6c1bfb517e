"""
The F_2-symplectic model of the 2-torsion of a real principally polarized
abelian variety of topological type (g, s, a).

Vectors are written ``c = (c_u | c_l)`` in a symplectic basis in which the
real structure acts by ``(c_u, c_l) -> (c_u + H c_l, c_l)``. Theta
characteristics are the quadratic refinements ``q_c`` of the symplectic
form, and ``arf(q_c) = q0(c)``.

Enumerations are vectorised with numpy; every count below is exhaustive.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .exceptions import (
    ComplexSemiOrientation,
    DimensionMismatch,
    InvalidType,
    NotRealTheta,
    OutOfRegime,
    ZeroLowerBlock,
)

_LOGGER = logging.getLogger(__name__)

Bits = Tuple[int, ...]


def _bits(values: Iterable[int]) -> Bits:
    rv = tuple(int(v) for v in values)
    if any(v not in (0, 1) for v in rv):
        raise ValueError("bit vectors may only contain 0 and 1: {}".format(rv))
    return rv


@dataclass(frozen=True)
class F2Vector:
    g: int
    c_u: Bits
    c_l: Bits

    def __post_init__(self) -> None:
        object.__setattr__(self, "c_u", _bits(self.c_u))
        object.__setattr__(self, "c_l", _bits(self.c_l))
        if len(self.c_u) != self.g or len(self.c_l) != self.g:
            raise DimensionMismatch(
                "expected two blocks of length {}, got {} and {}".format(
                    self.g, len(self.c_u), len(self.c_l)
                )
            )

    @classmethod
    def zero(cls, g: int) -> "F2Vector":
        return cls(g, (0,) * g, (0,) * g)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "F2Vector":
        if len(bits) % 2:
            raise DimensionMismatch("a vector needs an even number of bits")
        g = len(bits) // 2
        return cls(g, tuple(bits[:g]), tuple(bits[g:]))

    @property
    def bits(self) -> Bits:
        return self.c_u + self.c_l

    def as_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)

    def __add__(self, other: "F2Vector") -> "F2Vector":
        _same_genus(self, other)
        return F2Vector.from_bits([a ^ b for a, b in zip(self.bits, other.bits)])

    def __str__(self) -> str:
        return "{}|{}".format(
            "".join(str(b) for b in self.c_u), "".join(str(b) for b in self.c_l)
        )


@dataclass(frozen=True)
class RealCurveType:
    """
    Topological type: genus ``g``, ``s + 1`` real components, and ``a = 0``
    exactly when the real locus disconnects the complex locus.
    """

    g: int
    s: int
    a: int

    def __post_init__(self) -> None:
        if self.g < 1:
            raise InvalidType("genus must be positive, got {}".format(self.g))
        if not 0 <= self.s <= self.g:
            raise InvalidType("need 0 <= s <= g, got s={}".format(self.s))
        if self.a not in (0, 1):
            raise InvalidType("a must be 0 or 1, got {}".format(self.a))
        if self.a == 0 and (self.g - self.s) % 2:
            raise InvalidType("a=0 requires g - s even")
        if self.a == 1 and self.s == self.g:
            raise InvalidType("a=1 requires s < g")

    def __str__(self) -> str:
        return "({}, {}, {})".format(self.g, self.s, self.a)


@dataclass(frozen=True)
class GaloisMatrix:
    """The off-diagonal block H of the real structure."""

    rows: Tuple[Bits, ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint8).reshape(len(self.rows), -1)

    @property
    def rank(self) -> int:
        # H is a permutation matrix on its nonzero rows
        return sum(1 for row in self.rows if any(row))


@dataclass(frozen=True)
class OrientationParity:
    """
    ``u1`` is the offset of a semi-orientation from the reference one on the
    components X_1..X_s; ``eps`` is the parity vector on the same components.
    """

    u1: Bits
    eps: Bits

    def __post_init__(self) -> None:
        object.__setattr__(self, "u1", _bits(self.u1))
        object.__setattr__(self, "eps", _bits(self.eps))
        if len(self.u1) != len(self.eps):
            raise DimensionMismatch("u1 and eps must have the same length")

    @classmethod
    def zero(cls, s: int) -> "OrientationParity":
        return cls((0,) * s, (0,) * s)

    @property
    def n(self) -> int:
        """Number of components where the orientation differs and eps is 0."""
        return sum(1 for u, e in zip(self.u1, self.eps) if u == 1 and e == 0)


def valid_types(max_g: int) -> List[RealCurveType]:
    rv = []
    for g in range(1, max_g + 1):
        for s in range(g + 1):
            for a in (0, 1):
                if (a == 0 and (g - s) % 2 == 0) or (a == 1 and s < g):
                    rv.append(RealCurveType(g, s, a))
    return rv


@lru_cache(maxsize=None)
def bit_cube(n: int) -> np.ndarray:
    """All 2^n bit vectors of length n as rows of a read-only uint8 array."""
    idx = np.arange(2 ** n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    rv = ((idx[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
    rv.flags.writeable = False
    return rv


def all_vectors(g: int) -> np.ndarray:
    return bit_cube(2 * g)


def _q0_rows(rows: np.ndarray, g: int) -> np.ndarray:
    return (rows[:, :g] & rows[:, g:]).sum(axis=1) % 2


def _same_genus(v: F2Vector, w: F2Vector) -> None:
    if v.g != w.g:
        raise DimensionMismatch("genus {} does not match genus {}".format(v.g, w.g))


def _check_vector(t: RealCurveType, v: F2Vector) -> None:
    if v.g != t.g:
        raise DimensionMismatch(
            "vector of genus {} used with type {}".format(v.g, t)
        )


def symplectic(v: F2Vector, w: F2Vector) -> int:
    _same_genus(v, w)
    total = sum(a & b for a, b in zip(v.c_u, w.c_l))
    total += sum(a & b for a, b in zip(v.c_l, w.c_u))
    return total % 2


def q0(v: F2Vector) -> int:
    return sum(a & b for a, b in zip(v.c_u, v.c_l)) % 2


def qc(c: F2Vector, v: F2Vector) -> int:
    return (q0(v) + symplectic(c, v)) % 2


def arf(c: F2Vector) -> int:
    return q0(c)


def galois_matrix(t: RealCurveType) -> GaloisMatrix:
    h = np.zeros((t.g, t.g), dtype=np.uint8)
    if t.a == 1:
        for i in range(t.s, t.g):
            h[i, i] = 1
    else:
        for i in range(t.s, t.g, 2):
            h[i, i + 1] = 1
            h[i + 1, i] = 1
    return GaloisMatrix(tuple(tuple(int(b) for b in row) for row in h))


def sigma_apply(t: RealCurveType, v: F2Vector) -> F2Vector:
    _check_vector(t, v)
    h = galois_matrix(t).as_array()
    shifted = (h.astype(np.int64) @ np.array(v.c_l, dtype=np.int64)) % 2
    return F2Vector(
        t.g, tuple((np.array(v.c_u) + shifted) % 2), v.c_l
    )


def theta_shift(t: RealCurveType) -> F2Vector:
    """The vector h with q0(sigma(v)) = q_h(v) for every v."""
    if t.a == 1:
        return F2Vector(t.g, (0,) * t.s + (1,) * (t.g - t.s), (0,) * t.g)
    return F2Vector.zero(t.g)


def _real_point_rows(t: RealCurveType) -> np.ndarray:
    rows = all_vectors(t.g)
    return rows[(rows[:, t.g + t.s:] == 0).all(axis=1)]


def _to_vectors(g: int, rows: np.ndarray) -> List[F2Vector]:
    return [F2Vector(g, tuple(row[:g]), tuple(row[g:])) for row in rows.tolist()]


def real_points(t: RealCurveType) -> List[F2Vector]:
    """The fixed vectors of the real structure: c_l vanishes past index s."""
    return _to_vectors(t.g, _real_point_rows(t))


def identity_component_points(t: RealCurveType) -> List[F2Vector]:
    rows = all_vectors(t.g)
    return _to_vectors(t.g, rows[(rows[:, t.g:] == 0).all(axis=1)])


def signed_count(t: RealCurveType) -> int:
    rows = _real_point_rows(t)
    q = _q0_rows(rows, t.g)
    rv = int((1 - 2 * q.astype(np.int64)).sum())
    _LOGGER.debug("Signed count for type %s over %d points: %d", t, len(rows), rv)
    return rv


def is_real_theta(t: RealCurveType, c: F2Vector) -> bool:
    _check_vector(t, c)
    return all(b == t.a for b in c.c_l[t.s:])


def real_thetas(t: RealCurveType) -> List[F2Vector]:
    rows = all_vectors(t.g)
    return _to_vectors(t.g, rows[(rows[:, t.g + t.s:] == t.a).all(axis=1)])


def _reference_parity(t: RealCurveType) -> Bits:
    # for a=0 the reference theta characteristic has parity (1, ..., 1)
    return (1,) * t.s if t.a == 0 else (0,) * t.s


def theta_block(t: RealCurveType, op: OrientationParity) -> Tuple[Bits, Bits]:
    """The first-s blocks (c_u, c_l) of the real thetas with data ``op``."""
    tau = _reference_parity(t)
    return op.u1, tuple(e ^ r for e, r in zip(op.eps, tau))


def theta_counts(t: RealCurveType, op: OrientationParity) -> Tuple[int, int]:
    """
    Count even and odd real theta characteristics inducing the
    semi-orientation ``op.u1`` with parity vector ``op.eps``.
    """
    if len(op.u1) != t.s:
        raise DimensionMismatch(
            "orientation data has length {}, type {} needs {}".format(
                len(op.u1), t, t.s
            )
        )
    head_u, head_l = theta_block(t, op)
    free = t.g - t.s
    tails = bit_cube(free)
    count = len(tails)
    c_u = np.hstack([np.tile(np.array(head_u, dtype=np.uint8), (count, 1)), tails])
    c_l = np.tile(
        np.array(head_l + (t.a,) * free, dtype=np.uint8), (count, 1)
    )
    arfs = (c_u & c_l).sum(axis=1) % 2
    odd = int(arfs.sum())
    return count - odd, odd


def theta_counts_closed_form(
    t: RealCurveType, op: OrientationParity
) -> Tuple[int, int]:
    if t.a == 1:
        half = 2 ** (t.g - t.s - 1)
        return half, half
    total = 2 ** (t.g - t.s)
    return (0, total) if op.n % 2 else (total, 0)


def odd_theta_signed_sum(t: RealCurveType, nu: F2Vector) -> int:
    """
    Sum of (-1)^q0(b) over real 2-torsion points b for which the theta
    characteristic nu - b is odd.
    """
    if not is_real_theta(t, nu):
        raise NotRealTheta("{} is not a real theta characteristic".format(nu))
    if t.a == 0 and not any(nu.c_u[: t.s]):
        raise ComplexSemiOrientation(
            "{} induces the complex semi-orientation".format(nu)
        )
    points = _real_point_rows(t)
    shifted = points ^ nu.as_array()
    odd = _q0_rows(shifted, t.g) == 1
    signs = 1 - 2 * _q0_rows(points, t.g).astype(np.int64)
    return int(signs[odd].sum())


def lagrangian_odd_count(t: RealCurveType, c: F2Vector) -> int:
    _check_vector(t, c)
    if not any(c.c_l):
        raise ZeroLowerBlock("c_l must be nonzero")
    rows = all_vectors(t.g)
    lagrangian = rows[(rows[:, t.g:] == 0).all(axis=1)]
    return int(_q0_rows(lagrangian ^ c.as_array(), t.g).sum())


def arf_census(g: int) -> int:
    """Number of odd theta characteristics over C."""
    return int(_q0_rows(all_vectors(g), g).sum())


def totally_real_lower_bound(t: RealCurveType) -> int:
    if t.g > t.s + t.a + 1:
        raise OutOfRegime(
            "bound holds only for g <= s + a + 1, type {}".format(t)
        )
    return comb(t.s + 1, t.g - 1) * 2 ** (t.g - 1)


def totally_real_census(t: RealCurveType) -> int:
    """
    On an M-curve, count the odd real theta characteristics of odd degree on
    exactly g - 1 of the g + 1 real components. Parity on X_0 is fixed by
    the total degree g - 1.
    """
    if t.a != 0 or t.s != t.g:
        raise OutOfRegime("census needs an M-curve, got type {}".format(t))
    rows = all_vectors(t.g)
    odd = _q0_rows(rows, t.g) == 1
    # absolute parity on X_1..X_g is c_l + (1, ..., 1)
    eps = 1 - rows[:, t.g:].astype(np.int64)
    weight = eps.sum(axis=1)
    par0 = (t.g - 1 - weight) % 2
    selected = odd & (weight + par0 == t.g - 1)
    return int(selected.sum())
