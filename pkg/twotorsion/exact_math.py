"""
Exact arithmetic over the rationals: square classes, local symbols and
univariate polynomials with ``Fraction`` coefficients.

Everything in this module is immutable and side-effect free.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import sympy
from sympy.ntheory import factorint
from sympy.polys import polyerrors

try:
    from sympy.functions.combinatorial.numbers import legendre_symbol
except ImportError:  # sympy < 1.13
    from sympy.ntheory import legendre_symbol

from .exceptions import BadPrime, DegenerateModel, NotInvertible, ZeroInput

_LOGGER = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, order=True)
class Place:
    """
    A place of Q. ``prime == 0`` stands for the real place, every other
    value must be a prime number.
    """

    prime: int

    def __post_init__(self) -> None:
        if self.prime != 0 and not sympy.isprime(self.prime):
            raise BadPrime("{} is not a prime".format(self.prime))

    @classmethod
    def real(cls) -> "Place":
        return REAL_PLACE

    @property
    def is_real(self) -> bool:
        return self.prime == 0

    def __str__(self) -> str:
        return "inf" if self.is_real else str(self.prime)


REAL_PLACE = Place(0)


@dataclass(frozen=True)
class SquareClass:
    """
    An element of Q^x / (Q^x)^2, stored as the signed squarefree integer
    ``sign * prod(primes)``.
    """

    sign: int = 1
    primes: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1, got {}".format(self.sign))
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly increasing")

    @classmethod
    def one(cls) -> "SquareClass":
        return cls()

    @classmethod
    def of_integer(cls, n: int) -> "SquareClass":
        if n == 0:
            raise ZeroInput("0 has no square class")
        return cls(sign=1 if n > 0 else -1, primes=_odd_primes(abs(n)))

    @classmethod
    def parse(cls, text: str) -> "SquareClass":
        return cls.of_integer(int(text))

    @property
    def value(self) -> int:
        return self.sign * reduce(lambda acc, p: acc * p, self.primes, 1)

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return sc_mul(self, other)

    def __neg__(self) -> "SquareClass":
        return SquareClass(sign=-self.sign, primes=self.primes)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@lru_cache(maxsize=4096)
def _odd_primes(n: int) -> Tuple[int, ...]:
    return tuple(sorted(p for p, e in factorint(n).items() if e % 2))


def square_class(r: RationalLike) -> SquareClass:
    """The class of ``r`` modulo squares. num/den shares its class with num*den."""
    r = to_rational(r)
    if r == 0:
        raise ZeroInput("0 has no square class")
    return SquareClass.of_integer(r.numerator * r.denominator)


def sc_mul(a: SquareClass, b: SquareClass) -> SquareClass:
    primes = tuple(sorted(set(a.primes).symmetric_difference(b.primes)))
    return SquareClass(sign=a.sign * b.sign, primes=primes)


def sc_product(classes: Iterable[SquareClass]) -> SquareClass:
    return reduce(sc_mul, classes, SquareClass.one())


def real_sign(a: SquareClass) -> int:
    return a.sign


def legendre(a: int, p: int) -> int:
    if p == 2 or p < 2 or not sympy.isprime(p):
        raise BadPrime("{} is not an odd prime".format(p))
    return int(legendre_symbol(a % p, p))


def hilbert_symbol(a: RationalLike, b: RationalLike, v: Place) -> int:
    """
    The Hilbert symbol (a, b)_v. Tame formula with Legendre symbols at odd
    primes, the epsilon/omega formula at 2.
    """
    x = square_class(a).value
    y = square_class(b).value

    if v.is_real:
        return -1 if x < 0 and y < 0 else 1

    p = v.prime
    alpha, u = _split_prime(x, p)
    beta, w = _split_prime(y, p)

    if p == 2:
        exponent = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if exponent % 2 else 1

    rv = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta:
        rv *= legendre(u, p)
    if alpha:
        rv *= legendre(w, p)
    return rv


def _split_prime(n: int, p: int) -> Tuple[int, int]:
    # n is squarefree, so the valuation is 0 or 1
    if n % p == 0:
        return 1, n // p
    return 0, n


def _eps(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


@dataclass(frozen=True)
class Poly:
    """
    Univariate polynomial over Q. Coefficients are stored lowest degree
    first with trailing zeros stripped; the zero polynomial has no
    coefficients and degree -1.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [to_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coefficients: RationalLike) -> "Poly":
        return cls(tuple(to_rational(c) for c in coefficients))

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls((to_rational(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_roots(
        cls, roots: Iterable[RationalLike], lead: RationalLike = 1
    ) -> "Poly":
        rv = cls.constant(lead)
        for r in roots:
            rv = rv * cls((-to_rational(r), Fraction(1)))
        return rv

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def monic(self) -> "Poly":
        if self.is_zero:
            raise DegenerateModel("the zero polynomial has no monic part")
        return self.scale(1 / self.leading)

    def scale(self, c: RationalLike) -> "Poly":
        c = to_rational(c)
        return Poly(tuple(c * a for a in self.coefficients))

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coefficients), len(other.coefficients))
        return Poly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Poly(tuple(out))

    def __pow__(self, n: int) -> "Poly":
        rv = Poly.constant(1)
        for _ in range(n):
            rv = rv * self
        return rv

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    x = to_rational(x)
    rv = Fraction(0)
    for c in reversed(p.coefficients):
        rv = rv * x + c
    return rv


def poly_derivative(p: Poly) -> Poly:
    return Poly(tuple(i * c for i, c in enumerate(p.coefficients) if i > 0))


_X = sympy.Symbol("x")


def _to_sympy(p: Poly) -> sympy.Poly:
    coefficients = [
        sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coefficients)
    ]
    return sympy.Poly(coefficients or [0], _X, domain=sympy.QQ)


def _from_sympy(p: sympy.Poly) -> Poly:
    return Poly(
        tuple(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs()))
    )


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q, r = _to_sympy(a).div(_to_sympy(b))
    return _from_sympy(q), _from_sympy(r)


def poly_mod(a: Poly, m: Poly) -> Poly:
    return poly_divmod(a, m)[1]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero and b.is_zero:
        return a
    return _from_sympy(_to_sympy(a).gcd(_to_sympy(b))).monic()


def poly_xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    if b.is_zero:
        if a.is_zero:
            return Poly(), Poly.constant(1), Poly()
        return a.monic(), Poly.constant(1 / a.leading), Poly()
    s, t, g = _to_sympy(a).gcdex(_to_sympy(b))
    return _from_sympy(g), _from_sympy(s), _from_sympy(t)


def poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    """The inverse of ``a`` in Q[x]/(m), by the extended Euclidean algorithm."""
    reduced = poly_mod(a, m)
    if reduced.is_zero or m.degree < 1:
        raise NotInvertible("polynomial is not invertible modulo {}".format(m))
    try:
        inverse = _to_sympy(reduced).invert(_to_sympy(m))
    except polyerrors.NotInvertible:
        raise NotInvertible("polynomial is not invertible modulo {}".format(m))
    return poly_mod(_from_sympy(inverse), m)


def is_squarefree(p: Poly) -> bool:
    return poly_gcd(p, poly_derivative(p)).degree == 0


def poly_discriminant(p: Poly) -> Fraction:
    if p.degree < 1:
        raise DegenerateModel("discriminant needs degree >= 1")
    d = sympy.Rational(_to_sympy(p).discriminant())
    return Fraction(int(d.p), int(d.q))


def primitive_integer_form(p: Poly) -> List[int]:
    """Integer coefficients (lowest first) of the primitive multiple of ``p``."""
    if p.is_zero:
        raise DegenerateModel("the zero polynomial has no primitive form")
    denominators = [c.denominator for c in p.coefficients]
    lcm = reduce(lambda a, b: a * b // gcd(a, b), denominators, 1)
    ints = [int(c * lcm) for c in p.coefficients]
    content = reduce(gcd, (abs(c) for c in ints), 0)
    return [c // content for c in ints]


def rational_roots(p: Poly) -> List[Fraction]:
    """All rational roots of ``p`` with multiplicity, in increasing order."""
    ints = primitive_integer_form(p)
    roots: List[Fraction] = []

    zeros = 0
    while ints[zeros] == 0:
        zeros += 1
    roots.extend([Fraction(0)] * zeros)
    remaining = Poly(tuple(Fraction(c) for c in ints[zeros:]))

    if remaining.degree >= 1:
        a0 = abs(int(remaining.coefficients[0]))
        an = abs(int(remaining.leading))
        candidates = sorted(
            {
                sign * Fraction(d, e)
                for d in sympy.divisors(a0)
                for e in sympy.divisors(an)
                for sign in (1, -1)
            }
        )
        for r in candidates:
            linear = Poly((-r, Fraction(1)))
            while remaining.degree >= 1 and poly_eval(remaining, r) == 0:
                remaining, _ = poly_divmod(remaining, linear)
                roots.append(r)

    _LOGGER.debug("Rational roots of %s: %s", p, roots)
    return sorted(roots)


def power_sums(p: Poly, count: int) -> List[Fraction]:
    """
    The power sums s_0..s_{count-1} of the roots of ``p`` (over an algebraic
    closure), by Newton's identities.
    """
    m = p.monic()
    n = m.degree
    c = m.coefficients
    sums: List[Fraction] = [Fraction(n)]
    for k in range(1, count):
        total = Fraction(0)
        for i in range(1, min(k, n + 1)):
            total += c[n - i] * sums[k - i]
        if k <= n:
            total += k * c[n - k]
        sums.append(-total)
    return sums


def differences(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> SquareClass:
    """Square class of the product of all ``x - y``, one factor at a time."""
    return sc_product(square_class(x - y) for x in xs for y in ys)
