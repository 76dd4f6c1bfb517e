"""
Parsing of polynomial, rational and list arguments.

Polynomial grammar (whitespace is insignificant)::

    poly     := ["-"] term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := base ("^" uint)?
    base     := rational | "x" | "(" poly ")"
    rational := ["-"] uint ("/" uint)?

Multiplication is always explicit: ``3(x+1)`` and ``3x`` are rejected.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, NoReturn, Optional, Tuple

import click

from ..exact_math import Poly
from ..exceptions import ParseError

_LOGGER = logging.getLogger(__name__)

END = "end of input"
UINT = "unsigned integer"
MAX_DEPTH = 100


class Cursor:
    def __init__(self, text: str):
        self._text = text
        self._position = 0
        self.depth = 0

    @property
    def offset(self) -> int:
        """Byte offset of the current position in the UTF-8 source."""
        return len(self._text[: self._position].encode("utf-8"))

    def skip_whitespace(self) -> None:
        text = self._text
        while self._position < len(text) and text[self._position].isspace():
            self._position += 1

    def peek(self) -> Optional[str]:
        self.skip_whitespace()
        if self._position >= len(self._text):
            return None
        return self._text[self._position]

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self._position += 1
            return True
        return False

    def take_uint(self) -> int:
        self.skip_whitespace()
        start = self._position
        text = self._text
        while self._position < len(text) and text[self._position].isdigit():
            self._position += 1
        if start == self._position:
            self.fail([UINT])
        return int(self._text[start : self._position])

    def is_consumed(self) -> bool:
        return self.peek() is None

    def expect_end(self, expected: Iterable[str]) -> None:
        if not self.is_consumed():
            self.fail(list(expected) + [END])

    def fail(self, expected: Iterable[str]) -> NoReturn:
        self.skip_whitespace()
        raise ParseError(self._text, self.offset, expected)


def _rational(cursor: Cursor) -> Fraction:
    negative = cursor.take("-")
    if negative and not (cursor.peek() or "").isdigit():
        cursor.fail([UINT])
    numerator = cursor.take_uint()
    denominator = 1
    if cursor.take("/"):
        denominator = cursor.take_uint()
        if denominator == 0:
            cursor.fail(["nonzero " + UINT])
    value = Fraction(numerator, denominator)
    return -value if negative else value


def _base(cursor: Cursor) -> Poly:
    char = cursor.peek()
    if char == "x":
        cursor.take("x")
        return Poly.x()
    if char == "(":
        if cursor.depth >= MAX_DEPTH:
            cursor.fail(["at most {} nested parentheses".format(MAX_DEPTH)])
        cursor.take("(")
        cursor.depth += 1
        inner = _poly(cursor)
        cursor.depth -= 1
        if not cursor.take(")"):
            cursor.fail([")", "+", "-", "*", "^"])
        return inner
    if char is not None and (char.isdigit() or char == "-"):
        return Poly.constant(_rational(cursor))
    cursor.fail(["x", "(", UINT, "-"])


def _factor(cursor: Cursor) -> Poly:
    base = _base(cursor)
    if cursor.take("^"):
        return base ** cursor.take_uint()
    return base


def _term(cursor: Cursor) -> Poly:
    rv = _factor(cursor)
    while cursor.take("*"):
        rv = rv * _factor(cursor)
    return rv


def _poly(cursor: Cursor) -> Poly:
    negate = False
    char = cursor.peek()
    if char == "-":
        cursor.take("-")
        negate = True
    rv = _term(cursor)
    if negate:
        rv = -rv
    while True:
        if cursor.take("+"):
            rv = rv + _term(cursor)
        elif cursor.take("-"):
            rv = rv - _term(cursor)
        else:
            return rv


def parse_poly(text: str) -> Poly:
    cursor = Cursor(text)
    rv = _poly(cursor)
    cursor.expect_end(["+", "-", "*", "^"])
    _LOGGER.debug("Parsed '%s' as %s", text, rv)
    return rv


def parse_rational(text: str) -> Fraction:
    cursor = Cursor(text)
    rv = _rational(cursor)
    cursor.expect_end(["/"])
    return rv


def parse_rational_list(text: str) -> List[Fraction]:
    cursor = Cursor(text)
    rv = [_rational(cursor)]
    while cursor.take(","):
        rv.append(_rational(cursor))
    cursor.expect_end([","])
    return rv


def parse_uint_list(text: str, bits: bool = False) -> Tuple[int, ...]:
    cursor = Cursor(text)
    if cursor.is_consumed():
        return ()
    rv = []
    while True:
        if bits:
            char = cursor.peek()
            if char not in ("0", "1"):
                cursor.fail(["0", "1"])
            cursor.take(char)
            rv.append(int(char))
        else:
            rv.append(cursor.take_uint())
        if not cursor.take(","):
            break
    cursor.expect_end([","])
    return tuple(rv)


def render_poly(p: Poly) -> str:
    """Render highest degree first in a form ``parse_poly`` accepts."""
    if p.is_zero:
        return "0"
    out = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        if not out:
            sign = "-" if c < 0 else ""
        else:
            sign = " - " if c < 0 else " + "
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "x" if k == 1 else "x^{}".format(k)
            body = power if magnitude == 1 else "{}*{}".format(magnitude, power)
        out.append(sign + body)
    return "".join(out)


class _ParsedType(click.ParamType):
    def parse(self, value: str) -> object:
        raise NotImplementedError

    def convert(self, value, param, ctx):  # type: ignore
        if not isinstance(value, str):
            return value
        try:
            return self.parse(value)
        except ParseError as e:
            self.fail(str(e), param, ctx)


class PolyType(_ParsedType):
    name = "poly"

    def parse(self, value: str) -> Poly:
        return parse_poly(value)


class RationalType(_ParsedType):
    name = "rational"

    def parse(self, value: str) -> Fraction:
        return parse_rational(value)


class RationalListType(_ParsedType):
    name = "rationals"

    def parse(self, value: str) -> List[Fraction]:
        return parse_rational_list(value)


class UIntListType(_ParsedType):
    name = "indices"

    def __init__(self, bits: bool = False):
        self.bits = bits
        if bits:
            self.name = "bits"

    def parse(self, value: str) -> Tuple[int, ...]:
        return parse_uint_list(value, bits=self.bits)


POLY = PolyType()
RATIONAL = RationalType()
RATIONALS = RationalListType()
INDICES = UIntListType()
BITS = UIntListType(bits=True)
