"""Exact signed rational arithmetic.

Every value is kept in lowest terms with a positive denominator, so two
equal rationals always have identical numerator/denominator pairs. Integers
are arbitrary precision; no floating point is used anywhere here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

__all__ = [
    "RationalError",
    "ZeroDenominatorError",
    "DivisionByZeroError",
    "Rational",
    "MixedNumber",
    "gcd",
    "normalize",
    "to_mixed",
    "from_mixed",
    "mod_circle",
    "rule_of_three",
    "to_decimal_string",
    "parse_rational",
    "parse_mixed",
    "DEFAULT_MAX_PLACES",
]

DEFAULT_MAX_PLACES = 50


class RationalError(ArithmeticError):
    """Base class for errors raised by rational arithmetic."""


class ZeroDenominatorError(RationalError, ValueError):
    """A fraction was constructed with denominator zero."""


class DivisionByZeroError(RationalError, ZeroDivisionError):
    """A rational was divided by the zero rational."""


def gcd(a: int, b: int) -> int:
    """Greatest common divisor by Euclid's algorithm, always nonnegative."""
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


IntoRational = Union["Rational", int]


class Rational:
    """Immutable exact fraction ``numerator/denominator`` in lowest terms.

    >>> Rational(1809, 124) + Rational(1809, 124)
    Rational(1809, 62)
    >>> Rational(-3, -6)
    Rational(1, 2)
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: int, denominator: int = 1) -> None:
        if isinstance(numerator, bool) or not isinstance(numerator, int):
            raise TypeError(f"numerator must be an int, got {numerator!r}")
        if isinstance(denominator, bool) or not isinstance(denominator, int):
            raise TypeError(f"denominator must be an int, got {denominator!r}")
        if denominator == 0:
            raise ZeroDenominatorError(f"zero denominator in {numerator}/0")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        g = gcd(numerator, denominator)
        object.__setattr__(self, "_num", numerator // g)
        object.__setattr__(self, "_den", denominator // g)

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    @classmethod
    def _raw(cls, numerator: int, denominator: int) -> Rational:
        # caller guarantees lowest terms and denominator > 0
        obj = object.__new__(cls)
        object.__setattr__(obj, "_num", numerator)
        object.__setattr__(obj, "_den", denominator)
        return obj

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @staticmethod
    def coerce(value: IntoRational) -> Rational:
        if isinstance(value, Rational):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Rational._raw(value, 1)
        raise TypeError(f"cannot convert {value!r} to Rational")

    # arithmetic

    def __add__(self, other: IntoRational) -> Rational:
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return Rational(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __sub__(self, other: IntoRational) -> Rational:
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return Rational(self._num * o._den - o._num * self._den, self._den * o._den)

    def __rsub__(self, other: IntoRational) -> Rational:
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: IntoRational) -> Rational:
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return Rational(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other: IntoRational) -> Rational:
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        if o._num == 0:
            raise DivisionByZeroError(f"division of {self} by zero")
        return Rational(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other: IntoRational) -> Rational:
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self) -> Rational:
        return Rational._raw(-self._num, self._den)

    def __pos__(self) -> Rational:
        return self

    def __abs__(self) -> Rational:
        return Rational._raw(abs(self._num), self._den)

    def __floor__(self) -> int:
        return self._num // self._den

    def floor(self) -> int:
        return self._num // self._den

    def is_integer(self) -> bool:
        return self._den == 1

    # comparison

    def _cmp_key(self, other: IntoRational) -> tuple[int, int]:
        o = Rational.coerce(other)
        return self._num * o._den, o._num * self._den

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            return self._num == other._num and self._den == other._den
        if isinstance(other, int) and not isinstance(other, bool):
            return self._den == 1 and self._num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __lt__(self, other: IntoRational) -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other: IntoRational) -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other: IntoRational) -> bool:
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other: IntoRational) -> bool:
        a, b = self._cmp_key(other)
        return a >= b

    def __bool__(self) -> bool:
        return self._num != 0

    def __repr__(self) -> str:
        return f"Rational({self._num}, {self._den})"

    def __str__(self) -> str:
        """Canonical ``n/d`` text; integers keep the ``/1``."""
        return f"{self._num}/{self._den}"

    def __reduce__(self):
        return (Rational, (self._num, self._den))


ZERO = Rational._raw(0, 1)
ONE = Rational._raw(1, 1)


def normalize(numerator: int, denominator: int) -> Rational:
    """Reduce ``numerator/denominator`` to lowest terms, sign on the numerator."""
    return Rational(numerator, denominator)


@dataclass(frozen=True)
class MixedNumber:
    """A whole part plus a proper fraction; ``sign`` applies to the whole value.

    So ``-7/2`` is ``MixedNumber(-1, 3, 1, 2)``, read as ``-(3 1/2)``.
    """

    sign: int
    whole: int
    frac_numerator: int
    frac_denominator: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.whole < 0 or self.frac_numerator < 0 or self.frac_denominator < 1:
            raise ValueError(f"invalid mixed number parts: {self!r}")
        if self.frac_numerator >= self.frac_denominator:
            raise ValueError("fractional part must be proper")
        if self.frac_numerator == 0:
            if self.frac_denominator != 1:
                raise ValueError("zero fraction must be written 0/1")
        elif gcd(self.frac_numerator, self.frac_denominator) != 1:
            raise ValueError("fractional part must be in lowest terms")
        if self.sign == -1 and self.whole == 0 and self.frac_numerator == 0:
            raise ValueError("zero has no negative mixed form")

    def __str__(self) -> str:
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}{self.whole} {self.frac_numerator}/{self.frac_denominator}"

    def to_rational(self) -> Rational:
        return from_mixed(self)


def to_mixed(r: Rational) -> MixedNumber:
    """Split ``r`` into whole part and proper fraction.

    >>> str(to_mixed(Rational(1809, 124)))
    '14 73/124'
    """
    sign = -1 if r.numerator < 0 else 1
    whole, rem = divmod(abs(r.numerator), r.denominator)
    if rem == 0:
        return MixedNumber(sign if whole else 1, whole, 0, 1)
    return MixedNumber(sign, whole, rem, r.denominator)


def from_mixed(m: MixedNumber) -> Rational:
    return Rational(m.sign * (m.whole * m.frac_denominator + m.frac_numerator), m.frac_denominator)


def mod_circle(r: Rational, modulus: int) -> Rational:
    """Wrap ``r`` into ``[0, modulus)`` by subtracting a whole number of turns."""
    if isinstance(modulus, bool) or not isinstance(modulus, int) or modulus < 1:
        raise ValueError(f"modulus must be a positive integer, got {modulus!r}")
    span = modulus * r.denominator
    return Rational(r.numerator % span, r.denominator)


def rule_of_three(b: IntoRational, c: IntoRational, d: IntoRational) -> Rational:
    """Solve ``x/b = c/d`` for ``x``, i.e. return ``b*c/d``."""
    b, c, d = Rational.coerce(b), Rational.coerce(c), Rational.coerce(d)
    if not d:
        raise DivisionByZeroError("rule of three with zero divisor d")
    return b * c / d


def to_decimal_string(r: Rational, places: int, max_places: int = DEFAULT_MAX_PLACES) -> str:
    """Decimal expansion rounded half away from zero to ``places`` digits.

    A value that rounds to zero prints without a minus sign.

    >>> to_decimal_string(Rational(1809, 124), 5)
    '14.58871'
    """
    if places < 0:
        raise ValueError("places must be nonnegative")
    if places > max_places:
        raise ValueError(f"places={places} exceeds the maximum of {max_places}")
    scaled = abs(r.numerator) * 10**places
    q, rem = divmod(scaled, r.denominator)
    if 2 * rem >= r.denominator:
        q += 1
    digits = str(q)
    if places:
        digits = digits.rjust(places + 1, "0")
        digits = f"{digits[:-places]}.{digits[-places:]}"
    if r.numerator < 0 and q:
        digits = "-" + digits
    return digits


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")
_MIXED_RE = re.compile(r"^\s*([+-]?)(\d+)\s+(\d+)\s*/\s*(\d+)\s*$")


def parse_rational(text: str) -> Rational:
    """Parse ``"n/d"`` or a bare integer ``"n"``."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return Rational(num, den)


def parse_mixed(text: str) -> MixedNumber:
    """Parse the ``"w n/d"`` form (e.g. ``"14 73/124"``, ``"-3 1/2"``)."""
    m = _MIXED_RE.match(text)
    if not m:
        raise ValueError(f"not a mixed number: {text!r}")
    sign = -1 if m.group(1) == "-" else 1
    whole, fn, fd = int(m.group(2)), int(m.group(3)), int(m.group(4))
    if sign == -1 and whole == 0 and fn == 0:
        sign = 1
    return MixedNumber(sign, whole, fn, fd)
