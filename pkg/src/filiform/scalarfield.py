"""Exact arithmetic in the Gaussian rationals Q(i).

A :class:`Scalar` is a pair of :class:`fractions.Fraction` values (real and
imaginary part).  Fractions are always stored in lowest terms with a positive
denominator, so two scalars are equal exactly when their fields are equal.
Floating point values are rejected everywhere.

Text form::

    RAT | RAT ("+"|"-") RAT "i" | RAT "i"      RAT := [+-]? digits ("/" digits)?

for example ``"3/6"`` (parsed as 1/2), ``"-1/2+1/3i"``, ``"2i"``.
"""

from __future__ import annotations

import math
import random
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

__all__ = [
    "Scalar",
    "SamplerConfig",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
    "binom",
    "format_scalar",
    "make_rng",
    "parse_scalar",
    "random_scalar",
]

_FZERO = Fraction(0)


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a field element")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        s = parse_scalar(value)
        if s.im:
            raise ValueError(f"expected a rational, got {value!r}")
        return s.re
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def _new(re: Fraction, im: Fraction) -> "Scalar":
    obj = object.__new__(Scalar)
    obj.re = re
    obj.im = im
    return obj


class Scalar:
    """An element ``re + im*i`` of Q(i).  Treated as immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("imaginary part given twice")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, str):
            if im:
                raise TypeError("imaginary part given with scalar text")
            s = parse_scalar(re)
            self.re, self.im = s.re, s.im
            return
        self.re = _to_fraction(re)
        self.im = _to_fraction(im)

    # -- predicates -------------------------------------------------------
    @property
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return _new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return _new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _new(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _new(a * c, _FZERO)
        return _new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __neg__(self):
        return _new(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        return self.pow_int(exponent)

    def inv(self) -> "Scalar":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero in Q(i)")
            return _new(1 / a, _FZERO)
        norm = a * a + b * b
        return _new(a / norm, -b / norm)

    def pow_int(self, k: int) -> "Scalar":
        if k < 0:
            return self.inv().pow_int(-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> "Scalar":
        return _new(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if type(other) is Scalar:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return not self.im and self.re == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text ---------------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{format_scalar(self)}')"

    def __reduce__(self):
        return (Scalar, (self.re, self.im))


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        return NotImplemented
    if isinstance(value, Fraction):
        return _new(value, _FZERO)
    if isinstance(value, (int, Rational)):
        return _new(Fraction(value), _FZERO)
    return NotImplemented


def as_scalar(value) -> Scalar:
    """Coerce an int, Fraction, scalar text or Scalar into a Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")
    return out


ZERO = _new(Fraction(0), Fraction(0))
ONE = _new(Fraction(1), Fraction(0))
I = _new(Fraction(0), Fraction(1))


# -- text form ---------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_FULL = _re.compile(
    rf"^(?:(?P<re>{_RAT})(?:(?P<op>[+-])(?P<im>[+-]?\d+(?:/\d+)?)i)?|(?P<pure>{_RAT})i)$"
)
_RAT_TOKEN = _re.compile(r"[+-]?\d+(?:/\d+)?i?")


def _parse_rat(token: str, text: str) -> Fraction:
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r} (scalar {text!r})")
    return Fraction(int(num), int(den) if den else 1)


def _offending_token(text: str) -> str:
    pos = 0
    while pos < len(text):
        m = _RAT_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            return text[pos:] or text
        pos = m.end()
    return text


def parse_scalar(text: str) -> Scalar:
    """Parse scalar text into a reduced :class:`Scalar`."""
    if not isinstance(text, str):
        raise ParseError(f"scalar text must be a string, got {type(text).__name__}")
    s = text.strip()
    m = _FULL.match(s)
    if not m:
        raise ParseError(f"malformed scalar {text!r}: unexpected {_offending_token(s)!r}")
    if m.group("pure") is not None:
        return _new(_FZERO, _parse_rat(m.group("pure"), text))
    re_part = _parse_rat(m.group("re"), text)
    if m.group("im") is None:
        return _new(re_part, _FZERO)
    im_part = _parse_rat(m.group("im"), text)
    if m.group("op") == "-":
        im_part = -im_part
    return _new(re_part, im_part)


def format_scalar(s: Scalar) -> str:
    """Canonical text; ``parse_scalar(format_scalar(s)) == s``."""
    s = as_scalar(s)
    if not s.im:
        return str(s.re)
    if not s.re:
        return f"{s.im}i"
    sign = "+" if s.im > 0 else "-"
    return f"{s.re}{sign}{abs(s.im)}i"


# -- sampling ----------------------------------------------------------------


@dataclass(frozen=True)
class SamplerConfig:
    """Bounds for :func:`random_scalar`."""

    max_abs_numerator: int = 10
    max_denominator: int = 10
    gaussian: bool = False
    nonzero: bool = False

    def __post_init__(self):
        if self.max_abs_numerator < 1 or self.max_denominator < 1:
            raise ValueError("sampler bounds must be >= 1")


def make_rng(seed: int | None) -> random.Random:
    return random.Random(seed)


def _random_rational(rng: random.Random, cfg: SamplerConfig) -> Fraction:
    return Fraction(
        rng.randint(-cfg.max_abs_numerator, cfg.max_abs_numerator),
        rng.randint(1, cfg.max_denominator),
    )


def random_scalar(rng: random.Random, config: SamplerConfig = SamplerConfig()) -> Scalar:
    """Draw a small scalar; deterministic given the state of ``rng``."""
    while True:
        re_part = _random_rational(rng, config)
        im_part = _random_rational(rng, config) if config.gaussian else _FZERO
        if config.nonzero and not re_part and not im_part:
            continue
        return _new(re_part, im_part)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)
