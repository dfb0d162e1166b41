"""Exact coefficients: rationals and the rational function field Q(theta).

Every coefficient in the package is a :class:`ThetaFunction`, a reduced
fraction of univariate polynomials over Q in the formal parameter theta.
Polynomial arithmetic and gcds are delegated to FLINT's ``fmpq_poly``; this
module owns the canonical form, specialization guards and the textual format.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from flint import fmpq, fmpq_poly

Rational = Fraction
Scalar = Union[int, Fraction, "ThetaFunction"]

_ONE_POLY = fmpq_poly([1])


class ExcludedParameterError(ValueError):
    """A numeric theta lies in a parameter set that must be avoided."""


class PoleError(ZeroDivisionError):
    """A ThetaFunction was specialized at a root of its denominator."""


def _to_fmpq(c) -> fmpq:
    if isinstance(c, fmpq):
        return c
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _to_fraction(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class ThetaFunction:
    """An element of Q(theta) in canonical reduced form.

    The denominator is monic and coprime to the numerator; zero is 0/1.
    Instances are immutable.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=None):
        if not isinstance(num, fmpq_poly):
            num = fmpq_poly([_to_fmpq(num)])
        if den is None:
            self._num, self._den = num, _ONE_POLY
        else:
            if not isinstance(den, fmpq_poly):
                den = fmpq_poly([_to_fmpq(den)])
            self._num, self._den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: fmpq_poly, den: fmpq_poly) -> "ThetaFunction":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._hash = num, den, None
        return obj

    @classmethod
    def from_coeffs(cls, num, den=(1,)) -> "ThetaFunction":
        """Build from ascending coefficient sequences of numerator and denominator."""
        return cls(fmpq_poly([_to_fmpq(c) for c in num]), fmpq_poly([_to_fmpq(c) for c in den]))

    # -- accessors ---------------------------------------------------------
    @property
    def numerator(self) -> tuple[Fraction, ...]:
        return tuple(_to_fraction(c) for c in self._num.coeffs())

    @property
    def denominator(self) -> tuple[Fraction, ...]:
        return tuple(_to_fraction(c) for c in self._den.coeffs())

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        return self._den.degree() == 0 and self._num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on theta")
        return _to_fraction(self._num[0])

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._den == other._den:
            if self._den.degree() == 0:
                return ThetaFunction._raw(self._num + other._num, _ONE_POLY)
            return ThetaFunction(self._num + other._num, self._den)
        return ThetaFunction(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return ThetaFunction._raw(-self._num, self._den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._den.degree() == 0 and other._den.degree() == 0:
            return ThetaFunction._raw(self._num * other._num, _ONE_POLY)
        if self._num.is_zero() or other._num.is_zero():
            return ZERO
        return ThetaFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "ThetaFunction":
        if self._num.is_zero():
            raise ZeroDivisionError("division by the zero element of Q(theta)")
        return ThetaFunction(self._den, self._num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ThetaFunction._raw(self._num ** k, self._den ** k)

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(str(c) for c in self._num.coeffs()),
                               tuple(str(c) for c in self._den.coeffs())))
        return self._hash

    def __bool__(self):
        return not self._num.is_zero()

    # -- specialization ----------------------------------------------------
    def __call__(self, value) -> Fraction:
        return self.specialize(value)

    def specialize(self, value, guard: "ThetaGuard | None" = None) -> Fraction:
        """Evaluate at theta = ``value`` after checking ``guard``."""
        value = Fraction(value)
        if guard is not None:
            guard.check(value)
        v = _to_fmpq(value)
        d = self._den(v)
        if d == 0:
            raise PoleError(f"{self} has a pole at theta = {value}")
        return _to_fraction(self._num(v) / d)

    def __float__(self):
        return float(self.constant_value())

    # -- text --------------------------------------------------------------
    def __str__(self):
        if self._den.degree() == 0:
            return _poly_str(self._num)
        return f"({_poly_str(self._num)})/({_poly_str(self._den)})"

    def __repr__(self):
        return f"ThetaFunction({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "ThetaFunction":
        """Inverse of ``str``: accepts ``P`` or ``(P)/(Q)`` in the symbol ``theta``."""
        text = text.replace(" ", "")
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
        if m:
            return cls(_parse_poly(m.group(1)), _parse_poly(m.group(2)))
        return cls(_parse_poly(text))


def _reduce(num: fmpq_poly, den: fmpq_poly) -> tuple[fmpq_poly, fmpq_poly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in Q(theta)")
    if num.is_zero():
        return num, _ONE_POLY
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num // g, den // g
    lead = den[den.degree()]
    if lead != 1:
        num, den = num / lead, den / lead
    return num, den


def _coerce(x) -> ThetaFunction:
    if isinstance(x, ThetaFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return ThetaFunction(x)
    return NotImplemented


def _coeff_str(c: fmpq) -> str:
    return str(c.p) if c.q == 1 else f"{c.p}/{c.q}"


def _poly_str(p: fmpq_poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree(), -1, -1):
        c = p[k]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _coeff_str(a)
        else:
            var = "theta" if k == 1 else f"theta**{k}"
            body = var if a == 1 else f"{_coeff_str(a)}*{var}"
        if parts:
            parts.append(("-" if neg else "+") + body)
        else:
            parts.append(("-" if neg else "") + body)
    return "".join(parts)


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(?:\*)?)?(theta(?:\*\*(\d+))?)?")


def _parse_poly(text: str) -> fmpq_poly:
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            c = -c
        k = 0
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
    if not coeffs:
        raise ValueError("empty polynomial")
    top = max(coeffs)
    return fmpq_poly([_to_fmpq(coeffs.get(k, 0)) for k in range(top + 1)])


ZERO = ThetaFunction(0)
ONE = ThetaFunction(1)
THETA = ThetaFunction.from_coeffs([0, 1])


def as_theta(x: Scalar) -> ThetaFunction:
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(theta)")
    return c


@dataclass(frozen=True)
class ThetaGuard:
    """Excluded parameter set for numeric theta.

    ``kind`` is one of ``"none"``; ``"non-negative-rational-excluded"``, which
    rejects theta = i/j with i in {0,-1,-2,...} and j >= 1 (zero and negative
    rationals); or ``"fat-hook-excluded"``, which additionally rejects
    theta = i/j with 1 <= i <= m and 1 <= j <= n.
    """

    kind: str = "none"
    n: int = 0
    m: int = 0

    @classmethod
    def none(cls) -> "ThetaGuard":
        return cls("none")

    @classmethod
    def jack(cls) -> "ThetaGuard":
        return cls("non-negative-rational-excluded")

    @classmethod
    def fat_hook(cls, n: int, m: int) -> "ThetaGuard":
        return cls("fat-hook-excluded", n, m)

    def __post_init__(self):
        if self.kind not in ("none", "non-negative-rational-excluded", "fat-hook-excluded"):
            raise ValueError(f"unknown guard kind {self.kind!r}")

    def violation(self, value) -> str | None:
        """Return a description of the violated rule, or None if admissible."""
        value = Fraction(value)
        if self.kind == "none":
            return None
        if value <= 0:
            return (f"theta = {value} is excluded: theta = i/j with i a non-positive "
                    f"integer and j a positive integer is not allowed")
        if self.kind == "fat-hook-excluded":
            p, q = value.numerator, value.denominator
            if 1 <= p <= self.m and q <= self.n:
                return (f"theta = {value} is excluded for (n, m) = ({self.n}, {self.m}): "
                        f"theta = i/j with 1 <= i <= m and 1 <= j <= n is not allowed")
        return None

    def check(self, value) -> None:
        msg = self.violation(value)
        if msg is not None:
            raise ExcludedParameterError(msg)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
