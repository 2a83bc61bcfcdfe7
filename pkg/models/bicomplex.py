"""
Bicomplex and Hyperbolic Numbers
Immutable value types stored in idempotent form, with the ring operations,
the hyperbolic norm, the partial order on hyperbolic numbers and hyperbolic balls.

A bicomplex number zeta = z1 + j z2 is stored as zeta1 e1 + zeta2 e2 where
zeta1 = z1 - i z2, zeta2 = z1 + i z2, e1 = (1 + ij)/2 and e2 = (1 - ij)/2.
Multiplication, powers and roots act componentwise in this form.
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

import numpy as np

from models.errors import EvalDomain, InvalidArgument, NonInvertible

Scalar = Union[int, float, complex]

DEFAULT_NONINVERTIBLE_EPS = 1e-12


def _finite_complex(value: Scalar, name: str) -> complex:
    c = complex(value)
    if not cmath.isfinite(c):
        raise EvalDomain(f"{name} must be finite, got {c!r}")
    return c


def _finite_real(value: float, name: str) -> float:
    v = float(value)
    if not math.isfinite(v):
        raise EvalDomain(f"{name} must be finite, got {v!r}")
    return v


@dataclass(frozen=True)
class Hyperbolic:
    """A hyperbolic number eta1 e1 + eta2 e2 with real idempotent components."""

    eta1: float
    eta2: float

    def __post_init__(self):
        object.__setattr__(self, "eta1", _finite_real(self.eta1, "eta1"))
        object.__setattr__(self, "eta2", _finite_real(self.eta2, "eta2"))

    @classmethod
    def from_standard(cls, x: float, y: float) -> "Hyperbolic":
        """Build x + ij*y; since ij = e1 - e2 this is (x + y) e1 + (x - y) e2."""
        return cls(x + y, x - y)

    @classmethod
    def real(cls, value: float) -> "Hyperbolic":
        return cls(value, value)

    def to_standard(self) -> Tuple[float, float]:
        """Return (x, y) with self = x + ij*y."""
        return (self.eta1 + self.eta2) / 2, (self.eta1 - self.eta2) / 2

    def to_bicomplex(self) -> "Bicomplex":
        return Bicomplex(complex(self.eta1), complex(self.eta2))

    def components(self) -> Tuple[float, float]:
        return self.eta1, self.eta2

    def is_nonnegative(self) -> bool:
        """Membership in H+."""
        return self.eta1 >= 0 and self.eta2 >= 0

    def is_real(self, tol: float = 0.0) -> bool:
        return abs(self.eta1 - self.eta2) <= tol

    def max_component(self) -> float:
        return max(self.eta1, self.eta2)

    def __add__(self, other: "Hyperbolic") -> "Hyperbolic":
        other = _as_hyperbolic(other)
        if other is NotImplemented:
            return other
        return Hyperbolic(self.eta1 + other.eta1, self.eta2 + other.eta2)

    __radd__ = __add__

    def __sub__(self, other: "Hyperbolic") -> "Hyperbolic":
        other = _as_hyperbolic(other)
        if other is NotImplemented:
            return other
        return Hyperbolic(self.eta1 - other.eta1, self.eta2 - other.eta2)

    def __rsub__(self, other) -> "Hyperbolic":
        other = _as_hyperbolic(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: "Hyperbolic") -> "Hyperbolic":
        other = _as_hyperbolic(other)
        if other is NotImplemented:
            return other
        return Hyperbolic(self.eta1 * other.eta1, self.eta2 * other.eta2)

    __rmul__ = __mul__

    def __neg__(self) -> "Hyperbolic":
        return Hyperbolic(-self.eta1, -self.eta2)

    def __abs__(self) -> "Hyperbolic":
        return Hyperbolic(abs(self.eta1), abs(self.eta2))

    def __str__(self) -> str:
        return f"{format_real(self.eta1)}e1 + {format_real(self.eta2)}e2"


def _as_hyperbolic(value) -> Hyperbolic:
    if isinstance(value, Hyperbolic):
        return value
    if isinstance(value, (int, float)):
        return Hyperbolic.real(value)
    return NotImplemented


@dataclass(frozen=True)
class Bicomplex:
    """A bicomplex number in idempotent form zeta1 e1 + zeta2 e2."""

    zeta1: complex
    zeta2: complex

    def __post_init__(self):
        object.__setattr__(self, "zeta1", _finite_complex(self.zeta1, "zeta1"))
        object.__setattr__(self, "zeta2", _finite_complex(self.zeta2, "zeta2"))

    @classmethod
    def from_complex(cls, z: Scalar) -> "Bicomplex":
        z = complex(z)
        return cls(z, z)

    @classmethod
    def from_real4(cls, x1: float, y1: float, x2: float, y2: float) -> "Bicomplex":
        """Build x1 + y1 i + x2 j + y2 ij."""
        return from_standard(complex(x1, y1), complex(x2, y2))

    def standard_parts(self) -> Tuple[float, float, float, float]:
        z1, z2 = to_standard(self)
        return z1.real, z1.imag, z2.real, z2.imag

    def is_complex(self) -> bool:
        return self.zeta1 == self.zeta2

    def is_hyperbolic(self) -> bool:
        return self.zeta1.imag == 0 and self.zeta2.imag == 0

    def to_hyperbolic(self) -> Hyperbolic:
        if not self.is_hyperbolic():
            raise EvalDomain(f"{self} has non-real idempotent components")
        return Hyperbolic(self.zeta1.real, self.zeta2.real)

    def __add__(self, other) -> "Bicomplex":
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "Bicomplex":
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other) -> "Bicomplex":
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other) -> "Bicomplex":
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Bicomplex":
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return other
        return mul(self, invert(other))

    def __rtruediv__(self, other) -> "Bicomplex":
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return other
        return mul(other, invert(self))

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.zeta1, -self.zeta2)

    def __pow__(self, n: int) -> "Bicomplex":
        return pow_int(self, n)

    def __str__(self) -> str:
        return render_standard(self)


def _as_bicomplex(value) -> Bicomplex:
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, Hyperbolic):
        return value.to_bicomplex()
    if isinstance(value, (int, float, complex)):
        return Bicomplex.from_complex(value)
    return NotImplemented


class HypOrdering(Enum):
    EQUAL = "Equal"
    LESS = "Less"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class HyperbolicBall:
    """B_H(c, R) = {zeta : |zeta - c|_H <_H R}."""

    center: Bicomplex
    radius: Hyperbolic

    def __post_init__(self):
        if not (self.radius.eta1 > 0 and self.radius.eta2 > 0):
            raise InvalidArgument(f"ball radius must be componentwise positive, got {self.radius}")

    def contains(self, zeta: Bicomplex) -> bool:
        return ball_contains(self, zeta)


# Algebra

def from_standard(z1: Scalar, z2: Scalar) -> Bicomplex:
    """zeta = z1 + j z2  ->  (z1 - i z2) e1 + (z1 + i z2) e2."""
    z1 = _finite_complex(z1, "z1")
    z2 = _finite_complex(z2, "z2")
    return Bicomplex(z1 - 1j * z2, z1 + 1j * z2)


def to_standard(zeta: Bicomplex) -> Tuple[complex, complex]:
    """Return (z1, z2) with z1 = (zeta1 + zeta2)/2 and z2 = i(zeta1 - zeta2)/2."""
    z1 = (zeta.zeta1 + zeta.zeta2) / 2
    z2 = 1j * (zeta.zeta1 - zeta.zeta2) / 2
    return z1, z2


def add(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return Bicomplex(a.zeta1 + b.zeta1, a.zeta2 + b.zeta2)


def sub(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return Bicomplex(a.zeta1 - b.zeta1, a.zeta2 - b.zeta2)


def mul(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return Bicomplex(a.zeta1 * b.zeta1, a.zeta2 * b.zeta2)


def mul_standard(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    """Product through the standard-form rule (z1 w1 - z2 w2) + j(z1 w2 + w1 z2)."""
    z1, z2 = to_standard(a)
    w1, w2 = to_standard(b)
    return from_standard(z1 * w1 - z2 * w2, z1 * w2 + w1 * z2)


def pow_int(zeta: Bicomplex, n: int) -> Bicomplex:
    if n < 0:
        raise InvalidArgument(f"pow_int requires n >= 0, got {n}")
    return Bicomplex(zeta.zeta1 ** n, zeta.zeta2 ** n)


def _principal_root(c: complex, n: int) -> complex:
    # -0.0 imaginary parts would select the lower side of the branch cut
    c = complex(c.real, c.imag + 0.0)
    if n == 1:
        return c
    if n == 2:
        return cmath.sqrt(c)
    with np.errstate(under="ignore"):
        return complex(np.power(np.complex128(c), 1.0 / n))


def nth_root(zeta: Bicomplex, n: int) -> Bicomplex:
    """Principal complex n-th root of each idempotent component."""
    if n < 1:
        raise InvalidArgument(f"nth_root requires n >= 1, got {n}")
    return Bicomplex(_principal_root(zeta.zeta1, n), _principal_root(zeta.zeta2, n))


def invert(zeta: Bicomplex) -> Bicomplex:
    if zeta.zeta1 == 0 or zeta.zeta2 == 0:
        raise NonInvertible(f"{render_idempotent(zeta)} is a zero divisor")
    return Bicomplex(1 / zeta.zeta1, 1 / zeta.zeta2)


def near_noninvertible(zeta: Bicomplex, eps: float = DEFAULT_NONINVERTIBLE_EPS) -> bool:
    return min(abs(zeta.zeta1), abs(zeta.zeta2)) <= eps


def hyp_norm(zeta: Bicomplex) -> Hyperbolic:
    """|zeta|_H = |zeta1| e1 + |zeta2| e2."""
    return Hyperbolic(abs(zeta.zeta1), abs(zeta.zeta2))


def hyp_compare(a: Hyperbolic, b: Hyperbolic) -> HypOrdering:
    if a.eta1 == b.eta1 and a.eta2 == b.eta2:
        return HypOrdering.EQUAL
    if a.eta1 < b.eta1 and a.eta2 < b.eta2:
        return HypOrdering.LESS
    if a.eta1 > b.eta1 and a.eta2 > b.eta2:
        return HypOrdering.GREATER
    return HypOrdering.INCOMPARABLE


def hyp_le(a: Hyperbolic, b: Hyperbolic) -> bool:
    return a.eta1 <= b.eta1 and a.eta2 <= b.eta2


def ball_contains(ball: HyperbolicBall, zeta: Bicomplex) -> bool:
    return hyp_compare(hyp_norm(zeta - ball.center), ball.radius) is HypOrdering.LESS


ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 1)
E1 = Bicomplex(1, 0)
E2 = Bicomplex(0, 1)
I_UNIT = Bicomplex(1j, 1j)
J_UNIT = from_standard(0, 1)
IJ_UNIT = Bicomplex(1, -1)


# Rendering

def format_real(value: float) -> str:
    """17 significant digits; round-trips every double."""
    text = f"{value:.17g}"
    return "0" if text == "-0" else text


def format_complex(z: complex) -> str:
    """Compact 'a + bi' rendering, dropping zero parts."""
    terms = [(z.real, ""), (z.imag, "i")]
    return _join_terms(terms)


def _join_terms(terms) -> str:
    text = ""
    for coefficient, unit in terms:
        if coefficient == 0:
            continue
        magnitude = format_real(abs(coefficient)) + unit
        if not text:
            text = f"-{magnitude}" if coefficient < 0 else magnitude
        else:
            text += f" - {magnitude}" if coefficient < 0 else f" + {magnitude}"
    return text or "0"


def render_standard(zeta: Bicomplex, compact: bool = True) -> str:
    """Render as x1 + y1 i + x2 j + y2 ij."""
    x1, y1, x2, y2 = zeta.standard_parts()
    terms = [(x1, ""), (y1, "i"), (x2, "j"), (y2, "ij")]
    if compact:
        return _join_terms(terms)
    text = format_real(x1)
    for coefficient, unit in terms[1:]:
        sign = "-" if coefficient < 0 else "+"
        text += f" {sign} {format_real(abs(coefficient))}{unit}"
    return text


def render_idempotent(zeta: Bicomplex) -> str:
    """Render as [zeta1 | zeta2]."""
    return f"[{format_complex(zeta.zeta1)} | {format_complex(zeta.zeta2)}]"
