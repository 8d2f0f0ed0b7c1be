"""Scalar plumbing: exact rationals, quadratic surds and binary64 floats.

Exact mode uses :class:`fractions.Fraction`.  Eigenvalues that are roots of
an irreducible rational quadratic live in ``Q(sqrt(d))`` and are represented
by :class:`QuadraticNumber`; with ``d < 0`` the same class gives exact
complex numbers (``d = -1`` are the Gaussian rationals).
"""

from __future__ import annotations

import enum
import math
import numbers
from fractions import Fraction


class Mode(enum.Enum):
    RATIONAL = "rational"
    FLOAT = "float"


def parse_scalar(value):
    """Turn a document value into ``Fraction`` or ``float``.

    Integers and fraction strings ("3/4", "-2") are exact; Python floats and
    decimal strings containing '.' or 'e' are floats.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text.lower() for ch in ".e") and "/" not in text:
            return float(text)
        return Fraction(text)
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, numbers.Real):
        return float(value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def detect_mode(values) -> Mode:
    for v in values:
        if isinstance(v, float):
            return Mode.FLOAT
    return Mode.RATIONAL


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QuadraticNumber))


def rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def fmt(x) -> str:
    """Stable text form: '3/4' for rationals, repr for floats."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, QuadraticNumber):
        return str(x)
    if isinstance(x, complex):
        return f"{x.real!r}{x.imag:+}i"
    return repr(float(x))


class QuadraticNumber:
    """``a + b*sqrt(d)`` with rational ``a``, ``b`` and non-square rational ``d``.

    Instances with different radicands never meet in one computation here,
    so mixing them raises.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)

    @classmethod
    def gaussian(cls, re, im):
        return cls(re, im, -1)

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                if other.b == 0:
                    return QuadraticNumber(other.a, 0, self.d)
                if self.b == 0:
                    return None
                raise ValueError("mixed radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return None

    def _shape(self, other):
        o = self._coerce(other)
        if o is None and isinstance(other, QuadraticNumber):
            # self is rational-valued; adopt the other radicand
            return QuadraticNumber(self.a, 0, other.d), other
        return self, o

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        s, o = self._shape(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(s.a + o.a, s.b + o.b, s.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        s, o = self._shape(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(s.a - o.a, s.b - o.b, s.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        s, o = self._shape(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(s.a * o.a + s.b * o.b * s.d, s.a * o.b + s.b * o.a, s.d)

    __rmul__ = __mul__

    def conjugate(self):
        """Galois conjugate ``a - b*sqrt(d)`` (complex conjugate when d < 0)."""
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        s, o = self._shape(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        num = s * o.conjugate()
        return QuadraticNumber(num.a / n, num.b / n, s.d)

    def __rtruediv__(self, other):
        return QuadraticNumber(other, 0, self.d).__truediv__(self)

    def __pow__(self, k: int):
        if k < 0:
            return QuadraticNumber(1, 0, self.d) / self ** (-k)
        out = QuadraticNumber(1, 0, self.d)
        for _ in range(k):
            out = out * self
        return out

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticNumber):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    @property
    def is_real(self) -> bool:
        return self.d > 0 or self.b == 0

    def sign(self) -> int:
        if not self.is_real:
            raise ValueError("sign of a non-real number")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    # -- numeric views ----------------------------------------------------
    @property
    def real(self):
        if self.d > 0:
            return float(self.a) + float(self.b) * math.sqrt(float(self.d))
        return self.a

    @property
    def imag(self):
        if self.d > 0:
            return Fraction(0)
        return float(self.b) * math.sqrt(float(-self.d))

    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    def __float__(self):
        if not self.is_real:
            raise TypeError("non-real quadratic number")
        return float(self.real)

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.d == -1:
            rad = "i"
        else:
            rad = f"sqrt({self.d})"
        b = "" if self.b == 1 else ("-" if self.b == -1 else f"{self.b}*")
        if self.a == 0:
            return f"{b}{rad}"
        sep = "" if b.startswith("-") else "+"
        return f"{self.a}{sep}{b}{rad}"


def sgn(x) -> int:
    """Exact sign for Fraction/int/real QuadraticNumber."""
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def is_zero(x, tol: float = 0.0, scale: float = 1.0) -> bool:
    """Exact zero test for exact types, ``|x| <= tol*scale`` for floats."""
    if is_exact(x):
        return x == 0
    return abs(x) <= tol * scale


def approx(x) -> complex:
    """Numeric approximation of any supported scalar."""
    if isinstance(x, QuadraticNumber):
        return complex(x)
    return complex(x)
