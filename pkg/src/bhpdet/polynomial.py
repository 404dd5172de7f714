"""Dense univariate polynomials and rational functions over Q.

Coefficients are :class:`fractions.Fraction`, stored lowest degree first with
no trailing zeros.  The zero polynomial has an empty coefficient tuple and
degree ``-inf``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import InexactDivision

Scalar = Union[int, Fraction]

NEG_INF = -math.inf


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "Polynomial":
        """The polynomial ``a*x + b``."""
        return cls((b, a))

    # -- basic queries -----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def constant_value(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError(f"{self!r} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({to_canonical(self)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            elif k == 1:
                terms.append(f"{a}*x")
            else:
                terms.append(f"{a}*x^{k}")
        return " + ".join(reversed(terms))

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        # scalar division only; polynomial quotients go through divmod/poly_divexact
        if isinstance(other, (int, Fraction)):
            return Polynomial(c / other for c in self.coeffs)
        return NotImplemented

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lc
            if q == 0:
                continue
            quot[k - dd] = q
            for t, v in enumerate(other.coeffs):
                rem[k - dd + t] -= q * v
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be a scalar or a Polynomial."""
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self / self.lc

    def denominator_lcm(self) -> int:
        out = 1
        for c in self.coeffs:
            out = out * c.denominator // math.gcd(out, c.denominator)
        return out


X = Polynomial.x()
ONE = Polynomial.const(1)
ZERO = Polynomial()


def as_polynomial(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    return Polynomial.const(v)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_divexact(num: Polynomial, den: Polynomial) -> Polynomial:
    """Quotient ``q`` with ``num == q * den``; raises if the remainder is nonzero."""
    q, r = divmod(as_polynomial(num), as_polynomial(den))
    if not r.is_zero():
        raise InexactDivision(f"{num!r} is not divisible by {den!r}")
    return q


class RationalFunction:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = as_polynomial(num)
        den = as_polynomial(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
            lc = den.lc
            num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(other)
        return NotImplemented

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({to_canonical(self.num)} / {to_canonical(self.den)})"

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def to_polynomial(self) -> Polynomial:
        return poly_divexact(self.num, self.den)

    def __call__(self, x):
        return self.num(x) / self.den(x)


# -- canonical serialization ----------------------------------------------

def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_canonical(p) -> str:
    """``[c0, c1, ...]`` with ``num/den`` tokens; the zero polynomial is ``[]``."""
    p = as_polynomial(p)
    return "[" + ", ".join(_fmt(c) for c in p.coeffs) + "]"


_TOKEN = re.compile(r"^-?\d+(/\d+)?$")


def from_canonical(s: str) -> Polynomial:
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"not a canonical polynomial: {s!r}")
    body = s[1:-1].strip()
    if not body:
        return ZERO
    tokens = [t.strip() for t in body.split(",")]
    for t in tokens:
        if not _TOKEN.match(t):
            raise ValueError(f"bad coefficient token {t!r}")
    return Polynomial(Fraction(t) for t in tokens)
