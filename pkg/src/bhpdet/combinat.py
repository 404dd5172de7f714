"""Shifted factorials, binomials, factorials and superfactorial brackets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import NegativeArgument, NegativeFactorial, ZeroDivisor
from .polynomial import ONE, Polynomial, RationalFunction, ZERO, as_polynomial

Scalar = Union[int, Fraction]


def pochhammer_rat(a: Scalar, k: int) -> Fraction:
    """(a)_k with the reciprocal branch 1/((a-1)(a-2)...(a+k)) for k < 0."""
    a = Fraction(a)
    out = Fraction(1)
    if k >= 0:
        for t in range(k):
            out *= a + t
        return out
    for t in range(1, -k + 1):
        f = a - t
        if f == 0:
            raise ZeroDivisor(f"({a})_{k} has a zero factor")
        out *= f
    return 1 / out


def pochhammer_poly(p: Polynomial, k: int) -> RationalFunction:
    """(p)_k for a polynomial argument; negative k gives a reciprocal."""
    p = as_polynomial(p)
    if k >= 0:
        return RationalFunction(rising_poly(p, k))
    den = ONE
    for t in range(1, -k + 1):
        f = p - t
        if f.is_zero():
            raise ZeroDivisor(f"({p!r})_{k} has a zero factor")
        den = den * f
    return RationalFunction(ONE, den)


def rising_poly(p: Polynomial, k: int) -> Polynomial:
    """(p)_k as a Polynomial, k >= 0; zero for negative k is NOT assumed."""
    if k < 0:
        raise ValueError("rising_poly needs k >= 0")
    out = ONE
    for t in range(k):
        out = out * (p + t)
    return out


def pochhammer(a, k: int):
    """Dispatch on argument type: scalar gives Fraction, Polynomial gives Polynomial (k >= 0)."""
    if isinstance(a, Polynomial):
        if k >= 0:
            return rising_poly(a, k)
        return pochhammer_poly(a, k)
    return pochhammer_rat(a, k)


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> int:
    """Strict n!; raises for negative n so index slips surface immediately."""
    if n < 0:
        raise NegativeFactorial(f"{n}! requested")
    return _fact(n)


def inv_factorial(n: int) -> Fraction:
    """1/n!, and 0 for n < 0 (the vanishing-entry convention)."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, _fact(n))


def binom(top, k: int):
    """top choose k for rational or polynomial ``top``; zero when k < 0."""
    if isinstance(top, Polynomial):
        if k < 0:
            return ZERO
        out = ONE
        for t in range(k):
            out = out * (top - t)
        return out / _fact(k)
    if k < 0:
        return Fraction(0)
    top = Fraction(top)
    out = Fraction(1)
    for t in range(k):
        out *= top - t
    return out / _fact(k)


@dataclass(frozen=True, order=True)
class HalfInteger:
    twice_value: int

    @classmethod
    def of(cls, v) -> "HalfInteger":
        v = Fraction(v)
        t = 2 * v
        if t.denominator != 1:
            raise ValueError(f"{v} is not a half-integer")
        return cls(int(t))

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self):
        return str(self.value())


def superfactorial(n: int) -> int:
    """[n] = 0! 1! ... (n-1)! for integer n >= 0."""
    if n < 0:
        raise NegativeArgument(f"[{n}] requested")
    out = 1
    for k in range(n):
        out *= _fact(k)
    return out


def superfactorial_sq(s: HalfInteger) -> Fraction:
    """[s]^2; for half-integer s the product of the brackets at s+1/2 and s-1/2."""
    if not isinstance(s, HalfInteger):
        s = HalfInteger.of(s)
    if s.twice_value < 0:
        raise NegativeArgument(f"[{s}]^2 requested")
    if s.is_integer:
        return Fraction(superfactorial(s.twice_value // 2) ** 2)
    hi = (s.twice_value + 1) // 2
    lo = (s.twice_value - 1) // 2
    return Fraction(superfactorial(hi) * superfactorial(lo))
