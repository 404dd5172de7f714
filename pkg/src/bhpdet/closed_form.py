"""Product formulas for the determinants and the relations between them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .combinat import HalfInteger, pochhammer_poly, pochhammer_rat, superfactorial, superfactorial_sq
from .det import det_poly_interp, det_rational
from .errors import InexactDivision, NonPolynomialResult, OddHalfIntegerPower, ParityError, RangeError
from .matrices import (build_conjecture, build_delta, build_delta_prime, build_first_block,
                       build_second_factor)
from .polynomial import X, ZERO, Polynomial, RationalFunction


class FormulaId(enum.Enum):
    DELTA = "DELTA"
    DELTA_PRIME = "DELTA_PRIME"
    CONJ_ABS = "CONJ_ABS"
    SPECIAL_ODD = "SPECIAL_ODD"
    SPECIAL_EVEN = "SPECIAL_EVEN"
    CORNER = "CORNER"


@dataclass(frozen=True)
class ClosedFormResult:
    value: Union[Polynomial, Fraction]
    formula_id: FormulaId


def _ceil_half(n: int) -> int:
    return -((-n) // 2)


def _check(b: int, c: int):
    if not 0 <= c <= b:
        raise RangeError(f"need 0 <= c <= b, got b={b}, c={c}")


def vanishes_by_parity(b: int, c: int) -> bool:
    return b % 2 == 0 and c % 2 == 1


def scalar_prefactor(b: int, c: int) -> Fraction:
    """2^c * prod_{i=1}^{b-c} (i + 1/2 - ceil(b/2))_c / (i)_c, without the sign."""
    hb = _ceil_half(b)
    out = Fraction(2) ** c
    for i in range(1, b - c + 1):
        out *= pochhammer_rat(Fraction(2 * i + 1 - 2 * hb, 2), c) / pochhammer_rat(i, c)
    return out


def factor_lengths(b: int, c: int, i: int) -> tuple:
    """Shifts and lengths of the two x-dependent shifted factorials in the i-th factor."""
    s1 = _ceil_half(c + i)
    l1 = b - c + _ceil_half(i) - s1
    s2 = _ceil_half(b - c + i)
    l2 = _ceil_half(b + i) - s2
    return (s1, l1), (s2, l2)


def x_product(b: int, c: int) -> RationalFunction:
    """The x-dependent product, kept as a rational function until the end."""
    hb = _ceil_half(b)
    out = RationalFunction(1)
    for i in range(1, c + 1):
        for shift, length in factor_lengths(b, c, i):
            out = out * pochhammer_poly(X + shift, length)
            out = out / pochhammer_rat(Fraction(1, 2) - hb + shift, length)
    return out


def _collapse(rf: RationalFunction, b: int, c: int) -> Polynomial:
    try:
        return rf.to_polynomial()
    except InexactDivision as exc:
        raise NonPolynomialResult(f"product for b={b}, c={c} is not a polynomial") from exc


def delta_prime_closed_form(b: int, c: int) -> Polynomial:
    _check(b, c)
    if vanishes_by_parity(b, c):
        return ZERO
    return _rhs_unconditional(b, c) * (-1) ** (c * (b - c))


def delta_closed_form(b: int, c: int) -> Polynomial:
    _check(b, c)
    if vanishes_by_parity(b, c):
        return ZERO
    return _rhs_unconditional(b, c) * (-1) ** c


def _rhs_unconditional(b: int, c: int) -> Polynomial:
    return _collapse(x_product(b, c) * scalar_prefactor(b, c), b, c)


def product_without_parity(b: int, c: int) -> Polynomial:
    """The signed Delta' product, evaluated even where the parity rule zeroes the determinant.

    Well defined for every 0 <= c <= b; it divides the determinant in all cases.
    """
    _check(b, c)
    return _rhs_unconditional(b, c) * (-1) ** (c * (b - c))


def bracket_power(s: HalfInteger, k: int) -> Fraction:
    """[s]^k; odd k is only allowed for integer s."""
    if s.is_integer:
        return Fraction(superfactorial(s.twice_value // 2)) ** k
    if k % 2:
        raise OddHalfIntegerPower(f"[{s}]^{k} needs a square root")
    return superfactorial_sq(s) ** (k // 2)


def conjecture_magnitude(b: int, c: int) -> Fraction:
    """|Delta(b, c)| from the superfactorial product, for b >= 2c."""
    if not 0 <= 2 * c <= b:
        raise RangeError(f"need b >= 2c >= 0, got b={b}, c={c}")
    if vanishes_by_parity(b, c):
        raise ParityError(f"b={b} even and c={c} odd: the determinant vanishes")

    def h(twice: int) -> HalfInteger:
        return HalfInteger(twice)

    num = (bracket_power(h(2 * b - c), 2) * bracket_power(h(2 * (b - 2 * c)), 1)
           * bracket_power(h(b + c), 2) * bracket_power(h(b - c), 6) * bracket_power(h(c), 6))
    den = (bracket_power(h(2 * (b - c)), 3) * bracket_power(h(b), 6)
           * bracket_power(h(b - 2 * c), 2) * bracket_power(h(2 * c), 3))
    return num / den


def special_value_odd(b: int, c: int) -> Fraction:
    _check(b, c)
    if b % 2 == 0:
        raise ParityError(f"b={b} must be odd")
    out = Fraction((-1) ** (c * (b - c)) * 2 ** c)
    for i in range(1, b - c + 1):
        out *= pochhammer_rat(Fraction(2 * i - b, 2), c) / pochhammer_rat(i, c)
    return out


def special_value_even(b: int, c: int) -> Fraction:
    _check(b, c)
    if b % 2 or c % 2:
        raise ParityError(f"b={b} and c={c} must both be even")
    out = Fraction((-1) ** (c * (b - c)) * 2 ** c)
    for i in range(1, b - c + 1):
        out *= pochhammer_rat(Fraction(2 * i + 1 - b, 2), c) / pochhammer_rat(i, c)
    return out


def evaluate(formula: FormulaId, b: int, c: int) -> ClosedFormResult:
    fn = {
        FormulaId.DELTA: delta_closed_form,
        FormulaId.DELTA_PRIME: delta_prime_closed_form,
        FormulaId.CONJ_ABS: conjecture_magnitude,
        FormulaId.SPECIAL_ODD: special_value_odd,
        FormulaId.SPECIAL_EVEN: special_value_even,
        FormulaId.CORNER: lambda _b, cc: Fraction(2) ** cc,
    }[formula]
    return ClosedFormResult(fn(b, c), formula)


# -- relations -------------------------------------------------------------

def check_complement_symmetry(b: int, c: int) -> bool:
    """Complement symmetry c <-> b-c of the main product, as polynomials."""
    _check(b, c)
    lhs = delta_closed_form(b, c)
    rhs = delta_closed_form(b, b - c) * ((-1) ** b * Fraction(2) ** (2 * c - b))
    return lhs == rhs


def check_complement_magnitude(b: int, c: int) -> bool:
    """|Delta(b,c)| = 2^(2c-b) |Delta(b,b-c)| at x = 0, checked on actual determinants."""
    if not b < 2 * c <= 2 * b:
        raise RangeError(f"need b < 2c <= 2b, got b={b}, c={c}")
    lhs = abs(det_rational(build_conjecture(b, c)))
    rhs = Fraction(2) ** (2 * c - b) * abs(det_rational(build_conjecture(b, b - c)))
    return lhs == rhs


def check_block_reduction(b: int, c: int) -> bool:
    """Block reduction of Delta to Delta' and the 2^c corner determinant."""
    _check(b, c)
    d = det_poly_interp(build_delta(b, c))
    sign = (-1) ** (b * c)
    corner = det_poly_interp(build_first_block(c))
    second = det_poly_interp(build_second_factor(b, c))
    dprime = det_poly_interp(build_delta_prime(b, c))
    return (corner == Fraction(2) ** c
            and d == second * (sign * Fraction(2) ** c)
            and d == dprime * sign)
