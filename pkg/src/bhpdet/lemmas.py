"""Divisibility skeleton of the product formula.

For each linear factor (x+e) of the product, its multiplicity m(e) is
accounted for in two parts: a power pulled out of a block of rows (checked
by exact factor extraction), and a family of explicit row combinations that
vanish at x = -e (checked column by column).  Two auxiliary determinant
evaluations close the argument at a special point.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .closed_form import factor_lengths, special_value_even, special_value_odd
from .combinat import binom, factorial, pochhammer_rat
from .det import det_poly_interp, det_rational
from .errors import InexactDivision, ParityError, RangeError
from .matrices import (ExactMatrix, build_binomial_toeplitz, build_delta1, build_delta2, build_delta3,
                       build_delta_prime, build_half_binomial, build_lowered_top, build_raised,
                       delta1_in_range, delta3_in_range)
from .polynomial import X, Polynomial, poly_divexact

F = factorial
P = pochhammer_rat


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


# -- multiplicities ----------------------------------------------------------

class Regime(enum.Enum):
    L1 = "L1"  # b >= 2c
    L2 = "L2"  # c <= b <= 2c


@dataclass(frozen=True)
class MultiplicityCase:
    regime: Regime
    interval: int  # 1..4


def _frac(v) -> Fraction:
    return Fraction(v)


def product_multiplicity(b: int, c: int, e) -> int:
    """Net exponent of (x+e) in the x-dependent product.

    Shifted factorials of negative length sit in the denominator and count
    negatively.
    """
    if not 0 <= c <= b:
        raise RangeError(f"need 0 <= c <= b, got b={b}, c={c}")
    e = _frac(e)
    if e.denominator != 1:
        return 0
    e = int(e)
    total = 0
    for i in range(1, c + 1):
        for shift, length in factor_lengths(b, c, i):
            if length >= 0 and shift <= e <= shift + length - 1:
                total += 1
            elif length < 0 and shift + length <= e <= shift - 1:
                total -= 1
    return total


def _case_intervals(regime: Regime, b: int, c: int) -> list:
    """(case, lower, upper) with the bounds doubled so half-integers stay exact."""
    if regime is Regime.L1:
        return [(1, c, 2 * c), (2, 2 * c, b), (3, b, 2 * (b - c)), (4, 2 * (b - c), 2 * b - c)]
    return [(1, b - c, 2 * (b - c)), (2, 2 * (b - c), b), (3, b, 2 * c), (4, 2 * c, b + c)]


def regime_applies(regime: Regime, b: int, c: int) -> bool:
    if regime is Regime.L1:
        return 0 <= 2 * c <= b
    return 0 <= c <= b <= 2 * c


def cases_for(regime: Regime, b: int, c: int, e) -> list:
    e2 = 2 * _frac(e)
    return [MultiplicityCase(regime, k) for k, lo, hi in _case_intervals(regime, b, c) if lo <= e2 <= hi]


def _m_value(case: MultiplicityCase, b: int, c: int, e: Fraction) -> int:
    k = case.interval
    if case.regime is Regime.L1:
        if k == 1:
            return 2 * e - c + (2 * e + c - b if 2 * e > b - c else 0)
        if k == 2:
            return c + (2 * e + c - b if 2 * e > b - c else 0)
        if k == 3:
            return c + (b + c - 2 * e if 2 * e < b + c else 0)
        return 2 * b - 2 * e - c + (b + c - 2 * e if 2 * e < b + c else 0)
    if k == 1:
        return 2 * e + c - b + (2 * e - c if 2 * e > c else 0)
    if k == 2:
        return b - c + (2 * e - c if 2 * e > c else 0)
    if k == 3:
        return b - c + (2 * b - 2 * e - c if 2 * e < 2 * b - c else 0)
    return b + c - 2 * e + (2 * b - 2 * e - c if 2 * e < 2 * b - c else 0)


def m_formula(regime: Regime, b: int, c: int, e, case: Optional[int] = None) -> int:
    """Case formula for m(e); by default the first case interval containing e."""
    if not regime_applies(regime, b, c):
        raise RangeError(f"regime {regime.value} does not apply to b={b}, c={c}")
    e = _frac(e)
    cases = cases_for(regime, b, c, e)
    if case is not None:
        cases = [k for k in cases if k.interval == case]
    if not cases:
        raise RangeError(f"e={e} lies in no case interval of {regime.value} for b={b}, c={c}")
    return int(_m_value(cases[0], b, c, e))


def m_formula_all(regime: Regime, b: int, c: int, e) -> dict:
    """Value of every case formula whose interval contains e (boundary consistency)."""
    e = _frac(e)
    return {k.interval: int(_m_value(k, b, c, e)) for k in cases_for(regime, b, c, e)}


def regime_for(b: int, c: int) -> Regime:
    return Regime.L1 if 2 * c <= b else Regime.L2


def integer_e_values(b: int, c: int) -> list:
    """All integer e in the union of the case intervals of the applicable regime(s)."""
    out = set()
    for regime in Regime:
        if not regime_applies(regime, b, c):
            continue
        for _, lo, hi in _case_intervals(regime, b, c):
            out.update(range(-(-lo // 2), hi // 2 + 1))
    return sorted(out)


def multiplicity_support(b: int, c: int) -> list:
    """Integers e with a nonzero product multiplicity."""
    lo = -b - c - 2
    return [e for e in range(lo, b + c + 2) if product_multiplicity(b, c, e) != 0]


def divides_power(p: Polynomial, e: int, m: int) -> bool:
    q = p
    lin = X + e
    for _ in range(m):
        if q.is_zero():
            return True
        try:
            q = poly_divexact(q, lin)
        except InexactDivision:
            return False
    return True


def verify_divisibility(b: int, c: int, e, det: Optional[Polynomial] = None) -> bool:
    """(x+e)^{m(e)} divides det Delta'(x; b, c)."""
    m = product_multiplicity(b, c, e)
    if m <= 0:
        return True
    if det is None:
        det = det_poly_interp(build_delta_prime(b, c))
    return divides_power(det, int(e), m)


# -- factor extraction --------------------------------------------------------

class Extraction(enum.Enum):
    ROWS_BOTTOM = "delta1"   # (x+e)^{2e-c} from rows b+c-2e..b-1
    ROWS_LAST_C = "delta2"   # (x+e)^c from rows b-c..b-1 of the raised matrix
    ROWS_RAISED = "delta3"   # (x+e)^{2b-2e-c} from rows 2e+c-b..b-1 of the fully raised matrix


def extraction_exponent(kind: Extraction, b: int, c: int, e: int) -> int:
    if kind is Extraction.ROWS_BOTTOM:
        return max(0, 2 * e - c)
    if kind is Extraction.ROWS_LAST_C:
        return c
    return max(0, 2 * b - 2 * e - c)


def extraction_admissible(kind: Extraction, b: int, c: int, e: int) -> bool:
    if kind is Extraction.ROWS_BOTTOM:
        return delta1_in_range(b, c, e)
    if kind is Extraction.ROWS_LAST_C:
        return c <= e <= b - c
    return delta3_in_range(b, c, e)


def verify_factor_extraction(kind: Extraction, b: int, c: int, e: int,
                             det_prime: Optional[Polynomial] = None) -> bool:
    """det Delta' = (x+e)^k det(reduced matrix), as an exact polynomial identity."""
    builder = {Extraction.ROWS_BOTTOM: build_delta1, Extraction.ROWS_LAST_C: build_delta2,
               Extraction.ROWS_RAISED: build_delta3}[kind]
    reduced = det_poly_interp(builder(b, c, e))
    if det_prime is None:
        det_prime = det_poly_interp(build_delta_prime(b, c))
    k = extraction_exponent(kind, b, c, e)
    return det_prime == reduced * (X + e) ** k


def verify_row_raise_invariance(b: int, c: int, e: int) -> bool:
    """The raising row operations keep the determinant and give the closed-form entries."""
    from .matrices import raise_row_tops
    base = build_delta_prime(b, c)
    raised = raise_row_tops(base, c, e)
    direct = build_raised(b, c, e)
    return (raised.entries == direct.entries
            and det_poly_interp(direct) == det_poly_interp(base))


def verify_lowered_top(b: int, c: int) -> bool:
    return det_poly_interp(build_lowered_top(b, c)) == det_poly_interp(build_delta_prime(b, c))


# -- kernel families -------------------------------------------------------------

class Target(enum.Enum):
    DELTA1 = "delta1"
    DELTA2 = "delta2"
    DELTA3 = "delta3"
    HALF_BINOMIAL = "half_binomial"


class KernelFamily(enum.Enum):
    L1C1 = "L1C1"
    L1C2 = "L1C2"
    L1C3 = "L1C3"
    L1C4 = "L1C4"
    L2C1 = "L2C1"
    L2C2_HI = "L2C2_HI"
    L2C2_LO = "L2C2_LO"
    L2C3_HI = "L2C3_HI"
    L2C3_LO = "L2C3_LO"
    L2C4 = "L2C4"
    L4 = "L4"

    @property
    def target(self) -> Target:
        return _TARGETS[self]

    @property
    def combination_axis(self) -> str:
        return "columns" if self is KernelFamily.L4 else "rows"

    @property
    def uses_endpoint_convention(self) -> bool:
        """Whether the target may degenerate to Delta' or the fully raised matrix at range ends."""
        return self in (KernelFamily.L2C1, KernelFamily.L2C2_HI, KernelFamily.L2C2_LO,
                        KernelFamily.L2C3_HI, KernelFamily.L2C3_LO, KernelFamily.L2C4)


_TARGETS = {
    KernelFamily.L1C1: Target.DELTA1, KernelFamily.L1C2: Target.DELTA2,
    KernelFamily.L1C3: Target.DELTA2, KernelFamily.L1C4: Target.DELTA3,
    KernelFamily.L2C1: Target.DELTA1, KernelFamily.L2C2_HI: Target.DELTA1,
    KernelFamily.L2C2_LO: Target.DELTA1, KernelFamily.L2C3_HI: Target.DELTA3,
    KernelFamily.L2C3_LO: Target.DELTA3, KernelFamily.L2C4: Target.DELTA3,
    KernelFamily.L4: Target.HALF_BINOMIAL,
}


def _in_e_range(family: KernelFamily, b: int, c: int, e: int) -> bool:
    e2 = 2 * e
    if family.name.startswith("L1") and not 2 * c <= b:
        return False
    if family.name.startswith("L2") and not c <= b <= 2 * c:
        return False
    if family is KernelFamily.L1C1:
        return b - c < e2 and e <= c and c <= e2
    if family is KernelFamily.L1C2:
        return c <= e and e2 <= b and e2 > b - c
    if family is KernelFamily.L1C3:
        return b <= e2 and e <= b - c and e2 < b + c
    if family is KernelFamily.L1C4:
        return b - c <= e and e2 <= 2 * b - c and e2 < b + c
    if family is KernelFamily.L2C1:
        return b - c <= e2 and e <= b - c
    if family in (KernelFamily.L2C2_HI, KernelFamily.L2C2_LO):
        return b - c <= e and e2 <= b
    if family in (KernelFamily.L2C3_HI, KernelFamily.L2C3_LO):
        return b <= e2 and e <= c
    if family is KernelFamily.L2C4:
        return c <= e and e2 <= b + c
    raise RangeError(f"{family.value} has no e parameter")


def s_range(family: KernelFamily, b: int, c: int, e: int) -> range:
    """Admissible s; empty when the family contributes nothing at this (b, c, e)."""
    if family is KernelFamily.L4:
        raise RangeError("L4 has no s parameter")
    if not _in_e_range(family, b, c, e):
        return range(0)
    if family in (KernelFamily.L1C1, KernelFamily.L1C2, KernelFamily.L2C1):
        return range(0, 2 * e + c - b)
    if family in (KernelFamily.L1C3, KernelFamily.L1C4, KernelFamily.L2C4):
        return range(0, b + c - 2 * e)
    # The LO formulas carry (2e-c-s-1)! resp. (2b-2e-c-s-1)!, so they stop one
    # short of the threshold; the HI formulas take over from the threshold on.
    if family is KernelFamily.L2C2_HI:
        return range(max(0, 2 * e - c), b - c)
    if family is KernelFamily.L2C2_LO:
        return range(0, min(b - c, 2 * e - c))
    if family is KernelFamily.L2C3_HI:
        return range(max(0, 2 * b - 2 * e - c), b - c)
    if family is KernelFamily.L2C3_LO:
        return range(0, min(b - c, 2 * b - 2 * e - c))
    raise AssertionError(family)


def e_values(family: KernelFamily, b: int, c: int) -> list:
    if family is KernelFamily.L4:
        return []
    return [e for e in range(0, b + c + 1) if _in_e_range(family, b, c, e)]


def admissible(family: KernelFamily, b_max: int) -> list:
    """Every (b, c, e, s) tuple (L4: (b, c)) the family covers with b <= b_max."""
    out = []
    for b in range(b_max + 1):
        for c in range(b + 1):
            if family is KernelFamily.L4:
                if b % 2 == 0 and c % 2 == 0 and 2 <= c < b:
                    out.append((b, c))
                continue
            for e in e_values(family, b, c):
                for s in s_range(family, b, c, e):
                    out.append((b, c, e, s))
    return out


# The coefficient of row i is the sum over every band containing i.  Bands are
# (lo, hi, f) with inclusive bounds; an empty band has hi < lo.

def _bands_l1c1(b, c, e, s):
    def first(i):
        return (_sgn(b + c + e + i + s + 1) * Fraction(F(b + c - 2 * e - i - 1) * F(b - e - i - 1),
                F(2 * e - 2 * s - 2) * F(b - i - s - 1))
                * Fraction(F(e - s - 1) * F(2 * e - c - s - 1), F(b - 2 * e - i + s)))

    def second(i):
        return (2 * _sgn(b + c + i) * Fraction(F(b + c - 2 * e - i - 1) * F(e - s - 1),
                F(-b + e + i) * F(2 * e - 2 * s - 2))
                * Fraction(F(2 * e - c - s - 1) * F(2 * e - b + i - s - 1), F(b - i - s - 1)))

    def third(i):
        n = b - i - s - 1
        return P(1 - b - c + 2 * e + i, n) * P(1 - e + s, n) / (F(n) * P(2 - 2 * e + 2 * s, n))

    return [(0, b - 2 * e + s, first), (b - e, b + c - 2 * e - 1, second),
            (b + c - 2 * e, b - s - 1, third)]


def _bands_l1c2(b, c, e, s):
    first = _bands_l1c1(b, c, e, s)[0][2]

    def second(i):
        tot = Fraction(0)
        for k in range(i - c + 1):
            tot += (_sgn(b + e + s) * binom(2 * e - b + i - s - 1, i - c - k) * Fraction(F(e - c - k - 1), F(k))
                    * Fraction(F(c + k - s - 1) * F(e + k - s - 1), F(2 * e - 2 * s - 2)))
        return tot

    def ksum(i):
        tot = Fraction(0)
        for k in range(e - c):
            tot += _sgn(b + i + s + 1) * Fraction(
                F(2 * e - b + i - s - 1) * F(c + k - s - 1) * F(e + k - s - 1),
                F(k) * F(2 * e - 2 * s - 2) * F(c + e - b + i + k - s))
        return tot

    def fourth(i):
        return ksum(i) + (_sgn(b + c + i) * F(b - c - i - 1) * F(c - s - 1) * F(2 * e - b + i - s - 1)
                          * P(b - i - s, i - b + e) / (F(i - b + e) * F(2 * e - 2 * s - 2)))

    def fifth(i):
        n = b - i - s - 1
        return P(1 - b + c + i, n) * P(1 - b + e + i, n) / (F(n) * P(2 * e - b + i - s, n))

    return [(0, b - 2 * e + s, first), (c, e - 1, second), (e, b - e - 1, ksum),
            (b - e, b - c - 1, fourth), (b - c, b - s - 1, fifth)]


def _first_sum_upper(b, c, e, s, lead):
    """Shared k-sum over the top rows of the raised-matrix families."""
    def f(i, k_max):
        tot = Fraction(0)
        for k in range(k_max + 1):
            tot += (_sgn(c + e + i + k + s + 1) * binom(c - i - 1, b + c - 2 * e + k - s - 1)
                    * Fraction(F(lead), F(k))
                    * Fraction(F(b - e - s - 1) * F(c + k - s - 1) * F(b - e + k - s - 1),
                               F(2 * b - 2 * e - 2 * s - 2) * F(2 * b - 2 * e + k - 2 * s - 1)))
        return tot
    return f


def _bands_l1c3(b, c, e, s):
    inner = _first_sum_upper(b, c, e, s, 2 * b - c - 2 * e - s - 1)

    def first(i):
        return inner(i, 2 * e - b - i + s)

    def second(i):
        return (_sgn(b + e + s) * Fraction(F(e - i - 1) * F(b - e - s - 1), F(b - c - 2 * e + i))
                * F(b - 2 * e + i - s - 1) * P(b - i - s, b - c - 2 * e + i) / F(2 * b - 2 * e - 2 * s - 2))

    def third(i):
        head = (_sgn(b + c + i) * F(b - c - i - 1) * F(c - s - 1) * F(b - 2 * e + i - s - 1)
                * P(b - i - s, i - e) / (F(i - e) * F(2 * b - 2 * e - 2 * s - 2)))
        tot = Fraction(0)
        for k in range(b - c - e):
            tot += _sgn(b + i + s + 1) * Fraction(
                F(b - 2 * e + i - s - 1) * F(c + k - s - 1) * F(b - e + k - s - 1),
                F(k) * F(2 * b - 2 * e - 2 * s - 2) * F(c - e + i + k - s))
        return head + tot

    def fourth(i):
        n = b - i - s - 1
        return P(1 - b + c + i, n) * P(1 - e + i, n) / (F(n) * P(b - 2 * e + i - s, n))

    return [(0, 2 * e - b + s, first), (2 * e + c - b, e - 1, second), (e, b - c - 1, third),
            (b - c, b - s - 1, fourth)]


def _bands_l1c4(b, c, e, s):
    inner = _first_sum_upper(b, c, e, s, 2 * b - c - 2 * e - s - 1)

    def first(i):
        return inner(i, 2 * e - b - i + s)

    def second(i):
        n = b - i - s - 1
        return (2 * _sgn(c + s) * F(2 * e + c - b - i - 1) * F(2 * b - c - 2 * e - s - 1)
                * P(1 - e + i, n) / (F(n) * P(b - 2 * e + i - s, n)))

    def third(i):
        n = b - i - s - 1
        return (_sgn(n) * P(1 + b - c - 2 * e + i, n) * P(1 - e + i, n)
                / (F(n) * P(b - 2 * e + i - s, n)))

    return [(0, 2 * e - b + s, first), (e, 2 * e + c - b - 1, second),
            (2 * e + c - b, b - s - 1, third)]


def _bands_l2c1(b, c, e, s):
    def first(i):
        return (_sgn(b + c + e + i + s + 1) * Fraction(F(b + c - 2 * e - i - 1) * F(b - e - i - 1),
                F(2 * e - 2 * s - 2) * F(b - i - s - 1))
                * Fraction(F(e - s - 1) * F(2 * e + c - b - s - 1), F(b - 2 * e - i + s)))

    def second(i):
        return (2 * _sgn(b + c + i) * Fraction(F(b + c - 2 * e - i - 1) * F(e - s - 1),
                F(i + e - b) * F(2 * e - 2 * s - 2))
                * Fraction(F(2 * e + c - b - s - 1) * F(2 * e - b + i - s - 1), F(b - i - s - 1)))

    def third(i):
        n = b - i - s - 1
        return P(1 - b - c + 2 * e + i, 2 * c - i - s - 1) * P(1 - e + s, n) / (F(n) * P(2 - 2 * e + 2 * s, n))

    bands = [(0, b - 2 * e + s, first), (b - e, min(b + c - 2 * e - 1, b - s - 1), second)]
    # The rows b+c-2e..b-s-1 exist only for s < 2e-c; guarding on s >= 2e-c
    # instead would leave this band empty for every s and the sum nonzero.
    if s < 2 * e - c:
        bands.append((b + c - 2 * e, b - s - 1, third))
    return bands


def _hi_lower(b, c, e, s):
    def f(i):
        n = b - i - s - 1
        return (_sgn(c + i) * F(b - c - s - 1) * P(1 + c - 2 * e + s, n)
                * P(1 - b + 2 * c - i + s, b - c - s - 1) / (F(2 * b - 2 * c - 2 * s - 2) * F(n)))
    return f


def _bands_l2c2_hi(b, c, e, s):
    lower = _hi_lower(b, c, e, s)
    return [(0, 2 * c - b + s, lambda i: lower(i) / 2), (c, b - s - 1, lower)]


def _lo_upper(b, c, e, s):
    def f(i):
        n = b - i - s - 1
        return (_sgn(i + s + 1) * Fraction(F(b - c - s - 1) * F(b + c - 2 * e - i - 1), F(2 * b - 2 * c - 2 * s - 2))
                * F(2 * e - c - s - 1) * P(1 - b + 2 * c - i + s, b - c - s - 1) / F(n))
    return f


def _bands_l2c2_lo(b, c, e, s):
    upper = _lo_upper(b, c, e, s)
    return [(0, 2 * c - b + s, upper), (c, b + c - 2 * e - 1, lambda i: 2 * upper(i)),
            (b + c - 2 * e, b - s - 1, _hi_lower(b, c, e, s))]


def _raised_lower(b, c, e, s):
    def f(i):
        n = b - i - s - 1
        return (F(b - c - s - 1) * P(1 - c + i, b - c - s - 1) * P(1 - 2 * b + c + 2 * e + s, n)
                / (F(2 * b - 2 * c - 2 * s - 2) * F(n)))
    return f


def _bands_l2c3_hi(b, c, e, s):
    lower = _hi_lower(b, c, e, s)
    return [(0, 2 * c - b + s, lambda i: lower(i) / 2), (c, b - s - 1, _raised_lower(b, c, e, s))]


def _bands_l2c3_lo(b, c, e, s):
    def middle(i):
        n = b - i - s - 1
        return (2 * _sgn(c + s) * Fraction(F(b - c - s - 1) * F(2 * e + c - b - i - 1) * F(2 * b - c - 2 * e - s - 1),
                                           F(2 * b - 2 * c - 2 * s - 2))
                * P(1 - c + i, b - c - s - 1) / F(n))

    return [(0, 2 * c - b + s, _lo_upper(b, c, e, s)), (c, 2 * e + c - b - 1, middle),
            (2 * e + c - b, b - s - 1, _raised_lower(b, c, e, s))]


def _bands_l2c4(b, c, e, s):
    inner = _first_sum_upper(b, c, e, s, b + c - 2 * e - s - 1)

    def first(i):
        return inner(i, c - i - 1)

    def second(i):
        n = b - i - s - 1
        return (2 * _sgn(c + s) * Fraction(F(2 * e + c - b - i - 1) * F(b + c - 2 * e - s - 1), F(n))
                * P(1 - e + i, n) / P(b - 2 * e + i - s, n))

    def third(i):
        n = b - i - s - 1
        return (_sgn(b + i + s + 1) * P(1 + b - c - 2 * e + i, 2 * c - i - s - 1) / F(n)
                * P(1 - e + i, n) / P(b - 2 * e + i - s, n))

    bands = [(0, 2 * e - b + s, first), (e, min(2 * e + c - b - 1, b - s - 1), second)]
    # Same guard direction as in the L2C1 family.
    if s < 2 * b - 2 * e - c:
        bands.append((2 * e + c - b, b - s - 1, third))
    return bands


_BANDS: dict = {
    KernelFamily.L1C1: _bands_l1c1, KernelFamily.L1C2: _bands_l1c2,
    KernelFamily.L1C3: _bands_l1c3, KernelFamily.L1C4: _bands_l1c4,
    KernelFamily.L2C1: _bands_l2c1, KernelFamily.L2C2_HI: _bands_l2c2_hi,
    KernelFamily.L2C2_LO: _bands_l2c2_lo, KernelFamily.L2C3_HI: _bands_l2c3_hi,
    KernelFamily.L2C3_LO: _bands_l2c3_lo, KernelFamily.L2C4: _bands_l2c4,
}


def column_kernel_half_binomial(b: int, c: int) -> list:
    """Coefficients of the vanishing column combination, columns j = c..b-1."""
    if b % 2 or c % 2 or b <= c or c < 0:
        raise ParityError(f"need even b > c >= 0, got b={b}, c={c}")
    half = Fraction(1 - b, 2)
    return [_sgn(j) * P(1 - b + c, j - c) * P(half, j - c) / (F(j - c) * P(1 - b, j - c))
            for j in range(c, b)]


def kernel_coeffs(family: KernelFamily, b: int, c: int, e: int = 0, s: int = 0) -> list:
    """Full-length coefficient vector over the rows (L4: columns) of the target."""
    if family is KernelFamily.L4:
        return column_kernel_half_binomial(b, c)
    if s not in s_range(family, b, c, e):
        raise RangeError(f"{family.value}: (b,c,e,s)=({b},{c},{e},{s}) is not admissible")
    vec = [Fraction(0)] * b
    for lo, hi, f in _BANDS[family](b, c, e, s):
        for i in range(lo, hi + 1):
            if not 0 <= i < b:
                raise RangeError(f"{family.value}: band row {i} outside 0..{b - 1}")
            vec[i] += f(i)
    return vec


def target_matrix(family: KernelFamily, b: int, c: int, e: int = 0) -> ExactMatrix:
    t = family.target
    if t is Target.DELTA1:
        return build_delta1(b, c, e)
    if t is Target.DELTA2:
        return build_delta2(b, c, e)
    if t is Target.DELTA3:
        return build_delta3(b, c, e)
    return build_half_binomial(b, c)


@dataclass(frozen=True)
class KernelResult:
    family: KernelFamily
    params: tuple
    residuals: tuple  # one per column (L4: per row)
    last_nonzero: int

    @property
    def ok(self) -> bool:
        return all(r == 0 for r in self.residuals)

    @property
    def first_failing(self) -> Optional[int]:
        for k, r in enumerate(self.residuals):
            if r != 0:
                return k
        return None

    def __bool__(self):
        return self.ok


def kernel_residuals(family: KernelFamily, b: int, c: int, e: int = 0, s: int = 0) -> KernelResult:
    coeffs = kernel_coeffs(family, b, c, e, s)
    m = target_matrix(family, b, c, e)
    if family is KernelFamily.L4:
        rows = m.scalar_rows()
        res = tuple(sum((co * r[j] for j, co in enumerate(coeffs)), Fraction(0)) for r in rows)
        params = (b, c)
    else:
        rows = m.evaluate(-e)
        res = tuple(sum((coeffs[i] * rows[i][j] for i in range(b)), Fraction(0)) for j in range(m.cols))
        params = (b, c, e, s)
    last = max((k for k, v in enumerate(coeffs) if v != 0), default=-1)
    return KernelResult(family, params, res, last)


def verify_kernel(family: KernelFamily, b: int, c: int, e: int = 0, s: int = 0) -> bool:
    return kernel_residuals(family, b, c, e, s).ok


def staircase_ok(family: KernelFamily, b: int, c: int, e: int) -> bool:
    """Vectors for the admissible s have last nonzero entry at row b-s-1, so they are independent."""
    for s in s_range(family, b, c, e):
        v = kernel_coeffs(family, b, c, e, s)
        last = max((k for k, x in enumerate(v) if x != 0), default=-1)
        if last != b - s - 1:
            return False
    return True


def kernel_rank(vectors: list) -> int:
    """Rank over Q by plain Gaussian elimination."""
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * p for a, p in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# -- the two auxiliary evaluations ---------------------------------------------

def toeplitz_closed_form(n: int, c: int, x):
    """prod_{i=1}^n (x+i-c)_c / (i)_c for scalar or polynomial x."""
    if isinstance(x, Polynomial):
        out = Polynomial.const(1)
        den = Fraction(1)
        for i in range(1, n + 1):
            for t in range(c):
                out = out * (x + (i - c + t))
            den *= P(i, c)
        return out / den
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= P(Fraction(x) + i - c, c) / P(i, c)
    return out


def verify_toeplitz_evaluation(n: int, c: int, symbolic: bool = True,
                               rng: Optional[random.Random] = None) -> bool:
    if n < 0 or c < 0:
        raise RangeError(f"need n, c >= 0, got n={n}, c={c}")
    if symbolic:
        return det_poly_interp(build_binomial_toeplitz(n, c, X)) == toeplitz_closed_form(n, c, X)
    rng = rng or random.Random(0)
    for _ in range(3):
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
        if det_rational(build_binomial_toeplitz(n, c, x)) != toeplitz_closed_form(n, c, x):
            return False
    return True


def verify_half_binomial_singular(b: int, c: int) -> bool:
    if b % 2 or c % 2 or b <= c:
        raise ParityError(f"need even b > c, got b={b}, c={c}")
    return det_rational(build_half_binomial(b, c)) == 0 and verify_kernel(KernelFamily.L4, b, c)


@dataclass(frozen=True)
class SpecialValueCheck:
    determinant: Fraction
    closed_form: Fraction
    via_toeplitz: Fraction
    correction: Fraction  # the subtracted singular determinant term (even branch)

    @property
    def ok(self) -> bool:
        return self.determinant == self.closed_form == self.via_toeplitz and self.correction == 0


def special_value_check(b: int, c: int) -> SpecialValueCheck:
    sign = (-1) ** (c * (b - c))
    if b % 2 == 1:
        x = Fraction(-b, 2)
        det = det_poly_interp(build_delta_prime(b, c))(x)
        toeplitz = sign * 2 ** c * det_rational(build_binomial_toeplitz(b - c, c, Fraction(2 * c - b, 2)))
        return SpecialValueCheck(det, special_value_odd(b, c), toeplitz, Fraction(0))
    if c % 2:
        raise ParityError(f"b={b} even needs c even, got c={c}")
    x = Fraction(1 - b, 2)
    det = det_poly_interp(build_delta_prime(b, c))(x)
    main = sign * 2 ** c * det_rational(build_binomial_toeplitz(b - c, c, Fraction(2 * c - b + 1, 2)))
    corr = Fraction(0)
    if b > c > 0:
        corr = sign * Fraction(2) ** (c - 1) * det_rational(build_half_binomial(b, c))
    return SpecialValueCheck(det, special_value_even(b, c), main - corr, corr)


def verify_special_values(b: int, c: int) -> bool:
    return special_value_check(b, c).ok
