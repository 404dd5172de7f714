"""Terminating hypergeometric series and the summation/transformation rules used by the proofs.

Gamma ratios are evaluated exactly by pairing arguments whose difference is an
integer, so Gamma(a)/Gamma(b) becomes the shifted factorial (b)_{a-b}.

Parameters other than the termination index may carry a *slope*: the
coefficient of a small perturbation eps applied to the free parameters.  The
limit eps -> 0 then resolves 0/0 and inf/inf situations in the gamma factors.
An argument with slope 0 stays put; a denominator pole of that kind makes the
whole expression vanish identically, whatever the other factors do.
"""

from __future__ import annotations

import enum
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .combinat import binom, inv_factorial, pochhammer_rat
from .errors import DegenerateLower, NonTerminating, NumeratorPole, UnmatchedArguments

Rational = Fraction
HALF = Fraction(1, 2)


def _is_nonpos_int(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


# -- series ----------------------------------------------------------------

@dataclass(frozen=True)
class HyperSeries:
    uppers: tuple
    lowers: tuple
    argument: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "uppers", tuple(Fraction(a) for a in self.uppers))
        object.__setattr__(self, "lowers", tuple(Fraction(b) for b in self.lowers))
        object.__setattr__(self, "argument", Fraction(self.argument))

    def termination_index(self):
        """n = min(-a) over nonpositive-integer uppers, or None."""
        ns = [-int(a) for a in self.uppers if _is_nonpos_int(a)]
        return min(ns) if ns else None


def pfq_sum(series: HyperSeries, terms: int | None = None) -> Fraction:
    """Exact sum of the terminating series; ``terms`` caps a non-terminating one."""
    n = series.termination_index()
    if n is None:
        if terms is None:
            raise NonTerminating(f"no nonpositive-integer upper in {series.uppers}")
        n = terms - 1
    for b in series.lowers:
        # (b)_k for k <= n uses the factors b, ..., b+n-1
        if _is_nonpos_int(b) and -b <= n - 1:
            raise DegenerateLower(f"lower parameter {b} vanishes inside 0..{n}")
    total = Fraction(0)
    term = Fraction(1)
    z = series.argument
    for k in range(n + 1):
        total += term
        num = z
        for a in series.uppers:
            num *= a + k
        den = Fraction(k + 1)
        for b in series.lowers:
            den *= b + k
        if num == 0:
            break
        term = term * num / den
    return total


# -- gamma ratios ----------------------------------------------------------

class _ZeroType:
    """Sentinel for an expression forced to vanish by a denominator pole."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"

    def __eq__(self, other):
        return other is self or (not isinstance(other, _ZeroType) and other == 0)

    def __hash__(self):
        return 0


Zero = _ZeroType()


@dataclass(frozen=True)
class GammaRatio:
    """prod Gamma(numerator_args) / prod Gamma(denominator_args).

    The optional slope tuples run parallel to the argument tuples; missing
    slopes mean 0.
    """
    numerator_args: tuple
    denominator_args: tuple
    numerator_slopes: tuple = field(default=())
    denominator_slopes: tuple = field(default=())

    def __post_init__(self):
        for name in ("numerator", "denominator"):
            args = tuple(Fraction(a) for a in getattr(self, f"{name}_args"))
            slopes = getattr(self, f"{name}_slopes") or (0,) * len(args)
            if len(slopes) != len(args):
                raise ValueError(f"{name} slopes do not match arguments")
            object.__setattr__(self, f"{name}_args", args)
            object.__setattr__(self, f"{name}_slopes", tuple(Fraction(s) for s in slopes))


def _shifted_leading(b: Fraction, s: Fraction, n: int):
    """Leading (order, coefficient) of (b + s*eps)_n as eps -> 0.

    Slope 0 is read as a common unit shift of both gamma arguments.
    """
    s = s or Fraction(1)
    order, coeff = 0, Fraction(1)
    if n >= 0:
        for t in range(n):
            f = b + t
            if f == 0:
                order += 1
                coeff *= s
            else:
                coeff *= f
        return order, coeff
    for t in range(1, -n + 1):
        f = b - t
        if f == 0:
            order -= 1
            coeff /= s
        else:
            coeff /= f
    return order, coeff


def gamma_ratio_eval(gr: GammaRatio):
    """Exact value of a gamma ratio, or ``Zero``.

    Arguments pair up when they share a slope and differ by an integer; since
    that relation is an equivalence, a matching exists iff every class has as
    many numerator as denominator members, and the product does not depend on
    which matching is used.
    """
    groups: dict = defaultdict(lambda: ([], []))
    for a, s in zip(gr.numerator_args, gr.numerator_slopes):
        groups[(s, a - (a.numerator // a.denominator))][0].append(a)
    for b, s in zip(gr.denominator_args, gr.denominator_slopes):
        groups[(s, b - (b.numerator // b.denominator))][1].append(b)

    fixed_den_poles = fixed_num_poles = 0
    unmatched = False
    for (s, _), (nums, dens) in groups.items():
        if len(nums) != len(dens):
            unmatched = True
            if s == 0:
                fixed_num_poles += sum(1 for a in nums if _is_nonpos_int(a))
                fixed_den_poles += sum(1 for b in dens if _is_nonpos_int(b))
    if fixed_den_poles > fixed_num_poles:
        return Zero
    if unmatched:
        raise UnmatchedArguments(
            f"no integer-difference matching for {gr.numerator_args} / {gr.denominator_args}")

    order, value = 0, Fraction(1)
    for (s, _), (nums, dens) in sorted(groups.items()):
        for a, b in zip(sorted(nums), sorted(dens)):
            o, v = _shifted_leading(b, s, int(a - b))
            order += o
            value *= v
    if order > 0:
        return Zero
    if order < 0:
        raise NumeratorPole(f"numerator gamma pole in {gr.numerator_args}")
    return value


def _as_value(v) -> Fraction:
    return Fraction(0) if v is Zero else v



# -- summation rules -------------------------------------------------------
# Each rule has a *_values function returning (lhs, rhs) and a verify_* wrapper.

def saalschutz_rhs(A, B, C, n: int) -> Fraction:
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    den = pochhammer_rat(C, n) * pochhammer_rat(C - A - B, n)
    if den == 0:
        raise DegenerateLower(f"(C)_n (C-A-B)_n vanishes for C={C}, A+B={A + B}")
    return pochhammer_rat(C - A, n) * pochhammer_rat(C - B, n) / den


def saalschutz_values(A, B, C, n: int) -> tuple:
    """Balanced terminating 3F2 at unit argument and its product form."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    lhs = pfq_sum(HyperSeries((A, B, -n), (C, 1 + A + B - C - n)))
    return lhs, saalschutz_rhs(A, B, C, n)


def verify_saalschutz(A, B, C, n: int) -> bool:
    lhs, rhs = saalschutz_values(A, B, C, n)
    return lhs == rhs


def chu_vandermonde_values(A, C, n: int) -> tuple:
    A, C = Fraction(A), Fraction(C)
    lhs = pfq_sum(HyperSeries((A, -n), (C,)))
    return lhs, pochhammer_rat(C - A, n) / pochhammer_rat(C, n)


def verify_chu_vandermonde(A, C, n: int) -> bool:
    lhs, rhs = chu_vandermonde_values(A, C, n)
    return lhs == rhs


def binomial_convolution_values(p: int, r, m: int) -> tuple:
    """sum_t binom(p, t) binom(r, m - t) and binom(p + r, m), for integer p >= 0."""
    r = Fraction(r)
    lhs = sum((binom(p, t) * binom(r, m - t) for t in range(p + 1)), Fraction(0))
    return lhs, binom(p + r, m)


def verify_binomial_convolution(p: int, r, m: int) -> bool:
    lhs, rhs = binomial_convolution_values(p, r, m)
    return lhs == rhs


def binomial_1f0_values(n: int) -> tuple:
    return pfq_sum(HyperSeries((-n,), ())), Fraction(1 if n == 0 else 0)


def verify_binomial_1f0(n: int) -> bool:
    lhs, rhs = binomial_1f0_values(n)
    return lhs == rhs


def row_vanishing_values(b: int, c: int, i: int) -> tuple:
    """The 3F2 with uppers 1/2-b/2, 1-b+c, -i, for even b, c and c < i < b.

    The series is balanced, so its value is the balanced product, which
    contains (-c)_i = 0.  Returns (series sum, product value).
    """
    if b % 2 or c % 2 or not c < i < b:
        raise ValueError(f"need b, c even and c < i < b, got ({b}, {c}, {i})")
    A = HALF - Fraction(b, 2)
    B = Fraction(1 - b + c)
    C = Fraction(1 - b)
    series = HyperSeries((A, B, -i), (C, Fraction(3, 2) - Fraction(b, 2) + c - i))
    if series.lowers[1] != 1 + A + B - C - i:  # pragma: no cover
        raise AssertionError("series is not balanced")
    return pfq_sum(series), saalschutz_rhs(A, B, C, i)


def verify_saalschutz_row_vanishing(b: int, c: int, i: int) -> bool:
    lhs, rhs = row_vanishing_values(b, c, i)
    return lhs == rhs == 0


# -- Watson ----------------------------------------------------------------

def watson_gamma_ratio(A, B, C, slope_b=Fraction(1), slope_c=Fraction(1, 3)) -> GammaRatio:
    """Gamma factors of the Watson sum with A held fixed and B, C perturbed."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    sb, sc = Fraction(slope_b), Fraction(slope_c)
    num = (HALF, HALF + C, HALF + A / 2 + B / 2, HALF - A / 2 - B / 2 + C)
    num_s = (0, sc, sb / 2, sc - sb / 2)
    den = (HALF + A / 2, HALF + B / 2, HALF - A / 2 + C, HALF - B / 2 + C)
    den_s = (0, sb / 2, sc, sc - sb / 2)
    return GammaRatio(num, den, num_s, den_s)


def watson_series(A, B, C) -> HyperSeries:
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    return HyperSeries((A, B, C), ((1 + A + B) / 2, 2 * C))


def watson_values(A, B, C) -> tuple:
    """A must be the terminating (nonpositive integer) upper."""
    A = Fraction(A)
    if not _is_nonpos_int(A):
        raise NonTerminating(f"A={A} is not a nonpositive integer")
    lhs = pfq_sum(watson_series(A, B, C))
    return lhs, _as_value(gamma_ratio_eval(watson_gamma_ratio(A, B, C)))


def verify_watson(A, B, C) -> bool:
    lhs, rhs = watson_values(A, B, C)
    return lhs == rhs


# -- Thomae ----------------------------------------------------------------

class ThomaeRule(enum.Enum):
    """Three 3F2 transformations, named by what they keep fixed."""
    KEEP_FIRST = "KEEP_FIRST"        # first upper kept, gamma prefactor
    TERMINATING = "TERMINATING"      # -n kept, shifted-factorial prefactor
    SIGMA = "SIGMA"                  # excess sigma moves into the uppers


# generic slopes for the free parameters B, C, D, E
_SLOPES = {"B": Fraction(1), "C": Fraction(1, 3), "D": Fraction(1, 7), "E": Fraction(1, 11)}


def _lin(**coef) -> Fraction:
    return sum((Fraction(v) * _SLOPES[k] for k, v in coef.items()), Fraction(0))


def thomae_sides(rule: ThomaeRule, params: dict):
    """(lhs series, prefactor, rhs series) for a rule; the prefactor may be ``Zero``."""
    p = {k: Fraction(v) for k, v in params.items() if k != "n"}
    n = params["n"]
    if rule is ThomaeRule.TERMINATING:
        A, B, D, E = p["A"], p["B"], p["D"], p["E"]
        lhs = HyperSeries((A, B, -n), (D, E))
        if pochhammer_rat(E, n) == 0:
            raise DegenerateLower(f"(E)_n vanishes for E={E}")
        pref = pochhammer_rat(E - B, n) / pochhammer_rat(E, n)
        rhs = HyperSeries((-n, B, D - A), (D, 1 + B - E - n))
        return lhs, pref, rhs
    B, C, D, E = p["B"], p["C"], p["D"], p["E"]
    A = Fraction(-n)
    sigma = -A - B - C + D + E
    lhs = HyperSeries((A, B, C), (D, E))
    if rule is ThomaeRule.KEEP_FIRST:
        gr = GammaRatio((E, sigma), (E - A, -B - C + D + E),
                        (_lin(E=1), _lin(B=-1, C=-1, D=1, E=1)),
                        (_lin(E=1), _lin(B=-1, C=-1, D=1, E=1)))
        rhs = HyperSeries((A, D - B, D - C), (D, -B - C + D + E))
    elif rule is ThomaeRule.SIGMA:
        # B = D + m keeps D - B a nonpositive integer; B shares D's slope
        gr = GammaRatio((D, E, sigma), (B, -A - B + D + E, -B - C + D + E),
                        (_lin(D=1), _lin(E=1), _lin(C=-1, E=1)),
                        (_lin(D=1), _lin(E=1), _lin(C=-1, E=1)))
        rhs = HyperSeries((D - B, E - B, sigma), (-A - B + D + E, -B - C + D + E))
    else:  # pragma: no cover
        raise ValueError(rule)
    return lhs, gamma_ratio_eval(gr), rhs


def _refuse_ambiguous(series: HyperSeries, fixed: int):
    """Refuse a series whose value is only defined as a limit in the free parameters.

    That happens when an upper other than the fixed terminating one is a
    nonpositive integer while some lower is one too: the perturbed series then
    runs past the exact truncation point.
    """
    free_stop = any(_is_nonpos_int(a) for k, a in enumerate(series.uppers) if k != fixed)
    if free_stop and any(_is_nonpos_int(b) for b in series.lowers):
        raise DegenerateLower(f"ambiguous truncation in {series}")


# position of the fixed terminating upper on each side
_FIXED = {ThomaeRule.KEEP_FIRST: (0, 0), ThomaeRule.TERMINATING: (2, 0), ThomaeRule.SIGMA: (0, 0)}


def thomae_values(rule: ThomaeRule, params: dict) -> tuple:
    lhs, pref, rhs = thomae_sides(rule, params)
    _refuse_ambiguous(lhs, _FIXED[rule][0])
    _refuse_ambiguous(rhs, _FIXED[rule][1])
    left = pfq_sum(lhs)
    # evaluate first: a degenerate right series next to a Zero prefactor is 0 * inf
    right = pfq_sum(rhs)
    return left, _as_value(pref) * right


def verify_thomae(rule: ThomaeRule, params: dict) -> bool:
    lhs, rhs = thomae_values(rule, params)
    return lhs == rhs


# -- random admissible parameters -------------------------------------------

def random_generic(rng: random.Random, lo: int = -6, hi: int = 6) -> Fraction:
    """A random non-integer rational with a small denominator."""
    while True:
        v = Fraction(rng.randint(lo * 12, hi * 12), rng.choice((2, 3, 4, 5, 6, 7)))
        if v.denominator != 1:
            return v


def _g(r: random.Random) -> Fraction:
    return random_generic(r)


def _sigma_params(r: random.Random, n_max: int) -> dict:
    D = _g(r)
    return {"B": D + r.randint(0, n_max), "C": _g(r), "D": D, "E": _g(r), "n": r.randint(0, n_max)}


# rule -> (parameter builder, values function)
_RULES = {
    "binomial_1f0": (lambda r, n: {"n": r.randint(0, n)},
                     lambda p: binomial_1f0_values(p["n"])),
    "binomial_convolution": (lambda r, n: {"p": r.randint(0, n), "r": _g(r), "m": r.randint(-2, 2 * n)},
                             lambda p: binomial_convolution_values(p["p"], p["r"], p["m"])),
    "chu_vandermonde": (lambda r, n: {"A": _g(r), "C": _g(r), "n": r.randint(0, n)},
                        lambda p: chu_vandermonde_values(p["A"], p["C"], p["n"])),
    "saalschutz": (lambda r, n: {"A": _g(r), "B": _g(r), "C": _g(r), "n": r.randint(0, n)},
                   lambda p: saalschutz_values(p["A"], p["B"], p["C"], p["n"])),
    "thomae_keep_first": (lambda r, n: {"B": _g(r), "C": _g(r), "D": _g(r), "E": _g(r),
                                        "n": r.randint(0, n)},
                          lambda p: thomae_values(ThomaeRule.KEEP_FIRST, p)),
    "thomae_sigma": (_sigma_params, lambda p: thomae_values(ThomaeRule.SIGMA, p)),
    "thomae_terminating": (lambda r, n: {"A": _g(r), "B": _g(r), "D": _g(r), "E": _g(r),
                                         "n": r.randint(0, n)},
                           lambda p: thomae_values(ThomaeRule.TERMINATING, p)),
    "watson": (lambda r, n: {"A": -r.randint(0, n), "B": _g(r), "C": _g(r)},
               lambda p: watson_values(p["A"], p["B"], p["C"])),
    # A negative and odd: the right side has a fixed denominator pole
    "watson_odd": (lambda r, n: {"A": -(2 * r.randint(0, (n - 1) // 2) + 1), "B": _g(r), "C": _g(r)},
                   lambda p: watson_values(p["A"], p["B"], p["C"])),
}

RULES = tuple(sorted(_RULES))


def rule_values(rule: str, params: dict) -> tuple:
    return _RULES[rule][1](params)


def random_case(rule: str, rng: random.Random, n_max: int = 8, attempts: int = 200):
    """One random admissible instance of ``rule``: (params, lhs, rhs).

    Draws that violate a precondition (degenerate lower, unmatched gammas) are
    redrawn, so every returned instance is in the verifier's domain.
    """
    build, values = _RULES[rule]
    for _ in range(attempts):
        params = build(rng, n_max)
        try:
            lhs, rhs = values(params)
        except (DegenerateLower, UnmatchedArguments, NumeratorPole, ZeroDivisionError):
            continue
        return params, lhs, rhs
    raise RuntimeError(f"no admissible parameters found for {rule}")


def fixed_instances() -> list:
    """Hand-checkable instances run alongside the random ones: (rule, params, lhs, rhs)."""
    F = Fraction
    cases = [
        ("saalschutz", {"A": 2, "B": 3, "C": 7, "n": 1}),
        ("saalschutz", {"A": F(1, 2), "B": F(-1, 3), "C": F(5, 4), "n": 3}),
        ("chu_vandermonde", {"A": 3, "C": F(1, 2), "n": 2}),
        ("thomae_terminating", {"A": F(1, 2), "B": 2, "D": 3, "E": F(7, 2), "n": 2}),
        ("thomae_keep_first", {"B": F(1, 3), "C": F(1, 5), "D": F(4, 3), "E": F(6, 5), "n": 2}),
        ("watson", {"A": -1, "B": -1, "C": F(-3, 2)}),
        ("watson", {"A": -2, "B": F(1, 2), "C": 2}),
        ("binomial_1f0", {"n": 0}),
        ("binomial_1f0", {"n": 1}),
        ("binomial_1f0", {"n": 4}),
    ]
    out = [(rule, p) + rule_values(rule, p) for rule, p in cases]
    for b, c, i in ((4, 2, 3), (6, 2, 3), (6, 4, 5)):
        p = {"b": b, "c": c, "i": i}
        out.append(("row_vanishing", p) + row_vanishing_values(b, c, i))
    return out


def series_terms(series: HyperSeries) -> list:
    """The individual terms, used by tests as a termwise oracle."""
    n = series.termination_index()
    out = []
    for k in range(n + 1):
        t = series.argument ** k * inv_factorial(k)
        for a in series.uppers:
            t *= pochhammer_rat(a, k)
        for b in series.lowers:
            t /= pochhammer_rat(b, k)
        out.append(t)
    return out
