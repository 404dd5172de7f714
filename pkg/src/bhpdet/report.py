"""Verification sweeps and their deterministic reports.

Every sweep is split into independent tasks (one per (b, c), family or rule).
Tasks run in a process pool when ``jobs > 1``; the collected checks are
sorted before emission, so the report does not depend on scheduling.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import hyper
from .closed_form import (check_block_reduction, conjecture_magnitude, delta_closed_form,
                          vanishes_by_parity)
from .config import SweepConfig
from .det import det_poly_interp, det_rational
from .errors import UsageError
from .lemmas import (Extraction, KernelFamily, Regime, admissible, extraction_admissible,
                     extraction_exponent, integer_e_values, kernel_residuals, m_formula_all,
                     multiplicity_support, product_multiplicity, regime_applies,
                     special_value_check, toeplitz_closed_form, verify_factor_extraction,
                     verify_lowered_top, verify_row_raise_invariance)
from .matrices import (build_binomial_toeplitz, build_conjecture, build_delta, build_delta1,
                       build_delta2, build_delta3, build_delta_prime, build_half_binomial)
from .polynomial import X, Polynomial, to_canonical

AUX_FAMILIES = ("DIVISIBILITY", "EXTRACTION", "HALF_BINOMIAL", "MULTIPLICITY", "REDUCTION",
                "SPECIAL_VALUES", "TOEPLITZ")
LEMMA_FAMILIES = tuple(f.value for f in KernelFamily) + AUX_FAMILIES


@dataclass(frozen=True)
class Check:
    name: str
    params: dict
    status: str  # pass | fail | skipped
    lhs: str
    rhs: str
    elapsed_ms: int = 0  # kept at 0 so reports are byte-identical across runs


@dataclass
class VerificationReport:
    run_id: str
    master_seed: int
    params: dict
    checks: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def failed(self) -> int:
        return self.summary.get("failed", 0)

    def to_json(self) -> str:
        body = asdict(self)
        return json.dumps(body, indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "params", "status", "lhs", "rhs", "elapsed_ms"])
        for c in self.checks:
            w.writerow([c.name, json.dumps(c.params, sort_keys=True), c.status, c.lhs, c.rhs,
                        c.elapsed_ms])
        return buf.getvalue()

    def render(self, fmt: str = "json") -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise UsageError(f"unknown format {fmt!r}")


def _canon(v) -> str:
    if isinstance(v, Polynomial):
        return to_canonical(v)
    return to_canonical(Polynomial.const(Fraction(v)))


def _check(name: str, params: dict, lhs, rhs, ok: bool | None = None) -> Check:
    l, r = _canon(lhs), _canon(rhs)
    if ok is None:
        ok = l == r
    return Check(name, params, "pass" if ok else "fail", l, r)


def _param_key(params: dict) -> tuple:
    # ints before strings within each slot, so numeric parameters sort numerically
    out = []
    for k, v in params.items():
        if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
            out.append((k, 0, Fraction(v), ""))
        else:
            out.append((k, 1, Fraction(0), str(v)))
    return tuple(out)


def _json_value(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


def build_report(cfg: SweepConfig, checks: list) -> VerificationReport:
    checks = [Check(c.name, {k: _json_value(v) for k, v in c.params.items()}, c.status, c.lhs,
                    c.rhs, c.elapsed_ms) for c in checks]
    checks.sort(key=lambda c: (c.name, _param_key(c.params)))
    summary = {
        "total": len(checks),
        "passed": sum(c.status == "pass" for c in checks),
        "failed": sum(c.status == "fail" for c in checks),
        "skipped": sum(c.status == "skipped" for c in checks),
    }
    params = cfg.params()
    digest = hashlib.sha256(
        json.dumps([cfg.command, params, cfg.seed], sort_keys=True).encode()).hexdigest()
    return VerificationReport(f"{cfg.command}-{digest[:16]}", cfg.seed, params, checks, summary)


def _run(tasks: list, fn, jobs: int) -> list:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, tasks))
    else:
        parts = [fn(t) for t in tasks]
    return [c for part in parts for c in part]


# -- theorem ---------------------------------------------------------------

def theorem_task(bc: tuple) -> list:
    b, c = bc
    p = {"b": b, "c": c}
    det = det_poly_interp(build_delta(b, c))
    rhs = delta_closed_form(b, c)
    out = [_check("delta_product", p, det, rhs)]
    if vanishes_by_parity(b, c):
        out.append(_check("parity_vanishing", p, det, Polynomial()))
    dprime = det_poly_interp(build_delta_prime(b, c))
    out.append(_check("prime_sign", p, det, dprime * (-1) ** (b * c)))
    comp = delta_closed_form(b, b - c) * ((-1) ** b * Fraction(2) ** (2 * c - b))
    out.append(_check("complement_symmetry", p, rhs, comp))
    return out


def cmd_verify_theorem(b_max: int, c_max: int | None = None, jobs: int = 1) -> VerificationReport:
    if b_max < 0 or (c_max is not None and c_max < 0):
        raise UsageError("bounds must be nonnegative")
    cm = b_max if c_max is None else c_max
    tasks = [(b, c) for b in range(b_max + 1) for c in range(min(b, cm) + 1)]
    cfg = SweepConfig("theorem", b_max=b_max, c_max=c_max, jobs=jobs)
    return build_report(cfg, _run(tasks, theorem_task, jobs))


# -- conjecture --------------------------------------------------------------

def conjecture_task(bc: tuple) -> list:
    b, c = bc
    p = {"b": b, "c": c}
    value = abs(det_rational(build_conjecture(b, c)))
    if vanishes_by_parity(b, c):
        return [_check("conjecture_vanishing", p, value, 0)]
    if 2 * c <= b:
        return [_check("conjecture_magnitude", p, value, conjecture_magnitude(b, c))]
    other = abs(det_rational(build_conjecture(b, b - c)))
    return [_check("conjecture_complement", p, value, Fraction(2) ** (2 * c - b) * other)]


def cmd_verify_conjecture(b_max: int, jobs: int = 1) -> VerificationReport:
    if b_max < 0:
        raise UsageError("b_max must be nonnegative")
    tasks = [(b, c) for b in range(b_max + 1) for c in range(b + 1)]
    cfg = SweepConfig("conjecture", b_max=b_max, jobs=jobs)
    return build_report(cfg, _run(tasks, conjecture_task, jobs))


# -- lemmas --------------------------------------------------------------------

def _kernel_checks(family: KernelFamily, b_max: int) -> list:
    name = f"kernel_{family.value}"
    tuples = admissible(family, b_max)
    if not tuples:
        return [Check(name, {"b_max": b_max}, "skipped", "[]", "[]")]
    out = []
    for t in tuples:
        res = kernel_residuals(family, *t)
        keys = ("b", "c") if family is KernelFamily.L4 else ("b", "c", "e", "s")
        out.append(_check(name, dict(zip(keys, t)), Polynomial(res.residuals), Polynomial()))
    return out


def _pairs(b_max: int):
    return [(b, c) for b in range(b_max + 1) for c in range(b + 1)]


def _multiplicity_checks(b_max: int) -> list:
    out = []
    for b, c in _pairs(b_max):
        for regime in Regime:
            if not regime_applies(regime, b, c):
                continue
            for e in integer_e_values(b, c):
                for case, m in sorted(m_formula_all(regime, b, c, e).items()):
                    p = {"b": b, "c": c, "e": e, "regime": regime.value, "case": case}
                    out.append(_check("multiplicity_case", p, m, product_multiplicity(b, c, e)))
        if not vanishes_by_parity(b, c):
            total = sum(product_multiplicity(b, c, e) for e in multiplicity_support(b, c))
            out.append(_check("multiplicity_total", {"b": b, "c": c}, total, c * (b - c)))
    return out


def _dprime(b: int, c: int) -> Polynomial:
    return det_poly_interp(build_delta_prime(b, c))


def _divisibility_checks(b_max: int) -> list:
    from .lemmas import divides_power
    out = []
    for b, c in _pairs(b_max):
        d = _dprime(b, c)
        for e in multiplicity_support(b, c):
            m = product_multiplicity(b, c, e)
            p = {"b": b, "c": c, "e": e}
            out.append(_check("divisibility", p, m, m, divides_power(d, e, m)))
        out.append(_check("degree_bound", {"b": b, "c": c}, max(d.degree, 0), c * (b - c),
                          d.degree <= c * (b - c)))
    return out


def _extraction_checks(b_max: int) -> list:
    builders = {Extraction.ROWS_BOTTOM: build_delta1, Extraction.ROWS_LAST_C: build_delta2,
                Extraction.ROWS_RAISED: build_delta3}
    out = []
    for b, c in _pairs(b_max):
        d = _dprime(b, c)
        for kind in Extraction:
            for e in range(b + 1):
                if not extraction_admissible(kind, b, c, e):
                    continue
                reduced = det_poly_interp(builders[kind](b, c, e))
                k = extraction_exponent(kind, b, c, e)
                p = {"b": b, "c": c, "e": e, "kind": kind.value}
                out.append(_check("factor_extraction", p, d, reduced * (X + e) ** k))
    return out


def _reduction_checks(b_max: int) -> list:
    out = []
    for b, c in _pairs(b_max):
        p = {"b": b, "c": c}
        out.append(_check("block_reduction", p, 1, 1, check_block_reduction(b, c)))
        out.append(_check("lowered_top", p, 1, 1, verify_lowered_top(b, c)))
        for e in range(c, b + 1):
            ok = verify_row_raise_invariance(b, c, e)
            out.append(_check("row_raise", {"b": b, "c": c, "e": e}, 1, 1, ok))
    return out


def _toeplitz_checks(b_max: int) -> list:
    out = []
    for n in range(min(b_max, 6) + 1):
        for c in range(6):
            det = det_poly_interp(build_binomial_toeplitz(n, c, X))
            out.append(_check("toeplitz", {"n": n, "c": c}, det, toeplitz_closed_form(n, c, X)))
    return out


def _half_binomial_checks(b_max: int) -> list:
    out = []
    for b, c in _pairs(b_max):
        if b % 2 == 0 and c % 2 == 0 and 2 <= c < b:
            out.append(_check("half_binomial_singular", {"b": b, "c": c},
                              det_rational(build_half_binomial(b, c)), 0))
    if not out:
        out.append(Check("half_binomial_singular", {"b_max": b_max}, "skipped", "[]", "[]"))
    return out


def _special_value_checks(b_max: int) -> list:
    out = []
    for b, c in _pairs(b_max):
        if b % 2 == 0 and c % 2 == 1:
            continue
        r = special_value_check(b, c)
        p = {"b": b, "c": c}
        out.append(_check("special_value", p, r.determinant, r.closed_form))
        out.append(_check("special_value_decomposition", p, r.determinant, r.via_toeplitz))
    return out


_AUX = {
    "DIVISIBILITY": _divisibility_checks,
    "EXTRACTION": _extraction_checks,
    "HALF_BINOMIAL": _half_binomial_checks,
    "MULTIPLICITY": _multiplicity_checks,
    "REDUCTION": _reduction_checks,
    "SPECIAL_VALUES": _special_value_checks,
    "TOEPLITZ": _toeplitz_checks,
}


def lemma_task(job: tuple) -> list:
    family, b_max = job
    if family in _AUX:
        return _AUX[family](b_max)
    return _kernel_checks(KernelFamily(family), b_max)


def cmd_verify_lemmas(b_max: int, families=(), jobs: int = 1) -> VerificationReport:
    if b_max < 0:
        raise UsageError("b_max must be nonnegative")
    fams = tuple(sorted(set(families))) if families else LEMMA_FAMILIES
    unknown = [f for f in fams if f not in LEMMA_FAMILIES]
    if unknown:
        raise UsageError(f"unknown family id(s): {', '.join(unknown)}")
    cfg = SweepConfig("lemmas", b_max=b_max, families=tuple(sorted(fams)), jobs=jobs)
    return build_report(cfg, _run([(f, b_max) for f in fams], lemma_task, jobs))


# -- hypergeometric rules --------------------------------------------------------

def case_rng(seed: int, rule: str, index: int) -> random.Random:
    """Independent per-case generator derived from the master seed."""
    return random.Random(f"{seed}:{rule}:{index}")


def hyper_task(job: tuple) -> list:
    rule, seed, cases = job
    out = []
    for i in range(cases):
        params, lhs, rhs = hyper.random_case(rule, case_rng(seed, rule, i))
        p = {"case": i}
        p.update(params)
        out.append(_check(rule, p, lhs, rhs))
    return out


def cmd_verify_hyper(cases_per_rule: int, seed: int, jobs: int = 1) -> VerificationReport:
    if cases_per_rule < 0:
        raise UsageError("cases must be nonnegative")
    checks = [_check(f"fixed_{rule}", params, lhs, rhs)
              for rule, params, lhs, rhs in hyper.fixed_instances()]
    tasks = [(rule, seed, cases_per_rule) for rule in hyper.RULES] if cases_per_rule else []
    checks += _run(tasks, hyper_task, jobs)
    cfg = SweepConfig("hyper", cases=cases_per_rule, seed=seed, jobs=jobs)
    return build_report(cfg, checks)
