"""Exact determinants over Q and Q[x].

Three independent routes that are used to check one another:

* ``det_rational``: fraction-free Bareiss on an integer-scaled copy.
* ``det_poly_interp``: evaluate at integer nodes, interpolate, probe one
  extra node as a sentinel.
* ``det_poly_direct``: Bareiss over Q[x] with exact polynomial division.

``det_cofactor`` is a Laplace-expansion oracle for tiny matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionCap, InterpolationMismatch, NotSquare
from .matrices import ExactMatrix
from .polynomial import ONE, ZERO, Polynomial, as_polynomial, poly_divexact

DIRECT_CAP = 8
COFACTOR_CAP = 5


@dataclass(frozen=True)
class DegreeBound:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("degree bound must be nonnegative")


def _square_rows(m) -> list:
    if isinstance(m, ExactMatrix):
        if not m.is_square:
            raise NotSquare(f"{m.rows}x{m.cols}")
        return m.to_lists()
    rows = [list(r) for r in m]
    if any(len(r) != len(rows) for r in rows):
        raise NotSquare("matrix is not square")
    return rows


def _bareiss_int(a: list) -> int:
    """Integer Bareiss with row-swap pivoting; ``a`` is modified in place."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def det_rational(m) -> Fraction:
    """Exact determinant of a square matrix of rationals (or constant polynomials)."""
    rows = _square_rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for r in rows:
        vals = [v.constant_value() if isinstance(v, Polynomial) else Fraction(v) for v in r]
        lcm = 1
        for v in vals:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        scale *= lcm
        int_rows.append([int(v * lcm) for v in vals])
    return Fraction(_bareiss_int(int_rows)) / scale


def generic_degree_bound(m: ExactMatrix) -> DegreeBound:
    total = 0
    for d in m.row_degrees():
        if d == -math.inf:
            return DegreeBound(0)  # a zero row forces det = 0
        total += d
    return DegreeBound(total)


def default_degree_bound(m: ExactMatrix) -> DegreeBound:
    """c(b-c) for the two matrices where that bound is known; otherwise generic."""
    prov = m.provenance
    if prov.builder in ("delta", "delta_prime"):
        b, c = prov.get("b"), prov.get("c")
        return DegreeBound(c * (b - c))
    return generic_degree_bound(m)


def _newton_interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> Polynomial:
    n = len(xs)
    coef = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    out = Polynomial.const(coef[-1])
    for i in range(n - 2, -1, -1):
        out = out * Polynomial((-xs[i], 1)) + coef[i]
    return out


def _eval_det(m: ExactMatrix, node: int) -> Fraction:
    return det_rational(m.evaluate(node))


def det_poly_interp(m: ExactMatrix, bound: DegreeBound | None = None, executor=None) -> Polynomial:
    """Evaluation at x = 0..bound, interpolation, and a sentinel check at bound+1.

    ``executor`` (anything with a ``map``) may evaluate nodes concurrently;
    the reduction is always in node order.
    """
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    if m.rows == 0:
        return ONE
    if bound is None:
        bound = default_degree_bound(m)
    nodes = list(range(bound.value + 2))
    if executor is None:
        values = [_eval_det(m, t) for t in nodes]
    else:
        values = list(executor.map(_eval_det, [m] * len(nodes), nodes))
    p = _newton_interpolate(nodes[:-1], values[:-1])
    if p(nodes[-1]) != values[-1]:
        raise InterpolationMismatch(
            f"degree bound {bound.value} too small for {m.provenance.builder}")
    return p


def det_poly_direct(m: ExactMatrix, cap: int = DIRECT_CAP) -> Polynomial:
    """Fraction-free Bareiss over Q[x]; every division is exact."""
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    n = m.rows
    if n > cap:
        raise DimensionCap(f"dimension {n} exceeds cap {cap}")
    if n == 0:
        return ONE
    a = m.to_lists()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = poly_divexact(akk * a[i][j] - aik * a[k][j], prev)
            a[i][k] = ZERO
        prev = akk
    return a[n - 1][n - 1] * sign


def det_cofactor(m, cap: int = COFACTOR_CAP):
    """Laplace expansion along the first row; returns Fraction for scalar input."""
    rows = _square_rows(m)
    n = len(rows)
    if n > cap:
        raise DimensionCap(f"dimension {n} exceeds cap {cap}")
    scalar = not any(isinstance(v, Polynomial) for r in rows for v in r)
    if scalar:
        rows = [[Fraction(v) for v in r] for r in rows]
    else:
        rows = [[as_polynomial(v) for v in r] for r in rows]
    out = _laplace(rows)
    return Fraction(out) if scalar else as_polynomial(out)


def _laplace(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        a = rows[0][j]
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
