"""Entry-by-entry construction of every determinant family.

Matrices are indexed the way the formulas are written: the b x b families use
rows 0 <= i < b and columns c <= j < b+c, with the column band boundary at
j = b.  Internally an :class:`ExactMatrix` stores 0-based local positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .combinat import binom, inv_factorial, pochhammer_poly, rising_poly
from .errors import BadShape, ParityError, RangeError
from .polynomial import ONE, X, ZERO, Polynomial, as_polynomial


@dataclass(frozen=True)
class Provenance:
    builder: str
    params: tuple = ()

    def get(self, key, default=None):
        return dict(self.params).get(key, default)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple
    provenance: Provenance = field(default_factory=lambda: Provenance("raw"))

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise BadShape(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], provenance: Provenance | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise BadShape("ragged rows")
        entries = tuple(as_polynomial(v) for r in rows for v in r)
        return cls(n, m, entries, provenance or Provenance("raw"))

    @classmethod
    def from_function(cls, row_ids: Iterable[int], col_ids: Iterable[int],
                      f: Callable[[int, int], object], provenance: Provenance) -> "ExactMatrix":
        row_ids, col_ids = list(row_ids), list(col_ids)
        entries = tuple(as_polynomial(f(i, j)) for i in row_ids for j in col_ids)
        return cls(len(row_ids), len(col_ids), entries, provenance)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_lists(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def evaluate(self, x) -> list:
        """Rows of scalars obtained by substituting ``x`` into every entry."""
        x = Fraction(x)
        return [[p(x) for p in self.row(i)] for i in range(self.rows)]

    def scalar_rows(self) -> list:
        """Rows of Fractions; every entry must be constant."""
        return [[p.constant_value() for p in self.row(i)] for i in range(self.rows)]

    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self.entries)

    def row_degrees(self) -> list:
        out = []
        for i in range(self.rows):
            d = max((p.degree for p in self.row(i)), default=0)
            out.append(d)
        return out

    def with_rows(self, rows: Sequence[Sequence], provenance: Provenance | None = None) -> "ExactMatrix":
        return ExactMatrix.from_rows(rows, provenance or self.provenance)


def _prov(name: str, **params) -> Provenance:
    return Provenance(name, tuple(sorted(params.items())))


def _shift(a: int, p: Polynomial = X) -> Polynomial:
    return p + a


def _poch(p: Polynomial, k: int) -> Polynomial:
    if k >= 0:
        return rising_poly(p, k)
    return pochhammer_poly(p, k).to_polynomial()


def _check_bc(b: int, c: int):
    if b < 0 or c < 0 or c > b:
        raise BadShape(f"need 0 <= c <= b, got b={b}, c={c}")


# -- the full determinant and its x = 0 specialization ----------------------

def build_delta(b: int, c: int) -> ExactMatrix:
    """The (b+c) x (b+c) matrix whose determinant is the main object."""
    _check_bc(b, c)
    x2 = 2 * X

    def entry(i, j):
        if i < b:
            if j < c:
                return binom(_shift(j), i) if i < c else ZERO
            if j < b:
                return binom(_shift(j), i)
            return binom(x2 + j, i)
        r = i - b
        if j < c:
            return 2 * binom(_shift(j), r)
        if j < b:
            return binom(_shift(j), r)
        return ZERO

    n = b + c
    return ExactMatrix.from_function(range(n), range(n), entry, _prov("delta", b=b, c=c))


def build_conjecture(b: int, c: int) -> ExactMatrix:
    m = build_delta(b, c)
    rows = [[Polynomial.const(v) for v in r] for r in m.evaluate(0)]
    return ExactMatrix.from_rows(rows, _prov("conjecture", b=b, c=c))


# -- reduction chain -------------------------------------------------------

def build_first_block(c: int, x: Polynomial = X) -> ExactMatrix:
    """c x c matrix 2*binom(x+j, i)."""
    return ExactMatrix.from_function(range(c), range(c), lambda i, j: 2 * binom(x + j, i),
                                     _prov("first_block", c=c))


def build_second_factor(b: int, c: int) -> ExactMatrix:
    """b x b block left over after clearing the top-left corner of Delta."""
    _check_bc(b, c)

    def entry(i, j):
        if j < b:
            v = binom(_shift(j), i)
            return v / 2 if i < c else v
        return binom(2 * X + j, i)

    return ExactMatrix.from_function(range(b), range(c, b + c), entry,
                                     _prov("second_factor", b=b, c=c))


def build_delta_prime(b: int, c: int) -> ExactMatrix:
    _check_bc(b, c)
    xc = _shift(c)
    x2b = 2 * X + b

    def entry(i, j):
        if j < b:
            return binom(xc, i - j + c)
        v = binom(x2b, i - j + b)
        return 2 * v if i < c else v

    return ExactMatrix.from_function(range(b), range(c, b + c), entry,
                                     _prov("delta_prime", b=b, c=c))


def build_lowered_top(b: int, c: int) -> ExactMatrix:
    _check_bc(b, c)

    def entry(i, j):
        if i < c:
            if j < b:
                return binom(_shift(c - 1), i - j + c)
            return 2 * binom(2 * X + b - 1, i - j + b)
        if j < b:
            return binom(_shift(c), i - j + c)
        return binom(2 * X + b, i - j + b)

    return ExactMatrix.from_function(range(b), range(c, b + c), entry,
                                     _prov("lowered_top", b=b, c=c))


def raise_row_tops(m: ExactMatrix, c: int, e: int) -> ExactMatrix:
    """Repeated adjacent row additions that raise the binomial tops below row c.

    Pass p adds row r-1 to row r for r = b-1 down to c+p+1; there are e-c
    passes.  Determinant-preserving by construction.
    """
    b = m.rows
    rows = m.to_lists()
    for p in range(max(0, e - c)):
        for r in range(b - 1, c + p, -1):
            rows[r] = [u + v for u, v in zip(rows[r], rows[r - 1])]
    return m.with_rows(rows, _prov("raised", b=b, c=c, e=e))


def build_raised(b: int, c: int, e: int) -> ExactMatrix:
    """The row-transformed matrix in closed form (entries written directly)."""
    _check_bc(b, c)
    if e < c:
        raise RangeError(f"transform needs e >= c, got e={e}, c={c}")

    def entry(i, j):
        if i < c:
            top_a, top_b, mult = _shift(c), 2 * X + b, 2
        else:
            t = min(i, e)
            top_a, top_b, mult = _shift(t), 2 * X + b - c + t, 1
        if j < b:
            return binom(top_a, i - j + c)
        return mult * binom(top_b, i - j + b)

    return ExactMatrix.from_function(range(b), range(c, b + c), entry,
                                     _prov("raised", b=b, c=c, e=e))


# -- matrices left after pulling out powers of (x+e) ------------------------

def delta1_in_range(b: int, c: int, e) -> bool:
    if b >= 2 * c and 2 * e >= c and e <= c:
        return True
    if b <= 2 * c and 2 * e >= b - c and 2 * e <= b:
        return True
    return False


def build_delta1(b: int, c: int, e: int) -> ExactMatrix:
    _check_bc(b, c)
    if not delta1_in_range(b, c, e):
        raise RangeError(f"e={e} outside the Delta_1 ranges for b={b}, c={c}")
    cut = b + c - 2 * e
    xc = _shift(c)
    x2b = 2 * X + b
    lead_a = _poch(_shift(e + 1), c - e)
    lead_b = 2 * _poch(2 * X + 2 * e + 1, b - 2 * e)

    def entry(i, j):
        if i < cut:
            if j < b:
                return binom(xc, i - j + c)
            v = binom(x2b, i - j + b)
            return 2 * v if i < c else v
        if j < b:
            w = inv_factorial(i - j + c)
            if w == 0:
                return ZERO
            return lead_a * _poch(X - i + j + 1, e + i - j - 1) * w
        w = inv_factorial(i - j + b)
        if w == 0:
            return ZERO
        return lead_b * _poch(2 * X - i + j + 1, 2 * e + i - j - 1) * w

    name = "delta_prime" if cut >= b else "delta1"
    return ExactMatrix.from_function(range(b), range(c, b + c), entry,
                                     _prov(name, b=b, c=c, e=e))


def build_delta2(b: int, c: int, e: int) -> ExactMatrix:
    _check_bc(b, c)
    if not (c <= e <= b - c):
        raise RangeError(f"Delta_2 needs c <= e <= b-c, got b={b}, c={c}, e={e}")
    lead_b = 2 * _poch(2 * X + 2 * e + 1, b - c - e)

    def entry(i, j):
        if i < b - c:
            if i < c:
                top_a, top_b, mult = _shift(c), 2 * X + b, 2
            else:
                t = min(i, e)
                top_a, top_b, mult = _shift(t), 2 * X + b - c + t, 1
            if j < b:
                return binom(top_a, i - j + c)
            return mult * binom(top_b, i - j + b)
        if j < b:
            w = inv_factorial(i - j + c)
            if w == 0:
                return ZERO
            return _poch(X + e - c - i + j + 1, c + i - j - 1) * w
        w = inv_factorial(i - j + b)
        if w == 0:
            return ZERO
        return lead_b * _poch(2 * X + e - c - i + j + 1, c + e + i - j - 1) * w

    return ExactMatrix.from_function(range(b), range(c, b + c), entry,
                                     _prov("delta2", b=b, c=c, e=e))


def delta3_in_range(b: int, c: int, e) -> bool:
    if b >= 2 * c and b - c <= e and 2 * e <= 2 * b - c:
        return True
    if b <= 2 * c and 2 * e >= b and 2 * e <= b + c:
        return True
    return False


def build_delta3(b: int, c: int, e: int) -> ExactMatrix:
    _check_bc(b, c)
    if not delta3_in_range(b, c, e):
        raise RangeError(f"e={e} outside the Delta_3 ranges for b={b}, c={c}")
    cut = 2 * e + c - b

    def entry(i, j):
        if i < c:
            if j < b:
                return binom(_shift(c), i - j + c)
            return 2 * binom(2 * X + b, i - j + b)
        if i < cut:
            if j < b:
                return binom(_shift(i), i - j + c)
            return binom(2 * X + b - c + i, i - j + b)
        if j < b:
            w = inv_factorial(i - j + c)
            if w == 0:
                return ZERO
            return _poch(_shift(e + 1), i - e) * _poch(X - c + j + 1, e + c - j - 1) * w
        w = inv_factorial(i - j + b)
        if w == 0:
            return ZERO
        return (2 * _poch(2 * X + 2 * e + 1, i + b - c - 2 * e)
                * _poch(2 * X - c + j + 1, 2 * e + c - j - 1) * w)

    name = "raised" if cut >= b else "delta3"
    return ExactMatrix.from_function(range(b), range(c, b + c), entry,
                                     _prov(name, b=b, c=c, e=e))


# -- auxiliary evaluations ---------------------------------------------------

def build_binomial_toeplitz(n: int, c: int, x=X) -> ExactMatrix:
    """n x n matrix binom(x, i-j+c), 1 <= i, j <= n."""
    if n < 0 or c < 0:
        raise BadShape(f"need n, c >= 0, got n={n}, c={c}")
    if not isinstance(x, Polynomial):
        x = Fraction(x)
    return ExactMatrix.from_function(range(1, n + 1), range(1, n + 1),
                                     lambda i, j: binom(x, i - j + c), _prov("binomial_toeplitz", n=n, c=c))


def build_half_binomial(b: int, c: int) -> ExactMatrix:
    if b % 2 or c % 2 or b <= c or c < 0:
        raise ParityError(f"need even b > c >= 0, got b={b}, c={c}")
    lo = Fraction(2 * c - b - 1, 2)
    hi = Fraction(2 * c - b + 1, 2)

    def entry(i, j):
        if i == c:
            return binom(lo, 2 * c - 1 - j)
        return binom(hi, i - j + c)

    return ExactMatrix.from_function(range(c, b), range(c, b), entry, _prov("half_binomial", b=b, c=c))


def zero_matrix(n: int) -> ExactMatrix:
    return ExactMatrix(n, n, tuple(ZERO for _ in range(n * n)))


def identity_matrix(n: int) -> ExactMatrix:
    return ExactMatrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))
