"""Exact sparse linear algebra over the rationals and prime fields.

Rows are kept as ``{col: value}`` dicts.  Over a prime field values are
ints in ``[0, p)``.  Over the rationals rows are scaled to primitive integer
vectors and eliminated fraction-free (``a*row - b*pivot``, then divided by
the content), so no denominators appear during elimination.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

# when set (the test suite does), kernel_basis verifies rank-nullity and M v = 0
SELF_CHECK = os.environ.get("COINVARIANT_SELF_CHECK", "") not in ("", "0")

# large prime used for the modular pre-pass of rational rank computations
_SHORTCUT_PRIME = 2_147_483_647


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class Field:
    p: int = 0  # 0 means the rationals

    def __post_init__(self):
        if self.p:
            if self.p >= 2**31 or not _is_prime(self.p):
                raise ValueError(f"{self.p} is not a prime below 2^31")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = str(text).strip().lower()
        if t in ("q", "qq", "0", "rationals"):
            return cls(0)
        t = t.removeprefix("f").removeprefix("p").removeprefix("=")
        try:
            return cls(int(t))
        except ValueError:
            raise ValueError(f"cannot parse field {text!r}; use 'q' or a prime") from None

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x):
        """Coerce an int/Fraction (or rational string) into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if self.p == 0:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def fmt(self, x) -> str:
        return str(Fraction(x)) if self.p == 0 else str(int(x))

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = Field(0)


class ExactMatrix:
    """Sparse matrix given by (row, col, value) triplets; zero entries dropped."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[tuple[int, int, object]] = ()):
        self.rows = rows
        self.cols = cols
        data: dict[tuple[int, int], object] = {}
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            if (r, c) in data:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            if v:
                data[r, c] = v
        self.entries = data

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        m = len(rows)
        n = len(rows[0]) if m else 0
        return cls(m, n, ((i, j, v) for i, row in enumerate(rows) for j, v in enumerate(row)))

    @classmethod
    def from_rows(cls, rows: Sequence[dict], cols: int) -> "ExactMatrix":
        return cls(len(rows), cols, ((i, j, v) for i, row in enumerate(rows) for j, v in row.items()))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, ((c, r, v) for (r, c), v in self.entries.items()))

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> list[dict[int, object]]:
        out: list[dict[int, object]] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def matvec(self, v: Sequence, field: Field = QQ) -> list:
        out = [field(0)] * self.rows
        for (r, c), x in self.entries.items():
            if v[c]:
                out[r] = field(out[r] + field(x) * field(v[c]))
        return out

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# ---------------------------------------------------------------- mod p


def _rows_mod_p(M: ExactMatrix, p: int) -> list[dict[int, int]]:
    f = Field(p)
    rows: list[dict[int, int]] = [{} for _ in range(M.rows)]
    for (r, c), v in M.entries.items():
        x = f(v)
        if x:
            rows[r][c] = x
    return rows


def _echelon_mod_p(rows: list[dict[int, int]], p: int) -> dict[int, dict[int, int]]:
    """Incremental row echelon; returns {pivot col: row with leading 1}."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            a = row[lead]
            for c, v in prow.items():
                nv = (row.get(c, 0) - a * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return pivots


# ---------------------------------------------------------------- over QQ


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _integer_rows(M: ExactMatrix) -> list[dict[int, int]]:
    rows = M.row_dicts()
    out = []
    for row in rows:
        if not row:
            out.append({})
            continue
        den = 1
        for v in row.values():
            if isinstance(v, Fraction) and v.denominator != 1:
                den = lcm(den, v.denominator)
        out.append({c: int(Fraction(v) * den) for c, v in row.items()})
    return out


def _echelon_qq(rows: list[dict[int, int]]) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        if not row:
            continue
        row = _primitive(row)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = row
                break
            a, b = prow[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
    return pivots


def _echelon(M: ExactMatrix, field: Field) -> dict[int, dict]:
    if field.is_rational:
        return _echelon_qq(_integer_rows(M))
    return _echelon_mod_p(_rows_mod_p(M, field.p), field.p)


def rank(M: ExactMatrix, field: Field = QQ) -> int:
    if not M.entries:
        return 0
    if field.is_rational:
        # rank mod p never exceeds rank over QQ, so a full-rank hit is exact
        full = min(M.rows, M.cols)
        try:
            r = len(_echelon_mod_p(_rows_mod_p(M, _SHORTCUT_PRIME), _SHORTCUT_PRIME))
        except ZeroDivisionError:
            r = -1
        if r == full:
            return r
    return len(_echelon(M, field))


def rref(M: ExactMatrix, field: Field = QQ) -> tuple[list[dict[int, object]], list[int]]:
    """Reduced row echelon form as (rows, pivot columns), values in ``field``."""
    piv = _echelon(M, field)
    cols = sorted(piv)
    if field.is_rational:
        rows = {c: {k: Fraction(v, piv[c][c]) for k, v in piv[c].items()} for c in cols}
    else:
        rows = {c: dict(piv[c]) for c in cols}
    # back substitution, last pivot first
    for c in reversed(cols):
        prow = rows[c]
        for c2 in cols:
            if c2 >= c:
                break
            r2 = rows[c2]
            a = r2.get(c)
            if not a:
                continue
            for k, v in prow.items():
                nv = field(r2.get(k, 0) - a * v)
                if nv:
                    r2[k] = nv
                else:
                    r2.pop(k, None)
    return [rows[c] for c in cols], cols


def kernel_basis(M: ExactMatrix, field: Field = QQ) -> list[list]:
    """Right null space; each vector scaled so its first nonzero entry is 1."""
    rows, pivots = rref(M, field)
    pivset = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivset:
            continue
        v = [field(0)] * M.cols
        v[free] = field(1)
        for prow, pc in zip(rows, pivots):
            a = prow.get(free)
            if a:
                v[pc] = field(-a)
        first = next(x for x in v if x)
        if first != 1:
            inv = field.inv(first)
            v = [field(x * inv) for x in v]
        basis.append(v)
    if SELF_CHECK:
        if len(pivots) + len(basis) != M.cols:
            raise AssertionError("rank-nullity violated")
        if any(any(M.matvec(v, field)) for v in basis):
            raise AssertionError("kernel vector not annihilated")
    return basis


def nullity(M: ExactMatrix, field: Field = QQ) -> int:
    return M.cols - rank(M, field)
