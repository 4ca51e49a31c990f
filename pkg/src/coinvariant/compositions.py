"""Bounded composition counts and the identities relating them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def count_a(n: int, k: int, l: int) -> int:
    """Compositions of n into exactly l parts, each in [1, k]."""
    if min(n, k, l) < 0:
        raise ValueError("arguments must be nonnegative")
    if l == 0:
        return int(n == 0)
    if n < l or n > k * l:
        return 0
    return sum(count_a(n - a, k, l - 1) for a in range(1, min(k, n) + 1))


@lru_cache(maxsize=None)
def _bounded_power(k: int, l: int) -> tuple[int, ...]:
    # coefficients of (1 + x + ... + x^k)^l
    if l == 0:
        return (1,)
    prev = _bounded_power(k, l - 1)
    out = [0] * (len(prev) + k)
    for i, c in enumerate(prev):
        for j in range(k + 1):
            out[i + j] += c
    return tuple(out)


def count_b(n: int, k: int, l: int) -> int:
    """Compositions of n into exactly l parts, each in [0, k]."""
    if min(n, k, l) < 0:
        raise ValueError("arguments must be nonnegative")
    coeffs = _bounded_power(k, l)
    return coeffs[n] if n < len(coeffs) else 0


@dataclass(frozen=True)
class IdentityCheck:
    d: int
    kind: str  # "peak" or "linkage"
    index: int | None
    lhs: int
    rhs: int
    ok: bool


def verify_identities(d_max: int, strict: bool = True) -> list[IdentityCheck]:
    """Check the peak inequalities and the linkage identity for d = 1..d_max.

    peak:    a(t-1, d+1, i) >= a(t, d+1, i) for 1 <= i <= d, t = C(d+2, 2)
    linkage: b(t-d-1, d, d) - b(t-d, d, d) = b(t-d-1, d, d+1) - b(t-d-2, d, d+1)
    """
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    out = []
    for d in range(1, d_max + 1):
        t = comb(d + 2, 2)
        for i in range(1, d + 1):
            lhs, rhs = count_a(t - 1, d + 1, i), count_a(t, d + 1, i)
            out.append(IdentityCheck(d, "peak", i, lhs, rhs, lhs >= rhs))
        lhs = count_b(t - d - 1, d, d) - count_b(t - d, d, d)
        rhs = count_b(t - d - 1, d, d + 1) - count_b(t - d - 2, d, d + 1)
        out.append(IdentityCheck(d, "linkage", None, lhs, rhs, lhs == rhs))
    if strict:
        bad = [c for c in out if not c.ok]
        if bad:
            raise ArithmeticError(f"identity violated: {bad[0]}")
    return out


def identities_csv(checks: list[IdentityCheck]) -> str:
    lines = ["d,kind,i,lhs,rhs,ok"]
    for c in checks:
        i = "" if c.index is None else str(c.index)
        lines.append(f"{c.d},{c.kind},{i},{c.lhs},{c.rhs},{'yes' if c.ok else 'no'}")
    return "\n".join(lines) + "\n"
