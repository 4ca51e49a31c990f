"""Monomial artinian reductions R / (I_Δ + (x_1^{a_1}, ..., x_n^{a_n})).

Weak/strong Lefschetz properties are decided with L = x_1 + ... + x_n, which
is a Lefschetz element whenever one exists for a monomial algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Sequence

from .complex import SimplicialComplex, fhg_vectors
from .compositions import count_a
from .homology import top_betti
from .inverse_systems import Exps, monomials_on_faces
from .linalg import QQ, ExactMatrix, Field, rank


class HilbertMismatchError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ArtinianSpec:
    complex: SimplicialComplex
    caps: tuple[int, ...]
    field: Field = QQ

    def __post_init__(self):
        if len(self.caps) != self.complex.n_vertices:
            raise ValueError(f"need {self.complex.n_vertices} caps, got {len(self.caps)}")
        if any(a < 1 for a in self.caps):
            raise ValueError("caps must be positive")

    @classmethod
    def uniform(cls, cx: SimplicialComplex, cap: int | None = None, field: Field = QQ) -> "ArtinianSpec":
        """All caps equal; defaults to d+2."""
        if cap is None:
            cap = cx.dim + 2
        return cls(cx, (cap,) * cx.n_vertices, field)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.caps)) == 1

    @property
    def degree_bound(self) -> int:
        # largest possible degree of a surviving monomial
        return max(sum(self.caps[v] - 1 for v in F) for F in self.complex.facets)


def monomial_basis(spec: ArtinianSpec, t: int) -> list[Exps]:
    if t < 0:
        return []
    return monomials_on_faces(spec.complex, t, spec.caps)


def hilbert_by_compositions(cx: SimplicialComplex, cap: int, T: int) -> list[int]:
    """Σ_i f_i a(t, cap-1, i+1) for uniform caps, including the empty face for t = 0."""
    f = fhg_vectors(cx).f
    return [sum(f[i + 1] * count_a(t, cap - 1, i + 1) for i in range(-1, cx.dim + 1)) for t in range(T + 1)]


def hilbert_function(spec: ArtinianSpec, T: int | None = None) -> list[int]:
    """Dimensions of A_0..A_T (default: through the first degree past the socle)."""
    if T is None:
        T = spec.degree_bound + 1
    dims = [len(monomial_basis(spec, t)) for t in range(T + 1)]
    if spec.is_uniform:
        check = hilbert_by_compositions(spec.complex, spec.caps[0], T)
        if check != dims:
            raise HilbertMismatchError(f"direct {dims} != composition formula {check}")
    return dims


def _exponent_steps(n: int, j: int) -> list[tuple[Exps, int]]:
    """All b with |b| = j and the multinomial coefficient j!/Π b_i!."""
    out = []
    for combo in combinations_with_replacement(range(n), j):
        b = [0] * n
        for v in combo:
            b[v] += 1
        mult = factorial(j)
        for x in b:
            mult //= factorial(x)
        out.append((tuple(b), mult))
    return out


def lefschetz_matrix(spec: ArtinianSpec, t: int, j: int = 1) -> ExactMatrix:
    """Matrix of ×L^j : A_t -> A_{t+j} in the monomial bases (rows = target)."""
    src = monomial_basis(spec, t)
    tgt = monomial_basis(spec, t + j)
    tindex = {e: i for i, e in enumerate(tgt)}
    F = spec.field
    steps = _exponent_steps(spec.complex.n_vertices, j)
    entries = []
    for col, m in enumerate(src):
        for b, mult in steps:
            row = tindex.get(tuple(x + y for x, y in zip(m, b)))
            if row is not None:
                v = F(mult)
                if v:
                    entries.append((row, col, v))
    return ExactMatrix(len(tgt), len(src), entries)


@dataclass(frozen=True)
class Failure:
    source: int
    target: int
    rank: int
    full_rank_target: int
    kind: str  # injectivity / surjectivity / bijectivity


@dataclass
class GradedRankReport:
    dims: list[int]
    ranks: dict[int, list[int]]
    verdict_wlp: str
    failure_degrees: list[Failure] = dc_field(default_factory=list)
    verdict_slp: str = "unknown"

    @property
    def socle_degree(self) -> int:
        return max(t for t, d in enumerate(self.dims) if d)

    def quotient_dims(self) -> list[int]:
        """Hilbert function of A/(L): dims[t] minus the rank of ×L into degree t."""
        r1 = self.ranks[1]
        return [self.dims[t] - (r1[t - 1] if 0 < t <= len(r1) else 0) for t in range(len(self.dims))]

    def wlp_failures(self) -> list[Failure]:
        return [f for f in self.failure_degrees if f.target - f.source == 1]

    def to_csv(self, quotient: bool = False) -> str:
        if quotient:
            idx = ",".join(str(t) for t in range(len(self.dims)))
            return (
                f"degree,{idx}\n"
                f"hf,{','.join(map(str, self.dims))}\n"
                f"hf_quotient,{','.join(map(str, self.quotient_dims()))}\n"
            )
        lines = ["degree,dim,rank_to_next,full_rank_target,status"]
        r1 = self.ranks[1]
        for t, d in enumerate(self.dims):
            if t < len(r1):
                target = min(d, self.dims[t + 1])
                status = "ok" if r1[t] == target else "fail"
                lines.append(f"{t},{d},{r1[t]},{target},{status}")
            else:
                lines.append(f"{t},{d},,,")
        return "\n".join(lines) + "\n"


def _kind(a: int, b: int) -> str:
    if a < b:
        return "injectivity"
    if a > b:
        return "surjectivity"
    return "bijectivity"


def lefschetz_verdict(spec: ArtinianSpec, max_power: int = 1) -> GradedRankReport:
    """Ranks of ×L^j between all graded pieces up to the socle, j = 1..max_power."""
    dims = hilbert_function(spec)
    top = max(t for t, d in enumerate(dims) if d)
    dims = dims[: top + 2]  # keep one trailing zero
    ranks: dict[int, list[int]] = {}
    failures: list[Failure] = []
    for j in range(1, max(1, max_power) + 1):
        rj = []
        for t in range(0, top - j + 1):
            r = rank(lefschetz_matrix(spec, t, j), spec.field)
            rj.append(r)
            target = min(dims[t], dims[t + j])
            if r < target:
                failures.append(Failure(t, t + j, r, target, _kind(dims[t], dims[t + j])))
        ranks[j] = rj
    wlp = "fails" if any(f.target - f.source == 1 for f in failures) else "holds"
    if failures:
        slp = "fails"
    elif max_power >= top:
        slp = "holds"
    else:
        slp = "unknown"
    return GradedRankReport(dims, ranks, wlp, failures, slp)


@dataclass(frozen=True)
class FailureCertificate:
    d: int
    f_ridges: int
    f_facets: int
    top_betti: int
    degrees: tuple[int, int]


def guaranteed_failure(cx: SimplicialComplex, field: Field = QQ) -> tuple[bool, FailureCertificate]:
    """Whether d > 0, f_{d-1} >= f_d and H̃_d ≠ 0, which forces WLP failure with caps d+2.

    The certificate names the non-surjective map A_{t-1} -> A_t, t = C(d+2, 2).
    """
    d = cx.dim
    fv = fhg_vectors(cx)
    fr = fv.f_at(d - 1)
    ff = fv.f_at(d)
    b = top_betti(cx, field) if d > 0 else 0
    t = comb(d + 2, 2)
    applies = d > 0 and fr >= ff and b > 0
    return applies, FailureCertificate(d, fr, ff, b, (t - 1, t))


def stress_vector(spec: ArtinianSpec, F, t: int) -> list:
    """Coordinates of a dual polynomial in the degree-t monomial basis (KeyError if outside)."""
    index = {e: i for i, e in enumerate(monomial_basis(spec, t))}
    v = [spec.field(0)] * len(index)
    for e, c in F.terms.items():
        v[index[e]] = spec.field(c)
    return v
