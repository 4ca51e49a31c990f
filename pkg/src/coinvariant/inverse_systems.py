"""Inverse systems under contraction and coinvariant stresses.

Elements of the polynomial ring R and of its dual S are both represented by
:class:`Polynomial` (a homogeneous map exponent-vector -> coefficient); the
distinction is only in how they are used.  ``x^a ∘ y^b = y^(b-a)`` when
``b >= a`` componentwise and ``0`` otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

from .complex import Face, SimplicialComplex, minimal_nonfaces
from .homology import Chain, is_cycle
from .linalg import QQ, ExactMatrix, Field, kernel_basis, rank

Exps = tuple[int, ...]


class NotArtinianError(ValueError):
    pass


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@dataclass(frozen=True)
class Polynomial:
    n: int
    terms: dict  # Exps -> coefficient, zeros omitted

    def __post_init__(self):
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        for e in self.terms:
            if len(e) != self.n:
                raise ValueError(f"exponent {e} has wrong length for n={self.n}")

    @classmethod
    def from_terms(cls, n: int, items: Iterable[tuple[Exps, object]], field: Field = QQ) -> "Polynomial":
        acc: dict = {}
        for e, c in items:
            e = tuple(e)
            acc[e] = field(acc.get(e, 0) + field(c))
        return cls(n, {e: c for e, c in acc.items() if c})

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n, {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): Fraction(coeff)} if coeff else {})

    @classmethod
    def linear(cls, coeffs: Sequence, field: Field = QQ) -> "Polynomial":
        n = len(coeffs)
        return cls.from_terms(n, ((tuple(int(i == j) for j in range(n)), c) for i, c in enumerate(coeffs)), field)

    @property
    def degree(self) -> int | None:
        for e in self.terms:
            return sum(e)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(self.n, {e: c for e, c in acc.items() if c})

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c, field: Field = QQ) -> "Polynomial":
        return Polynomial.from_terms(self.n, ((e, field(v) * field(c)) for e, v in self.terms.items()), field)

    def mul(self, other: "Polynomial", field: Field = QQ) -> "Polynomial":
        items = []
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                items.append((tuple(x + y for x, y in zip(a, b)), field(c) * field(d)))
        return Polynomial.from_terms(self.n, items, field)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return self.mul(other)

    def pow(self, j: int, field: Field = QQ) -> "Polynomial":
        out = Polynomial.monomial((0,) * self.n)
        for _ in range(j):
            out = out.mul(self, field)
        return out

    def to_field(self, field: Field) -> "Polynomial":
        return Polynomial.from_terms(self.n, self.terms.items(), field)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_json(self, field: Field = QQ) -> list[dict]:
        return [
            {"exps": list(e), "coeff": field.fmt(c)}
            for e, c in sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]))
        ]

    @classmethod
    def from_json(cls, n: int, data: list[dict], field: Field = QQ) -> "Polynomial":
        return cls.from_terms(n, ((tuple(t["exps"]), Fraction(t["coeff"])) for t in data), field)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: grevlex_key(t[0])):
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


# The dual ring carries the same data; the alias is for readability at call sites.
DualPolynomial = Polynomial


def grevlex_key(e: Sequence[int]) -> tuple:
    """Sort key putting same-degree monomials in descending graded reverse lex order."""
    return (sum(e),) + tuple(reversed(e))


def contract(f: Polynomial, F: Polynomial, field: Field = QQ) -> Polynomial:
    """``f ∘ F`` for homogeneous f in R and F in S."""
    if f.n != F.n:
        raise ValueError(f"variable count mismatch ({f.n} vs {F.n})")
    items = []
    for a, c in f.terms.items():
        for b, d in F.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                items.append((tuple(y - x for x, y in zip(a, b)), field(c) * field(d)))
    return Polynomial.from_terms(F.n, items, field)


def elementary_symmetric(k: int, n: int, cx: SimplicialComplex | None = None) -> Polynomial:
    """e_k in n variables; with ``cx`` only the monomials supported on faces are kept.

    Monomials whose support is not a face annihilate every face-supported dual
    polynomial, so the restricted form acts identically on such elements.
    """
    supports = combinations(range(n), k) if cx is None else cx.faces(k - 1)
    terms = {}
    for s in supports:
        e = [0] * n
        for v in s:
            e[v] = 1
        terms[tuple(e)] = Fraction(1)
    return Polynomial(n, terms)


def vandermonde(B: Iterable[int], n: int) -> Polynomial:
    """Expanded Π_{i<j in B} (x_i - x_j)."""
    B = sorted(B)
    if not B:
        raise ValueError("vandermonde needs a nonempty vertex set")
    s = len(B)
    terms = {}
    # V(B) = Σ_σ sign(σ) Π_i x_{B[σ(i)]}^{s-1-i}
    for perm in permutations(range(s)):
        e = [0] * n
        for i, j in enumerate(perm):
            e[B[j]] = s - 1 - i
        terms[tuple(e)] = Fraction(_perm_sign(perm))
    return Polynomial(n, terms)


def top_stress(cx: SimplicialComplex, cycle: Chain, field: Field = QQ) -> Polynomial:
    """Σ c_i x_{F_i} V(F_i) over the d-faces F_i of a d-cycle."""
    if not is_cycle(cx, cycle, field):
        raise ValueError("chain is not a top-dimensional cycle of the complex")
    n = cx.n_vertices
    terms: dict = {}
    for F, c in cycle.coefficients.items():
        c = field(c)
        if not c:
            continue
        V = vandermonde(F, n)
        for e, v in V.terms.items():
            e = list(e)
            for u in F:
                e[u] += 1
            terms[tuple(e)] = field(c * field(v))
    return Polynomial(n, {e: c for e, c in terms.items() if c})


def monomials_on_faces(cx: SimplicialComplex, k: int, caps: Sequence[int] | None = None) -> list[Exps]:
    """Degree-k exponent vectors whose support is a face, optionally with exps[i] < caps[i].

    Returned in descending graded reverse lexicographic order.
    """
    n = cx.n_vertices
    out: list[Exps] = []
    if k == 0:
        return [(0,) * n]
    for i, faces in cx.faces_by_dim.items():
        size = i + 1
        if size == 0 or size > k:
            continue
        for face in faces:
            bounds = [(caps[v] - 1) if caps is not None else k for v in face]
            for parts in _positive_compositions(k, bounds):
                e = [0] * n
                for v, a in zip(face, parts):
                    e[v] = a
                out.append(tuple(e))
    out.sort(key=grevlex_key)
    return out


def _positive_compositions(k: int, bounds: Sequence[int]):
    # compositions of k with len(bounds) parts, 1 <= part_j <= bounds[j]
    m = len(bounds)
    if m == 0:
        if k == 0:
            yield ()
        return
    rest_max = sum(bounds[1:])
    lo = max(1, k - rest_max)
    hi = min(bounds[0], k - (m - 1))
    for a in range(lo, hi + 1):
        for tail in _positive_compositions(k - a, bounds[1:]):
            yield (a,) + tail


def contraction_matrix(
    f: Polynomial,
    source: Sequence[Exps],
    target: Sequence[Exps],
    field: Field = QQ,
) -> ExactMatrix:
    """Matrix of ``f ∘`` from span(source) to span(target).

    Images landing outside ``target`` are dropped, which is the right thing
    when ``target`` is closed under the relevant quotient.
    """
    tindex = {e: i for i, e in enumerate(target)}
    entries: dict[tuple[int, int], object] = {}
    for col, b in enumerate(source):
        for a, c in f.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                row = tindex.get(tuple(y - x for x, y in zip(a, b)))
                if row is not None:
                    entries[row, col] = field(entries.get((row, col), 0) + field(c))
    return ExactMatrix(len(target), len(source), ((r, c, v) for (r, c), v in entries.items() if v))


def _restrict(f: Polynomial, cx: SimplicialComplex) -> Polynomial:
    faces = cx.face_set
    return Polynomial(
        f.n,
        {e: c for e, c in f.terms.items() if tuple(i for i, x in enumerate(e) if x) in faces},
    )


def perp_matrix(
    cx: SimplicialComplex,
    extra: Sequence[Polynomial],
    k: int,
    field: Field = QQ,
) -> tuple[ExactMatrix, list[Exps]]:
    """Stacked contraction matrices of ``extra`` on the degree-k face-supported monomials."""
    cols = monomials_on_faces(cx, k)
    blocks = []
    for g in extra:
        deg = g.degree
        if deg is None or deg > k:
            continue
        g = _restrict(g.to_field(field), cx)
        blocks.append(contraction_matrix(g, cols, monomials_on_faces(cx, k - deg), field))
    entries = []
    offset = 0
    for B in blocks:
        entries.extend((r + offset, c, v) for (r, c), v in B.entries.items())
        offset += B.rows
    return ExactMatrix(offset, len(cols), entries), cols


def perp_basis(
    cx: SimplicialComplex,
    extra: Sequence[Polynomial],
    k: int,
    field: Field = QQ,
) -> list[Polynomial]:
    """Basis of (I_Δ + (extra))^{-1} in degree -k."""
    M, cols = perp_matrix(cx, extra, k, field)
    n = cx.n_vertices
    return [Polynomial(n, {e: c for e, c in zip(cols, v) if c}) for v in kernel_basis(M, field)]


def perp_dim(cx: SimplicialComplex, extra: Sequence[Polynomial], k: int, field: Field = QQ) -> int:
    M, cols = perp_matrix(cx, extra, k, field)
    return len(cols) - rank(M, field)


def elementary_extras(cx: SimplicialComplex) -> list[Polynomial]:
    """The universal system of parameters e_1, ..., e_{d+1}, restricted to faces."""
    return [elementary_symmetric(k, cx.n_vertices, cx) for k in range(1, cx.dim + 2)]


@dataclass(frozen=True)
class StressProfile:
    perp_dims: tuple[int, ...]
    generator_counts: tuple[int, ...]

    @property
    def generator_degrees(self) -> list[int]:
        return [k for k, g in enumerate(self.generator_counts) for _ in range(g)]


def _vectors(polys: Sequence[Polynomial], basis: Sequence[Exps]) -> ExactMatrix:
    index = {e: i for i, e in enumerate(basis)}
    return ExactMatrix(
        len(polys), len(basis),
        ((r, index[e], c) for r, P in enumerate(polys) for e, c in P.terms.items()),
    )


def dual_module_generators(
    cx: SimplicialComplex,
    extra: Sequence[Polynomial] | None = None,
    K: int | None = None,
    field: Field = QQ,
) -> StressProfile:
    """Per-degree generator counts of the inverse system of I_Δ + (extra).

    Count in degree k is dim perp_k minus the dimension of the span of all
    x_i ∘ G with G in perp_{k+1}.
    """
    if extra is None:
        extra = elementary_extras(cx)
    if K is None:
        K = comb(cx.dim + 2, 2)
    n = cx.n_vertices
    bases = [perp_basis(cx, extra, k, field) for k in range(K + 2)]
    if bases[K + 1]:
        raise NotArtinianError(f"perp space in degree {K + 1} is nonzero; ideal not artinian within bound")
    xs = [Polynomial.monomial(tuple(int(i == j) for j in range(n))) for i in range(n)]
    dims = [len(b) for b in bases[: K + 1]]
    gens = []
    for k in range(K + 1):
        images = [contract(x, G, field) for G in bases[k + 1] for x in xs]
        images = [P for P in images if P.terms]
        span = rank(_vectors(images, monomials_on_faces(cx, k)), field) if images else 0
        gens.append(dims[k] - span)
    return StressProfile(tuple(dims), tuple(gens))


def dual_lefschetz_ranks(
    cx: SimplicialComplex,
    extra: Sequence[Polynomial] | None,
    ell: Polynomial,
    j: int = 1,
    K: int | None = None,
    field: Field = QQ,
) -> tuple[list[int], list[int]]:
    """Ranks of ``ell^j ∘ : perp_k -> perp_{k-j}`` for k = j..K, and the perp dims.

    The image is taken in coordinates of the degree-(k-j) face-supported
    monomials; since the inverse system is a submodule this equals the rank
    of the restricted map.
    """
    if extra is None:
        extra = elementary_extras(cx)
    if K is None:
        K = comb(cx.dim + 2, 2)
    bases = [perp_basis(cx, extra, k, field) for k in range(K + 2)]
    if bases[K + 1]:
        raise NotArtinianError(f"perp space in degree {K + 1} is nonzero; ideal not artinian within bound")
    power = ell.to_field(field).pow(j, field)
    ranks = []
    for k in range(j, K + 1):
        images = [contract(power, G, field) for G in bases[k]]
        images = [P for P in images if P.terms]
        ranks.append(rank(_vectors(images, monomials_on_faces(cx, k - j)), field) if images else 0)
    return ranks, [len(b) for b in bases[: K + 1]]


def stress_vanishing_checks(
    cx: SimplicialComplex, F: Polynomial, field: Field = QQ
) -> dict[str, bool]:
    """Whether e_k ∘ F = 0 (k ≤ d+1) and m ∘ F = 0 for each minimal non-face m."""
    n = cx.n_vertices
    out = {}
    for k in range(1, cx.dim + 2):
        out[f"e{k}"] = contract(elementary_symmetric(k, n), F, field).is_zero()
    for nf in minimal_nonfaces(cx):
        e = tuple(int(i in nf) for i in range(n))
        label = "x_" + "_".join(str(cx.labels[v]) for v in nf)
        out[label] = contract(Polynomial.monomial(e), F, field).is_zero()
    return out


def polys_to_json(polys: Sequence[Polynomial], field: Field = QQ) -> str:
    return json.dumps([P.to_json(field) for P in polys])


def parse_linear_forms(text: str, cx: SimplicialComplex) -> list[Polynomial]:
    """Parse forms like ``"1/2*x2 - x0 + x1; x3 + x4"`` (indices are vertex labels)."""
    forms = []
    n = cx.n_vertices
    for chunk in text.split(";"):
        chunk = chunk.strip().replace(" ", "")
        if not chunk:
            continue
        chunk = chunk.replace("-", "+-")
        coeffs = [Fraction(0)] * n
        for term in chunk.split("+"):
            if not term:
                continue
            if "x" not in term:
                raise ValueError(f"term {term!r} is not linear")
            c, _, var = term.partition("x")
            c = c.rstrip("*")
            if c in ("", "+"):
                c = "1"
            elif c == "-":
                c = "-1"
            coeffs[cx.index_of(int(var))] += Fraction(c)
        forms.append(Polynomial.linear(coeffs))
    return forms
