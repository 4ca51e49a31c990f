"""Finite simplicial complexes and their combinatorial invariants.

Vertices are stored as dense indices ``0..n_vertices-1``; the original
(printed) labels live in ``labels`` and are only used for I/O.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Raised for malformed complexes or invalid face arguments."""


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: tuple[Face, ...]
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n_vertices)))
        if len(self.labels) != self.n_vertices:
            raise ComplexError("labels must have one entry per vertex")
        for F in self.facets:
            if any(v < 0 or v >= self.n_vertices for v in F):
                raise ComplexError(f"facet {F} has a vertex outside 0..{self.n_vertices - 1}")
            if list(F) != sorted(set(F)):
                raise ComplexError(f"facet {F} is not a sorted vertex set")

    @property
    def dim(self) -> int:
        return max(len(F) for F in self.facets) - 1

    @cached_property
    def faces_by_dim(self) -> dict[int, list[Face]]:
        """All faces grouped by dimension (``-1`` holds the empty face), each sorted."""
        seen: dict[int, set[Face]] = {i: set() for i in range(-1, self.dim + 1)}
        for F in self.facets:
            for k in range(len(F) + 1):
                seen[k - 1].update(combinations(F, k))
        return {i: sorted(s) for i, s in seen.items()}

    @cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset(f for faces in self.faces_by_dim.values() for f in faces)

    def faces(self, i: int) -> list[Face]:
        return self.faces_by_dim.get(i, [])

    def is_face(self, sigma: Iterable[int]) -> bool:
        return tuple(sorted(sigma)) in self.face_set

    def relabel(self, labels: Sequence[int]) -> "SimplicialComplex":
        return SimplicialComplex(self.n_vertices, self.facets, tuple(labels))

    def labelled_facets(self) -> list[list[int]]:
        return [[self.labels[v] for v in F] for F in self.facets]

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ComplexError(f"unknown vertex label {label}") from None

    def __repr__(self):
        return f"SimplicialComplex(n={self.n_vertices}, dim={self.dim}, facets={self.labelled_facets()})"


def _prune(faces: Iterable[Face]) -> tuple[Face, ...]:
    # drop anything contained in a strictly larger face
    uniq = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for f in uniq:
        s = frozenset(f)
        if not any(s < k for k in kept):
            kept.append(s)
    return tuple(sorted(tuple(sorted(s)) for s in kept))


def from_facets(raw: Sequence[Sequence[int]], labels: Sequence[int] | None = None) -> SimplicialComplex:
    """Build a complex from a list of faces given by vertex labels.

    Faces contained in other listed faces are dropped and duplicates removed.
    Labels are mapped to dense indices in increasing order; ``labels`` may be
    passed to fix the vertex universe (e.g. to keep isolated non-vertices).
    """
    if not raw:
        raise ComplexError("empty facet list")
    for F in raw:
        for v in F:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ComplexError(f"vertex id {v!r} is not an integer")
            if v < 0:
                raise ComplexError(f"negative vertex id {v}")
    used = sorted({v for F in raw for v in F})
    if not used:
        raise ComplexError("complex {∅} is not accepted; give at least one vertex")
    if labels is None:
        labels = used
    else:
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise ComplexError("duplicate labels")
        missing = set(used) - set(labels)
        if missing:
            raise ComplexError(f"facet vertices {sorted(missing)} not among labels")
    index = {lab: i for i, lab in enumerate(labels)}
    faces = [tuple(sorted({index[v] for v in F})) for F in raw]
    faces = [f for f in faces if f]
    return SimplicialComplex(len(labels), _prune(faces), tuple(labels))


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the simplex on vertices ``1..n``."""
    return from_facets([list(c) for c in combinations(range(1, n + 1), n - 1)])


def full_simplex(n: int) -> SimplicialComplex:
    return from_facets([list(range(1, n + 1))])


def skeleton(n: int, k: int) -> SimplicialComplex:
    """The k-skeleton of the simplex on vertices ``0..n-1``."""
    return SimplicialComplex(n, tuple(combinations(range(n), k + 1)))


@dataclass(frozen=True)
class FVector:
    f: tuple[int, ...]  # f[0] is f_{-1}
    h: tuple[int, ...]
    g: tuple[int, ...]

    def f_at(self, i: int) -> int:
        return self.f[i + 1]


def fhg_vectors(cx: SimplicialComplex) -> FVector:
    d = cx.dim
    f = tuple(len(cx.faces(i)) for i in range(-1, d + 1))
    # sum_i f_{i-1} (t-1)^{d+1-i} = sum_k h_k t^{d+1-k}
    h = []
    for k in range(d + 2):
        h.append(sum((-1) ** (k - i) * comb(d + 1 - i, k - i) * f[i] for i in range(k + 1)))
    g = [1] + [h[i] - h[i - 1] for i in range(1, (d + 2) // 2 + 1)]
    return FVector(f, tuple(h), tuple(g))


def link(cx: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Link of a face (given in vertex indices) on the same vertex universe."""
    s = tuple(sorted(set(sigma)))
    if s not in cx.face_set:
        raise ComplexError(f"{s} is not a face")
    ss = set(s)
    faces = [tuple(v for v in F if v not in ss) for F in cx.facets if ss.issubset(F)]
    return SimplicialComplex(cx.n_vertices, _prune(faces), cx.labels)


def minimal_nonfaces(cx: SimplicialComplex) -> list[Face]:
    """Inclusion-minimal non-faces, i.e. generators of the Stanley-Reisner ideal."""
    out: list[Face] = []
    faces = cx.face_set
    # level k candidates: sets whose (k-1)-subsets are all faces
    level = [(v,) for v in range(cx.n_vertices)]
    size = 1
    while level and size <= cx.dim + 2:
        nxt_base = []
        for c in level:
            if all(c[:j] + c[j + 1:] in faces for j in range(len(c))):
                if c in faces:
                    nxt_base.append(c)
                else:
                    out.append(c)
        # extend faces of this size by a larger vertex
        level = [c + (v,) for c in nxt_base for v in range(c[-1] + 1, cx.n_vertices)]
        size += 1
    return sorted(out, key=lambda c: (len(c), c))


@dataclass(frozen=True)
class PseudomanifoldReport:
    is_pure: bool
    is_strongly_connected: bool
    max_ridge_degree: int
    boundary_ridges: tuple[Face, ...]
    is_pseudomanifold: bool
    is_without_boundary: bool
    cone_apexes: tuple[int, ...]


def classify_pseudomanifold(cx: SimplicialComplex) -> PseudomanifoldReport:
    d = cx.dim
    pure = all(len(F) == d + 1 for F in cx.facets)
    top = [F for F in cx.facets if len(F) == d + 1]
    ridge_facets: dict[Face, list[int]] = {}
    for idx, F in enumerate(top):
        for j in range(len(F)):
            ridge_facets.setdefault(F[:j] + F[j + 1:], []).append(idx)
    max_deg = max((len(v) for v in ridge_facets.values()), default=0)
    boundary = tuple(sorted(r for r, fs in ridge_facets.items() if len(fs) == 1))

    # BFS over the facet-ridge adjacency graph
    if pure and top:
        adj: dict[int, set[int]] = {i: set() for i in range(len(top))}
        for fs in ridge_facets.values():
            for a in fs:
                adj[a].update(b for b in fs if b != a)
        seen = {0}
        queue = deque([0])
        while queue:
            a = queue.popleft()
            for b in adj[a] - seen:
                seen.add(b)
                queue.append(b)
        strongly = len(seen) == len(top)
    else:
        strongly = False
    pm = pure and strongly and max_deg <= 2
    apexes = tuple(v for v in range(cx.n_vertices) if all(v in F for F in cx.facets))
    return PseudomanifoldReport(pure, strongly, max_deg, boundary, pm, pm and not boundary, apexes)


def load_complex(path: str | Path) -> SimplicialComplex:
    data = json.loads(Path(path).read_text())
    return complex_from_json(data)


def complex_from_json(data: dict) -> SimplicialComplex:
    if not isinstance(data, dict) or "facets" not in data:
        raise ComplexError("complex JSON must be an object with a 'facets' key")
    return from_facets(data["facets"], data.get("labels"))


def complex_to_json(cx: SimplicialComplex) -> dict:
    return {"labels": list(cx.labels), "facets": cx.labelled_facets()}


def dump_complex(cx: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(json.dumps(complex_to_json(cx)) + "\n")
