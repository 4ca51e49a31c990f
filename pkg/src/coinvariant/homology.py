"""Simplicial chains, boundary maps and reduced Betti numbers over a field."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import Face, SimplicialComplex, classify_pseudomanifold, link
from .linalg import QQ, ExactMatrix, Field, kernel_basis, rank


@dataclass(frozen=True)
class Chain:
    degree: int
    coefficients: dict[Face, object]
    is_orientation: bool = False

    def coefficient_list(self, faces: list[Face]) -> list:
        return [self.coefficients.get(f, 0) for f in faces]


@dataclass(frozen=True)
class BettiProfile:
    field: Field
    betti: tuple[int, ...]  # betti[0] is the reduced Betti number in degree -1

    def at(self, i: int) -> int:
        return self.betti[i + 1]


def boundary_matrix(cx: SimplicialComplex, i: int, field: Field = QQ) -> ExactMatrix:
    """Matrix of ∂_i : C_i -> C_{i-1}; ∂_0 is the augmentation onto the empty face."""
    if not 0 <= i <= cx.dim:
        raise ValueError(f"boundary degree {i} outside 0..{cx.dim}")
    rows = cx.faces(i - 1)
    cols = cx.faces(i)
    index = {f: k for k, f in enumerate(rows)}
    entries = []
    for c, sigma in enumerate(cols):
        for j in range(len(sigma)):
            entries.append((index[sigma[:j] + sigma[j + 1:]], c, field(-1 if j % 2 else 1)))
    return ExactMatrix(len(rows), len(cols), entries)


def _boundary_ranks(cx: SimplicialComplex, field: Field) -> list[int]:
    # ranks[i] = rank ∂_i for i = 0..dim, plus rank ∂_{dim+1} = 0
    if cx.dim < 0:
        return [0]
    return [rank(boundary_matrix(cx, i, field), field) for i in range(cx.dim + 1)] + [0]


def reduced_betti(cx: SimplicialComplex, field: Field = QQ) -> BettiProfile:
    """Reduced Betti numbers β̃_{-1}, ..., β̃_{dim} over ``field``."""
    if cx.dim < 0:
        return BettiProfile(field, (1,))
    ranks = _boundary_ranks(cx, field)
    betti = [1 - ranks[0]]
    for i in range(cx.dim + 1):
        betti.append(len(cx.faces(i)) - ranks[i] - ranks[i + 1])
    return BettiProfile(field, tuple(betti))


def top_betti(cx: SimplicialComplex, field: Field = QQ) -> int:
    d = cx.dim
    if d == 0:
        return reduced_betti(cx, field).at(0)
    return len(cx.faces(d)) - rank(boundary_matrix(cx, d, field), field)


def top_cycle_space(cx: SimplicialComplex, field: Field = QQ) -> list[Chain]:
    """Basis of ker ∂_d as chains on the d-faces.

    When the complex is a pseudomanifold without boundary and the kernel is a
    line, the single basis chain is flagged as the orientation.
    """
    d = cx.dim
    faces = cx.faces(d)
    basis = kernel_basis(boundary_matrix(cx, d, field), field)
    orient = False
    if len(basis) == 1:
        orient = classify_pseudomanifold(cx).is_without_boundary
    return [
        Chain(d, {f: c for f, c in zip(faces, v) if c}, orient)
        for v in basis
    ]


def is_cycle(cx: SimplicialComplex, chain: Chain, field: Field = QQ) -> bool:
    if chain.degree != cx.dim:
        return False
    faces = cx.faces(cx.dim)
    if any(f not in cx.face_set for f in chain.coefficients):
        return False
    v = [field(x) for x in chain.coefficient_list(faces)]
    return not any(boundary_matrix(cx, cx.dim, field).matvec(v, field))


def reisner_check(cx: SimplicialComplex, field: Field = QQ) -> tuple[bool, bool]:
    """(Cohen-Macaulay, homology sphere) via link homology over ``field``."""
    cm = True
    sphere = True
    for faces in cx.faces_by_dim.values():
        for sigma in faces:
            lk = link(cx, sigma)
            b = reduced_betti(lk, field).betti
            top = len(b) - 1
            if any(b[:top]):
                cm = sphere = False
                return cm, sphere
            if b[top] != 1:
                sphere = False
    return cm, sphere
