"""Betti tables, local cohomology dimension profiles, depth and Serre depth
of Stanley-Reisner rings, all read off reduced homology of restrictions and links.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .complex_core import (
    BudgetExceeded,
    ComplexError,
    SimplicialComplex,
    is_pure,
    skeleton,
)
from .homology import QQ, FieldSpec, faces_by_size, homology_of_masks

DEFAULT_BETTI_LIMIT = 14
ABSENT = None


class NotPureError(ComplexError):
    """Serre depth is only defined here for pure complexes (unmixed rings)."""


# -- Betti tables -------------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of k[Delta]: entries[(i, j)] = beta_{i,j}, zeros omitted."""

    n: int
    entries: dict

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def ideal(self, i: int, j: int) -> int:
        """beta_{i,j} of the Stanley-Reisner ideal, i.e. beta_{i+1,j} of the ring."""
        return self.entries.get((i + 1, j), 0)

    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def indeg(self) -> float | int:
        """Least degree of a generator of the ideal (inf for the zero ideal)."""
        return min((j for i, j in self.entries if i == 1), default=float("inf"))

    def reg_leq(self, r: int) -> float | int:
        """max{j : beta_{i,i+j}(I) != 0 for some i <= r}, ideal indexing."""
        return max((j - i + 1 for i, j in self.entries if 1 <= i <= r + 1), default=float("-inf"))

    def ring_reg_leq(self, r: int) -> int:
        """max{j : beta_{i,i+j}(k[Delta]) != 0 for some i <= r}, ring indexing."""
        return max(j - i for i, j in self.entries if i <= r)

    def satisfies_N(self, c: int, r: int) -> bool:
        """beta_{i,j}(I) = 0 for all i < r and j != i + c."""
        return all(j - i + 1 == c for i, j in self.entries if 1 <= i <= r)

    def rows(self):
        """Grid rows for display: list of (row index j - i, [beta_{i, i+row} for each column i])."""
        if not self.entries:
            return []
        pd = self.pd()
        top = self.reg()
        return [(k, [self.entries.get((i, i + k), 0) for i in range(pd + 1)]) for k in range(top + 1)]

    def render(self) -> str:
        rows = self.rows()
        if not rows:
            return "0"
        ncol = len(rows[0][1])
        cells = [[str(v) if v else "." for v in vals] for _, vals in rows]
        width = max(len(c) for row in cells for c in row + [str(ncol - 1)])
        label_w = max([len("total:")] + [len(f"{k}:") for k, _ in rows])
        head = " " * (label_w + 1) + " ".join(str(i).rjust(width) for i in range(ncol))
        total = [sum(vals[i] for _, vals in rows) for i in range(ncol)]
        tot_line = "total:".rjust(label_w) + " " + " ".join(str(t).rjust(width) for t in total)
        body = [f"{k}:".rjust(label_w) + " " + " ".join(c.rjust(width) for c in row) for (k, _), row in zip(rows, cells)]
        return "\n".join([head, tot_line] + body)

    def to_json(self) -> dict:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}


def _restrict_masks(facet_masks, w: int) -> tuple[int, ...]:
    traces = sorted({fm & w for fm in facet_masks}, key=lambda m: -m.bit_count())
    kept: list[int] = []
    for t in traces:
        if not any(t & k == t for k in kept):
            kept.append(t)
    return tuple(sorted(kept))


def betti_table(cx: SimplicialComplex, field: FieldSpec = QQ, limit: int = DEFAULT_BETTI_LIMIT) -> BettiTable:
    if cx.is_void:
        raise ComplexError("the void complex has the zero ring")
    if cx.n > limit:
        raise BudgetExceeded(f"Betti table sums over 2^{cx.n} restrictions; limit is n <= {limit}")
    return BettiTable(cx.n, dict(_betti_entries(cx.facet_masks, cx.n, field.p)))


@lru_cache(maxsize=4096)
def _betti_entries(facet_masks, n: int, p: int):
    acc: dict[tuple[int, int], int] = {}
    for sub in range(1 << n):
        w = sub << 1
        j = sub.bit_count()
        raw = homology_of_masks(_restrict_masks(facet_masks, w), p)
        for k, h in enumerate(raw):
            if h:
                i = j - (k - 1) - 1
                acc[(i, j)] = acc.get((i, j), 0) + h
    return tuple(sorted(acc.items()))


# -- local cohomology profiles ----------------------------------------------------------


@dataclass(frozen=True)
class LocalCohDimProfile:
    """dims[j] = Krull dimension of K^j (graded dual of H^j_m), or ABSENT when K^j = 0."""

    dims: dict
    krull_dim: int

    def __getitem__(self, j: int):
        return self.dims.get(j, ABSENT)

    def present(self) -> list[int]:
        return [j for j, v in sorted(self.dims.items()) if v is not ABSENT]

    def depth(self) -> int:
        return min(self.present())

    def serre_depth(self, r: int) -> int:
        for j in range(self.krull_dim + 1):
            v = self.dims.get(j, ABSENT)
            if v is not ABSENT and v >= j - r + 1:
                return j
        raise AssertionError("top local cohomology must qualify")

    def to_json(self) -> dict:
        return {str(j): self.dims.get(j, ABSENT) for j in range(self.krull_dim + 1)}


FACE_ENUM_BUDGET = 1 << 26


def closed_faces(facet_masks) -> list[tuple[int, int, tuple[int, ...]]]:
    """(size, face, link facets) for every face whose link is not a cone.

    A face whose link is a cone (some vertex outside it lies in every facet
    containing it) has acyclic link, so it never contributes to Hochster sums
    over links. The remaining faces are exactly the intersections of facets.
    """
    fms = np.array(facet_masks, dtype=np.int64)
    if sum(1 << int(fm).bit_count() for fm in facet_masks) > FACE_ENUM_BUDGET:
        raise BudgetExceeded("face enumeration exceeds budget")
    chunks = []
    for fm in facet_masks:
        pos = [v for v in range(fm.bit_length()) if (fm >> v) & 1]
        ar = np.arange(1 << len(pos), dtype=np.int64)
        sub = np.zeros_like(ar)
        for k, v in enumerate(pos):
            sub |= ((ar >> k) & 1) << v
        chunks.append(sub)
    faces = np.unique(np.concatenate(chunks))
    common = np.full(len(faces), -1, dtype=np.int64)
    for fm in fms:
        common = np.where((faces & fm) == faces, common & fm, common)
    closed = faces[common == faces]
    out = []
    for F in closed.tolist():
        lk = fms[(fms & F) == F] ^ F
        out.append((F.bit_count(), F, tuple(sorted(lk.tolist()))))
    out.sort()
    return out


@lru_cache(maxsize=4096)
def _closed_faces_cached(facet_masks):
    return closed_faces(facet_masks)


@lru_cache(maxsize=20_000)
def _profile_of_masks(facet_masks: tuple[int, ...], p: int) -> tuple:
    best: dict[int, int] = {}
    for size, _, lk in _closed_faces_cached(facet_masks):
        raw = homology_of_masks(lk, p)
        for k, h in enumerate(raw):
            if h:
                j = (k - 1) + size + 1
                best[j] = max(best.get(j, -1), size)
    return tuple(sorted(best.items()))


@lru_cache(maxsize=20_000)
def _depth_of_masks(facet_masks: tuple[int, ...], p: int) -> int:
    best = None
    for size, _, lk in _closed_faces_cached(facet_masks):
        if best is not None and size >= best:
            break
        raw = homology_of_masks(lk, p)
        for k, h in enumerate(raw):
            if h:
                j = (k - 1) + size + 1
                best = j if best is None else min(best, j)
                break
    return best


def local_coh_dims(cx: SimplicialComplex, field: FieldSpec = QQ) -> LocalCohDimProfile:
    if cx.is_void:
        raise ComplexError("the void complex has the zero ring")
    d = cx.krull_dim
    dims = {j: ABSENT for j in range(d + 1)}
    dims.update(dict(_profile_of_masks(cx.facet_masks, field.p)))
    return LocalCohDimProfile(dims, d)


def depth(cx: SimplicialComplex, field: FieldSpec = QQ) -> int:
    if cx.is_void:
        raise ComplexError("the void complex has the zero ring")
    return _depth_of_masks(cx.facet_masks, field.p)


def _require_pure(cx: SimplicialComplex):
    if cx.is_void:
        raise ComplexError("the void complex has the zero ring")
    if not is_pure(cx):
        raise NotPureError("Serre depth needs a pure complex")


def serre_depth(cx: SimplicialComplex, r: int, field: FieldSpec = QQ) -> int:
    if r < 2:
        raise ValueError("r must be at least 2")
    _require_pure(cx)
    return local_coh_dims(cx, field).serre_depth(r)


def satisfies_serre(cx: SimplicialComplex, r: int, field: FieldSpec = QQ) -> bool:
    return serre_depth(cx, r, field) == cx.krull_dim


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    return depth(cx, field) == cx.krull_dim


def serre_depth_via_links(cx: SimplicialComplex, r: int, field: FieldSpec = QQ) -> int:
    """Largest s with H_i(link F) = 0 for all i <= r-2 and all faces |F| <= s-i-2."""
    if r < 2:
        raise ValueError("r must be at least 2")
    _require_pure(cx)
    by = faces_by_size(cx.facet_masks)
    masks = cx.facet_masks
    # smallest face size carrying nonzero H_i for each i <= r-2
    worst = None
    for size in sorted(by):
        for F in by[size]:
            lk = tuple(sorted(fm ^ F for fm in masks if fm & F == F))
            raw = homology_of_masks(lk, field.p)
            for k, h in enumerate(raw):
                i = k - 1
                if h and i <= r - 2:
                    # this face blocks every s with size <= s - i - 2
                    bound = size + i + 1
                    worst = bound if worst is None else min(worst, bound)
    d = cx.krull_dim
    return d if worst is None else min(d, worst)


def serre_depth_via_skeleton(cx: SimplicialComplex, r: int, field: FieldSpec = QQ) -> int:
    """1 + max{i : the i-skeleton satisfies (S_r)}."""
    _require_pure(cx)
    d = cx.krull_dim
    if not 2 <= r <= d:
        raise ValueError(f"r must lie in 2..{d}")
    best = -1
    for i in range(-1, d):
        if satisfies_serre(skeleton(cx, i), r, field):
            best = i
    return best + 1


def depth_via_skeleton(cx: SimplicialComplex, field: FieldSpec = QQ) -> int:
    """1 + max{i : the i-skeleton is Cohen-Macaulay}."""
    best = -1
    for i in range(-1, cx.krull_dim):
        if is_cohen_macaulay(skeleton(cx, i), field):
            best = i
    return best + 1


def reg_leq(cx: SimplicialComplex, r: int, field: FieldSpec = QQ):
    """reg_{<= r} of the Stanley-Reisner ideal."""
    return betti_table(cx, field).reg_leq(r)


def indeg(cx: SimplicialComplex, field: FieldSpec = QQ):
    return betti_table(cx, field).indeg()


def satisfies_N_cr(cx: SimplicialComplex, c: int, r: int, field: FieldSpec = QQ) -> bool:
    return betti_table(cx, field).satisfies_N(c, r)


def dual_linear_bound(cx: SimplicialComplex, r: int, field: FieldSpec = QQ) -> int:
    """max{j : beta_{i,i+j}(k[dual]) != 0 for some i <= r}."""
    from .complex_core import alexander_dual

    return betti_table(alexander_dual(cx), field).ring_reg_leq(r)


def linear_part_length(cx: SimplicialComplex, r: int, field: FieldSpec = QQ) -> int:
    """max{i : beta_{i,i+j}(k[Delta]) != 0 for some j < r}."""
    bt = betti_table(cx, field)
    return max(i for i, j in bt.entries if j - i < r)
