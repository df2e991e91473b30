"""Depth and Serre depth of S/I^(l) for a Stanley-Reisner ideal I, computed
from the degree complexes of the symbolic powers.

For a facet list of Delta and a in N^V, the degree complex of I^(l) is generated
by the facets G with sum_{i not in G} a_i <= l - 1. Entries a_i >= l already
disqualify every facet omitting i, so each a can be capped at l and the
enumeration over {0..l}^V is finite and exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import hochster
from .complex_core import (
    INFINITY,
    BudgetExceeded,
    ComplexError,
    SimplicialComplex,
    is_matroid,
    is_pure,
    link,
    one_skeleton_diameter,
    t_diameter,
)
from .hochster import ABSENT, LocalCohDimProfile, NotPureError, closed_faces
from .homology import QQ, FieldSpec, homology_of_masks

DEFAULT_MAX_ENUM = 5_000_000
CHUNK = 1 << 16


def _bits(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if (mask >> v) & 1]


def _mask(face) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


# -- single degree complexes -------------------------------------------------------------


def takayama_complex(cx: SimplicialComplex, a: Sequence[int], ell: int) -> SimplicialComplex:
    """Degree complex of I_cx^(ell) at a (indexed by vertices 1..n)."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if len(a) != cx.n:
        raise ValueError(f"a has length {len(a)}, expected {cx.n}")
    if any(x < 0 for x in a):
        raise ValueError("a must be nonnegative")
    total = sum(a)
    keep = [F for F in cx.facets if total - sum(a[v - 1] for v in F) <= ell - 1]
    return SimplicialComplex.from_facets(cx.n, keep)


def cap_a(a: Sequence[int], ell: int) -> tuple[int, ...]:
    return tuple(min(x, ell) for x in a)


# -- enumeration kernel -------------------------------------------------------------------


def _enum_vertices(size: int, face: int, lk: tuple[int, ...], n: int, ghosts: bool) -> list[int]:
    active = 0
    for g in lk:
        active |= g
    if ghosts:
        return [v for v in range(1, n + 1) if not (face >> v) & 1]
    return _bits(active)


def _patterns(lk: tuple[int, ...], verts: list[int], ell: int, max_enum: int, face: int):
    """Distinct qualifying-facet patterns of the degree complexes over {0..ell}^verts.

    Yields (facet masks of the degree complex, witness a as a dict vertex -> value).
    """
    m = len(verts)
    total = (ell + 1) ** m
    if total > max_enum:
        raise BudgetExceeded(
            f"face {_bits(face)} needs {total} a-vectors (budget {max_enum})"
        )
    k = len(lk)
    # comp[v, g] = 1 when vertex v lies outside link facet g
    comp = np.array([[0 if (g >> v) & 1 else 1 for g in lk] for v in verts], dtype=np.int64).reshape(m, k)
    radix = (ell + 1) ** np.arange(m, dtype=np.int64)
    seen: dict[bytes, int] = {}
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        A = (idx[:, None] // radix[None, :]) % (ell + 1)
        qual = (A @ comp) <= ell - 1
        packed = np.packbits(qual, axis=1)
        uniq, first = np.unique(packed, axis=0, return_index=True)
        for row, pos in zip(uniq, first):
            key = row.tobytes()
            if key not in seen:
                seen[key] = int(idx[pos])
    out = []
    for key, code in seen.items():
        bits = np.unpackbits(np.frombuffer(key, dtype=np.uint8))[:k]
        masks = tuple(g for g, b in zip(lk, bits) if b)
        a = {v: (code // (ell + 1) ** t) % (ell + 1) for t, v in enumerate(verts)}
        out.append((masks, a))
    return out


@lru_cache(maxsize=50_000)
def _link_degrees(lk: tuple[int, ...], verts: tuple[int, ...], ell: int, p: int, max_enum: int):
    """Map raw homology index k (degree k - 1) to a witness a, over all a."""
    found: dict[int, dict] = {}
    for masks, a in _patterns(lk, list(verts), ell, max_enum, 0):
        if not masks:
            continue
        raw = homology_of_masks(masks, p)
        for k, h in enumerate(raw):
            if h and k not in found:
                found[k] = a
    return tuple(sorted((k, tuple(sorted(a.items()))) for k, a in found.items()))


@dataclass(frozen=True)
class SymbolicCohProfile:
    """Krull dimensions of the duals of the local cohomology of S/I^(l),
    with one (face, a) witness per present degree."""

    dims: dict
    krull_dim: int
    witnesses: dict

    def __getitem__(self, i: int):
        return self.dims.get(i, ABSENT)

    def as_local(self) -> LocalCohDimProfile:
        return LocalCohDimProfile(dict(self.dims), self.krull_dim)

    def depth(self) -> int:
        return self.as_local().depth()

    def serre_depth(self, r: int) -> int:
        return self.as_local().serre_depth(r)

    def to_json(self) -> dict:
        return {
            "dims": {str(i): self.dims.get(i, ABSENT) for i in range(self.krull_dim + 1)},
            "witnesses": {
                str(i): {"face": list(F), "a": {str(v): x for v, x in a}}
                for i, (F, a) in sorted(self.witnesses.items())
            },
        }


def _face_contributions(cx: SimplicialComplex, ell: int, p: int, max_enum: int, ghosts: bool):
    for size, F, lk in closed_faces(cx.facet_masks):
        verts = tuple(_enum_vertices(size, F, lk, cx.n, ghosts))
        for k, a in _link_degrees(lk, verts, ell, p, max_enum):
            yield size, F, (k - 1) + size + 1, a


def _check(cx: SimplicialComplex, ell: int):
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if cx.is_void:
        raise ComplexError("the void complex has the zero ring")


def symbolic_coh_profile(
    cx: SimplicialComplex,
    ell: int,
    field: FieldSpec = QQ,
    max_enum: int = DEFAULT_MAX_ENUM,
    ghosts: bool = False,
) -> SymbolicCohProfile:
    _check(cx, ell)
    d = cx.krull_dim
    dims = {i: ABSENT for i in range(d + 1)}
    wit = {}
    for size, F, i, a in _face_contributions(cx, ell, field.p, max_enum, ghosts):
        if dims[i] is ABSENT or size > dims[i]:
            dims[i] = size
            wit[i] = (tuple(_bits(F)), a)
    return SymbolicCohProfile(dims, d, wit)


def symbolic_depth(
    cx: SimplicialComplex,
    ell: int,
    field: FieldSpec = QQ,
    max_enum: int = DEFAULT_MAX_ENUM,
    ghosts: bool = False,
) -> int:
    _check(cx, ell)
    best = None
    # faces come in increasing size and a face of size s only reaches degrees >= s
    for size, F, lk in closed_faces(cx.facet_masks):
        if best is not None and size >= best:
            break
        verts = tuple(_enum_vertices(size, F, lk, cx.n, ghosts))
        degs = _link_degrees(lk, verts, ell, field.p, max_enum)
        if degs:
            i = degs[0][0] + size
            best = i if best is None else min(best, i)
    return best


def symbolic_serre_depth(
    cx: SimplicialComplex,
    ell: int,
    r: int,
    field: FieldSpec = QQ,
    max_enum: int = DEFAULT_MAX_ENUM,
    ghosts: bool = False,
) -> int:
    if not is_pure(cx):
        raise NotPureError("Serre depth needs a pure complex")
    if r < 2:
        raise ValueError("r must be at least 2")
    return symbolic_coh_profile(cx, ell, field, max_enum, ghosts).serre_depth(r)


def depth_sequence(cx: SimplicialComplex, ell_max: int, field: FieldSpec = QQ, max_enum: int = DEFAULT_MAX_ENUM) -> list[int]:
    return [symbolic_depth(cx, ell, field, max_enum) for ell in range(1, ell_max + 1)]


def serre_depth_sequence(
    cx: SimplicialComplex, ell_max: int, r: int = 2, field: FieldSpec = QQ, max_enum: int = DEFAULT_MAX_ENUM
) -> list[int]:
    return [symbolic_serre_depth(cx, ell, r, field, max_enum) for ell in range(1, ell_max + 1)]


# -- first local cohomology ----------------------------------------------------------------


def _connected(masks) -> bool:
    if not masks:
        return True
    reach = masks[0]
    rest = list(masks[1:])
    grew = True
    while grew and rest:
        grew = False
        keep = []
        for g in rest:
            if g & reach:
                reach |= g
                grew = True
            else:
                keep.append(g)
        rest = keep
    return not rest


def h1_vanishes(cx: SimplicialComplex, ell: int, max_enum: int = DEFAULT_MAX_ENUM) -> bool:
    """H^1_m(S/I^(ell)) = 0, read off directly: every degree complex at the
    empty face is connected and no facet is a single vertex."""
    _check(cx, ell)
    fms = cx.facet_masks
    if any(g.bit_count() == 1 for g in fms):
        return False
    verts = _bits(_mask(cx.vertices))
    return all(_connected(masks) for masks, _ in _patterns(fms, verts, ell, max_enum, 0))


def _criterion_vectors(n: int, F0: int, G0: int, ell: int) -> np.ndarray:
    """All a in {0..ell-1}^n with sum >= ell and both complement sums equal to ell - 1."""
    idx = np.arange(ell ** n, dtype=np.int64)
    A = (idx[:, None] // (ell ** np.arange(n, dtype=np.int64))[None, :]) % ell
    outF = np.array([0 if (F0 >> v) & 1 else 1 for v in range(1, n + 1)])
    outG = np.array([0 if (G0 >> v) & 1 else 1 for v in range(1, n + 1)])
    ok = (A @ outF == ell - 1) & (A @ outG == ell - 1) & (A.sum(axis=1) >= ell)
    return A[ok]


def h1_vanishes_criterion(cx: SimplicialComplex, ell: int) -> bool:
    """Combinatorial test: for disjoint facets F0, G0 and every extremal a, some
    facets F, G of the degree complex satisfy F meets F0, G meets G0, F meets G."""
    if ell < 2:
        raise ValueError("the criterion needs ell >= 2")
    if cx.dim < 1:
        raise ValueError("the criterion needs dim >= 1")
    n = cx.n
    fms = cx.facet_masks
    # comp[g] = indicator of the complement of facet g on vertices 1..n
    comp = np.array([[0 if (g >> v) & 1 else 1 for g in fms] for v in range(1, n + 1)], dtype=np.int64)
    meets = [[bool(g & h) for h in fms] for g in fms]
    for x, y in itertools.combinations(range(len(fms)), 2):
        F0, G0 = fms[x], fms[y]
        if F0 & G0:
            continue
        A = _criterion_vectors(n, F0, G0, ell)
        if not len(A):
            continue
        qual = (A @ comp) <= ell - 1
        for row in np.unique(qual, axis=0):
            facets = [t for t in range(len(fms)) if row[t]]
            near_F = [t for t in facets if fms[t] & F0]
            near_G = [t for t in facets if fms[t] & G0]
            if not any(meets[s][t] for s in near_F for t in near_G):
                return False
    return True


def s2_depth_via_h1(cx: SimplicialComplex, ell: int, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """S_2-depth of S/I^(ell) as 1 + min |F| over faces whose link ring has
    nonzero first local cohomology; the dimension when there is none."""
    if not is_pure(cx):
        raise NotPureError("Serre depth needs a pure complex")
    _check(cx, ell)
    for size in range(cx.krull_dim):
        for F in cx.faces(size):
            lk = link(cx, F)
            if not h1_vanishes(lk, ell, max_enum):
                return size + 1
    return cx.krull_dim


# -- diameter criteria -------------------------------------------------------------------


def s2_second_power_bound(cx: SimplicialComplex, s: int) -> bool:
    """Every face F with dim link F >= d - s + 1 has a link whose graph has diameter <= 2."""
    if not is_pure(cx):
        raise NotPureError("needs a pure complex")
    d = cx.krull_dim
    if not 2 <= s <= d:
        raise ValueError(f"s must lie in 2..{d}")
    for size in range(s - 1):
        for F in cx.faces(size):
            if one_skeleton_diameter(link(cx, F)) > 2:
                return False
    return True


def diam_criterion_s2_depth(cx: SimplicialComplex) -> int:
    """Largest s with the second-power diameter bound, or 1 when s = 2 fails."""
    d = cx.krull_dim
    if d < 2:
        raise ValueError("needs dim >= 1")
    best = 1
    for s in range(2, d + 1):
        if not s2_second_power_bound(cx, s):
            break
        best = s
    return best


def t_diam_sufficient(cx: SimplicialComplex, ell: int) -> bool:
    """Whether the (ell-1)-diameter is at most 2 (a sufficient condition for H^1 = 0).

    Returns False when ell exceeds dim, where the condition does not apply.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if ell > cx.dim:
        return False
    return t_diameter(cx, ell - 1) <= 2


# -- one-dimensional classification --------------------------------------------------------

MATROID = "matroid"
DIAM2_NOT_MATROID = "diam<=2_not_matroid"
FINITE_DIAM3 = "finite_diam>=3"
DISCONNECTED = "disconnected"

_PATTERNS = {
    MATROID: (2, 2, 2),
    DIAM2_NOT_MATROID: (2, 2, 1),
    FINITE_DIAM3: (2, 1, 1),
    DISCONNECTED: (1, 1, 1),
}


def classify_dim1(cx: SimplicialComplex) -> str:
    if cx.dim != 1:
        raise ValueError("classification applies to one-dimensional complexes")
    diam = one_skeleton_diameter(cx)
    if diam == INFINITY:
        return DISCONNECTED
    if diam >= 3:
        return FINITE_DIAM3
    return MATROID if is_matroid(cx) else DIAM2_NOT_MATROID


def predicted_depth_sequence(label: str, length: int) -> list[int]:
    """Depth sequence for l = 1..length predicted by the dimension-one classification."""
    head = _PATTERNS[label]
    return [head[min(i, 2)] for i in range(length)]
