"""Reduced simplicial homology over Q or a prime field, computed exactly.

Faces are handled as bitmasks. Ranks over Q use fraction-free elimination on
sparse integer rows, ranks over F_p use modular elimination.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from .complex_core import BudgetExceeded, SimplicialComplex

DEFAULT_FACE_BUDGET = 2_000_000


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: p = 0 means the rationals, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("fp:"):
            return cls(int(t[3:]))
        raise ValueError(f"unknown field {text!r}; use q or fp:P")

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"


QQ = FieldSpec(0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class HomologyProfile:
    dims: dict = dc_field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def is_zero(self) -> bool:
        return not any(self.dims.values())

    def to_json(self) -> dict:
        return {str(i): v for i, v in sorted(self.dims.items())}


# -- linear algebra --------------------------------------------------------------


def _rank_q(rows) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                g = 0
                for v in r.values():
                    g = math.gcd(g, v)
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
                pivots[c] = r
                rank += 1
                break
            a, b = r[c], piv[c]
            new = {k: b * v for k, v in r.items()}
            for k, v in piv.items():
                x = new.get(k, 0) - a * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = math.gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            r = new
    return rank


def _rank_p(rows, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {k: v % p for k, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                rank += 1
                break
            a = r[c]
            for k, v in piv.items():
                x = (r.get(k, 0) - a * v) % p
                if x:
                    r[k] = x
                else:
                    r.pop(k, None)
    return rank


def rank(rows, fld: FieldSpec = QQ) -> int:
    """Rank of a sparse matrix given as an iterable of {column: entry} rows."""
    return _rank_q(rows) if fld.p == 0 else _rank_p(rows, fld.p)


# -- chain complex ---------------------------------------------------------------


def faces_by_size(facet_masks, budget: int = DEFAULT_FACE_BUDGET) -> dict[int, list[int]]:
    """Faces of a complex as bitmasks, grouped by cardinality (including the empty face)."""
    seen: dict[int, set[int]] = {}
    total = 0
    for fm in facet_masks:
        verts = [v for v in range(fm.bit_length()) if (fm >> v) & 1]
        total += 1 << len(verts)
        if total > budget * 4:
            raise BudgetExceeded(f"face enumeration exceeds budget {budget}")
        for k in range(len(verts) + 1):
            bucket = seen.setdefault(k, set())
            for c in combinations(verts, k):
                m = 0
                for v in c:
                    m |= 1 << v
                bucket.add(m)
    if sum(len(b) for b in seen.values()) > budget:
        raise BudgetExceeded(f"complex has more than {budget} faces")
    return {k: sorted(b) for k, b in seen.items()}


def boundary_rows(faces: list[int]):
    """Rows of the boundary map on faces of one size: face -> signed codimension-one faces."""
    for f in faces:
        row = {}
        sign = 1
        m = f
        while m:
            low = m & -m
            row[f ^ low] = sign
            sign = -sign
            m ^= low
        yield row


def boundary_squared_is_zero(facet_masks) -> bool:
    by = faces_by_size(facet_masks)
    for k in range(2, max(by) + 1):
        bk = {f: r for f, r in zip(by[k], boundary_rows(by[k]))}
        lower = {f: r for f, r in zip(by[k - 1], boundary_rows(by[k - 1]))}
        for f, r in bk.items():
            acc: dict[int, int] = {}
            for g, s in r.items():
                for h, t in lower[g].items():
                    acc[h] = acc.get(h, 0) + s * t
            if any(acc.values()):
                return False
    return True


def _components(facet_masks) -> int:
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for fm in facet_masks:
        low = fm & -fm
        v0 = low.bit_length() - 1
        parent.setdefault(v0, v0)
        m = fm ^ low
        while m:
            lb = m & -m
            v = lb.bit_length() - 1
            parent.setdefault(v, v)
            a, b = find(v0), find(v)
            if a != b:
                parent[a] = b
            m ^= lb
    return len({find(x) for x in parent})


def strong_core(facet_masks) -> list[int]:
    """Repeatedly delete dominated vertices (those whose link is a cone).

    Each deletion is a strong collapse, so the homotopy type is unchanged.
    """
    fms = list(facet_masks)
    changed = True
    while changed and len(fms) > 1:
        changed = False
        verts = 0
        for fm in fms:
            verts |= fm
        while verts:
            vb = verts & -verts
            verts ^= vb
            common = -1
            for fm in fms:
                if fm & vb:
                    common &= fm
            if common == -1 or common == vb:
                continue
            keep = [fm for fm in fms if not fm & vb]
            for fm in fms:
                if fm & vb:
                    g = fm ^ vb
                    if not any(g & k == g for k in keep):
                        keep.append(g)
            fms = keep
            changed = True
            if len(fms) == 1:
                break
    return fms


def _deletion(fms, vb: int) -> list[int]:
    keep = [fm for fm in fms if not fm & vb]
    for fm in fms:
        if fm & vb:
            g = fm ^ vb
            if not any(g & k == g for k in keep):
                keep.append(g)
    return keep


def reduced_core(facet_masks, p: int = 0) -> list[int]:
    """Shrink a complex without changing its reduced homology over the field.

    Besides strong collapses, a vertex whose link is acyclic can be deleted:
    the complex is the union of the deletion and a cone (the star) meeting
    in that link, so Mayer-Vietoris gives isomorphic reduced homology.
    """
    fms = strong_core(facet_masks)
    changed = True
    while changed and len(fms) > 1:
        changed = False
        verts = 0
        for fm in fms:
            verts |= fm
        while verts:
            vb = verts & -verts
            verts ^= vb
            lk = tuple(sorted(fm ^ vb for fm in fms if fm & vb))
            if lk == (0,):
                continue
            if not any(homology_of_masks(lk, p)):
                fms = strong_core(_deletion(fms, vb))
                changed = True
                break
    return fms


@lru_cache(maxsize=200_000)
def homology_of_masks(facet_masks: tuple[int, ...], p: int = 0) -> tuple[int, ...]:
    """Reduced Betti numbers (index 0 is degree -1) of the complex with these facet bitmasks."""
    if not facet_masks:
        return ()
    if facet_masks == (0,):
        return (1,)
    top = max(fm.bit_count() for fm in facet_masks)
    if len(facet_masks) > 2 and top > 2:
        core = tuple(sorted(reduced_core(facet_masks, p)))
    else:
        core = facet_masks
    raw = _core_homology(core, p)
    return raw + (0,) * (top + 1 - len(raw))


def join_factors(facet_masks) -> list[tuple[int, ...]] | None:
    """Split a complex as a join of complexes on disjoint vertex sets, if possible."""
    m = len(facet_masks)
    inc: dict[int, int] = {}
    for k, fm in enumerate(facet_masks):
        x = fm
        while x:
            b = x & -x
            inc[b] = inc.get(b, 0) | (1 << k)
            x ^= b
    verts = list(inc)
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cnt = {v: inc[v].bit_count() for v in verts}
    for a in range(len(verts)):
        u = verts[a]
        for b in range(a + 1, len(verts)):
            v = verts[b]
            if (inc[u] & inc[v]).bit_count() * m != cnt[u] * cnt[v]:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
    groups: dict[int, int] = {}
    for v in verts:
        r = find(v)
        groups[r] = groups.get(r, 0) | v
    if len(groups) < 2:
        return None
    factors = []
    for C in groups.values():
        traces = sorted({fm & C for fm in facet_masks}, key=lambda t: -t.bit_count())
        kept: list[int] = []
        for t in traces:
            if not any(t & q == t for q in kept):
                kept.append(t)
        factors.append(tuple(sorted(kept)))
    prod = 1
    for f in factors:
        prod *= len(f)
    if prod != m:
        return None
    unions = {0}
    for f in factors:
        unions = {u | g for u in unions for g in f}
    if unions != set(facet_masks):
        return None
    return factors


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _core_homology(facet_masks: tuple[int, ...], p: int) -> tuple[int, ...]:
    top = max(fm.bit_count() for fm in facet_masks)
    if len(facet_masks) == 1:
        return (0,) * (top + 1)
    if len(facet_masks) > 2:
        factors = join_factors(facet_masks)
        if factors:
            # reduced homology of a join over a field: shifted tensor product
            raw = [1]
            for f in factors:
                raw = _convolve(raw, homology_of_masks(f, p))
            raw = raw[: top + 1]
            return tuple(raw) + (0,) * (top + 1 - len(raw))
        verts = 0
        for fm in facet_masks:
            verts |= fm
        k = verts.bit_count()
        if len(facet_masks) == k and top == k - 1 and all(fm.bit_count() == k - 1 for fm in facet_masks):
            raw = [0] * (top + 1)
            raw[k - 1] = 1
            return tuple(raw)
    if p:
        return _homology_raw(facet_masks, p)
    # over Q the Betti numbers are bounded by those mod a large prime and share
    # their Euler characteristic, so a mod-p answer in one degree is exact
    modp = _homology_raw(facet_masks, LARGE_PRIME)
    if sum(1 for h in modp if h) <= 1:
        return modp
    return _homology_raw(facet_masks, 0)


LARGE_PRIME = 2_147_483_647


def homology_direct(facet_masks: tuple[int, ...], p: int = 0) -> tuple[int, ...]:
    """Reduced Betti numbers by plain boundary ranks, with no reductions."""
    if not facet_masks:
        return ()
    if facet_masks == (0,):
        return (1,)
    by = faces_by_size(facet_masks)
    top = max(by)
    ranks = {0: 0, top + 1: 0}
    for k in range(1, top + 1):
        rows = boundary_rows(by[k])
        ranks[k] = _rank_q(rows) if p == 0 else _rank_p(rows, p)
    return tuple(len(by[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def _homology_raw(facet_masks: tuple[int, ...], p: int) -> tuple[int, ...]:
    top = max(fm.bit_count() for fm in facet_masks)
    dims = [0] * (top + 1)
    if len(facet_masks) == 1:
        return tuple(dims)
    common = facet_masks[0]
    for fm in facet_masks[1:]:
        common &= fm
    if common:
        return tuple(dims)
    comps = _components(facet_masks)
    dims[1] = comps - 1
    if top == 1:
        return tuple(dims)
    by = faces_by_size(facet_masks)
    if top == 2:
        nv, ne = len(by[1]), len(by[2])
        dims[2] = ne - nv + comps
        return tuple(dims)
    # rank of the boundary on faces of size k, for k >= 2
    ranks = {1: len(by[1]) and 1}
    for k in range(2, top + 1):
        rows = boundary_rows(by[k])
        ranks[k] = _rank_q(rows) if p == 0 else _rank_p(rows, p)
    ranks[top + 1] = 0
    for k in range(2, top + 1):
        dims[k] = len(by[k]) - ranks[k] - ranks[k + 1]
    # H_0 from the rank computation must agree with the component count
    if len(by[1]) - ranks[1] - ranks[2] != dims[1]:
        raise AssertionError("component count disagrees with boundary rank")
    return tuple(dims)


def euler_characteristic_holds(cx: SimplicialComplex, prof: "HomologyProfile") -> bool:
    if cx.is_void:
        return prof.is_zero()
    by = faces_by_size(cx.facet_masks)
    lhs = sum((-1) ** (k - 1) * len(fs) for k, fs in by.items())
    rhs = sum((-1) ** i * v for i, v in prof.dims.items())
    return lhs == rhs


def reduced_homology(cx: SimplicialComplex, field: FieldSpec = QQ, check: bool = True) -> HomologyProfile:
    raw = homology_of_masks(cx.facet_masks, field.p)
    prof = HomologyProfile({k - 1: v for k, v in enumerate(raw)})
    if check and not euler_characteristic_holds(cx, prof):
        raise AssertionError(f"Euler characteristic mismatch for {cx}")
    return prof


def reduced_homology_dim(cx: SimplicialComplex, i: int, field: FieldSpec = QQ) -> int:
    raw = homology_of_masks(cx.facet_masks, field.p)
    k = i + 1
    return raw[k] if 0 <= k < len(raw) else 0


def rp2() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex.from_facets(
        6,
        [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
         [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]],
    )
