"""Simplicial complexes on a labelled ground set [n] and the combinatorial
operations used throughout the package.

Complexes are immutable. Facets are stored as sorted tuples of 1-based vertex
labels, in lexicographic order, so equal complexes compare (and print) equal.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

INFINITY = math.inf
NEG_INF = -math.inf

DEFAULT_MATROID_LIMIT = 20
DEFAULT_SHELLING_LIMIT = 24
DEFAULT_SHELLING_NODES = 2_000_000


class ComplexError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured budget."""


class Unknown:
    """Result of a search that ran out of budget."""

    def __repr__(self):
        return "UNKNOWN"

    def __bool__(self):
        raise TypeError("UNKNOWN has no truth value")


UNKNOWN = Unknown()


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def _minimal_antichain(faces: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    uniq = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[tuple[int, ...]] = []
    masks: list[int] = []
    for f in uniq:
        m = _mask(f)
        if any(m & k == m for k in masks):
            continue
        kept.append(f)
        masks.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ComplexError("ground set size must be nonnegative")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = []
        for f in facets:
            t = tuple(sorted(set(int(v) for v in f)))
            for v in t:
                if not 1 <= v <= n:
                    raise ComplexError(f"vertex {v} out of range 1..{n}")
            faces.append(t)
        return cls(n, _minimal_antichain(faces))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def irrelevant(cls, n: int) -> "SimplicialComplex":
        return cls(n, ((),))

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | None = None) -> "SimplicialComplex":
        vs = range(1, n + 1) if vertices is None else vertices
        return cls.from_facets(n, [list(vs)])

    # -- basic accessors ---------------------------------------------------

    @property
    def kind(self) -> str:
        if not self.facets:
            return "void"
        if self.facets == ((),):
            return "irrelevant"
        return "proper"

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask(f) for f in self.facets)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Vertices occurring in some face (the active vertex set)."""
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dim(self) -> float | int:
        if not self.facets:
            return NEG_INF
        return max(len(f) for f in self.facets) - 1

    @property
    def krull_dim(self) -> float | int:
        """Krull dimension of the Stanley-Reisner ring, dim + 1."""
        d = self.dim
        return d if d == NEG_INF else d + 1

    def __contains__(self, face) -> bool:
        m = _mask(face)
        return any(m & fm == m for fm in self.facet_masks)

    def faces(self, size: int | None = None) -> list[tuple[int, ...]]:
        """All faces (or those of the given cardinality), sorted."""
        out: set[tuple[int, ...]] = set()
        for f in self.facets:
            sizes = range(len(f) + 1) if size is None else [size]
            for k in sizes:
                if 0 <= k <= len(f):
                    out.update(itertools.combinations(f, k))
        return sorted(out, key=lambda t: (len(t), t))

    def face_set(self, i: int) -> list[tuple[int, ...]]:
        """Faces of dimension i."""
        return self.faces(i + 1)

    def f_vector(self) -> list[int]:
        d = self.dim
        if d == NEG_INF:
            return []
        return [len(self.faces(k)) for k in range(d + 2)]

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, obj: dict) -> "SimplicialComplex":
        if "n" not in obj or "facets" not in obj:
            raise ComplexError("complex JSON needs 'n' and 'facets'")
        return cls.from_facets(int(obj["n"]), obj["facets"])

    def __str__(self):
        if self.kind == "void":
            return "void"
        return "<" + ", ".join("[" + ",".join(map(str, f)) + "]" for f in self.facets) + ">"

    def relabel(self, mapping: dict[int, int], n: int | None = None) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(
            self.n if n is None else n, [[mapping[v] for v in f] for f in self.facets]
        )


# -- operations ---------------------------------------------------------------


def from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, facets)


def dim(cx: SimplicialComplex):
    return cx.dim


def link(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    F = tuple(sorted(face))
    if F not in cx:
        raise ComplexError(f"{list(F)} is not a face")
    m = _mask(F)
    facets = [tuple(v for v in g if not (m >> v) & 1) for g, gm in zip(cx.facets, cx.facet_masks) if gm & m == m]
    return SimplicialComplex(cx.n, _minimal_antichain(facets))


def star(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    m = _mask(face)
    return SimplicialComplex(cx.n, tuple(g for g, gm in zip(cx.facets, cx.facet_masks) if gm & m == m))


def restriction(cx: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    if cx.is_void:
        return cx
    w = _mask(W)
    return SimplicialComplex(
        cx.n, _minimal_antichain(tuple(v for v in f if (w >> v) & 1) for f in cx.facets)
    )


def skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    if i < -1:
        raise ComplexError("skeleton index must be >= -1")
    if cx.is_void or cx.dim <= i:
        return cx
    faces = set()
    for f in cx.facets:
        if len(f) <= i + 1:
            faces.add(f)
        else:
            faces.update(itertools.combinations(f, i + 1))
    return SimplicialComplex(cx.n, _minimal_antichain(faces))


def subcomplex(cx: SimplicialComplex, facet_bits: int) -> SimplicialComplex:
    """Subcomplex generated by the facets selected by a bitmask over facet indices."""
    return SimplicialComplex(cx.n, tuple(f for k, f in enumerate(cx.facets) if (facet_bits >> k) & 1))


def minimal_nonfaces(cx: SimplicialComplex) -> list[tuple[int, ...]]:
    """Minimal subsets of [n] that are not faces (generators of the Stanley-Reisner ideal)."""
    if cx.is_void:
        return [()]
    out = []
    # a minimal nonface is a nonface all of whose codimension-one subsets are faces
    candidates: set[tuple[int, ...]] = {(v,) for v in range(1, cx.n + 1)}
    while candidates:
        nxt: set[tuple[int, ...]] = set()
        for c in sorted(candidates):
            if c in cx:
                for v in range(c[-1] + 1, cx.n + 1):
                    nxt.add(c + (v,))
            elif all(c[:k] + c[k + 1:] in cx for k in range(len(c))):
                out.append(c)
        candidates = {c for c in nxt if all(c[:k] + c[k + 1:] in cx for k in range(len(c)))}
    return sorted(out, key=lambda t: (len(t), t))


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    full = tuple(range(1, cx.n + 1))
    if cx.is_void:
        return SimplicialComplex(cx.n, (full,))
    if full in cx:
        return SimplicialComplex.void(cx.n)
    return SimplicialComplex.from_facets(
        cx.n, [[v for v in full if v not in c] for c in minimal_nonfaces(cx)]
    )


def is_pure(cx: SimplicialComplex) -> bool:
    """All facets have the same size; void and {emptyset} count as pure."""
    return len({len(f) for f in cx.facets}) <= 1


def is_cone(cx: SimplicialComplex) -> bool:
    if cx.kind != "proper":
        return False
    common = cx.facet_masks[0]
    for m in cx.facet_masks[1:]:
        common &= m
    return common != 0


def one_skeleton_graph(cx: SimplicialComplex) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in cx.vertices}
    for f in cx.facets:
        for u, v in itertools.combinations(f, 2):
            adj[u].add(v)
            adj[v].add(u)
    return adj


def _bfs(adj, src):
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def one_skeleton_diameter(cx: SimplicialComplex):
    adj = one_skeleton_graph(cx)
    if not adj:
        raise ComplexError("empty graph")
    best = 0
    for v in adj:
        dist = _bfs(adj, v)
        if len(dist) < len(adj):
            return INFINITY
        best = max(best, max(dist.values()))
    return best


def is_connected(cx: SimplicialComplex) -> bool:
    adj = one_skeleton_graph(cx)
    if not adj:
        return True
    return len(_bfs(adj, next(iter(adj)))) == len(adj)


def t_diameter(cx: SimplicialComplex, t: int):
    """Largest t-distance between two t-dimensional faces.

    The t-distance of F, G is the least p admitting (t+1)-dimensional faces
    F_1, ..., F_p with F in F_1, G in F_p and consecutive members meeting.
    """
    small = cx.face_set(t)
    big = cx.face_set(t + 1)
    if not small:
        raise ComplexError(f"no faces of dimension {t}")
    bmasks = [_mask(b) for b in big]
    nb = len(big)
    adj = [[j for j in range(nb) if j != i and bmasks[i] & bmasks[j]] for i in range(nb)]
    containing = [[j for j, bm in enumerate(bmasks) if bm & _mask(f) == _mask(f)] for f in small]
    best = 0
    for a in range(len(small)):
        # multi-source BFS from every (t+1)-face containing small[a]; path length counts faces
        dist = {j: 1 for j in containing[a]}
        q = deque(containing[a])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        for b in range(len(small)):
            d = min((dist[j] for j in containing[b] if j in dist), default=INFINITY)
            if d == INFINITY:
                return INFINITY
            best = max(best, d)
    return best


def is_matroid(cx: SimplicialComplex, limit: int = DEFAULT_MATROID_LIMIT) -> bool:
    if cx.n > limit:
        raise BudgetExceeded(f"matroid test enumerates 2^{cx.n} subsets; limit is n <= {limit}")
    masks = cx.facet_masks
    for sub in range(1 << cx.n):
        w = sub << 1
        sizes = set()
        maxima = []
        for m in masks:
            r = m & w
            maxima.append(r)
        # facets of the restriction are the maximal traces
        for r in set(maxima):
            if not any(r != s and r & s == r for s in maxima):
                sizes.add(bin(r).count("1"))
        if len(sizes) > 1:
            return False
    return True


# -- shellability -------------------------------------------------------------


def verify_shelling(cx: SimplicialComplex, order: Sequence[Sequence[int]]) -> bool:
    """Check that for all j < i some k < i has F_i minus F_k a single vertex of F_i minus F_j."""
    if not is_pure(cx):
        raise ComplexError("shelling is only defined here for pure complexes")
    facets = [tuple(sorted(f)) for f in order]
    if sorted(facets) != list(cx.facets):
        raise ComplexError("order must be a permutation of the facets")
    masks = [_mask(f) for f in facets]
    for i in range(1, len(masks)):
        singles = {masks[i] & ~masks[k] for k in range(i)}
        singles = {s for s in singles if s and s & (s - 1) == 0}
        for j in range(i):
            diff = masks[i] & ~masks[j]
            if not any(s & diff for s in singles):
                return False
    return True


def is_shellable(
    cx: SimplicialComplex,
    limit: int = DEFAULT_SHELLING_LIMIT,
    max_nodes: int = DEFAULT_SHELLING_NODES,
):
    """Backtracking search for a shelling order.

    Returns (True, order), (False, None) or (UNKNOWN, None) when the node budget runs out.
    """
    if not is_pure(cx):
        raise ComplexError("shellability is only tested for pure complexes")
    m = len(cx.facets)
    if m > limit:
        raise BudgetExceeded(f"{m} facets exceed the shelling search limit {limit}")
    if m <= 1:
        return True, list(cx.facets)
    masks = list(cx.facet_masks)
    d = len(cx.facets[0])
    nodes = 0

    def ok_next(prefix_mask_list, cand):
        # intersection of <cand> with <prefix> must be pure of codim one in cand
        traces = {cand & p for p in prefix_mask_list}
        maximal = [t for t in traces if not any(t != s and t & s == t for s in traces)]
        return all(bin(t).count("1") == d - 1 for t in maximal)

    order: list[int] = []
    used = [False] * m

    def rec():
        nonlocal nodes
        if len(order) == m:
            return True
        nodes += 1
        if nodes > max_nodes:
            raise _OutOfNodes
        prefix = [masks[k] for k in order]
        for c in range(m):
            if used[c] or not ok_next(prefix, masks[c]):
                continue
            used[c] = True
            order.append(c)
            if rec():
                return True
            order.pop()
            used[c] = False
        return False

    try:
        for first in range(m):
            used[first] = True
            order.append(first)
            if rec():
                return True, [cx.facets[k] for k in order]
            order.pop()
            used[first] = False
    except _OutOfNodes:
        return UNKNOWN, None
    return False, None


class _OutOfNodes(Exception):
    pass


# -- constructions ------------------------------------------------------------


def one_vertex_inflation(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Complex on [n+1] whose Stanley-Reisner generators divisible by x_v gain the factor x_{n+1}."""
    if not 1 <= v <= cx.n:
        raise ComplexError(f"vertex {v} not in 1..{cx.n}")
    if cx.kind != "proper":
        raise ComplexError("inflation needs a proper complex")
    new = cx.n + 1
    gens = [tuple(g) + ((new,) if v in g else ()) for g in minimal_nonfaces(cx)]
    return complex_from_nonfaces(new, gens)


def complex_from_nonfaces(n: int, nonfaces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The complex whose minimal nonfaces are (contained in) the given sets.

    Facets are complements of minimal transversals of the nonfaces.
    """
    gens = [_mask(g) for g in nonfaces]
    if any(g == 0 for g in gens):
        return SimplicialComplex.void(n)
    covers = minimal_transversals(gens, n)
    full = (1 << (n + 1)) - 2
    facets = [tuple(v for v in range(1, n + 1) if ((full & ~c) >> v) & 1) for c in covers]
    return SimplicialComplex(n, _minimal_antichain(facets))


def minimal_transversals(sets: Sequence[int], n: int) -> list[int]:
    """Minimal vertex sets (bitmasks over 1..n) meeting every given bitmask."""
    sets = sorted(set(sets), key=lambda s: bin(s).count("1"))
    current = [0]
    for s in sets:
        nxt = set()
        for c in current:
            if c & s:
                nxt.add(c)
            else:
                v = s
                while v:
                    low = v & -v
                    nxt.add(c | low)
                    v ^= low
        ordered = sorted(nxt, key=lambda m: bin(m).count("1"))
        kept: list[int] = []
        for m in ordered:
            if not any(k & m == k for k in kept):
                kept.append(m)
        current = kept
    return current


def counterexample_complex(d: int) -> SimplicialComplex:
    """The pure shellable complex on x_1..x_d (1..d), y_1..y_d (d+1..2d), z (2d+1)
    whose symbolic-power depth sequence fails to be non-increasing."""
    if d < 3:
        raise ComplexError("the construction needs d >= 3")
    xs = list(range(1, d + 1))
    ys = list(range(d + 1, 2 * d + 1))
    z = 2 * d + 1
    facets = [xs, ys]
    facets += [[x for x in xs if x != xi] + [z] for xi in xs]
    facets += [[y for y in ys if y != yj] + [z] for yj in ys]
    for k in range(1, d):
        for xi in itertools.combinations(xs, k):
            for yj in itertools.combinations(ys, d - k - 1):
                facets.append(list(xi) + list(yj) + [z])
    return SimplicialComplex.from_facets(2 * d + 1, facets)


# -- enumeration of small complexes ----------------------------------------------


def iter_pure_complexes(n: int, size: int, max_facets: int | None = None) -> Iterator[SimplicialComplex]:
    """Pure complexes on [n] with facets of the given size, one per isomorphism class.

    Orderly generation: canonical forms under the symmetric group on [n],
    grown one facet at a time.
    """
    pool = list(itertools.combinations(range(1, n + 1), size))
    index = {f: k for k, f in enumerate(pool)}
    perms = list(itertools.permutations(range(1, n + 1)))
    table = np.array(
        [[index[tuple(sorted(p[v - 1] for v in f))] for f in pool] for p in perms], dtype=np.int64
    )
    weights = np.array([1 << k for k in range(len(pool))], dtype=object)

    def canon(bits: np.ndarray) -> int:
        # bits: bool vector over pool; image of facet k under perm is table[perm, k]
        imgs = np.zeros((len(perms), len(pool)), dtype=bool)
        rows = np.nonzero(bits)[0]
        imgs[np.arange(len(perms))[:, None], table[:, rows]] = True
        packed = [int(sum(int(w) for w, b in zip(weights, row) if b)) for row in imgs]
        return min(packed)

    limit = len(pool) if max_facets is None else min(max_facets, len(pool))
    level = {0: np.zeros(len(pool), dtype=bool)}
    for count in range(1, limit + 1):
        nxt: dict[int, np.ndarray] = {}
        for bits in level.values():
            for k in range(len(pool)):
                if bits[k]:
                    continue
                b = bits.copy()
                b[k] = True
                c = canon(b)
                if c not in nxt:
                    nxt[c] = b
        for c in sorted(nxt):
            yield SimplicialComplex.from_facets(n, [pool[k] for k in np.nonzero(nxt[c])[0]])
        level = nxt
