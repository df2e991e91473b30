"""Slow, obviously-correct reference computations used as test oracles.

Nothing here imports the homology kernel or the Hochster machinery of the
package: faces are plain tuples, ranks come from sympy.
"""
from __future__ import annotations

import itertools
import math

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def all_faces(n, facets):
    out = set()
    for f in facets:
        for k in range(len(f) + 1):
            out.update(itertools.combinations(sorted(f), k))
    return out


def _rank(rows, ncols, p):
    if not rows or not ncols:
        return 0
    dom = QQ if p == 0 else GF(p)
    return DomainMatrix([[dom(x) for x in r] for r in rows], (len(rows), ncols), dom).rank()


def reduced_homology(facets, p=0):
    """{i: dim H~_i} over Q (p = 0) or F_p, via explicit boundary matrices."""
    faces = all_faces(0, facets)
    if not faces:
        return {}
    by = {}
    for f in faces:
        by.setdefault(len(f), []).append(f)
    top = max(by)
    index = {k: {f: i for i, f in enumerate(sorted(v))} for k, v in by.items()}

    def rank_of(k):  # boundary from k-faces (size k) to (k-1)-faces
        if k not in by or k - 1 not in by:
            return 0
        rows = []
        for f in sorted(by[k]):
            row = [0] * len(by[k - 1])
            for j in range(len(f)):
                row[index[k - 1][f[:j] + f[j + 1:]]] = (-1) ** j
            rows.append(row)
        return _rank(rows, len(by[k - 1]), p)

    ranks = {k: rank_of(k) for k in range(1, top + 2)}
    return {k - 1: len(by[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(0, top + 1)}


def restriction(facets, W):
    W = set(W)
    return [tuple(v for v in f if v in W) for f in facets]


def link(facets, F):
    F = set(F)
    return [tuple(v for v in f if v not in F) for f in facets if F <= set(f)]


def betti(n, facets, p=0):
    """beta_{i,j}(k[Delta]) by summing homology of every restriction."""
    out = {(0, 0): 1} if facets else {}
    for j in range(1, n + 1):
        for W in itertools.combinations(range(1, n + 1), j):
            h = reduced_homology(restriction(facets, W), p)
            for deg, v in h.items():
                if v:
                    i = j - deg - 1
                    out[(i, j)] = out.get((i, j), 0) + v
    return out


def krull_dim(facets):
    return max(len(f) for f in facets)


def local_coh_dims(n, facets, p=0):
    """j -> max{|F| : H~_{j-|F|-1}(link F) != 0}, None if no face qualifies."""
    d = krull_dim(facets)
    dims = {j: None for j in range(d + 1)}
    for F in all_faces(n, facets):
        h = reduced_homology(link(facets, F), p)
        for deg, v in h.items():
            j = deg + len(F) + 1
            if v and (dims[j] is None or dims[j] < len(F)):
                dims[j] = len(F)
    return dims


def depth_auslander_buchsbaum(n, facets, p=0):
    return n - max(i for i, _ in betti(n, facets, p))


def serre_depth(n, facets, r, p=0):
    dims = local_coh_dims(n, facets, p)
    return min(j for j, v in dims.items() if v is not None and v >= j - r + 1)


# -- monomials ---------------------------------------------------------------------------------


def minimal_nonfaces(n, facets):
    faces = all_faces(n, facets)
    out = []
    for k in range(1, n + 1):
        for c in itertools.combinations(range(1, n + 1), k):
            if c not in faces and not any(set(m) <= set(c) for m in out):
                out.append(c)
    return out


def in_symbolic_power(u, n, facets, ell):
    """u is in I^(ell) iff its degree on each facet complement is at least ell."""
    return all(sum(u[v - 1] for v in range(1, n + 1) if v not in f) >= ell for f in facets)


def box(n, top):
    return itertools.product(range(top + 1), repeat=n)


# -- graphs ------------------------------------------------------------------------------------


def independent_sets(n, edges):
    es = [set(e) for e in edges]
    for k in range(n + 1):
        for c in itertools.combinations(range(1, n + 1), k):
            if not any(e <= set(c) for e in es):
                yield c


def maximal_independent_sets(n, edges):
    ind = set(independent_sets(n, edges))
    return sorted(c for c in ind if not any(set(c) < set(d) for d in ind))


def minimal_vertex_covers(n, edges):
    covers = [c for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)
              if all(set(e) & set(c) for e in edges)]
    return sorted(c for c in covers if not any(set(d) < set(c) for d in covers))


def induced_matching_number(n, edges):
    best = 0
    for k in range(1, len(edges) + 1):
        for M in itertools.combinations(edges, k):
            verts = [v for e in M for v in e]
            if len(set(verts)) < 2 * k:
                continue
            induced = [e for e in edges if set(e) <= set(verts)]
            if len(induced) == k:
                best = k
    return best


def binom(a, b):
    return math.comb(a, b)
