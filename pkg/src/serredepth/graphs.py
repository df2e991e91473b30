"""Edge ideals, cover ideals and independence complexes of simple graphs, the
layered graphs G_l, and very well-covered structure."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from . import hochster
from .complex_core import SimplicialComplex, alexander_dual
from .homology import QQ, FieldSpec
from .monomials import MonomialIdeal, Polarization, polarize_full, sr_complex, sr_ideal, symbolic_power

NOT_APPLICABLE = "not applicable"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        es = set()
        for e in edges:
            u, v = sorted(int(x) for x in e)
            if u == v:
                raise GraphError(f"loop at {u}")
            if u < 1 or v > n:
                raise GraphError(f"edge {u, v} outside 1..{n}")
            es.add((u, v))
        return cls(n, tuple(sorted(es)))

    def nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        return cls.from_edges(int(obj["n"]), obj["edges"])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)])


# -- ideals and complexes ----------------------------------------------------------------


def maximal_independent_sets(G: Graph) -> list[tuple[int, ...]]:
    comp = nx.complement(G.nx())
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(comp))


def independence_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex.from_facets(G.n, maximal_independent_sets(G))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_gens(G.n, [[1 if v in e else 0 for v in range(1, G.n + 1)] for e in G.edges])


def minimal_vertex_covers(G: Graph) -> list[tuple[int, ...]]:
    allv = set(range(1, G.n + 1))
    return sorted(tuple(sorted(allv - set(s))) for s in maximal_independent_sets(G))


def cover_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_gens(
        G.n, [[1 if v in c else 0 for v in range(1, G.n + 1)] for c in minimal_vertex_covers(G)]
    )


def cover_complex(G: Graph) -> SimplicialComplex:
    """Stanley-Reisner complex of the cover ideal: the Alexander dual of the independence complex."""
    return alexander_dual(independence_complex(G))


# -- matchings and covering properties ---------------------------------------------------


def induced_matching_number(G: Graph) -> int:
    """Largest set of edges pairwise disjoint with no graph edge between them."""
    if not G.edges:
        return 0
    nbr = {v: G.neighbors(v) | {v} for v in range(1, G.n + 1)}
    conflict = nx.Graph()
    conflict.add_nodes_from(range(len(G.edges)))
    for (s, e), (t, f) in itertools.combinations(enumerate(G.edges), 2):
        # two edges clash when they share a vertex or some edge joins them
        if any(u in nbr[v] for u in e for v in f):
            conflict.add_edge(s, t)
    clique, _ = nx.max_weight_clique(nx.complement(conflict), weight=None)
    return len(clique)


def is_well_covered(G: Graph) -> bool:
    sizes = {len(c) for c in minimal_vertex_covers(G)}
    return len(sizes) <= 1


def is_very_well_covered(G: Graph) -> bool:
    if G.n == 0 or G.n % 2:
        return False
    if any(not G.neighbors(v) for v in range(1, G.n + 1)):
        return False
    return {len(c) for c in minimal_vertex_covers(G)} == {G.n // 2}


def has_3_disjoint_edges(G: Graph, field: FieldSpec = QQ) -> bool:
    """Two edges inducing a 2K_2, detected as beta_{2,4}(S/I(G)) != 0."""
    return hochster.betti_table(independence_complex(G), field)[(2, 4)] != 0


def has_3_disjoint_edges_direct(G: Graph) -> bool:
    nbr = {v: G.neighbors(v) for v in range(1, G.n + 1)}
    for e, f in itertools.combinations(G.edges, 2):
        if set(e) & set(f):
            continue
        if not any(u in nbr[v] for u in e for v in f):
            return True
    return False


# -- constructions ------------------------------------------------------------------------


def g_ell_index(n: int, i: int, p: int) -> int:
    """Vertex x_{i,p} of G_l gets label i + (p - 1) n, so layer 1 keeps the labels of G."""
    return i + (p - 1) * n


def construct_G_ell(G: Graph, ell: int) -> Graph:
    if ell < 1:
        raise GraphError("ell must be at least 1")
    n = G.n
    es = []
    for u, v in G.edges:
        for p in range(1, ell + 1):
            for q in range(1, ell + 2 - p):
                es.append((g_ell_index(n, u, p), g_ell_index(n, v, q)))
    return Graph.from_edges(n * ell, es)


def parallelization(G: Graph, a: Sequence[int]) -> Graph:
    """Replace vertex i by a_i copies; copies of adjacent vertices are all joined.

    Copies are labelled consecutively: all copies of vertex 1, then of vertex 2, and so on.
    """
    if len(a) != G.n:
        raise GraphError(f"need {G.n} multiplicities")
    if any(x < 1 for x in a):
        raise GraphError("multiplicities must be positive")
    start = [0]
    for x in a:
        start.append(start[-1] + x)
    copies = {i: range(start[i - 1] + 1, start[i] + 1) for i in range(1, G.n + 1)}
    es = [(r, s) for u, v in G.edges for r in copies[u] for s in copies[v]]
    return Graph.from_edges(start[-1], es)


def cover_symbolic_power(G: Graph, ell: int) -> MonomialIdeal:
    """J(G)^(l), the intersection of (x_u, x_v)^l over the edges."""
    return symbolic_power(cover_ideal(G), ell)


def cover_polarization_renaming(G: Graph, ell: int, gamma: Sequence[int], pol: Polarization) -> dict[int, int]:
    """Map G_l labels to polarization variables: x_{i,p} -> x_{i,p+1} for p < gamma_i,
    and x_{i,gamma_i} -> x_i."""
    out = {}
    for i in range(1, G.n + 1):
        if gamma[i - 1] != ell:
            raise GraphError(f"vertex {i} has top exponent {gamma[i - 1]}, expected {ell}")
        for p in range(1, ell + 1):
            out[g_ell_index(G.n, i, p)] = i if p == ell else pol.variable_of(i, p + 1)
    return out


def polarized_cover_matches(G: Graph, ell: int) -> bool:
    """Whether the polarization of J(G)^(l) is J(G_l) after renaming."""
    J = cover_symbolic_power(G, ell)
    pol = polarize_full(J)
    ren = cover_polarization_renaming(G, ell, J.max_exponents(), pol)
    target = cover_ideal(construct_G_ell(G, ell))
    if pol.ideal.n != target.n:
        return False
    moved = set()
    for g in target.gens:
        v = [0] * target.n
        for idx, e in enumerate(g, start=1):
            if e:
                v[ren[idx] - 1] = e
        moved.add(tuple(v))
    return moved == set(pol.ideal.gens)


# -- very well-covered structure -----------------------------------------------------------


@dataclass(frozen=True)
class VWCStructure:
    """A Cohen-Macaulay very well-covered graph H on x_1..x_{d0} (labels 1..d0) and
    y_1..y_{d0} (labels d0+1..2 d0) with matched edges x_i y_i, plus a multiplicity
    n_i for each matched edge."""

    H: Graph
    mult: tuple[int, ...]

    @property
    def d0(self) -> int:
        return self.H.n // 2

    @property
    def d(self) -> int:
        return sum(self.mult)

    def validate(self) -> None:
        d0 = self.d0
        if self.H.n != 2 * d0 or len(self.mult) != d0 or any(m < 1 for m in self.mult):
            raise GraphError("structure needs 2 d0 vertices and d0 positive multiplicities")
        E = set(self.H.edges)
        for i in range(1, d0 + 1):
            if (i, d0 + i) not in E:
                raise GraphError(f"missing matched edge x{i} y{i}")
        for u, v in E:
            if u > d0:
                raise GraphError("the y vertices must be independent")
            if v > d0 and u > v - d0:
                raise GraphError(f"edge x{u} y{v - d0} breaks the ordering condition")


def matched_path() -> VWCStructure:
    """P_4 as y1 - x1 - y2 - x2 with matched edges x1 y1 and x2 y2."""
    return VWCStructure(Graph.from_edges(4, [(1, 3), (2, 4), (1, 4)]), (1, 1))


def vwc_expand(st: VWCStructure) -> Graph:
    """H(n_1, ..., n_{d0}): matched edge x_i y_i becomes K_{n_i, n_i}.

    Copies of x_i are labelled consecutively in 1..d, copies of y_i the same
    way in d+1..2d.
    """
    st.validate()
    d0, d = st.d0, st.d
    offs = [0]
    for m in st.mult:
        offs.append(offs[-1] + m)

    def copies(v: int) -> range:
        i = v if v <= d0 else v - d0
        base = offs[i - 1] + (0 if v <= d0 else d)
        return range(base + 1, base + st.mult[i - 1] + 1)

    es = [(a, b) for u, v in st.H.edges for a in copies(u) for b in copies(v)]
    return Graph.from_edges(2 * d, es)


def vwc_serre_depth_formula(st: VWCStructure, r: int) -> int:
    """d - max{N_T - |T| : E_T an induced matching of H, |T| <= r - 1},
    with N_T the sum of the multiplicities over T."""
    if r < 2:
        raise ValueError("r must be at least 2")
    st.validate()
    d0 = st.d0
    nbr = {v: st.H.neighbors(v) for v in range(1, st.H.n + 1)}
    best = 0
    for size in range(1, min(r - 1, d0) + 1):
        for T in itertools.combinations(range(1, d0 + 1), size):
            verts = [[i, d0 + i] for i in T]
            induced = all(
                not any(u in nbr[v] for u in e for v in f) for e, f in itertools.combinations(verts, 2)
            )
            if induced:
                best = max(best, sum(st.mult[i - 1] for i in T) - size)
    return st.d - best


def _star_order(H: nx.Graph, pairs: list[tuple[int, int]]) -> list[int] | None:
    """Order the pairs (x, y) so that x_i y_j adjacent implies i <= j, if possible."""
    dg = nx.DiGraph()
    dg.add_nodes_from(range(len(pairs)))
    for s, (x, _) in enumerate(pairs):
        for t, (_, y) in enumerate(pairs):
            if s != t and H.has_edge(x, y):
                dg.add_edge(s, t)
    if not nx.is_directed_acyclic_graph(dg):
        return None
    return list(nx.lexicographical_topological_sort(dg))


def vwc_decompose(G: Graph, field: FieldSpec = QQ) -> VWCStructure:
    """Recover (H, n) with G isomorphic to H(n), verified by an isomorphism check."""
    if not is_very_well_covered(G):
        raise GraphError("graph is not very well-covered")
    g = G.nx()
    # false twins: equal open neighbourhoods
    classes: dict[frozenset, list[int]] = {}
    for v in range(1, G.n + 1):
        classes.setdefault(frozenset(g[v]), []).append(v)
    blocks = sorted(classes.values())
    q = nx.Graph()
    q.add_nodes_from(range(len(blocks)))
    for s, t in itertools.combinations(range(len(blocks)), 2):
        if g.has_edge(blocks[s][0], blocks[t][0]):
            q.add_edge(s, t)
    for match in _perfect_matchings(q):
        if any(len(blocks[s]) != len(blocks[t]) for s, t in match):
            continue
        for flips in itertools.product((False, True), repeat=len(match)):
            pairs = [(t, s) if f else (s, t) for (s, t), f in zip(match, flips)]
            ys = [y for _, y in pairs]
            if any(q.has_edge(a, b) for a, b in itertools.combinations(ys, 2)):
                continue
            order = _star_order(q, pairs)
            if order is None:
                continue
            st = _structure_from(q, [pairs[k] for k in order], [len(blocks[pairs[k][0]]) for k in order])
            if not hochster.is_cohen_macaulay(independence_complex(st.H), field):
                continue
            if nx.is_isomorphic(vwc_expand(st).nx(), g):
                return st
    raise GraphError("no decomposition found")


def _structure_from(q: nx.Graph, pairs, mult) -> VWCStructure:
    d0 = len(pairs)
    label = {}
    for i, (x, y) in enumerate(pairs, start=1):
        label[x], label[y] = i, d0 + i
    H = Graph.from_edges(2 * d0, [(label[a], label[b]) for a, b in q.edges])
    return VWCStructure(H, tuple(mult))


def _perfect_matchings(q: nx.Graph):
    nodes = sorted(q.nodes)

    def rec(rest):
        if not rest:
            yield []
            return
        v = rest[0]
        for u in rest[1:]:
            if q.has_edge(v, u):
                nxt = [w for w in rest if w not in (v, u)]
                for m in rec(nxt):
                    yield [(v, u)] + m

    yield from rec(nodes)


# -- Serre depth of cover ideals -------------------------------------------------------------


def cover_serre_depth(G: Graph, r: int, field: FieldSpec = QQ) -> int:
    return hochster.serre_depth(cover_complex(G), r, field)


def cover_serre_depth_special(G: Graph, r: int, field: FieldSpec = QQ):
    """n - r - 1 when reg(S/I(G)) = im(G) and r <= im(G); NOT_APPLICABLE otherwise."""
    im = induced_matching_number(G)
    if r < 2 or r > im:
        return NOT_APPLICABLE
    if hochster.betti_table(independence_complex(G), field).reg() != im:
        return NOT_APPLICABLE
    return G.n - r - 1


def cover_s2_depth_by_3_disjoint(G: Graph, field: FieldSpec = QQ) -> int:
    """S_2-depth of S/J(G): n - 3 with a 3-disjoint pair of edges, else n - 2."""
    return G.n - 3 if has_3_disjoint_edges(G, field) else G.n - 2


def edge_ideal_complex(G: Graph) -> SimplicialComplex:
    """Stanley-Reisner complex of I(G), checked against the independence complex."""
    cx = sr_complex(edge_ideal(G))
    assert cx == independence_complex(G)
    assert sr_ideal(cx) == edge_ideal(G)
    return cx
