"""Acceptance checks replayed by `serredepth verify paper` and the test suite."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable

import networkx as nx

from . import graphs, hochster, monomials, symbolic
from .complex_core import (
    SimplicialComplex,
    alexander_dual,
    counterexample_complex,
    from_facets,
    is_pure,
    is_shellable,
    iter_pure_complexes,
    one_vertex_inflation,
    verify_shelling,
)
from .homology import QQ, FieldSpec, boundary_squared_is_zero, euler_characteristic_holds, reduced_homology, rp2

PASS, FAIL, SKIPPED = "pass", "fail", "skipped-budget"


@dataclass(frozen=True)
class VerifyConfig:
    max_enum: int = symbolic.DEFAULT_MAX_ENUM
    seed: int = 2026
    field: FieldSpec = QQ


@dataclass
class Check:
    name: str
    status: str
    detail: str
    elapsed: float

    def line(self) -> str:
        return f"[{self.status.upper()}] {self.name}: {self.detail}"


@dataclass
class VerificationReport:
    checks: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail, "elapsed": round(c.elapsed, 3)}
                for c in self.checks
            ],
        }


# -- fixtures --------------------------------------------------------------------------------

CE2_FACETS = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 4, 5], [2, 4, 5], [3, 4, 5], [4, 5, 6]]


def ce2_complex() -> SimplicialComplex:
    return from_facets(6, CE2_FACETS)


DIM1_FIXTURES = {
    "C4": (from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]]), [2, 2, 2, 2], symbolic.MATROID),
    "triangle+pendant": (from_facets(4, [[1, 2], [1, 3], [2, 3], [1, 4]]), [2, 2, 1, 1], symbolic.DIAM2_NOT_MATROID),
    "P4": (from_facets(4, [[1, 2], [2, 3], [3, 4]]), [2, 1, 1, 1], symbolic.FINITE_DIAM3),
    "2K2": (from_facets(4, [[1, 2], [3, 4]]), [1, 1, 1, 1], symbolic.DISCONNECTED),
}


def random_pure_complex(rng: random.Random, n_max: int = 6, k_max: int = 3, facets_max: int = 8) -> SimplicialComplex:
    n = rng.randint(3, n_max)
    k = rng.randint(1, min(k_max, n - 1))
    pool = list(itertools.combinations(range(1, n + 1), k))
    return from_facets(n, rng.sample(pool, rng.randint(1, min(facets_max, len(pool)))))


def random_complex(rng: random.Random, n_max: int = 6) -> SimplicialComplex:
    """A complex with faces of mixed sizes 2 and 3, so not necessarily pure."""
    n = rng.randint(3, n_max)
    pool = [c for s in (2, 3) for c in itertools.combinations(range(1, n + 1), s)]
    return from_facets(n, rng.sample(pool, rng.randint(2, min(7, len(pool)))))


def full_vertex_pure_family(n_max: int = 6, facets_max: int = 12):
    """Pure complexes using every vertex of [n], n <= n_max, one per isomorphism class."""
    for n in range(1, n_max + 1):
        for size in range(1, n + 1):
            for cx in iter_pure_complexes(n, size, facets_max):
                if len(cx.vertices) == n:
                    yield cx


def _graph_from_atlas(g: nx.Graph) -> graphs.Graph:
    nodes = sorted(g.nodes)
    idx = {v: i + 1 for i, v in enumerate(nodes)}
    return graphs.Graph.from_edges(len(nodes), [(idx[u], idx[v]) for u, v in g.edges])


def atlas_graphs(n_min: int, n_max: int, connected: bool = True):
    for g in nx.graph_atlas_g():
        if n_min <= g.number_of_nodes() <= n_max and (not connected or nx.is_connected(g)):
            yield _graph_from_atlas(g)


def _non_increasing(seq) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


# -- criteria ---------------------------------------------------------------------------------


def check_counterexample(cfg: VerifyConfig):
    cx = counterexample_complex(3)
    found, order = is_shellable(cx)
    vals = {
        "pure": is_pure(cx),
        "shelling": bool(found is True and verify_shelling(cx, order)),
        "depth": hochster.depth(cx, cfg.field),
        "depth l=2": symbolic.symbolic_depth(cx, 2, cfg.field, cfg.max_enum),
        "depth l=4": symbolic.symbolic_depth(cx, 4, cfg.field, cfg.max_enum),
        "depth l=5": symbolic.symbolic_depth(cx, 5, cfg.field, cfg.max_enum),
        "S2 l=4": symbolic.symbolic_serre_depth(cx, 4, 2, cfg.field, cfg.max_enum),
        "S2 l=5": symbolic.symbolic_serre_depth(cx, 5, 2, cfg.field, cfg.max_enum),
    }
    ok = (
        vals["pure"]
        and vals["shelling"]
        and vals["depth"] == 3 == cx.krull_dim
        and vals["depth l=2"] == 3
        and vals["depth l=4"] == 1
        and vals["depth l=5"] >= 2
        and vals["S2 l=4"] == 1
        and vals["S2 l=5"] >= 2
    )
    return ok, ", ".join(f"{k}={v}" for k, v in vals.items())


def check_ce2(cfg: VerifyConfig):
    cx = ce2_complex()
    dseq = symbolic.depth_sequence(cx, 8, cfg.field, cfg.max_enum)
    sseq = symbolic.serre_depth_sequence(cx, 8, 2, cfg.field, cfg.max_enum)
    want = [2, 2, 2, 2, 2, 2, 1, 2]
    ok = dseq == want and sseq[6] == 1 and all(sseq[i] >= 2 for i in (0, 1, 2, 3, 4, 5, 7))
    return ok, f"depth {dseq} (expected {want}), S2-depth {sseq}"


def check_dim1_classification(cfg: VerifyConfig):
    parts, ok = [], True
    for name, (cx, want, label) in DIM1_FIXTURES.items():
        d = symbolic.depth_sequence(cx, 4, cfg.field, cfg.max_enum)
        s = symbolic.serre_depth_sequence(cx, 4, 2, cfg.field, cfg.max_enum)
        lab = symbolic.classify_dim1(cx)
        good = d == want and s == want and lab == label and symbolic.predicted_depth_sequence(lab, 4) == want
        ok &= good
        parts.append(f"{name} {d}")
    return ok, "; ".join(parts)


def check_duality(cfg: VerifyConfig):
    count = bad = 0
    for cx in full_vertex_pure_family():
        if len(cx.facets) == 1 and len(cx.facets[0]) == cx.n:
            continue  # the full simplex has a void dual
        count += 1
        table = hochster.betti_table(alexander_dual(cx), cfg.field)
        for r in (2, 3):
            if table.ring_reg_leq(r) != cx.n - hochster.serre_depth(cx, r, cfg.field) - 1:
                bad += 1
    return bad == 0, f"{count} complexes, r in (2, 3), {bad} mismatches"


def check_skeleton(cfg: VerifyConfig):
    count = bad = 0
    for cx in full_vertex_pure_family():
        count += 1
        for r in range(2, cx.krull_dim + 1):
            if hochster.serre_depth_via_skeleton(cx, r, cfg.field) != hochster.serre_depth(cx, r, cfg.field):
                bad += 1
        if hochster.depth_via_skeleton(cx, cfg.field) != hochster.depth(cx, cfg.field):
            bad += 1
    return bad == 0, f"{count} complexes, {bad} mismatches"


def check_oracle_pair(cfg: VerifyConfig):
    rng = random.Random(cfg.seed)
    bad = 0
    for _ in range(50):
        cx = random_pure_complex(rng)
        ell = rng.choice([2, 3])
        a = symbolic.symbolic_depth(cx, ell, cfg.field, cfg.max_enum)
        b = monomials.depth_monomial(monomials.symbolic_power(monomials.sr_ideal(cx), ell), cfg.field)
        bad += a != b
    return bad == 0, f"50 complexes, {bad} disagreements"


def check_h1(cfg: VerifyConfig):
    rng = random.Random(cfg.seed + 1)
    done = bad = nonzero = 0
    while done < 30:
        cx = random_complex(rng)
        if cx.dim < 1:
            continue
        done += 1
        for ell in (2, 3):
            a = symbolic.h1_vanishes(cx, ell, cfg.max_enum)
            bad += a != symbolic.h1_vanishes_criterion(cx, ell)
            nonzero += not a
    return bad == 0, f"30 complexes x 2 powers, {nonzero} with H^1 != 0, {bad} disagreements"


def check_inflation(cfg: VerifyConfig):
    rng = random.Random(cfg.seed + 2)
    bad = 0
    for _ in range(20):
        cx = random_pure_complex(rng)
        v = rng.randint(1, cx.n)
        inf = one_vertex_inflation(cx, v)
        for r in (2, 3):
            bad += hochster.serre_depth(inf, r, cfg.field) != hochster.serre_depth(cx, r, cfg.field) + 1
    return bad == 0, f"20 complexes, r in (2, 3), {bad} mismatches"


def check_polarization(cfg: VerifyConfig):
    rng = random.Random(cfg.seed + 3)
    done = bad = 0
    while done < 20:
        n = rng.randint(1, 4)
        I = monomials.MonomialIdeal.from_gens(
            n, [[rng.randint(0, 3) for _ in range(n)] for _ in range(rng.randint(1, 4))]
        )
        if I.is_unit or not monomials.is_unmixed(I):
            continue
        done += 1
        P, extra = monomials.polarize(I)
        cxp = monomials.sr_complex(P)
        for r in (2, 3):
            lhs = monomials.serre_depth_monomial(I, r, cfg.field, method="direct") + extra
            bad += lhs != hochster.serre_depth(cxp, r, cfg.field)
    return bad == 0, f"20 ideals, r in (2, 3), {bad} mismatches"


def vwc_instances():
    for base in (graphs.VWCStructure(graphs.complete_graph(2), (1,)), graphs.matched_path()):
        for mult in itertools.product(range(1, 6), repeat=base.d0):
            if sum(mult) <= 5:
                yield graphs.VWCStructure(base.H, mult)


def check_vwc(cfg: VerifyConfig):
    count = bad = 0
    for st in vwc_instances():
        G = graphs.vwc_expand(st)
        cx = graphs.independence_complex(G)
        count += 1
        for r in (2, 3):
            bad += graphs.vwc_serre_depth_formula(st, r) != hochster.serre_depth(cx, r, cfg.field)
        bad += hochster.serre_depth(cx, 2, cfg.field) != st.d - max(st.mult) + 1
    k22 = hochster.serre_depth(graphs.independence_complex(graphs.complete_bipartite(2, 2)), 2, cfg.field)
    ok = bad == 0 and k22 == 1
    return ok, f"{count} expansions, {bad} mismatches, K_2,2 S2-depth {k22}"


def check_non_increasing(cfg: VerifyConfig):
    ells = 4
    tallies = {}

    def run(label, items, seq_fn):
        n = b = 0
        for item in items:
            n += 1
            b += not _non_increasing(seq_fn(item))
        tallies[label] = (n, b)

    def s2seq(cx):
        return symbolic.serre_depth_sequence(cx, ells, 2, cfg.field, cfg.max_enum)

    def dseq(cx):
        return symbolic.depth_sequence(cx, ells, cfg.field, cfg.max_enum)

    wc = [graphs.independence_complex(G) for G in atlas_graphs(2, 7) if graphs.is_well_covered(G)]
    run("edge ideals of well-covered graphs", wc, s2seq)
    covers = [graphs.cover_complex(G) for G in atlas_graphs(3, 6)]
    run("cover ideals", covers, s2seq)
    dim1 = []
    for g in nx.graph_atlas_g()[1:]:
        if 0 < g.number_of_edges() and g.number_of_nodes() <= 6:
            G = _graph_from_atlas(g)
            isolated = [[v] for v in range(1, G.n + 1) if not G.neighbors(v)]
            dim1.append(from_facets(G.n, [list(e) for e in G.edges] + isolated))
    run("dimension one, depth", dim1, dseq)
    run("dimension one pure, S2-depth", [c for c in dim1 if is_pure(c)], s2seq)
    small = list(full_vertex_pure_family(5))
    run("at most five vertices, depth", small, dseq)
    run("at most five vertices, S2-depth", small, s2seq)
    ok = all(b == 0 for _, b in tallies.values())
    return ok, "; ".join(f"{k}: {n} instances, {b} violations" for k, (n, b) in tallies.items())


def check_cover_polarization(cfg: VerifyConfig):
    gs = {
        "K2": graphs.complete_graph(2),
        "P4": graphs.path_graph(4),
        "C5": graphs.cycle_graph(5),
        "K2,2": graphs.complete_bipartite(2, 2),
    }
    bad = [f"{k} l={ell}" for k, G in gs.items() for ell in (1, 2, 3) if not graphs.polarized_cover_matches(G, ell)]
    return not bad, f"12 cases, failures: {bad or 'none'}"


def check_homology_kernel(cfg: VerifyConfig):
    count = bad = 0
    corpus = list(full_vertex_pure_family(5)) + [rp2(), counterexample_complex(3), ce2_complex()]
    for cx in corpus:
        for fld in (QQ, FieldSpec(2), FieldSpec(3)):
            prof = reduced_homology(cx, fld, check=False)
            count += 1
            bad += not euler_characteristic_holds(cx, prof)
        bad += not boundary_squared_is_zero(cx.facet_masks)
    q = reduced_homology(rp2(), QQ)[1]
    f2 = reduced_homology(rp2(), FieldSpec(2))[1]
    ok = bad == 0 and q == 0 and f2 == 1
    return ok, f"{count} profiles, {bad} Euler failures, RP2 H1: Q={q}, F2={f2}"


CRITERIA: list[tuple[str, Callable]] = [
    ("01 counterexample complex d=3", check_counterexample),
    ("02 six-vertex depth sequence", check_ce2),
    ("03 dimension-one classification", check_dim1_classification),
    ("04 duality identity", check_duality),
    ("05 skeleton formula and Smith", check_skeleton),
    ("06 Takayama vs polarization depth", check_oracle_pair),
    ("07 first local cohomology criterion", check_h1),
    ("08 one-vertex inflation shift", check_inflation),
    ("09 polarization shift", check_polarization),
    ("10 very well-covered formula", check_vwc),
    ("11 non-increasing suites", check_non_increasing),
    ("12 cover ideal polarization", check_cover_polarization),
    ("13 homology kernel sanity", check_homology_kernel),
]


def run_check(name: str, fn: Callable, cfg: VerifyConfig) -> Check:
    t = time.perf_counter()
    try:
        ok, detail = fn(cfg)
        status = PASS if ok else FAIL
    except hochster.BudgetExceeded as exc:
        status, detail = SKIPPED, str(exc)
    return Check(name, status, detail, time.perf_counter() - t)


def verify_paper(cfg: VerifyConfig = VerifyConfig(), only: str | None = None, echo=None) -> VerificationReport:
    report = VerificationReport()
    for name, fn in CRITERIA:
        if only and only not in name:
            continue
        chk = run_check(name, fn, cfg)
        report.checks.append(chk)
        if echo:
            echo(chk.line())
    return report
