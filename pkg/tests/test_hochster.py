import pytest
from hypothesis import given, settings

import oracles
from conftest import complexes
from serredepth import hochster
from serredepth.complex_core import alexander_dual, counterexample_complex, from_facets, is_shellable, skeleton
from serredepth.homology import FieldSpec

C4 = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
TWO_POINTS = from_facets(2, [[1], [2]])
TWO_EDGES = from_facets(4, [[1, 2], [3, 4]])
BOWTIE = from_facets(5, [[1, 2, 3], [1, 4, 5]])
HOLLOW = from_facets(3, [[1, 2], [1, 3], [2, 3]])


def test_betti_examples():
    assert hochster.betti_table(TWO_POINTS).entries == {(0, 0): 1, (1, 2): 1}
    assert hochster.betti_table(from_facets(3, [[1, 2, 3]])).entries == {(0, 0): 1}
    # (x1 x3, x2 x4) is a complete intersection: Koszul numbers 1, 2, 1
    assert hochster.betti_table(C4).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


@settings(max_examples=25)
@given(complexes(n_max=5))
def test_betti_matches_restriction_oracle(cx):
    assert hochster.betti_table(cx).entries == oracles.betti(cx.n, cx.facets)


def test_local_coh_examples():
    assert hochster.local_coh_dims(TWO_POINTS).dims == {0: None, 1: 1}
    assert hochster.local_coh_dims(BOWTIE).dims == {0: None, 1: None, 2: 1, 3: 3}
    assert hochster.local_coh_dims(from_facets(2, [[1, 2]])).dims == {0: None, 1: None, 2: 2}


@given(complexes(n_max=5))
def test_local_coh_matches_link_oracle(cx):
    assert hochster.local_coh_dims(cx).dims == oracles.local_coh_dims(cx.n, cx.facets)


@settings(max_examples=30)
@given(complexes(n_max=5))
def test_depth_agrees_with_auslander_buchsbaum(cx):
    assert hochster.depth(cx) == oracles.depth_auslander_buchsbaum(cx.n, cx.facets)


def test_depth_examples():
    assert hochster.depth(TWO_POINTS) == 1
    assert hochster.depth(TWO_EDGES) == 1
    assert hochster.depth(counterexample_complex(3)) == 3


def test_serre_depth_examples():
    assert hochster.serre_depth(TWO_EDGES, 2) == 1
    assert hochster.serre_depth(BOWTIE, 2) == 2
    for r in (2, 3, 4):
        assert hochster.serre_depth(C4, r) == 2
    assert hochster.serre_depth_via_links(BOWTIE, 2) == 2
    assert hochster.serre_depth_via_skeleton(BOWTIE, 2) == 2
    assert hochster.serre_depth_via_skeleton(TWO_EDGES, 2) == 1
    assert hochster.satisfies_serre(HOLLOW, 2)
    assert not hochster.satisfies_serre(BOWTIE, 2)
    assert not hochster.satisfies_serre(TWO_EDGES, 2)


def test_serre_depth_needs_purity():
    with pytest.raises(hochster.NotPureError):
        hochster.serre_depth(from_facets(3, [[1, 2], [3]]), 2)


@given(complexes(n_max=5, pure=True))
def test_serre_depth_routes_agree(cx):
    for r in range(2, cx.krull_dim + 2):
        want = oracles.serre_depth(cx.n, cx.facets, r)
        assert hochster.serre_depth(cx, r) == want
        assert hochster.serre_depth_via_links(cx, r) == want
        if r <= cx.krull_dim:
            assert hochster.serre_depth_via_skeleton(cx, r) == want
    assert hochster.depth_via_skeleton(cx) == hochster.depth(cx)


@given(complexes(n_max=5, pure=True))
def test_serre_depth_is_monotone_in_r(cx):
    vals = [hochster.serre_depth(cx, r) for r in range(2, cx.krull_dim + 2)]
    assert vals == sorted(vals, reverse=True)
    assert vals[0] <= cx.krull_dim
    assert hochster.serre_depth(cx, max(cx.krull_dim, 2)) == hochster.depth(cx) or cx.krull_dim < 2


@settings(max_examples=25)
@given(complexes(n_max=5, pure=True))
def test_duality_identity(cx):
    if len(cx.facets) == 1 and len(cx.facets[0]) == cx.n:
        return
    table = hochster.betti_table(alexander_dual(cx))
    for r in (2, 3):
        assert table.ring_reg_leq(r) == cx.n - hochster.serre_depth(cx, r) - 1


def test_regularity_indices():
    assert hochster.reg_leq(TWO_POINTS, 1) == 2
    assert all(hochster.satisfies_N_cr(TWO_POINTS, 2, r) for r in (1, 2, 3))
    # beta_{0,2}(I) = 2 and beta_{1,4}(I) = 1 for I = (x1 x3, x2 x4)
    assert hochster.reg_leq(C4, 0) == 2
    assert hochster.reg_leq(C4, 1) == 3
    assert hochster.indeg(C4) == 2
    assert hochster.satisfies_N_cr(C4, 2, 1) and not hochster.satisfies_N_cr(C4, 2, 2)


def test_cohen_macaulay():
    assert hochster.is_cohen_macaulay(HOLLOW)
    assert not hochster.is_cohen_macaulay(TWO_EDGES)
    assert hochster.is_cohen_macaulay(counterexample_complex(3))


@settings(max_examples=25)
@given(complexes(n_max=5, pure=True))
def test_shellable_implies_cohen_macaulay(cx):
    found, _ = is_shellable(cx)
    if found is True:
        assert hochster.is_cohen_macaulay(cx)
        assert hochster.is_cohen_macaulay(cx, FieldSpec(2))


def test_skeleton_of_cm_is_cm():
    cx = counterexample_complex(3)
    assert hochster.is_cohen_macaulay(skeleton(cx, 1))
