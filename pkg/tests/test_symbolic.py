import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes
from serredepth import hochster, monomials, symbolic as s
from serredepth.complex_core import BudgetExceeded, counterexample_complex, from_facets, is_matroid

C4 = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
P4 = from_facets(4, [[1, 2], [2, 3], [3, 4]])
PAW = from_facets(4, [[1, 2], [1, 3], [2, 3], [1, 4]])
TWO_EDGES = from_facets(4, [[1, 2], [3, 4]])
HOLLOW = from_facets(3, [[1, 2], [1, 3], [2, 3]])
CE3 = counterexample_complex(3)


def _takayama_oracle(cx, a, ell):
    keep = [f for f in cx.facets if sum(a[i - 1] for i in range(1, cx.n + 1) if i not in f) <= ell - 1]
    return from_facets(cx.n, keep)


def test_takayama_examples():
    assert s.takayama_complex(C4, (1, 1, 0, 0), 2) == from_facets(4, [[1, 2], [2, 3], [1, 4]])
    assert s.takayama_complex(C4, (0, 0, 0, 0), 3) == C4
    assert s.takayama_complex(C4, (1, 1, 1, 1), 2).kind == "void"
    with pytest.raises(ValueError):
        s.takayama_complex(C4, (1, 1), 2)


def test_cap():
    assert s.cap_a((5, 0, 0, 0), 2) == (2, 0, 0, 0)
    assert s.takayama_complex(C4, (5, 0, 0, 0), 2) == s.takayama_complex(C4, (2, 0, 0, 0), 2)
    assert s.cap_a((1, 2, 0), 2) == (1, 2, 0)


@given(complexes(n_max=5), st.integers(1, 4), st.data())
def test_takayama_and_cap_match_definition(cx, ell, data):
    a = data.draw(st.lists(st.integers(0, 6), min_size=cx.n, max_size=cx.n))
    got = s.takayama_complex(cx, a, ell)
    assert got == _takayama_oracle(cx, a, ell)
    assert got == s.takayama_complex(cx, s.cap_a(a, ell), ell)


@given(complexes(n_max=5, pure=True))
def test_first_power_is_the_ring_itself(cx):
    assert s.symbolic_coh_profile(cx, 1).dims == hochster.local_coh_dims(cx).dims


@settings(max_examples=25)
@given(complexes(n_max=5), st.integers(2, 3))
def test_profile_matches_direct_degree_complex_route(cx, ell):
    """The Takayama enumeration over link vertices against the full degree-complex route."""
    I = monomials.symbolic_power(monomials.sr_ideal(cx), ell)
    if I.is_zero:
        return
    assert s.symbolic_coh_profile(cx, ell).dims == monomials.local_coh_dims_direct(I).dims


@settings(max_examples=20)
@given(complexes(n_max=5), st.integers(2, 3))
def test_enumerating_every_vertex_changes_nothing(cx, ell):
    assert s.symbolic_coh_profile(cx, ell).dims == s.symbolic_coh_profile(cx, ell, ghosts=True).dims


def test_profile_examples():
    prof = s.symbolic_coh_profile(C4, 2)
    assert prof[0] is None and prof[1] is None and prof.depth() == 2
    assert s.symbolic_coh_profile(CE3, 4)[1] is not None
    F, a = s.symbolic_coh_profile(CE3, 4).witnesses[1]
    assert len(s.takayama_complex(CE3, [dict(a).get(v, 0) for v in range(1, 8)], 4).facets) >= 1


def test_depth_examples():
    assert s.symbolic_depth(P4, 2) == 1
    for ell in (1, 2, 5):
        assert s.symbolic_depth(from_facets(2, [[1], [2]]), ell) == 1


def test_counterexample_values():
    assert s.symbolic_depth(CE3, 2) == 3
    assert s.symbolic_depth(CE3, 4) == 1
    assert s.symbolic_depth(CE3, 5) >= 2
    assert s.symbolic_serre_depth(CE3, 4, 2) == 1
    assert s.symbolic_serre_depth(CE3, 5, 2) >= 2


def test_dimension_one_sequences():
    for cx, want in [(C4, [2] * 4), (PAW, [2, 2, 1, 1]), (P4, [2, 1, 1, 1]), (TWO_EDGES, [1] * 4)]:
        assert s.depth_sequence(cx, 4) == want
        assert s.serre_depth_sequence(cx, 4) == want
        assert s.predicted_depth_sequence(s.classify_dim1(cx), 4) == want


def test_classification_labels():
    assert s.classify_dim1(C4) == s.MATROID
    assert s.classify_dim1(PAW) == s.DIAM2_NOT_MATROID
    assert s.classify_dim1(P4) == s.FINITE_DIAM3
    assert s.classify_dim1(TWO_EDGES) == s.DISCONNECTED


def _graphs_on(n):
    pool = list(itertools.combinations(range(1, n + 1), 2))
    for k in range(1, len(pool) + 1):
        for es in itertools.combinations(pool, k):
            if len({v for e in es for v in e}) == n:
                yield from_facets(n, es)


def test_dimension_one_classification_on_all_small_graphs():
    for n in (3, 4, 5):
        for cx in _graphs_on(n):
            assert s.depth_sequence(cx, 3) == s.predicted_depth_sequence(s.classify_dim1(cx), 3)
            if s.classify_dim1(cx) == s.MATROID:
                assert is_matroid(cx)


def test_h1_examples():
    assert s.h1_vanishes(C4, 2)
    assert not s.h1_vanishes(PAW, 3)
    assert not s.h1_vanishes(CE3, 4)


@given(complexes(n_min=3, n_max=6), st.integers(2, 3))
def test_h1_criterion_matches_direct_test(cx, ell):
    if cx.dim < 1:
        return
    assert s.h1_vanishes(cx, ell) == s.h1_vanishes_criterion(cx, ell)
    assert s.h1_vanishes(cx, ell) == (s.symbolic_coh_profile(cx, ell)[1] is None)


def test_second_power_bound():
    assert s.s2_second_power_bound(HOLLOW, 2)
    assert not s.s2_second_power_bound(P4, 2)
    assert s.s2_second_power_bound(CE3, 3)


@settings(max_examples=25)
@given(complexes(n_min=3, n_max=5, pure=True))
def test_s2_routes(cx):
    if cx.dim < 1:
        return
    for ell in (2, 3):
        assert s.s2_depth_via_h1(cx, ell) == s.symbolic_serre_depth(cx, ell, 2)
    assert s.diam_criterion_s2_depth(cx) == s.symbolic_serre_depth(cx, 2, 2)
    for ell in range(2, cx.dim + 1):
        if s.t_diam_sufficient(cx, ell):
            assert s.h1_vanishes(cx, ell)


def test_t_diam_examples():
    assert s.t_diam_sufficient(from_facets(3, [[1, 2, 3]]), 2)
    assert not s.t_diam_sufficient(TWO_EDGES, 2)  # dim 1 < ell: not applicable
    assert not s.t_diam_sufficient(from_facets(6, [[1, 2, 3], [4, 5, 6]]), 2)
    with pytest.raises(ValueError):
        s.t_diam_sufficient(C4, 1)


@settings(max_examples=20)
@given(complexes(n_max=5, pure=True))
def test_sequences_are_consistent(cx):
    d = s.depth_sequence(cx, 3)
    for r in (2, 3):
        sd = s.serre_depth_sequence(cx, 3, r)
        assert all(x <= y <= cx.krull_dim for x, y in zip(d, sd))


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        s.symbolic_coh_profile(CE3, 5, max_enum=10)


def test_serre_depth_rejects_bad_arguments():
    with pytest.raises(hochster.NotPureError):
        s.symbolic_serre_depth(from_facets(3, [[1, 2], [3]]), 2, 2)
    with pytest.raises(ValueError):
        s.symbolic_depth(C4, 0)
