from hypothesis import given, settings

import oracles
from conftest import complexes
from serredepth.complex_core import from_facets
from serredepth.homology import (
    QQ,
    FieldSpec,
    boundary_squared_is_zero,
    euler_characteristic_holds,
    homology_direct,
    reduced_homology,
    rp2,
)

HOLLOW = from_facets(3, [[1, 2], [1, 3], [2, 3]])


def _dims(prof):
    return {k: v for k, v in prof.dims.items() if v}


def test_small_spaces():
    assert _dims(reduced_homology(HOLLOW)) == {1: 1}
    assert _dims(reduced_homology(from_facets(2, [[1], [2]]))) == {0: 1}
    assert _dims(reduced_homology(from_facets(2, [[]]))) == {-1: 1}
    assert reduced_homology(from_facets(3, [[1, 2, 3]])).is_zero()


def test_rp2_sees_the_field():
    cx = rp2()
    assert len(cx.facets) == 10
    assert _dims(reduced_homology(cx, QQ)) == {}
    assert _dims(reduced_homology(cx, FieldSpec(2))) == {1: 1, 2: 1}
    assert _dims(reduced_homology(cx, FieldSpec(3))) == {}


def test_octahedron_is_a_sphere():
    cx = from_facets(6, [[a, b, c] for a in (1, 2) for b in (3, 4) for c in (5, 6)])
    assert _dims(reduced_homology(cx)) == {2: 1}


@given(complexes(n_max=6))
def test_matches_sympy_oracle_over_q(cx):
    want = {k: v for k, v in oracles.reduced_homology(cx.facets, 0).items() if v}
    assert _dims(reduced_homology(cx, QQ)) == want


@settings(max_examples=25)
@given(complexes(n_max=6))
def test_matches_sympy_oracle_over_f2(cx):
    want = {k: v for k, v in oracles.reduced_homology(cx.facets, 2).items() if v}
    assert _dims(reduced_homology(cx, FieldSpec(2))) == want


@given(complexes(n_max=6))
def test_reductions_agree_with_plain_elimination(cx):
    for p in (0, 2):
        prof = reduced_homology(cx, FieldSpec(p))
        raw = homology_direct(cx.facet_masks, p)
        assert {k - 1: v for k, v in enumerate(raw) if v} == _dims(prof)


@given(complexes(n_max=6))
def test_euler_and_boundary_identities(cx):
    assert euler_characteristic_holds(cx, reduced_homology(cx, check=False))
    assert boundary_squared_is_zero(cx.facet_masks)


def test_field_parsing():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("fp:5") == FieldSpec(5)
    for bad in ("fp:4", "r"):
        try:
            FieldSpec.parse(bad)
        except ValueError:
            continue
        raise AssertionError(bad)
