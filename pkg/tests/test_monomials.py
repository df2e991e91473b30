import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import complexes
from serredepth import hochster, monomials as m
from serredepth.complex_core import from_facets, one_vertex_inflation

P = m.MonomialIdeal.parse
C4 = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
BOWTIE = from_facets(5, [[1, 2, 3], [1, 4, 5]])


@st.composite
def ideals(draw, n_max=3, e_max=3):
    n = draw(st.integers(1, n_max))
    gens = draw(st.lists(st.lists(st.integers(0, e_max), min_size=n, max_size=n), min_size=1, max_size=4))
    return m.MonomialIdeal.from_gens(n, gens)


def test_parse_and_print():
    I = P("x1*x3, x2*x4")
    assert I.n == 4 and set(I.gens) == {(0, 1, 0, 1), (1, 0, 1, 0)}
    assert str(P("x1^2")) == "(x1^2)"
    assert m.MonomialIdeal.from_json(I.to_json()) == I
    with pytest.raises(m.IdealError):
        P("y1")


def test_stanley_reisner_correspondence():
    assert m.sr_ideal(from_facets(2, [[1], [2]])) == P("x1*x2")
    assert m.sr_ideal(C4) == P("x1*x3, x2*x4")
    assert m.sr_complex(P("x1, x2, x3")).kind == "irrelevant"


@given(complexes(n_max=5))
def test_sr_ideal_generators_are_minimal_nonfaces(cx):
    got = sorted(tuple(i + 1 for i, e in enumerate(g) if e) for g in m.sr_ideal(cx).gens)
    assert got == sorted(oracles.minimal_nonfaces(cx.n, cx.facets))
    assert m.sr_complex(m.sr_ideal(cx)) == cx


def test_intersections_and_prime_powers():
    assert m.intersect(P("x1", 2), P("x2")) == P("x1*x2")
    assert m.prime_power(2, [1, 2], 2) == P("x1^2, x1*x2, x2^2")
    assert m.intersect(P("x1^2, x2"), P("x1", 2)) == P("x1^2, x1*x2")


@settings(max_examples=30)
@given(ideals(), ideals())
def test_intersection_membership(I, J):
    if I.n != J.n:
        return
    K = m.intersect(I, J)
    for u in oracles.box(I.n, 4):
        assert K.contains(u) == (I.contains(u) and J.contains(u))


def test_symbolic_power_examples():
    assert m.symbolic_power(P("x1*x2"), 2) == P("x1^2*x2^2")
    I2 = m.symbolic_power(m.sr_ideal(C4), 2)
    assert I2.contains((2, 0, 2, 0)) and not I2.contains((1, 0, 1, 0))
    assert m.symbolic_power(P("x1*x2, x1*x3, x2*x3"), 2).contains((1, 1, 1))


@settings(max_examples=20)
@given(complexes(n_max=4), st.integers(1, 3))
def test_symbolic_power_membership_by_definition(cx, ell):
    if cx.kind != "proper" or not m.sr_ideal(cx).gens:
        return
    I = m.symbolic_power(m.sr_ideal(cx), ell)
    for u in oracles.box(cx.n, ell):
        assert I.contains(u) == oracles.in_symbolic_power(u, cx.n, cx.facets, ell)


def test_polarization_examples():
    J, extra = m.polarize(P("x1^2"))
    assert extra == 1 and J.gens == ((1, 1),)
    assert m.polarize(P("x1*x2")) == (P("x1*x2"), 0)
    # x_{1,2} -> x3 and x_{2,2} -> x4
    pol = m.polarize_full(P("x1^2, x1*x2, x2^2"))
    assert pol.extra == 2 and pol.names == {3: (1, 2), 4: (2, 2)}
    assert pol.ideal == P("x1*x3, x3*x4, x2*x4")


@settings(max_examples=30)
@given(ideals())
def test_polarization_is_squarefree_and_depolarizes(I):
    pol = m.polarize_full(I)
    assert pol.ideal.is_squarefree
    back = set()
    for g in pol.ideal.gens:
        u = list(g[: I.n])
        for idx, (i, _) in pol.names.items():
            u[i - 1] += g[idx - 1]
        back.add(tuple(u))
    assert m.MonomialIdeal.from_gens(I.n, back) == I


def test_radical_and_colon():
    assert m.radical(P("x1^2*x2")) == P("x1*x2")
    assert m.colon(P("x1*x2, x1*x3"), (1, 0, 0)) == P("x2, x3")
    assert m.colon(P("x1*x2, x1*x3"), (1, 1, 0)).is_unit


def test_depth_examples():
    assert m.depth_monomial(P("x1^2")) == 0
    assert m.depth_monomial(m.sr_ideal(C4)) == hochster.depth(C4)
    I2 = m.symbolic_power(m.sr_ideal(BOWTIE), 2)
    assert m.depth_monomial(I2) == m.depth_monomial(I2, method="direct")


@settings(max_examples=30)
@given(ideals())
def test_direct_and_polarization_routes_agree(I):
    if I.is_unit or I.is_zero:
        return
    assert m.depth_monomial(I) == m.depth_monomial(I, method="direct")
    if m.is_unmixed(I):
        for r in (2, 3):
            assert m.serre_depth_monomial(I, r) == m.serre_depth_monomial(I, r, method="direct")


@settings(max_examples=20)
@given(complexes(n_max=5, pure=True))
def test_inflation_matches_ideal_rule(cx):
    """Inflating v multiplies each generator divisible by x_v by a new variable."""
    if not m.sr_ideal(cx).gens:
        return
    v = 1
    gens = [list(g) + [g[v - 1]] for g in m.sr_ideal(cx).gens]
    want = m.MonomialIdeal.from_gens(cx.n + 1, gens)
    assert m.sr_ideal(one_vertex_inflation(cx, v)) == want


def test_unmixed():
    assert m.is_unmixed(P("x1*x3, x2*x4"))
    assert not m.is_unmixed(P("x1*x2, x1*x3"))  # primes (x1) and (x2, x3)
    assert all(m.is_unmixed(m.symbolic_power(m.sr_ideal(C4), ell)) for ell in (1, 2, 3))

