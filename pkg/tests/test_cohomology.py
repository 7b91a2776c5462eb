import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlecalc import fixtures as fx
from gentlecalc.cohomology import (CohomologyReducer, check_cocycles, finiteness_report,
                                   growth_report, hh1_formula, hh_basis, hh_dimension,
                                   hh_dimension_by_weight, is_truncated)
from gentlecalc.complexes import cochain_d, cohomology_oracle, parallel_pairs
from gentlecalc.linalg import Field

CHARS = (0, 2, 3)


def test_oracle_known_algebras():
    F = Field(0)
    # path algebras of trees: only the centre
    P = fx.a2()
    assert [cohomology_oracle(P, F, m).dimension for m in range(4)] == [1, 0, 0, 0]
    # Kronecker: HH^1 is the Lie algebra pgl_2
    K = fx.kronecker()
    assert [cohomology_oracle(K, F, m).dimension for m in range(3)] == [1, 3, 0]
    with pytest.raises(ValueError):
        cohomology_oracle(fx.one_loop(False), F, 0)


def test_free_loop_is_polynomial_ring():
    # HH^0 = k[x] and HH^1 = k[x] d/dx: one class per weight
    P, F = fx.one_loop(False), Field(0)
    assert hh_dimension_by_weight(P, 0, F, 6) == {w: 1 for w in range(7)}
    assert hh_dimension_by_weight(P, 1, F, 6) == {w: 1 for w in range(-1, 6)}
    assert is_truncated(P, 0) and not is_truncated(fx.a2(), 0)


@pytest.mark.parametrize("name", sorted(fx.fd_fixtures()))
@pytest.mark.parametrize("ch", CHARS)
def test_fd_fixture_dimensions_match_oracle(name, ch):
    P, F = fx.FIXTURES[name](), Field(ch)
    for m in range(7):
        assert hh_dimension(P, m, F) == cohomology_oracle(P, F, m).dimension


@pytest.mark.parametrize("name", ["one_loop_free", "two_loops", "no_star"])
@pytest.mark.parametrize("ch", CHARS)
def test_infinite_fixtures_match_oracle_by_weight(name, ch):
    P, F = fx.FIXTURES[name](), Field(ch)
    for m in range(5):
        assert hh_dimension_by_weight(P, m, F, 7) == dict(cohomology_oracle(P, F, m, max_weight=7 - m).slices)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(CHARS))
def test_random_infinite_match_oracle_by_weight(seed, ch):
    P, F = fx.random_gentle(random.Random(seed), 4, 6, finite=False), Field(ch)
    for m in range(4):
        assert hh_dimension_by_weight(P, m, F, 6) == dict(cohomology_oracle(P, F, m, max_weight=6 - m).slices)


@pytest.mark.parametrize("name", sorted(fx.FIXTURES))
def test_basis_elements_are_independent_cocycles(name):
    P = fx.FIXTURES[name]()
    for ch in CHARS:
        F = Field(ch)
        R = CohomologyReducer(P, F)
        for m in range(5):
            B = hh_basis(P, m, F, bound=5)
            assert check_cocycles(P, F, B) == []
            for e in B:
                assert cochain_d(P, F, e.representative) == {}
                assert R.coordinates(e.representative) == {e: F.one}


def test_coboundaries_reduce_to_zero():
    P, F = fx.no_star(), Field(3)
    R = CohomologyReducer(P, F)
    for pair in parallel_pairs(P, 1, 1):
        assert R.coordinates(cochain_d(P, F, {pair: F.one})) == {}


def test_tree_choice_changes_fundamentals_only():
    P, F = fx.kronecker(), Field(0)
    for names in (["a"], ["b"]):
        from gentlecalc.combinatorics import parse_tree
        B = hh_basis(P, 1, F, parse_tree(P, names))
        assert len(B) == 3
        assert sum(e.tag == "Fundamental" for e in B) == 1


def test_growth_and_formula_reports():
    for name, P in fx.fd_fixtures().items():
        for ch in CHARS:
            F = Field(ch)
            g = growth_report(P, F)
            assert g.bound_holds and g.formula_holds, name
            assert hh1_formula(P, F) == hh_dimension(P, 1, F), name
    with pytest.raises(ValueError):
        growth_report(fx.one_loop(False), Field(0))


def test_finiteness_report():
    inf = finiteness_report(fx.one_loop(False))
    assert not inf.algebra_finite and not inf.hh0_finite and inf.vanishing_degree == 2
    loop = finiteness_report(fx.one_loop())
    assert loop.algebra_finite and not loop.gldim_finite and not loop.eventually_zero
    F = Field(0)
    for name, P in fx.fd_fixtures().items():
        rep = finiteness_report(P)
        if rep.eventually_zero:
            v = rep.vanishing_degree
            assert all(cohomology_oracle(P, F, m).dimension == 0 for m in range(v, v + 3)), name
