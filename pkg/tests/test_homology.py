import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlecalc import fixtures as fx
from gentlecalc.complexes import chain_d, homology_oracle
from gentlecalc.homology import (HomologyReducer, carries_class, connes_B, cyclic_homology,
                                 cyclic_oracle_dimension, de_rham, hh_homology_basis,
                                 hh_homology_dimension, homology_dimension_by_length)
from gentlecalc.linalg import Field

CHARS = (0, 2, 3)


def test_known_homology():
    F = Field(0)
    assert [homology_oracle(fx.a2(), F, m).dimension for m in range(3)] == [2, 0, 0]
    assert [homology_oracle(fx.point(), F, m).dimension for m in range(3)] == [1, 0, 0]
    # k[x]: HH_0 = k[x], HH_1 = k[x] dx
    P = fx.one_loop(False)
    assert homology_dimension_by_length(P, 0, F, 5) == {L: 1 for L in range(6)}
    assert homology_dimension_by_length(P, 1, F, 5) == {L: 1 for L in range(1, 6)}


def test_one_loop_dimensions():
    P = fx.one_loop()
    assert [hh_homology_dimension(P, m, Field(0)) for m in range(8)] == [2] + [1] * 7
    assert [hh_homology_dimension(P, m, Field(2)) for m in range(8)] == [2] * 8


@pytest.mark.parametrize("name", sorted(fx.fd_fixtures()))
@pytest.mark.parametrize("ch", CHARS)
def test_fd_fixtures_match_oracle(name, ch):
    P, F = fx.FIXTURES[name](), Field(ch)
    for m in range(7):
        assert hh_homology_dimension(P, m, F) == homology_oracle(P, F, m).dimension


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(CHARS))
def test_infinite_match_oracle_by_length(seed, ch):
    P, F = fx.random_gentle(random.Random(seed), 4, 6, finite=False), Field(ch)
    for m in range(4):
        assert homology_dimension_by_length(P, m, F, 6) == dict(homology_oracle(P, F, m, max_length=6).slices)


@pytest.mark.parametrize("name", sorted(fx.FIXTURES))
def test_basis_are_independent_cycles(name):
    P = fx.FIXTURES[name]()
    for ch in CHARS:
        F = Field(ch)
        R = HomologyReducer(P, F)
        for m in range(5):
            for e in hh_homology_basis(P, m, F, 5):
                assert chain_d(P, F, e.representative) == {}
                assert R.coordinates(e.representative) == {e: F.one}


def test_connes_B_is_monomial():
    for name, make in fx.FIXTURES.items():
        P = make()
        for ch in CHARS:
            F = Field(ch)
            targets = []
            for m in range(5):
                for u in hh_homology_basis(P, m, F, 6):
                    im = connes_B(P, F, u)
                    assert len(im) <= 1, name
                    for v in im:
                        assert v.degree == u.degree + 1
                        targets.append(v)
            assert len(targets) == len(set(targets)), name


def test_carries_class():
    # the sign (-1)^((m+1)r) must be 1
    assert carries_class(Field(2), 2, 3)
    assert carries_class(Field(0), 3, 1) and carries_class(Field(3), 2, 2)
    assert not carries_class(Field(0), 2, 1) and not carries_class(Field(3), 0, 3)


def test_de_rham_of_one_loop():
    P, F = fx.one_loop(), Field(0)
    D = de_rham(P, F, 4)
    assert [len(D.de_rham[p]) for p in range(5)] == [1, 0, 0, 0, 0]
    assert not D.truncated


@pytest.mark.parametrize("name", ["point", "a2", "one_loop", "cycle3", "square", "kronecker"])
@pytest.mark.parametrize("ch", CHARS)
def test_cyclic_matches_total_complex(name, ch):
    P = fx.point() if name == "point" else fx.FIXTURES[name]()
    F = Field(ch)
    for m in range(4):
        assert cyclic_homology(P, F, m).dimension == cyclic_oracle_dimension(P, F, m)


def test_cyclic_needs_bound_for_infinite():
    with pytest.raises(ValueError):
        cyclic_oracle_dimension(fx.one_loop(False), Field(0), 1)
    assert cyclic_homology(fx.one_loop(False), Field(0), 1).truncated
