import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlecalc import fixtures as fx
from gentlecalc.combinatorics import (canonical_cycle, circuits, crepprim_B, crepprim_gamma,
                                      crepprim_gamma_circ, enumerate_sets, is_spanning_tree,
                                      max_b_length, maximal_paths, parse_tree, period, power,
                                      primitive_root, rep_system, rot, spanning_tree, star_check)
from gentlecalc.linalg import Field


def brute_paths(P, n):
    """All arrow words of length n, split into B-paths and Γ-paths."""
    B, G = set(), set()
    for word in itertools.product(range(P.n_arrows), repeat=n):
        if any(P.tgt(x) != P.src(y) for x, y in zip(word, word[1:])):
            continue
        pairs = list(zip(word, word[1:]))
        if not any(P.is_relation(x, y) for x, y in pairs):
            B.add(word)
        if all(P.is_relation(x, y) for x, y in pairs):
            G.add(word)
    return B, G


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_path_sets_against_brute_force(seed, finite):
    P = fx.random_gentle(random.Random(seed), 5, 7, finite=finite)
    S = enumerate_sets(P, 4)
    for n in range(1, 5):
        B, G = brute_paths(P, n)
        assert {p.arrows for p in S.B_by_length[n]} == B
        assert {p.arrows for p in S.Gamma_by_length[n]} == G
    assert len(S.B_by_length[0]) == P.n_vertices


def test_bound_must_be_at_least_two():
    with pytest.raises(ValueError):
        enumerate_sets(fx.a2(), 1)


def test_one_loop_sets():
    S = enumerate_sets(fx.one_loop(), 6)
    assert [len(S.B_by_length[n]) for n in range(4)] == [1, 1, 0, 0]
    assert all(len(S.Gamma_by_length[n]) == 1 for n in range(7))
    assert S.B_complete and not S.Gamma_complete
    assert max_b_length(fx.one_loop()) == 1 and max_b_length(fx.one_loop(False)) is None


def test_maximal_paths_a2():
    P = fx.a2()
    M = maximal_paths(P)
    assert [P.path_str(p) for p in M.b_maximal] == ["a"]
    assert [P.path_str(p) for p in M.gamma_maximal] == ["a"]
    assert [P.path_str(p) for p in M.both] == ["a"]


def test_no_star_circuits():
    P = fx.no_star()
    F0, F2 = Field(0), Field(2)
    assert sorted(P.path_str(c) for c in crepprim_gamma_circ(P)) == ["cba", "fed"]
    assert sorted(len(c.arrows) for c in crepprim_gamma(P, F0)) == [6, 6]
    assert sorted(len(c.arrows) for c in crepprim_gamma(P, F2)) == [3, 3]
    B = crepprim_B(P)
    assert len(B) == 1 and len(B[0].arrows) == 6
    assert canonical_cycle(P, B[0]) == canonical_cycle(P, P.parse_path("fbdcea"))
    assert star_check(P, F0)[0] is False


def test_star_holds_for_small_fixtures():
    for name in ("a2", "kronecker", "cycle3", "square"):
        answer, tree = star_check(fx.FIXTURES[name](), Field(0))
        assert answer is True and tree is not None


def test_circuit_kinds_and_periods():
    P = fx.two_loops()
    cs = circuits(P, 4)
    kinds = {P.path_str(c.rep): c.kind for c in cs}
    assert kinds["a"] == "complete" and kinds["aa"] == "complete"
    ab = [c for c in cs if c.length == 4 and c.kind == "cocomplete"]
    assert len(ab) == 1 and ab[0].period == 2 and ab[0].power == 2
    with pytest.raises(ValueError):
        circuits(P, 4, "bogus")


def test_rep_system_fields():
    R = rep_system(fx.oriented_cycle(3), Field(0), 6)
    assert all(len(c.arrows) % 2 == 0 for c in R.crep_Gamma)
    assert len(R.crep_Gamma_circ) >= len(R.crep_Gamma)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_rotation_invariants(seed, k):
    P = fx.random_gentle(random.Random(seed), 5, 7, finite=False)
    cycles = crepprim_B(P) + crepprim_gamma_circ(P)
    for c in cycles:
        c = power(c, k)
        assert len(c.arrows) % period(c) == 0
        assert period(c) == len(primitive_root(c).arrows)
        base = canonical_cycle(P, c)
        for i in range(len(c.arrows)):
            assert canonical_cycle(P, rot(P, c, i)) == base


def test_spanning_tree_and_parse_tree():
    P = fx.no_star()
    T = spanning_tree(P)
    assert is_spanning_tree(P, T) and len(T) == P.n_vertices - 1
    assert parse_tree(P, ["a", "b"]) == frozenset({P.arrow_id("a"), P.arrow_id("b")})
    with pytest.raises(ValueError):
        parse_tree(P, ["a", "d"])
