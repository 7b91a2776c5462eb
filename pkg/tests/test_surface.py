import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlecalc import fixtures as fx
from gentlecalc.linalg import Field
from gentlecalc.surface import (boundary_report, build_ribbon_graph, diagram_text, faces,
                                generator_dictionary, homology_curve_tags, punctures,
                                surface_summary)

CHARS = (0, 2, 3)


def check_graph(P):
    G = build_ribbon_graph(P)
    G.check()
    n_half = len(G.sigma)
    assert n_half == 2 * P.n_vertices
    assert sorted(h for v in G.vertices for h in v.half_edges) == list(range(n_half))
    assert all(G.iota[G.iota[h]] == h and G.iota[h] != h for h in range(n_half))
    s = surface_summary(G)
    assert s.n_edges == P.n_vertices
    assert s.euler_characteristic == s.n_vertices - s.n_edges + s.n_faces
    assert s.euler_characteristic == 2 - 2 * s.genus
    assert sum(len(f) for f in faces(G)) == n_half
    assert s.marked_points == sum(b.marked_points for b in boundary_report(G))
    assert s.n_punctures == len(punctures(G))
    return G, s


@pytest.mark.parametrize("name", sorted(fx.FIXTURES))
def test_ribbon_graph_invariants(name):
    check_graph(fx.FIXTURES[name]())


def test_a2_is_a_disc_with_three_marked_points():
    G, s = check_graph(fx.a2())
    assert (s.genus, s.n_faces, s.n_punctures) == (0, 1, 0)
    assert s.marked_points == 3


def test_no_star_has_one_puncture():
    _, s = check_graph(fx.no_star())
    assert s.n_punctures == 1


def test_winding_counts_corners():
    G = build_ribbon_graph(fx.oriented_cycle(3))
    for b in boundary_report(G):
        unmarked = sum(1 for c in b.corners if not c.marked)
        assert b.winding == unmarked - b.marked_points


@pytest.mark.parametrize("name", sorted(fx.FIXTURES))
@pytest.mark.parametrize("ch", CHARS)
def test_dictionary_on_fixtures(name, ch):
    D = generator_dictionary(fx.FIXTURES[name](), Field(ch))
    assert D.bijective and D.degrees_ok
    assert not D.unmatched_boundaries and not D.unmatched_generators
    assert D.count_boundaries == D.count_generators == len(D.entries)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(CHARS), st.booleans())
def test_dictionary_on_random(seed, ch, finite):
    P = fx.random_gentle(random.Random(seed), 6, 9, finite=finite)
    check_graph(P)
    D = generator_dictionary(P, Field(ch))
    assert D.bijective and D.degrees_ok


@pytest.mark.parametrize("name", sorted(fx.fd_fixtures()))
def test_curve_tags(name):
    for ch in (0, 3):
        R = homology_curve_tags(fx.FIXTURES[name](), Field(ch))
        assert R.applicable and R.consistent
    assert not homology_curve_tags(fx.FIXTURES[name](), Field(2)).applicable


def test_diagram_text_is_deterministic():
    P = fx.no_star()
    a, b = diagram_text(P), diagram_text(P)
    assert a == b and a.startswith("ribbon-graph\n") and "genus" in a
