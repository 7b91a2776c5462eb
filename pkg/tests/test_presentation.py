import json
import random

import pytest
import yaml
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlecalc import fixtures as fx
from gentlecalc.presentation import (Path, PresentationError, compose, make_presentation,
                                     parse_presentation, validate_gentle)

TEXT = """\
# the Kronecker quiver with a tail
vertices: 1 2 3
arrows: a: 1 -> 2, b: 1 -> 2
  c: 2 -> 3
relations: c*a
"""


def test_parse_text():
    P = parse_presentation(TEXT)
    assert P.n_vertices == 3 and P.n_arrows == 3
    a, c = P.arrow_id("a"), P.arrow_id("c")
    # c*a: a first, then c
    assert P.relations == frozenset({(a, c)})
    assert P.is_relation(a, c) and not P.is_relation(P.arrow_id("b"), c)


def test_structured_forms_agree():
    P = parse_presentation(TEXT)
    data = {"vertices": ["1", "2", "3"],
            "arrows": {"a": ["1", "2"], "b": ["1", "2"], "c": ["2", "3"]},
            "relations": ["c*a"]}
    assert parse_presentation(json.dumps(data)) == P
    assert parse_presentation(yaml.safe_dump(data)) == P
    listed = {"vertices": [1, 2, 3],
              "arrows": ["a: 1 -> 2", {"name": "b", "source": 1, "target": 2}, "c: 2 -> 3"],
              "relations": [["c", "a"]]}
    assert parse_presentation(json.dumps(listed), fmt="json") == P


@pytest.mark.parametrize("text, line, column", [
    ("vertices: 1\narrows: a: 1 -> 2\n", 2, 9),
    ("vertices: 1 2\narrows: a: 1 -> 2 junk\n", 2, 19),
    ("vertices: 1\nvertices: 2\n", 2, 1),
    ("  oops\n", 1, 3),
    ("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a*a\n", 3, 12),
    ("vertices: 1 2\narrows: a: 1 -> 2, a: 2 -> 1\n", 2, 20),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(PresentationError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize("text", [
    "vertices: 1\n",
    "vertices: 1\narrows:\n",
    "vertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\nrelations: b*a*a\n",
    "vertices: 1 2 3\narrows: a: 1 -> 2\n",
    '{"vertices": [1], "arrows": {"a": [1]}}',
    '{"vertices": [1, 2], ',
])
def test_malformed_input_rejected(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_point_algebra_only_on_request():
    with pytest.raises(PresentationError):
        parse_presentation("vertices: 1\narrows:\n")
    P = parse_presentation("vertices: 1\narrows:\n", allow_point=True)
    assert P.n_arrows == 0 and fx.point().n_vertices == 1


def test_validate_classes():
    assert validate_gentle(fx.a2()).klass == "fd-gentle"
    assert validate_gentle(fx.one_loop(False)).klass == "gentle"
    assert not validate_gentle(fx.one_loop(False)).finite_dimensional
    three_out = make_presentation(["1", "2"], {"a": ("1", "2"), "b": ("1", "2"), "c": ("1", "2")})
    rep = validate_gentle(three_out)
    assert rep.klass == "quadratic-monomial" and not rep.degree_bound
    two_free = make_presentation(["1", "2", "3"], {"a": ("1", "2"), "b": ("2", "3"), "c": ("2", "3")})
    rep = validate_gentle(two_free)
    assert not rep.unique_free and rep.failures


def test_path_order_and_compose():
    P = fx.no_star()
    a, b = P.arrow_id("a"), P.arrow_id("b")
    ba = P.parse_path("ba")
    assert ba.arrows == (a, b) and P.path_str(ba) == "ba"
    assert compose(P, P.arrow(b), P.arrow(a)) == ba
    assert P.parse_path("e2") == Path((), 1, 1)
    assert not P.in_B(ba) and P.in_Gamma(ba)


def test_describe_roundtrip_fixtures():
    for make in fx.FIXTURES.values():
        P = make()
        assert parse_presentation(P.describe()) == P


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_describe_roundtrip_random(seed, finite):
    P = fx.random_gentle(random.Random(seed), 6, 9, finite=finite)
    Q = parse_presentation(P.describe())
    assert Q == P and validate_gentle(Q) == validate_gentle(P)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_relabel_preserves_class(seed):
    rng = random.Random(seed)
    P = fx.random_gentle(rng, 6, 9, finite=rng.random() < 0.5)
    vp = list(range(P.n_vertices))
    ap = list(range(P.n_arrows))
    rng.shuffle(vp)
    rng.shuffle(ap)
    Q = P.relabel(vp, ap)
    assert validate_gentle(Q).klass == validate_gentle(P).klass
    assert len(Q.relations) == len(P.relations)
    inv_v = [vp.index(i) for i in range(len(vp))]
    inv_a = [ap.index(i) for i in range(len(ap))]
    assert Q.relabel(inv_v, inv_a) == P
