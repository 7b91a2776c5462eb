"""Property checks shared by the quick suite and the acceptance run.

Each ``make_*`` returns a hypothesis test running the given number of
examples.  Presentations come from a pool indexed by an integer: the named
fixtures first, then seeded random gentle presentations alternating between
finite- and infinite-dimensional ones.  ``CASES`` counts executed examples.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from gentlecalc import fixtures as fx
from gentlecalc.cohomology import CohomologyReducer, hh_basis
from gentlecalc.combinatorics import max_b_length, spanning_tree
from gentlecalc.complexes import (antiparallel_pairs, chain_d, chain_d_pair, cochain_d,
                                  cochain_d_pair, connes_B_chain, hochschild_chains,
                                  parallel_pairs)
from gentlecalc.homology import HomologyReducer, connes_B, connes_B_combination, hh_homology_basis
from gentlecalc.linalg import Field, add_term
from gentlecalc.structure import (bracket_class, cap, cup, elementary_tensors, homotopy_defect,
                                  phi_bracket)

POOL = 400
CHARS = (0, 2, 3)
CASES: Counter = Counter()
_NAMED = sorted(fx.FIXTURES)


@lru_cache(maxsize=None)
def presentation(i: int):
    if i < len(_NAMED):
        return fx.FIXTURES[_NAMED[i]]()
    return fx.random_gentle(random.Random(i), 5, 7, finite=i % 2 == 0)


class Context:
    """Cached bases and reducers for one presentation and characteristic."""

    def __init__(self, i: int, ch: int):
        self.P = P = presentation(i)
        self.F = F = Field(ch)
        self.coh_red = CohomologyReducer(P, F)
        self.hom_red = HomologyReducer(P, F)
        self.coh = [e for m in range(4) for e in hh_basis(P, m, F, bound=4)]
        self.hh1 = [e for e in self.coh if e.degree == 1]
        self.hom = [e for m in range(6) for e in hh_homology_basis(P, m, F, bound=5)]
        self.complement = [c for c in range(P.n_arrows) if c not in spanning_tree(P)]
        self.fund = {e.payload[0]: e for e in self.coh if e.tag == "Fundamental"}


@lru_cache(maxsize=None)
def context(i: int, ch: int) -> Context:
    return Context(i, ch)


@lru_cache(maxsize=None)
def cochain_pairs(i: int) -> tuple:
    P = presentation(i)
    return tuple(p for m in range(5) for w in range(-m, 6 - m) for p in parallel_pairs(P, m, w))


@lru_cache(maxsize=None)
def chain_pairs(i: int) -> tuple:
    P = presentation(i)
    return tuple(p for m in range(5) for L in range(m, 7) for p in antiparallel_pairs(P, m, L))


@lru_cache(maxsize=None)
def chains(i: int) -> tuple:
    P = presentation(i)
    return tuple(c for p in range(5) for L in range(7) for c in hochschild_chains(P, p, L))


@lru_cache(maxsize=None)
def tensors(i: int) -> tuple:
    P = presentation(i)
    mb = max_b_length(P)
    return tuple(elementary_tensors(P, 5, min(mb, 4) if mb is not None else 4))


def _settings(n: int):
    return settings(max_examples=n, deadline=None, derandomize=True, database=None,
                    suppress_health_check=list(HealthCheck))


indices = st.integers(0, POOL - 1)
chars = st.sampled_from(CHARS)


def _lin(fn, x: dict, F: Field) -> dict:
    out: dict = {}
    for k, c in x.items():
        for k2, d in fn(k).items():
            add_term(out, k2, F.mul(c, d), F)
    return out


def _sum(x: dict, y: dict, F: Field) -> dict:
    out = dict(x)
    for k, c in y.items():
        add_term(out, k, c, F)
    return out


def _scaled(x: dict, s, F: Field) -> dict:
    return {k: F.mul(s, c) for k, c in x.items() if F.mul(s, c)}


def make_cochain_dd(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        pool = cochain_pairs(i)
        assume(pool)
        CASES["cochain_dd"] += 1
        P, F = presentation(i), Field(ch)
        pair = data.draw(st.sampled_from(pool))
        assert cochain_d(P, F, cochain_d_pair(P, F, pair)) == {}
    return prop


def make_chain_dd(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        pool = chain_pairs(i)
        assume(pool)
        CASES["chain_dd"] += 1
        P, F = presentation(i), Field(ch)
        pair = data.draw(st.sampled_from(pool))
        assert chain_d(P, F, chain_d_pair(P, F, pair)) == {}
    return prop


def make_cup_commutative(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        C = context(i, ch)
        P, F = C.P, C.F
        u = data.draw(st.sampled_from(C.coh))
        v = data.draw(st.sampled_from(C.coh))
        CASES["cup_commutative"] += 1
        uv = C.coh_red.coordinates(cup(P, F, u.representative, v.representative))
        vu = C.coh_red.coordinates(cup(P, F, v.representative, u.representative))
        assert uv == _scaled(vu, F.sign(u.degree * v.degree), F)
    return prop


def make_cup_associative(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        C = context(i, ch)
        P, F = C.P, C.F
        u, v, w = (data.draw(st.sampled_from(C.coh)).representative for _ in range(3))
        CASES["cup_associative"] += 1
        left = C.coh_red.coordinates(cup(P, F, cup(P, F, u, v), w))
        right = C.coh_red.coordinates(cup(P, F, u, cup(P, F, v, w)))
        assert left == right
    return prop


def make_leibniz(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        C = context(i, ch)
        assume(C.complement)
        P, F = C.P, C.F
        c = data.draw(st.sampled_from(C.complement))
        f = C.fund[c].representative
        u = data.draw(st.sampled_from(C.coh))
        v = data.draw(st.sampled_from(C.coh))
        CASES["leibniz"] += 1
        p, q = u.degree, v.degree
        ur, vr = u.representative, v.representative
        lhs = phi_bracket(P, F, f, 1, cup(P, F, ur, vr), p + q)
        rhs = _sum(cup(P, F, phi_bracket(P, F, f, 1, ur, p), vr),
                   cup(P, F, ur, phi_bracket(P, F, f, 1, vr, q)), F)
        assert C.coh_red.coordinates(lhs) == C.coh_red.coordinates(rhs)
    return prop


def make_jacobi(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        C = context(i, ch)
        assume(C.hh1)
        P, F, R = C.P, C.F, C.coh_red
        x, y, z = (data.draw(st.sampled_from(C.hh1)) for _ in range(3))
        CASES["jacobi"] += 1

        def br(a, b):
            return bracket_class(P, F, a, b, R)

        total: dict = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            inner = br(a, b)
            total = _sum(total, _lin(lambda e, c=c: br(e, c), inner, F), F)
        assert not any(total.values())
    return prop


def make_connes_BB(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        C = context(i, ch)
        P, F = C.P, C.F
        CASES["connes_BB"] += 1
        u = data.draw(st.sampled_from(C.hom))
        assert connes_B_combination(P, F, connes_B(P, F, u)) == {}
        pool = chains(i)
        if pool:
            x = data.draw(st.sampled_from(pool))
            assert _lin(lambda k: connes_B_chain(P, F, k), connes_B_chain(P, F, x), F) == {}
    return prop


def make_cap_module(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        C = context(i, ch)
        P, F = C.P, C.F
        z = data.draw(st.sampled_from(C.hom))
        u = data.draw(st.sampled_from(C.coh))
        v = data.draw(st.sampled_from(C.coh))
        CASES["cap_module"] += 1
        zr, ur, vr = z.representative, u.representative, v.representative
        lhs = C.hom_red.coordinates(cap(P, F, cap(P, F, zr, ur), vr))
        rhs = C.hom_red.coordinates(cap(P, F, zr, cup(P, F, ur, vr)))
        assert lhs == _scaled(rhs, F.sign(u.degree * v.degree), F)
    return prop


def make_phi_homotopy(n: int):
    @_settings(n)
    @given(indices, chars, st.data())
    def prop(i, ch, data):
        pool = tensors(i)
        assume(pool)
        P, F = presentation(i), Field(ch)
        t = data.draw(st.sampled_from(pool))
        CASES["phi_homotopy"] += 1
        assert homotopy_defect(P, F, t) == {}
    return prop


PROPERTIES = {
    "cochain_dd": make_cochain_dd,
    "chain_dd": make_chain_dd,
    "cup_commutative": make_cup_commutative,
    "cup_associative": make_cup_associative,
    "leibniz": make_leibniz,
    "jacobi": make_jacobi,
    "connes_BB": make_connes_BB,
    "cap_module": make_cap_module,
    "phi_homotopy": make_phi_homotopy,
}
