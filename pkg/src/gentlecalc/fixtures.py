"""Named example presentations and a random generator of gentle presentations."""

from __future__ import annotations

import random

from .presentation import Presentation, Quiver, make_presentation, validate_gentle


def point() -> Presentation:
    """One vertex, no arrows: the ground field itself."""
    return make_presentation(["1"], {}, allow_point=True)


def a2() -> Presentation:
    return make_presentation(["1", "2"], {"a": ("1", "2")})


def one_loop(square_zero: bool = True) -> Presentation:
    return make_presentation(["1"], {"a": ("1", "1")}, ["aa"] if square_zero else [])


def two_loops() -> Presentation:
    """Two loops at one vertex with both squares in the ideal."""
    return make_presentation(["1"], {"a": ("1", "1"), "b": ("1", "1")}, ["aa", "bb"])


def kronecker() -> Presentation:
    return make_presentation(["1", "2"], {"a": ("1", "2"), "b": ("1", "2")})


def no_star() -> Presentation:
    """Three vertices, two triangles of relations and one infinite cycle."""
    arrows = {"a": ("1", "2"), "b": ("2", "3"), "c": ("3", "1"),
              "d": ("1", "2"), "e": ("2", "3"), "f": ("3", "1")}
    return make_presentation(["1", "2", "3"], arrows, ["ba", "cb", "ac", "ed", "fe", "df"])


def oriented_cycle(n: int, relations: int | None = None) -> Presentation:
    """Oriented cycle ``1 -> 2 -> ... -> n -> 1`` with the first ``relations``
    consecutive length-2 paths in the ideal (all of them by default)."""
    names = [f"x{i}" for i in range(1, n + 1)]
    verts = [str(i) for i in range(1, n + 1)]
    arrows = {names[i]: (verts[i], verts[(i + 1) % n]) for i in range(n)}
    k = n if relations is None else relations
    rels = [f"{names[(i + 1) % n]}*{names[i]}" for i in range(k)]
    return make_presentation(verts, arrows, rels)


def linear_a3_relation() -> Presentation:
    return make_presentation(["1", "2", "3"], {"a": ("1", "2"), "b": ("2", "3")}, ["ba"])


def square_one_relation() -> Presentation:
    """Commutative-square shape with one relation on each side path."""
    arrows = {"a": ("1", "2"), "b": ("2", "4"), "c": ("1", "3"), "d": ("3", "4")}
    return make_presentation(["1", "2", "3", "4"], arrows, ["ba"])


def gamma_max_cycle() -> Presentation:
    """Two vertices, arrows a: 1->2, b: 2->1, c: 1->2 with ba, cb in the ideal."""
    arrows = {"a": ("1", "2"), "b": ("2", "1"), "c": ("1", "2")}
    return make_presentation(["1", "2"], arrows, ["ba", "cb"])


def loop_with_tail() -> Presentation:
    """A loop with square zero attached to an arrow."""
    arrows = {"a": ("1", "1"), "b": ("1", "2")}
    return make_presentation(["1", "2"], arrows, ["aa"])


FIXTURES = {
    "a2": a2,
    "one_loop": one_loop,
    "one_loop_free": lambda: one_loop(False),
    "two_loops": two_loops,
    "kronecker": kronecker,
    "no_star": no_star,
    "cycle3": lambda: oriented_cycle(3),
    "cycle4": lambda: oriented_cycle(4),
    "cycle3_two_relations": lambda: oriented_cycle(3, 2),
    "a3_relation": linear_a3_relation,
    "square": square_one_relation,
    "gamma_max_cycle": gamma_max_cycle,
    "loop_with_tail": loop_with_tail,
}


def fd_fixtures() -> dict:
    return {k: f() for k, f in FIXTURES.items() if validate_gentle(f()).klass == "fd-gentle"}


# -- random gentle presentations -------------------------------------------

def random_gentle(rng: random.Random, max_vertices: int = 8, max_arrows: int = 12,
                  finite: bool = True, tries: int = 1000) -> Presentation:
    """A random connected gentle presentation; finite-dimensional if asked.

    Arrows are added one at a time respecting the in/out degree bound, then
    at each vertex the length-2 paths are split into relations and
    non-relations so that every arrow has at most one continuation of each
    kind."""
    for _ in range(tries):
        nv = rng.randint(1, max_vertices)
        na_target = rng.randint(max(nv - 1, 1), max_arrows)
        outdeg = [0] * nv
        indeg = [0] * nv
        src, tgt = [], []
        # a random spanning tree keeps the quiver connected
        for v in range(1, nv):
            for _ in range(20):
                u = rng.randrange(v)
                if rng.random() < 0.5:
                    s, t = u, v
                else:
                    s, t = v, u
                if outdeg[s] < 2 and indeg[t] < 2:
                    break
            else:
                break
            src.append(s)
            tgt.append(t)
            outdeg[s] += 1
            indeg[t] += 1
        if len(src) != nv - 1:
            continue
        attempts = 0
        while len(src) < na_target and attempts < 50:
            attempts += 1
            s, t = rng.randrange(nv), rng.randrange(nv)
            if outdeg[s] < 2 and indeg[t] < 2:
                src.append(s)
                tgt.append(t)
                outdeg[s] += 1
                indeg[t] += 1
        if not src:
            continue
        na = len(src)
        rels = []
        for v in range(nv):
            ins = [a for a in range(na) if tgt[a] == v]
            outs = [b for b in range(na) if src[b] == v]
            if not ins or not outs:
                continue
            if len(ins) == 2 and len(outs) == 2:
                if rng.random() < 0.5:
                    rels += [(ins[0], outs[0]), (ins[1], outs[1])]
                else:
                    rels += [(ins[0], outs[1]), (ins[1], outs[0])]
            elif len(ins) == 1 and len(outs) == 2:
                rels.append((ins[0], outs[rng.randrange(2)]))
            elif len(ins) == 2 and len(outs) == 1:
                rels.append((ins[rng.randrange(2)], outs[0]))
            elif rng.random() < 0.5:
                rels.append((ins[0], outs[0]))
        vnames = [str(i + 1) for i in range(nv)]
        anames = [_arrow_name(i) for i in range(na)]
        P = Presentation(Quiver(vnames, anames, src, tgt), rels)
        rep = validate_gentle(P)
        if not rep.gentle:
            continue
        if finite and not rep.finite_dimensional:
            continue
        return P
    raise RuntimeError("could not generate a gentle presentation")


def _arrow_name(i: int) -> str:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return letters[i] if i < 26 else f"x{i}"
