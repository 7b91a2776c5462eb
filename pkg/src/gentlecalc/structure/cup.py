"""Cup product on the cochain complex and on cohomology classes, the
generating set of the cohomology algebra and its presentation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from ..cohomology import CohomologyBasisElement, CohomologyReducer, hh_basis
from ..combinatorics import (
    crepprim_B, crepprim_gamma, gamma_maximal_paths, max_b_length, satisfies_star,
    spanning_tree, star_check,
)
from ..linalg import Field, add_term
from ..presentation import Path, Presentation, compose


def cup_pair(P: Presentation, u, v) -> tuple | None:
    """``(g, a) cup (g', a') = (g g', a a')`` when ``g g'`` is in Γ and ``a a'`` in B."""
    g, a = u
    h, b = v
    gh = compose(P, g, h)
    ab = compose(P, a, b)
    if gh is None or ab is None or not P.in_Gamma(gh) or not P.in_B(ab):
        return None
    return type(u)(gh, ab)


def cup(P: Presentation, F: Field, x: dict, y: dict) -> dict:
    """Bilinear extension of :func:`cup_pair` to cochains."""
    out: dict = {}
    for u, c in x.items():
        for v, d in y.items():
            w = cup_pair(P, u, v)
            if w is not None:
                add_term(out, w, F.mul(c, d), F)
    return out


def cup_class(P: Presentation, F: Field, u: CohomologyBasisElement, v: CohomologyBasisElement,
              reducer: CohomologyReducer | None = None) -> dict:
    """The class of ``u cup v`` as ``{basis element: coefficient}``; empty when zero."""
    if reducer is None:
        reducer = CohomologyReducer(P, F)
    return reducer.coordinates(cup(P, F, u.representative, v.representative))


def cup_table(P: Presentation, F: Field, elements, reducer: CohomologyReducer | None = None) -> dict:
    """``{(u, v): class}`` for all ordered pairs of the given basis elements."""
    if reducer is None:
        reducer = CohomologyReducer(P, F)
    return {(u, v): cup_class(P, F, u, v, reducer) for u in elements for v in elements}


# -- generators and the algebra presentation --------------------------------

def is_one_loop(P: Presentation) -> bool:
    return P.n_vertices == 1 and P.n_arrows == 1


def is_free_exception(P: Presentation, F: Field) -> bool:
    """One vertex, one loop ``a`` and either ``a^2`` not in the ideal or characteristic 2."""
    return is_one_loop(P) and (not P.relations or F.characteristic == 2)


@dataclass(frozen=True)
class GeneratorSet:
    elements: tuple          # CohomologyBasisElement, sorted
    fundamental: tuple       # the (c, c) generators
    minimal: bool
    truncated: bool


def generators(P: Presentation, F: Field, tree=None, bound: int = 8) -> GeneratorSet:
    """B-maximal cycle pairs, sums over primitive cocomplete cycles, ``(c, c)``
    off the tree, clean Γ-maximal pairs and sums over primitive complete
    representatives."""
    if tree is None:
        tree = spanning_tree(P)
    prim_B = set(crepprim_B(P))
    prim_G = set(crepprim_gamma(P, F))
    # the generating set is finite: raise the bound until it is all visible
    top = max([bound] + [len(c.arrows) for c in prim_G | prim_B]
              + [len(g.arrows) for g in gamma_maximal_paths(P)])
    out = []
    for m in range(top + 1):
        for e in hh_basis(P, m, F, tree, top):
            t = e.tag
            if t in ("BMaxPair", "Fundamental", "GammaMaxPair"):
                out.append(e)
            elif t == "CycleB" and e.payload[0] in prim_B:
                out.append(e)
            elif t == "CycleGamma" and e.payload[0] in prim_G:
                out.append(e)
    out.sort(key=CohomologyBasisElement.sort_key)
    fund = tuple(e for e in out if e.tag == "Fundamental")
    return GeneratorSet(tuple(out), fund, not is_free_exception(P, F), max_b_length(P) is None)


@dataclass(frozen=True)
class AlgebraRelation:
    kind: str                # "vanishing" or "equalizer"
    terms: tuple             # (u, v) for vanishing; (c-gen, d-gen, cycle-gen) for equalizers

    def label(self, P: Presentation) -> str:
        if self.kind == "vanishing":
            u, v = self.terms
            return f"{u.label(P)} * {v.label(P)}"
        c, d, D = self.terms
        return f"{c.label(P)} * {D.label(P)} - {d.label(P)} * {D.label(P)}"


@dataclass(frozen=True)
class PresentationOfHH:
    generators: GeneratorSet
    relations: tuple
    survivals: tuple         # generator pairs whose product is nonzero
    quadratic_monomial: bool # no equalizers are needed for this tree
    star_possible: bool | None
    special: str | None      # description of a special-case presentation
    verified: bool           # every relation and survival agrees with computed products
    failures: tuple


def _passes(gen: CohomologyBasisElement, c: int) -> bool:
    return c in gen.payload[0].arrows


def _survives(u: CohomologyBasisElement, v: CohomologyBasisElement, free_loop: bool) -> bool:
    cyc = ("CycleGamma", "CycleB")
    if u.tag in cyc and u == v:
        return True
    for x, y in ((u, v), (v, u)):
        if x.tag in cyc and y.tag == "Fundamental" and _passes(x, y.payload[0]):
            return True
        # a single free loop: <a^m> * (a, s(a)) = (a, a^m)
        if free_loop and x.tag == "CycleB" and y.tag == "GammaMaxPair":
            return True
    return False


def hh_algebra_presentation(P: Presentation, F: Field, tree=None, bound: int = 8) -> PresentationOfHH:
    """Generators and relations of the cohomology algebra, checked against the
    computed cup products of the generators."""
    if tree is None:
        tree = spanning_tree(P)
    gens = generators(P, F, tree, bound)
    star_possible, _ = star_check(P, F)
    reducer = CohomologyReducer(P, F, tree)
    if is_one_loop(P) and P.relations and F.characteristic == 2:
        return _char2_loop_presentation(P, F, gens, reducer, star_possible)
    G = gens.elements
    free_loop = is_one_loop(P) and not P.relations
    relations, survivals, failures = [], [], []
    for u, v in combinations_with_replacement(G, 2):
        prod = cup_class(P, F, u, v, reducer)
        if _survives(u, v, free_loop):
            survivals.append((u, v))
            if not prod:
                failures.append(f"{u.label(P)} * {v.label(P)} should be nonzero")
        else:
            relations.append(AlgebraRelation("vanishing", (u, v)))
            if prod:
                failures.append(f"{u.label(P)} * {v.label(P)} should vanish")
    for D in G:
        if D.tag not in ("CycleGamma", "CycleB"):
            continue
        through = [f for f in gens.fundamental if _passes(D, f.payload[0])]
        for c, d in zip(through, through[1:]):
            relations.append(AlgebraRelation("equalizer", (c, d, D)))
            if cup_class(P, F, c, D, reducer) != cup_class(P, F, d, D, reducer):
                failures.append(f"{c.label(P)} * {D.label(P)} differs from {d.label(P)} * {D.label(P)}")
    quad = not any(r.kind == "equalizer" for r in relations)
    return PresentationOfHH(gens, tuple(relations), tuple(survivals), quad, star_possible,
                            None, not failures, tuple(failures))


def _char2_loop_presentation(P, F, gens, reducer, star_possible) -> PresentationOfHH:
    # generated freely in degrees 0 and 1 by (s(a), a) and (a, s(a)) with (s(a),a)^2 = 0
    x = next(e for e in hh_basis(P, 0, F) if e.tag == "BMaxPair")
    y = next(e for e in hh_basis(P, 1, F) if e.tag == "CycleGamma")
    special = GeneratorSet((x, y), (), False, False)
    failures = []
    if cup_class(P, F, x, x, reducer):
        failures.append("(s(a),a)^2 should vanish")
    # y^k must be the sum over the loop power in each degree
    power = y.representative
    for k in range(2, 6):
        power = cup(P, F, power, y.representative)
        coords = reducer.coordinates(power)
        if list(coords) != [e for e in hh_basis(P, k, F) if e.tag == "CycleGamma"]:
            failures.append(f"(a,s(a))^{k} is not <a^{k}>")
    return PresentationOfHH(special, (AlgebraRelation("vanishing", (x, x)),), (), True,
                            star_possible, "free graded-commutative on (s(a),a), (a,s(a)) modulo (s(a),a)^2",
                            not failures, tuple(failures))


__all__ = [
    "AlgebraRelation", "GeneratorSet", "PresentationOfHH", "cup", "cup_class", "cup_pair",
    "cup_table", "generators", "hh_algebra_presentation", "is_free_exception", "is_one_loop",
    "satisfies_star",
]
