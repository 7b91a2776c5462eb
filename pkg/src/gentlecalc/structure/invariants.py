"""Lie structure of the shifted cohomology and derived-invariant reports."""

from __future__ import annotations

from dataclasses import dataclass

from ..cohomology import CohomologyBasisElement, CohomologyReducer, hh_basis
from ..combinatorics import (
    crepprim_B, crepprim_gamma, max_b_length, primitive_root, satisfies_star, spanning_tree,
    star_check,
)
from ..linalg import Field, rank
from ..presentation import Presentation
from .bracket import bracket_class, deg_c
from .cup import cup_class, generators, is_one_loop


def _key(x: dict) -> dict:
    """Re-key a class by sortable basis keys so it can enter an echelon form."""
    return {e.sort_key(): c for e, c in x.items()}


def is_kronecker(P: Presentation) -> bool:
    return (P.n_vertices == 2 and P.n_arrows == 2 and not P.relations
            and P.src(0) == P.src(1) and P.tgt(0) == P.tgt(1))


# -- bracket tables -----------------------------------------------------------

@dataclass(frozen=True)
class BracketTable:
    elements: tuple
    entries: dict            # (u, v) -> class, nonzero entries only
    antisymmetric: bool


def bracket_table(P: Presentation, F: Field, elements, reducer: CohomologyReducer | None = None
                  ) -> BracketTable:
    """All ordered brackets among ``elements``, with the graded antisymmetry
    ``[u, v] = -(-1)^{(|u|-1)(|v|-1)} [v, u]`` checked on every pair."""
    if reducer is None:
        reducer = CohomologyReducer(P, F)
    elements = tuple(elements)
    entries: dict = {}
    for u in elements:
        for v in elements:
            if u.degree + v.degree >= 1:
                b = bracket_class(P, F, u, v, reducer)
                if b:
                    entries[(u, v)] = b
    ok = True
    for u in elements:
        for v in elements:
            s = F.neg(F.sign((u.degree - 1) * (v.degree - 1)))
            left = entries.get((u, v), {})
            right = {k: F.mul(s, c) for k, c in entries.get((v, u), {}).items()}
            if left != right:
                ok = False
    return BracketTable(elements, entries, ok)


def hh1_lie_table(P: Presentation, F: Field, tree=None, bound: int = 8) -> BracketTable:
    if tree is None:
        tree = spanning_tree(P)
    return bracket_table(P, F, hh_basis(P, 1, F, tree, bound), CohomologyReducer(P, F, tree))


def jacobi_failures(P: Presentation, F: Field, table: BracketTable,
                    reducer: CohomologyReducer | None = None) -> list:
    """Triples of degree-1 elements violating the Jacobi identity."""
    if reducer is None:
        reducer = CohomologyReducer(P, F)
    E = [e for e in table.elements if e.degree == 1]

    def br(x: dict, v) -> dict:
        out: dict = {}
        for e, c in x.items():
            for k, d in bracket_class(P, F, e, v, reducer).items():
                out[k] = F.add(out.get(k, F.zero), F.mul(c, d))
        return {k: c for k, c in out.items() if c}

    bad = []
    for i, x in enumerate(E):
        for j, y in enumerate(E[i:], i):
            for z in E[j:]:
                total: dict = {}
                for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                    for k, d in br(table.entries.get((a, b), {}), c).items():
                        total[k] = F.add(total.get(k, F.zero), d)
                if any(total.values()):
                    bad.append((x, y, z))
    return bad


@dataclass(frozen=True)
class DerivedLieReport:
    dimension_hh1: int
    derived_dimension: int       # dim [HH^1, HH^1]
    phi_11: int                  # in characteristic 2 this excludes phi_01
    phi_01: int                  # loops b with b^2 in I, counted only in characteristic 2
    euler_formula_holds: bool | None   # dim HH^1 = 1 - chi(Q) + dim [HH^1, HH^1], fd only
    truncated: bool


def derived_lie_report(P: Presentation, F: Field, tree=None, bound: int = 8) -> DerivedLieReport:
    table = hh1_lie_table(P, F, tree, bound)
    d = rank((_key(b) for b in table.entries.values()), F)
    phi01 = 0
    if F.characteristic == 2:
        phi01 = sum(1 for a in range(P.n_arrows)
                    if P.src(a) == P.tgt(a) and P.is_relation(a, a))
    fd = max_b_length(P) is not None
    dim1 = len(table.elements)
    excluded = is_one_loop(P) or is_kronecker(P)
    euler = (dim1 == 1 - P.n_vertices + P.n_arrows + d) if fd and not excluded else None
    return DerivedLieReport(dim1, d, d - phi01, phi01, euler, not fd)


# -- block decomposition ------------------------------------------------------

FAMILIES = {
    1: "<(a,a)> x| <(g,alpha)>",
    2: "<(a,a)> x| (<(aC^k,a)> x| <<C^k>>)",
    3: "<(a,a)> x| (<(a,a alpha^k)> x| <<alpha^k>>)",
    4: "<(a,a)>",
}


@dataclass(frozen=True)
class LieBlock:
    arrow: int                   # the complement arrow naming the graph cycle
    family: int | None           # None when the members do not fit one family
    fundamental: CohomologyBasisElement
    members: tuple               # remaining basis elements of the block, within the bound
    structure: str

    def label(self, P: Presentation) -> str:
        return P.quiver.arrows[self.arrow]


@dataclass(frozen=True)
class LieDecomposition:
    applicable: bool
    violations: tuple            # reasons the decomposition is withheld
    tree: frozenset | None
    n_cycles: int
    blocks: tuple
    central: tuple               # elements whose graph cycle class is zero
    shared: tuple                # elements whose class involves several graph cycles
    failures: tuple              # bracket checks that disagree with the block structure
    derived: DerivedLieReport | None


def _root(P: Presentation, e: CohomologyBasisElement):
    t = e.tag
    if t in ("CycleB", "CycleGamma"):
        return primitive_root(e.payload[0])
    if t == "BPlusPair":
        a = e.payload[1]
        return primitive_root(P.path(a.arrows[1:]))
    if t == "GammaPlusPair":
        g = e.payload[0]
        return primitive_root(P.path(g.arrows[1:]))
    return None


def cycle_class(e: CohomologyBasisElement, arrows) -> dict:
    """Coordinates of the closed walk ``gamma alpha^{-1}`` of an element in the
    cycle space of the graph, on the basis given by the complement arrows.
    Up to sign these are the ``deg_c`` of the element."""
    pair = next(iter(e.representative))   # all terms share deg_c
    return {c: k for c in arrows if (k := deg_c(c, pair))}


def _family(P: Presentation, members) -> int | None:
    kinds = set()
    for e in members:
        if e.tag in ("GammaMaxPair", "BMaxPair"):
            kinds.add(1)
        elif e.tag in ("CycleGamma", "GammaPlusPair"):
            kinds.add(2)
        elif e.tag in ("CycleB", "BPlusPair"):
            kinds.add(3)
    if not kinds:
        return 4
    if len(kinds) > 1:
        return None
    k = kinds.pop()
    if k == 1 and len(members) != 1:
        return None
    if k in (2, 3) and len({_root(P, e) for e in members}) != 1:
        return None
    return k


def lie_decomposition(P: Presentation, F: Field, tree=None, bound: int = 6,
                      max_degree: int = 4) -> LieDecomposition:
    """Split ``HH^*[1]`` into one block per cycle of the underlying graph.

    Every basis element up to ``max_degree`` (and the path bound for
    infinite families) other than the unit is assigned to the graph cycle
    named by its cycle class.  The block structure is then checked on
    computed brackets: ``(a, a)`` acts on its own block by ``deg_a``,
    elements of different blocks commute and elements with zero class are
    central."""
    violations = []
    if is_one_loop(P):
        violations.append("the quiver is a single loop")
    if is_kronecker(P):
        violations.append("the quiver is the Kronecker quiver")
    if tree is None:
        ok, witness = star_check(P, F)
        tree = witness if ok else spanning_tree(P)
    tree = frozenset(tree)
    if not satisfies_star(P, F, tree):
        violations.append("the spanning tree does not satisfy the one-complement-arrow condition")
    n_cycles = 1 - P.n_vertices + P.n_arrows
    if violations:
        return LieDecomposition(False, tuple(violations), tree, n_cycles, (), (), (), (), None)

    reducer = CohomologyReducer(P, F, tree)
    basis = [e for m in range(max_degree + 1) for e in hh_basis(P, m, F, tree, bound)
             if e.tag != "One"]
    comp = sorted(set(range(P.n_arrows)) - tree)
    fund = {e.payload[0]: e for e in basis if e.tag == "Fundamental"}
    groups: dict = {c: [] for c in comp}
    central, shared = [], []
    for e in basis:
        if e.tag == "Fundamental":
            continue
        cls = cycle_class(e, comp)
        if not cls:
            central.append(e)
        elif len(cls) > 1:
            shared.append(e)
        else:
            groups[next(iter(cls))].append(e)

    failures = []
    blocks = []
    for c in comp:
        members = tuple(groups[c])
        fam = _family(P, members)
        blocks.append(LieBlock(c, fam, fund[c], members,
                               FAMILIES.get(fam, "mixed") if fam else "mixed"))
        for e in members:
            k = F(deg_c(c, next(iter(e.representative))))
            want = {e: k} if k else {}
            if bracket_class(P, F, fund[c], e, reducer) != want:
                failures.append(f"[({P.quiver.arrows[c]},{P.quiver.arrows[c]}), {e.label(P)}]"
                                " is not the deg multiple")
    for i, x in enumerate(blocks):
        for y in blocks[i + 1:]:
            for u in (x.fundamental,) + x.members:
                for v in (y.fundamental,) + y.members:
                    if u.degree + v.degree >= 1 and bracket_class(P, F, u, v, reducer):
                        failures.append(f"[{u.label(P)}, {v.label(P)}] crosses blocks")
    for u in central:
        for v in basis:
            if u.degree + v.degree >= 1 and bracket_class(P, F, u, v, reducer):
                failures.append(f"{u.label(P)} is not central")
                break
    derived = derived_lie_report(P, F, tree, bound)
    return LieDecomposition(True, (), tree, n_cycles, tuple(blocks), tuple(central),
                            tuple(shared), tuple(failures), derived)


# -- derived invariants -------------------------------------------------------

@dataclass(frozen=True)
class DerivedInvariants:
    n_cocomplete_primitive: int
    h_T: tuple                   # coefficients of the closed-form polynomial
    h_T_computed: tuple          # rad / rad^2 from computed cup products, degrees <= max_degree
    radical_check: bool | None   # closed form equals the computation (fd presentations only)
    hh_dims: tuple
    phi_11: int
    phi_01: int
    truncated: bool


def top_generators(P: Presentation, F: Field, tree=None, bound: int = 8) -> list:
    """B-maximal pairs, ``(c, c)`` off the tree, clean Γ-maximal pairs and
    sums over primitive complete representatives."""
    if is_one_loop(P) and (not P.relations or F.characteristic == 2):
        # generated by (s(a), a) and (a, s(a)); only the second and a B-maximal pair lie in rad
        return [e for m in (0, 1) for e in hh_basis(P, m, F, tree, bound)
                if e.tag == "BMaxPair"
                or (e.tag == "CycleGamma" and len(e.payload[0].arrows) == 1)
                or (e.tag == "GammaMaxPair" and e.payload[1].is_trivial)]
    gens = generators(P, F, tree, bound).elements
    prim = set(crepprim_gamma(P, F))
    return [e for e in gens if e.tag in ("BMaxPair", "Fundamental", "GammaMaxPair")
            or (e.tag == "CycleGamma" and e.payload[0] in prim)]


def _poly(degrees) -> tuple:
    degrees = list(degrees)
    if not degrees:
        return ()
    out = [0] * (max(degrees) + 1)
    for d in degrees:
        out[d] += 1
    return tuple(out)


def radical_quotient(P: Presentation, F: Field, max_degree: int, tree=None, bound: int = 8) -> tuple:
    """``dim rad^m / (rad^2)^m`` for ``m <= max_degree`` from the cup products of
    basis elements.  The radical is ``HH^+`` plus the B-maximal cycle pairs."""
    if tree is None:
        tree = spanning_tree(P)
    reducer = CohomologyReducer(P, F, tree)
    rad = []
    for m in range(max_degree + 1):
        B = hh_basis(P, m, F, tree, bound)
        rad.append(B if m else [e for e in B if e.tag == "BMaxPair"])
    out = []
    for m in range(max_degree + 1):
        prods = []
        for i in range(m + 1):
            for u in rad[i]:
                for v in rad[m - i]:
                    x = cup_class(P, F, u, v, reducer)
                    if x:
                        prods.append(_key(x))
        out.append(len(rad[m]) - rank(prods, F))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def derived_invariants(P: Presentation, F: Field, tree=None, bound: int = 8,
                       max_degree: int | None = None) -> DerivedInvariants:
    if tree is None:
        tree = spanning_tree(P)
    fd = max_b_length(P) is not None
    n = len(crepprim_B(P))
    h = _poly(e.degree for e in top_generators(P, F, tree, bound))
    if max_degree is None:
        max_degree = len(h) + 1
    computed = radical_quotient(P, F, max_degree, tree, bound)
    dims = tuple(len(hh_basis(P, m, F, tree, bound)) for m in range(max_degree + 1))
    lie = derived_lie_report(P, F, tree, bound)
    return DerivedInvariants(n, h, computed, (computed == h) if fd else None, dims,
                             lie.phi_11, lie.phi_01, not fd)


__all__ = [
    "BracketTable", "DerivedInvariants", "DerivedLieReport", "FAMILIES", "LieBlock",
    "LieDecomposition", "bracket_table", "derived_invariants", "derived_lie_report",
    "cycle_class", "hh1_lie_table", "is_kronecker", "jacobi_failures", "lie_decomposition",
    "radical_quotient", "top_generators",
]
