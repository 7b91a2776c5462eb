"""Closed-form Hochschild homology of a quadratic monomial algebra, the Connes
operator on that basis, the de Rham quotients and cyclic homology.

Basis elements are explicit cycles in the chain complex on antiparallel
pairs.  The tags are

* ``VertexPair``: ``(e, e)`` for a vertex ``e``;
* ``HCycleComplete``: ``<<C>>``, the signed rotation sum of a complete cycle;
* ``LFactPair``: ``(l1 C, l2 C)``, the last arrow of a complete cycle and the rest;
* ``HCycleCocomplete``: ``<<C>>``, the rotation sum of ``(r1 C, r2 C)`` for a cocomplete cycle;
* ``CocompletePoint``: ``(C, s(C))`` for a cocomplete cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import cocomplete_circuits, complete_circuits, max_b_length, rot
from .complexes import AntiparallelPair, antiparallel_pairs, chain_d_pair, cyclic_oracle
from .linalg import Echelon, Field, add_term
from .presentation import Path, Presentation

TAGS = ("VertexPair", "CocompletePoint", "HCycleCocomplete", "LFactPair", "HCycleComplete")


@dataclass(frozen=True)
class HomologyBasisElement:
    tag: str
    payload: tuple
    degree: int
    length: int
    rep: tuple = field(compare=False, repr=False)

    @property
    def representative(self) -> dict:
        return dict(self.rep)

    @property
    def circuit(self) -> Path | None:
        return None if self.tag == "VertexPair" else self.payload[0]

    def sort_key(self) -> tuple:
        return (self.degree, self.length, TAGS.index(self.tag), self.payload)

    def label(self, P: Presentation) -> str:
        s = P.path_str
        t = self.tag
        if t == "VertexPair":
            e = P.trivial(self.payload[0])
            return f"({s(e)},{s(e)})"
        C = self.payload[0]
        if t in ("HCycleComplete", "HCycleCocomplete"):
            return f"<<{s(C)}>>"
        if t == "LFactPair":
            l1, l2 = l_factors(P, C)
            return f"({s(l1)},{s(l2)})"
        return f"({s(C)},{s(P.trivial(C.source))})"


def _element(tag, payload, degree, length, rep: dict) -> HomologyBasisElement:
    return HomologyBasisElement(tag, payload, degree, length, tuple(sorted(rep.items())))


def l_factors(P: Presentation, C: Path) -> tuple:
    """``(l1, l2)`` with ``C = l1 l2`` and ``l1`` the last arrow."""
    last = C.last
    return P.arrow(last), Path(C.arrows[:-1], C.source, P.src(last))


def r_factors(P: Presentation, C: Path) -> tuple:
    """``(r1, r2)`` with ``C = r1 r2`` and ``r2`` the first arrow."""
    first = C.first
    return Path(C.arrows[1:], P.tgt(first), C.target), P.arrow(first)


def complete_cycle_sum(P: Presentation, F: Field, C: Path) -> dict:
    """``<<C>> = sum_i (-1)^{(m+1)i} (s(rot^i C), rot^i C)`` over one period."""
    m = len(C.arrows)
    out: dict = {}
    for i in range(_period(C)):
        c = rot(P, C, i)
        add_term(out, AntiparallelPair(P.trivial(c.source), c), F.sign((m + 1) * i), F)
    return out


def cocomplete_cycle_sum(P: Presentation, F: Field, C: Path) -> dict:
    """``<<C>> = sum_i (r1 rot^i C, r2 rot^i C)`` over one period."""
    out: dict = {}
    for i in range(_period(C)):
        r1, r2 = r_factors(P, rot(P, C, i))
        add_term(out, AntiparallelPair(r1, r2), F.one, F)
    return out


def _period(C: Path) -> int:
    from .combinatorics import period
    return period(C)


def carries_class(F: Field, m: int, r: int) -> bool:
    """Whether ``(-1)^{(m+1)r} = 1`` in the field."""
    return F.characteristic == 2 or ((m + 1) * r) % 2 == 0


def hh_homology_basis(P: Presentation, m: int, F: Field, bound: int = 8,
                      length: int | None = None) -> list:
    """Basis of ``HH_m``; cocomplete families are cut at cycle length ``bound``.

    With ``length`` given, only elements of that total length are returned
    (and the bound is raised to make that slice complete)."""
    if length is not None:
        bound = max(bound, length)

    def keep(L):
        return length is None or L == length

    out = []
    one = F.one
    if m == 0 and keep(0):
        for v in range(P.n_vertices):
            e = P.trivial(v)
            out.append(_element("VertexPair", (v,), 0, 0, {AntiparallelPair(e, e): one}))
    # complete circuits of length m give <<C>> in degree m
    if m >= 1 and keep(m):
        for c in complete_circuits(P, m):
            if carries_class(F, m, c.period):
                out.append(_element("HCycleComplete", (c.rep,), m, m,
                                    complete_cycle_sum(P, F, c.rep)))
    # complete circuits of length m + 1 give (l1 C, l2 C) in degree m
    if keep(m + 1):
        for c in complete_circuits(P, m + 1):
            if carries_class(F, m + 1, c.period):
                l1, l2 = l_factors(P, c.rep)
                out.append(_element("LFactPair", (c.rep,), m, m + 1,
                                    {AntiparallelPair(l1, l2): one}))
    if m in (0, 1):
        fd = max_b_length(P) is not None
        top = P.n_arrows if fd else bound
        for L in range(1, top + 1):
            if not keep(L):
                continue
            for c in cocomplete_circuits(P, L):
                if m == 0:
                    out.append(_element("CocompletePoint", (c.rep,), 0, L,
                                        {AntiparallelPair(c.rep, P.trivial(c.rep.source)): one}))
                else:
                    out.append(_element("HCycleCocomplete", (c.rep,), 1, L,
                                        cocomplete_cycle_sum(P, F, c.rep)))
    out.sort(key=HomologyBasisElement.sort_key)
    return out


def hh_homology_dimension(P: Presentation, m: int, F: Field, bound: int = 8) -> int:
    return len(hh_homology_basis(P, m, F, bound))


def homology_dimension_by_length(P: Presentation, m: int, F: Field, bound: int) -> dict:
    out: dict = {}
    for e in hh_homology_basis(P, m, F, bound):
        if e.length <= bound:
            out[e.length] = out.get(e.length, 0) + 1
    return dict(sorted(out.items()))


class HomologyReducer:
    """Expresses cycles in the closed-form basis modulo boundaries."""

    def __init__(self, P: Presentation, F: Field):
        self.P = P
        self.F = F
        self._slices: dict = {}

    def _slice(self, m: int, L: int):
        key = (m, L)
        if key not in self._slices:
            P, F = self.P, self.F
            bd = Echelon(F)
            for p in antiparallel_pairs(P, m + 1, L):
                bd.add(chain_d_pair(P, F, p))
            basis = hh_homology_basis(P, m, F, length=L)
            ech = Echelon(F, track=True)
            for i, e in enumerate(basis):
                if ech.add(bd.reduce(e.representative), i) is not None:
                    raise ArithmeticError(f"basis element {e.label(P)} is dependent modulo boundaries")
            self._slices[key] = (bd, ech, basis)
        return self._slices[key]

    def basis(self, m: int, L: int) -> list:
        return self._slice(m, L)[2]

    def coordinates(self, z: dict) -> dict:
        F = self.F
        by_slice: dict = {}
        for pair, c in z.items():
            a, g = pair
            m = len(g.arrows)
            by_slice.setdefault((m, m + len(a.arrows)), {})[pair] = c
        out: dict = {}
        for (m, L), part in sorted(by_slice.items()):
            bd, ech, basis = self._slice(m, L)
            combo: dict = {}
            rest = ech.reduce(bd.reduce(part), combo)
            if rest:
                raise ValueError("not a cycle, or outside the span of the basis")
            for i, c in combo.items():
                add_term(out, basis[i], F.neg(c), F)
        return out

    def is_boundary(self, z: dict) -> bool:
        return not self.coordinates(z)


# -- Connes operator ------------------------------------------------------

def _partner(P: Presentation, F: Field, u: HomologyBasisElement) -> HomologyBasisElement:
    C = u.payload[0]
    if u.tag == "LFactPair":
        return _element("HCycleComplete", (C,), u.degree + 1, u.length, complete_cycle_sum(P, F, C))
    return _element("HCycleCocomplete", (C,), 1, u.length, cocomplete_cycle_sum(P, F, C))


def connes_B(P: Presentation, F: Field, u: HomologyBasisElement) -> dict:
    """Closed-form action: ``B(l1 C, l2 C) = (m/r) <<C>>`` and
    ``B(C, s(C)) = (m/r) <<C>>``; every other basis element goes to zero."""
    if u.tag not in ("LFactPair", "CocompletePoint"):
        return {}
    C = u.payload[0]
    coeff = F(len(C.arrows) // _period(C))
    if not coeff:
        return {}
    return {_partner(P, F, u): coeff}


def connes_B_combination(P: Presentation, F: Field, x: dict) -> dict:
    out: dict = {}
    for u, c in x.items():
        for k, v in connes_B(P, F, u).items():
            add_term(out, k, F.mul(c, v), F)
    return out


@dataclass(frozen=True)
class DeRhamReport:
    de_rham: dict       # degree -> list of basis elements spanning H_dR
    coker: dict         # degree -> list of basis elements spanning coker B
    truncated: bool


def de_rham(P: Presentation, F: Field, max_degree: int, bound: int = 8) -> DeRhamReport:
    """Homology of ``(HH_*, B)`` and the cokernels of ``B`` up to ``max_degree``.

    ``B`` sends each basis element to a multiple of a single basis element,
    and distinct elements to distinct targets, so both quotients are
    spanned by subsets of the basis."""
    basis = {p: hh_homology_basis(P, p, F, bound) for p in range(max_degree + 1)}
    hit: set = set()
    killed: set = set()
    for p in range(max_degree + 1):
        for u in basis[p]:
            im = connes_B(P, F, u)
            if im:
                killed.add(u)
                hit.update(im)
    dr = {p: [u for u in basis[p] if u not in killed and u not in hit] for p in basis}
    ck = {p: [u for u in basis[p] if u not in hit] for p in basis}
    return DeRhamReport(dr, ck, max_b_length(P) is None)


@dataclass(frozen=True)
class CyclicReport:
    degree: int
    dimension: int
    summands: tuple     # (description, dimension)
    truncated: bool


def cyclic_homology(P: Presentation, F: Field, m: int, bound: int = 8) -> CyclicReport:
    """``HC_m = coker(B: HH_(m-1) -> HH_m) + sum_(j >= 1) H_dR^(m - 2j)``."""
    dr = de_rham(P, F, m, bound)
    parts = [(f"coker B in degree {m}", len(dr.coker[m]))]
    for j in range(1, m // 2 + 1):
        parts.append((f"de Rham in degree {m - 2 * j}", len(dr.de_rham[m - 2 * j])))
    return CyclicReport(m, sum(d for _, d in parts), tuple(parts), dr.truncated)


def cyclic_oracle_dimension(P: Presentation, F: Field, m: int, max_length: int | None = None) -> int:
    """Independent check through the normalized (b, B) total complex."""
    mb = max_b_length(P)
    if max_length is None:
        if mb is None:
            raise ValueError("infinite-dimensional algebra: a length bound is required")
        max_length = (m + 2) * max(mb, 1)
    return cyclic_oracle(P, F, m, max_length)


__all__ = [
    "CyclicReport", "DeRhamReport", "HomologyBasisElement", "HomologyReducer", "TAGS",
    "carries_class", "cocomplete_cycle_sum", "complete_cycle_sum", "connes_B",
    "connes_B_combination", "cyclic_homology", "cyclic_oracle_dimension", "de_rham",
    "hh_homology_basis", "hh_homology_dimension", "homology_dimension_by_length",
    "l_factors", "r_factors",
]
