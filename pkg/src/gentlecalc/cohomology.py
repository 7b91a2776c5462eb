"""Closed-form basis of Hochschild cohomology of a gentle algebra, plus the
finiteness and growth reports.

Basis elements are given by explicit cocycles in the cochain complex on
parallel pairs.  The tags are

* ``One``: the sum of all ``(e, e)``;
* ``BMaxPair``: ``(s(a), a)`` for a B-maximal cycle ``a``;
* ``CycleB``: ``<a>``, the rotation sum of a chosen cocomplete cycle;
* ``Fundamental``: ``(c, c)`` for an arrow off the spanning tree;
* ``BPlusPair``: ``(c, c a)`` for a chosen cocomplete cycle ``a`` starting with ``c``;
* ``GammaMaxPair``: ``(g, a)`` with ``g`` Γ-maximal, sharing no first or last arrow with ``a``;
* ``CycleGamma``: ``<C>``, the signed rotation sum of a complete cycle;
* ``GammaPlusPair``: ``(bC, b)`` for a complete cycle ``C`` starting with ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import (
    b_between, b_maximal_paths, complete_primitive_walks, crep_B, crep_gamma,
    crep_gamma_circ, crepprim_gamma_circ, gamma_maximal_paths, gamma_paths,
    max_b_length, max_gamma_length, period, rot, spanning_tree,
)
from .complexes import ParallelPair, cochain_d, cochain_d_pair, parallel_pairs
from .linalg import Echelon, Field, add_term
from .presentation import Path, Presentation, validate_gentle

TAGS = ("One", "BMaxPair", "CycleB", "Fundamental", "BPlusPair",
        "GammaMaxPair", "CycleGamma", "GammaPlusPair")


@dataclass(frozen=True)
class CohomologyBasisElement:
    tag: str
    payload: tuple
    degree: int
    weight: int
    rep: tuple = field(compare=False, repr=False)

    @property
    def representative(self) -> dict:
        return dict(self.rep)

    def sort_key(self) -> tuple:
        return (self.degree, self.weight, TAGS.index(self.tag), self.payload)

    def label(self, P: Presentation) -> str:
        s = P.path_str
        t, pl = self.tag, self.payload
        if t == "One":
            return "1"
        if t in ("CycleB", "CycleGamma"):
            return f"<{s(pl[0])}>"
        if t == "Fundamental":
            c = P.arrow(pl[0])
            return f"({s(c)},{s(c)})"
        return f"({s(pl[0])},{s(pl[1])})"


def _element(tag, payload, degree, weight, rep: dict) -> CohomologyBasisElement:
    return CohomologyBasisElement(tag, payload, degree, weight, tuple(sorted(rep.items())))


def cycle_sum_B(P: Presentation, F: Field, alpha: Path) -> dict:
    """``<a> = sum_i (s(rot^i a), rot^i a)`` over one period."""
    out: dict = {}
    for i in range(period(alpha)):
        r = rot(P, alpha, i)
        add_term(out, ParallelPair(P.trivial(r.source), r), F.one, F)
    return out


def cycle_sum_gamma(P: Presentation, F: Field, C: Path) -> dict:
    """``<C> = sum_i (-1)^{im} (rot^i C, s(rot^i C))`` over one period."""
    m = len(C.arrows)
    out: dict = {}
    for i in range(period(C)):
        r = rot(P, C, i)
        add_term(out, ParallelPair(r, P.trivial(r.source)), F.sign(i * m), F)
    return out


def _require_gentle(P: Presentation) -> None:
    if not validate_gentle(P).gentle:
        raise ValueError("the closed-form cohomology basis needs a gentle presentation")


def hh_basis(P: Presentation, m: int, F: Field, tree=None, bound: int = 8,
             weight: int | None = None) -> list:
    """Basis of ``HH^m`` given by explicit cocycles.

    Infinite families (present only when the algebra is infinite
    dimensional) are cut at paths ``alpha`` of length at most ``bound``.
    When ``weight`` is given only elements of that weight are returned and
    the bound is raised as needed to make the answer complete."""
    _require_gentle(P)
    if tree is None:
        tree = spanning_tree(P)
    if weight is not None:
        bound = max(bound, m + weight)
    fd = max_b_length(P) is not None
    maxlen = max_b_length(P) if fd else bound
    out: list = []
    one = F.one

    def keep(w):
        return weight is None or w == weight

    if m == 0:
        if keep(0):
            out.append(_element("One", (), 0, 0, {ParallelPair(P.trivial(v), P.trivial(v)): one
                                                  for v in range(P.n_vertices)}))
        for a in b_maximal_paths(P):
            if a.is_cycle and keep(len(a.arrows)):
                out.append(_element("BMaxPair", (P.trivial(a.source), a), 0, len(a.arrows),
                                    {ParallelPair(P.trivial(a.source), a): one}))
        for n in range(1, maxlen + 1):
            if not keep(n):
                continue
            for a in crep_B(P, n):
                out.append(_element("CycleB", (a,), 0, n, cycle_sum_B(P, F, a)))
    if m == 1:
        for c in range(P.n_arrows):
            if c not in tree and keep(0):
                pc = P.arrow(c)
                out.append(_element("Fundamental", (c,), 1, 0, {ParallelPair(pc, pc): one}))
        for n in range(1, maxlen):
            if not keep(n):
                continue
            for a in crep_B(P, n):
                c = P.arrow(a.first)
                ca = Path(a.arrows + (a.first,), a.source, c.target)
                out.append(_element("BPlusPair", (c, ca), 1, n, {ParallelPair(c, ca): one}))
    if m >= 1:
        for g in gamma_maximal_paths(P):
            if len(g.arrows) != m:
                continue
            for n in range(maxlen + 1):
                if not keep(n - m):
                    continue
                for a in b_between(P, g.source, g.target, n):
                    if a.arrows and (a.first == g.first or a.last == g.last):
                        continue
                    out.append(_element("GammaMaxPair", (g, a), m, n - m, {ParallelPair(g, a): one}))
        if keep(-m):
            for C in crep_gamma(P, F, m):
                out.append(_element("CycleGamma", (C,), m, -m, cycle_sum_gamma(P, F, C)))
    if m >= 2 and keep(1 - m):
        for C in crep_gamma(P, F, m - 1):
            b = P.arrow(C.first)
            bC = Path(C.arrows + (C.first,), C.source, b.target)
            out.append(_element("GammaPlusPair", (bC, b), m, 1 - m, {ParallelPair(bC, b): one}))
    out.sort(key=CohomologyBasisElement.sort_key)
    return out


def hh_dimension(P: Presentation, m: int, F: Field, tree=None, bound: int = 8) -> int:
    return len(hh_basis(P, m, F, tree, bound))


def hh_dimension_by_weight(P: Presentation, m: int, F: Field, bound: int) -> dict:
    """Closed-form dimensions of the weight slices with ``|alpha| <= bound``."""
    out: dict = {}
    for e in hh_basis(P, m, F, None, bound):
        if e.weight + m <= bound:
            out[e.weight] = out.get(e.weight, 0) + 1
    return dict(sorted(out.items()))


def is_truncated(P: Presentation, m: int) -> bool:
    """True when the degree-``m`` basis has infinite families cut by the bound."""
    return m <= 1 and max_b_length(P) is None


# -- class reduction --------------------------------------------------------

class CohomologyReducer:
    """Expresses cocycles in the closed-form basis modulo coboundaries.

    Work is done per (degree, weight) slice, each of which is finite."""

    def __init__(self, P: Presentation, F: Field, tree=None):
        self.P = P
        self.F = F
        self.tree = spanning_tree(P) if tree is None else frozenset(tree)
        self._slices: dict = {}

    def _slice(self, m: int, w: int):
        key = (m, w)
        if key not in self._slices:
            P, F = self.P, self.F
            cob = Echelon(F)
            if m > 0:
                for p in parallel_pairs(P, m - 1, w):
                    cob.add(cochain_d_pair(P, F, p))
            basis = hh_basis(P, m, F, self.tree, weight=w)
            ech = Echelon(F, track=True)
            for i, e in enumerate(basis):
                v = cob.reduce(e.representative)
                if ech.add(v, i) is not None:
                    raise ArithmeticError(f"basis element {e.label(P)} is dependent modulo coboundaries")
            self._slices[key] = (cob, ech, basis)
        return self._slices[key]

    def basis(self, m: int, w: int) -> list:
        return self._slice(m, w)[2]

    def coordinates(self, z: dict) -> dict:
        """Map a cocycle to ``{basis element: coefficient}``."""
        F = self.F
        by_slice: dict = {}
        for pair, c in z.items():
            g, a = pair
            m = len(g.arrows)
            by_slice.setdefault((m, len(a.arrows) - m), {})[pair] = c
        out: dict = {}
        for (m, w), part in sorted(by_slice.items()):
            cob, ech, basis = self._slice(m, w)
            v = cob.reduce(part)
            combo: dict = {}
            rest = ech.reduce(v, combo)
            if rest:
                raise ValueError("not a cocycle, or outside the span of the basis")
            for i, c in combo.items():
                add_term(out, basis[i], F.neg(c), F)
        return out

    def is_coboundary(self, z: dict) -> bool:
        return not self.coordinates(z)


# -- reports ---------------------------------------------------------------

@dataclass(frozen=True)
class FinitenessReport:
    algebra_finite: bool
    hh0_finite: bool
    hh1_finite: bool
    no_cocomplete_cycle: bool
    gldim_finite: bool
    eventually_zero: bool
    no_complete_cycle: bool
    vanishing_degree: int | None   # HH^n = 0 for all n >= this degree


def finiteness_report(P: Presentation) -> FinitenessReport:
    _require_gentle(P)
    no_coco = max_b_length(P) is not None
    no_comp = not complete_primitive_walks(P)
    mg = max_gamma_length(P)
    return FinitenessReport(no_coco, no_coco, no_coco, no_coco, no_comp, no_comp, no_comp,
                            None if mg is None else mg + 1)


def carrying_circuits(P: Presentation, F: Field, m: int) -> list:
    """Complete circuits of length ``m`` with ``m`` even or characteristic 2."""
    return crep_gamma(P, F, m)


@dataclass(frozen=True)
class GrowthReport:
    n_primitive_complete: int
    n_arrows: int
    dims: tuple             # (m, dim HH^m, |C_m| + |C_(m-1)|) for |Q1| < m <= 2|Q1|
    bound_holds: bool
    formula_holds: bool


def growth_report(P: Presentation, F: Field, tree=None) -> GrowthReport:
    if max_b_length(P) is None or not validate_gentle(P).gentle:
        raise ValueError("growth report needs a finite-dimensional gentle presentation")
    N = len(crepprim_gamma_circ(P))
    q1 = P.n_arrows
    rows = []
    for m in range(q1 + 1, 2 * q1 + 1):
        d = hh_dimension(P, m, F, tree)
        rows.append((m, d, len(carrying_circuits(P, F, m)) + len(carrying_circuits(P, F, m - 1))))
    return GrowthReport(N, q1, tuple(rows), all(d <= 2 * N for _, d, _ in rows),
                        all(d == f for _, d, f in rows))


def hh1_formula(P: Presentation, F: Field) -> int:
    """``1 - |Q0| + |Q1|`` plus degree-1 Γ-maximal pairs, first-arrow pairs of
    cocomplete cycles and, in characteristic 2, loops with square in the ideal."""
    return 1 - P.n_vertices + P.n_arrows + sum(
        1 for e in hh_basis(P, 1, F) if e.tag in ("GammaMaxPair", "BPlusPair", "CycleGamma"))


def check_cocycles(P: Presentation, F: Field, elements) -> list:
    """Elements whose representative fails to be a cocycle (should be empty)."""
    return [e for e in elements if cochain_d(P, F, e.representative)]


def gamma_present(P: Presentation, m: int) -> bool:
    return bool(gamma_paths(P, m))


__all__ = [
    "CohomologyBasisElement", "CohomologyReducer", "FinitenessReport", "GrowthReport",
    "TAGS", "carrying_circuits", "check_cocycles", "crep_gamma_circ", "cycle_sum_B",
    "cycle_sum_gamma", "finiteness_report", "growth_report", "hh1_formula", "hh_basis",
    "hh_dimension", "hh_dimension_by_weight", "is_truncated",
]
