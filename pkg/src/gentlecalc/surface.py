"""Marked ribbon graph of a gentle presentation, its boundary components and
the dictionary between cohomology generators and boundaries.

Edges of the ribbon graph are the quiver vertices.  Its vertices are the
finite maximal paths of B, the trivial paths at quiver vertices visited by
only one such path, and the primitive cocomplete cycles.  A half-edge is
one visit of such a path to a quiver vertex; the cyclic order at a ribbon
vertex is the visiting order.  A corner is a pair of cyclically consecutive
half-edges: it carries the arrow joining the two visits, except for the
closing corner of a finite path, which holds the marked point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import CohomologyBasisElement, hh_basis
from .combinatorics import (
    b_maximal_paths, canonical_cycle, crepprim_B, max_b_length, primitive_root, spanning_tree,
)
from .homology import connes_B, hh_homology_basis
from .linalg import Field
from .presentation import Path, Presentation
from .structure.cup import generators


@dataclass(frozen=True)
class RibbonVertex:
    kind: str                # "finite", "trivial" or "infinite"
    path: Path
    half_edges: tuple        # half-edge ids in cyclic order


@dataclass(frozen=True)
class Corner:
    half_edge: int           # the corner runs from this half-edge to the next one
    arrow: int | None        # None for a marked corner
    marked: bool


@dataclass(frozen=True)
class RibbonGraph:
    vertices: tuple          # RibbonVertex
    edge_of: tuple           # half-edge -> quiver vertex
    vertex_of: tuple         # half-edge -> ribbon vertex index
    sigma: tuple             # half-edge -> next half-edge at its vertex
    iota: tuple              # half-edge -> the other half-edge on its edge
    corners: tuple           # half-edge -> Corner starting there

    @property
    def n_half_edges(self) -> int:
        return len(self.edge_of)

    @property
    def n_edges(self) -> int:
        return self.n_half_edges // 2

    def valency(self, v: int) -> int:
        return len(self.vertices[v].half_edges)

    def check(self) -> list:
        """Structural problems; empty for a well-formed graph."""
        problems = []
        count: dict = {}
        for e in self.edge_of:
            count[e] = count.get(e, 0) + 1
        for e, k in sorted(count.items()):
            if k != 2:
                problems.append(f"edge {e} has {k} incidences")
        for h in range(self.n_half_edges):
            if self.iota[self.iota[h]] != h or self.iota[h] == h:
                problems.append(f"half-edge {h} is not paired")
        return problems


class SurfaceError(ValueError):
    pass


def build_ribbon_graph(P: Presentation) -> RibbonGraph:
    if P.n_arrows == 0:
        raise SurfaceError("the ribbon graph of a single vertex without arrows is degenerate")
    vertices, edge_of, vertex_of, sigma, corners = [], [], [], [], []

    def add(kind: str, path: Path, visits: list, arrows: list, closing_marked: bool):
        start = len(edge_of)
        n = len(visits)
        hs = tuple(range(start, start + n))
        for i, v in enumerate(visits):
            edge_of.append(v)
            vertex_of.append(len(vertices))
            sigma.append(hs[(i + 1) % n])
            last = i == n - 1
            if last and closing_marked:
                corners.append(Corner(hs[i], None, True))
            else:
                corners.append(Corner(hs[i], arrows[i % len(arrows)] if arrows else None, False))
        vertices.append(RibbonVertex(kind, path, hs))

    for q in b_maximal_paths(P):
        visits = [q.source] + [P.tgt(a) for a in q.arrows]
        add("finite", q, visits, list(q.arrows), True)
    for c in crepprim_B(P):
        c = canonical_cycle(P, c)
        visits = [P.src(a) for a in c.arrows]
        add("infinite", c, visits, list(c.arrows), False)
    seen = {}
    for h, v in enumerate(edge_of):
        seen.setdefault(v, []).append(h)
    for v in range(P.n_vertices):
        if len(seen.get(v, [])) == 1:
            add("trivial", P.trivial(v), [v], [], True)
    incid: dict = {}
    for h, v in enumerate(edge_of):
        incid.setdefault(v, []).append(h)
    iota = [0] * len(edge_of)
    for v, hs in incid.items():
        if len(hs) != 2:
            raise SurfaceError(f"quiver vertex {P.quiver.vertices[v]} lies on {len(hs)} paths; "
                               "the presentation is not gentle")
        iota[hs[0]], iota[hs[1]] = hs[1], hs[0]
    return RibbonGraph(tuple(vertices), tuple(edge_of), tuple(vertex_of), tuple(sigma),
                       tuple(iota), tuple(corners))


# -- boundary components ----------------------------------------------------

@dataclass(frozen=True)
class BoundaryComponent:
    index: int
    corners: tuple           # Corner, in traversal order
    marked_points: int
    winding: int             # unmarked corners minus marked corners
    kind: str                # "unmarked", "one-marked" or "marked"

    @property
    def arrows(self) -> tuple:
        return tuple(c.arrow for c in self.corners if c.arrow is not None)


@dataclass(frozen=True)
class Puncture:
    vertex: int              # index of the infinite ribbon vertex
    cycle: Path
    winding: int = 0


def faces(G: RibbonGraph) -> list:
    """Orbits of ``sigma o iota``; each step traverses one corner."""
    seen = set()
    out = []
    for h0 in range(G.n_half_edges):
        if h0 in seen:
            continue
        orbit = []
        h = h0
        while h not in seen:
            seen.add(h)
            orbit.append(h)
            h = G.sigma[G.iota[h]]
        out.append(orbit)
    return out


def boundary_report(G: RibbonGraph) -> list:
    out = []
    for i, orbit in enumerate(faces(G)):
        cs = tuple(G.corners[G.iota[h]] for h in orbit)
        b = sum(1 for c in cs if c.marked)
        w = (len(cs) - b) - b
        kind = "unmarked" if b == 0 else ("one-marked" if b == 1 else "marked")
        out.append(BoundaryComponent(i, cs, b, w, kind))
    return out


def punctures(G: RibbonGraph) -> list:
    return [Puncture(i, v.path) for i, v in enumerate(G.vertices) if v.kind == "infinite"]


@dataclass(frozen=True)
class SurfaceSummary:
    n_vertices: int
    n_edges: int
    n_faces: int
    euler_characteristic: int
    genus: int
    n_punctures: int
    marked_points: int


def surface_summary(G: RibbonGraph) -> SurfaceSummary:
    bs = boundary_report(G)
    chi = len(G.vertices) - G.n_edges + len(bs)
    return SurfaceSummary(len(G.vertices), G.n_edges, len(bs), chi, (2 - chi) // 2,
                          len(punctures(G)), sum(b.marked_points for b in bs))


# -- the generator dictionary -----------------------------------------------

@dataclass(frozen=True)
class DictionaryEntry:
    generator: CohomologyBasisElement
    boundary: int | None     # face index, or None for a puncture
    puncture: int | None     # ribbon vertex index
    marked_points: int
    winding: int
    degree_ok: bool


@dataclass(frozen=True)
class DictionaryReport:
    entries: tuple
    open_curves: tuple       # (generator, winding) for the (c, c) generators, winding 1
    unmatched_boundaries: tuple
    unmatched_generators: tuple
    count_boundaries: int    # boundaries with at most one marked point, plus punctures
    count_generators: int    # |G minus F|
    bijective: bool
    degrees_ok: bool


def _face_path(P: Presentation, bc: BoundaryComponent) -> tuple:
    """For a one-marked face: the Γ-path read from the marked corner on, as
    a traversal-order arrow tuple, and the finite path owning the mark."""
    cs = list(bc.corners)
    k = next(i for i, c in enumerate(cs) if c.marked)
    cs = cs[k + 1:] + cs[:k]
    return tuple(c.arrow for c in cs)


def _generator_set(P: Presentation, F: Field, tree, bound: int) -> list:
    if P.n_vertices == 1 and P.n_arrows == 1 and (not P.relations or F.characteristic == 2):
        # generated by (s(a), a) and (a, s(a))
        gens = [e for m in (0, 1) for e in hh_basis(P, m, F, tree, bound)
                if e.tag == "BMaxPair"
                or (e.tag == "CycleB" and len(e.payload[0].arrows) == 1)
                or (e.tag == "CycleGamma" and len(e.payload[0].arrows) == 1)
                or (e.tag == "GammaMaxPair" and e.payload[1].is_trivial)]
        return gens
    return [e for e in generators(P, F, tree, bound).elements if e.tag != "Fundamental"]


def generator_dictionary(P: Presentation, F: Field, tree=None, bound: int = 8) -> DictionaryReport:
    """Match generators outside the (c, c) family with the boundary components
    having at most one marked point and with the interior punctures, and check
    ``deg = w + b`` (``deg = 2w`` on unmarked boundaries of odd valency when
    the characteristic is not 2)."""
    if tree is None:
        tree = spanning_tree(P)
    G = build_ribbon_graph(P)
    gens = _generator_set(P, F, tree, bound)
    fund = [e for e in generators(P, F, tree, bound).elements if e.tag == "Fundamental"]
    by_key: dict = {}
    for e in gens:
        if e.tag in ("CycleGamma", "CycleB"):
            key = (e.tag, canonical_cycle(P, primitive_root(e.payload[0])).arrows)
        else:
            key = (e.tag, e.payload)
        by_key[key] = e
    entries, unmatched_b = [], []
    used = set()
    bs = boundary_report(G)
    for bc in bs:
        if bc.marked_points > 1:
            continue
        if bc.marked_points == 0:
            C = canonical_cycle(P, P.path(bc.arrows))
            key = ("CycleGamma", C.arrows)
        else:
            mark = next(c for c in bc.corners if c.marked)
            q = G.vertices[G.vertex_of[mark.half_edge]].path
            gamma = _face_path(P, bc)
            if not gamma:
                key = ("BMaxPair", (P.trivial(q.source), q))
            else:
                key = ("GammaMaxPair", (P.path(gamma), q))
        g = by_key.get(key)
        if g is None or key in used:
            unmatched_b.append(bc.index)
            continue
        used.add(key)
        b, w = bc.marked_points, bc.winding
        odd = b == 0 and len(bc.corners) % 2 == 1 and F.characteristic != 2
        ok = g.degree == (2 * w if odd else w + b)
        entries.append(DictionaryEntry(g, bc.index, None, b, w, ok))
    for pu in punctures(G):
        key = ("CycleB", canonical_cycle(P, pu.cycle).arrows)
        g = by_key.get(key)
        if g is None or key in used:
            unmatched_b.append(-1 - pu.vertex)
            continue
        used.add(key)
        entries.append(DictionaryEntry(g, None, pu.vertex, 0, 0, g.degree == 0))
    unmatched_g = tuple(e for k, e in sorted(by_key.items(), key=lambda kv: kv[1].sort_key())
                        if k not in used)
    count_b = sum(1 for bc in bs if bc.marked_points <= 1) + len(punctures(G))
    return DictionaryReport(
        tuple(entries), tuple((f, 1) for f in fund), tuple(unmatched_b), unmatched_g,
        count_b, len(gens), not unmatched_b and not unmatched_g and count_b == len(gens),
        all(e.degree_ok for e in entries))


# -- homology curves --------------------------------------------------------

@dataclass(frozen=True)
class CurveTag:
    element: object          # HomologyBasisElement
    curve: str               # "edge", "C", "C'"
    power: int               # n with the cycle equal to the n-th power of its primitive root
    valency: int             # r, the length of the primitive root
    winding: int


@dataclass(frozen=True)
class CurveReport:
    applicable: bool
    violations: tuple
    tags: tuple
    connes: tuple            # (C' tag, C tag, coefficient) for every C'_n
    consistent: bool         # winding equals homological degree and B matches n


def homology_curve_tags(P: Presentation, F: Field, max_degree: int = 6) -> CurveReport:
    violations = []
    if F.characteristic == 2:
        violations.append("characteristic 2")
    if max_b_length(P) is None:
        violations.append("the algebra is infinite dimensional")
    if violations:
        return CurveReport(False, tuple(violations), (), (), False)
    tags = []
    ok = True
    for m in range(max_degree + 1):
        for e in hh_homology_basis(P, m, F):
            if e.tag == "VertexPair":
                tags.append(CurveTag(e, "edge", 0, 0, 0))
                continue
            C = e.payload[0]
            r = len(primitive_root(C).arrows)
            n = len(C.arrows) // r
            if e.tag == "HCycleComplete":
                t = CurveTag(e, "C", n, r, n * r)
            else:
                t = CurveTag(e, "C'", n, r, n * r - 1)
            ok &= t.winding == e.degree
            tags.append(t)
    connes = []
    for t in tags:
        if t.curve != "C'":
            continue
        image = connes_B(P, F, t.element)
        partner = next((s for s in tags if s.curve == "C" and s.element.payload == t.element.payload),
                       None)
        if partner is None:
            continue   # beyond max_degree
        coeff = image.get(partner.element, F.zero)
        ok &= coeff == F(t.power)
        connes.append((t, partner, coeff))
    return CurveReport(True, (), tuple(tags), tuple(connes), ok)


# -- diagram description ----------------------------------------------------

def diagram_text(P: Presentation, G: RibbonGraph | None = None) -> str:
    """Plain-text description: vertices with cyclic edge order, markings and
    the face walks."""
    if G is None:
        G = build_ribbon_graph(P)
    vn = P.quiver.vertices
    an = P.quiver.arrows
    lines = ["ribbon-graph"]
    for i, v in enumerate(G.vertices):
        order = " ".join(vn[G.edge_of[h]] for h in v.half_edges)
        name = P.path_str(v.path)
        mark = ""
        if v.kind != "infinite":
            hs = v.half_edges
            mark = f" marked=({vn[G.edge_of[hs[-1]]]},{vn[G.edge_of[hs[0]]]})"
        lines.append(f"vertex {i} {v.kind} {name}: [{order}]{mark}")
    for bc in boundary_report(G):
        walk = " ".join("*" if c.marked else (an[c.arrow] if c.arrow is not None else "-")
                        for c in bc.corners)
        lines.append(f"face {bc.index} b={bc.marked_points} w={bc.winding}: {walk}")
    s = surface_summary(G)
    lines.append(f"euler {s.euler_characteristic} genus {s.genus} punctures {s.n_punctures}")
    return "\n".join(lines) + "\n"


__all__ = [
    "BoundaryComponent", "Corner", "CurveReport", "CurveTag", "DictionaryEntry",
    "DictionaryReport", "Puncture", "RibbonGraph", "RibbonVertex", "SurfaceError",
    "SurfaceSummary", "boundary_report", "build_ribbon_graph", "diagram_text", "faces",
    "generator_dictionary", "homology_curve_tags", "punctures", "surface_summary",
]
