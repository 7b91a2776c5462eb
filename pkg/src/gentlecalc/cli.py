"""Command-line front end.

Every subcommand builds a report as a list of text lines plus a JSON-ready
dictionary; ``--format structured`` prints the dictionary wrapped in one
document carrying a schema version.  Output depends only on the arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .cohomology import CohomologyBasisElement, CohomologyReducer, hh_basis, hh_dimension_by_weight
from .combinatorics import (circuits, crepprim_B, crepprim_gamma, enumerate_sets, max_b_length,
                            maximal_paths, parse_tree, spanning_tree, star_check)
from .complexes import cohomology_oracle, homology_oracle
from .homology import (HomologyReducer, cyclic_homology, cyclic_oracle_dimension,
                       hh_homology_basis, homology_dimension_by_length)
from .linalg import Field
from .presentation import Presentation, PresentationError, parse_presentation, validate_gentle
from .structure import (bracket_table, cap_class, cup_table, derived_invariants, generators,
                        hh_algebra_presentation, lie_decomposition)
from .surface import (boundary_report, build_ribbon_graph, generator_dictionary, punctures,
                      surface_summary)

SCHEMA_VERSION = 1
COMMANDS = ("validate", "sets", "circuits", "hh", "homology", "cyclic", "cup", "cap", "bracket",
            "presentation", "surface", "invariants", "verify")

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 2, 3


@dataclass
class Report:
    lines: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    status: int = EXIT_OK

    def add(self, line: str = "") -> None:
        self.lines.append(line)

    def warn(self, msg: str) -> None:
        if msg not in self.warnings:
            self.warnings.append(msg)


@dataclass(frozen=True)
class RunConfig:
    command: str
    path: str
    characteristic: int = 0
    bound: int = 8
    tree: tuple | None = None
    fmt: str = "text"
    max_degree: int = 4


# -- formatting helpers -------------------------------------------------------

def _coh(P: Presentation, e: CohomologyBasisElement) -> dict:
    return {"label": e.label(P), "tag": e.tag, "degree": e.degree, "weight": e.weight}


def _hom(P: Presentation, e) -> dict:
    return {"label": e.label(P), "tag": e.tag, "degree": e.degree, "length": e.length}


def _cls(P: Presentation, F: Field, x: dict) -> dict:
    """A class as ``{label: coefficient}`` in basis order."""
    return {e.label(P): F.to_str(c) for e, c in sorted(x.items(), key=lambda t: t[0].sort_key())}


def _cls_str(d: dict) -> str:
    if not d:
        return "0"
    parts = []
    for k, c in d.items():
        parts.append(k if c == "1" else f"-{k}" if c == "-1" else f"{c}*{k}")
    return " + ".join(parts)


def _paths(P: Presentation, ps) -> list:
    return [P.path_str(p) for p in ps]


def _grows(count, bound: int) -> bool:
    """Whether a bounded count changes when the bound is raised by two."""
    return count(bound) != count(bound + 2)


# -- subcommands --------------------------------------------------------------

def cmd_validate(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    g = validate_gentle(P)
    r.data = {"class": g.klass, "gentle": g.gentle, "finite_dimensional": g.finite_dimensional,
              "conditions": {"degree_bound": g.degree_bound, "unique_free": g.unique_free,
                             "unique_relation": g.unique_relation, "quadratic": g.quadratic},
              "failures": list(g.failures),
              "vertices": P.n_vertices, "arrows": P.n_arrows, "relations": len(P.relations)}
    r.add(f"class {g.klass}")
    r.add(f"vertices {P.n_vertices} arrows {P.n_arrows} relations {len(P.relations)}")
    for k, v in r.data["conditions"].items():
        r.add(f"{k} {'yes' if v else 'no'}")
    r.add(f"finite_dimensional {'yes' if g.finite_dimensional else 'no'}")
    for f in g.failures:
        r.add(f"failure {f}")


def cmd_sets(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    S = enumerate_sets(P, cfg.bound)
    mp = maximal_paths(P, cfg.bound)
    r.data = {"B": {str(n): _paths(P, ps) for n, ps in S.B_by_length.items()},
              "Gamma": {str(n): _paths(P, ps) for n, ps in S.Gamma_by_length.items()},
              "B_complete": S.B_complete, "Gamma_complete": S.Gamma_complete,
              "B_maximal": _paths(P, mp.b_maximal), "Gamma_maximal": _paths(P, mp.gamma_maximal)}
    for n in sorted(S.B_by_length):
        r.add(f"B_{n} ({len(S.B_by_length[n])}): {' '.join(r.data['B'][str(n)])}")
    for n in sorted(S.Gamma_by_length):
        r.add(f"Gamma_{n} ({len(S.Gamma_by_length[n])}): {' '.join(r.data['Gamma'][str(n)])}")
    r.add(f"B-maximal: {' '.join(r.data['B_maximal'])}")
    r.add(f"Gamma-maximal: {' '.join(r.data['Gamma_maximal'])}")
    if not S.B_complete:
        r.warn(f"B has paths longer than {cfg.bound}")
    if not S.Gamma_complete:
        r.warn(f"Gamma has paths longer than {cfg.bound}")


def cmd_circuits(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    cs = circuits(P, cfg.bound, "all")
    pc, pb = crepprim_gamma(P, F), crepprim_B(P)
    r.data = {"circuits": [{"cycle": P.path_str(c.rep), "length": c.length, "period": c.period,
                            "kind": c.kind} for c in cs],
              "primitive_complete": _paths(P, pc), "primitive_cocomplete": _paths(P, pb)}
    for c in cs:
        r.add(f"{c.kind} {P.path_str(c.rep)} length {c.length} period {c.period}")
    r.add(f"primitive complete ({len(pc)}): {' '.join(_paths(P, pc))}")
    r.add(f"primitive cocomplete ({len(pb)}): {' '.join(_paths(P, pb))}")
    if any(len(c.arrows) > cfg.bound for c in list(pc) + list(pb)):
        r.warn(f"some primitive circuits are longer than the listing bound {cfg.bound}")


def _tree(P: Presentation, cfg: RunConfig):
    return parse_tree(P, cfg.tree) if cfg.tree is not None else spanning_tree(P)


def cmd_hh(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    tree = _tree(P, cfg)
    degrees = []
    for m in range(cfg.max_degree + 1):
        B = hh_basis(P, m, F, tree, cfg.bound)
        degrees.append({"degree": m, "dimension": len(B), "basis": [_coh(P, e) for e in B]})
        if _grows(lambda b: len(hh_basis(P, m, F, tree, b)), cfg.bound):
            r.warn(f"HH^{m} is infinite-dimensional; basis listed for paths of length <= {cfg.bound}")
    r.data = {"tree": sorted(P.quiver.arrows[a] for a in tree), "degrees": degrees}
    r.add("dims " + ",".join(str(d["dimension"]) for d in degrees))
    for d in degrees:
        r.add(f"HH^{d['degree']} dim {d['dimension']}")
        for e in d["basis"]:
            r.add(f"  {e['label']} {e['tag']} weight {e['weight']}")


def cmd_homology(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    degrees = []
    for m in range(cfg.max_degree + 1):
        B = hh_homology_basis(P, m, F, cfg.bound)
        degrees.append({"degree": m, "dimension": len(B), "basis": [_hom(P, e) for e in B]})
        if _grows(lambda b: len(hh_homology_basis(P, m, F, b)), cfg.bound):
            r.warn(f"HH_{m} is infinite-dimensional; basis listed for cycles of length <= {cfg.bound}")
    r.data = {"degrees": degrees}
    r.add("dims " + ",".join(str(d["dimension"]) for d in degrees))
    for d in degrees:
        r.add(f"HH_{d['degree']} dim {d['dimension']}")
        for e in d["basis"]:
            r.add(f"  {e['label']} {e['tag']} length {e['length']}")


def cmd_cyclic(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    degrees = []
    for m in range(cfg.max_degree + 1):
        rep = cyclic_homology(P, F, m, cfg.bound)
        degrees.append({"degree": m, "dimension": rep.dimension,
                        "summands": [{"part": s, "dimension": d} for s, d in rep.summands]})
        if rep.truncated and _grows(lambda b: cyclic_homology(P, F, m, b).dimension, cfg.bound):
            r.warn(f"HC_{m} is infinite-dimensional; counted for cycles of length <= {cfg.bound}")
    r.data = {"degrees": degrees}
    r.add("dims " + ",".join(str(d["dimension"]) for d in degrees))
    for d in degrees:
        parts = ", ".join(f"{s['part']}: {s['dimension']}" for s in d["summands"])
        r.add(f"HC_{d['degree']} dim {d['dimension']} ({parts})")


def _generators(P: Presentation, F: Field, cfg: RunConfig, r: Report):
    tree = _tree(P, cfg)
    G = generators(P, F, tree, cfg.bound)
    if G.truncated:
        r.warn("the algebra is infinite-dimensional; tables use elements found within the bound")
    return tree, G


def cmd_cup(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    tree, G = _generators(P, F, cfg, r)
    table = cup_table(P, F, G.elements, CohomologyReducer(P, F, tree))
    order = {e: i for i, e in enumerate(G.elements)}
    rows = []
    for (u, v), x in sorted(table.items(), key=lambda t: (order[t[0][0]], order[t[0][1]])):
        if order[u] <= order[v] and x:
            rows.append({"left": u.label(P), "right": v.label(P), "product": _cls(P, F, x)})
    r.data = {"generators": [_coh(P, e) for e in G.elements], "products": rows}
    r.add(f"generators ({len(G.elements)}): " + " ".join(e.label(P) for e in G.elements))
    for row in rows:
        r.add(f"{row['left']} * {row['right']} = {_cls_str(row['product'])}")


def cmd_cap(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    tree = _tree(P, cfg)
    hred = HomologyReducer(P, F)
    rows = []
    for p in range(cfg.max_degree + 1):
        for v in hh_homology_basis(P, p, F, cfg.bound):
            for q in range(p + 1):
                for u in hh_basis(P, q, F, tree, cfg.bound):
                    x = cap_class(P, F, v, u, hred)
                    if x:
                        rows.append({"homology": v.label(P), "cohomology": u.label(P),
                                     "cap": _cls(P, F, x)})
    if max_b_length(P) is None:
        r.warn(f"the algebra is infinite-dimensional; rows use basis elements within the bound {cfg.bound}")
    r.data = {"entries": rows}
    for row in rows:
        r.add(f"{row['homology']} cap {row['cohomology']} = {_cls_str(row['cap'])}")
    r.add(f"nonzero entries {len(rows)}")


def cmd_bracket(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    tree, G = _generators(P, F, cfg, r)
    T = bracket_table(P, F, G.elements, CohomologyReducer(P, F, tree))
    order = {e: i for i, e in enumerate(G.elements)}
    rows = []
    for (u, v), x in sorted(T.entries.items(), key=lambda t: (order[t[0][0]], order[t[0][1]])):
        if order[u] <= order[v]:
            rows.append({"left": u.label(P), "right": v.label(P), "bracket": _cls(P, F, x)})
    r.data = {"generators": [_coh(P, e) for e in G.elements], "entries": rows,
              "antisymmetric": T.antisymmetric}
    r.add(f"generators ({len(G.elements)}): " + " ".join(e.label(P) for e in G.elements))
    for row in rows:
        r.add(f"[{row['left']}, {row['right']}] = {_cls_str(row['bracket'])}")
    r.add(f"nonzero entries {len(rows)}")
    r.add(f"antisymmetry {'ok' if T.antisymmetric else 'FAILED'}")


def cmd_presentation(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    tree = _tree(P, cfg)
    H = hh_algebra_presentation(P, F, tree, cfg.bound)
    if H.generators.truncated:
        r.warn("the algebra is infinite-dimensional; generators found within the bound")
    r.data = {"generators": [_coh(P, e) for e in H.generators.elements],
              "relations": [{"kind": x.kind, "relation": x.label(P)} for x in H.relations],
              "survivals": [f"{u.label(P)} * {v.label(P)}" for u, v in H.survivals],
              "quadratic_monomial": H.quadratic_monomial, "star_possible": H.star_possible,
              "special": H.special, "verified": H.verified}
    r.add(f"generators ({len(H.generators.elements)}): "
          + " ".join(e.label(P) for e in H.generators.elements))
    if H.special:
        r.add(f"special {H.special}")
    for x in r.data["relations"]:
        r.add(f"{x['kind']} {x['relation']}")
    for s in r.data["survivals"]:
        r.add(f"nonzero {s}")
    r.add(f"quadratic_monomial {'yes' if H.quadratic_monomial else 'no'}")
    r.add(f"verified {'yes' if H.verified else 'no'}")


def cmd_surface(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    tree = _tree(P, cfg)
    G = build_ribbon_graph(P)
    s = surface_summary(G)
    an = P.quiver.arrows
    bcs = boundary_report(G)
    D = generator_dictionary(P, F, tree, cfg.bound)
    faces = [{"index": b.index, "marked_points": b.marked_points, "winding": b.winding,
              "kind": b.kind,
              "walk": ["*" if c.marked else an[c.arrow] for c in b.corners]} for b in bcs]
    pts = [{"vertex": p.vertex, "cycle": P.path_str(p.cycle)} for p in punctures(G)]
    entries = []
    for e in D.entries:
        entries.append({"generator": e.generator.label(P), "degree": e.generator.degree,
                        "boundary": e.boundary, "puncture": e.puncture,
                        "marked_points": e.marked_points, "winding": e.winding,
                        "degree_ok": e.degree_ok})
    r.data = {"summary": {"vertices": s.n_vertices, "edges": s.n_edges, "faces": s.n_faces,
                          "euler_characteristic": s.euler_characteristic, "genus": s.genus,
                          "punctures": s.n_punctures, "marked_points": s.marked_points},
              "faces": faces, "punctures": pts, "dictionary": entries,
              "open_curves": [g.label(P) for g, _ in D.open_curves],
              "count_boundaries": D.count_boundaries, "count_generators": D.count_generators,
              "bijective": D.bijective, "degrees_ok": D.degrees_ok}
    r.add(f"vertices {s.n_vertices} edges {s.n_edges} faces {s.n_faces} "
          f"euler {s.euler_characteristic} genus {s.genus} punctures {s.n_punctures} "
          f"marked {s.marked_points}")
    for f in faces:
        r.add(f"face {f['index']} {f['kind']} b={f['marked_points']} w={f['winding']}: {' '.join(f['walk'])}")
    for p in pts:
        r.add(f"puncture at ribbon vertex {p['vertex']}: {p['cycle']}")
    for e in entries:
        where = f"face {e['boundary']}" if e["boundary"] is not None else f"puncture {e['puncture']}"
        r.add(f"{e['generator']} (degree {e['degree']}) <-> {where} "
              f"w={e['winding']} b={e['marked_points']} {'ok' if e['degree_ok'] else 'DEGREE MISMATCH'}")
    r.add(f"boundaries {D.count_boundaries} generators {D.count_generators} "
          f"bijective {'yes' if D.bijective else 'no'}")


def cmd_invariants(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    tree = _tree(P, cfg)
    D = derived_invariants(P, F, tree, cfg.bound)
    L = lie_decomposition(P, F, tree if cfg.tree is not None else None, min(cfg.bound, 6),
                          cfg.max_degree)
    an = P.quiver.arrows
    blocks = [{"arrow": an[b.arrow], "family": b.family, "structure": b.structure,
               "members": [e.label(P) for e in b.members]} for b in L.blocks]
    r.data = {"n_cocomplete_primitive": D.n_cocomplete_primitive,
              "h_T": list(D.h_T), "h_T_computed": list(D.h_T_computed),
              "radical_check": D.radical_check, "hh_dims": list(D.hh_dims),
              "phi_11": D.phi_11, "phi_01": D.phi_01,
              "lie": {"applicable": L.applicable, "violations": list(L.violations),
                      "n_cycles": L.n_cycles, "blocks": blocks,
                      "central": [e.label(P) for e in L.central],
                      "shared": [e.label(P) for e in L.shared],
                      "failures": len(L.failures)}}
    if D.truncated:
        r.warn("the algebra is infinite-dimensional; h_T is the closed form, the computed "
               "quotient depends on the bound")
    r.add(f"n {D.n_cocomplete_primitive}")
    r.add("h_T " + _poly_str(D.h_T))
    r.add("h_T computed " + _poly_str(D.h_T_computed))
    r.add(f"phi_A(1,1) {D.phi_11}")
    if F.characteristic == 2:
        r.add(f"phi_A(0,1) {D.phi_01}")
    if L.applicable:
        r.add(f"HH^1 decomposition over {L.n_cycles} graph cycles")
        for b in blocks:
            r.add(f"  {b['arrow']}: {b['structure']}")
    else:
        r.add("HH^1 decomposition withheld: " + "; ".join(L.violations))


def _poly_str(coeffs) -> str:
    terms = [f"{c}" if i == 0 else f"{c}t" if i == 1 else f"{c}t^{i}"
             for i, c in enumerate(coeffs) if c]
    return " + ".join(terms) if terms else "0"


def cmd_verify(P: Presentation, F: Field, cfg: RunConfig, r: Report) -> None:
    fd = max_b_length(P) is not None
    checks = []

    def record(name: str, closed, oracle) -> None:
        ok = closed == oracle
        checks.append({"check": name, "closed_form": closed, "oracle": oracle, "ok": ok})
        r.add(f"{'PASS' if ok else 'FAIL'} {name}: closed form {closed} oracle {oracle}")

    for m in range(cfg.max_degree + 1):
        if fd:
            record(f"HH^{m}", len(hh_basis(P, m, F, None, cfg.bound)),
                   cohomology_oracle(P, F, m).dimension)
            record(f"HH_{m}", len(hh_homology_basis(P, m, F, cfg.bound)),
                   homology_oracle(P, F, m).dimension)
        else:
            # compare slice by slice within the bound; stringify keys for the document
            a = {str(k): v for k, v in hh_dimension_by_weight(P, m, F, cfg.bound).items()}
            b = {str(k): v for k, v in cohomology_oracle(P, F, m, max_weight=cfg.bound - m).slices}
            record(f"HH^{m} by weight", a, b)
            a = {str(k): v for k, v in homology_dimension_by_length(P, m, F, cfg.bound).items()}
            b = {str(k): v for k, v in homology_oracle(P, F, m, max_length=cfg.bound).slices}
            record(f"HH_{m} by length", a, b)
    if fd:
        for m in range(min(cfg.max_degree, 3) + 1):
            record(f"HC_{m}", cyclic_homology(P, F, m, cfg.bound).dimension,
                   cyclic_oracle_dimension(P, F, m))
    else:
        r.warn(f"infinite-dimensional algebra: compared within the bound {cfg.bound} only")
    ok = all(c["ok"] for c in checks)
    r.data = {"checks": checks, "result": "PASS" if ok else "FAIL"}
    r.add("PASS" if ok else "FAIL")
    if not ok:
        r.status = EXIT_MISMATCH


HANDLERS = {
    "validate": cmd_validate, "sets": cmd_sets, "circuits": cmd_circuits, "hh": cmd_hh,
    "homology": cmd_homology, "cyclic": cmd_cyclic, "cup": cmd_cup, "cap": cmd_cap,
    "bracket": cmd_bracket, "presentation": cmd_presentation, "surface": cmd_surface,
    "invariants": cmd_invariants, "verify": cmd_verify,
}
GENTLE_ONLY = set(COMMANDS) - {"validate", "sets", "circuits"}


# -- driver -------------------------------------------------------------------

def _tree_arg(text: str) -> tuple:
    return tuple(t for t in text.replace(",", " ").split() if t)


def _bound_arg(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("the bound must be at least 2")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="presentation file (line format, JSON or YAML)")
    common.add_argument("--char", type=int, default=0, dest="characteristic",
                        help="field characteristic, 0 or a prime (default 0)")
    common.add_argument("--bound", type=_bound_arg, default=8,
                        help="path length bound for infinite families (default 8)")
    common.add_argument("--tree", type=_tree_arg, default=None,
                        help="spanning tree as a list of arrow names")
    common.add_argument("--format", choices=("text", "structured"), default="text", dest="fmt")
    common.add_argument("--max-degree", type=int, default=4, dest="max_degree",
                        help="highest degree reported (default 4)")
    parser = argparse.ArgumentParser(prog="gentlecalc",
                                     description="Hochschild calculus of gentle algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for c in COMMANDS:
        sub.add_parser(c, parents=[common])
    return parser


def run(cfg: RunConfig, source: str) -> tuple[int, str]:
    """Execute one command on the presentation text; returns exit status and output."""
    try:
        P = parse_presentation(source)
    except PresentationError as e:
        return EXIT_INPUT, f"error: {e}\n"
    try:
        F = Field(cfg.characteristic)
    except ValueError as e:
        return EXIT_INPUT, f"error: {e}\n"
    if cfg.command in GENTLE_ONLY and not validate_gentle(P).gentle:
        return EXIT_INPUT, "error: the presentation is not gentle\n"
    r = Report()
    try:
        HANDLERS[cfg.command](P, F, cfg, r)
    except (KeyError, ValueError) as e:
        msg = e.args[0] if e.args else str(e)
        return EXIT_INPUT, f"error: {msg}\n"
    if cfg.fmt == "structured":
        doc = {"schema_version": SCHEMA_VERSION, "tool": "gentlecalc", "command": cfg.command,
               "config": {"input": cfg.path, "characteristic": cfg.characteristic,
                          "bound": cfg.bound, "tree": list(cfg.tree) if cfg.tree else None,
                          "max_degree": cfg.max_degree},
               "result": r.data, "warnings": r.warnings, "exit_status": r.status}
        return r.status, json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    out = [f"WARN {w}" for w in r.warnings] + r.lines
    return r.status, "\n".join(out) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.input, args.characteristic, args.bound, args.tree,
                    args.fmt, args.max_degree)
    try:
        with open(args.input, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as e:
        sys.stderr.write(f"error: cannot read {args.input}: {e.strerror}\n")
        return EXIT_INPUT
    status, text = run(cfg, source)
    (sys.stderr if status == EXIT_INPUT else sys.stdout).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
