"""Cap product of homology by cohomology: chain-level formula, reduction to
the closed-form homology basis, the closed-form case list for generators and
the tables of the small exceptional algebras."""

from __future__ import annotations

from ..cohomology import CohomologyBasisElement, hh_basis
from ..combinatorics import power, primitive_root, rot
from ..complexes import AntiparallelPair
from ..homology import HomologyBasisElement, HomologyReducer, hh_homology_basis
from ..linalg import Field, add_term
from ..presentation import Path, Presentation, compose


def cap_pair(P: Presentation, F: Field, h, c) -> tuple | None:
    """``(a, x) cap (y, b) = (-1)^{(p+q)q} (a b, z)`` when ``x = y z`` and ``a b`` is in B.

    Returns ``(pair, sign)`` or ``None``."""
    a, x = h
    y, b = c
    p, q = len(x.arrows), len(y.arrows)
    if q > p:
        return None
    # y is the last-applied part of x
    if x.arrows[p - q:] != y.arrows or (q == 0 and y.source != x.target):
        return None
    if q and y.source != P.src(x.arrows[p - q]):
        return None
    z = Path(x.arrows[:p - q], x.source, y.source)
    ab = compose(P, a, b)
    if ab is None or not P.in_B(ab):
        return None
    return AntiparallelPair(ab, z), F.sign((p + q) * q)


def cap(P: Presentation, F: Field, h: dict, c: dict) -> dict:
    """Bilinear chain-level cap product of a chain ``h`` with a cochain ``c``."""
    out: dict = {}
    for u, s in h.items():
        for v, t in c.items():
            r = cap_pair(P, F, u, v)
            if r is not None:
                add_term(out, r[0], F.mul(r[1], F.mul(s, t)), F)
    return out


def cap_class(P: Presentation, F: Field, v: HomologyBasisElement, u: CohomologyBasisElement,
              reducer: HomologyReducer | None = None) -> dict:
    """The class of ``v cap u`` as ``{homology basis element: coefficient}``."""
    if reducer is None:
        reducer = HomologyReducer(P, F)
    return reducer.coordinates(cap(P, F, v.representative, u.representative))


# -- closed-form predictions ------------------------------------------------

def _hbasis(P: Presentation, F: Field, tag: str, C: Path, degree: int) -> HomologyBasisElement | None:
    """The homology basis element with the given tag on the circuit of ``C``."""
    for e in hh_homology_basis(P, degree, F, length=len(C.arrows)):
        if e.tag == tag and e.payload[0] == C:
            return e
    return None


def _vertex(P: Presentation, F: Field, v: int) -> HomologyBasisElement:
    return next(e for e in hh_homology_basis(P, 0, F, length=0) if e.payload == (v,))


def _canon(P: Presentation, C: Path) -> Path:
    from ..combinatorics import canonical_cycle
    return canonical_cycle(P, C)


def _root_and_power(C: Path) -> tuple:
    r = primitive_root(C)
    return r, len(C.arrows) // len(r.arrows)


def cap_prediction(P: Presentation, F: Field, v: HomologyBasisElement, u: CohomologyBasisElement) -> dict:
    """Closed-form ``v cap u`` for ``u`` a generator of the cohomology algebra
    and ``v`` a homology basis element, on quivers with more than one vertex."""
    if P.n_vertices < 2:
        raise ValueError("the closed-form cap product needs more than one vertex")
    one = F.one
    out: dict = {}
    if u.tag == "Fundamental":
        c = u.payload[0]
        C = v.circuit
        if v.tag == "HCycleCocomplete" and c in C.arrows:
            out[_hbasis(P, F, "CocompletePoint", C, 0)] = one
        elif v.tag == "HCycleComplete" and c in C.arrows:
            m = len(C.arrows)
            e = _hbasis(P, F, "LFactPair", C, m - 1)
            if e is not None:
                out[e] = F.sign(m + 1)
        return out
    if u.tag == "CycleB":
        alpha = u.payload[0]
        if v.tag == "VertexPair":
            # one term for every passage of alpha through the vertex
            visits = sum(1 for a in alpha.arrows if P.src(a) == v.payload[0])
            if F(visits):
                out[_hbasis(P, F, "CocompletePoint", alpha, 0)] = F(visits)
            return out
        if v.tag in ("CocompletePoint", "HCycleCocomplete"):
            root, k = _root_and_power(v.circuit)
            if _canon(P, root) == alpha:
                deg = 0 if v.tag == "CocompletePoint" else 1
                out[_hbasis(P, F, v.tag, power(alpha, k + 1), deg)] = one
        return out
    if u.tag == "CycleGamma":
        Cbar = u.payload[0]
        if v.tag not in ("HCycleComplete", "LFactPair"):
            return out
        E, w = _root_and_power(Cbar)
        D = v.circuit
        root, k = _root_and_power(D)
        if _canon(P, root) != E:
            return out
        if v.tag == "HCycleComplete" and k == w:
            r = len(E.arrows)
            for i in range(r):
                add_term(out, _vertex(P, F, rot(P, E, i).source), F.sign(i), F)
        elif k > w:
            rest = power(E, k - w)
            deg = len(rest.arrows) if v.tag == "HCycleComplete" else len(rest.arrows) - 1
            e = _hbasis(P, F, v.tag, rest, deg)
            if e is not None:
                out[e] = one
        return out
    return out


# -- exceptional tables ------------------------------------------------------

def _by_label(P: Presentation, elements) -> dict:
    return {e.label(P): e for e in elements}


def exceptional_cap_table(P: Presentation, F: Field, max_power: int = 4) -> list:
    """The stated cap products of the one-loop and two-loop algebras as
    ``(homology label, cohomology label, {homology label: coefficient})``.

    Only entries whose row and column exist and whose answer is defined for
    the given powers are listed."""
    from .cup import is_one_loop

    if is_one_loop(P):
        return _loop_table(P, F, max_power)
    if P.n_vertices == 1 and P.n_arrows == 2 and len(P.relations) == 2 and all(a == b for a, b in P.relations):
        return _two_loop_table(P, F, max_power)
    raise ValueError("not one of the exceptional one-vertex algebras")


def _pw(P: Presentation, arrows: tuple) -> str:
    if not arrows:
        return P.path_str(P.trivial(0))
    return P.path_str(Path(arrows, 0, 0))


def _loop_table(P: Presentation, F: Field, N: int) -> list:
    a = (0,)
    e = _pw(P, ())
    A = lambda k: _pw(P, a * k)
    rows = []
    one = F.one
    if not P.relations:
        # free loop: homology (e,e), (a^m, e), <<a^(m+1)>>; cohomology <a^n>, (a, a^n)
        for n in range(1, N + 1):
            rows.append((f"({e},{e})", f"<{A(n)}>", {f"({A(n)},{e})": one}))
            rows.append((f"({e},{e})", f"({A(1)},{A(n)})", {}))
            for m in range(1, N + 1):
                rows.append((f"({A(m)},{e})", f"<{A(n)}>", {f"({A(m + n)},{e})": one}))
                rows.append((f"({A(m)},{e})", f"({A(1)},{A(n)})", {}))
                rows.append((f"<<{A(m + 1)}>>", f"<{A(n)}>", {f"<<{A(m + n + 1)}>>": one}))
                rows.append((f"<<{A(m + 1)}>>", f"({A(1)},{A(n)})", {f"({A(m + n)},{e})": one}))
        return rows
    char2 = F.characteristic == 2
    # homology: (e,e); <<a^m>> for m odd (all m >= 1 in char 2); (a, a^m) for m even (all m in char 2)
    hc = [m for m in range(1, N + 1) if char2 or m % 2]
    lf = [m for m in range(0, N + 1) if char2 or m % 2 == 0]
    # cohomology: (e,a); (a^n, a) for n odd (all n in char 2); <a^n> for n even (all n in char 2)
    ga = [n for n in range(1, N + 1) if char2 or n % 2]
    cy = [n for n in range(1, N + 1) if char2 or n % 2 == 0]

    def hcyc(k):
        if k == 0:
            return None
        return f"<<{A(k)}>>"

    def lfac(k):
        return f"({A(1)},{A(k)})"

    rows.append((f"({e},{e})", f"({e},{A(1)})", {f"({A(1)},{e})": one}))
    for n in ga:
        rows.append((f"({e},{e})", f"({A(n)},{A(1)})", {}))
    for n in cy:
        rows.append((f"({e},{e})", f"<{A(n)}>", {}))
    if char2:
        for n in ga:
            rows.append((f"({A(1)},{e})", f"({A(n)},{A(1)})", {}))
        for n in cy:
            rows.append((f"({A(1)},{e})", f"<{A(n)}>", {}))
        rows.append((f"({A(1)},{e})", f"({e},{A(1)})", {}))
    for m in hc:
        rows.append((hcyc(m), f"({e},{A(1)})", {lfac(m): one} if char2 else {}))
        for n in ga:
            if n <= m:
                rows.append((hcyc(m), f"({A(n)},{A(1)})", {lfac(m - n): one}))
        for n in cy:
            if n < m:
                rows.append((hcyc(m), f"<{A(n)}>", {hcyc(m - n): one}))
    for m in lf:
        if m == 0:
            continue
        rows.append((lfac(m), f"({e},{A(1)})", {}))
        for n in ga:
            rows.append((lfac(m), f"({A(n)},{A(1)})", {}))
        for n in cy:
            if n <= m:
                rows.append((lfac(m), f"<{A(n)}>", {lfac(m - n): one}))
    return rows


def _two_loop_table(P: Presentation, F: Field, N: int) -> list:
    e = _pw(P, ())
    a, b = 0, 1
    one = F.one
    rows = []

    def ba(k):
        # (ba)^k with a applied first; rotation classes are named by this rotation
        return _pw(P, (a, b) * k)

    char2 = F.characteristic == 2
    for m in range(1, N + 1):
        bp = f"({_pw(P, (a,))},{_pw(P, (a, b) * m + (a,))})"   # (a, a(ba)^m)
        rows.append((f"({e},{e})", f"<{ba(m)}>", {f"({ba(m)},{e})": F(2)}))
        rows.append((f"({e},{e})", bp, {}))
        for n in range(1, N + 1):
            rows.append((f"({ba(n)},{e})", f"<{ba(m)}>", {f"({ba(n + m)},{e})": one}))
            rows.append((f"({ba(n)},{e})", bp, {}))
            rows.append((f"<<{ba(n)}>>", f"<{ba(m)}>", {f"<<{ba(n + m)}>>": one}))
            rows.append((f"<<{ba(n)}>>", bp, {f"({ba(n + m)},{e})": one}))
    for x in (a, b):
        X = lambda k, x=x: _pw(P, (x,) * k)
        xx = f"({X(1)},{X(1)})"
        rows.append((f"({e},{e})", xx, {}))
        for n in range(1, N + 1):
            rows.append((f"({ba(n)},{e})", xx, {}))
            rows.append((f"<<{ba(n)}>>", xx, {f"({ba(n)},{e})": one}))
        # the row (x, s(x)) vanishes against every column
        cols = [f"<{ba(m)}>" for m in range(1, N + 1)]
        cols += [f"({_pw(P, (a,))},{_pw(P, (a, b) * m + (a,))})" for m in range(1, N + 1)]
        cols += [xx] + [f"<{X(m)}>" for m in range(1, N + 1)] + [f"({X(m)},{X(1)})" for m in range(2, N + 1)]
        for col in cols:
            rows.append((f"({X(1)},{e})", col, {}))
        for n in range(1, N + 1):
            # <<x^n>> needs (-1)^(n+1) = 1; (x, x^n) needs (-1)^n = 1
            if char2 or n % 2:
                rows.append((f"<<{X(n)}>>", xx, {f"({X(1)},{X(n - 1)})": one}))
                for m in range(1, n + 1):
                    if char2 or m % 2 == 0:
                        tgt = {f"<<{X(n - m)}>>": one} if n > m else _vertex_label(P, F)
                        rows.append((f"<<{X(n)}>>", f"<{X(m)}>", tgt))
                    if m >= 2 and (char2 or m % 2):
                        rows.append((f"<<{X(n)}>>", f"({X(m)},{X(1)})", {f"({X(1)},{X(n - m)})": one}))
            if char2 or n % 2 == 0:
                for m in range(1, n + 1):
                    if char2 or m % 2 == 0:
                        rows.append((f"({X(1)},{X(n)})", f"<{X(m)}>", {f"({X(1)},{X(n - m)})": one}))
                    if m >= 2 and (char2 or m % 2):
                        rows.append((f"({X(1)},{X(n)})", f"({X(m)},{X(1)})", {}))
    return rows


def _vertex_label(P: Presentation, F: Field) -> dict:
    e = _pw(P, ())
    return {f"({e},{e})": F.one}


def resolve_table(P: Presentation, F: Field, rows, bound: int = 12) -> list:
    """Replace labels by basis elements; rows naming elements absent from the
    bases are dropped.  Returns ``(v, u, expected)`` triples."""
    hom = _by_label(P, [x for m in range(bound + 1) for x in hh_homology_basis(P, m, F, bound)])
    coh = _by_label(P, [x for m in range(bound + 1) for x in hh_basis(P, m, F, bound=bound)])
    out = []
    for vl, ul, exp in rows:
        if vl not in hom or ul not in coh:
            continue
        if any(k not in hom for k in exp):
            continue
        out.append((hom[vl], coh[ul], {hom[k]: c for k, c in exp.items() if c}))
    return out


__all__ = [
    "cap", "cap_class", "cap_pair", "cap_prediction", "exceptional_cap_table", "resolve_table",
]
