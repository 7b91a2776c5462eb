"""Gerstenhaber bracket on cohomology.

Two independent chain-level constructions are provided:

* degree-1 cocycles are derivations of the algebra, and their bracket with
  any cocycle is ``D o f - f o D``, with ``f o D`` evaluated through the
  standard comparison from the bar resolution;
* the homotopy ``phi`` of :mod:`.resolution` gives ``f o_phi g`` in all
  degrees and ``[f, g] = f o_phi g - (-1)^{(p-1)(q-1)} g o_phi f``.

Class-level brackets use the first construction when a degree-1 element is
involved and the second otherwise.
"""

from __future__ import annotations

from ..cohomology import CohomologyBasisElement, CohomologyReducer
from ..combinatorics import gamma_paths
from ..complexes import ParallelPair, _mul
from ..linalg import Field, add_term
from ..presentation import Path, Presentation
from .resolution import phi_homotopy


def deg_c(c: int, pair) -> int:
    """``deg_c(alpha) - deg_c(gamma)`` for a parallel pair ``(gamma, alpha)``."""
    g, a = pair
    return a.arrows.count(c) - g.arrows.count(c)


def euler_bracket(P: Presentation, F: Field, c: int, x: dict) -> dict:
    """``[(c, c), x]``: each pair is scaled by its ``deg_c``."""
    out: dict = {}
    for pair, v in x.items():
        add_term(out, pair, F.mul(F(deg_c(c, pair)), v), F)
    return out


def _path(P: Presentation, arrows: tuple, vertex: int) -> Path:
    if not arrows:
        return P.trivial(vertex)
    return Path(arrows, P.src(arrows[0]), P.tgt(arrows[-1]))


def substitute(P: Presentation, F: Field, beta: Path, c: int, alpha: Path) -> dict:
    """``beta^{c, alpha}``: replace one occurrence of ``c`` by ``alpha``, summed
    over occurrences; products leaving B vanish."""
    out: dict = {}
    ar = beta.arrows
    for i, x in enumerate(ar):
        if x != c:
            continue
        left = _path(P, ar[i + 1:], P.tgt(c))
        right = _path(P, ar[:i], beta.source)
        p = _mul(P, left, alpha)
        if p is not None:
            p = _mul(P, p, right)
        if p is not None:
            add_term(out, p, F.one, F)
    return out


def _eval(f: dict) -> dict:
    """Index a cochain by its Γ-component: ``gamma -> [(alpha, coeff)]``."""
    idx: dict = {}
    for (g, a), v in f.items():
        idx.setdefault(g, []).append((a, v))
    return idx


def _derivation_terms(D: dict) -> list:
    terms = []
    for (g, a), v in D.items():
        if len(g.arrows) != 1:
            raise ValueError("a derivation is a cochain of degree 1")
        terms.append((g.arrows[0], a, v))
    return terms


def derivation_after(P: Presentation, F: Field, D: dict, f: dict) -> dict:
    """``D o f``: apply the derivation to the values of ``f``."""
    out: dict = {}
    for c, alpha, v in _derivation_terms(D):
        for (g, b), w in f.items():
            for p, k in substitute(P, F, b, c, alpha).items():
                add_term(out, ParallelPair(g, p), F.mul(F.mul(v, w), k), F)
    return out


def after_derivation(P: Presentation, F: Field, f: dict, D: dict, n: int) -> dict:
    """``f o D = sum_i f(.., D(x_i), ..)`` for a degree-``n`` cochain ``f``,
    evaluated on Γ-paths through the comparison with the bar resolution."""
    fv = _eval(f)
    R = P.relations
    out: dict = {}
    for c, alpha, v in _derivation_terms(D):
        if not alpha.arrows:
            continue  # normalized cochains vanish on idempotents
        for eta in gamma_paths(P, n):
            g = eta.arrows
            for i, x in enumerate(g):
                if x != c:
                    continue
                if n == 1:
                    # alpha = u h w with h an arrow: u f(h) w
                    for j, h in enumerate(alpha.arrows):
                        for b, w in fv.get(P.arrow(h), []):
                            u = _path(P, alpha.arrows[j + 1:], P.tgt(h))
                            rest = _path(P, alpha.arrows[:j], alpha.source)
                            p = _mul(P, u, b)
                            p = None if p is None else _mul(P, p, rest)
                            if p is not None:
                                add_term(out, ParallelPair(eta, p), F.mul(v, w), F)
                    continue
                if 0 < i < n - 1:
                    if len(alpha.arrows) != 1:
                        continue
                    h = alpha.arrows[0]
                    if (g[i - 1], h) not in R or (h, g[i + 1]) not in R:
                        continue
                    key = _path(P, g[:i] + (h,) + g[i + 1:], eta.source)
                    for b, w in fv.get(key, []):
                        add_term(out, ParallelPair(eta, b), F.mul(v, w), F)
                elif i == 0:
                    # first slot: alpha = h rest, h its last arrow, and h must relate to g[1]
                    h = alpha.arrows[-1]
                    if (h, g[1]) not in R:
                        continue
                    key = _path(P, (h,) + g[1:], P.src(h))
                    rest = _path(P, alpha.arrows[:-1], alpha.source)
                    for b, w in fv.get(key, []):
                        p = _mul(P, b, rest)
                        if p is not None:
                            add_term(out, ParallelPair(eta, p), F.mul(v, w), F)
                else:
                    # last slot: alpha = u h, h its first arrow, and g[-2] must relate to h
                    h = alpha.arrows[0]
                    if (g[-2], h) not in R:
                        continue
                    key = _path(P, g[:-1] + (h,), eta.source)
                    u = _path(P, alpha.arrows[1:], P.tgt(h))
                    for b, w in fv.get(key, []):
                        p = _mul(P, u, b)
                        if p is not None:
                            add_term(out, ParallelPair(eta, p), F.mul(v, w), F)
    return out


def derivation_bracket(P: Presentation, F: Field, D: dict, f: dict, n: int) -> dict:
    """``[D, f] = D o f - f o D`` for a degree-1 cocycle ``D`` and a degree-``n`` cochain ``f``."""
    out = derivation_after(P, F, D, f)
    if n >= 1:
        for k, v in after_derivation(P, F, f, D, n).items():
            add_term(out, k, F.neg(v), F)
    return out


# -- the homotopy construction ------------------------------------------------

def _apply(P: Presentation, F: Field, fv: dict, x: dict) -> dict:
    """Evaluate a cochain on an element of ``R``: ``f(u (x) g (x) v) = u f(g) v``."""
    out: dict = {}
    for (u, g, v), c in x.items():
        for b, w in fv.get(g, []):
            p = _mul(P, u, b)
            p = None if p is None else _mul(P, p, v)
            if p is not None:
                add_term(out, p, F.mul(c, w), F)
    return out


def phi_compose(P: Presentation, F: Field, f: dict, p: int, g: dict, q: int) -> dict:
    """``f o_phi g`` in degree ``p + q - 1``."""
    deg = p + q - 1
    if deg < 0:
        return {}
    fv = _eval(f)
    out: dict = {}
    for eta in gamma_paths(P, deg) if deg > 0 else [P.trivial(v) for v in range(P.n_vertices)]:
        ar = eta.arrows
        n = len(ar)
        for (d, beta), w in g.items():
            k = len(d.arrows)
            for j in range(n - k + 1):
                if ar[j:j + k] != d.arrows:
                    continue
                if k == 0:
                    vtx = P.tgt(ar[j - 1]) if j else eta.source
                    if d.source != vtx:
                        continue
                # eta = eta1 d eta3 with eta3 applied first
                eta3 = _path(P, ar[:j], eta.source)
                eta1 = _path(P, ar[j + k:], d.target)
                t = (P.trivial(eta.target), eta1, beta, eta3, P.trivial(eta.source))
                if not P.in_B(beta):
                    continue
                sign = F.sign(q * len(eta1.arrows))
                for b, c in _apply(P, F, fv, phi_homotopy(P, F, t)).items():
                    add_term(out, ParallelPair(eta, b), F.mul(F.mul(sign, w), c), F)
    return out


def phi_bracket(P: Presentation, F: Field, f: dict, p: int, g: dict, q: int) -> dict:
    out = phi_compose(P, F, f, p, g, q)
    s = F.sign((p - 1) * (q - 1))
    for k, v in phi_compose(P, F, g, q, f, p).items():
        add_term(out, k, F.neg(F.mul(s, v)), F)
    return out


# -- class level --------------------------------------------------------------

def bracket_chain(P: Presentation, F: Field, u: CohomologyBasisElement, v: CohomologyBasisElement) -> dict:
    """A cocycle representing ``[u, v]``."""
    x, y = u.representative, v.representative
    if u.tag == "Fundamental":
        return euler_bracket(P, F, u.payload[0], y)
    if u.degree == 1:
        return derivation_bracket(P, F, x, y, v.degree)
    if v.degree == 1:
        return {k: F.neg(c) for k, c in bracket_chain(P, F, v, u).items()}
    return phi_bracket(P, F, x, u.degree, y, v.degree)


def bracket_class(P: Presentation, F: Field, u: CohomologyBasisElement, v: CohomologyBasisElement,
                  reducer: CohomologyReducer | None = None) -> dict:
    if reducer is None:
        reducer = CohomologyReducer(P, F)
    return reducer.coordinates(bracket_chain(P, F, u, v))


__all__ = [
    "after_derivation", "bracket_chain", "bracket_class", "deg_c", "derivation_after",
    "derivation_bracket", "euler_bracket", "phi_bracket", "phi_compose", "substitute",
]
