"""The two-sided Bardzell resolution ``R`` of a quadratic monomial algebra,
the complex ``R (x)_A R`` and an explicit homotopy ``phi`` with
``mu (x) id - id (x) mu = phi d + d phi``.

An elementary tensor ``u (x) g (x) v`` of ``R`` is the triple ``(u, g, v)``
with ``u, v`` in B and ``g`` in Γ; ``v`` is applied first.  An elementary
tensor ``(u (x) a (x) b) (x)_A (1 (x) c (x) v)`` of ``R (x)_A R`` is the
5-tuple ``(u, a, b, c, v)``.
"""

from __future__ import annotations

from ..complexes import _mul
from ..linalg import Field, add_term
from ..presentation import Path, Presentation


def _sub(P: Presentation, p: Path, i: int, j: int) -> Path:
    """Arrows ``i..j-1`` of ``p`` in traversal order."""
    ar = p.arrows[i:j]
    if not ar:
        v = p.source if i == 0 else P.tgt(p.arrows[i - 1])
        return P.trivial(v)
    return Path(ar, P.src(ar[0]), P.tgt(ar[-1]))


def _put(out: dict, key, coeff, F: Field) -> None:
    if key is not None and all(x is not None for x in key):
        add_term(out, key, coeff, F)


def d_R_term(P: Presentation, F: Field, t: tuple) -> dict:
    """``d(u (x) g (x) v) = u g_m (x) g_(m-1)..g_1 (x) v + (-1)^m u (x) g_m..g_2 (x) g_1 v``."""
    u, g, v = t
    m = len(g.arrows)
    out: dict = {}
    if m == 0:
        return out
    _put(out, (_mul(P, u, _sub(P, g, m - 1, m)), _sub(P, g, 0, m - 1), v), F.one, F)
    _put(out, (u, _sub(P, g, 1, m), _mul(P, _sub(P, g, 0, 1), v)), F.sign(m), F)
    return out


def d_RR_term(P: Presentation, F: Field, t: tuple) -> dict:
    """Differential of ``R (x)_A R`` with the Koszul sign on the second factor."""
    u, a, b, c, v = t
    m, n = len(a.arrows), len(c.arrows)
    out: dict = {}
    if m:
        _put(out, (_mul(P, u, _sub(P, a, m - 1, m)), _sub(P, a, 0, m - 1), b, c, v), F.one, F)
        _put(out, (u, _sub(P, a, 1, m), _mul(P, _sub(P, a, 0, 1), b), c, v), F.sign(m), F)
    if n:
        _put(out, (u, a, _mul(P, b, _sub(P, c, n - 1, n)), _sub(P, c, 0, n - 1), v), F.sign(m), F)
        _put(out, (u, a, b, _sub(P, c, 1, n), _mul(P, _sub(P, c, 0, 1), v)), F.sign(m + n), F)
    return out


def mu_difference(P: Presentation, F: Field, t: tuple) -> dict:
    """``(mu (x) id - id (x) mu)`` on an elementary tensor."""
    u, a, b, c, v = t
    out: dict = {}
    if not a.arrows:
        _put(out, (_mul(P, u, b), c, v), F.one, F)
    if not c.arrows:
        _put(out, (u, a, _mul(P, b, v)), F.neg(F.one), F)
    return out


def phi_homotopy(P: Presentation, F: Field, t: tuple) -> dict:
    """The homotopy ``phi: R (x)_A R -> R[-1]`` on an elementary tensor."""
    u, a, b, c, v = t
    _check_tensor(P, t)
    m, n, r = len(a.arrows), len(c.arrows), len(b.arrows)
    R = P.relations
    out: dict = {}
    if m == 0 and n == 0:
        for i in range(r):
            # b_(i+1) in the 1-based notation is b.arrows[i]
            left = _mul(P, u, _sub(P, b, i + 1, r))
            right = _mul(P, _sub(P, b, 0, i), v)
            _put(out, (left, _sub(P, b, i, i + 1), right), F.one, F)
        return out
    if r == 0:
        return out
    a1_br = m > 0 and (b.arrows[-1], a.arrows[0]) in R
    b1_cn = n > 0 and (c.arrows[-1], b.arrows[0]) in R
    if m > 0 and n == 0 and a1_br:
        g = Path((b.arrows[-1],) + a.arrows, P.src(b.arrows[-1]), a.target)
        _put(out, (u, g, _mul(P, _sub(P, b, 0, r - 1), v)), F.sign(m), F)
    elif m == 0 and n > 0 and b1_cn:
        g = Path(c.arrows + (b.arrows[0],), c.source, P.tgt(b.arrows[0]))
        _put(out, (_mul(P, u, _sub(P, b, 1, r)), g, v), F.one, F)
    elif m > 0 and n > 0 and r == 1 and a1_br and b1_cn:
        g = Path(c.arrows + b.arrows + a.arrows, c.source, a.target)
        _put(out, (u, g, v), F.sign(m), F)
    return out


def _check_tensor(P: Presentation, t: tuple) -> None:
    if len(t) != 5:
        raise ValueError("an elementary tensor of R (x)_A R has five components")
    u, a, b, c, v = t
    if not (v.target == c.source and c.target == b.source and b.target == a.source
            and a.target == u.source):
        raise ValueError("tensor components are not composable")
    if not (P.in_B(u) and P.in_B(b) and P.in_B(v) and P.in_Gamma(a) and P.in_Gamma(c)):
        raise ValueError("tensor components are not in B and Γ as required")


def _linear(fn, P: Presentation, F: Field, x: dict) -> dict:
    out: dict = {}
    for t, c in x.items():
        for k, v in fn(P, F, t).items():
            add_term(out, k, F.mul(c, v), F)
    return out


def d_R(P: Presentation, F: Field, x: dict) -> dict:
    return _linear(d_R_term, P, F, x)


def d_RR(P: Presentation, F: Field, x: dict) -> dict:
    return _linear(d_RR_term, P, F, x)


def phi(P: Presentation, F: Field, x: dict) -> dict:
    return _linear(phi_homotopy, P, F, x)


def homotopy_defect(P: Presentation, F: Field, t: tuple) -> dict:
    """``F(t) - phi(d t) - d(phi t)``; zero exactly when the identity holds at ``t``."""
    lhs = mu_difference(P, F, t)
    rhs = phi(P, F, d_RR_term(P, F, t))
    for k, v in d_R(P, F, phi_homotopy(P, F, t)).items():
        add_term(rhs, k, v, F)
    for k, v in rhs.items():
        add_term(lhs, k, F.neg(v), F)
    return lhs


def elementary_tensors(P: Presentation, max_degree: int, max_b: int):
    """All elementary tensors ``(u, a, b, c, v)`` with ``|a| + |c| <= max_degree``
    and each B-component of length at most ``max_b``."""
    from ..combinatorics import b_paths, gamma_paths

    Bs = [p for n in range(max_b + 1) for p in b_paths(P, n)]
    by_src: dict = {}
    by_tgt: dict = {}
    for p in Bs:
        by_src.setdefault(p.source, []).append(p)
        by_tgt.setdefault(p.target, []).append(p)
    for deg in range(max_degree + 1):
        for m in range(deg + 1):
            for a in gamma_paths(P, m):
                for c in gamma_paths(P, deg - m):
                    for b in by_src.get(c.target, []):
                        if b.target != a.source:
                            continue
                        for u in by_src.get(a.target, []):
                            for v in by_tgt.get(c.source, []):
                                yield (u, a, b, c, v)


__all__ = [
    "d_R", "d_RR", "d_RR_term", "d_R_term", "elementary_tensors", "homotopy_defect",
    "mu_difference", "phi", "phi_homotopy",
]
