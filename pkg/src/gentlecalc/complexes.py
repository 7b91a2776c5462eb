"""The cochain complex on parallel pairs, the chain complex on antiparallel
pairs, and a brute-force homology oracle based on exact elimination.

A parallel pair ``(gamma, alpha)`` has ``gamma`` in Γ and ``alpha`` in B
with the same endpoints; it sits in degree ``len(gamma)`` and has weight
``len(alpha) - len(gamma)``.  An antiparallel pair ``(alpha, gamma)`` has
``alpha`` going back from ``t(gamma)`` to ``s(gamma)``; it sits in degree
``len(gamma)`` and total length ``len(alpha) + len(gamma)``.

Cochains and chains are dicts mapping pairs to field elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import b_between, b_paths, gamma_paths, least_rotation
from .linalg import Echelon, Field, add_term, kernel
from .presentation import Path, Presentation


class ParallelPair(tuple):
    """``(gamma, alpha)``; a plain tuple so it hashes and sorts cheaply."""

    __slots__ = ()

    def __new__(cls, gamma: Path, alpha: Path):
        return tuple.__new__(cls, (gamma, alpha))

    gamma = property(lambda self: self[0])
    alpha = property(lambda self: self[1])
    degree = property(lambda self: len(self[0].arrows))
    weight = property(lambda self: len(self[1].arrows) - len(self[0].arrows))


class AntiparallelPair(tuple):
    """``(alpha, gamma)``."""

    __slots__ = ()

    def __new__(cls, alpha: Path, gamma: Path):
        return tuple.__new__(cls, (alpha, gamma))

    alpha = property(lambda self: self[0])
    gamma = property(lambda self: self[1])
    degree = property(lambda self: len(self[1].arrows))
    length = property(lambda self: len(self[0].arrows) + len(self[1].arrows))


# -- cochain complex --------------------------------------------------------

def parallel_pairs(P: Presentation, m: int, w: int) -> list:
    """Basis of the degree ``m``, weight ``w`` part of the cochain complex."""
    n = m + w
    if n < 0:
        return []
    cache = P._cache.setdefault("par", {})
    key = (m, w)
    if key not in cache:
        out = []
        for g in gamma_paths(P, m):
            for a in b_between(P, g.source, g.target, n):
                out.append(ParallelPair(g, a))
        out.sort()
        cache[key] = out
    return cache[key]


def cochain_d_pair(P: Presentation, F: Field, pair) -> dict:
    """``d(gamma, alpha) = sum_b (b gamma, b alpha) - (-1)^m sum_a (gamma a, alpha a)``."""
    g, a = pair
    m = len(g.arrows)
    out: dict = {}
    q = P.quiver
    R = P.relations
    one = F.one
    # arrows b appended after both paths
    for b in q.out_arrows[g.target]:
        if m and (g.arrows[-1], b) not in R:
            continue
        if a.arrows and (a.arrows[-1], b) in R:
            continue
        tb = q.target[b]
        add_term(out, ParallelPair(Path(g.arrows + (b,), g.source, tb),
                                   Path(a.arrows + (b,), a.source, tb)), one, F)
    s = F.sign(m + 1)
    for c in q.in_arrows[g.source]:
        if m and (c, g.arrows[0]) not in R:
            continue
        if a.arrows and (c, a.arrows[0]) in R:
            continue
        sc = q.source[c]
        add_term(out, ParallelPair(Path((c,) + g.arrows, sc, g.target),
                                   Path((c,) + a.arrows, sc, a.target)), s, F)
    return out


def cochain_d(P: Presentation, F: Field, u: dict, m: int | None = None) -> dict:
    out: dict = {}
    for pair, c in u.items():
        if m is not None and len(pair[0].arrows) != m:
            raise ValueError("cochain is not homogeneous of the stated degree")
        for k, v in cochain_d_pair(P, F, pair).items():
            add_term(out, k, F.mul(c, v), F)
    return out


# -- chain complex ----------------------------------------------------------

def antiparallel_pairs(P: Presentation, m: int, length: int) -> list:
    """Basis of the degree ``m`` part of the chain complex with ``|alpha| + m == length``."""
    n = length - m
    if n < 0:
        return []
    cache = P._cache.setdefault("anti", {})
    key = (m, length)
    if key not in cache:
        out = []
        for g in gamma_paths(P, m):
            for a in b_between(P, g.target, g.source, n):
                out.append(AntiparallelPair(a, g))
        out.sort()
        cache[key] = out
    return cache[key]


def chain_d_pair(P: Presentation, F: Field, pair) -> dict:
    """``d(alpha, gamma) = (alpha l1, l2) + (-1)^m (r2 alpha, r1)`` where ``l1`` is
    the last arrow of gamma and ``r2`` the first; terms outside B vanish."""
    a, g = pair
    m = len(g.arrows)
    out: dict = {}
    if m == 0:
        return out
    R = P.relations
    q = P.quiver
    last, first = g.arrows[-1], g.arrows[0]
    # (alpha * l1, l2): l1 first, then alpha
    if not a.arrows or (last, a.arrows[0]) not in R:
        new_a = Path((last,) + a.arrows, q.source[last], a.target)
        rest = g.arrows[:-1]
        new_g = Path(rest, g.source, q.source[last])
        add_term(out, AntiparallelPair(new_a, new_g), F.one, F)
    # (r2 * alpha, r1): alpha first, then r2
    if not a.arrows or (a.arrows[-1], first) not in R:
        new_a = Path(a.arrows + (first,), a.source, q.target[first])
        rest = g.arrows[1:]
        new_g = Path(rest, q.target[first], g.target)
        add_term(out, AntiparallelPair(new_a, new_g), F.sign(m), F)
    return out


def chain_d(P: Presentation, F: Field, u: dict, m: int | None = None) -> dict:
    out: dict = {}
    for pair, c in u.items():
        if m is not None and len(pair[1].arrows) != m:
            raise ValueError("chain is not homogeneous of the stated degree")
        for k, v in chain_d_pair(P, F, pair).items():
            add_term(out, k, F.mul(c, v), F)
    return out


def cycle_key(P: Presentation, pair) -> tuple:
    """The summand of an antiparallel pair: the rotation class of the closed
    path ``alpha gamma``, or the vertex when both paths are trivial."""
    a, g = pair
    ar = g.arrows + a.arrows
    if not ar:
        return ("vertex", g.source)
    return ("circuit", least_rotation(ar))


def circuit_decompose(P: Presentation, max_length: int, max_degree: int) -> dict:
    """Group the chain basis by summand: key -> {degree: [pairs]}."""
    out: dict = {}
    for L in range(max_length + 1):
        for m in range(min(L, max_degree) + 1):
            for pair in antiparallel_pairs(P, m, L):
                out.setdefault(cycle_key(P, pair), {}).setdefault(m, []).append(pair)
    return dict(sorted(out.items()))


# -- oracle -----------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    degree: int
    dimension: int
    basis: tuple           # representative (co)cycles
    slices: tuple          # (grading value, dimension) for nonzero slices
    certified: bool


def _slice_homology(F: Field, here, d_here, below_pairs, d_below, want_basis: bool):
    """Homology at ``here`` of ``below -> here -> above``.

    ``d_here(pair)`` maps out of ``here``; ``d_below(pair)`` maps into ``here``."""
    image = Echelon(F)
    for p in below_pairs:
        image.add(d_below(p))
    cols = [(p, d_here(p)) for p in here]
    if not want_basis:
        E = Echelon(F)
        r = 0
        for _, v in cols:
            if E.add(v) is None:
                r += 1
        return len(here) - r - len(image), ()
    ker = kernel(cols, F)
    basis = []
    for z in ker:
        rz = image.reduce(z)
        if rz:
            image.add(z)
            basis.append(z)
    return len(basis), tuple(basis)


def _weights(P: Presentation, m: int, max_weight: int | None) -> range:
    from .combinatorics import max_b_length
    mb = max_b_length(P)
    if mb is None:
        if max_weight is None:
            raise ValueError("infinite-dimensional algebra: a weight bound is required")
        return range(-m, max_weight + 1)
    top = mb - m if max_weight is None else min(mb - m, max_weight)
    return range(-m, top + 1)


def cohomology_oracle(P: Presentation, F: Field, m: int, weights=None,
                      max_weight: int | None = None, want_basis: bool = False) -> OracleResult:
    """Dimension of the degree-``m`` cohomology of the cochain complex.

    Each weight slice is a finite complex, so every slice answer is exact;
    for infinite-dimensional algebras only weights up to ``max_weight`` are
    summed and the result is marked uncertified."""
    from .combinatorics import max_b_length
    certified = max_b_length(P) is not None
    if weights is None:
        weights = _weights(P, m, max_weight)
    total = 0
    basis: list = []
    slices = []
    for w in weights:
        here = parallel_pairs(P, m, w)
        if not here:
            continue
        below = parallel_pairs(P, m - 1, w) if m > 0 else []
        dim, bas = _slice_homology(
            F, here, lambda p: cochain_d_pair(P, F, p), below,
            lambda p: cochain_d_pair(P, F, p), want_basis)
        if dim:
            slices.append((w, dim))
        total += dim
        basis.extend(bas)
    return OracleResult(m, total, tuple(basis), tuple(slices), certified)


def _lengths(P: Presentation, m: int, max_length: int | None) -> range:
    from .combinatorics import max_b_length
    mb = max_b_length(P)
    if mb is None:
        if max_length is None:
            raise ValueError("infinite-dimensional algebra: a length bound is required")
        return range(m, max_length + 1)
    top = m + mb if max_length is None else min(m + mb, max_length)
    return range(m, top + 1)


def homology_oracle(P: Presentation, F: Field, m: int, lengths=None,
                    max_length: int | None = None, want_basis: bool = False) -> OracleResult:
    """Dimension of the degree-``m`` homology of the chain complex, summed
    over total-length slices."""
    from .combinatorics import max_b_length
    certified = max_b_length(P) is not None
    if lengths is None:
        lengths = _lengths(P, m, max_length)
    total = 0
    basis: list = []
    slices = []
    for L in lengths:
        here = antiparallel_pairs(P, m, L)
        if not here:
            continue
        above = antiparallel_pairs(P, m + 1, L)
        dim, bas = _slice_homology(
            F, here, lambda p: chain_d_pair(P, F, p), above,
            lambda p: chain_d_pair(P, F, p), want_basis)
        if dim:
            slices.append((L, dim))
        total += dim
        basis.extend(bas)
    return OracleResult(m, total, tuple(basis), tuple(slices), certified)


def matrix_triplets(P: Presentation, F: Field, m: int, w: int, kind: str = "cochain") -> list:
    """Differential of one slice as ``(row, col, value)`` strings for export."""
    if kind == "cochain":
        src = parallel_pairs(P, m, w)
        dst = parallel_pairs(P, m + 1, w)
        d = cochain_d_pair
    else:
        src = antiparallel_pairs(P, m, w)
        dst = antiparallel_pairs(P, m - 1, w)
        d = chain_d_pair
    index = {p: i for i, p in enumerate(dst)}
    out = []
    for j, p in enumerate(src):
        for k, v in sorted(d(P, F, p).items()):
            out.append((index[k], j, F.to_str(v)))
    return sorted(out)


# -- normalized Hochschild complex (cyclic homology oracle) --------------

def hochschild_chains(P: Presentation, p: int, length: int) -> list:
    """Normalized chains ``a0 | a1 | ... | ap`` of total length ``length``:
    ``a0`` in B, ``ai`` in B of positive length, composable around a cycle
    (``s(ai) = t(a(i+1))`` and ``s(ap) = t(a0)``)."""
    cache = P._cache.setdefault("hoch", {})
    key = (p, length)
    if key in cache:
        return cache[key]
    out = []

    def extend(prefix, remaining, slots):
        # prefix = (a0, a1, ..., ak); next factor ak+1 must end at s(ak)
        if slots == 0:
            if remaining == 0 and prefix[-1].source == prefix[0].target:
                out.append(tuple(prefix))
            return
        need = prefix[-1].source
        for n in range(1, remaining - (slots - 1) + 1):
            for q in b_paths(P, n):
                if q.target == need:
                    extend(prefix + [q], remaining - n, slots - 1)

    for n0 in range(length - p + 1):
        for a0 in b_paths(P, n0):
            extend([a0], length - n0, p)
    out.sort()
    cache[key] = out
    return out


def _mul(P: Presentation, x: Path, y: Path) -> Path | None:
    """Product ``x*y`` in the algebra (``y`` first); ``None`` when zero."""
    if y.target != x.source:
        return None
    if x.arrows and y.arrows and (y.arrows[-1], x.arrows[0]) in P.relations:
        return None
    return Path(y.arrows + x.arrows, y.source, x.target)


def hochschild_b(P: Presentation, F: Field, chain: tuple) -> dict:
    p = len(chain) - 1
    out: dict = {}
    if p == 0:
        return out
    for i in range(p):
        prod = _mul(P, chain[i], chain[i + 1])
        if prod is not None and (i == 0 or prod.arrows):
            add_term(out, chain[:i] + (prod,) + chain[i + 2:], F.sign(i), F)
    prod = _mul(P, chain[p], chain[0])
    if prod is not None:
        add_term(out, (prod,) + chain[1:p], F.sign(p), F)
    return out


def connes_B_chain(P: Presentation, F: Field, chain: tuple) -> dict:
    """Normalized Connes operator ``sum_i (-1)^{pi} 1|ai|...|ap|a0|...|a(i-1)``."""
    p = len(chain) - 1
    out: dict = {}
    if not chain[0].arrows:
        return out
    for i in range(p + 1):
        rest = chain[i:] + chain[:i]
        e = P.trivial(rest[0].target)
        add_term(out, (e,) + rest, F.sign(p * i), F)
    return out


def cyclic_oracle(P: Presentation, F: Field, m: int, max_length: int) -> int:
    """Dimension of the degree-``m`` homology of the total complex of the
    (b, B) bicomplex on normalized chains, summed over lengths up to ``max_length``."""
    total = 0
    for L in range(max_length + 1):
        def tot(n):
            return [(q, c) for q in range(n, -1, -2) for c in hochschild_chains(P, q, L)]

        def D(elem):
            q, c = elem
            out: dict = {}
            for k, v in hochschild_b(P, F, c).items():
                add_term(out, (q - 1, k), v, F)
            for k, v in connes_B_chain(P, F, c).items():
                add_term(out, (q + 1, k), v, F)
            return out

        def D_into(n):
            # differential Tot_n -> Tot_(n-1); the B-part leaving column n is dropped
            def f(elem):
                return {k: v for k, v in D(elem).items() if k[0] <= n - 1}
            return f

        here = tot(m)
        if not here:
            continue
        above = tot(m + 1)
        dim, _ = _slice_homology(F, here, D_into(m), above, D_into(m + 1), False)
        total += dim
    return total
