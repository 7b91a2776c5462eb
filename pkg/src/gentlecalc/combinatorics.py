"""Path sets, cycles, circuits, representative systems and spanning trees."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .linalg import Field
from .presentation import Path, Presentation


# -- path enumeration -------------------------------------------------------

def _extend(P: Presentation, n: int, key: str, succ) -> tuple:
    cache = P._cache.setdefault(key, {})
    if n in cache:
        return cache[n]
    if n == 0:
        out = tuple(P.trivial(v) for v in range(P.n_vertices))
    elif n == 1:
        out = tuple(P.arrow(a) for a in range(P.n_arrows))
    else:
        prev = _extend(P, n - 1, key, succ)
        tgt = P.quiver.target
        out = tuple(Path(p.arrows + (b,), p.source, tgt[b]) for p in prev for b in succ[p.last])
    cache[n] = out
    return out


def b_paths(P: Presentation, n: int) -> tuple:
    """Paths of length ``n`` with no length-2 subpath in the relation set."""
    return _extend(P, n, "B", P.free_next)


def gamma_paths(P: Presentation, n: int) -> tuple:
    """Paths of length ``n`` all of whose length-2 subpaths are relations."""
    return _extend(P, n, "Gamma", P.rel_next)


def _index(P: Presentation, n: int, key: str, paths) -> dict:
    cache = P._cache.setdefault(key + "_idx", {})
    if n not in cache:
        idx: dict = {}
        for p in paths(P, n):
            idx.setdefault((p.source, p.target), []).append(p)
        cache[n] = idx
    return cache[n]


def b_between(P: Presentation, s: int, t: int, n: int) -> list:
    """Paths in B of length ``n`` from ``s`` to ``t``."""
    return _index(P, n, "B", b_paths).get((s, t), [])


def gamma_between(P: Presentation, s: int, t: int, n: int) -> list:
    return _index(P, n, "Gamma", gamma_paths).get((s, t), [])


def is_finite_dimensional(P: Presentation) -> bool:
    """True when B is finite, i.e. there is no cocomplete cycle."""
    return not cocomplete_primitive_walks(P)


def max_b_length(P: Presentation) -> int | None:
    """Length of the longest path in B, or ``None`` when B is infinite."""
    if not is_finite_dimensional(P):
        return None
    n = 0
    while b_paths(P, n + 1):
        n += 1
    return n


def max_gamma_length(P: Presentation) -> int | None:
    """Length of the longest path in Γ, or ``None`` when Γ is infinite."""
    if complete_primitive_walks(P):
        return None
    n = 0
    while gamma_paths(P, n + 1):
        n += 1
    return n


@dataclass(frozen=True)
class PathSets:
    B_by_length: dict
    Gamma_by_length: dict
    truncation_bound: int
    B_complete: bool        # every path of B has length at most the bound
    Gamma_complete: bool


def enumerate_sets(P: Presentation, bound: int) -> PathSets:
    if bound < 2:
        raise ValueError("bound must be at least 2")
    B = {n: b_paths(P, n) for n in range(bound + 1)}
    G = {n: gamma_paths(P, n) for n in range(bound + 1)}
    return PathSets(B, G, bound, not b_paths(P, bound + 1), not gamma_paths(P, bound + 1))


# -- cycles -----------------------------------------------------------------

def rot(P: Presentation, c: Path, i: int = 1) -> Path:
    """Rotate a cycle ``i`` steps: ``c_m...c_1`` becomes ``c_{m-1}...c_1 c_m``."""
    if not c.is_cycle:
        raise ValueError("rotation needs a cycle of positive length")
    m = len(c.arrows)
    i %= m
    if i == 0:
        return c
    ar = c.arrows[m - i:] + c.arrows[:m - i]
    v = P.quiver.source[ar[0]]
    return Path(ar, v, v)


def period(c: Path) -> int:
    """Least ``l > 0`` with ``rot^l(c) == c``."""
    ar = c.arrows
    m = len(ar)
    for r in range(1, m + 1):
        if m % r == 0 and ar[r:] + ar[:r] == ar:
            return r
    return m


def primitive_root(c: Path) -> Path:
    r = period(c)
    ar = c.arrows[:r]
    return Path(ar, c.source, c.source)


def power(c: Path, k: int) -> Path:
    if k == 0:
        return Path((), c.source, c.source)
    return Path(c.arrows * k, c.source, c.target)


def least_rotation(arrows: tuple) -> tuple:
    m = len(arrows)
    return min(arrows[i:] + arrows[:i] for i in range(m))


def canonical_cycle(P: Presentation, c: Path) -> Path:
    """The least rotation (by arrow ids in traversal order) of the primitive
    root, raised to the power of ``c``."""
    r = period(c)
    root = least_rotation(c.arrows[:r])
    ar = root * (len(c.arrows) // r)
    v = P.quiver.source[ar[0]]
    return Path(ar, v, v)


def is_complete(P: Presentation, c: Path) -> bool:
    """``c^2`` lies in Γ."""
    return c.is_cycle and P.in_Gamma(c) and (c.last, c.first) in P.relations


def is_cocomplete(P: Presentation, c: Path) -> bool:
    """``c^2`` lies in B."""
    return c.is_cycle and P.in_B(c) and (c.last, c.first) not in P.relations


def _closed_walks(succ, m: int, n_arrows: int) -> list:
    """Least-rotation representatives of closed walks of length ``m`` in the
    graph ``arrow -> succ[arrow]``."""
    out = []
    for s in range(n_arrows):
        stack = [(s,)]
        while stack:
            w = stack.pop()
            if len(w) == m:
                if s in succ[w[-1]] and least_rotation(w) == w:
                    out.append(w)
                continue
            for b in succ[w[-1]]:
                if b >= s:
                    stack.append(w + (b,))
    out.sort()
    return out


def _walks(P: Presentation, key: str, succ, m: int) -> list:
    cache = P._cache.setdefault(key, {})
    if m not in cache:
        cache[m] = _closed_walks(succ, m, P.n_arrows)
    return cache[m]


def _primitive_walks(P: Presentation, key: str, succ) -> list:
    """Primitive cyclic walks of length at most the number of arrows.

    When every arrow has at most one successor (the gentle case) these are
    all the primitive ones."""
    cache = P._cache.setdefault("prim_" + key, None)
    if cache is not None:
        return cache
    out = []
    for m in range(1, P.n_arrows + 1):
        for w in _walks(P, key, succ, m):
            if period(Path(w, 0, 0)) == m:
                out.append(w)
    P._cache["prim_" + key] = out
    return out


def complete_primitive_walks(P: Presentation) -> list:
    return _primitive_walks(P, "walks_G", P.rel_next)


def cocomplete_primitive_walks(P: Presentation) -> list:
    return _primitive_walks(P, "walks_B", P.free_next)


@dataclass(frozen=True, order=True)
class Circuit:
    """A rotation class of cycles, stored through its chosen representative."""

    length: int
    rep: Path
    period: int = field(compare=False)
    root: Path = field(compare=False)
    kind: str = field(compare=False)

    @property
    def power(self) -> int:
        return self.length // self.period


def make_circuit(P: Presentation, c: Path) -> Circuit:
    rep = canonical_cycle(P, c)
    kind = "complete" if is_complete(P, rep) else "cocomplete" if is_cocomplete(P, rep) else "neither"
    r = period(rep)
    return Circuit(len(rep.arrows), rep, r, primitive_root(rep), kind)


def _as_cycle(P: Presentation, w: tuple) -> Path:
    v = P.quiver.source[w[0]]
    return Path(w, v, v)


def complete_circuits(P: Presentation, m: int) -> list:
    """Complete circuits of length ``m`` (any quadratic monomial presentation)."""
    return [make_circuit(P, _as_cycle(P, w)) for w in _walks(P, "walks_G", P.rel_next, m)]


def cocomplete_circuits(P: Presentation, m: int) -> list:
    return [make_circuit(P, _as_cycle(P, w)) for w in _walks(P, "walks_B", P.free_next, m)]


def all_circuits(P: Presentation, m: int) -> list:
    succ = tuple(P.quiver.out_arrows[P.quiver.target[a]] for a in range(P.n_arrows))
    return [make_circuit(P, _as_cycle(P, w)) for w in _walks(P, "walks_all", succ, m)]


def circuits(P: Presentation, bound: int, kind: str = "all") -> list:
    """Circuits of length at most ``bound``, ordered by (length, representative)."""
    out = []
    for m in range(1, bound + 1):
        if kind == "complete":
            out.extend(complete_circuits(P, m))
        elif kind == "cocomplete":
            out.extend(cocomplete_circuits(P, m))
        elif kind in ("all", "neither"):
            cs = all_circuits(P, m)
            out.extend(c for c in cs if kind == "all" or c.kind == "neither")
        else:
            raise ValueError(f"unknown circuit kind {kind!r}")
    return sorted(out)


# -- representative systems -------------------------------------------------

def crepprim_gamma_circ(P: Presentation) -> list:
    """Primitive complete cycles, one chosen representative per circuit."""
    return [_as_cycle(P, w) for w in complete_primitive_walks(P)]


def crepprim_B(P: Presentation) -> list:
    """Primitive cocomplete cycles, one chosen representative per circuit."""
    return [_as_cycle(P, w) for w in cocomplete_primitive_walks(P)]


def crep_gamma_circ(P: Presentation, m: int) -> list:
    """Chosen representatives of all complete circuits of length ``m``."""
    return [c.rep for c in complete_circuits(P, m)]


def crep_gamma(P: Presentation, F: Field, m: int) -> list:
    """Complete representatives of length ``m`` that carry a cocycle: ``m``
    even or characteristic 2."""
    if m % 2 and F.characteristic != 2:
        return []
    return crep_gamma_circ(P, m)


def crep_B(P: Presentation, m: int) -> list:
    return [c.rep for c in cocomplete_circuits(P, m)]


def crepprim_gamma(P: Presentation, F: Field) -> list:
    """Primitive even-length complete representatives plus squares of odd
    ones; in characteristic 2 simply the primitive representatives."""
    out = []
    for c in crepprim_gamma_circ(P):
        if F.characteristic == 2 or len(c.arrows) % 2 == 0:
            out.append(c)
        else:
            out.append(power(c, 2))
    return out


@dataclass(frozen=True)
class RepSystem:
    crep_B: tuple
    crep_Gamma_circ: tuple
    crep_Gamma: tuple
    crepprim_B: tuple
    crepprim_Gamma: tuple
    bound: int


def rep_system(P: Presentation, F: Field, bound: int) -> RepSystem:
    cb = tuple(c for m in range(1, bound + 1) for c in crep_B(P, m))
    cgc = tuple(c for m in range(1, bound + 1) for c in crep_gamma_circ(P, m))
    cg = tuple(c for m in range(1, bound + 1) for c in crep_gamma(P, F, m))
    return RepSystem(cb, cgc, cg, tuple(crepprim_B(P)), tuple(crepprim_gamma(P, F)), bound)


# -- maximal paths ----------------------------------------------------------

def _maximal(P: Presentation, succ, pred, bound: int) -> list:
    out = []
    tgt = P.quiver.target
    for a in range(P.n_arrows):
        if pred[a]:
            continue
        stack = [P.arrow(a)]
        while stack:
            p = stack.pop()
            nxt = succ[p.last]
            if not nxt:
                out.append(p)
            elif len(p.arrows) < bound:
                for b in nxt:
                    stack.append(Path(p.arrows + (b,), p.source, tgt[b]))
    return sorted(out)


def b_maximal_paths(P: Presentation, bound: int | None = None) -> list:
    """Paths in B of positive length that are not proper subpaths of another
    path in B."""
    key = ("bmax", bound)
    if key not in P._cache:
        P._cache[key] = _maximal(P, P.free_next, P.free_prev, bound or 4 * P.n_arrows + 4)
    return P._cache[key]


def gamma_maximal_paths(P: Presentation, bound: int | None = None) -> list:
    key = ("gmax", bound)
    if key not in P._cache:
        P._cache[key] = _maximal(P, P.rel_next, P.rel_prev, bound or 4 * P.n_arrows + 4)
    return P._cache[key]


@dataclass(frozen=True)
class MaximalPaths:
    b_maximal: tuple
    gamma_maximal: tuple
    both: tuple   # arrows from a source to a sink, maximal in both senses


def maximal_paths(P: Presentation, bound: int | None = None) -> MaximalPaths:
    bm = b_maximal_paths(P, bound)
    gm = gamma_maximal_paths(P, bound)
    both = tuple(p for p in bm if len(p.arrows) == 1 and p in gm)
    return MaximalPaths(tuple(bm), tuple(gm), both)


# -- spanning trees ---------------------------------------------------------

def spanning_tree(P: Presentation) -> frozenset:
    """Breadth-first spanning tree from vertex 0, scanning incident arrows by id."""
    q = P.quiver
    seen = {0}
    order = [0]
    tree = set()
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for a in sorted(q.out_arrows[v] + q.in_arrows[v]):
            w = q.target[a] if q.source[a] == v else q.source[a]
            if w not in seen:
                seen.add(w)
                order.append(w)
                tree.add(a)
    return frozenset(tree)


def is_spanning_tree(P: Presentation, arrows) -> bool:
    q = P.quiver
    arrows = list(arrows)
    if len(arrows) != q.n_vertices - 1:
        return False
    parent = list(range(q.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in arrows:
        x, y = find(q.source[a]), find(q.target[a])
        if x == y:
            return False
        parent[x] = y
    return True


def all_spanning_trees(P: Presentation):
    for t in combinations(range(P.n_arrows), P.n_vertices - 1):
        if is_spanning_tree(P, t):
            yield frozenset(t)


def satisfies_star(P: Presentation, F: Field, tree) -> bool:
    """Every primitive representative (complete and cocomplete) passes through
    exactly one arrow outside the tree."""
    comp = set(range(P.n_arrows)) - set(tree)
    for c in list(crepprim_gamma(P, F)) + list(crepprim_B(P)):
        if len(comp.intersection(c.arrows)) != 1:
            return False
    return True


def star_check(P: Presentation, F: Field, cap: int = 16):
    """Whether some spanning tree satisfies the one-complement-arrow condition.

    Returns ``(answer, witness)``; ``answer`` is ``None`` when the number of
    arrows exceeds ``cap`` and the search is skipped."""
    if P.n_arrows > cap:
        return None, None
    default = spanning_tree(P)
    if satisfies_star(P, F, default):
        return True, default
    for t in all_spanning_trees(P):
        if satisfies_star(P, F, t):
            return True, t
    return False, None


def parse_tree(P: Presentation, names) -> frozenset:
    tree = frozenset(P.arrow_id(n) for n in names)
    if not is_spanning_tree(P, tree):
        raise ValueError("the given arrows do not form a spanning tree")
    return tree


def deg_arrow(c: int, p: Path) -> int:
    """Number of occurrences of arrow ``c`` in ``p``."""
    return p.arrows.count(c)
