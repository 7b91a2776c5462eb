"""Quivers with quadratic monomial relations, path arithmetic and parsing.

Paths are composed right to left: the path ``b*a`` first traverses ``a``
and then ``b``.  Internally a :class:`Path` stores its arrows in traversal
order, so ``b*a`` is stored as ``(a, b)``.  A relation is stored as the pair
``(first, second)`` of arrow ids.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

import yaml


class PresentationError(ValueError):
    """Raised for malformed input; carries an optional line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class Path(NamedTuple):
    """A path in a quiver.  ``arrows`` is in traversal order (first applied
    first); trivial paths have no arrows and ``source == target``."""

    arrows: tuple
    source: int
    target: int

    def __len__(self) -> int:  # type: ignore[override]
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_cycle(self) -> bool:
        return bool(self.arrows) and self.source == self.target

    @property
    def first(self) -> int:
        """The arrow applied first (the rightmost one in written form)."""
        return self.arrows[0]

    @property
    def last(self) -> int:
        """The arrow applied last (the leftmost one in written form)."""
        return self.arrows[-1]


class Quiver:
    """Finite quiver with dense integer ids and user-facing names."""

    def __init__(self, vertices, arrows, source, target):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.arrows: tuple[str, ...] = tuple(arrows)
        self.source: tuple[int, ...] = tuple(source)
        self.target: tuple[int, ...] = tuple(target)
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex name")
        if len(set(self.arrows)) != len(self.arrows):
            raise PresentationError("duplicate arrow name")
        if len(self.source) != len(self.arrows) or len(self.target) != len(self.arrows):
            raise PresentationError("source/target length mismatch")
        n = len(self.vertices)
        for a, (s, t) in enumerate(zip(self.source, self.target)):
            if not (0 <= s < n and 0 <= t < n):
                raise PresentationError(f"arrow {self.arrows[a]} has an undeclared endpoint")
        self.out_arrows = tuple(
            tuple(a for a in range(len(self.arrows)) if self.source[a] == v) for v in range(n))
        self.in_arrows = tuple(
            tuple(a for a in range(len(self.arrows)) if self.target[a] == v) for v in range(n))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def is_connected(self) -> bool:
        n = self.n_vertices
        if n == 0:
            return False
        seen = {0}
        todo = deque([0])
        while todo:
            v = todo.popleft()
            for a in self.out_arrows[v] + self.in_arrows[v]:
                for w in (self.source[a], self.target[a]):
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
        return len(seen) == n

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_arrows


class Presentation:
    """A quiver with a set of relations, each a path of length 2.

    The presentation is immutable; derived data is cached lazily.
    """

    def __init__(self, quiver: Quiver, relations, *, allow_disconnected: bool = False):
        self.quiver = quiver
        rels = set()
        for pair in relations:
            a, b = pair
            if quiver.target[a] != quiver.source[b]:
                raise PresentationError(
                    f"relation {quiver.arrows[b]}*{quiver.arrows[a]} is not a path")
            rels.add((a, b))
        self.relations: frozenset = frozenset(rels)
        if not allow_disconnected and not quiver.is_connected():
            raise PresentationError("quiver is not connected")
        na = quiver.n_arrows
        rel_next = [[] for _ in range(na)]
        rel_prev = [[] for _ in range(na)]
        free_next = [[] for _ in range(na)]
        free_prev = [[] for _ in range(na)]
        for a in range(na):
            for b in quiver.out_arrows[quiver.target[a]]:
                if (a, b) in self.relations:
                    rel_next[a].append(b)
                    rel_prev[b].append(a)
                else:
                    free_next[a].append(b)
                    free_prev[b].append(a)
        self.rel_next = tuple(tuple(x) for x in rel_next)
        self.rel_prev = tuple(tuple(x) for x in rel_prev)
        self.free_next = tuple(tuple(x) for x in free_next)
        self.free_prev = tuple(tuple(x) for x in free_prev)
        self._cache: dict = {}

    # -- basic accessors ----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.quiver.n_vertices

    @property
    def n_arrows(self) -> int:
        return self.quiver.n_arrows

    def src(self, a: int) -> int:
        return self.quiver.source[a]

    def tgt(self, a: int) -> int:
        return self.quiver.target[a]

    def trivial(self, v: int) -> Path:
        return Path((), v, v)

    def arrow(self, a: int) -> Path:
        return Path((a,), self.quiver.source[a], self.quiver.target[a])

    def path(self, arrows, vertex: int | None = None) -> Path:
        """Build a path from arrows in traversal order, checking composability."""
        arrows = tuple(arrows)
        if not arrows:
            if vertex is None:
                raise ValueError("a trivial path needs a vertex")
            return Path((), vertex, vertex)
        q = self.quiver
        for a, b in zip(arrows, arrows[1:]):
            if q.target[a] != q.source[b]:
                raise ValueError("arrows are not composable")
        return Path(arrows, q.source[arrows[0]], q.target[arrows[-1]])

    def is_relation(self, a: int, b: int) -> bool:
        """True when the length-2 path "b after a" lies in the relation set."""
        return (a, b) in self.relations

    def in_B(self, p: Path) -> bool:
        """No length-2 subpath of ``p`` is a relation."""
        ar = p.arrows
        return all((ar[i], ar[i + 1]) not in self.relations for i in range(len(ar) - 1))

    def in_Gamma(self, p: Path) -> bool:
        """Every length-2 subpath of ``p`` is a relation."""
        ar = p.arrows
        return all((ar[i], ar[i + 1]) in self.relations for i in range(len(ar) - 1))

    # -- naming ---------------------------------------------------------------

    def vertex_id(self, name: str) -> int:
        try:
            return self.quiver.vertices.index(str(name))
        except ValueError:
            raise PresentationError(f"unknown vertex {name!r}") from None

    def arrow_id(self, name: str) -> int:
        try:
            return self.quiver.arrows.index(str(name))
        except ValueError:
            raise PresentationError(f"unknown arrow {name!r}") from None

    @property
    def _compact_names(self) -> bool:
        return all(len(a) == 1 for a in self.quiver.arrows)

    def path_str(self, p: Path) -> str:
        """Written form, right to left: ``cba`` or ``c*b*a`` for long names."""
        if not p.arrows:
            return f"e{self.quiver.vertices[p.source]}"
        names = [self.quiver.arrows[a] for a in reversed(p.arrows)]
        return "".join(names) if self._compact_names else "*".join(names)

    def parse_path(self, text: str) -> Path:
        """Inverse of :meth:`path_str`; also accepts ``e<vertex>``."""
        text = text.strip()
        if text.startswith("e") and text[1:] in self.quiver.vertices and text not in self.quiver.arrows:
            return self.trivial(self.quiver.vertices.index(text[1:]))
        if "*" in text:
            names = text.split("*")
        elif self._compact_names:
            names = list(text)
        else:
            names = [text]
        return self.path([self.arrow_id(n) for n in reversed(names)])

    # -- structure ---------------------------------------------------------------

    def dual(self) -> "Presentation":
        """The presentation whose relations are the length-2 paths not in ours."""
        q = self.quiver
        rels = [(a, b) for a in range(q.n_arrows) for b in q.out_arrows[q.target[a]]
                if (a, b) not in self.relations]
        return Presentation(q, rels)

    def relabel(self, vertex_perm, arrow_perm, rename: bool = False) -> "Presentation":
        """Isomorphic copy where old vertex ``v`` gets id ``vertex_perm[v]`` and
        old arrow ``a`` gets id ``arrow_perm[a]``.  Names travel with the
        objects unless ``rename`` is set, in which case fresh names are used."""
        q = self.quiver
        nv, na = q.n_vertices, q.n_arrows
        vnames = [None] * nv
        anames = [None] * na
        src = [0] * na
        tgt = [0] * na
        for v in range(nv):
            vnames[vertex_perm[v]] = f"v{vertex_perm[v]}" if rename else q.vertices[v]
        for a in range(na):
            anames[arrow_perm[a]] = f"x{arrow_perm[a]}" if rename else q.arrows[a]
            src[arrow_perm[a]] = vertex_perm[q.source[a]]
            tgt[arrow_perm[a]] = vertex_perm[q.target[a]]
        rels = [(arrow_perm[a], arrow_perm[b]) for a, b in self.relations]
        return Presentation(Quiver(vnames, anames, src, tgt), rels)

    def signature(self) -> tuple:
        return (self.quiver.vertices, self.quiver.arrows, self.quiver.source,
                self.quiver.target, tuple(sorted(self.relations)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Presentation) and self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def describe(self) -> str:
        """Serialize in the text input format."""
        q = self.quiver
        lines = ["vertices: " + " ".join(q.vertices), "arrows:"]
        for a in range(q.n_arrows):
            lines.append(f"  {q.arrows[a]}: {q.vertices[q.source[a]]} -> {q.vertices[q.target[a]]}")
        rels = sorted(self.relations)
        lines.append(" ".join(["relations:"] + [f"{q.arrows[b]}*{q.arrows[a]}" for a, b in rels]))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Presentation({self.n_vertices} vertices, {self.n_arrows} arrows, {len(self.relations)} relations)"

    @property
    def klass(self) -> str:
        return validate_gentle(self).klass


def compose(P: Presentation, p: Path, q: Path) -> Path | None:
    """The concatenation ``pq`` (``q`` first, then ``p``) in the path algebra
    of the quiver, or ``None`` when ``t(q) != s(p)``."""
    if q.target != p.source:
        return None
    return Path(q.arrows + p.arrows, q.source, p.target)


def concat(p: Path, q: Path) -> Path:
    """Unchecked ``pq`` for paths already known to be composable."""
    return Path(q.arrows + p.arrows, q.source, p.target)


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class GentleReport:
    degree_bound: bool          # (a) at most two arrows in and out of each vertex
    unique_free: bool           # (b) at most one non-relation continuation per side
    unique_relation: bool       # (c) at most one relation continuation per side
    quadratic: bool             # (d) relations are length-2 paths
    finite_dimensional: bool    # (e) no cocomplete cycle
    failures: tuple

    @property
    def gentle(self) -> bool:
        return self.degree_bound and self.unique_free and self.unique_relation and self.quadratic

    @property
    def klass(self) -> str:
        if not self.gentle:
            return "quadratic-monomial"
        return "fd-gentle" if self.finite_dimensional else "gentle"


def _has_functional_cycle(succ) -> bool:
    """Cycle detection in the graph arrow -> successors."""
    colour = {}
    for start in range(len(succ)):
        if start in colour:
            continue
        stack = [(start, iter(succ[start]))]
        colour[start] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = 2
                stack.pop()
            elif colour.get(nxt) == 1:
                return True
            elif nxt not in colour:
                colour[nxt] = 1
                stack.append((nxt, iter(succ[nxt])))
    return False


def validate_gentle(P: Presentation) -> GentleReport:
    cached = P._cache.get("gentle_report")
    if cached is not None:
        return cached
    q = P.quiver
    fails = []
    a_ok = True
    for v in range(q.n_vertices):
        if len(q.out_arrows[v]) > 2 or len(q.in_arrows[v]) > 2:
            a_ok = False
            fails.append(f"(a) vertex {q.vertices[v]} has more than two arrows on one side")
    b_ok = True
    c_ok = True
    for a in range(q.n_arrows):
        name = q.arrows[a]
        if len(P.free_next[a]) > 1 or len(P.free_prev[a]) > 1:
            b_ok = False
            fails.append(f"(b) arrow {name} has two non-relation continuations")
        if len(P.rel_next[a]) > 1 or len(P.rel_prev[a]) > 1:
            c_ok = False
            fails.append(f"(c) arrow {name} has two relation continuations")
    d_ok = all(q.target[a] == q.source[b] for a, b in P.relations)
    fd = not _has_functional_cycle(P.free_next)
    if not fd:
        fails.append("(e) there is a cocomplete cycle, the algebra is infinite dimensional")
    rep = GentleReport(a_ok, b_ok, c_ok, d_ok, fd, tuple(fails))
    P._cache["gentle_report"] = rep
    return rep


# -- parsing ----------------------------------------------------------------

_SECTION = re.compile(r"^\s*(vertices|arrows|relations)\s*:", re.IGNORECASE)
_ARROW = re.compile(r"([^\s:,;]+)\s*:\s*([^\s,;]+)\s*->\s*([^\s,;]+)")
_TOKEN = re.compile(r"[^\s,;]+")


def _build(vertices, arrows, relations, allow_point: bool) -> Presentation:
    """``arrows`` is a list of (name, src, tgt, pos); ``relations`` a list of
    (list of names written right to left, pos)."""
    vid = {}
    for name, pos in vertices:
        if name in vid:
            raise PresentationError(f"duplicate vertex {name!r}", *pos)
        vid[name] = len(vid)
    anames, src, tgt = [], [], []
    for name, s, t, pos in arrows:
        if name in anames:
            raise PresentationError(f"duplicate arrow {name!r}", *pos)
        for x in (s, t):
            if x not in vid:
                raise PresentationError(f"arrow {name!r} uses undeclared vertex {x!r}", *pos)
        anames.append(name)
        src.append(vid[s])
        tgt.append(vid[t])
    aid = {n: i for i, n in enumerate(anames)}
    rels = []
    for names, pos in relations:
        for n in names:
            if n not in aid:
                raise PresentationError(f"relation uses undeclared arrow {n!r}", *pos)
        if len(names) != 2:
            raise PresentationError(f"relation {'*'.join(names)} does not have length 2", *pos)
        second, first = aid[names[0]], aid[names[1]]
        if tgt[first] != src[second]:
            raise PresentationError(f"relation {'*'.join(names)} is not a path", *pos)
        rels.append((first, second))
    if not vid:
        raise PresentationError("the quiver has no vertices")
    if not anames and not allow_point:
        raise PresentationError("the quiver has no arrows")
    quiver = Quiver(list(vid), anames, src, tgt)
    if not quiver.is_connected():
        raise PresentationError("quiver is not connected")
    return Presentation(quiver, rels)


def _split_relation(tok: str, arrow_names) -> list[str]:
    if "*" in tok:
        return tok.split("*")
    if all(len(a) == 1 for a in arrow_names) and len(tok) == 2:
        return list(tok)
    return [tok]


def parse_text(text: str, allow_point: bool = False) -> Presentation:
    """Parse the line-oriented format::

        vertices: 1 2
        arrows: a: 1 -> 2, b: 1 -> 2
        relations: b*a

    Each section may continue over following lines; ``#`` starts a comment.
    """
    sections: dict[str, list[tuple[str, int, int]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _SECTION.match(line)
        if m:
            current = m.group(1).lower()
            if current in sections:
                raise PresentationError(f"section {current!r} repeated", lineno, m.start(1) + 1)
            sections[current] = []
            offset = m.end()
        else:
            if current is None:
                col = len(line) - len(line.lstrip()) + 1
                raise PresentationError("expected 'vertices:', 'arrows:' or 'relations:'", lineno, col)
            offset = 0
        sections[current].append((line[offset:], lineno, offset))
    for key in ("vertices", "arrows"):
        if key not in sections:
            raise PresentationError(f"missing section {key!r}", 1, 1)
    vertices = []
    for chunk, ln, off in sections["vertices"]:
        for t in _TOKEN.finditer(chunk):
            vertices.append((t.group(0), (ln, off + t.start() + 1)))
    arrows = []
    for chunk, ln, off in sections["arrows"]:
        pos = 0
        for m in _ARROW.finditer(chunk):
            gap = chunk[pos:m.start()]
            if gap.strip(" \t,;"):
                col = off + pos + len(gap) - len(gap.lstrip(" \t,;")) + 1
                raise PresentationError("malformed arrow, expected 'name: source -> target'", ln, col)
            arrows.append((m.group(1), m.group(2), m.group(3), (ln, off + m.start() + 1)))
            pos = m.end()
        rest = chunk[pos:]
        if rest.strip(" \t,;"):
            col = off + pos + len(rest) - len(rest.lstrip(" \t,;")) + 1
            raise PresentationError("malformed arrow, expected 'name: source -> target'", ln, col)
    anames = [a[0] for a in arrows]
    relations = []
    for chunk, ln, off in sections.get("relations", []):
        for t in _TOKEN.finditer(chunk):
            relations.append((_split_relation(t.group(0), anames), (ln, off + t.start() + 1)))
    return _build(vertices, arrows, relations, allow_point)


def parse_structured(data, allow_point: bool = False) -> Presentation:
    """Parse a mapping with keys ``vertices``, ``arrows``, ``relations``.

    ``arrows`` may be a mapping ``name -> [source, target]`` or a list of
    ``{name, source, target}`` mappings or ``"name: s -> t"`` strings.
    Relations are ``"b*a"`` strings or ``[b, a]`` lists (written order)."""
    if not isinstance(data, dict):
        raise PresentationError("structured input must be a mapping")
    nopos = (None, None)
    vertices = [(str(v), nopos) for v in data.get("vertices") or []]
    raw = data.get("arrows") or []
    arrows = []
    if isinstance(raw, dict):
        for name, ends in raw.items():
            if not isinstance(ends, (list, tuple)) or len(ends) != 2:
                raise PresentationError(f"arrow {name!r} needs [source, target]")
            arrows.append((str(name), str(ends[0]), str(ends[1]), nopos))
    else:
        for item in raw:
            if isinstance(item, str):
                m = _ARROW.fullmatch(item.strip())
                if not m:
                    raise PresentationError(f"malformed arrow {item!r}")
                arrows.append((m.group(1), m.group(2), m.group(3), nopos))
            elif isinstance(item, dict):
                try:
                    arrows.append((str(item["name"]), str(item["source"]), str(item["target"]), nopos))
                except KeyError as e:
                    raise PresentationError(f"arrow entry missing {e.args[0]!r}") from None
            else:
                raise PresentationError(f"malformed arrow entry {item!r}")
    anames = [a[0] for a in arrows]
    relations = []
    for r in data.get("relations") or []:
        if isinstance(r, str):
            relations.append((_split_relation(r.strip(), anames), nopos))
        else:
            relations.append(([str(x) for x in r], nopos))
    return _build(vertices, arrows, relations, allow_point)


def parse_presentation(source: str, fmt: str = "auto", allow_point: bool = False) -> Presentation:
    """Parse text or structured (JSON/YAML) input.

    With ``fmt="auto"`` input starting with ``{`` is read as JSON, input
    that loads as a YAML mapping whose ``vertices`` entry is a list is read
    as YAML, and everything else uses the line format."""
    if fmt == "auto":
        fmt = "text"
        if source.lstrip().startswith("{"):
            fmt = "json"
        else:
            try:
                data = yaml.safe_load(source)
            except yaml.YAMLError:
                data = None
            if isinstance(data, dict) and isinstance(data.get("vertices"), list):
                fmt = "yaml"
    if fmt == "text":
        return parse_text(source, allow_point)
    try:
        data = json.loads(source) if fmt == "json" else yaml.safe_load(source)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        mark = getattr(e, "problem_mark", None)
        if isinstance(e, json.JSONDecodeError):
            raise PresentationError(e.msg, e.lineno, e.colno) from None
        if mark is not None:
            raise PresentationError(str(getattr(e, "problem", e)), mark.line + 1, mark.column + 1) from None
        raise PresentationError(str(e)) from None
    return parse_structured(data, allow_point)


def make_presentation(vertices, arrows, relations=(), allow_point: bool = True) -> Presentation:
    """Convenience constructor: ``arrows`` maps names to (source, target) and
    relations are written right to left, e.g. ``"b*a"`` or ``"ba"``."""
    nopos = (None, None)
    arr = [(str(n), str(s), str(t), nopos) for n, (s, t) in arrows.items()]
    names = [a[0] for a in arr]
    rels = [(_split_relation(r, names) if isinstance(r, str) else [str(x) for x in r], nopos)
            for r in relations]
    return _build([(str(v), nopos) for v in vertices], arr, rels, allow_point)
