"""Exact field arithmetic and sparse linear algebra.

Vectors are plain dicts mapping hashable, mutually comparable keys to
nonzero field elements.  Characteristic 0 uses ``fractions.Fraction``;
a prime characteristic ``p`` uses Python ints reduced modulo ``p``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Field:
    """The prime field of a given characteristic (0 means the rationals)."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
        self.characteristic = characteristic

    def __repr__(self) -> str:
        return f"Field({self.characteristic})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("Field", self.characteristic))

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, p)) % p
        return int(x) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, a, b):
        s = a + b
        return s % self.characteristic if self.characteristic else s

    def sub(self, a, b):
        s = a - b
        return s % self.characteristic if self.characteristic else s

    def mul(self, a, b):
        s = a * b
        return s % self.characteristic if self.characteristic else s

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(int(a), -1, self.characteristic)
        return 1 / a

    def sign(self, k: int):
        """(-1)^k as a field element."""
        return self.one if k % 2 == 0 else self.neg(self.one)

    def to_str(self, a) -> str:
        p = self.characteristic
        if p:
            a = int(a) % p
            return str(a - p if a > p // 2 else a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


# -- sparse vectors ---------------------------------------------------------

def axpy(y: dict, a, x: dict, F: Field) -> dict:
    """In place ``y += a*x``; drops zero entries.  Returns ``y``."""
    if not a:
        return y
    for k, v in x.items():
        s = F.add(y.get(k, F.zero), F.mul(a, v))
        if s:
            y[k] = s
        else:
            y.pop(k, None)
    return y


def scale(x: dict, a, F: Field) -> dict:
    if not a:
        return {}
    return {k: F.mul(a, v) for k, v in x.items()}


def add_term(y: dict, key: Hashable, a, F: Field) -> None:
    s = F.add(y.get(key, F.zero), a)
    if s:
        y[key] = s
    else:
        y.pop(key, None)


def combine(terms: Iterable[tuple[Hashable, object]], F: Field) -> dict:
    out: dict = {}
    for k, a in terms:
        add_term(out, k, a, F)
    return out


class Echelon:
    """Incremental row echelon form over a field.

    Each stored row has a pivot (its least key) with coefficient 1, and no
    other stored row contains that pivot.  With ``track=True`` every row also
    records the combination of inserted labels it came from, which gives
    kernels and linear solves.
    """

    def __init__(self, F: Field, track: bool = False):
        self.F = F
        self.track = track
        self.rows: dict = {}
        self.combos: dict = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict, combo: dict | None = None) -> dict:
        """Reduce a copy of ``v``; if ``combo`` is given it is updated in place
        so that ``v_original - sum(combo) == result`` in terms of labels."""
        F = self.F
        v = dict(v)
        rows = self.rows
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v
            k = min(hits)
            c = v[k]
            axpy(v, F.neg(c), rows[k], F)
            if combo is not None:
                axpy(combo, F.neg(c), self.combos[k], F)

    def add(self, v: dict, label=None):
        """Insert ``v``.  Returns ``None`` if it was independent; otherwise the
        dependency (a label combination summing to zero) when tracking, or an
        empty dict when not tracking."""
        F = self.F
        combo = {label: F.one} if self.track else None
        r = self.reduce(v, combo)
        if not r:
            return combo if self.track else {}
        k = min(r)
        inv = F.inv(r[k])
        r = scale(r, inv, F)
        if self.track:
            combo = scale(combo, inv, F)
        # keep rows fully reduced with respect to the new pivot
        for pk, row in self.rows.items():
            c = row.get(k)
            if c:
                axpy(row, F.neg(c), r, F)
                if self.track:
                    axpy(self.combos[pk], F.neg(c), combo, F)
        self.rows[k] = r
        if self.track:
            self.combos[k] = combo
        return None

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def rank(vectors: Iterable[dict], F: Field) -> int:
    E = Echelon(F)
    for v in vectors:
        E.add(v)
    return len(E)


def kernel(columns: list[tuple[Hashable, dict]], F: Field) -> list[dict]:
    """Basis of the kernel of the map sending label -> vector.

    Returns label combinations; deterministic given the column order."""
    E = Echelon(F, track=True)
    out = []
    for label, vec in columns:
        dep = E.add(vec, label)
        if dep is not None:
            out.append(dep)
    return out


def format_vector(v: dict, F: Field, name) -> str:
    """Render a combination as ``c1*x1 + c2*x2``; ``name`` maps keys to text."""
    if not v:
        return "0"
    parts = []
    for k in sorted(v, key=lambda k: name(k)):
        c = v[k]
        cs = F.to_str(c)
        if cs == "1":
            parts.append(name(k))
        elif cs == "-1":
            parts.append(f"-{name(k)}")
        else:
            parts.append(f"{cs}*{name(k)}")
    return " + ".join(parts)
