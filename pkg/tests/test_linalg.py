from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlecalc.linalg import Echelon, Field, format_vector, kernel, rank


def dense_rank(rows, p):
    """Textbook elimination on a dense copy."""
    M = [[Fraction(x) if p == 0 else x % p for x in r] for r in rows]
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c] if p == 0 else pow(M[r][c], -1, p)
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c] * inv
                M[i] = [(a - f * b) if p == 0 else (a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=7))


@settings(max_examples=300, deadline=None)
@given(matrices, st.sampled_from([0, 2, 3, 5]))
def test_rank_matches_dense_elimination(rows, p):
    F = Field(p)
    vecs = [{j: F(x) for j, x in enumerate(r) if F(x)} for r in rows]
    assert rank(vecs, F) == dense_rank(rows, p)


@settings(max_examples=200, deadline=None)
@given(matrices, st.sampled_from([0, 2, 3]))
def test_kernel_vectors_are_dependencies(rows, p):
    F = Field(p)
    cols = [(i, {j: F(x) for j, x in enumerate(r) if F(x)}) for i, r in enumerate(rows)]
    ker = kernel(cols, F)
    assert len(ker) == len(rows) - dense_rank(rows, p)
    for z in ker:
        total: dict = {}
        for i, c in z.items():
            for j, x in cols[i][1].items():
                total[j] = F.add(total.get(j, F.zero), F.mul(c, x))
        assert not any(total.values())


def test_field_basics():
    F = Field(3)
    assert F.add(2, 2) == 1 and F.neg(1) == 2 and F.inv(2) == 2
    assert F.to_str(2) == "-1" and F.sign(3) == 2
    Q = Field(0)
    assert Q.inv(Fraction(2)) == Fraction(1, 2) and Q.to_str(Fraction(-3, 4)) == "-3/4"
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_echelon_tracking_and_format():
    F = Field(0)
    E = Echelon(F, track=True)
    assert E.add({"x": F(1)}, "u") is None
    assert E.add({"y": F(2)}, "v") is None
    dep = E.add({"x": F(1), "y": F(4)}, "w")
    assert dep == {"w": F(1), "u": F(-1), "v": F(-2)}
    assert E.contains({"x": F(3), "y": F(1)})
    assert format_vector({"b": F(-1), "a": F(2)}, F, str) == "2*a + -b"
