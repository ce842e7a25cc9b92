from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from wallkit import intmat

small = st.integers(min_value=-9, max_value=9)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def _is_unimodular(m):
    return abs(intmat.determinant(m)) == 1


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
def test_smith_form_transforms(a):
    d, u, v = intmat.smith_normal_form(a)
    assert intmat.matmul(intmat.matmul(u, a), v) == d
    assert _is_unimodular(u) and _is_unimodular(v)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(x >= 0 for x in diag)
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert diag[len(nz):] == [0] * (len(diag) - len(nz))


@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_invariant_factors_match_sympy(a):
    ours = [x for x in intmat.invariant_factors(a) if x]
    theirs = [abs(int(x)) for x in sympy_invariant_factors(sympy.Matrix(a), domain=sympy.ZZ) if x]
    assert ours == theirs


@given(st.integers(1, 6).flatmap(lambda n: matrices(n, n)))
def test_determinant_matches_sympy(a):
    assert intmat.determinant(a) == sympy.Matrix(a).det()


def test_smith_form_of_printed_example():
    assert intmat.smith_normal_form([[2, 4], [6, 8]])[0] == [[2, 0], [0, 4]]


@given(matrices(2, 5))
def test_integer_kernel(a):
    ker = intmat.integer_kernel(a)
    for k in ker:
        assert intmat.matvec(a, k) == [0, 0]
    # the kernel basis extends to a unimodular matrix: its Smith factors are all 1
    if ker:
        cols = [[k[r] for k in ker] for r in range(5)]
        assert intmat.invariant_factors(cols) == [1] * len(ker)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6))
def test_bezout(values):
    g, c = intmat.bezout(values)
    assert sum(x * y for x, y in zip(values, c)) == g == intmat.gcd_list(values)


def test_inverse_rational():
    rng = random.Random(3)
    for _ in range(20):
        a = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        if intmat.determinant(a) == 0:
            with pytest.raises(ValueError):
                intmat.inverse_rational(a)
            continue
        inv = intmat.inverse_rational(a)
        assert intmat.matmul(a, inv) == intmat.identity(4)
