"""Exact linear algebra over Fraction and field-element entries."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from daha import linalg as la

entries = st.integers(-6, 6).map(Fraction)


def mats(n):
    return st.lists(
        st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n
    )


@settings(max_examples=30, deadline=None)
@given(mats(3), mats(3))
def test_rank_of_product_bounded(a, b):
    ra = la.rank(a)
    rb = la.rank(b)
    assert la.rank(la.mat_mul(a, b)) <= min(ra, rb)


@settings(max_examples=30, deadline=None)
@given(mats(3))
def test_rank_nullity(a):
    null = la.nullspace(a, Fraction(1))
    assert la.rank(a) + len(null) == 3
    for v in null:
        assert all(c == 0 for c in la.mat_vec(a, v))


@settings(max_examples=30, deadline=None)
@given(mats(3))
def test_nullspace_vectors_independent(a):
    null = la.nullspace(a, Fraction(1))
    assert la.span_dimension([list(v) for v in null]) == len(null)


def test_identity_and_vec():
    one = la.identity_matrix(3, Fraction(1), Fraction(0))
    v = [Fraction(2), Fraction(-1), Fraction(5)]
    assert la.mat_vec(one, v) == v
    assert la.rank(one) == 3


@settings(max_examples=30, deadline=None)
@given(mats(3), st.lists(entries, min_size=3, max_size=3))
def test_in_span_consistent(a, v):
    w = la.mat_vec(a, v)
    cols = [[a[i][j] for i in range(3)] for j in range(3)]
    assert la.in_span(cols, list(w))


def test_rref_idempotent():
    a = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    r, piv = la.rref(la.mat_copy(a))
    r2, piv2 = la.rref(la.mat_copy(r))
    assert r == r2 and piv == piv2
