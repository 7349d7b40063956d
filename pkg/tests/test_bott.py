from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from unires.bott import (
    Cohomology,
    bott,
    cauchy_summands,
    f_terms_via_bott,
    p_and_N,
    t_terms_via_bott,
)
from unires.complexes import t_terms_closed
from unires.partitions import enumerate_in_box, is_partition


def _brute_bott(weight, n):
    """Reference: search all permutations for the one that sorts weight+rho."""
    rho = [n - i for i in range(n)]
    v = [w + r for w, r in zip(weight, rho)]
    if len(set(v)) < n:
        return None
    for perm in permutations(range(n)):
        s = [v[i] for i in perm]
        if all(s[i] > s[i + 1] for i in range(n - 1)):
            length = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            return Cohomology(length, tuple(x - r for x, r in zip(s, rho)))


def test_examples():
    assert bott((0, 0), (0, 0, 0), 5, 3) == Cohomology(0, (0, 0, 0, 0, 0))
    assert bott((-2,), (2, 2, 2), 4, 3) == Cohomology(3, (1, 1, 1, 1))
    assert bott((0,), (1, 0, 0), 4, 3) is None


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        bott((0, 0), (0,), 4, 1)
    with pytest.raises(ValueError):
        bott((0, 1), (0,), 3, 1)


weights = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(0, n),
        st.lists(st.integers(-4, 4), min_size=n, max_size=n),
    )
)


@given(weights)
def test_against_permutation_search(data):
    n, r, w = data
    q = sorted(w[: n - r], reverse=True)
    rr = sorted(w[n - r :], reverse=True)
    out = bott(q, rr, n, r)
    assert out == _brute_bott(q + rr, n)
    rho = [n - i for i in range(n)]
    shifted = [a + b for a, b in zip(q + rr, rho)]
    assert (out is None) == (len(set(shifted)) < n)
    if out is not None:
        plus = [a + b for a, b in zip(out.weight, rho)]
        assert all(plus[i] > plus[i + 1] for i in range(n - 1))
        assert out.degree <= n * (n - 1) // 2


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), st.data())
def test_dominant_input_is_unchanged(w, data):
    w = sorted(w, reverse=True)
    r = data.draw(st.integers(0, len(w)))
    assert bott(w[: len(w) - r], w[len(w) - r :], len(w), r) == Cohomology(0, tuple(w))


@pytest.mark.parametrize(
    "nu, k, g, p, N",
    [((2,), 1, 2, (2, 1), 1), ((1,), 2, 2, (2, 2), 3), ((2, 1), 1, 3, (2, 1, 1), 1), ((0, 0), 0, 3, (0, 0, 0), 0)],
)
def test_p_and_N(nu, k, g, p, N):
    assert p_and_N(nu, k, g) == (p, N)


def test_p_is_bott_of_nu_then_N():
    for e in range(1, 4):
        for g in range(2, 5):
            for nu in enumerate_in_box(g - 1, e):
                for k in range(e + 2):
                    p, N = p_and_N(nu, k, g)
                    assert is_partition(p)
                    out = bott(nu, (N,), g, 1)
                    assert out is not None and out.weight == p


def test_p_dominant_for_weights():
    for nu in [(3, -1), (0, -1), (-1, -1), (5, 2)]:
        for k in range(-4, 8):
            p, _ = p_and_N(nu, k, 3)
            assert all(p[i] >= p[i + 1] for i in range(2))


@pytest.mark.parametrize("e, g", [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2), (3, 3)])
def test_cauchy_identity(e, g):
    by_degree = {}
    for s in cauchy_summands(e, g):
        by_degree[s.exterior_degree] = by_degree.get(s.exterior_degree, 0) + s.fiber_dim(e, g)
    rank = e * (g - 1) + g * (e + 1)
    assert by_degree == {n: comb(rank, n) for n in range(rank + 1)}


def test_oracle_examples():
    c = f_terms_via_bott(2, 2)
    (top,) = c.terms[5]
    assert (top.twist, top.rank) == ((-2, -6), 1)
    assert f_terms_via_bott(1, 2).length() == 3
    assert f_terms_via_bott(2, 3).counts() == [1, 2, 4, 5, 5, 4, 2, 1]
    assert len(f_terms_via_bott(2, 3)) == 24


def test_oracle_rejects_g1():
    with pytest.raises(ValueError):
        f_terms_via_bott(2, 1)


def test_t_oracle_examples():
    c = t_terms_via_bott((2,), 2, 2)
    assert [t.k for t in c] == [0, 1, 2, 3]
    assert [t.n_ext for t in c] == [0, 1, 2, 4]
    for e in range(1, 5):
        for g in range(2, 5):
            for nu in enumerate_in_box(g - 1, e):
                c = t_terms_via_bott(nu, e, g)
                assert c.length() <= e + 1
                assert c.same_terms(t_terms_closed(nu, e, g))
