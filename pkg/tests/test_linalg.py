import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassmann_spectra.enumeration import enumerate_subspaces
from grassmann_spectra.field import make_field
from grassmann_spectra.linalg import (
    AmbientMismatch,
    MatrixGF,
    annihilator,
    batch_rank,
    contains,
    full_space,
    intersect_dim,
    rank,
    rref,
    serialize_subspace,
    span_sum,
    subspace_from_rows,
    subspace_array,
    zero_subspace,
)

from conftest import log_q, span_set

GF2 = make_field(2)
GF3 = make_field(3)


def vecset(U):
    return frozenset(U.vectors())


def is_rref(U):
    rows = U.rows
    pivots = [next(c for c, x in enumerate(r) if x) for r in rows]
    assert pivots == sorted(set(pivots))
    for r, pc in zip(rows, pivots):
        assert r[pc] == 1
        assert [row[pc] for row in rows].count(0) == len(rows) - 1
    return True


def test_rref_identity(gf3):
    I = MatrixGF.identity(gf3, 4)
    assert rref(I) == (I, 4)


def test_rref_zero(gf2):
    Z = MatrixGF.zeros(gf2, 2, 3)
    assert rref(Z) == (Z, 0)


def test_rref_gf2_example(gf2):
    M = MatrixGF.from_rows(gf2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    R, r = rref(M)
    assert r == 2
    assert R.to_rows() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]
    # same row span as the input, checked on vector sets
    assert span_set(gf2, 3, R.to_rows()[:2]) == span_set(gf2, 3, M.to_rows())


def test_subspace_from_rows_examples(gf2):
    assert subspace_from_rows(gf2, 3, [[1, 1, 0], [0, 1, 1]]).dim == 2
    assert subspace_from_rows(gf2, 3, []).dim == 0
    assert subspace_from_rows(gf2, 3, [[1, 0, 1], [1, 0, 1]]).dim == 1
    with pytest.raises(ValueError):
        subspace_from_rows(gf2, 3, [[1, 0]])


def test_sum_examples(gf2):
    U = subspace_from_rows(gf2, 3, [[1, 1, 0]])
    W = subspace_from_rows(gf2, 3, [[0, 1, 1]])
    assert span_sum(U, U) == U
    assert span_sum(U, W).dim == 2
    assert span_sum(U, zero_subspace(gf2, 3)) == U


def test_intersect_dim_examples(gf2):
    U = subspace_from_rows(gf2, 3, [[1, 1, 0]])
    W = subspace_from_rows(gf2, 3, [[0, 1, 1]])
    assert intersect_dim(U, U) == 1
    assert intersect_dim(U, W) == 0
    # two 2-spaces of GF(2)^4 sharing exactly the vector 1100
    A = subspace_from_rows(gf2, 4, [[1, 1, 0, 0], [0, 0, 1, 0]])
    B = subspace_from_rows(gf2, 4, [[1, 1, 0, 0], [0, 0, 0, 1]])
    common = len(vecset(A) & vecset(B))
    assert common == 2
    assert intersect_dim(A, B) == log_q(gf2, common) == 1


def test_contains_examples(gf2):
    U = subspace_from_rows(gf2, 3, [[1, 1, 0]])
    W = subspace_from_rows(gf2, 3, [[1, 0, 0], [0, 1, 0]])
    assert contains(U, U)
    assert not contains(zero_subspace(gf2, 3), U)
    assert (1, 1, 0) in vecset(W)
    assert contains(W, U)
    assert not contains(U, W)


def test_ambient_mismatch(gf2, gf3):
    with pytest.raises(AmbientMismatch):
        intersect_dim(full_space(gf2, 3), full_space(gf2, 4))
    with pytest.raises(AmbientMismatch):
        span_sum(full_space(gf2, 3), full_space(gf3, 3))


def test_annihilator_full_space(gf3):
    assert annihilator(full_space(gf3, 4)) == zero_subspace(gf3, 4)
    assert annihilator(zero_subspace(gf3, 4)) == full_space(gf3, 4)


def _dot(field, u, v):
    acc = 0
    for x, y in zip(u, v):
        acc = field.add(acc, field.mul(x, y))
    return acc


@pytest.mark.parametrize("n", [2, 3, 4])
def test_annihilator_involution_and_order_reversal(gf2, n):
    subs = [U for k in range(n + 1) for U in enumerate_subspaces(gf2, n, k)]
    ann = {U: annihilator(U) for U in subs}
    for U in subs:
        A = ann[U]
        assert A.dim == n - U.dim
        assert ann[A] == U
        # brute force: every vector of A is orthogonal to every vector of U
        assert all(_dot(gf2, u, a) == 0 for u in U.vectors() for a in A.vectors())
    for U, W in itertools.product(subs, repeat=2):
        assert contains(W, U) == contains(ann[U], ann[W])


def test_annihilator_gf4(gf4):
    for U in enumerate_subspaces(gf4, 3, 1):
        A = annihilator(U)
        assert A.dim == 2 and annihilator(A) == U
        assert all(_dot(gf4, u, a) == 0 for u in U.vectors() for a in A.vectors())


def test_modular_law_exhaustive_gf2(gf2):
    subs = [U for k in range(5) for U in enumerate_subspaces(gf2, 4, k)]
    sets = {U: vecset(U) for U in subs}
    for U, W in itertools.product(subs, repeat=2):
        common = len(sets[U] & sets[W])
        assert intersect_dim(U, W) == log_q(gf2, common)
        assert intersect_dim(U, W) + span_sum(U, W).dim == U.dim + W.dim


rows_gf3 = st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), min_size=0, max_size=5)


@settings(max_examples=200, deadline=None)
@given(rows_gf3, rows_gf3)
def test_modular_law_random_gf3(a, b):
    U, W = subspace_from_rows(GF3, 4, a), subspace_from_rows(GF3, 4, b)
    common = len(vecset(U) & vecset(W))
    assert intersect_dim(U, W) == log_q(GF3, common)
    assert intersect_dim(U, W) + span_sum(U, W).dim == U.dim + W.dim


@settings(max_examples=200, deadline=None)
@given(rows_gf3, st.randoms(use_true_random=False))
def test_rref_canonical_under_recombination(rows, rnd):
    U = subspace_from_rows(GF3, 4, rows)
    assert is_rref(U)
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert subspace_from_rows(GF3, 4, shuffled) == U
    if rows:
        # random invertible recombination: unit upper-triangular times a permutation
        m = len(rows)
        T = [[(1 if i == j else rnd.randrange(3) if j > i else 0) for j in range(m)] for i in range(m)]
        mixed = [
            [sum(T[i][t] * shuffled[t][c] for t in range(m)) % 3 for c in range(4)]
            for i in range(m)
        ]
        assert subspace_from_rows(GF3, 4, mixed) == U
    assert vecset(U) == span_set(GF3, 4, rows)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(0, 3), min_size=5, max_size=5), min_size=1, max_size=6))
def test_batch_rank_matches_scalar_gf4(rows):
    F = make_field(2, 2)
    M = MatrixGF.from_rows(F, rows)
    assert batch_rank(F, np.array([rows]))[0] == rank(M)


def test_batch_rank_stack(gf3):
    rng = np.random.default_rng(7)
    stack = rng.integers(0, 3, size=(300, 4, 5))
    stack[::3, 3] = stack[::3, 0]
    got = batch_rank(gf3, stack)
    assert got.tolist() == [rank(MatrixGF.from_rows(gf3, m.tolist())) for m in stack]


def test_serialization(gf2, gf4):
    U = subspace_from_rows(gf2, 3, [[1, 0, 1], [0, 1, 1]])
    assert serialize_subspace(U) == "101;011"
    V = subspace_from_rows(gf4, 2, [[1, gf4.from_coeffs((0, 1))]])
    # entries 1 -> "10", x -> "01"
    assert serialize_subspace(V) == "1001"
    assert serialize_subspace(zero_subspace(gf2, 3)) == ""


def test_subspace_array_shape(gf2):
    subs = enumerate_subspaces(gf2, 4, 2)
    arr = subspace_array(subs)
    assert arr.shape == (35, 2, 4)
    assert arr[0].tolist() == subs[0].rows
