"""Unit tests for the exact integer/rational linear algebra layer."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertoric.errors import DimensionError
from hypertoric.lattice import (
    IncrementalEchelon,
    content,
    dot,
    hyperplane_normals,
    int_inverse,
    int_kernel_basis,
    nullspace,
    primitive,
    rank,
    rref,
    solve_exact,
    smith_invariant_factors,
    sparse_echelon,
    sparse_kernel,
    sparse_rank,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
    xgcd,
)

ints = st.integers(-30, 30)
small_vec = st.lists(ints, min_size=1, max_size=5).map(tuple)


def small_matrix(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-6, 6), min_size=c, max_size=c).map(tuple),
            min_size=1,
            max_size=max_rows,
        )
    )


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_xgcd_bezout(a, b):
    g, x, y = xgcd(a, b)
    assert g == gcd(a, b)
    assert a * x + b * y == g


@given(small_vec)
def test_content_divides(v):
    c = content(v)
    if any(v):
        assert c > 0
        assert all(x % c == 0 for x in v)
    else:
        assert c == 0


@given(small_vec)
def test_primitive_normalization(v):
    if not any(v):
        return
    p = primitive(v)
    assert content(p) == 1
    first = next(x for x in p if x)
    assert first > 0
    # sign-insensitive and scale-insensitive
    assert primitive(vec_neg(v)) == p
    assert primitive(vec_scale(3, v)) == p


def test_vector_ops_dimension_guard():
    with pytest.raises(DimensionError):
        dot((1, 2), (1, 2, 3))
    with pytest.raises(DimensionError):
        vec_add((1,), (1, 2))
    with pytest.raises(DimensionError):
        vec_sub((1, 2, 3), (1, 2))


def test_rref_known():
    rows, pivots = rref([(2, 4), (1, 2)])
    assert len(rows) == 1
    assert pivots == [0]
    assert rows[0][1] / rows[0][0] == Fraction(2)


@given(small_matrix())
def test_rank_row_scaling_invariant(mat):
    scaled = [tuple(5 * x for x in row) for row in mat]
    assert rank(mat) == rank(scaled)


@given(small_matrix())
def test_sparse_rank_matches_dense(mat):
    sparse = [{j: x for j, x in enumerate(row) if x} for row in mat]
    assert sparse_rank(sparse) == rank(mat)


def test_solve_exact():
    x = solve_exact([(1, 1), (1, -1)], (3, 1))
    assert list(x) == [Fraction(2), Fraction(1)]
    assert solve_exact([(1, 0), (1, 0)], (0, 1)) is None


@given(small_matrix())
def test_nullspace_annihilates(mat):
    ncols = len(mat[0])
    basis = nullspace(mat, ncols)
    assert len(basis) == ncols - rank(mat)
    for v in basis:
        for row in mat:
            assert sum(r * x for r, x in zip(row, v)) == 0


@given(small_matrix())
def test_int_kernel_basis_annihilates(mat):
    ncols = len(mat[0])
    basis = int_kernel_basis(mat, ncols)
    assert len(basis) == ncols - rank(mat)
    for v in basis:
        assert all(isinstance(x, int) for x in v)
        for row in mat:
            assert dot(row, v) == 0


def test_int_kernel_basis_saturated():
    # kernel of (2 4) is generated by (2, -1), not (4, -2)
    basis = int_kernel_basis([(2, 4)], 2)
    assert len(basis) == 1
    assert content(basis[0]) == 1


def test_int_inverse_roundtrip():
    m = ((2, 1), (1, 1))
    inv = int_inverse(m)
    prod = [
        [sum(m[i][k] * inv[k][j] for k in range(2)) for j in range(2)]
        for i in range(2)
    ]
    assert prod == [[1, 0], [0, 1]]


def test_int_inverse_rejects_non_unimodular():
    with pytest.raises(Exception):
        int_inverse(((2, 0), (0, 1)))


def test_smith_invariant_factors_known():
    assert smith_invariant_factors([(1, 0), (0, 1)]) == (1, 1)
    assert smith_invariant_factors([(2, 0), (0, 3)]) == (1, 6)
    assert smith_invariant_factors([(2, 0), (0, 2)]) == (2, 2)
    assert smith_invariant_factors([(1,), (1,)]) == (1,)


@given(small_matrix(max_rows=3, max_cols=3))
def test_smith_divisibility_chain(mat):
    factors = smith_invariant_factors(mat)
    assert len(factors) == rank(mat)
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


def test_hyperplane_normals_hexagon():
    normals = hyperplane_normals([(1, 0), (0, 1), (1, 1)], 2)
    assert list(normals) == [(0, 1), (1, -1), (1, 0)]


def test_hyperplane_normals_low_dim():
    assert list(hyperplane_normals([(1,), (1,)], 1)) == []
    # parallel generators spanning one flat
    assert list(hyperplane_normals([(1, 1), (2, 2), (-1, -1)], 2)) == [(1, -1)]


def test_sparse_echelon_pivot_signs():
    rows = sparse_echelon([{0: -2, 1: 4}])
    assert rows[0][0] > 0


@given(small_matrix())
def test_sparse_kernel_annihilates(mat):
    ncols = len(mat[0])
    sparse = [{j: x for j, x in enumerate(row) if x} for row in mat]
    kernel = sparse_kernel(sparse, ncols)
    assert len(kernel) == ncols - rank(mat)
    for vec in kernel:
        for row in mat:
            assert sum(row[j] * c for j, c in vec.items()) == 0


@settings(max_examples=50)
@given(small_matrix())
def test_incremental_echelon_tracks_rank(mat):
    ech = IncrementalEchelon()
    for row in mat:
        ech.add({j: x for j, x in enumerate(row) if x})
    assert ech.rank == rank(mat)


def test_incremental_echelon_dependent_row_returns_none():
    ech = IncrementalEchelon()
    assert ech.add({0: 1, 1: 2}) is not None
    assert ech.add({0: 2, 1: 4}) is None
    assert ech.add({}) is None
    assert ech.rank == 1
