from itertools import combinations, permutations

import numpy as np
import pytest

from hyperstp import (
    Hypermatrix,
    Permutation,
    convert_expression,
    expression_to_hypermatrix,
    is_skew_symmetric,
    is_symmetric,
    linearize,
    matrix_expression,
    matrix_form_to_vec,
    perm_compose,
    sigma_transpose,
    sigma_transpose_via_perm,
    transpose_expr,
    vc,
    vcs,
    vec_to_matrix_form,
    vr,
    vrs,
)

from conftest import expression_oracle, random_dims, random_hm, transpose_oracle


def all_increasing_subsets(d):
    for r in range(d + 1):
        yield from combinations(range(1, d + 1), r)


# -- stacking ------------------------------------------------------------


def test_vr_vc_examples():
    m = np.array([[1, 2], [3, 4]], dtype=object)
    assert list(vr(m)) == [1, 2, 3, 4]
    assert list(vc(m)) == [1, 3, 2, 4]


def test_vrs_vcs_examples():
    assert vrs([1, 2, 3, 4, 5, 6], 3).tolist() == [[1, 2, 3], [4, 5, 6]]
    assert vcs([1, 2, 3, 4, 5, 6], 3).tolist() == [[1, 4], [2, 5], [3, 6]]
    with pytest.raises(ValueError):
        vrs([1, 2, 3], 2)


def test_stacking_roundtrip_random(rng):
    for _ in range(100):
        m0, n0 = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        mat = np.array([[int(v) for v in row] for row in rng.integers(-9, 10, (m0, n0))], dtype=object)
        assert np.array_equal(vrs(vr(mat), n0), mat)
        assert np.array_equal(vcs(vc(mat), m0), mat)


def test_matrix_stacking_forms_factor_through_vectors():
    mat = np.arange(12).reshape(3, 4)
    assert np.array_equal(vrs(mat, 6), vrs(vr(mat), 6))
    assert np.array_equal(vcs(mat, 6), vcs(vc(mat), 6))


# -- sigma transpose -----------------------------------------------------


def test_sigma_transpose_matrix_case(rng):
    a = random_hm(rng, (2, 3))
    t = sigma_transpose(a, Permutation((2, 1)))
    assert t.dims == (3, 2)
    assert np.array_equal(t.nd, a.nd.T)


def test_sigma_transpose_identity(rng):
    a = random_hm(rng, (2, 3, 2))
    assert sigma_transpose(a, Permutation((1, 2, 3))) == a
    assert sigma_transpose_via_perm(a, Permutation((1, 2, 3))) == a


def test_sigma_transpose_index_rule():
    a = Hypermatrix.from_flat((2, 3, 2), list(range(1, 13)))
    t = sigma_transpose(a, Permutation((2, 1, 3)))
    assert t.dims == (3, 2, 2)
    assert t.get((2, 1, 2)) == a.get((1, 2, 2))


def test_sigma_transpose_matches_loop_oracle(rng):
    for _ in range(50):
        dims = random_dims(rng, max_order=4, max_dim=4, max_size=256)
        a = random_hm(rng, dims)
        p = Permutation(tuple(int(v) for v in rng.permutation(len(dims)) + 1))
        assert sigma_transpose(a, p) == transpose_oracle(a, p)


def test_via_perm_equals_direct_100_random(rng):
    for _ in range(100):
        dims = random_dims(rng, max_order=4, max_dim=4, max_size=256)
        a = random_hm(rng, dims)
        p = Permutation(tuple(int(v) for v in rng.permutation(len(dims)) + 1))
        assert sigma_transpose_via_perm(a, p) == sigma_transpose(a, p)


def test_transpose_composition_orientation(rng):
    # exhaustive at order 3 over dimension 2: transposing by p then q is a
    # single transpose by the sequential composition
    a = random_hm(rng, (2, 2, 2))
    for p in permutations(range(1, 4)):
        for q in permutations(range(1, 4)):
            P, Q = Permutation(p), Permutation(q)
            assert sigma_transpose(sigma_transpose(a, P), Q) == sigma_transpose(a, perm_compose(Q, P))


# -- matrix expressions --------------------------------------------------


@pytest.fixture
def ex215():
    return Hypermatrix.from_flat((2, 3, 2), list(range(1, 13)))


def test_expression_single_row_axis(ex215):
    m = matrix_expression(ex215, rows=(2,))
    assert m.mat.shape == (3, 4)
    # row 2 lists a_{121}, a_{122}, a_{221}, a_{222}
    assert [ex215.get(i) for i in ((1, 2, 1), (1, 2, 2), (2, 2, 1), (2, 2, 2))] == list(m.mat[1])
    assert m.mat[1, 2] == ex215.get((2, 2, 1))


def test_expression_rows_13(ex215):
    m = matrix_expression(ex215, rows=(1, 3))
    assert m.mat.shape == (4, 3)
    assert list(m.mat[1]) == [ex215.get((1, 1, 2)), ex215.get((1, 2, 2)), ex215.get((1, 3, 2))]


def test_expression_empty_rows_is_flat(ex215):
    m = matrix_expression(ex215, rows=())
    assert m.mat.shape == (1, 12)
    assert list(m.mat[0]) == list(ex215.data)


def test_expression_full_rows_is_column(ex215):
    m = matrix_expression(ex215, rows=(1, 2, 3))
    assert m.mat.shape == (12, 1)
    assert list(m.mat[:, 0]) == list(ex215.data)


def test_expression_matches_loop_oracle(rng):
    for _ in range(25):
        dims = random_dims(rng, max_order=4, max_dim=4, max_size=256)
        a = random_hm(rng, dims)
        axes = list(rng.permutation(len(dims)) + 1)
        cut = int(rng.integers(0, len(dims) + 1))
        rows, cols = tuple(int(x) for x in axes[:cut]), tuple(int(x) for x in axes[cut:])
        m = matrix_expression(a, rows, cols)
        assert np.array_equal(m.mat, expression_oracle(a, rows, cols))


def test_expression_rejects_bad_partitions(ex215):
    with pytest.raises(ValueError):
        matrix_expression(ex215, rows=(1, 1))
    with pytest.raises(ValueError):
        matrix_expression(ex215, rows=(1,), cols=(2,))


def test_expression_roundtrip_hypermatrix(rng):
    for _ in range(20):
        dims = random_dims(rng, max_order=4, max_dim=4, max_size=256)
        a = random_hm(rng, dims)
        axes = list(rng.permutation(len(dims)) + 1)
        cut = int(rng.integers(0, len(dims) + 1))
        m = matrix_expression(a, tuple(axes[:cut]), tuple(axes[cut:]))
        assert expression_to_hypermatrix(m) == a


# -- vector form <-> matrix form ----------------------------------------


def test_vec_to_matrix_form_full_and_empty(ex215):
    full = vec_to_matrix_form(ex215.data, ex215.dims, (1, 2, 3))
    assert full.mat.shape == (12, 1) and list(full.mat[:, 0]) == list(ex215.data)
    empty = vec_to_matrix_form(ex215.data, ex215.dims, ())
    assert empty.mat.shape == (1, 12) and list(empty.mat[0]) == list(ex215.data)


def test_vec_to_matrix_form_matches_direct(ex215, rng):
    for rows in all_increasing_subsets(3):
        m = vec_to_matrix_form(ex215.data, ex215.dims, rows)
        direct = matrix_expression(ex215, rows)
        assert np.array_equal(m.mat, direct.mat)
        assert m.row_axes == direct.row_axes and m.col_axes == direct.col_axes


def test_matrix_form_to_vec_roundtrip(rng):
    for _ in range(20):
        dims = random_dims(rng, max_order=4, max_dim=4, max_size=256)
        a = random_hm(rng, dims)
        for rows in all_increasing_subsets(len(dims)):
            m = matrix_expression(a, rows)
            assert list(matrix_form_to_vec(m)) == list(a.data)


def test_matrix_form_to_vec_d2_row_split_is_vr(rng):
    mat = np.array([[1, 2, 3], [4, 5, 6]], dtype=object)
    a = Hypermatrix.from_flat((2, 3), list(vr(mat)))
    m = matrix_expression(a, rows=(1,))
    assert list(matrix_form_to_vec(m)) == list(vr(mat))


def test_vec_to_matrix_form_rejects_decreasing(ex215):
    with pytest.raises(ValueError):
        vec_to_matrix_form(ex215.data, ex215.dims, (3, 1))


def test_convert_expression_identity(ex215):
    m = matrix_expression(ex215, rows=(2,))
    again = convert_expression(m, (2,))
    assert np.array_equal(again.mat, m.mat)


def test_convert_expression_example(ex215):
    m1 = matrix_expression(ex215, rows=(1,))
    m12 = convert_expression(m1, (1, 2))
    assert np.array_equal(m12.mat, matrix_expression(ex215, rows=(1, 2)).mat)


def test_convert_expression_closure(rng):
    for _ in range(6):
        dims = random_dims(rng, max_order=4, max_dim=3, max_size=128)
        a = random_hm(rng, dims)
        splits = list(all_increasing_subsets(len(dims)))
        for src in splits:
            m = matrix_expression(a, src)
            for dst in splits:
                got = convert_expression(m, dst)
                assert np.array_equal(got.mat, matrix_expression(a, dst).mat)


# -- expression transpose -------------------------------------------------


def test_transpose_expr_flat_vs_column(ex215):
    flat = matrix_expression(ex215, rows=())
    assert np.array_equal(transpose_expr(flat).mat, matrix_expression(ex215, rows=(1, 2, 3)).mat)


def test_transpose_expr_double_is_identity(ex215):
    m = matrix_expression(ex215, rows=(2,))
    back = transpose_expr(transpose_expr(m))
    assert np.array_equal(back.mat, m.mat) and back.row_axes == m.row_axes


def test_transpose_expr_swaps_axes(ex215, rng):
    for rows in all_increasing_subsets(3):
        m = matrix_expression(ex215, rows)
        t = transpose_expr(m)
        assert t.row_axes == m.col_axes and t.col_axes == m.row_axes
        assert np.array_equal(t.mat, matrix_expression(ex215, m.col_axes, m.row_axes).mat)


# -- symmetry --------------------------------------------------------------


def test_symmetric_matrix_case():
    sym = Hypermatrix.from_flat((2, 2), [1, 5, 5, 2])
    assert is_symmetric(sym)
    m = matrix_expression(sym, rows=(1,))
    assert np.array_equal(m.mat, m.mat.T)
    assert not is_symmetric(Hypermatrix.from_flat((2, 2), [1, 5, 4, 2]))


def test_zero_hypercubic_both():
    z = Hypermatrix.zeros((2, 2, 2))
    assert is_symmetric(z) and is_skew_symmetric(z)


def test_not_symmetric_when_entries_differ():
    a = Hypermatrix.zeros((2, 2, 2))
    data = list(a.data)
    data[linearize((2, 2, 2), (1, 2, 1)) - 1] = 7  # a_121 != a_211
    a = Hypermatrix.from_flat((2, 2, 2), data)
    assert a.get((1, 2, 1)) != a.get((2, 1, 1))
    assert not is_symmetric(a)


def test_skew_symmetric_d2():
    skew = Hypermatrix.from_flat((2, 2), [0, 3, -3, 0])
    assert is_skew_symmetric(skew)
    assert not is_skew_symmetric(Hypermatrix.from_flat((2, 2), [0, 3, 3, 0]))


def test_symmetric_d3_constructed(rng):
    # symmetrise a random cube by summing over all transposes
    a = random_hm(rng, (2, 2, 2))
    total = np.zeros(8, dtype=object)
    for p in permutations(range(1, 4)):
        total = total + sigma_transpose(a, Permutation(p)).data
    sym = Hypermatrix.from_flat((2, 2, 2), list(total))
    assert is_symmetric(sym)


def test_symmetry_needs_hypercubic():
    with pytest.raises(ValueError):
        is_symmetric(Hypermatrix.from_flat((2, 3), [0] * 6))


def test_prop_d2_equivalence(rng):
    # a 2-hypercubic is symmetric exactly when its one-row-axis expression is
    for _ in range(20):
        a = random_hm(rng, (3, 3))
        m = matrix_expression(a, rows=(1,))
        assert is_symmetric(a) == bool(np.array_equal(m.mat, m.mat.T))
