from itertools import product

import numpy as np
import pytest

from hyperstp import (
    Hypermatrix,
    binary_apply,
    contract,
    contract_bruteforce,
    contract_via_expression,
    eval_multilinear_scalar,
    eval_multilinear_vector,
    eval_tensor,
    hypervector_expand,
    kary_apply,
    matrix_expression,
    onto_contract,
    unary_apply,
)

from conftest import basis_vec, contract_oracle, random_dims, random_hm


def random_spec(rng, a, b, max_pairs=None):
    """A random axis pairing between two hypermatrices (may be empty)."""
    by_dim = {}
    for k, n in enumerate(b.dims, start=1):
        by_dim.setdefault(n, []).append(k)
    a_axes, b_axes = [], []
    avail = {n: list(ks) for n, ks in by_dim.items()}
    order = list(rng.permutation(a.order) + 1)
    for ax in order:
        n = a.dims[ax - 1]
        if avail.get(n) and (max_pairs is None or len(a_axes) < max_pairs) and rng.random() < 0.7:
            pick = avail[n].pop(int(rng.integers(0, len(avail[n]))))
            a_axes.append(int(ax))
            b_axes.append(int(pick))
    return tuple(a_axes), tuple(b_axes)


# -- the two contraction routes ---------------------------------------------


def test_single_pair_is_matrix_product(rng):
    a = random_hm(rng, (3, 4))
    b = random_hm(rng, (4, 5))
    got = contract_bruteforce(a, b, (2,), (1,))
    assert got.dims == (3, 5)
    assert np.array_equal(got.nd, np.dot(a.nd, b.nd))
    assert contract_via_expression(a, b, (2,), (1,)) == got


def test_example_pipeline_shape_and_values(rng):
    a = random_hm(rng, (2, 3, 4))
    b = random_hm(rng, (4, 5, 3))
    c = contract_bruteforce(a, b, (2, 3), (3, 1))
    assert c.dims == (2, 5)
    # entry (i1, j2) sums a[i1, k2, k3] * b[k3, j2, k2]
    expected = 0
    for k2 in range(1, 4):
        for k3 in range(1, 5):
            expected += a.get((2, k2, k3)) * b.get((k3, 4, k2))
    assert c.get((2, 4)) == expected
    assert contract_via_expression(a, b, (2, 3), (3, 1)) == c


def test_expression_route_matches_printed_factorisation(rng):
    a = random_hm(rng, (2, 3, 4))
    b = random_hm(rng, (4, 5, 3))
    ma = matrix_expression(a, rows=(1,), cols=(2, 3))
    mb = matrix_expression(b, rows=(3, 1), cols=(2,))
    mc = np.dot(ma.mat, mb.mat)
    c = contract_via_expression(a, b, (2, 3), (3, 1))
    assert np.array_equal(mc, matrix_expression(c, rows=(1,), cols=(2,)).mat)


def test_self_pairing_vector_norm():
    v = Hypermatrix.from_flat((4,), [1, -2, 3, -4])
    got = contract_bruteforce(v, v, (1,), (1,))
    assert got.order == 0 and got.to_scalar() == 30


def test_outer_product_empty_spec(rng):
    a = random_hm(rng, (2, 3))
    b = random_hm(rng, (4,))
    c = contract_bruteforce(a, b, (), ())
    assert c.dims == (2, 3, 4)
    assert c.get((2, 1, 3)) == a.get((2, 1)) * b.get((3,))
    assert contract_via_expression(a, b, (), ()) == c


def test_contract_all_axes_gives_scalar(rng):
    a = random_hm(rng, (2, 3))
    b = random_hm(rng, (2, 3))
    c = contract_bruteforce(a, b, (1, 2), (1, 2))
    assert c.dims == ()
    assert c.to_scalar() == sum(x * y for x, y in zip(a.data, b.data))


def test_contract_validation(rng):
    a = random_hm(rng, (2, 3))
    b = random_hm(rng, (3, 2))
    with pytest.raises(ValueError, match="pair 1"):
        contract_bruteforce(a, b, (1,), (1,))
    with pytest.raises(ValueError, match="duplicate"):
        contract_bruteforce(a, b, (1, 1), (2, 1))
    with pytest.raises(ValueError):
        contract_bruteforce(a, b, (1,), (2, 1))


def test_routes_agree_on_random_cases(rng):
    for _ in range(60):
        a = random_hm(rng, random_dims(rng, max_order=4, max_dim=5, max_size=300))
        b = random_hm(rng, random_dims(rng, max_order=4, max_dim=5, max_size=300))
        a_axes, b_axes = random_spec(rng, a, b)
        brute = contract_bruteforce(a, b, a_axes, b_axes)
        assert contract_via_expression(a, b, a_axes, b_axes) == brute


def test_routes_agree_with_loop_oracle(rng):
    for _ in range(15):
        a = random_hm(rng, random_dims(rng, max_order=3, max_dim=4, max_size=48))
        b = random_hm(rng, random_dims(rng, max_order=3, max_dim=4, max_size=48))
        a_axes, b_axes = random_spec(rng, a, b)
        expected = contract_oracle(a, b, a_axes, b_axes)
        assert contract_bruteforce(a, b, a_axes, b_axes) == expected


def test_contract_dispatcher(rng):
    a = random_hm(rng, (2, 2))
    b = random_hm(rng, (2, 2))
    assert contract(a, b, (2,), (1,), "brute") == contract(a, b, (2,), (1,), "expr")
    with pytest.raises(ValueError):
        contract(a, b, (2,), (1,), "nope")


# -- onto contraction ---------------------------------------------------------


def test_onto_full_pairing_is_total_sum(rng):
    a = random_hm(rng, (2, 3))
    b = random_hm(rng, (2, 3))
    for method in ("expression", "stp"):
        got = onto_contract(a, b, (1, 2), method)
        assert got.dims == () and got.to_scalar() == sum(x * y for x, y in zip(a.data, b.data))


def test_onto_single_axis_is_matvec(rng):
    a = random_hm(rng, (2, 3))
    b = random_hm(rng, (3,))
    expected = np.dot(a.nd, b.nd)
    for method in ("expression", "stp"):
        got = onto_contract(a, b, (2,), method)
        assert got.dims == (2,) and list(got.data) == list(expected)


def test_onto_methods_match_bruteforce(rng):
    for _ in range(60):
        dims = random_dims(rng, max_order=4, max_dim=4, max_size=256)
        a = random_hm(rng, dims)
        d = len(dims)
        r = int(rng.integers(1, d + 1))
        rs = tuple(sorted(int(v) + 1 for v in rng.choice(d, size=r, replace=False)))
        b = random_hm(rng, tuple(a.dims[x - 1] for x in rs))
        brute = contract_bruteforce(a, b, rs, tuple(range(1, len(rs) + 1)))
        assert onto_contract(a, b, rs, "expression") == brute
        assert onto_contract(a, b, rs, "stp") == brute


def test_onto_validation(rng):
    a = random_hm(rng, (2, 3, 4))
    with pytest.raises(ValueError, match="increasing"):
        onto_contract(a, random_hm(rng, (4, 2)), (3, 1))
    with pytest.raises(ValueError, match="shape"):
        onto_contract(a, random_hm(rng, (3,)), (1,))


# -- hypervectors -------------------------------------------------------------


def test_hypervector_basis_factors():
    h = hypervector_expand([basis_vec(2, 1), basis_vec(3, 2)])
    assert h.dims == (2, 3)
    assert h.get((1, 2)) == 1 and sum(abs(v) for v in h.data) == 1


def test_hypervector_products_in_id_order():
    h = hypervector_expand([np.array([1, 2]), np.array([1, 1])])
    assert list(h.data) == [1, 1, 2, 2]


def test_hypervector_single_factor():
    h = hypervector_expand([np.array([5, 6, 7])])
    assert h.dims == (3,) and list(h.data) == [5, 6, 7]


def test_hypervector_entry_formula(rng):
    xs = [np.array([int(v) for v in rng.integers(-4, 5, n)], dtype=object) for n in (2, 3, 2)]
    h = hypervector_expand(xs)
    for idx, v in h.items():
        assert v == xs[0][idx[0] - 1] * xs[1][idx[1] - 1] * xs[2][idx[2] - 1]


# -- multilinear evaluation ----------------------------------------------------


def test_scalar_eval_reads_entries_on_basis(rng):
    pi = random_hm(rng, (2, 3, 2))
    for idx, v in pi.items():
        xs = [basis_vec(n, i) for n, i in zip(pi.dims, idx)]
        assert eval_multilinear_scalar(pi, xs) == v


def test_scalar_eval_all_ones_sums_dims():
    pi = Hypermatrix.from_flat((2, 3, 2), [1] * 12)
    ones = [np.ones(n, dtype=np.int64) for n in (2, 3, 2)]
    assert eval_multilinear_scalar(pi, ones) == 12


def test_scalar_eval_is_total_weighted_sum(rng):
    pi = random_hm(rng, (2, 2, 3))
    xs = [np.array([int(v) for v in rng.integers(-3, 4, n)], dtype=object) for n in pi.dims]
    expected = 0
    for idx, v in pi.items():
        term = v
        for x, i in zip(xs, idx):
            term *= x[i - 1]
        expected += term
    assert eval_multilinear_scalar(pi, xs) == expected
    assert eval_multilinear_scalar(pi, xs) == onto_contract(pi, hypervector_expand(xs), (1, 2, 3)).to_scalar()


def test_scalar_eval_multilinearity(rng):
    pi = random_hm(rng, (2, 3))
    x1, x2 = (np.array([int(v) for v in rng.integers(-3, 4, 2)], dtype=object) for _ in range(2))
    y = np.array([int(v) for v in rng.integers(-3, 4, 3)], dtype=object)
    lhs = eval_multilinear_scalar(pi, [x1 + 3 * x2, y])
    rhs = eval_multilinear_scalar(pi, [x1, y]) + 3 * eval_multilinear_scalar(pi, [x2, y])
    assert lhs == rhs


def test_vector_eval_reproduces_columns(rng):
    pi = random_hm(rng, (2, 3, 2))
    m = matrix_expression(pi, rows=(1,))
    for i in range(1, 4):
        for j in range(1, 3):
            got = eval_multilinear_vector(m, [basis_vec(3, i), basis_vec(2, j)])
            expected = [pi.get((k, i, j)) for k in (1, 2)]
            assert list(got) == expected


def test_vector_eval_needs_single_row_axis(rng):
    pi = random_hm(rng, (2, 3, 2))
    with pytest.raises(ValueError):
        eval_multilinear_vector(matrix_expression(pi, rows=(1, 2)), [basis_vec(2, 1)])


def test_eval_tensor_identity_pairing(rng):
    omega = Hypermatrix.from_flat((3, 3), [1, 0, 0, 0, 1, 0, 0, 0, 1])
    w = np.array([int(v) for v in rng.integers(-4, 5, 3)], dtype=object)
    x = np.array([int(v) for v in rng.integers(-4, 5, 3)], dtype=object)
    assert eval_tensor(omega, [w], [x]) == np.dot(w, x)


def test_eval_tensor_basis_reads_entries(rng):
    omega = random_hm(rng, (2, 2, 2))  # r=1 vector slot, s=2 covector slots
    for idx, v in omega.items():
        x = basis_vec(2, idx[0])
        ws = [basis_vec(2, idx[1]), basis_vec(2, idx[2])]
        assert eval_tensor(omega, ws, [x]) == v


def test_eval_tensor_matches_bruteforce(rng):
    n, r, s = 2, 2, 2
    omega = random_hm(rng, (n,) * (r + s))
    vecs = [np.array([int(v) for v in rng.integers(-3, 4, n)], dtype=object) for _ in range(r)]
    covs = [np.array([int(v) for v in rng.integers(-3, 4, n)], dtype=object) for _ in range(s)]
    expected = 0
    for idx, v in omega.items():
        term = v
        for x, i in zip(vecs, idx[:r]):
            term *= x[i - 1]
        for w, j in zip(covs, idx[r:]):
            term *= w[j - 1]
        expected += term
    assert eval_tensor(omega, covs, vecs) == expected


# -- block operators ------------------------------------------------------------


def test_unary_d1_is_matvec(rng):
    a = random_hm(rng, (3, 3))
    b = random_hm(rng, (3,))
    got = unary_apply(a, b)
    assert got.dims == (3,) and list(got.data) == list(np.dot(a.nd, b.nd))


def test_binary_d1_is_bilinear_form(rng):
    a = random_hm(rng, (2, 2, 2))
    b = random_hm(rng, (2,))
    c = random_hm(rng, (2,))
    got = binary_apply(a, b, c)
    assert got.dims == (2,)
    expected = [
        sum(a.get((i, j, k)) * c.get((j,)) * b.get((k,)) for j in (1, 2) for k in (1, 2))
        for i in (1, 2)
    ]
    assert list(got.data) == expected


def test_binary_nesting_is_literal(rng):
    # contracting the last block with the first operand, then the middle
    # block with the second, equals the fused triple sum
    d = 2
    a = random_hm(rng, (2, 3) * 3)
    b = random_hm(rng, (2, 3))
    c = random_hm(rng, (2, 3))
    got = binary_apply(a, b, c)
    step1 = contract_bruteforce(a, b, (5, 6), (1, 2))
    step2 = contract_bruteforce(step1, c, (3, 4), (1, 2))
    assert got == step2
    expected = contract_oracle(contract_oracle(a, b, (5, 6), (1, 2)), c, (3, 4), (1, 2))
    assert got == expected


def test_kary_reduces_to_unary_and_binary(rng):
    a2 = random_hm(rng, (2, 2, 2, 2))
    b = random_hm(rng, (2, 2))
    assert kary_apply(a2, [b]) == unary_apply(a2, b)
    a3 = random_hm(rng, (2,) * 6)
    c = random_hm(rng, (2, 2))
    assert kary_apply(a3, [b, c]) == binary_apply(a3, b, c)


def test_kary_three_operands(rng):
    a = random_hm(rng, (2,) * 4)
    ops = [random_hm(rng, (2,)) for _ in range(3)]
    got = kary_apply(a, ops)
    acc = a
    for t, b in enumerate(ops):
        acc = contract_bruteforce(acc, b, ((3 - t) + 1,), (1,))
    assert got == acc and got.dims == (2,)


def test_block_validation(rng):
    a = random_hm(rng, (2, 2, 2))
    with pytest.raises(ValueError):
        unary_apply(a, random_hm(rng, (2,)))
    with pytest.raises(ValueError, match="block"):
        unary_apply(random_hm(rng, (2, 3)), random_hm(rng, (3,)))
