"""Contracted products of hypermatrices, two equivalent ways.

The defining route sums over the paired axes directly (explicit loops in
ID order, which also fixes the float accumulation order).  The second
route flattens both operands into matrix expressions, multiplies, and
reassembles; on exact data the two agree bit for bit.  On top of these
sit rank-one hypervectors, multilinear evaluation by semi-tensor chains,
and the block operators that act on order-d operands.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .core import Hypermatrix
from .expression import MatrixExpression, matrix_expression, split_permutation
from .permutation import build_perm_matrix
from .stp import kron_chain, mm_stp


def _check_axes(label: str, order: int, axes: Sequence[int]) -> tuple[int, ...]:
    axes = tuple(int(a) for a in axes)
    if len(set(axes)) != len(axes):
        raise ValueError(f"duplicate axis in {label} axes {axes}")
    for a in axes:
        if not 1 <= a <= order:
            raise ValueError(f"{label} axis {a} out of range 1..{order}")
    return axes


def check_contraction_spec(a: Hypermatrix, b: Hypermatrix, a_axes, b_axes):
    """Validate a pairing of axes of ``a`` against axes of ``b``."""
    a_axes = _check_axes("first", a.order, a_axes)
    b_axes = _check_axes("second", b.order, b_axes)
    if len(a_axes) != len(b_axes):
        raise ValueError(f"{len(a_axes)} axes paired with {len(b_axes)}")
    for t, (ax, bx) in enumerate(zip(a_axes, b_axes), start=1):
        if a.dims[ax - 1] != b.dims[bx - 1]:
            raise ValueError(
                f"pair {t} contracts axis {ax} (dim {a.dims[ax - 1]}) with axis {bx} (dim {b.dims[bx - 1]})"
            )
    if a.kind != b.kind:
        raise ValueError(f"scalar kind mismatch: {a.kind} vs {b.kind}")
    return a_axes, b_axes


def _free_axes(order: int, axes: Sequence[int]) -> tuple[int, ...]:
    taken = set(axes)
    return tuple(k for k in range(1, order + 1) if k not in taken)


def _strides(dims: tuple[int, ...]) -> list[int]:
    out = [1] * len(dims)
    for k in range(len(dims) - 2, -1, -1):
        out[k] = out[k + 1] * dims[k + 1]
    return out


def contract_bruteforce(a: Hypermatrix, b: Hypermatrix, a_axes, b_axes) -> Hypermatrix:
    """Contracted product by direct summation.

    Output axes are a's free axes (ascending) followed by b's free axes
    (ascending); each entry sums products over the paired index ranges in
    ID order.  No paired axes gives the outer product; pairing all axes
    of both gives an order-0 scalar.
    """
    a_axes, b_axes = check_contraction_spec(a, b, a_axes, b_axes)
    a_free = _free_axes(a.order, a_axes)
    b_free = _free_axes(b.order, b_axes)
    out_dims = tuple(a.dims[x - 1] for x in a_free) + tuple(b.dims[x - 1] for x in b_free)
    sa, sb = _strides(a.dims), _strides(b.dims)
    af_str = [sa[x - 1] for x in a_free]
    bf_str = [sb[x - 1] for x in b_free]
    ac_str = [sa[x - 1] for x in a_axes]
    bc_str = [sb[x - 1] for x in b_axes]
    ell = [a.dims[x - 1] for x in a_axes]
    con = [
        (sum(k * s for k, s in zip(ks, ac_str)), sum(k * s for k, s in zip(ks, bc_str)))
        for ks in product(*(range(n) for n in ell))
    ]
    da, db = a.data, b.data
    zero = 0 if a.kind == "int" else 0.0
    out = []
    nf = len(a_free)
    for fs in product(*(range(a.dims[x - 1]) for x in a_free), *(range(b.dims[x - 1]) for x in b_free)):
        a_base = sum(k * s for k, s in zip(fs[:nf], af_str))
        b_base = sum(k * s for k, s in zip(fs[nf:], bf_str))
        acc = zero
        for oa, ob in con:
            acc += da[a_base + oa] * db[b_base + ob]
        out.append(acc)
    return Hypermatrix(out_dims, out, a.kind)


def contract_via_expression(a: Hypermatrix, b: Hypermatrix, a_axes, b_axes) -> Hypermatrix:
    """Contracted product through matrix expressions.

    Flattens ``a`` with its free axes as rows and the paired axes (in
    listed order) as columns, ``b`` the other way round, multiplies, and
    reads the product off as the output's row-major data.
    """
    a_axes, b_axes = check_contraction_spec(a, b, a_axes, b_axes)
    a_free = _free_axes(a.order, a_axes)
    b_free = _free_axes(b.order, b_axes)
    ma = matrix_expression(a, rows=a_free, cols=a_axes)
    mb = matrix_expression(b, rows=b_axes, cols=b_free)
    mat = np.dot(ma.mat, mb.mat)
    out_dims = tuple(a.dims[x - 1] for x in a_free) + tuple(b.dims[x - 1] for x in b_free)
    return Hypermatrix(out_dims, mat.reshape(-1).copy(), a.kind)


def contract(a: Hypermatrix, b: Hypermatrix, a_axes, b_axes, method: str = "expression") -> Hypermatrix:
    if method in ("expression", "expr"):
        return contract_via_expression(a, b, a_axes, b_axes)
    if method in ("bruteforce", "brute"):
        return contract_bruteforce(a, b, a_axes, b_axes)
    raise ValueError(f"unknown contraction method {method!r}")


def onto_contract(a: Hypermatrix, b: Hypermatrix, rs, method: str = "expression") -> Hypermatrix:
    """Pair a whole hypermatrix against a subset of a's axes.

    ``b``'s shape must equal a's dims at the (increasing) axes ``rs``;
    axis t of b pairs with axis rs[t] of a.  Two realisations:

    * ``expression``: multiply the (free x rs) expression of a by b's
      flat column;
    * ``stp``: gather a's flat row through the transposed permutation
      matrix that brings the rs axes to the front, then take the
      matrix-matrix semi-tensor product with b's flat column.
    """
    rs = _check_axes("contracted", a.order, rs)
    if list(rs) != sorted(rs):
        raise ValueError(f"axes {rs} must be increasing")
    expect = tuple(a.dims[x - 1] for x in rs)
    if b.dims != expect:
        raise ValueError(f"operand shape {b.dims} does not match dims {expect} at axes {rs}")
    if a.kind != b.kind:
        raise ValueError(f"scalar kind mismatch: {a.kind} vs {b.kind}")
    free = _free_axes(a.order, rs)
    out_dims = tuple(a.dims[x - 1] for x in free)
    if method == "expression":
        ma = matrix_expression(a, rows=free, cols=rs)
        flat = np.dot(ma.mat, b.data)
        return Hypermatrix(out_dims, flat.copy(), a.kind)
    if method == "stp":
        front = split_permutation(a.order, rs)
        row = build_perm_matrix(a.dims, front, warn_degenerate=False).transpose().gather_row(a.data)
        flat = mm_stp(row.reshape(1, -1), b.data.reshape(-1, 1))
        return Hypermatrix(out_dims, flat.reshape(-1).copy(), a.kind)
    raise ValueError(f"unknown onto-contract method {method!r}")


# -- hypervectors and multilinear evaluation ----------------------------


def hypervector_expand(factors, kind: str | None = None) -> Hypermatrix:
    """Rank-one hypermatrix whose entries are the factor products.

    The flat data is the Kronecker chain of the factors, so the entry at
    (i_1, ..., i_d) is ``x_1[i_1] * ... * x_d[i_d]``.
    """
    chain = kron_chain(factors)
    dims = tuple(np.asarray(f).size for f in factors)
    inferred = "float" if chain.dtype == np.float64 else "int"
    return Hypermatrix(dims, chain, kind or inferred)


def eval_multilinear_scalar(pi: Hypermatrix, xs) -> object:
    """Scalar multilinear form: fold the flat row through the arguments.

    The semi-tensor chain of the 1 x n flat expression with the argument
    columns peels one axis per factor; with basis arguments it reads the
    coefficient entries straight off.
    """
    xs = list(xs)
    if len(xs) != pi.order:
        raise ValueError(f"{len(xs)} arguments for order {pi.order}")
    for k, x in enumerate(xs, start=1):
        if np.asarray(x).size != pi.dims[k - 1]:
            raise ValueError(f"argument {k} has length {np.asarray(x).size}, expected {pi.dims[k - 1]}")
    acc = pi.data.reshape(1, -1)
    for x in xs:
        acc = mm_stp(acc, np.asarray(x).reshape(-1, 1))
    return acc.reshape(-1)[0]


def eval_multilinear_vector(m: MatrixExpression, xs) -> np.ndarray:
    """Vector-valued multilinear map from a one-row-axis expression.

    ``m`` must have exactly one row axis; the arguments follow the
    column-axis order and are folded in by semi-tensor products.
    """
    if len(m.row_axes) != 1:
        raise ValueError(f"expression has row axes {m.row_axes}; need exactly one")
    xs = list(xs)
    if len(xs) != len(m.col_axes):
        raise ValueError(f"{len(xs)} arguments for {len(m.col_axes)} column axes")
    for k, (ax, x) in enumerate(zip(m.col_axes, xs), start=1):
        if np.asarray(x).size != m.dims[ax - 1]:
            raise ValueError(f"argument {k} has length {np.asarray(x).size}, expected {m.dims[ax - 1]}")
    acc = m.mat
    for x in xs:
        acc = mm_stp(acc, np.asarray(x).reshape(-1, 1))
    return acc.reshape(-1)


def eval_tensor(omega: Hypermatrix, covectors, vectors) -> object:
    """Mixed tensor evaluation through the general matrix expression.

    ``omega`` has order r+s over one dimension n, with the first r axes
    fed by column vectors and the last s by row covectors.  The covector
    chain is folded right to left (a row semi-tensor chain reverses the
    Kronecker order), the expression sits in the middle, and the vectors
    fold in on the right.
    """
    covectors = [np.asarray(w).reshape(-1) for w in covectors]
    vectors = [np.asarray(x).reshape(-1) for x in vectors]
    r, s = len(vectors), len(covectors)
    if omega.order != r + s:
        raise ValueError(f"order {omega.order} tensor with {r} vectors and {s} covectors")
    if omega.order and len(set(omega.dims)) != 1:
        raise ValueError(f"shape {omega.dims} is not hypercubic")
    n = omega.dims[0] if omega.order else 1
    for w in covectors + vectors:
        if w.size != n:
            raise ValueError(f"argument of length {w.size}, expected {n}")
    m = matrix_expression(omega, rows=tuple(range(r + 1, r + s + 1)), cols=tuple(range(1, r + 1)))
    acc = None
    for j in range(1, s + 1):
        w = covectors[s - j].reshape(1, -1)
        acc = w if acc is None else mm_stp(acc, w)
    acc = m.mat if acc is None else mm_stp(acc, m.mat)
    for x in vectors:
        acc = mm_stp(acc, x.reshape(-1, 1))
    return acc.reshape(-1)[0]


# -- block operators -----------------------------------------------------


def _check_blocks(a: Hypermatrix, block_dims: tuple[int, ...], k: int):
    if a.order != (k + 1) * len(block_dims):
        raise ValueError(f"operator of order {a.order} cannot take {k} operands of order {len(block_dims)}")
    for blk in range(k + 1):
        lo = blk * len(block_dims)
        got = a.dims[lo : lo + len(block_dims)]
        if got != block_dims:
            raise ValueError(f"block {blk + 1} has dims {got}, expected {block_dims}")


def unary_apply(a: Hypermatrix, b: Hypermatrix) -> Hypermatrix:
    """Order-2d operator acting on one order-d operand.

    Pairs the trailing d axes of the operator with the operand.
    """
    d = b.order
    _check_blocks(a, b.dims, 1)
    return contract_bruteforce(a, b, tuple(range(d + 1, 2 * d + 1)), tuple(range(1, d + 1)))


def binary_apply(a: Hypermatrix, b: Hypermatrix, c: Hypermatrix) -> Hypermatrix:
    """Order-3d operator acting on two order-d operands.

    The first operand binds the last axis block, then the second operand
    binds the block before it; the nesting is literal, not fused.
    """
    d = b.order
    if c.dims != b.dims:
        raise ValueError(f"operand shapes differ: {b.dims} vs {c.dims}")
    _check_blocks(a, b.dims, 2)
    first = contract_bruteforce(a, b, tuple(range(2 * d + 1, 3 * d + 1)), tuple(range(1, d + 1)))
    return contract_bruteforce(first, c, tuple(range(d + 1, 2 * d + 1)), tuple(range(1, d + 1)))


def kary_apply(a: Hypermatrix, operands) -> Hypermatrix:
    """Order-(k+1)d operator acting on k order-d operands.

    Extends the binary pattern: operand t binds what is then the last
    axis block, working inward from the end.
    """
    operands = list(operands)
    if not operands:
        raise ValueError("need at least one operand")
    d = operands[0].order
    for b in operands:
        if b.dims != operands[0].dims:
            raise ValueError(f"operand shapes differ: {operands[0].dims} vs {b.dims}")
    k = len(operands)
    _check_blocks(a, operands[0].dims, k)
    acc = a
    for t, b in enumerate(operands):
        lo = (k - t) * d
        acc = contract_bruteforce(acc, b, tuple(range(lo + 1, lo + d + 1)), tuple(range(1, d + 1)))
    return acc
