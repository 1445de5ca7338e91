"""Matrix expressions of hypermatrices and conversions between them.

An order-d hypermatrix has a 2-D "matrix expression" for every split of
its axes into an ordered row tuple and column tuple: rows enumerate the
row-axis indices in ID order, columns the column-axis indices.  The empty
row tuple gives the 1 x n vector expression.  Conversions between
expressions are realised by index gathers through permutation matrices
and are verified against direct index-shuffle construction.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .core import Hypermatrix, _coerce_data, check_dims, size_of
from .permutation import Permutation, build_perm_matrix, compose_lm

# -- stacking forms ----------------------------------------------------


def vr(mat) -> np.ndarray:
    """Row stacking: entries row by row, as a flat vector."""
    return np.asarray(mat).reshape(-1).copy()


def vc(mat) -> np.ndarray:
    """Column stacking: entries column by column, as a flat vector."""
    return np.asarray(mat).reshape(-1, order="F").copy()


def vrs(x, s: int) -> np.ndarray:
    """s-row stacking: lay the (row-stacked) entries out s per row."""
    flat = vr(x)
    if s < 1 or flat.size % s:
        raise ValueError(f"{s} does not divide the {flat.size} entries")
    return flat.reshape(-1, s)


def vcs(x, s: int) -> np.ndarray:
    """s-column stacking: lay the (column-stacked) entries out s per column."""
    flat = vc(x)
    if s < 1 or flat.size % s:
        raise ValueError(f"{s} does not divide the {flat.size} entries")
    return flat.reshape(s, -1, order="F")


# -- sigma-transpose ---------------------------------------------------


def _as_perm(sigma, d: int) -> Permutation:
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    if sigma.degree != d:
        raise ValueError(f"permutation of degree {sigma.degree} for order {d}")
    return sigma


def sigma_transpose(a: Hypermatrix, sigma) -> Hypermatrix:
    """Axis permutation: entry at (m_sigma(1), ..., m_sigma(d)) is a_m.

    Result shape is (n_sigma(1), ..., n_sigma(d)); at d = 2 with
    sigma = (2, 1) this is the ordinary matrix transpose.
    """
    sigma = _as_perm(sigma, a.order)
    axes = [sigma(k) - 1 for k in range(1, a.order + 1)]
    nd = np.ascontiguousarray(np.transpose(a.nd, axes))
    dims = tuple(a.dims[ax] for ax in axes)
    return Hypermatrix(dims, nd.reshape(-1), a.kind)


def sigma_transpose_via_perm(a: Hypermatrix, sigma) -> Hypermatrix:
    """Same transpose computed through the permutation matrix.

    The flat vector of the result is the flat vector of ``a`` gathered
    through the transposed permutation matrix (for uniform dims that
    transpose is the matrix of the inverse permutation).
    """
    sigma = _as_perm(sigma, a.order)
    w_t = build_perm_matrix(a.dims, sigma, warn_degenerate=False).transpose()
    dims = tuple(a.dims[sigma(k) - 1] for k in range(1, a.order + 1))
    return Hypermatrix(dims, w_t.gather_row(a.data).copy(), a.kind)


# -- matrix expressions ------------------------------------------------


def _check_partition(d: int, rows: Sequence[int], cols: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rows = tuple(int(r) for r in rows)
    cols = tuple(int(c) for c in cols)
    if sorted(rows + cols) != list(range(1, d + 1)):
        raise ValueError(f"row axes {rows} and column axes {cols} do not partition 1..{d}")
    return rows, cols


def _complement(d: int, axes: Sequence[int]) -> tuple[int, ...]:
    return tuple(k for k in range(1, d + 1) if k not in set(axes))


class MatrixExpression:
    """A 2-D flattening of a hypermatrix, tagged with its axis split."""

    __slots__ = ("mat", "row_axes", "col_axes", "dims", "kind")

    def __init__(self, mat, row_axes, col_axes, dims, kind: str):
        dims = check_dims(dims)
        row_axes, col_axes = _check_partition(len(dims), row_axes, col_axes)
        mat = np.asarray(mat)
        s = math.prod(dims[r - 1] for r in row_axes)
        t = math.prod(dims[c - 1] for c in col_axes)
        if mat.shape != (s, t):
            raise ValueError(f"matrix of shape {mat.shape}, expected {(s, t)} for split {row_axes} x {col_axes}")
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "row_axes", row_axes)
        object.__setattr__(self, "col_axes", col_axes)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "kind", kind)
        self.mat.setflags(write=False)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixExpression is immutable")

    def __repr__(self):
        return f"MatrixExpression(rows={self.row_axes}, cols={self.col_axes}, dims={self.dims}, shape={self.mat.shape})"


def matrix_expression(a: Hypermatrix, rows: Sequence[int], cols: Sequence[int] | None = None) -> MatrixExpression:
    """Direct construction of the expression with the given axis split.

    ``rows`` and ``cols`` may list axes in any order (not only
    increasing); ``cols`` defaults to the complement of ``rows`` in
    increasing order.  Rows enumerate the row-axis indices in ID order
    under the listed axis order, columns likewise.
    """
    rows = tuple(int(r) for r in rows)
    if cols is None:
        cols = _complement(a.order, rows)
    rows, cols = _check_partition(a.order, rows, cols)
    s = math.prod(a.dims[r - 1] for r in rows)
    t = math.prod(a.dims[c - 1] for c in cols)
    axes = [ax - 1 for ax in rows + cols]
    mat = np.ascontiguousarray(np.transpose(a.nd, axes)).reshape(s, t)
    return MatrixExpression(mat, rows, cols, a.dims, a.kind)


def vector_expression(a: Hypermatrix) -> np.ndarray:
    """The flat 1 x n expression (empty row tuple), as a 1-D array."""
    return a.data.copy()


def expression_to_hypermatrix(m: MatrixExpression) -> Hypermatrix:
    """Reassemble the source hypermatrix from any of its expressions."""
    axes = [ax - 1 for ax in m.row_axes + m.col_axes]
    permuted_dims = tuple(m.dims[ax] for ax in axes)
    inv = np.argsort(axes)
    nd = np.ascontiguousarray(np.transpose(m.mat.reshape(permuted_dims), inv))
    return Hypermatrix(m.dims, nd.reshape(-1), m.kind)


# -- conversions through permutation matrices --------------------------


def split_permutation(d: int, rows: Sequence[int]) -> Permutation:
    """The permutation sending natural axis order to (rows, complement)."""
    rows = tuple(int(r) for r in rows)
    return Permutation(rows + _complement(d, rows))


def _require_increasing(rows: Sequence[int]) -> tuple[int, ...]:
    rows = tuple(int(r) for r in rows)
    if list(rows) != sorted(set(rows)):
        raise ValueError(f"row axes {rows} must be strictly increasing here")
    return rows


def vec_to_matrix_form(v, dims, rows, kind: str | None = None) -> MatrixExpression:
    """Vector form to matrix form.

    Gathers the flat vector through the transposed permutation matrix of
    the split permutation (rows, complement) and reshapes with one row
    per row-axis index combination.  ``rows`` must be increasing.
    """
    dims = check_dims(dims)
    rows = _require_increasing(rows)
    if isinstance(v, np.ndarray) and v.dtype in (np.float64, object):
        flat = v.reshape(-1)
        kind = kind or ("float" if v.dtype == np.float64 else "int")
    else:
        flat, kind = _coerce_data(list(np.asarray(v, dtype=object).reshape(-1)), kind)
    if flat.size != size_of(dims):
        raise ValueError(f"vector of length {flat.size} for shape {dims}")
    cols = _complement(len(dims), rows)
    sigma = split_permutation(len(dims), rows)
    shuffled = build_perm_matrix(dims, sigma, warn_degenerate=False).transpose().gather_row(flat)
    t = math.prod(dims[c - 1] for c in cols)
    return MatrixExpression(vrs(shuffled, t), rows, cols, dims, kind)


def matrix_form_to_vec(m: MatrixExpression) -> np.ndarray:
    """Matrix form back to the flat vector form.

    The row stacking of the matrix is the flat vector of the transposed
    hypermatrix; gathering it through the split permutation's matrix
    restores natural order.  Row axes must be increasing.
    """
    _require_increasing(m.row_axes)
    sigma = split_permutation(len(m.dims), m.row_axes)
    return build_perm_matrix(m.dims, sigma, warn_degenerate=False).gather_row(vr(m.mat)).copy()


def convert_expression(m: MatrixExpression, new_rows) -> MatrixExpression:
    """Re-split an expression without going through the hypermatrix.

    Composes the two split-permutation matrices into a single gather:
    unstack, permute, restack.  Both row tuples must be increasing.
    """
    _require_increasing(m.row_axes)
    new_rows = _require_increasing(new_rows)
    d = len(m.dims)
    new_cols = _complement(d, new_rows)
    w_old = build_perm_matrix(m.dims, split_permutation(d, m.row_axes), warn_degenerate=False)
    w_new_t = build_perm_matrix(m.dims, split_permutation(d, new_rows), warn_degenerate=False).transpose()
    combined = compose_lm(w_old, w_new_t)
    shuffled = combined.gather_row(vr(m.mat))
    t = math.prod(m.dims[c - 1] for c in new_cols)
    return MatrixExpression(vrs(shuffled, t), new_rows, new_cols, m.dims, m.kind)


def transpose_expr(m: MatrixExpression) -> MatrixExpression:
    """Swap the axis tuples; the matrix transposes."""
    return MatrixExpression(m.mat.T.copy(), m.col_axes, m.row_axes, m.dims, m.kind)


# -- symmetry ----------------------------------------------------------


def _adjacent_transpositions(d: int):
    for i in range(1, d):
        image = list(range(1, d + 1))
        image[i - 1], image[i] = image[i], image[i - 1]
        yield Permutation(image)


def _require_hypercubic(a: Hypermatrix):
    if a.order > 1 and len(set(a.dims)) != 1:
        raise ValueError(f"shape {a.dims} is not hypercubic")


def is_symmetric(a: Hypermatrix) -> bool:
    """True when every axis permutation leaves the hypermatrix unchanged.

    Checking the adjacent transpositions suffices: they generate the full
    permutation group and invariance is closed under composition.
    """
    _require_hypercubic(a)
    return all(sigma_transpose(a, tau) == a for tau in _adjacent_transpositions(a.order))


def is_skew_symmetric(a: Hypermatrix) -> bool:
    """True when every axis permutation scales the hypermatrix by its sign."""
    _require_hypercubic(a)
    for tau in _adjacent_transpositions(a.order):
        flipped = sigma_transpose(a, tau)
        if not all(x == -y for x, y in zip(flipped.data, a.data)):
            return False
    return True
