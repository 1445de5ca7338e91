"""Permutations of axis positions and their sparse permutation matrices.

A permutation of degree d is stored as its image array
``(sigma(1), ..., sigma(d))`` with 1-based values.  The associated
permutation matrix ``W`` acting on Kronecker chains is kept in logical
(column-index) form: an m x n matrix whose column j is the basis vector
``delta_m^{c_j}`` is stored as just the list ``(c_1, ..., c_n)``.  All
matrix actions are index gathers, never dense multiplies.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Sequence

import numpy as np

from .core import check_dims, delinearize, empty_like_kind, linearize, size_of


class Permutation:
    """Element of S_d as the 1-based image array (sigma(1), ..., sigma(d))."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(int(v) for v in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"{image} is not a bijection of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(1, d + 1))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation{self.image}"

    def parity(self) -> int:
        """Sign of the permutation (+1 even, -1 odd) via cycle counting."""
        seen = [False] * self.degree
        sign = 1
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.image[k] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for k, v in enumerate(self.image, start=1):
            inv[v - 1] = k
        return Permutation(inv)


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """Composition oriented so the matrix product law holds.

    Returns the permutation ``r`` with
    ``build_perm_matrix(dims, r) == build_perm_matrix(dims, p) * build_perm_matrix(dims, q)``
    for uniform dims, which works out to ``r(k) = q(p(k))``.
    """
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(q(p(k)) for k in range(1, p.degree + 1))


def perm_invert(p: Permutation) -> Permutation:
    return p.inverse()


def parity(p: Permutation) -> int:
    return p.parity()


class LogicalMatrix:
    """m x n matrix of basis-vector columns, stored as column row-positions."""

    __slots__ = ("rows", "cols")

    def __init__(self, rows: int, cols: Iterable[int]):
        rows = int(rows)
        cols = tuple(int(c) for c in cols)
        if rows < 1:
            raise ValueError("a logical matrix needs at least one row")
        for j, c in enumerate(cols, start=1):
            if not 1 <= c <= rows:
                raise ValueError(f"column {j} points at row {c}, outside [1, {rows}]")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("LogicalMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "LogicalMatrix":
        return cls(n, range(1, n + 1))

    @property
    def n_cols(self) -> int:
        return len(self.cols)

    def is_permutation(self) -> bool:
        return self.rows == self.n_cols and sorted(self.cols) == list(range(1, self.rows + 1))

    def __eq__(self, other):
        if not isinstance(other, LogicalMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self):
        return f"LogicalMatrix(rows={self.rows}, cols={self.cols})"

    # -- actions -----------------------------------------------------

    def apply(self, x) -> np.ndarray:
        """Gather-product ``W @ x``: out[r] = sum of x[j] over cols[j] == r."""
        x = np.asarray(x)
        if x.size != self.n_cols:
            raise ValueError(f"vector of length {x.size} against {self.n_cols} columns")
        if x.dtype != object and not np.issubdtype(x.dtype, np.integer) and x.dtype != bool:
            x = x.astype(np.float64)
        elif x.dtype != object:
            x = x.astype(object)
        out = empty_like_kind("float" if x.dtype == np.float64 else "int", self.rows)
        np.add.at(out, np.asarray(self.cols) - 1, x.reshape(-1))
        return out

    def gather_row(self, v) -> np.ndarray:
        """Row-vector product ``v @ W``: out[j] = v[cols[j]]."""
        v = np.asarray(v)
        if v.size != self.rows:
            raise ValueError(f"row vector of length {v.size} against {self.rows} rows")
        return v.reshape(-1)[np.asarray(self.cols) - 1]

    def compose(self, other: "LogicalMatrix") -> "LogicalMatrix":
        """Matrix product of two logical matrices (stays logical)."""
        if self.n_cols != other.rows:
            raise ValueError(f"size mismatch: {self.rows}x{self.n_cols} times {other.rows}x{other.n_cols}")
        return LogicalMatrix(self.rows, (self.cols[c - 1] for c in other.cols))

    def transpose(self) -> "LogicalMatrix":
        """Transpose; only defined when the columns form a permutation."""
        if not self.is_permutation():
            raise ValueError("transpose of a non-permutation logical matrix is not logical")
        inv = [0] * self.rows
        for j, c in enumerate(self.cols, start=1):
            inv[c - 1] = j
        return LogicalMatrix(self.rows, inv)

    def invert(self) -> "LogicalMatrix":
        """Inverse; equals the transpose for permutation columns."""
        return self.transpose()


def compose_lm(w1: LogicalMatrix, w2: LogicalMatrix) -> LogicalMatrix:
    return w1.compose(w2)


def transpose_lm(w: LogicalMatrix) -> LogicalMatrix:
    return w.transpose()


def invert_lm(w: LogicalMatrix) -> LogicalMatrix:
    return w.invert()


def build_perm_matrix(dims: Sequence[int], sigma: Permutation, *, warn_degenerate: bool = True) -> LogicalMatrix:
    """Permutation matrix reordering a Kronecker chain of d vectors.

    ``W`` is the n x n logical matrix (n = prod dims) with
    ``W @ (x_1 kron ... kron x_d) = x_sigma(1) kron ... kron x_sigma(d)``
    for any vectors ``x_i`` of lengths ``dims[i]``.

    Construction: column c corresponds to the multi-index
    ``m = delinearize(c)`` over ``dims``; the column content is the chain
    ``delta^{j_1} kron ... kron delta^{j_d}`` with ``j_k = m[sigma(k)]``
    over the permuted dims, i.e. the single 1 sits at row
    ``linearize((j_1, ..., j_d))`` over ``(dims[sigma(1)], ..., dims[sigma(d)])``.

    Dimensions below 2 degenerate gracefully; direct calls get a warning
    since such matrices rarely mean what the caller hoped.
    """
    dims = check_dims(dims)
    if isinstance(sigma, (tuple, list)):
        sigma = Permutation(sigma)
    if sigma.degree != len(dims):
        raise ValueError(f"permutation of degree {sigma.degree} for shape of order {len(dims)}")
    if warn_degenerate and any(n < 2 for n in dims):
        warnings.warn("permutation matrix over dims with entries < 2 degenerates", stacklevel=2)
    permuted = tuple(dims[sigma(k) - 1] for k in range(1, len(dims) + 1))
    n = size_of(dims)
    cols = []
    for c in range(1, n + 1):
        m = delinearize(dims, c)
        j = tuple(m[sigma(k) - 1] for k in range(1, len(dims) + 1))
        cols.append(linearize(permuted, j))
    return LogicalMatrix(n, cols)


def perm_matrix_transposed(dims: Sequence[int], sigma: Permutation) -> LogicalMatrix:
    """Transpose of ``build_perm_matrix(dims, sigma)``.

    For uniform dims this equals ``build_perm_matrix(dims, sigma.inverse())``;
    for mixed dims the inverse lives over the permuted dims instead, so the
    transpose is the safe general form.
    """
    return build_perm_matrix(dims, sigma).transpose()
