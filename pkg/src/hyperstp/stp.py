"""Semi-tensor products and the dimension-free vector operations.

The matrix-matrix product is generalised by padding both factors with
Kronecker identity blocks up to the least common multiple of the inner
dimensions; the matrix-vector and vector-vector variants replicate the
vector side with a ones block instead.  With these, vectors of different
lengths can be added, compared and measured.

Arrays with integer entries are computed on as exact Python integers
(object dtype); everything else as binary64.
"""

from __future__ import annotations

import math

import numpy as np

from .core import MAX_SIZE


def _normalize(a: np.ndarray) -> np.ndarray:
    if a.dtype == object or a.dtype == np.float64:
        return a
    if np.issubdtype(a.dtype, np.integer) or a.dtype == bool:
        return a.astype(object)
    return a.astype(np.float64)


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim {a.ndim}")
    return _normalize(a)


def _as_vector(x) -> np.ndarray:
    x = np.asarray(x)
    if x.ndim == 2 and 1 in x.shape:
        x = x.reshape(-1)
    if x.ndim != 1:
        raise ValueError(f"expected a vector, got shape {x.shape}")
    return _normalize(x)


def _eye(n: int, dtype) -> np.ndarray:
    if dtype == object:
        eye = np.zeros((n, n), dtype=object)
        for i in range(n):
            eye[i, i] = 1
        return eye
    return np.eye(n, dtype=np.float64)


def _ones(n: int, dtype) -> np.ndarray:
    if dtype == object:
        ones = np.empty(n, dtype=object)
        ones[:] = 1
        return ones
    return np.ones(n, dtype=np.float64)


def _checked_lcm(n: int, p: int) -> int:
    t = math.lcm(n, p)
    if t > MAX_SIZE:
        raise OverflowError(f"lcm({n}, {p}) exceeds the index type")
    return t


def kron(a, b) -> np.ndarray:
    """Kronecker product (dense)."""
    return np.kron(_normalize(np.asarray(a)), _normalize(np.asarray(b)))


def kron_chain(vectors) -> np.ndarray:
    """Kronecker chain of column vectors, as a 1-D array.

    Entry at the ID rank of (i_1, ..., i_d) is the product
    ``x_1[i_1] * ... * x_d[i_d]``.
    """
    vectors = [_as_vector(v) for v in vectors]
    if not vectors:
        raise ValueError("empty chain")
    out = vectors[0]
    for v in vectors[1:]:
        out = np.kron(out, v)
    return out


def mm_stp(a, b) -> np.ndarray:
    """Matrix-matrix semi-tensor product.

    ``(a kron I_{t/n}) @ (b kron I_{t/p})`` with t the lcm of a's column
    count n and b's row count p; reduces to the ordinary product when
    n equals p.
    """
    a, b = _as_matrix(a), _as_matrix(b)
    n, p = a.shape[1], b.shape[0]
    t = _checked_lcm(n, p)
    if t // n > 1:
        a = np.kron(a, _eye(t // n, a.dtype))
    if t // p > 1:
        b = np.kron(b, _eye(t // p, b.dtype))
    return np.dot(a, b)


def mv_stp(a, x) -> np.ndarray:
    """Matrix-vector semi-tensor product.

    ``(a kron I_{t/n}) @ (x kron ones_{t/p})``; the vector side is
    replicated entrywise rather than identity-padded, so the result is a
    vector of length ``rows(a) * t / n``.
    """
    a, x = _as_matrix(a), _as_vector(x)
    n, p = a.shape[1], x.size
    t = _checked_lcm(n, p)
    if t // n > 1:
        a = np.kron(a, _eye(t // n, a.dtype))
    if t // p > 1:
        x = np.kron(x, _ones(t // p, x.dtype))
    return np.dot(a, x)


def vv_stp(x, y):
    """Vector-vector semi-tensor product (a scalar)."""
    x, y = _as_vector(x), _as_vector(y)
    t = _checked_lcm(x.size, y.size)
    if t // x.size > 1:
        x = np.kron(x, _ones(t // x.size, x.dtype))
    if t // y.size > 1:
        y = np.kron(y, _ones(t // y.size, y.dtype))
    return np.dot(x, y)


def vec_oplus(x, y, sign: int = +1) -> np.ndarray:
    """Dimension-free vector addition (subtraction with sign=-1).

    Both vectors are ones-replicated up to the lcm of their lengths and
    then combined entrywise.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    x, y = _as_vector(x), _as_vector(y)
    t = _checked_lcm(x.size, y.size)
    if t // x.size > 1:
        x = np.kron(x, _ones(t // x.size, x.dtype))
    if t // y.size > 1:
        y = np.kron(y, _ones(t // y.size, y.dtype))
    return x + y if sign > 0 else x - y


def stp_inner(x, y):
    """Dimension-free inner product: the vector-vector product over t.

    Exact integer inputs stay exact when t divides the raw product and
    raise otherwise; float inputs divide in binary64.
    """
    x, y = _as_vector(x), _as_vector(y)
    t = _checked_lcm(x.size, y.size)
    raw = vv_stp(x, y)
    if x.dtype == np.float64 or y.dtype == np.float64:
        return float(raw) / t
    if raw % t == 0:
        return raw // t
    raise ValueError(f"inner product {raw}/{t} is not integral; use the float backend")


def stp_norm(x) -> float:
    """Norm induced by the dimension-free inner product (float backend)."""
    x = _as_vector(x)
    if x.dtype != np.float64:
        raise ValueError("norm needs the float backend (square roots are irrational)")
    return math.sqrt(stp_inner(x, x))


def stp_distance(x, y) -> float:
    """Distance: norm of the dimension-free difference (float backend)."""
    x, y = _as_vector(x), _as_vector(y)
    if x.dtype != np.float64 or y.dtype != np.float64:
        raise ValueError("distance needs the float backend (square roots are irrational)")
    return stp_norm(vec_oplus(x, y, -1))


def delta_I(n: int, dtype=object) -> np.ndarray:
    """The stacked identity columns: row stacking of I_n, length n*n.

    Right semi-tensor multiplication by it row-stacks a matrix: the
    product of an m x n matrix with it is the column vector of the
    matrix's rows laid end to end.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    eye = np.zeros(n * n, dtype=dtype)
    one = 1 if dtype == object else 1.0
    for i in range(n):
        eye[i * n + i] = one
    return eye
