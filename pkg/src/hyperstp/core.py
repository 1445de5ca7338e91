"""Order-d hypermatrix storage with 1-based multi-indices in ID order.

A hypermatrix of shape (n1, ..., nd) is a flat array of ``n1*...*nd``
scalars ordered so that the first index is the most significant and the
last index varies fastest (row-major).  All public indices are 1-based;
``d = 0`` is allowed and denotes a scalar.

Two scalar backends are supported:

* ``"int"``  -- exact arbitrary-precision integers (numpy object array),
  so golden comparisons are bit-exact and sums can never silently wrap;
* ``"float"`` -- IEEE binary64.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

import numpy as np

# Largest admissible total size: the platform index type.
MAX_SIZE = np.iinfo(np.intp).max

SCALAR_KINDS = ("int", "float")


def check_dims(dims: Iterable[int]) -> tuple[int, ...]:
    """Validate a shape vector and return it as a tuple.

    Every dimension must be a positive integer and the total size must
    fit the platform index type.
    """
    dims = tuple(int(n) for n in dims)
    for axis, n in enumerate(dims, start=1):
        if n < 1:
            raise ValueError(f"dimension at axis {axis} must be >= 1, got {n}")
    if size_of(dims) > MAX_SIZE:
        raise OverflowError(f"total size of shape {dims} exceeds the index type")
    return dims


def size_of(dims: Iterable[int]) -> int:
    """Total number of entries for a shape (1 for the empty shape)."""
    return math.prod(dims)


def linearize(dims: tuple[int, ...], idx: tuple[int, ...]) -> int:
    """Rank (1-based) of a multi-index in ID order over ``dims``.

    ID order is lexicographic with the first index most significant, so
    the rank is ``1 + sum_k (i_k - 1) * prod_{l>k} n_l``.
    """
    if len(idx) != len(dims):
        raise ValueError(f"index of length {len(idx)} for shape of order {len(dims)}")
    rank = 0
    for axis, (i, n) in enumerate(zip(idx, dims), start=1):
        if not 1 <= i <= n:
            raise IndexError(f"index {i} out of range [1, {n}] at axis {axis}")
        rank = rank * n + (i - 1)
    return rank + 1


def delinearize(dims: tuple[int, ...], rank: int) -> tuple[int, ...]:
    """Multi-index (1-based) at a given flat rank; inverse of linearize."""
    total = size_of(dims)
    if not 1 <= rank <= total:
        raise IndexError(f"rank {rank} out of range [1, {total}]")
    rem = rank - 1
    idx = [0] * len(dims)
    for axis in range(len(dims) - 1, -1, -1):
        rem, pos = divmod(rem, dims[axis])
        idx[axis] = pos + 1
    return tuple(idx)


def iter_indices(dims: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Yield every multi-index of a shape in ID order."""
    total = size_of(dims)
    for rank in range(1, total + 1):
        yield delinearize(dims, rank)


def _coerce_data(values, kind: str | None):
    """Build the flat backing array, inferring the scalar kind if needed."""
    values = list(values)
    if kind is None:
        kind = "int" if all(isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in values) else "float"
    if kind == "int":
        for pos, v in enumerate(values, start=1):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise TypeError(f"non-integer value {v!r} at position {pos} for the int backend")
        arr = np.empty(len(values), dtype=object)
        arr[:] = [int(v) for v in values]
    elif kind == "float":
        arr = np.asarray([float(v) for v in values], dtype=np.float64)
    else:
        raise ValueError(f"unknown scalar kind {kind!r}")
    return arr, kind


class Hypermatrix:
    """Immutable order-d array with flat row-major storage.

    The flat ``data`` vector lists entries in ID order, i.e. entry
    ``(i1, ..., id)`` sits at flat rank ``linearize(dims, idx)``.
    """

    __slots__ = ("dims", "data", "kind")

    def __init__(self, dims, data, kind: str | None = None):
        dims = check_dims(dims)
        fast = (
            isinstance(data, np.ndarray)
            and ((kind == "int" and data.dtype == object) or (kind == "float" and data.dtype == np.float64))
        )
        if fast:
            flat = data.reshape(-1)
        else:
            if isinstance(data, np.ndarray):
                data = data.reshape(-1).tolist()
            flat, kind = _coerce_data(data, kind)
        if flat.size != size_of(dims):
            raise ValueError(f"data length {flat.size} does not match shape {dims} (expected {size_of(dims)})")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "data", flat)
        object.__setattr__(self, "kind", kind)
        self.data.setflags(write=False)

    def __setattr__(self, name, value):
        raise AttributeError("Hypermatrix is immutable")

    # -- construction ------------------------------------------------

    @classmethod
    def from_flat(cls, dims, values, kind: str | None = None) -> "Hypermatrix":
        """Hypermatrix from a flat list of scalars in ID order."""
        return cls(dims, values, kind)

    @classmethod
    def from_nd(cls, array, kind: str | None = None) -> "Hypermatrix":
        """Hypermatrix from a (row-major) numpy array or nested lists."""
        arr = np.asarray(array)
        dims = arr.shape
        return cls(dims, arr.reshape(-1).tolist(), kind)

    @classmethod
    def zeros(cls, dims, kind: str = "int") -> "Hypermatrix":
        zero = 0 if kind == "int" else 0.0
        return cls(dims, [zero] * size_of(check_dims(dims)), kind)

    # -- views -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return self.data.size

    @property
    def nd(self) -> np.ndarray:
        """Read-only numpy view of shape ``dims`` (row-major, zero copy)."""
        return self.data.reshape(self.dims)

    # -- element access ----------------------------------------------

    def get(self, idx: tuple[int, ...]):
        """Entry at a 1-based multi-index."""
        return self.data[linearize(self.dims, tuple(idx)) - 1]

    def items(self) -> Iterator[tuple[tuple[int, ...], object]]:
        """Iterate ``(multi_index, value)`` pairs in ID order."""
        for rank, idx in enumerate(iter_indices(self.dims)):
            yield idx, self.data[rank]

    def to_scalar(self):
        if self.size != 1:
            raise ValueError(f"hypermatrix of shape {self.dims} is not a scalar")
        return self.data[0]

    # -- comparison --------------------------------------------------

    def approx_equal(self, other: "Hypermatrix", tol: float = 0.0) -> bool:
        """Element-wise comparison.

        The int backend compares exactly (tol is ignored); the float
        backend admits ``|a - b| <= tol * max(1, |a|, |b|)`` per entry.
        """
        if self.dims != other.dims:
            raise ValueError(f"shape mismatch: {self.dims} vs {other.dims}")
        if self.kind != other.kind:
            raise ValueError(f"scalar kind mismatch: {self.kind} vs {other.kind}")
        if self.kind == "int":
            return all(a == b for a, b in zip(self.data, other.data))
        a, b = self.data, other.data
        bound = tol * np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
        return bool(np.all(np.abs(a - b) <= bound))

    def __eq__(self, other):
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return (
            self.dims == other.dims
            and self.kind == other.kind
            and all(a == b for a, b in zip(self.data, other.data))
        )

    def __hash__(self):
        return hash((self.dims, self.kind, tuple(self.data)))

    def __repr__(self):
        if self.size <= 8:
            return f"Hypermatrix(dims={self.dims}, data={list(self.data)}, kind={self.kind!r})"
        return f"Hypermatrix(dims={self.dims}, size={self.size}, kind={self.kind!r})"


def empty_like_kind(kind: str, size: int) -> np.ndarray:
    """Zero-initialised flat buffer of a given scalar kind."""
    if kind == "int":
        buf = np.empty(size, dtype=object)
        buf[:] = 0
        return buf
    return np.zeros(size, dtype=np.float64)
