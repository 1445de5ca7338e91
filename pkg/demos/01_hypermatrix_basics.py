"""Tour of the core container: shapes, 1-based indices, and flat ID order.

An order-d hypermatrix stores its entries in one flat vector, ordered so
the first index is most significant and the last one ticks fastest.
"""

import hyperstp as hs

# A 2 x 3 x 2 array filled with 1..12 in storage order.
a = hs.Hypermatrix.from_flat((2, 3, 2), list(range(1, 13)))
print("shape:", a.dims, " order:", a.order, " size:", a.size)

# Indices are 1-based tuples; the flat rank of (1,2,1) is 3, so its entry is 3.
print("rank of (1,2,1):", hs.linearize(a.dims, (1, 2, 1)))
print("entry at (1,2,1):", a.get((1, 2, 1)))
print("index at rank 12:", hs.delinearize(a.dims, 12))

# Iteration follows the same total order.
print("first four items:", [(idx, v) for idx, v in list(a.items())[:4]])

# The numpy view shares storage and is read-only.
print("as ndarray:\n", a.nd)

# Two scalar backends: exact integers and binary64 floats.
exact = hs.Hypermatrix.from_flat((2,), [2 ** 80, -1])
print("exact backend keeps big integers:", list(exact.data))
approx = hs.Hypermatrix.from_flat((2,), [0.1, 0.2])
print("float backend:", approx.kind, approx.data.tolist())

# Comparison: exact backends compare exactly, floats take a tolerance.
b = hs.Hypermatrix.from_flat((2,), [0.1, 0.2 + 1e-15])
print("approx_equal at 1e-12:", approx.approx_equal(b, 1e-12))
