"""The semi-tensor product family: matrix products without matching dims.

The matrix-matrix form pads both factors with Kronecker identity blocks
up to the lcm of the inner dimensions; the matrix-vector and
vector-vector forms replicate the vector side entrywise instead.  When
dimensions already match, everything collapses to the ordinary product.
"""

import numpy as np

import hyperstp as hs

a = np.array([[1, 1], [1, -1]])
x = np.array([1, 2, 3, 4])

print("mm of 2x2 and 2x2 is plain:", hs.mm_stp(a, np.eye(2, dtype=int)).tolist())
print("mv with a length-4 vector:", hs.mv_stp(a, x).tolist())
print("vv of lengths 2 and 3:", hs.vv_stp([1, 2], [1, 1, 1]))

# Associativity holds across shapes.
b = np.array([[2, 0, 1]])
c = np.array([[1], [2]])
left = hs.mm_stp(hs.mm_stp(a, b), c)
right = hs.mm_stp(a, hs.mm_stp(b, c))
print("associative:", np.array_equal(left, right))

# Vectors of different lengths form a vector space of sorts.
s = hs.vec_oplus([1, 2], [10, 20, 30])
print("dimension-free sum:", s.tolist())
print("inner product:", hs.stp_inner([1, 1], [1, 1, 1]))
print("norm of (3,4):", hs.stp_norm(np.array([3.0, 4.0])))
print("distance to itself:", hs.stp_distance(np.array([1.0, 2.0]), np.array([1.0, 2.0])))

# The stacked identity columns turn row stacking into a product.
m = np.array([[1, 2, 3], [4, 5, 6]])
stacked = hs.mm_stp(m, hs.delta_I(3).reshape(-1, 1)).reshape(-1)
print("row stacking via product:", stacked.tolist(), "==", hs.vr(m).tolist())

# A one-step linear map on the dimension-free space.
step = np.array([[0, 1], [1, 0]])
state = np.array([1, 2, 3])
for _ in range(3):
    state = hs.mv_stp(step, state)
    print("next state:", state.tolist())
