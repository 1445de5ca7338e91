"""The 2^d matrix expressions of a hypermatrix, and moving between them.

Splitting the d axes into a row tuple and a column tuple flattens the
array into a matrix whose rows and columns are ordered like the flat
storage.  All the splits hold the same entries, so any one converts into
any other by a single permutation-matrix gather.
"""

import numpy as np

import hyperstp as hs

a = hs.Hypermatrix.from_flat((2, 3, 2), list(range(1, 13)))

flat = hs.matrix_expression(a, rows=())          # 1 x 12 vector expression
m2 = hs.matrix_expression(a, rows=(2,))          # 3 x 4
m13 = hs.matrix_expression(a, rows=(1, 3))       # 4 x 3
print("vector expression:", flat.mat[0].tolist())
print("rows=(2):\n", m2.mat)
print("rows=(1,3):\n", m13.mat)

# Transposing an expression swaps its axis tuples.
t = hs.transpose_expr(m2)
print("transpose has rows", t.row_axes, "cols", t.col_axes)

# Conversion without touching the source array.
converted = hs.convert_expression(m2, (1, 3))
print("convert (2) -> (1,3) matches direct:", np.array_equal(converted.mat, m13.mat))

# Vector form -> matrix form -> vector form round trip.
again = hs.matrix_form_to_vec(hs.vec_to_matrix_form(a.data, a.dims, (2,)))
print("round trip intact:", list(again) == list(a.data))

# Axis permutation two ways: index shuffle vs permutation-matrix gather.
sigma = hs.Permutation((2, 1, 3))
print("transpose routes agree:",
      hs.sigma_transpose(a, sigma) == hs.sigma_transpose_via_perm(a, sigma))

# Symmetry of hypercubic arrays is invariance under all axis permutations.
sym = hs.Hypermatrix.from_flat((2, 2), [1, 5, 5, 2])
print("symmetric 2x2:", hs.is_symmetric(sym))

# Row/column stacking operators and their reshapes.
mat = np.array([[1, 2], [3, 4]])
print("vr:", hs.vr(mat).tolist(), " vc:", hs.vc(mat).tolist())
print("vrs back to matrix:\n", hs.vrs(hs.vr(mat), 2))
