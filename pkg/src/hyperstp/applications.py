"""Worked multilinear-algebra applications built on the core machinery.

Each application packages a structure-constant fixture plus an evaluator:
the cross product on R^3, the commutator bracket on 2x2 matrices, finite
game payoffs, and both sides of the Yang-Baxter constraint computed two
independent ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Hypermatrix
from .contraction import contract_bruteforce, eval_multilinear_scalar, eval_multilinear_vector
from .expression import MatrixExpression, matrix_expression, split_permutation, vc, vcs, vr, vrs
from .permutation import build_perm_matrix

# -- cross product -------------------------------------------------------

# Structure-constant matrix of the cross product: one row axis (the
# output), columns over the two argument axes; column (i, j) holds the
# coordinates of e_i x e_j.
_CROSS_COLS = (
    (0, 0, 0),   # (1,1)
    (0, 0, 1),   # (1,2)
    (0, -1, 0),  # (1,3)
    (0, 0, -1),  # (2,1)
    (0, 0, 0),   # (2,2)
    (1, 0, 0),   # (2,3)
    (0, 1, 0),   # (3,1)
    (-1, 0, 0),  # (3,2)
    (0, 0, 0),   # (3,3)
)


def cross_product_expression(kind: str = "int") -> MatrixExpression:
    """The 3 x 9 structure-constant expression of the cross product."""
    mat = np.array(_CROSS_COLS, dtype=object).T
    data = [float(v) for v in mat.reshape(-1)] if kind == "float" else mat.reshape(-1)
    hm = Hypermatrix((3, 3, 3), data, kind)
    return matrix_expression(hm, rows=(1,), cols=(2, 3))


def cross_product(x, y) -> np.ndarray:
    """Cross product on R^3 evaluated through the multilinear machinery."""
    x = np.asarray(x).reshape(-1)
    y = np.asarray(y).reshape(-1)
    if x.size != 3 or y.size != 3:
        raise ValueError("cross product takes two length-3 vectors")
    kind = "int" if x.dtype.kind in "iu" and y.dtype.kind in "iu" else "float"
    out = eval_multilinear_vector(cross_product_expression(kind), [x, y])
    return out if kind == "int" else np.asarray(out, dtype=np.float64)


# -- commutator bracket on 2x2 matrices ----------------------------------


def _structure_matrix(basis, vec_fn) -> np.ndarray:
    """Columns (i, j) of the bracket table [B_i, B_j] under a vectorisation."""
    k = len(basis)
    mat = np.zeros((k, k * k), dtype=object)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            mat[:, i * k + j] = vec_fn(np.dot(bi, bj) - np.dot(bj, bi))
    return mat


def _gl2_basis_colstack():
    """Basis whose column stackings are the standard basis vectors."""
    out = []
    for k in range(4):
        b = np.zeros((2, 2), dtype=object)
        b[k % 2, k // 2] = 1
        out.append(b)
    return out


def _gl2_basis_rowstack():
    """Basis whose row stackings are the standard basis vectors."""
    out = []
    for k in range(4):
        b = np.zeros((2, 2), dtype=object)
        b[k // 2, k % 2] = 1
        out.append(b)
    return out


def gl2_structure_matrix() -> np.ndarray:
    """Bracket structure constants, column-stacking convention (4 x 16)."""
    return _structure_matrix(_gl2_basis_colstack(), vc)


def gl2_bracket(x, y) -> np.ndarray:
    """Commutator of two 2x2 matrices via the structure-constant chain.

    The column stacking of the result is the structure matrix folded with
    the column stackings of the arguments; it must (and does) equal
    ``x @ y - y @ x``.
    """
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != (2, 2) or y.shape != (2, 2):
        raise ValueError("bracket takes two 2x2 matrices")
    m = gl2_structure_matrix()
    hm = Hypermatrix((4, 4, 4), m.reshape(-1), "int")
    out = eval_multilinear_vector(matrix_expression(hm, rows=(1,), cols=(2, 3)), [vc(x), vc(y)])
    return vcs(out, 2)


# The published bracket table, column by column, exactly as printed
# (including its glossed dense expansions); columns follow (i, j) with j
# fastest.  Kept verbatim for erratum reporting, never for evaluation.
GL2_PUBLISHED_COLUMNS = (
    (0, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, 0),
    (0, -1, 0, 0),
    (0, 0, 0, 0),
    (1, 0, 0, -4),
    (0, 0, 0, 0),
    (0, 0, 1, 0),
    (-1, 0, 0, 4),
    (0, 0, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, 0),
    (0, 0, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 0),
)


def gl2_published_matrix() -> np.ndarray:
    return np.array(GL2_PUBLISHED_COLUMNS, dtype=object).T


def gl2_published_errata() -> list[dict]:
    """Columns where the published table deviates from the commutator.

    The published table indexes basis elements row by row (its basis
    labels match row stackings), so the comparison is made in that same
    convention.  Four columns deviate: two glossed entries carry the
    basis label where the coefficient belongs, and two brackets with the
    corner element were dropped to zero.
    """
    derived = _structure_matrix(_gl2_basis_rowstack(), vr)
    published = gl2_published_matrix()
    errata = []
    for col in range(16):
        if list(published[:, col]) != list(derived[:, col]):
            errata.append(
                {
                    "column": col + 1,
                    "pair": (col // 4 + 1, col % 4 + 1),
                    "published": tuple(published[:, col]),
                    "derived": tuple(derived[:, col]),
                }
            )
    return errata


# -- finite games ---------------------------------------------------------


@dataclass(frozen=True)
class GamePayoff:
    """Per-player payoff hypermatrices over the joint strategy space."""

    strategy_counts: tuple[int, ...]
    payoffs: tuple[Hypermatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "strategy_counts", tuple(int(k) for k in self.strategy_counts))
        object.__setattr__(self, "payoffs", tuple(self.payoffs))
        for i, d in enumerate(self.payoffs, start=1):
            if d.dims != self.strategy_counts:
                raise ValueError(f"payoff {i} has shape {d.dims}, expected {self.strategy_counts}")


def game_payoff(game: GamePayoff, xs: Sequence) -> list:
    """Expected payoff of every player under the given strategy vectors.

    Pure strategies are basis vectors (the evaluation then reads entries
    directly); mixed strategies are arbitrary distributions.
    """
    xs = list(xs)
    if len(xs) != len(game.strategy_counts):
        raise ValueError(f"{len(xs)} strategy vectors for {len(game.strategy_counts)} players")
    return [eval_multilinear_scalar(d, xs) for d in game.payoffs]


# -- Yang-Baxter -----------------------------------------------------------


@dataclass(frozen=True)
class YbeInstance:
    """A candidate solution: an order-4 hypermatrix over one dimension."""

    n: int
    r: Hypermatrix

    def __post_init__(self):
        if self.r.dims != (self.n,) * 4:
            raise ValueError(f"shape {self.r.dims} is not ({self.n},)*4")


def _ybe_t(inst: YbeInstance) -> Hypermatrix:
    """The pairing of two copies: last axis of one against first of the other."""
    return contract_bruteforce(inst.r, inst.r, (4,), (1,))


def _gather_flat(flat: np.ndarray, dims: tuple[int, ...], rows: tuple[int, ...]) -> np.ndarray:
    """Flat vector of the transpose that brings ``rows`` to the front."""
    sigma = split_permutation(len(dims), rows)
    return build_perm_matrix(dims, sigma, warn_degenerate=False).transpose().gather_row(flat)


def ybe_sides(inst: YbeInstance, side: str, method: str = "bruteforce") -> Hypermatrix:
    """One side of the Yang-Baxter constraint, order 6 over dimension n.

    * ``bruteforce`` evaluates the nested contracted products directly.
    * ``matrix`` follows the flattened pipeline: form the n^3 x n^3
      product matrix of the double copy, re-split it with the appropriate
      six-axis permutation, and multiply by the (3,4) x (1,2) expression
      of the third copy.

    Both methods agree entry for entry; the brute-force route is the
    oracle.
    """
    side = side.lower()
    if side not in ("lhs", "rhs"):
        raise ValueError(f"side must be 'lhs' or 'rhs', got {side!r}")
    if method in ("bruteforce", "brute"):
        t = _ybe_t(inst)
        if side == "lhs":
            return contract_bruteforce(t, inst.r, (2, 6), (3, 4))
        return contract_bruteforce(inst.r, t, (1, 2), (3, 4))
    if method != "matrix":
        raise ValueError(f"method must be 'bruteforce' or 'matrix', got {method!r}")

    n = inst.n
    dims6 = (n,) * 6
    ma = matrix_expression(inst.r, rows=(1, 2, 3), cols=(4,))
    mb = matrix_expression(inst.r, rows=(1,), cols=(2, 3, 4))
    m_t = np.dot(ma.mat, mb.mat)            # n^3 x n^3, rows (1,2,3), cols (4,5,6)
    m_r = matrix_expression(inst.r, rows=(3, 4), cols=(1, 2)).mat
    v_t = vr(m_t)                            # flat vector of the order-6 pairing
    if side == "lhs":
        m_split = vrs(_gather_flat(v_t, dims6, (1, 3, 4, 5)), n * n)   # n^4 x n^2
        out = np.dot(m_split, m_r)
    else:
        m_split = vrs(_gather_flat(v_t, dims6, (3, 4)), n ** 4)        # n^2 x n^4
        out = np.dot(m_r, m_split)
    return Hypermatrix(dims6, out.reshape(-1).copy(), inst.r.kind)


def ybe_residual(inst: YbeInstance):
    """Largest absolute entry of LHS minus RHS (brute-force evaluation)."""
    lhs = ybe_sides(inst, "lhs")
    rhs = ybe_sides(inst, "rhs")
    return max(abs(a - b) for a, b in zip(lhs.data, rhs.data))
