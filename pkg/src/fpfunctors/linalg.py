"""Exact integer linear algebra on numpy object arrays.

Matrices are ``numpy.ndarray`` with ``dtype=object`` holding Python ints, so
arithmetic never overflows.  Zero-dimensional shapes such as ``(0, 5)`` are
allowed everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionError


def matrix(data, shape=None) -> np.ndarray:
    """Build an exact integer matrix.

    Args:
        data: nested sequence of integers (or an existing array).
        shape: required when ``data`` is empty, e.g. ``matrix([], (3, 0))``.
    """
    if isinstance(data, np.ndarray) and data.dtype == object and data.ndim == 2:
        if shape is not None and data.shape != tuple(shape):
            raise DimensionError(f"expected shape {shape}, got {data.shape}")
        return data
    rows = [[int(x) for x in row] for row in data]
    if shape is None:
        if not rows:
            raise DimensionError("shape is required for an empty matrix")
        shape = (len(rows), len(rows[0]))
    m, n = shape
    out = np.zeros((m, n), dtype=object)
    if m and n:
        if len(rows) != m or any(len(r) != n for r in rows):
            raise DimensionError(f"ragged data does not match shape {shape}")
        for i, row in enumerate(rows):
            out[i, :] = row
    elif len(rows) not in (0, m) or any(len(r) for r in rows):
        raise DimensionError(f"data does not match shape {shape}")
    return out


def zeros(m: int, n: int) -> np.ndarray:
    return np.zeros((m, n), dtype=object)


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def diagonal(entries, shape=None) -> np.ndarray:
    entries = [int(e) for e in entries]
    m, n = shape if shape is not None else (len(entries), len(entries))
    out = zeros(m, n)
    for i, e in enumerate(entries):
        out[i, i] = e
    return out


def hstack(*blocks) -> np.ndarray:
    return np.concatenate(blocks, axis=1).astype(object)


def vstack(*blocks) -> np.ndarray:
    return np.concatenate(blocks, axis=0).astype(object)


def block_diag(*blocks) -> np.ndarray:
    m = sum(b.shape[0] for b in blocks)
    n = sum(b.shape[1] for b in blocks)
    out = zeros(m, n)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def is_zero(A: np.ndarray) -> bool:
    return not any(x != 0 for x in A.flat)


def to_lists(A: np.ndarray) -> list[list[int]]:
    return [[int(x) for x in row] for row in A]


@dataclass(frozen=True, eq=False)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` in Smith form.

    ``U_inv`` and ``V_inv`` are the exact inverses, accumulated alongside.
    """

    U: np.ndarray
    S: np.ndarray
    V: np.ndarray
    U_inv: np.ndarray
    V_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.S.shape)
        return [int(self.S[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def snf(A) -> SmithDecomposition:
    """Smith normal form with transformation certificates.

    Elimination pivots on the entry of least absolute value.  Every row and
    column operation is applied to ``U``/``V`` and, inverted, to
    ``U_inv``/``V_inv``.
    """
    A = matrix(A) if not isinstance(A, np.ndarray) else A
    m, n = A.shape
    S = to_lists(A)
    U = to_lists(identity(m))
    Ui = to_lists(identity(m))
    V = to_lists(identity(n))
    Vi = to_lists(identity(n))

    def add_row(i, j, k):  # row_i += k * row_j
        Si, Sj = S[i], S[j]
        for c in range(n):
            Si[c] += k * Sj[c]
        Ui_, Uj = U[i], U[j]
        for c in range(m):
            Ui_[c] += k * Uj[c]
        for row in Ui:
            row[j] -= k * row[i]

    def add_col(i, j, k):  # col_i += k * col_j
        for row in S:
            row[i] += k * row[j]
        for row in V:
            row[i] += k * row[j]
        Vj, Vii = Vi[j], Vi[i]
        for c in range(n):
            Vj[c] -= k * Vii[c]

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = S[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            d = S[t][t]
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // d))
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // d))
            # remainders left in the pivot row/column: move the smallest up
            best = None
            for i in range(t + 1, m):
                if S[i][t] and (best is None or abs(S[i][t]) < best[0]):
                    best = (abs(S[i][t]), "r", i)
            for j in range(t + 1, n):
                if S[t][j] and (best is None or abs(S[t][j]) < best[0]):
                    best = (abs(S[t][j]), "c", j)
            if best is not None:
                if best[1] == "r":
                    swap_rows(t, best[2])
                else:
                    swap_cols(t, best[2])
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if S[i][j] % d
                ),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
            for row in Ui:
                row[t] = -row[t]

    return SmithDecomposition(
        U=matrix(U, (m, m)),
        S=matrix(S, (m, n)),
        V=matrix(V, (n, n)),
        U_inv=matrix(Ui, (m, m)),
        V_inv=matrix(Vi, (n, n)),
    )


def solve_with(dec: SmithDecomposition, B) -> np.ndarray | None:
    """Solve ``A @ X == B`` given ``dec = snf(A)``; ``None`` if unsolvable."""
    m, n = dec.S.shape
    B = matrix(B) if not isinstance(B, np.ndarray) else B
    if B.shape[0] != m:
        raise DimensionError(f"cannot solve: A has {m} rows, B has {B.shape[0]}")
    k = B.shape[1]
    C = dec.U @ B if m else zeros(0, k)
    diag = dec.diagonal
    r = dec.rank
    Y = zeros(n, k)
    for i in range(r):
        d = diag[i]
        for c in range(k):
            q, rem = divmod(C[i, c], d)
            if rem:
                return None
            Y[i, c] = q
    for i in range(r, m):
        for c in range(k):
            if C[i, c]:
                return None
    return dec.V @ Y if n else zeros(0, k)


def solve(A, B) -> np.ndarray | None:
    """Return an integer ``X`` with ``A @ X == B``, or ``None`` if none exists.

    Raises:
        DimensionError: if the row counts of ``A`` and ``B`` differ.
    """
    A = matrix(A) if not isinstance(A, np.ndarray) else A
    B = matrix(B) if not isinstance(B, np.ndarray) else B
    if A.shape[0] != B.shape[0]:
        raise DimensionError(
            f"cannot solve: A has {A.shape[0]} rows, B has {B.shape[0]}"
        )
    return solve_with(snf(A), B)


def kernel_basis(A) -> np.ndarray:
    """Columns form a basis of the integer null space of ``A``.

    The basis spans a saturated lattice: it is the tail of the unimodular
    column transform of the Smith decomposition.
    """
    dec = snf(A)
    return dec.V[:, dec.rank :].copy()


def rank_over_fractions(A) -> int:
    """Rank over the rationals by Gaussian elimination on ``Fraction``."""
    A = matrix(A) if not isinstance(A, np.ndarray) else A
    rows = [[Fraction(int(x)) for x in row] for row in A]
    m = len(rows)
    n = A.shape[1]
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, m):
            f = rows[i][c] / p[c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], p)]
        rank += 1
        if rank == m:
            break
    return rank


def determinant(A) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = matrix(A) if not isinstance(A, np.ndarray) else A
    n = A.shape[0]
    if A.shape[1] != n:
        raise DimensionError("determinant of a non-square matrix")
    M = to_lists(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1
