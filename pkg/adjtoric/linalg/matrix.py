from typing import Sequence

import numpy as np


def as_int_matrix(rows) -> np.ndarray:
    """Integer matrix as a numpy object array of Python ints.

    Object dtype keeps arbitrary precision; every kernel in the package
    works on these arrays.
    """
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        return np.array([[int(x) for x in row] for row in rows], dtype=object).reshape(rows.shape)
    rows = [list(row) for row in rows]
    if not rows:
        return np.empty((0, 0), dtype=object)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("Ragged matrix: all rows must have the same length")
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = int(x)
    return out


def as_int_vector(entries: Sequence[int]) -> np.ndarray:
    out = np.empty(len(entries), dtype=object)
    for i, x in enumerate(entries):
        out[i] = int(x)
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of two object matrices (empty shapes included)."""
    rows, inner = a.shape
    inner_b, cols = b.shape
    if inner != inner_b:
        raise ValueError(f"Shape mismatch: {a.shape} x {b.shape}")
    out = np.empty((rows, cols), dtype=object)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = sum((a[i, k] * b[k, j] for k in range(inner)), 0)
    return out


def determinant(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = as_int_matrix(m)
    rows, cols = m.shape
    if rows != cols:
        raise ValueError(f"Determinant needs a square matrix, got {rows}x{cols}")
    if rows == 0:
        return 1

    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(rows - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, rows) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, rows):
            for j in range(k + 1, rows):
                # exact: Sylvester's identity guarantees divisibility
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[rows - 1][rows - 1]
