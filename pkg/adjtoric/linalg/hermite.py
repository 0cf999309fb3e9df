from typing import List, Tuple

import numpy as np

from adjtoric.linalg.lattice import lll_reduce
from adjtoric.linalg.matrix import as_int_matrix, identity


def exgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Extended gcd: (g, x, y) with x*a + y*b = g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _combine_columns(h, u, p, j, row):
    """Replace columns p, j by a determinant-one combination zeroing h[row, j]."""
    a, b = h[row, p], h[row, j]
    g, x, y = exgcd(a, b)
    ag, bg = a // g, b // g
    for mat in (h, u):
        col_p, col_j = mat[:, p].copy(), mat[:, j].copy()
        mat[:, p] = x * col_p + y * col_j
        mat[:, j] = -bg * col_p + ag * col_j


def hermite_normal_form(m) -> Tuple[np.ndarray, np.ndarray]:
    """Column-style Hermite normal form.

    Returns (h, u) with h = m @ u and u unimodular. The nonzero columns of h
    are in echelon form with positive pivots, entries left of each pivot
    reduced into [0, pivot); the trailing columns of h are zero.
    """
    h = as_int_matrix(m)
    rows, cols = h.shape
    u = identity(cols)
    p = 0
    for row in range(rows):
        if p >= cols:
            break
        for j in range(p + 1, cols):
            if h[row, j] != 0:
                _combine_columns(h, u, p, j, row)
        if h[row, p] == 0:
            continue
        if h[row, p] < 0:
            h[:, p] = -h[:, p]
            u[:, p] = -u[:, p]
        pivot = h[row, p]
        for j in range(p):
            q = h[row, j] // pivot
            if q:
                h[:, j] = h[:, j] - q * h[:, p]
                u[:, j] = u[:, j] - q * u[:, p]
        p += 1
    return h, u


def _normalize_sign(v: List[int]) -> List[int]:
    lead = next((x for x in v if x != 0), 0)
    return [-x for x in v] if lead < 0 else v


def _kernel_columns(m) -> List[List[int]]:
    m = as_int_matrix(m)
    rows, cols = m.shape
    if cols == 0:
        return []
    h, u = hermite_normal_form(m)
    return [[int(x) for x in u[:, j]] for j in range(cols) if all(h[i, j] == 0 for i in range(rows))]


def integer_kernel(m) -> List[Tuple[int, ...]]:
    """Lattice basis of {z integral : m z = 0}.

    The zero columns of the Hermite form pick out the corresponding columns
    of the unimodular transform; those form a basis of the kernel lattice.
    That basis is LLL-reduced, then each vector is sign-normalized (first
    nonzero entry positive).
    """
    return [tuple(_normalize_sign(list(v))) for v in lll_reduce(_kernel_columns(m))]


def rank(m) -> int:
    m = as_int_matrix(m)
    return m.shape[1] - len(_kernel_columns(m))
