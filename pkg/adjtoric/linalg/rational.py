from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from adjtoric.linalg.matrix import as_int_matrix


def solve_rational(m, b: Sequence[int]) -> Optional[List[Fraction]]:
    """Exact solution of m x = b over the rationals.

    Gauss-Jordan elimination on the augmented matrix. Free variables are set
    to zero, so underdetermined systems get a canonical answer. Returns None
    when the system is inconsistent.
    """
    m = as_int_matrix(m)
    rows, cols = m.shape
    if len(b) != rows:
        raise ValueError(f"Right-hand side has length {len(b)}, expected {rows}")

    aug = [[Fraction(int(x)) for x in m[i]] + [Fraction(int(b[i]))] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break

    # a zero row with nonzero right-hand side means 0 = nonzero
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None

    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


def row_space_key(m) -> Tuple[Tuple[int, ...], ...]:
    """Canonical integer basis of the rational row space of ``m``.

    The nonzero rows of the reduced row echelon form, each scaled to a
    primitive integer vector. Matrices with the same row space, hence the
    same kernel, get the same key.
    """
    m = as_int_matrix(m)
    rows, cols = m.shape
    a = [[Fraction(int(x)) for x in m[i]] for i in range(rows)]
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    key = []
    for row in a[:r]:
        scale = lcm(*(x.denominator for x in row))
        ints = [int(x * scale) for x in row]
        g = gcd(*ints)
        key.append(tuple(x // g for x in ints))
    return tuple(key)
