from typing import List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix


def lll_reduce(basis: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """LLL-reduced basis (delta = 3/4) of the lattice spanned by ``basis``.

    The vectors must be linearly independent. The reduced vectors span the
    same lattice with short entries, which keeps the binomials built from
    them of low degree.
    """
    rows = [[int(x) for x in b] for b in basis]
    if len(rows) < 2:
        return [tuple(r) for r in rows]
    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), len(rows[0])), ZZ)
    reduced = dm.lll()
    return [tuple(int(x) for x in row) for row in reduced.to_Matrix().tolist()]
