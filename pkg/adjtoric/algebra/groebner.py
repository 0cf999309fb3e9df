import heapq
import logging
from typing import List, Optional, Sequence, Union

from adjtoric.algebra.binomials import (
    Binomial,
    BinomialIdeal,
    Monomial,
    TermOrder,
    coprime,
    divides,
    mono_lcm,
)

logger = logging.getLogger(__name__)


def normal_monomial(u: Monomial, basis: Sequence[Binomial]) -> Monomial:
    """Normal form of x^u: rewrite lead -> trail until no lead divides it.

    For a binomial basis the normal form of a monomial is again a monomial.
    """
    u = tuple(u)
    reduced = True
    while reduced:
        reduced = False
        for g in basis:
            if divides(g.lead, u):
                u = tuple(x - a + b for x, a, b in zip(u, g.lead, g.trail))
                reduced = True
                break
    return u


def reduce(
    element: Union[Binomial, Monomial],
    basis: Union[BinomialIdeal, Sequence[Binomial]],
    order: TermOrder,
) -> Union[Binomial, Monomial, None]:
    """Normal form modulo a Groebner basis for ``order``.

    A binomial reduces term by term (normal forms are linear), giving a
    binomial or None when it lies in the ideal. A bare monomial reduces to
    its normal monomial.
    """
    gens = basis.generators if isinstance(basis, BinomialIdeal) else basis
    if isinstance(element, Binomial):
        return Binomial.oriented(
            normal_monomial(element.lead, gens), normal_monomial(element.trail, gens), order
        )
    return normal_monomial(element, gens)


def s_pair(f: Binomial, g: Binomial, order: TermOrder) -> Optional[Binomial]:
    lcm = mono_lcm(f.lead, g.lead)
    u = tuple(m - a + b for m, a, b in zip(lcm, f.lead, f.trail))
    v = tuple(m - a + b for m, a, b in zip(lcm, g.lead, g.trail))
    return Binomial.oriented(u, v, order)


def _pair(i: int, j: int):
    return (i, j) if i < j else (j, i)


def _chain_criterion(i: int, j: int, lcm: Monomial, basis: List[Binomial], pending: set) -> bool:
    """Buchberger's second criterion.

    The pair (i, j) can be skipped when some other lead divides their lcm and
    both pairs linking it to i and j have already been treated.
    """
    for k, g in enumerate(basis):
        if k == i or k == j:
            continue
        if divides(g.lead, lcm) and _pair(i, k) not in pending and _pair(j, k) not in pending:
            return True
    return False


def _reduced_basis(basis: List[Binomial], order: TermOrder) -> List[Binomial]:
    minimal = []
    for idx, g in enumerate(basis):
        redundant = any(
            divides(h.lead, g.lead) and (h.lead != g.lead or jdx < idx)
            for jdx, h in enumerate(basis)
            if jdx != idx
        )
        if not redundant:
            minimal.append(g)
    reduced = [Binomial(g.lead, normal_monomial(g.trail, minimal)) for g in minimal]
    return sorted(reduced, key=lambda g: order.key(g.lead))


def buchberger(ideal: BinomialIdeal, order: TermOrder) -> BinomialIdeal:
    """Reduced Groebner basis of a binomial ideal.

    Pairs are processed smallest lcm first (normal strategy) with the gcd
    and chain criteria. Every S-pair and normal form of binomials is a
    binomial, so no general polynomial arithmetic is needed. The result is
    sorted by leading term, hence canonical for the order.
    """
    basis: List[Binomial] = []
    for g in ideal.generators:
        b = Binomial.oriented(g.lead, g.trail, order)
        if b is not None:
            assert ideal.is_homogeneous(b), f"{b} is not homogeneous for the grading"
            basis.append(b)

    heap, pending = [], set()

    def add_pairs(new: int):
        for i in range(new):
            lcm = mono_lcm(basis[i].lead, basis[new].lead)
            heapq.heappush(heap, (order.key(lcm), i, new))
            pending.add((i, new))

    for j in range(len(basis)):
        add_pairs(j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        f, g = basis[i], basis[j]
        if coprime(f.lead, g.lead):
            continue
        if _chain_criterion(i, j, mono_lcm(f.lead, g.lead), basis, pending):
            continue
        s = s_pair(f, g, order)
        h = None if s is None else reduce(s, basis, order)
        if h is None:
            continue
        assert ideal.is_homogeneous(h), f"{h} is not homogeneous for the grading"
        basis.append(h)
        add_pairs(len(basis) - 1)

    reduced = _reduced_basis(basis, order)
    logger.debug(f"groebner basis with {len(reduced)} elements ({len(basis)} before reduction)")
    return BinomialIdeal(tuple(reduced), ideal.n, ideal.grading, order)


def is_groebner(ideal: BinomialIdeal, order: TermOrder) -> bool:
    """Every S-pair of the generators reduces to zero."""
    gens = ideal.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s = s_pair(gens[i], gens[j], order)
            if s is not None and reduce(s, gens, order) is not None:
                return False
    return True
