import logging
from functools import lru_cache

from adjtoric.algebra.binomials import Binomial, BinomialIdeal, TermOrder
from adjtoric.algebra.groebner import buchberger
from adjtoric.errors import NonGenericWeightError
from adjtoric.geometry import PointConfiguration, as_weight
from adjtoric.linalg import as_int_matrix, integer_kernel, row_space_key
from adjtoric.monomials import MonomialIdeal

logger = logging.getLogger(__name__)


def lattice_ideal(cfg) -> BinomialIdeal:
    """Binomials x^(b+) - x^(b-) for a lattice basis b of ker_Z(A).

    ``cfg`` is a PointConfiguration or any integer grading matrix whose
    columns are the variable degrees.
    """
    A = cfg.matrix if isinstance(cfg, PointConfiguration) else as_int_matrix(cfg)
    grading = tuple(tuple(int(x) for x in A[:, i]) for i in range(A.shape[1]))
    gens = tuple(Binomial.from_lattice_vector(b) for b in integer_kernel(A))
    return BinomialIdeal(gens, A.shape[1], grading)


def _strip(b: Binomial, i: int) -> Binomial:
    k = min(b.lead[i], b.trail[i])
    if not k:
        return b
    lead = b.lead[:i] + (b.lead[i] - k,) + b.lead[i + 1 :]
    trail = b.trail[:i] + (b.trail[i] - k,) + b.trail[i + 1 :]
    return Binomial(lead, trail)


def saturate(ideal: BinomialIdeal) -> BinomialIdeal:
    """(J : (x_1 ... x_n)^inf) by saturating one variable at a time.

    For J : x_i^inf a Groebner basis is computed in grevlex with x_i
    cheapest; for homogeneous binomials x_i then divides the leading term
    only if it divides both terms, so stripping the x_i content of each
    basis element gives a Groebner basis of the quotient. The ideal must be
    homogeneous for the standard grading (true for any A-grading whose first
    row is all ones).
    """
    current = ideal
    for i in range(ideal.n):
        order = TermOrder.grevlex(ideal.n, cheapest=i)
        basis = buchberger(current, order)
        current = BinomialIdeal(
            tuple(_strip(g, i) for g in basis.generators), ideal.n, ideal.grading, order
        )
        logger.debug(f"saturated x{i + 1}: {len(current.generators)} generators")
    # stripping can break reducedness; one more pass restores the canonical basis
    return buchberger(current, TermOrder.grevlex(ideal.n))


@lru_cache(maxsize=256)
def _saturated_for_row_space(key) -> BinomialIdeal:
    # I_A depends on A only through ker(A), i.e. through its row space
    return saturate(lattice_ideal(key))


@lru_cache(maxsize=256)
def toric_ideal(cfg: PointConfiguration) -> BinomialIdeal:
    """The toric ideal I_A of a configuration, as a grevlex Groebner basis.

    Configurations with the same row space, such as a cone and its axis
    scalings, share one saturation.
    """
    logger.info(f"[+] toric ideal for {cfg.n} points in dimension {cfg.d}")
    saturated = _saturated_for_row_space(row_space_key(cfg.matrix))
    grading = tuple(tuple(p) for p in cfg.points)
    return BinomialIdeal(saturated.generators, cfg.n, grading, saturated.order)


def weight_order(weight) -> TermOrder:
    return TermOrder.from_weight(tuple(weight))


def leading_ideal(ideal: BinomialIdeal, order: TermOrder) -> MonomialIdeal:
    """in_w(I) from a reduced Groebner basis for ``order``.

    A generator whose two terms have the same weight means in_w(I) is not a
    monomial ideal: the weight is not generic.
    """
    if ideal.order != order:
        ideal = buchberger(ideal, order)
    for g in ideal.generators:
        if order.weigh(g.lead) == order.weigh(g.trail):
            raise NonGenericWeightError(
                f"Weight {order.weight} is not generic: generator {g} has tied terms",
                binomial=g,
            )
    return MonomialIdeal.from_generators(ideal.n, [g.lead for g in ideal.generators])


def is_generic(cfg: PointConfiguration, weight) -> bool:
    """No leading-term ties for the reduced basis of I_A under the weight."""
    order = weight_order(as_weight(weight, cfg.n))
    try:
        leading_ideal(buchberger(toric_ideal(cfg), order), order)
    except NonGenericWeightError:
        return False
    return True
