import logging
from typing import Iterable, Sequence

from adjtoric.geometry import PointConfiguration, Triangulation
from adjtoric.monomials import PrimeComponent
from adjtoric.multidegree.poly import LinearForm, MultiPoly

logger = logging.getLogger(__name__)


def prime_multidegree(support: Iterable[int], cfg: PointConfiguration) -> MultiPoly:
    """C(S/<x_i : i in support>; t), the product of the forms v_i . t."""
    result = MultiPoly.one(cfg.d + 1)
    for i in support:
        if not 0 <= i < cfg.n:
            raise ValueError(f"Variable index {i} out of range for {cfg.n} points")
        result = result * LinearForm(cfg.points[i]).to_poly()
    return result


def multidegree_of_quotient(components: Sequence[PrimeComponent], cfg: PointConfiguration) -> MultiPoly:
    """Sum of multiplicity times prime multidegree over the minimal primes."""
    result = MultiPoly.zero(cfg.d + 1)
    for comp in components:
        if comp.multiplicity is None:
            raise ValueError(f"Component {comp.render()} has no multiplicity")
        result = result + prime_multidegree(comp.support, cfg) * comp.multiplicity
    return result


def adjoint_from_triangulation(tri: Triangulation) -> MultiPoly:
    cfg = tri.configuration
    result = MultiPoly.zero(cfg.d + 1)
    for simplex in tri.simplices:
        complement = [i for i in range(cfg.n) if i not in simplex.indices]
        result = result + prime_multidegree(complement, cfg) * simplex.normalized_volume
    logger.debug(f"adjoint from {len(tri.simplices)} simplices: {result}")
    return result
