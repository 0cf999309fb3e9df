"""The two ways of computing the adjoint polynomial of a cone.

The geometric pipeline sums volumes over a regular triangulation. The
algebraic pipeline goes through the toric ideal, its initial ideal for the
weight, the minimal primes with their multiplicities and finally the
multidegree. Neither uses results of the other.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from adjtoric.algebra import BinomialIdeal, buchberger, leading_ideal, toric_ideal, weight_order
from adjtoric.geometry import (
    PointConfiguration,
    Triangulation,
    as_weight,
    lattice_index,
    regular_triangulation,
)
from adjtoric.monomials import MonomialIdeal, PrimeComponent, minimal_primes, multiplicity
from adjtoric.multidegree import MultiPoly, adjoint_from_triangulation, multidegree_of_quotient
from adjtoric.utils import stage

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraicResult:
    toric: BinomialIdeal
    basis: BinomialIdeal
    initial: MonomialIdeal
    components: Tuple[PrimeComponent, ...]
    poly: MultiPoly
    lattice_index: int = 1

    @property
    def adjoint(self) -> MultiPoly:
        """The multidegree rescaled to Euclidean normalized volumes.

        Equal to ``poly`` when the points generate Z^(d+1).
        """
        return self.poly * self.lattice_index


def geometric_adjoint(
    cfg: PointConfiguration, weight, timings: Optional[dict] = None
) -> Tuple[MultiPoly, Triangulation]:
    w = as_weight(weight, cfg.n)
    with stage("triangulation", timings):
        tri = regular_triangulation(cfg, w)
    with stage("adjoint", timings):
        poly = adjoint_from_triangulation(tri)
    return poly, tri


def algebraic_adjoint(cfg: PointConfiguration, weight, timings: Optional[dict] = None) -> AlgebraicResult:
    w = as_weight(weight, cfg.n)
    order = weight_order(w)
    with stage("toric_ideal", timings):
        toric = toric_ideal(cfg)
    with stage("groebner", timings):
        basis = buchberger(toric, order)
    with stage("initial_ideal", timings):
        initial = leading_ideal(basis, order)
    with stage("primes", timings):
        components = tuple(p.with_multiplicity(multiplicity(initial, p)) for p in minimal_primes(initial))
    with stage("multidegree", timings):
        poly = multidegree_of_quotient(components, cfg)
    logger.debug(f"algebraic adjoint for weight {tuple(w)}: {poly}")
    return AlgebraicResult(toric, basis, initial, components, poly, lattice_index(cfg))
