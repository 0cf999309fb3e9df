from adjtoric.monomials.ideal import (
    MonomialIdeal,
    PrimeComponent,
    ZERO_PRIME,
    contains,
    radical,
    intersect,
    minimal_primes,
    localize,
    standard_monomial_count,
    multiplicity,
)
from adjtoric.monomials.complex import SimplicialComplex, initial_complex, stanley_reisner_ideal

__all__ = [
    "MonomialIdeal",
    "PrimeComponent",
    "ZERO_PRIME",
    "contains",
    "radical",
    "intersect",
    "minimal_primes",
    "localize",
    "standard_monomial_count",
    "multiplicity",
    "SimplicialComplex",
    "initial_complex",
    "stanley_reisner_ideal",
]
