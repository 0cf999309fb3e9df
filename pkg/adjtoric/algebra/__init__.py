from adjtoric.algebra.binomials import (
    Monomial,
    Binomial,
    BinomialIdeal,
    TermOrder,
    divides,
    grading_degree,
    render_monomial,
)
from adjtoric.algebra.groebner import buchberger, reduce, s_pair, normal_monomial, is_groebner
from adjtoric.algebra.toric import (
    lattice_ideal,
    saturate,
    toric_ideal,
    weight_order,
    leading_ideal,
    is_generic,
)

__all__ = [
    "Monomial",
    "Binomial",
    "BinomialIdeal",
    "TermOrder",
    "divides",
    "grading_degree",
    "render_monomial",
    "buchberger",
    "reduce",
    "s_pair",
    "normal_monomial",
    "is_groebner",
    "lattice_ideal",
    "saturate",
    "toric_ideal",
    "weight_order",
    "leading_ideal",
    "is_generic",
]
