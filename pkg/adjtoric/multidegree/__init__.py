from adjtoric.multidegree.poly import MultiPoly, LinearForm
from adjtoric.multidegree.assembly import (
    prime_multidegree,
    multidegree_of_quotient,
    adjoint_from_triangulation,
)
from adjtoric.multidegree.diagnostics import Diagnostics, diagnostics, agree_at_random_points

__all__ = [
    "MultiPoly",
    "LinearForm",
    "prime_multidegree",
    "multidegree_of_quotient",
    "adjoint_from_triangulation",
    "Diagnostics",
    "diagnostics",
    "agree_at_random_points",
]
