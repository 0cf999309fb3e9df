from adjtoric.linalg.matrix import as_int_matrix, as_int_vector, identity, matmul, determinant
from adjtoric.linalg.hermite import exgcd, hermite_normal_form, integer_kernel, rank
from adjtoric.linalg.lattice import lll_reduce
from adjtoric.linalg.rational import row_space_key, solve_rational

__all__ = [
    "as_int_matrix",
    "as_int_vector",
    "identity",
    "matmul",
    "determinant",
    "exgcd",
    "hermite_normal_form",
    "integer_kernel",
    "rank",
    "lll_reduce",
    "solve_rational",
    "row_space_key",
]
