"""Exact arithmetic: prime fields and Q, polynomials in s, the local ring at s = 0,
and sparse matrix algorithms over each."""
from .fields import Field, QQ, F2
from .local import LocalRingElem, local_valuation
from .linalg import (
    LocalMatrix,
    SparseMatrix,
    dvr_elementary_divisors,
    matrix_rank_kernel_image,
    rank,
    rational_function_rank,
    saturated_kernel_basis,
)

__all__ = [
    "F2", "QQ", "Field", "LocalMatrix", "LocalRingElem", "SparseMatrix",
    "dvr_elementary_divisors", "local_valuation", "matrix_rank_kernel_image",
    "rank", "rational_function_rank", "saturated_kernel_basis",
]
