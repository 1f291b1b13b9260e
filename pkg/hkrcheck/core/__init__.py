#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from .rational import parse_rational, format_rational
from .matrix import (
    RationalMatrix,
    RankKernelImage,
    rank,
    rank_kernel_image,
    independent_row_indices,
    induced_matrix,
    quotient_matrix,
    TraceFrame,
    trace_frame,
    matrix_from_vectors,
    solve_in_span,
    right_inverse,
    annihilator,
)
from .actions import (
    monomial_basis,
    monomial_count,
    wedge_basis,
    symmetric_power_action,
    exterior_power_action,
    contragredient,
    invariant_dimension,
    fixed_space_dimension,
)
from . import errors


__all__ = [
    "parse_rational",
    "format_rational",
    "RationalMatrix",
    "RankKernelImage",
    "rank",
    "rank_kernel_image",
    "independent_row_indices",
    "induced_matrix",
    "solve_in_span",
    "right_inverse",
    "annihilator",
    "quotient_matrix",
    "TraceFrame",
    "trace_frame",
    "matrix_from_vectors",
    "monomial_basis",
    "monomial_count",
    "wedge_basis",
    "symmetric_power_action",
    "exterior_power_action",
    "contragredient",
    "invariant_dimension",
    "fixed_space_dimension",
    "errors",
]
