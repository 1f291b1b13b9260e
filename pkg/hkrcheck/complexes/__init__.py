#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from .polynomial import Polynomial, PolynomialMatrix
from .modules import GradedFreeModule, LinearSubvariety, hilbert_function
from .hilbert import HilbertTable, sum_tables
from .complex import (
    GradedChainComplex,
    koszul_complex,
    resolve_structure_sheaf,
    base_change,
    dual,
    hom_complex,
    tensor_product,
    shift,
    twist,
    direct_sum,
    embed_complex,
)
from .homology import evaluate_differential, homology_table, cycle_data, euler_characteristic


__all__ = [
    "Polynomial",
    "PolynomialMatrix",
    "GradedFreeModule",
    "LinearSubvariety",
    "hilbert_function",
    "HilbertTable",
    "sum_tables",
    "GradedChainComplex",
    "koszul_complex",
    "resolve_structure_sheaf",
    "base_change",
    "dual",
    "hom_complex",
    "tensor_product",
    "shift",
    "twist",
    "direct_sum",
    "embed_complex",
    "evaluate_differential",
    "homology_table",
    "cycle_data",
    "euler_characteristic",
]
