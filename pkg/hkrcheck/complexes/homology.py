#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Per-bidegree homology of graded complexes by exact linear algebra.

Each differential is evaluated on the monomial bases of one internal
degree, giving a rational matrix; H^k_t = dim C^k_t - rank d^k_t -
rank d^(k-1)_t. Internal degrees are independent of each other and are
spread over worker processes; results are merged by key, so the table
does not depend on scheduling.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import repeat
from typing import Dict, Iterable, List, NamedTuple, Tuple

from ..core.actions import monomial_index
from ..core.matrix import ZERO, RationalMatrix, TraceFrame, Vector, rank, rank_kernel_image, trace_frame
from .complex import GradedChainComplex
from .hilbert import HilbertTable, check_window
from .polynomial import Polynomial


logger = logging.getLogger(__name__)


def evaluate_differential(complex_: GradedChainComplex, k: int, t: int) -> RationalMatrix:
    """Matrix of d^k on the internal-degree-t pieces, in piece_basis order."""
    source = complex_.term(k)
    target = complex_.term(k + 1)
    rows, cols = target.dimension(t), source.dimension(t)
    if rows == 0 or cols == 0:
        return RationalMatrix.zeros(rows, cols)

    n = complex_.nvars
    target_offsets = target.piece_offsets(t)
    target_indices = [monomial_index(n, t - s) for s in target.generator_degrees]
    source_basis = source.piece_basis(t)

    by_source: Dict[int, List[Tuple[int, Polynomial]]] = dict()
    for u, j, entry in complex_.differential(k).nonzero_entries():
        by_source.setdefault(j, list()).append((u, entry))

    columns: List[List[Fraction]] = list()
    for j, exponent in source_basis:
        column = [ZERO] * rows
        for u, entry in by_source.get(j, ()):
            offset, index = target_offsets[u], target_indices[u]
            for monomial, coeff in entry.times_monomial(exponent).items():
                column[offset + index[monomial]] += coeff
        columns.append(column)
    return RationalMatrix.from_columns(columns, rows)


def degree_homology(complex_: GradedChainComplex, t: int) -> Dict[int, int]:
    """dim H^k in internal degree t, for every k of the complex."""
    degrees = complex_.degrees()
    ranks = {k: rank(evaluate_differential(complex_, k, t)) for k in degrees}
    out = dict()
    for k in degrees:
        dimension = complex_.term(k).dimension(t) - ranks[k] - ranks.get(k - 1, 0)
        if dimension < 0:
            raise ArithmeticError("negative homology dimension at (%d, %d)" % (k, t))
        out[k] = dimension
    logger.debug("degree %d: ranks %s, homology %s", t, ranks, out)
    return out


def homology_table(
    complex_: GradedChainComplex, window: Iterable[int], workers: int = 1
) -> HilbertTable:
    window = check_window(window)
    degrees = range(window[0], window[1] + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(degree_homology, repeat(complex_), degrees))
    else:
        results = [degree_homology(complex_, t) for t in degrees]
    entries = {(k, t): value for t, per_degree in zip(degrees, results) for k, value in per_degree.items()}
    return HilbertTable(window, entries)


class CycleData(NamedTuple):
    """Cycles and boundaries of C^k_t as vectors in piece_basis coordinates."""

    dimension: int
    cycles: List[Vector]
    boundaries: List[Vector]
    free_columns: Tuple[int, ...]

    @property
    def homology_dimension(self) -> int:
        return len(self.cycles) - len(self.boundaries)

    def frame(self) -> TraceFrame:
        return trace_frame(self.cycles, self.free_columns, self.boundaries)


def cycle_data(complex_: GradedChainComplex, k: int, t: int) -> CycleData:
    dimension = complex_.term(k).dimension(t)
    kernel = rank_kernel_image(evaluate_differential(complex_, k, t))
    boundaries = rank_kernel_image(evaluate_differential(complex_, k - 1, t)).image_basis
    return CycleData(dimension, kernel.kernel_basis, boundaries, kernel.free_columns)


def euler_characteristic(complex_: GradedChainComplex, t: int) -> int:
    """sum_k (-1)^k dim C^k_t."""
    return sum(
        complex_.term(k).dimension(t) * (-1 if k % 2 else 1) for k in complex_.degrees()
    )
