#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import logging
from typing import Iterable, List

from ..core.actions import (
    contragredient,
    fixed_space_dimension,
    invariant_dimension,
    monomial_count,
    symmetric_power_action,
)
from ..core.matrix import RationalMatrix
from ..complexes.hilbert import check_window
from ..geometry.group import FiniteMatrixGroup


logger = logging.getLogger(__name__)


def invariants_by_enumeration(group: FiniteMatrixGroup, d: int) -> int:
    """
    Invariant polynomials of degree d: solve (rho(g) - I) v = 0 for the
    generators acting on the degree-d monomials. The Reynolds trace average
    over every element must give the same count.
    """
    if d < 0:
        raise ValueError("degree must be non-negative, got %d" % d)
    if monomial_count(group.n, d) == 0:
        return 0
    generators: List[RationalMatrix] = [
        symmetric_power_action(contragredient(g), d) for g in group.generators
    ]
    dimension = fixed_space_dimension(generators)
    averaged = invariant_dimension([symmetric_power_action(contragredient(g), d) for g in group.elements])
    if averaged != dimension:
        raise ArithmeticError(
            "degree %d: %d fixed monomial combinations but Reynolds average %d" % (d, dimension, averaged)
        )
    logger.debug("degree %d: %d invariants among %d monomials", d, dimension, monomial_count(group.n, d))
    return dimension


def enumeration_series(group: FiniteMatrixGroup, window: Iterable[int]) -> List[int]:
    """invariants_by_enumeration over the window, zero in negative degrees."""
    lo, hi = check_window(window)
    return [invariants_by_enumeration(group, d) if d >= 0 else 0 for d in range(lo, hi + 1)]
