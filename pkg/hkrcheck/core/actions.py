#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Induced linear actions on symmetric and exterior powers.

Bases are fixed once for the whole package:

- degree-d monomials in n variables are listed by exponent vector in
  descending lexicographic order, so for n = 2, d = 2 the order is
  x^2, xy, y^2;
- k-fold wedges e_I are listed in itertools.combinations order.

A matrix g acts on the standard basis by g e_j = sum_i g[i, j] e_i, and
the induced matrices use the same column convention, so both powers are
group homomorphisms.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, List, Sequence, Tuple

from .errors import NotAGroupError
from .matrix import RationalMatrix, rank, ZERO, ONE

Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> Tuple[Exponent, ...]:
    if d < 0 or n < 0:
        return tuple()
    if n == 0:
        return ((),) if d == 0 else tuple()

    out: List[Exponent] = list()

    def fill(prefix: Tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining, -1, -1):
            fill(prefix + (first,), remaining - first, slots - 1)

    fill((), d, n)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> Dict[Exponent, int]:
    return {exponent: index for index, exponent in enumerate(monomial_basis(n, d))}


def monomial_count(n: int, d: int) -> int:
    if d < 0:
        return 0
    if n == 0:
        return 1 if d == 0 else 0
    return comb(n + d - 1, d)


@lru_cache(maxsize=None)
def wedge_basis(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(combinations(range(n), k))


def _multiply_linear(
    poly: Dict[Exponent, Fraction], column: Sequence[Fraction]
) -> Dict[Exponent, Fraction]:
    out: Dict[Exponent, Fraction] = dict()
    for exponent, coeff in poly.items():
        for i, value in enumerate(column):
            if value == 0:
                continue
            shifted = exponent[:i] + (exponent[i] + 1,) + exponent[i + 1 :]
            out[shifted] = out.get(shifted, ZERO) + coeff * value
    return {e: c for e, c in out.items() if c != 0}


def symmetric_power_action(g: RationalMatrix, d: int) -> RationalMatrix:
    """Matrix of Sym^d(g) on the monomial basis of degree d."""
    if not g.is_square():
        raise ValueError("g must be square")
    if d < 0:
        raise ValueError("degree must be non-negative")
    n = g.rows
    basis = monomial_basis(n, d)
    index = monomial_index(n, d)
    columns_of_g = g.column_list()

    columns: List[List[Fraction]] = list()
    for exponent in basis:
        image: Dict[Exponent, Fraction] = {(0,) * n: ONE}
        for variable, power in enumerate(exponent):
            for _ in range(power):
                image = _multiply_linear(image, columns_of_g[variable])
        column = [ZERO] * len(basis)
        for monomial, coeff in image.items():
            column[index[monomial]] = coeff
        columns.append(column)
    return RationalMatrix.from_columns(columns, len(basis))


def exterior_power_action(g: RationalMatrix, k: int) -> RationalMatrix:
    """Matrix of the k-th exterior power of g: entry (I, J) = det g[I, J]."""
    if not g.is_square():
        raise ValueError("g must be square")
    n = g.rows
    if k < 0 or k > n:
        raise ValueError("exterior degree must satisfy 0 <= k <= %d" % n)
    basis = wedge_basis(n, k)
    rows = [
        [g.submatrix(row_set, col_set).determinant() if k > 0 else ONE for col_set in basis]
        for row_set in basis
    ]
    return RationalMatrix.from_rows(rows, len(basis))


def contragredient(g: RationalMatrix) -> RationalMatrix:
    """Action on the dual space (on coordinate functions)."""
    return g.inverse().transpose()


def invariant_dimension(actions: Sequence[RationalMatrix]) -> int:
    """
    Dimension of the fixed subspace of a finite group action, via the
    Reynolds average of traces.
    """
    if len(actions) == 0:
        raise ValueError("a group action needs at least the identity")
    total = sum((action.trace() for action in actions), ZERO)
    average = total / len(actions)
    if average.denominator != 1 or average < 0:
        raise NotAGroupError(
            "trace average %s is not a non-negative integer" % average
        )
    return int(average)


def fixed_space_dimension(generators: Sequence[RationalMatrix]) -> int:
    """Dimension of {v : (g - I) v = 0 for every generator}, by elimination."""
    if len(generators) == 0:
        raise ValueError("at least one generator is required")
    size = generators[0].rows
    identity = RationalMatrix.identity(size)
    stacked = (generators[0] - identity).vstack(*(g - identity for g in generators[1:]))
    return size - rank(stacked)
