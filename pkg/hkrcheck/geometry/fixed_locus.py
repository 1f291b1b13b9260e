#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Derived fixed locus of a finite-order linear automorphism phi of Z = A^n.

The fixed locus is the intersection of the diagonal with the graph of
phi inside Z x Z, so it is handled as an intersection instance in 2n
variables. Its excess bundle is T_W, split off T_Z by averaging
t -> (1/k) sum_{i=1..k} phi^i(t).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List

from ..core.errors import NotFiniteOrderError
from ..core.matrix import (
    RationalMatrix,
    annihilator,
    matrix_from_vectors,
    rank,
    rank_kernel_image,
    right_inverse,
    solve_in_span,
)
from ..complexes.hilbert import HilbertTable, check_window
from ..helpers.defaults import ORDER_BOUND, Routes
from .checks import Check, boolean_check, compare_tables
from .intersection import IntersectionInstance, analyze, excess_table, tor_table


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Automorphism:
    matrix: RationalMatrix
    order: int

    @classmethod
    def create(cls, matrix: RationalMatrix, order_bound: int = ORDER_BOUND) -> "Automorphism":
        if not matrix.is_square():
            raise ValueError("an automorphism needs a square matrix, got %dx%d" % matrix.shape)
        if order_bound < 1:
            raise ValueError("order_bound must be positive")
        power = matrix
        for order in range(1, order_bound + 1):
            if power.is_identity():
                logger.debug("automorphism of order %d", order)
                return cls(matrix, order)
            power = power @ matrix
        raise NotFiniteOrderError(order_bound)

    @property
    def n(self) -> int:
        return self.matrix.rows

    def averaging_map(self) -> RationalMatrix:
        """(1/k) sum_{i=1..k} phi^i, the projection onto the fixed space."""
        total = RationalMatrix.zeros(self.n, self.n)
        power = RationalMatrix.identity(self.n)
        for _ in range(self.order):
            power = power @ self.matrix
            total = total + power
        return total.scale(Fraction(1, self.order))


@dataclass(frozen=True)
class FixedData:
    """
    w_basis: columns spanning T_W = ker(phi - 1).
    coinv_proj: T_Z -> (T_Z)_phi, rows annihilating im(phi - 1).
    avg_split: (T_Z)_phi -> T_Z, averaging applied to a lift.
    iso: (T_Z)_phi -> T_W in the w_basis coordinates.
    """

    w_basis: RationalMatrix
    codimension: int
    coinv_proj: RationalMatrix
    avg_split: RationalMatrix
    iso: RationalMatrix

    @property
    def dim_w(self) -> int:
        return self.w_basis.cols

    def is_retraction(self) -> bool:
        return self.coinv_proj @ self.avg_split == RationalMatrix.identity(self.dim_w)


def fixed_data(phi: Automorphism) -> FixedData:
    n = phi.n
    moved = phi.matrix - RationalMatrix.identity(n)
    w_basis = matrix_from_vectors(rank_kernel_image(moved).kernel_basis, n)
    coinv_proj = annihilator(moved)
    avg_split = phi.averaging_map() @ right_inverse(coinv_proj)
    iso = solve_in_span(w_basis, avg_split)
    data = FixedData(w_basis, n - w_basis.cols, coinv_proj, avg_split, iso)
    logger.debug("fixed data: dim W = %d, codimension %d", data.dim_w, data.codimension)
    return data


def fixed_locus_instance(phi: Automorphism) -> IntersectionInstance:
    """Delta and the graph of phi in Z x Z, cut by x - y and y - phi x."""
    n = phi.n
    identity = RationalMatrix.identity(n)
    diagonal = identity.hstack(-identity)
    graph = (-phi.matrix).hstack(identity)
    return IntersectionInstance.create(2 * n, diagonal, graph)


def forms_table(dim_w: int, window: Iterable[int]) -> HilbertTable:
    """Omega^k_W: C(dim W, k) t^k H_W(t) in cohomological degree -k."""
    return excess_table(dim_w, dim_w, window)


@dataclass(frozen=True)
class FixedLocusResult:
    tor: HilbertTable
    forms: HilbertTable
    check: Check


def derived_fixed_locus_table(phi: Automorphism, window: Iterable[int], workers: int = 1) -> FixedLocusResult:
    window = check_window(window)
    data = fixed_data(phi)
    tor = tor_table(fixed_locus_instance(phi), Routes.RESOLVE_X, window, workers)
    forms = forms_table(data.dim_w, window)
    check = compare_tables(
        "fixed locus",
        forms,
        tor,
        "Omega_W",
        "Tor(O_Delta, O_Delta^phi)",
        {"order": str(phi.order), "dim W": str(data.dim_w)},
    )
    return FixedLocusResult(tor, forms, check)


def verify_averaging(phi: Automorphism) -> Check:
    data = fixed_data(phi)
    fixed = phi.matrix @ data.avg_split == data.avg_split
    passed = (
        data.is_retraction()
        and fixed
        and rank(data.avg_split) == data.dim_w
        and rank(data.iso) == data.dim_w
        and data.dim_w + rank(phi.matrix - RationalMatrix.identity(phi.n)) == phi.n
    )
    return boolean_check(
        "averaging splitting",
        passed,
        {"order": str(phi.order), "dim W": str(data.dim_w), "codimension": str(data.codimension)},
    )


def verify_excess_identification(phi: Automorphism) -> Check:
    """The excess rank of Delta n Delta^phi equals dim W."""
    instance = fixed_locus_instance(phi)
    data = fixed_data(phi)
    excess = analyze(instance)
    return boolean_check(
        "excess is T_W",
        excess.rank == data.dim_w and instance.dim_w == data.dim_w,
        {"rank E": str(excess.rank), "dim W": str(data.dim_w)},
    )


def fixed_locus_checks(phi: Automorphism, window: Iterable[int], workers: int = 1) -> List[Check]:
    return [
        verify_averaging(phi),
        verify_excess_identification(phi),
        derived_fixed_locus_table(phi, window, workers).check,
    ]
