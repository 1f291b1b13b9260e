#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Twisted sectors of a finite group G acting linearly on Z = A^n.

For g in G: Z^g = ker(g - 1) of dimension r_g, codimension c_g,
T_g = T_Z / im(g - 1) (coinvariants, dimension r_g),
omega_g = det N_{Z^g/Z} and Omega_g^j = (wedge^j T_g)^dual.

Tangent-type generators sit in internal degree -1 and cotangent-type
generators in +1, so sector g contributes

    HH^m:  Gamma(Z^g, wedge^(m - c_g) T_g (x) omega_g)  at C(r, m - c_g) H_r(t + m)
    HH_m:  Gamma(Z^g, Omega_g^m)                        at C(r, m) H_r(t - m)

and G-invariants are trace averages. An element h acts on the sector
sum by sending sector g to sector h g h^-1 (a permutation) composed with
its linear action on sections, so only h in C(g) contributes to the
trace on sector g.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Tuple

import sympy as sp

from ..core.actions import (
    contragredient,
    exterior_power_action,
    symmetric_power_action,
)
from ..core.errors import NotAGroupError
from ..core.matrix import (
    ZERO,
    RationalMatrix,
    induced_matrix,
    matrix_from_vectors,
    quotient_matrix,
    rank_kernel_image,
)
from ..complexes.hilbert import Bidegree, HilbertTable, check_window, sum_tables
from ..complexes.modules import hilbert_function
from .checks import Check, boolean_check, compare_tables
from .group import FiniteMatrixGroup


logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def _symmetric_trace(matrix: RationalMatrix, d: int) -> Fraction:
    if d < 0:
        return ZERO
    return symmetric_power_action(matrix, d).trace()


@lru_cache(maxsize=4096)
def _exterior_trace(matrix: RationalMatrix, k: int) -> Fraction:
    if k < 0 or k > matrix.rows:
        return ZERO
    return exterior_power_action(matrix, k).trace()


@dataclass(frozen=True)
class SectorData:
    g: int
    element: RationalMatrix
    zg_basis: RationalMatrix
    moved_basis: RationalMatrix
    codimension: int
    omega_values: Tuple[Tuple[int, Fraction], ...]
    omega_degree: int
    tg_dimension: int
    omega_j_dims: Tuple[int, ...]

    @property
    def fixed_dimension(self) -> int:
        return self.zg_basis.cols

    def omega(self, h: int) -> Fraction:
        return dict(self.omega_values)[h]

    def fixed_action(self, h: RationalMatrix) -> RationalMatrix:
        """h on T_{Z^g} in zg_basis coordinates."""
        return induced_matrix(h, self.zg_basis)

    def coinvariant_action(self, h: RationalMatrix) -> RationalMatrix:
        """h on T_g = T_Z / im(g - 1)."""
        return quotient_matrix(h, self.moved_basis)

    def numerical_fields(self) -> Tuple[int, int, int, Tuple[int, ...]]:
        return (self.fixed_dimension, self.codimension, self.tg_dimension, self.omega_j_dims)


def sector_data(group: FiniteMatrixGroup, g: int) -> SectorData:
    if not 0 <= g < group.order:
        raise ValueError("element index %d out of range" % g)
    n = group.n
    element = group.elements[g]
    moved = element - RationalMatrix.identity(n)
    reduced = rank_kernel_image(moved)
    zg_basis = matrix_from_vectors(reduced.kernel_basis, n)
    moved_basis = matrix_from_vectors(reduced.image_basis, n)
    r = zg_basis.cols
    omega_values = tuple(
        (h, quotient_matrix(group.elements[h], zg_basis).determinant())
        for h in group.centralizers[g]
    )
    return SectorData(
        g,
        element,
        zg_basis,
        moved_basis,
        n - r,
        omega_values,
        -(n - r),
        n - moved_basis.cols,
        tuple(comb(r, j) for j in range(r + 1)),
    )


class SectorTraces:
    """Traces of h in C(g) on the graded pieces of one sector."""

    def __init__(self, group: FiniteMatrixGroup, sector: SectorData) -> None:
        self._sector = sector
        self._actions: Dict[int, Tuple[RationalMatrix, RationalMatrix, RationalMatrix, Fraction]] = dict()
        for h in group.centralizers[sector.g]:
            matrix = group.elements[h]
            functions = contragredient(sector.fixed_action(matrix))
            tangent = sector.coinvariant_action(matrix)
            self._actions[h] = (functions, tangent, contragredient(tangent), sector.omega(h))

    @property
    def sector(self) -> SectorData:
        return self._sector

    def cohomology(self, h: int, m: int, t: int) -> Fraction:
        """Trace on Gamma(Z^g, wedge^(m - c) T_g (x) omega_g) in internal degree t."""
        functions, tangent, _, omega = self._actions[h]
        q = m - self._sector.codimension
        exterior = _exterior_trace(tangent, q)
        if exterior == 0:
            return ZERO
        return exterior * omega * _symmetric_trace(functions, t + m)

    def homology(self, h: int, m: int, t: int) -> Fraction:
        """Trace on Gamma(Z^g, Omega_g^m) in internal degree t."""
        functions, _, cotangent, _ = self._actions[h]
        exterior = _exterior_trace(cotangent, m)
        if exterior == 0:
            return ZERO
        return exterior * _symmetric_trace(functions, t - m)


def _as_count(value: Fraction, where: str) -> int:
    if value.denominator != 1 or value < 0:
        raise NotAGroupError("invariant average %s at %s is not a non-negative integer" % (value, where))
    return int(value)


@dataclass(frozen=True)
class OrbifoldTables:
    """
    table: invariants of the full sector sum, averaged over all of G.
    sector_tables: per conjugacy class (keyed by its first element), the
    invariants of that class's sectors via the centralizer of g.
    """

    table: HilbertTable
    sector_tables: Dict[int, HilbertTable] = field(default_factory=dict)

    @property
    def fast_path_agrees(self) -> bool:
        return sum_tables(self.table.window, self.sector_tables.values()) == self.table


def _invariant_tables(
    group: FiniteMatrixGroup, window: Iterable[int], homological: bool
) -> OrbifoldTables:
    window = check_window(window)
    n = group.n
    traces = [SectorTraces(group, sector_data(group, g)) for g in range(group.order)]
    bidegrees: List[Bidegree] = [
        (-m if homological else m, t) for m in range(n + 1) for t in range(window[0], window[1] + 1)
    ]

    def trace(g: int, h: int, m: int, t: int) -> Fraction:
        if homological:
            return traces[g].homology(h, m, t)
        return traces[g].cohomology(h, m, t)

    full: Dict[Bidegree, int] = dict()
    for k, t in bidegrees:
        m = -k if homological else k
        total = ZERO
        for h in range(group.order):
            for g in range(group.order):
                if group.conjugate(h, g) == g:
                    total += trace(g, h, m, t)
        full[(k, t)] = _as_count(total / group.order, "(%d, %d)" % (k, t))

    sector_tables: Dict[int, HilbertTable] = dict()
    for g in group.representatives():
        centralizer = group.centralizers[g]
        entries = dict()
        for k, t in bidegrees:
            m = -k if homological else k
            total = sum((trace(g, h, m, t) for h in centralizer), ZERO)
            entries[(k, t)] = _as_count(total / len(centralizer), "sector %d (%d, %d)" % (g, k, t))
        sector_tables[g] = HilbertTable(window, entries)

    result = OrbifoldTables(HilbertTable(window, full), sector_tables)
    logger.debug("orbifold %s tables over %d sectors", "homology" if homological else "cohomology", group.order)
    return result


def hh_cohomology(group: FiniteMatrixGroup, window: Iterable[int]) -> OrbifoldTables:
    """HH^m = (sum_g Gamma(Z^g, wedge^(m - c_g) T_g (x) omega_g))^G in degree +m."""
    return _invariant_tables(group, window, homological=False)


def hh_homology(group: FiniteMatrixGroup, window: Iterable[int]) -> OrbifoldTables:
    """HH_m = (sum_g Gamma(Z^g, Omega_g^m))^G in degree -m."""
    return _invariant_tables(group, window, homological=True)


def delta_pushpull(group: FiniteMatrixGroup, window: Iterable[int]) -> Dict[int, HilbertTable]:
    """Per element g: Omega_g^j in cohomological degree -j, before taking invariants."""
    window = check_window(window)
    out = dict()
    for g in range(group.order):
        r = sector_data(group, g).fixed_dimension
        out[g] = HilbertTable.tabulate(
            window,
            [-j for j in range(r + 1)],
            lambda k, t, r=r: comb(r, -k) * hilbert_function(r, t + k),
        )
    return out


def molien(group: FiniteMatrixGroup, window: Iterable[int]) -> List[int]:
    """Coefficients of (1/|G|) sum_g 1/det(1 - t g) on the window (zero below 0)."""
    lo, hi = check_window(window)
    if hi < 0:
        return [0] * (hi - lo + 1)
    t = sp.Symbol("t")
    n = group.n
    total = sp.Integer(0)
    for element in group.elements:
        matrix = sp.Matrix(
            n, n, [sp.Rational(v.numerator, v.denominator) for v in element.entries]
        )
        total += 1 / (sp.eye(n) - t * matrix).det()
    series = sp.series(total / group.order, t, 0, hi + 1).removeO()
    poly = sp.Poly(sp.expand(series), t)
    coefficients = list()
    for d in range(lo, hi + 1):
        value = sp.Rational(poly.coeff_monomial(t**d)) if d >= 0 else sp.Integer(0)
        if value.q != 1 or value < 0:
            raise NotAGroupError("Molien coefficient %s in degree %d is not a non-negative integer" % (value, d))
        coefficients.append(int(value))
    return coefficients


def molien_table(group: FiniteMatrixGroup, window: Iterable[int]) -> HilbertTable:
    window = check_window(window)
    values = molien(group, window)
    return HilbertTable(window, {(0, t): v for t, v in zip(range(window[0], window[1] + 1), values)})


def verify_class_equation(group: FiniteMatrixGroup) -> Check:
    sizes_ok = sum(len(members) for members in group.conjugacy_classes) == group.order
    orbit_ok = all(
        len(group.conjugacy_classes[group.class_of(g)]) * len(group.centralizers[g]) == group.order
        for g in range(group.order)
    )
    return boolean_check(
        "class equation",
        sizes_ok and orbit_ok,
        {"order": str(group.order), "classes": " ".join(str(len(c)) for c in group.conjugacy_classes)},
    )


def verify_sector_symmetry(group: FiniteMatrixGroup) -> Check:
    passed = True
    for members in group.conjugacy_classes:
        fields = {sector_data(group, g).numerical_fields() for g in members}
        passed = passed and len(fields) == 1
    return boolean_check("sector symmetry", passed)


def verify_hh0_molien(group: FiniteMatrixGroup, window: Iterable[int]) -> Check:
    window = check_window(window)
    row = hh_cohomology(group, window).table
    degree_zero = HilbertTable(window, {(0, t): row.get(0, t) for t in range(window[0], window[1] + 1)})
    return compare_tables("HH^0 = invariant ring", molien_table(group, window), degree_zero, "molien", "HH^0")


def verify_fast_path(group: FiniteMatrixGroup, window: Iterable[int]) -> Check:
    cohomology = hh_cohomology(group, window)
    homology = hh_homology(group, window)
    return boolean_check(
        "class representative averaging",
        cohomology.fast_path_agrees and homology.fast_path_agrees,
    )
