#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Brute-force twisted sectors: Ext and Tor over Z x Z between O_Delta and
the structure sheaf of the graph Delta^g = {y = g x}.

O_Delta is resolved by the Koszul complex K of x_i - y_i on 2n
variables. Restricted to Delta^g along u -> (u, g u) it becomes a complex
over k[u_1..u_n]: its homology is Tor, the homology of its dual is Ext.

An element h of the centralizer of g preserves Delta^g and acts on the
restricted complex: Koszul generators transform like the linear forms
x_i - y_i, functions of u by the contragredient of h and Hom generators
by h itself. Only traces of this action on homology are kept.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Tuple

import numpy as np

from ..core.actions import contragredient, exterior_power_action, symmetric_power_action
from ..core.errors import NotAGroupError
from ..core.matrix import ZERO, RationalMatrix
from ..complexes.complex import GradedChainComplex, base_change, dual, koszul_complex
from ..complexes.hilbert import HilbertTable, check_window
from ..complexes.homology import cycle_data, degree_homology
from ..complexes.modules import LinearSubvariety
from ..complexes.polynomial import Polynomial
from ..geometry.group import FiniteMatrixGroup
from .diagonal import diagonal_forms


logger = logging.getLogger(__name__)

TraceKey = Tuple[int, int, int]


@dataclass(frozen=True)
class TwistedSectorOracleResult:
    """centralizer_traces maps (cohomological, internal, h) to the trace of h on homology."""

    g: int
    ext_table: Optional[HilbertTable] = None
    tor_table: Optional[HilbertTable] = None
    centralizer_traces: Dict[TraceKey, Fraction] = field(default_factory=dict)

    @property
    def table(self) -> HilbertTable:
        table = self.ext_table if self.ext_table is not None else self.tor_table
        if table is None:
            raise ValueError("empty oracle result")
        return table

    def identity_traces_match(self) -> bool:
        """The trace of the identity on each bidegree is its dimension."""
        table = self.table
        for (k, t, h), value in self.centralizer_traces.items():
            if h == 0 and value != table.get(k, t):
                return False
        return True


def graph_of(element: RationalMatrix) -> LinearSubvariety:
    """Delta^g in A^n x A^n, parametrized by u -> (u, g u)."""
    n = element.rows
    identity = RationalMatrix.identity(n)
    return LinearSubvariety(2 * n, (-element).hstack(identity), identity.vstack(element))


def restricted_diagonal_koszul(element: RationalMatrix) -> GradedChainComplex:
    n = element.rows
    forms = diagonal_forms(n)
    resolved = koszul_complex([Polynomial.linear(forms.row(i)) for i in range(n)], 2 * n)
    return base_change(resolved, graph_of(element))


class _PieceActions:
    """Exterior and symmetric powers of the group elements, built once per oracle run."""

    def __init__(self, group: FiniteMatrixGroup) -> None:
        self._group = group
        self._powers: Dict[Tuple[str, int, int], np.ndarray] = dict()

    def _power(self, kind: str, h: int, degree: int) -> np.ndarray:
        key = (kind, h, degree)
        if key not in self._powers:
            element = self._group.elements[h]
            if kind == "wedge":
                matrix = exterior_power_action(element, degree)
            elif kind == "wedge-dual":
                matrix = exterior_power_action(contragredient(element), degree)
            else:
                matrix = symmetric_power_action(contragredient(element), degree)
            self._powers[key] = matrix.array
        return self._powers[key]

    def piece_entry(self, h: int, k: int, t: int, ext: bool) -> Callable[[int, int], Fraction]:
        """Entries of h on the degree-t piece of cohomological degree k, generator-major basis."""
        if ext:
            # Hom term q = k: dual Koszul generators in internal degree -k
            generators, functions = self._power("wedge", h, k), self._power("sym", h, t + k)
        else:
            # Koszul term -j = k: generators in internal degree j
            generators, functions = self._power("wedge-dual", h, -k), self._power("sym", h, t + k)
        size = functions.shape[0]

        def entry(row: int, col: int) -> Fraction:
            return generators[row // size, col // size] * functions[row % size, col % size]

        return entry


def _twisted_oracle(
    group: FiniteMatrixGroup,
    g: int,
    window: Iterable[int],
    ext: bool,
    actions: Optional[_PieceActions] = None,
) -> TwistedSectorOracleResult:
    window = check_window(window)
    if actions is None:
        actions = _PieceActions(group)
    element = group.elements[g]
    complex_ = restricted_diagonal_koszul(element)
    if ext:
        complex_ = dual(complex_)

    entries: Dict[Tuple[int, int], int] = dict()
    traces: Dict[TraceKey, Fraction] = dict()
    for t in range(window[0], window[1] + 1):
        for k, dimension in degree_homology(complex_, t).items():
            if complex_.term(k).dimension(t) == 0:
                continue
            entries[(k, t)] = dimension
            if dimension == 0:
                traces.update(((k, t, h), ZERO) for h in group.centralizers[g])
                continue
            # one frame per bidegree, shared by the whole centralizer
            frame = cycle_data(complex_, k, t).frame()
            for h in group.centralizers[g]:
                traces[(k, t, h)] = frame.trace(actions.piece_entry(h, k, t, ext))
    table = HilbertTable(window, entries)
    logger.debug("oracle %s sector %d: %r", "ext" if ext else "tor", g, table)
    if ext:
        return TwistedSectorOracleResult(g, ext_table=table, centralizer_traces=traces)
    return TwistedSectorOracleResult(g, tor_table=table, centralizer_traces=traces)


def twisted_ext_oracle(group: FiniteMatrixGroup, g: int, window: Iterable[int]) -> TwistedSectorOracleResult:
    """Ext^q_{Z x Z}(O_Delta, O_Delta^g) in cohomological degree +q."""
    return _twisted_oracle(group, g, window, ext=True)


def twisted_tor_oracle(group: FiniteMatrixGroup, g: int, window: Iterable[int]) -> TwistedSectorOracleResult:
    """Tor_k^{Z x Z}(O_Delta, O_Delta^g) in cohomological degree -k."""
    return _twisted_oracle(group, g, window, ext=False)


@dataclass(frozen=True)
class OracleInvariants:
    """G-invariants of the oracle sector sum, with the per-element results it was built from."""

    table: HilbertTable
    sectors: Dict[int, TwistedSectorOracleResult] = field(default_factory=dict)


def oracle_invariants(
    group: FiniteMatrixGroup, window: Iterable[int], ext: bool = True
) -> OracleInvariants:
    """
    (1/|G|) sum_h sum_{g : h g h^-1 = g} tr(h | sector g), with every
    sector computed by the twisted oracle. Elements outside C(g) permute
    sectors and contribute no trace.
    """
    window = check_window(window)
    actions = _PieceActions(group)
    sectors = {g: _twisted_oracle(group, g, window, ext, actions) for g in range(group.order)}

    totals: Dict[Tuple[int, int], Fraction] = dict()
    for result in sectors.values():
        for (k, t, _), value in result.centralizer_traces.items():
            totals[(k, t)] = totals.get((k, t), Fraction(0)) + value

    entries: Dict[Tuple[int, int], int] = dict()
    for bidegree, total in totals.items():
        average = total / group.order
        if average.denominator != 1 or average < 0:
            raise NotAGroupError(
                "oracle invariant average %s at %s is not a non-negative integer" % (average, bidegree)
            )
        entries[bidegree] = int(average)
    logger.info("oracle %s invariants over %d sectors", "ext" if ext else "tor", group.order)
    return OracleInvariants(HilbertTable(window, entries), sectors)
