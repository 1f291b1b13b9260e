#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Intersections of linear subvarieties X, Y of S = A^n through the origin.

W = X n Y is cut out by the union of the forms. Tangent spaces are
constant, so the excess bundle E = T_S / (T_X + T_Y) is a vector space,
and every Tor and Ext sheaf is a free O_W-module whose graded dimensions
are predicted by e = rank E, m = dim Y - dim W and dim W.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Iterable, List, Sequence, Union

import sympy as sp

from ..core.errors import DependentFormsError
from ..core.matrix import (
    RationalMatrix,
    annihilator,
    independent_row_indices,
    rank,
    right_inverse,
)
from ..core.rational import RationalLike
from ..complexes.complex import base_change, hom_complex, resolve_structure_sheaf
from ..complexes.hilbert import HilbertTable, check_window
from ..complexes.homology import homology_table
from ..complexes.modules import LinearSubvariety, forms_matrix, hilbert_function
from ..helpers.defaults import Routes
from ..oracle.diagonal import tor_via_diagonal
from .checks import Check, boolean_check, compare_tables


logger = logging.getLogger(__name__)

FormsLike = Union[RationalMatrix, Sequence[Sequence[RationalLike]]]


@dataclass(frozen=True)
class IntersectionInstance:
    n: int
    x_forms: RationalMatrix
    y_forms: RationalMatrix
    w_forms: RationalMatrix
    dim_x: int
    dim_y: int
    dim_w: int
    excess_rank: int
    codim_w_in_y: int

    @classmethod
    def create(cls, n: int, x_forms: FormsLike, y_forms: FormsLike) -> "IntersectionInstance":
        if not isinstance(n, int) or n < 0:
            raise ValueError("n must be a non-negative integer")
        x_forms = forms_matrix(n, x_forms)
        y_forms = forms_matrix(n, y_forms)
        for label, forms in (("X_forms", x_forms), ("Y_forms", y_forms)):
            if rank(forms) != forms.rows:
                raise DependentFormsError("%s are linearly dependent" % label)
        stacked = x_forms.vstack(y_forms)
        w_forms = stacked.submatrix(independent_row_indices(stacked), range(n))
        dim_x, dim_y, dim_w = n - x_forms.rows, n - y_forms.rows, n - w_forms.rows
        instance = cls(
            n,
            x_forms,
            y_forms,
            w_forms,
            dim_x,
            dim_y,
            dim_w,
            n + dim_w - dim_x - dim_y,
            dim_y - dim_w,
        )
        logger.debug(
            "intersection n=%d: dim X=%d, dim Y=%d, dim W=%d, e=%d, m=%d",
            n, dim_x, dim_y, dim_w, instance.excess_rank, instance.codim_w_in_y,
        )
        return instance

    @property
    def x(self) -> LinearSubvariety:
        return LinearSubvariety(self.n, self.x_forms)

    @property
    def y(self) -> LinearSubvariety:
        return LinearSubvariety(self.n, self.y_forms)

    @property
    def w(self) -> LinearSubvariety:
        return LinearSubvariety(self.n, self.w_forms)


@dataclass(frozen=True)
class ExcessData:
    """
    Tangent data along W. Bases are columns in T_S = k^n.

    quotient_map: T_S -> E is given by rows annihilating T_X + T_Y and
    splitting: E -> T_S is its orthogonal right inverse.
    """

    tangent_x: RationalMatrix
    tangent_y: RationalMatrix
    tangent_w: RationalMatrix
    tangent_s: RationalMatrix
    sum_map: RationalMatrix
    quotient_map: RationalMatrix
    splitting: RationalMatrix

    @property
    def rank(self) -> int:
        return self.quotient_map.rows

    def invariants_hold(self) -> bool:
        identity = RationalMatrix.identity(self.rank)
        return (
            (self.quotient_map @ self.sum_map).is_zero()
            and rank(self.quotient_map) == self.rank
            and self.quotient_map @ self.splitting == identity
        )


def analyze(instance: IntersectionInstance) -> ExcessData:
    tangent_x = instance.x.parametrization
    tangent_y = instance.y.parametrization
    sum_map = tangent_x.hstack(tangent_y)
    quotient_map = annihilator(sum_map)
    if quotient_map.rows != instance.excess_rank:
        raise ArithmeticError(
            "excess rank %d differs from n + dim W - dim X - dim Y = %d"
            % (quotient_map.rows, instance.excess_rank)
        )
    data = ExcessData(
        tangent_x,
        tangent_y,
        instance.w.parametrization,
        RationalMatrix.identity(instance.n),
        sum_map,
        quotient_map,
        right_inverse(quotient_map),
    )
    logger.debug("excess data: rank E = %d", data.rank)
    return data


def excess_table(
    excess_rank: int, dim_w: int, window: Iterable[int], twists: Sequence[int] = (0,)
) -> HilbertTable:
    """sum_a C(e, k) t^k H_W(t) t^-a in cohomological degree -k."""
    return HilbertTable.tabulate(
        window,
        [-k for k in range(excess_rank + 1)],
        lambda k, t: sum(
            comb(excess_rank, -k) * hilbert_function(dim_w, t + k + a) for a in twists
        ),
    )


def tor_table(
    instance: IntersectionInstance,
    route: str,
    window: Iterable[int],
    workers: int = 1,
) -> HilbertTable:
    """Tor_k^S(O_X, O_Y) in cohomological degree -k."""
    window = check_window(window)
    if route == Routes.RESOLVE_X:
        complex_ = base_change(resolve_structure_sheaf(instance.x), instance.y)
    elif route == Routes.RESOLVE_Y:
        complex_ = base_change(resolve_structure_sheaf(instance.y), instance.x)
    elif route == Routes.DIAGONAL:
        return tor_via_diagonal(instance.n, instance.x_forms, instance.y_forms, window, workers=workers)
    else:
        raise ValueError("route must be one of %s, got %r" % (", ".join(Routes.ALL), route))
    return homology_table(complex_, window, workers)


def route_agreement(
    instance: IntersectionInstance,
    window: Iterable[int],
    routes: Sequence[str] = Routes.ALL,
    workers: int = 1,
) -> List[Check]:
    tables = {route: tor_table(instance, route, window, workers) for route in routes}
    reference = routes[0]
    return [
        compare_tables("tor routes %s/%s" % (reference, route), tables[reference], tables[route], reference, route)
        for route in routes[1:]
    ]


def verify_excess_tor(instance: IntersectionInstance, window: Iterable[int], workers: int = 1) -> Check:
    """Tor_k = C(e, k) t^k H_W(t) on the window."""
    window = check_window(window)
    computed = tor_table(instance, Routes.RESOLVE_X, window, workers)
    predicted = excess_table(instance.excess_rank, instance.dim_w, window)
    return compare_tables(
        "excess tor",
        predicted,
        computed,
        "exterior powers of E^dual",
        "tor",
        {"e": str(instance.excess_rank), "dim W": str(instance.dim_w)},
    )


def verify_splitting(instance: IntersectionInstance) -> Check:
    data = analyze(instance)
    return boolean_check(
        "excess splitting",
        data.invariants_hold(),
        {"rank E": str(data.rank)},
    )


def verify_hkr_kernel(
    instance: IntersectionInstance,
    twists: Sequence[int],
    window: Iterable[int],
    workers: int = 1,
) -> Check:
    """
    j^* i_* F against sum_k F|_W (x) wedge^k E^dual [k] for F = sum O_X(a).

    The left side base-changes the Koszul resolution of i_* F to Y; the
    right side only uses the rank of E read from the excess data.
    """
    window = check_window(window)
    if len(twists) == 0:
        raise ValueError("twists must name at least one summand")
    data = analyze(instance)
    left = homology_table(base_change(resolve_structure_sheaf(instance.x, twists), instance.y), window, workers)
    right = excess_table(data.rank, data.tangent_w.cols, window, twists)
    return compare_tables(
        "hkr kernel",
        right,
        left,
        "F|W (x) S(E^dual[1])",
        "j^* i_* F",
        {"F": " ".join("O(%d)" % a for a in twists)},
    )


@dataclass(frozen=True)
class ExtResult:
    direct: HilbertTable
    formula: HilbertTable
    check: Check


def ext_formula_table(
    instance: IntersectionInstance,
    f_twists: Sequence[int],
    g_twists: Sequence[int],
    window: Iterable[int],
) -> HilbertTable:
    """
    Gamma(W, F^dual (x) G (x) omega_{W/Y} (x) wedge^(q-m) E) in degree q.

    omega_{W/Y} sits in internal degree -m and wedge^j E in -j, so a pair
    of twists (a, b) contributes C(e, q - m) H_W(t - a + b + q).
    """
    e, m, dim_w = instance.excess_rank, instance.codim_w_in_y, instance.dim_w
    return HilbertTable.tabulate(
        window,
        range(m, m + e + 1),
        lambda q, t: sum(
            comb(e, q - m) * hilbert_function(dim_w, t - a + b + q)
            for a in f_twists
            for b in g_twists
        ),
    )


def ext_table(
    instance: IntersectionInstance,
    f_twists: Sequence[int],
    g_twists: Sequence[int],
    window: Iterable[int],
    workers: int = 1,
) -> ExtResult:
    """Ext^q_S(i_* F, j_* G): Hom from the Koszul resolution of i_* F against the closed form."""
    window = check_window(window)
    if len(f_twists) == 0 or len(g_twists) == 0:
        raise ValueError("F and G need at least one twist each")
    resolution = resolve_structure_sheaf(instance.x, f_twists)
    direct = homology_table(hom_complex(resolution, instance.y, g_twists), window, workers)
    formula = ext_formula_table(instance, f_twists, g_twists, window)
    check = compare_tables(
        "ext",
        formula,
        direct,
        "Gamma(W, F^dual G omega wedge E)",
        "Hom(K(F), G)",
        {
            "F": " ".join("O(%d)" % a for a in f_twists),
            "G": " ".join("O(%d)" % b for b in g_twists),
            "m": str(instance.codim_w_in_y),
        },
    )
    return ExtResult(direct, formula, check)


@dataclass(frozen=True)
class ExcessSequence:
    """0 -> N_{W/Y} -> N_{X/S}|_W -> E -> 0 in coordinates."""

    inclusion: RationalMatrix
    projection: RationalMatrix
    normal_wy_rank: int
    normal_xs_rank: int
    excess_rank: int

    def is_exact(self) -> bool:
        return (
            (self.projection @ self.inclusion).is_zero()
            and rank(self.inclusion) == self.normal_wy_rank
            and rank(self.projection) == self.excess_rank
            and self.normal_wy_rank + self.excess_rank == self.normal_xs_rank
        )


def excess_sequence(instance: IntersectionInstance) -> ExcessSequence:
    """
    N_{X/S} = T_S / T_X is identified with k^(codim X) through the forms of
    X; the inclusion sends T_Y (mod T_W) there, the projection lifts back
    to T_S and applies the excess quotient.
    """
    data = analyze(instance)
    inclusion = instance.x_forms @ data.tangent_y
    projection = data.quotient_map @ right_inverse(instance.x_forms)
    return ExcessSequence(
        inclusion,
        projection,
        instance.codim_w_in_y,
        instance.x_forms.rows,
        data.rank,
    )


def verify_excess_sequence(instance: IntersectionInstance) -> Check:
    sequence = excess_sequence(instance)
    return boolean_check(
        "excess sequence",
        sequence.is_exact(),
        {
            "rank N_W/Y": str(sequence.normal_wy_rank),
            "rank N_X/S": str(sequence.normal_xs_rank),
            "rank E": str(sequence.excess_rank),
        },
    )


def euler_series(instance: IntersectionInstance, window: Iterable[int]) -> List[int]:
    """Coefficients of H_X H_Y / H_S = (1 - t)^(n - dim X - dim Y) on the window."""
    lo, hi = check_window(window)
    t = sp.Symbol("t")
    exponent = instance.n - instance.dim_x - instance.dim_y
    if hi < 0:
        return [0] * (hi - lo + 1)
    expansion = sp.series((1 - t) ** exponent, t, 0, hi + 1).removeO()
    poly = sp.Poly(expansion, t)
    coefficients = list()
    for d in range(lo, hi + 1):
        value = poly.coeff_monomial(t**d) if d >= 0 else 0
        coefficients.append(int(value))
    return coefficients


def euler_characteristic_check(
    instance: IntersectionInstance, window: Iterable[int], workers: int = 1
) -> Check:
    """sum_k (-1)^k H(Tor_k) against the series of H_X H_Y / H_S."""
    window = check_window(window)
    tor = tor_table(instance, Routes.RESOLVE_X, window, workers)
    computed = tor.euler_characteristic()
    expected = euler_series(instance, window)
    return boolean_check(
        "euler characteristic",
        computed == expected,
        {
            "tor": " ".join(str(v) for v in computed),
            "H_X H_Y / H_S": " ".join(str(v) for v in expected),
        },
    )
