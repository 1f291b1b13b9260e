#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Cohomologically graded complexes of graded free modules.

A complex C has terms C^k and differentials d^k: C^k -> C^(k+1) given as
polynomial matrices (column j is the image of the j-th generator of
C^k). An entry from a source generator of degree s to a target generator
of degree u is homogeneous of degree s - u, so every differential
preserves internal degree.

Tensor products use the Koszul sign rule
d(a (x) b) = da (x) b + (-1)^i a (x) db for a in C^i, and a cohomological
shift C[a] carries the sign (-1)^a on its differential.
"""

import logging
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.errors import NonHomogeneousError
from .modules import GradedFreeModule, LinearSubvariety
from .polynomial import Polynomial, PolynomialMatrix


logger = logging.getLogger(__name__)


class GradedChainComplex:
    """Immutable complex over k[x_1..x_n]; validated on construction."""

    __slots__ = ("_nvars", "_terms", "_differentials")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[int, GradedFreeModule],
        differentials: Optional[Mapping[int, PolynomialMatrix]] = None,
    ) -> None:
        self._nvars = nvars
        self._terms: Dict[int, GradedFreeModule] = {
            k: module for k, module in sorted(terms.items()) if module.rank > 0
        }
        for k, module in self._terms.items():
            if module.variable_count != nvars:
                raise ValueError(
                    "term %d lives over %d variables, expected %d" % (k, module.variable_count, nvars)
                )
        self._differentials: Dict[int, PolynomialMatrix] = dict()
        for k, matrix in (differentials or {}).items():
            source, target = self.term(k), self.term(k + 1)
            if matrix.shape != (target.rank, source.rank):
                raise ValueError(
                    "d^%d must be %dx%d, got %dx%d" % (k, target.rank, source.rank, *matrix.shape)
                )
            if matrix.nvars != nvars:
                raise ValueError("d^%d lives over %d variables, expected %d" % (k, matrix.nvars, nvars))
            if not matrix.is_zero():
                self._differentials[k] = matrix
        self._validate()

    def _validate(self) -> None:
        for k, matrix in self._differentials.items():
            source, target = self.term(k), self.term(k + 1)
            for u, j, entry in matrix.nonzero_entries():
                expected = source.generator_degrees[j] - target.generator_degrees[u]
                if not entry.is_homogeneous() or entry.homogeneous_degree() != expected:
                    raise NonHomogeneousError(
                        "d^%d entry (%d, %d) = %r is not homogeneous of degree %d"
                        % (k, u, j, entry, expected)
                    )
        for k, matrix in self._differentials.items():
            following = self._differentials.get(k + 1)
            if following is not None and not (following @ matrix).is_zero():
                raise ValueError("d^%d o d^%d != 0" % (k + 1, k))

    # accessors

    @property
    def nvars(self) -> int:
        return self._nvars

    def degrees(self) -> List[int]:
        """Cohomological degrees with a non-zero term, ascending."""
        return list(self._terms)

    def term(self, k: int) -> GradedFreeModule:
        return self._terms.get(k, GradedFreeModule(self._nvars, ()))

    def differential(self, k: int) -> PolynomialMatrix:
        matrix = self._differentials.get(k)
        if matrix is None:
            return PolynomialMatrix.zeros(self._nvars, self.term(k + 1).rank, self.term(k).rank)
        return matrix

    def has_zero_differential(self) -> bool:
        return not self._differentials

    def ranks(self) -> Dict[int, int]:
        return {k: module.rank for k, module in self._terms.items()}

    def __repr__(self) -> str:
        body = ", ".join("%d: %r" % (k, m.generator_degrees) for k, m in self._terms.items())
        return "GradedChainComplex(nvars=%d, {%s})" % (self._nvars, body)


def koszul_complex(forms: Sequence[Polynomial], nvars: Optional[int] = None) -> GradedChainComplex:
    """
    Koszul complex of homogeneous forms f_1..f_c.

    The term in cohomological degree -j has one generator e_I per j-subset
    I (combinations order) sitting in internal degree sum_{i in I} deg f_i,
    with d(e_I) = sum_p (-1)^p f_{I_p} e_{I - I_p}.
    """
    if nvars is None:
        if len(forms) == 0:
            raise ValueError("nvars is required for an empty list of forms")
        nvars = forms[0].nvars
    degrees: List[int] = list()
    for index, form in enumerate(forms):
        if form.nvars != nvars:
            raise ValueError("form %d lives over %d variables, expected %d" % (index, form.nvars, nvars))
        if form.is_zero() or not form.is_homogeneous():
            raise NonHomogeneousError("form %d (%r) is not a non-zero homogeneous polynomial" % (index, form))
        degrees.append(form.homogeneous_degree())

    c = len(forms)
    subsets = {j: list(combinations(range(c), j)) for j in range(c + 1)}
    terms = {
        -j: GradedFreeModule(nvars, tuple(sum(degrees[i] for i in subset) for subset in subsets[j]))
        for j in range(c + 1)
    }
    differentials = dict()
    zero = Polynomial.zero(nvars)
    for j in range(1, c + 1):
        target_index = {subset: row for row, subset in enumerate(subsets[j - 1])}
        entries = [[zero] * len(subsets[j]) for _ in subsets[j - 1]]
        for col, subset in enumerate(subsets[j]):
            for p, i in enumerate(subset):
                face = subset[:p] + subset[p + 1 :]
                entries[target_index[face]][col] = forms[i] if p % 2 == 0 else -forms[i]
        differentials[-j] = PolynomialMatrix.from_rows(nvars, entries, len(subsets[j]))
    logger.debug("koszul complex on %d forms in %d variables", c, nvars)
    return GradedChainComplex(nvars, terms, differentials)


def resolve_structure_sheaf(subvariety: LinearSubvariety, twists: Sequence[int] = (0,)) -> GradedChainComplex:
    """Koszul resolution of the sum of O_V(a) over A^n, one summand per twist."""
    n = subvariety.ambient_dimension
    koszul = koszul_complex(subvariety.form_polynomials(), n)
    return direct_sum(*(twist(koszul, -a) for a in twists), nvars=n)


def base_change(complex_: GradedChainComplex, target: LinearSubvariety) -> GradedChainComplex:
    """C (x)_{O_S} O_V, as a complex over k[u_1..u_r] via x = P u."""
    if target.ambient_dimension != complex_.nvars:
        raise ValueError(
            "target lives in A^%d, complex over %d variables" % (target.ambient_dimension, complex_.nvars)
        )
    r = target.dimension
    terms = {
        k: GradedFreeModule(r, complex_.term(k).generator_degrees) for k in complex_.degrees()
    }
    differentials = {
        k: complex_.differential(k).map_entries(target.restrict, r) for k in complex_.degrees()
    }
    return GradedChainComplex(r, terms, differentials)


def dual(complex_: GradedChainComplex) -> GradedChainComplex:
    """Hom(C, O): term q is (C^-q)^dual, differential the transpose of d^(-q-1)."""
    terms = {-k: module.dual() for k, module in ((k, complex_.term(k)) for k in complex_.degrees())}
    differentials = {-k - 1: complex_.differential(k).transpose() for k in complex_.degrees()}
    return GradedChainComplex(complex_.nvars, terms, differentials)


def hom_complex(
    complex_: GradedChainComplex, target: LinearSubvariety, twists: Sequence[int] = (0,)
) -> GradedChainComplex:
    """
    Hom_{O_S}(C, M) for M = sum_a O_V(a), a complex over O_V.

    Hom from a generator of degree s into O_V(a) is a generator of degree
    -a - s, so the result is the dual of the base change, twisted once per
    summand of M.
    """
    restricted = dual(base_change(complex_, target))
    return direct_sum(*(twist(restricted, -a) for a in twists), nvars=target.dimension)


def shift(complex_: GradedChainComplex, cohomological: int = 0, internal: int = 0) -> GradedChainComplex:
    """C[a](b): term k is C^(k+a) with generator degrees moved by b."""
    sign = -1 if cohomological % 2 else 1
    terms = {k - cohomological: complex_.term(k).twisted(internal) for k in complex_.degrees()}
    differentials = {
        k - cohomological: complex_.differential(k).scale(sign) for k in complex_.degrees()
    }
    return GradedChainComplex(complex_.nvars, terms, differentials)


def twist(complex_: GradedChainComplex, internal: int) -> GradedChainComplex:
    return shift(complex_, 0, internal)


def direct_sum(*complexes: GradedChainComplex, nvars: Optional[int] = None) -> GradedChainComplex:
    if nvars is None:
        if len(complexes) == 0:
            raise ValueError("nvars is required for an empty direct sum")
        nvars = complexes[0].nvars
    for complex_ in complexes:
        if complex_.nvars != nvars:
            raise ValueError("complexes over different rings")
    degrees = sorted({k for complex_ in complexes for k in complex_.degrees()})
    terms = {
        k: GradedFreeModule(
            nvars, tuple(d for complex_ in complexes for d in complex_.term(k).generator_degrees)
        )
        for k in degrees
    }
    differentials = dict()
    zero = Polynomial.zero(nvars)
    for k in degrees:
        rows = terms.get(k + 1, GradedFreeModule(nvars, ())).rank
        cols = terms[k].rank
        entries = [[zero] * cols for _ in range(rows)]
        row_offset = col_offset = 0
        for complex_ in complexes:
            for u, j, entry in complex_.differential(k).nonzero_entries():
                entries[row_offset + u][col_offset + j] = entry
            row_offset += complex_.term(k + 1).rank
            col_offset += complex_.term(k).rank
        differentials[k] = PolynomialMatrix.from_rows(nvars, entries, cols)
    return GradedChainComplex(nvars, terms, differentials)


def _tensor_blocks(
    left: GradedChainComplex, right: GradedChainComplex, k: int
) -> List[Tuple[int, int, int]]:
    """(i, j, offset) for the summands C^i (x) D^j of total degree k."""
    blocks = list()
    offset = 0
    for i in left.degrees():
        j = k - i
        if j in right.degrees():
            blocks.append((i, j, offset))
            offset += left.term(i).rank * right.term(j).rank
    return blocks


def tensor_product(left: GradedChainComplex, right: GradedChainComplex) -> GradedChainComplex:
    """
    C (x) D over one ring. Generators of C^i (x) D^j are ordered
    left-major; summands of a total degree by ascending i.
    """
    if left.nvars != right.nvars:
        raise ValueError("complexes over different rings")
    nvars = left.nvars
    totals = sorted({i + j for i in left.degrees() for j in right.degrees()})
    blocks = {k: _tensor_blocks(left, right, k) for k in totals}
    terms = {
        k: GradedFreeModule(
            nvars,
            tuple(
                a + b
                for i, j, _ in blocks[k]
                for a in left.term(i).generator_degrees
                for b in right.term(j).generator_degrees
            ),
        )
        for k in totals
    }

    differentials = dict()
    zero = Polynomial.zero(nvars)
    for k in totals:
        if k + 1 not in terms:
            continue
        target_offsets = {(i, j): offset for i, j, offset in blocks[k + 1]}
        cols = terms[k].rank
        entries = [[zero] * cols for _ in range(terms[k + 1].rank)]
        for i, j, offset in blocks[k]:
            width = right.term(j).rank
            if (i + 1, j) in target_offsets:
                target = target_offsets[(i + 1, j)]
                for a_out, a_in, entry in left.differential(i).nonzero_entries():
                    for b in range(width):
                        entries[target + a_out * width + b][offset + a_in * width + b] = entry
            if (i, j + 1) in target_offsets:
                target = target_offsets[(i, j + 1)]
                target_width = right.term(j + 1).rank
                sign = -1 if i % 2 else 1
                for b_out, b_in, entry in right.differential(j).nonzero_entries():
                    for a in range(left.term(i).rank):
                        entries[target + a * target_width + b_out][offset + a * width + b_in] = (
                            entry if sign > 0 else -entry
                        )
        differentials[k] = PolynomialMatrix.from_rows(nvars, entries, cols)
    return GradedChainComplex(nvars, terms, differentials)


def embed_polynomial(polynomial: Polynomial, nvars: int, offset: int) -> Polynomial:
    """View a polynomial as one in nvars variables, its own variables starting at offset."""
    if offset < 0 or offset + polynomial.nvars > nvars:
        raise ValueError("cannot place %d variables at offset %d of %d" % (polynomial.nvars, offset, nvars))
    terms = {
        (0,) * offset + exponent + (0,) * (nvars - offset - polynomial.nvars): coeff
        for exponent, coeff in polynomial.terms()
    }
    return Polynomial(nvars, terms)


def embed_complex(complex_: GradedChainComplex, nvars: int, offset: int) -> GradedChainComplex:
    """Extend scalars along k[x] -> k[x, y] placing the variables of C at offset."""
    terms = {k: GradedFreeModule(nvars, complex_.term(k).generator_degrees) for k in complex_.degrees()}
    differentials = {
        k: complex_.differential(k).map_entries(
            lambda p: embed_polynomial(p, nvars, offset), nvars
        )
        for k in complex_.degrees()
    }
    return GradedChainComplex(nvars, terms, differentials)
