#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..core.actions import Exponent, monomial_basis, monomial_count
from ..core.errors import DependentFormsError
from ..core.matrix import (
    RationalMatrix,
    matrix_from_vectors,
    rank,
    rank_kernel_image,
)
from ..core.rational import RationalLike
from .polynomial import Polynomial


def hilbert_function(nvars: int, t: int) -> int:
    """dim k[x_1..x_nvars]_t."""
    return monomial_count(nvars, t)


@dataclass(frozen=True)
class GradedFreeModule:
    """
    Free module over k[x_1..x_n] with one generator per entry of
    generator_degrees; a generator of degree s spans R(-s).
    """

    variable_count: int
    generator_degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.variable_count < 0:
            raise ValueError("variable_count must be non-negative")
        object.__setattr__(self, "generator_degrees", tuple(int(d) for d in self.generator_degrees))

    @classmethod
    def free(cls, variable_count: int, degrees: Sequence[int]) -> "GradedFreeModule":
        return cls(variable_count, tuple(degrees))

    @property
    def rank(self) -> int:
        return len(self.generator_degrees)

    def dimension(self, t: int) -> int:
        return sum(hilbert_function(self.variable_count, t - s) for s in self.generator_degrees)

    def piece_basis(self, t: int) -> List[Tuple[int, Exponent]]:
        """Basis of the degree-t piece: generator-major, then monomial order."""
        return [
            (generator, exponent)
            for generator, s in enumerate(self.generator_degrees)
            for exponent in monomial_basis(self.variable_count, t - s)
        ]

    def piece_offsets(self, t: int) -> List[int]:
        """Start index of each generator block inside piece_basis(t)."""
        offsets = list()
        position = 0
        for s in self.generator_degrees:
            offsets.append(position)
            position += hilbert_function(self.variable_count, t - s)
        return offsets

    def twisted(self, internal: int) -> "GradedFreeModule":
        return GradedFreeModule(
            self.variable_count, tuple(s + internal for s in self.generator_degrees)
        )

    def dual(self) -> "GradedFreeModule":
        return GradedFreeModule(self.variable_count, tuple(-s for s in self.generator_degrees))

    def __add__(self, other: "GradedFreeModule") -> "GradedFreeModule":
        if other.variable_count != self.variable_count:
            raise ValueError("modules over different rings")
        return GradedFreeModule(
            self.variable_count, self.generator_degrees + other.generator_degrees
        )


def forms_matrix(
    n: int, forms: Union[RationalMatrix, Sequence[Sequence[RationalLike]]]
) -> RationalMatrix:
    """Stack linear forms, given as coefficient rows, into a c x n matrix."""
    if isinstance(forms, RationalMatrix):
        if forms.cols != n:
            raise ValueError("forms have %d coefficients, expected %d" % (forms.cols, n))
        return forms
    if len(forms) == 0:
        return RationalMatrix.zeros(0, n)
    for index, row in enumerate(forms):
        if len(row) != n:
            raise ValueError("form %d has %d coefficients, expected %d" % (index, len(row), n))
    return RationalMatrix.from_rows(forms, n)


class LinearSubvariety:
    """
    Linear subspace V of A^n cut out by independent linear forms.

    The coordinate ring O_V is identified with k[u_1..u_r], r = dim V,
    through a parametrization x = P u (P is n x r with independent
    columns spanning V). By default P is the kernel basis of the forms;
    an explicit P can be supplied and is checked against the forms.
    """

    def __init__(
        self,
        n: int,
        forms: Union[RationalMatrix, Sequence[Sequence[RationalLike]]],
        parametrization: Optional[RationalMatrix] = None,
    ) -> None:
        self._n = n
        self._forms = forms_matrix(n, forms)
        if rank(self._forms) != self._forms.rows:
            raise DependentFormsError(
                "%d linear forms in %d variables are linearly dependent" % (self._forms.rows, n)
            )
        dimension = n - self._forms.rows
        if parametrization is None:
            kernel = rank_kernel_image(self._forms).kernel_basis
            parametrization = matrix_from_vectors(kernel, n)
        else:
            if parametrization.shape != (n, dimension):
                raise ValueError(
                    "parametrization must be %dx%d, got %dx%d"
                    % (n, dimension, *parametrization.shape)
                )
            if rank(parametrization) != dimension:
                raise ValueError("parametrization columns are not independent")
            if not (self._forms @ parametrization).is_zero():
                raise ValueError("parametrization does not lie on the subvariety")
        self._parametrization = parametrization
        self._images: Tuple[Polynomial, ...] = tuple(
            Polynomial.linear(parametrization.row(i)) for i in range(n)
        )

    @property
    def ambient_dimension(self) -> int:
        return self._n

    @property
    def dimension(self) -> int:
        return self._parametrization.cols

    @property
    def codimension(self) -> int:
        return self._forms.rows

    @property
    def forms(self) -> RationalMatrix:
        return self._forms

    @property
    def parametrization(self) -> RationalMatrix:
        return self._parametrization

    def form_polynomials(self) -> List[Polynomial]:
        return [Polynomial.linear(self._forms.row(i)) for i in range(self._forms.rows)]

    def restrict(self, polynomial: Polynomial) -> Polynomial:
        """Pull a polynomial on A^n back to k[u_1..u_r] along x = P u."""
        if polynomial.nvars != self._n:
            raise ValueError("polynomial lives in %d variables, expected %d" % (polynomial.nvars, self._n))
        return polynomial.substitute(self._images, self.dimension)

    def __repr__(self) -> str:
        return "LinearSubvariety(n=%d, dim=%d)" % (self._n, self.dimension)
