#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Tor^S(O_X, O_Y) computed on S x S against the diagonal.

Two resolutions are available and must agree:

- "diagonal" resolves O_Delta by the Koszul complex of x_i - y_i on 2n
  variables and restricts it to X x Y;
- "product" resolves O_{X x Y} as the tensor product of the Koszul
  resolutions of X (in x) and Y (in y) and restricts it to Delta.
"""

import logging
from typing import Final, Iterable, List, Sequence, Tuple, Union

from ..core.matrix import RationalMatrix
from ..core.rational import RationalLike
from ..complexes.complex import (
    base_change,
    embed_complex,
    koszul_complex,
    tensor_product,
)
from ..complexes.hilbert import HilbertTable
from ..complexes.homology import homology_table
from ..complexes.modules import LinearSubvariety, forms_matrix
from ..complexes.polynomial import Polynomial


logger = logging.getLogger(__name__)

FormsLike = Union[RationalMatrix, Sequence[Sequence[RationalLike]]]


class DiagonalResolutions:
    DIAGONAL: Final[str] = "diagonal"
    PRODUCT: Final[str] = "product"

    ALL: Final[Tuple[str, ...]] = (DIAGONAL, PRODUCT)


def diagonal_forms(n: int) -> RationalMatrix:
    """Rows e_i - e_(n+i): the forms x_i - y_i on A^n x A^n."""
    identity = RationalMatrix.identity(n)
    return identity.hstack(-identity)


def diagonal(n: int) -> LinearSubvariety:
    identity = RationalMatrix.identity(n)
    return LinearSubvariety(2 * n, diagonal_forms(n), identity.vstack(identity))


def product_subvariety(n: int, x_forms: RationalMatrix, y_forms: RationalMatrix) -> LinearSubvariety:
    """X x Y inside A^n x A^n."""
    left = x_forms.hstack(RationalMatrix.zeros(x_forms.rows, n))
    right = RationalMatrix.zeros(y_forms.rows, n).hstack(y_forms)
    return LinearSubvariety(2 * n, left.vstack(right))


def _polynomials(forms: RationalMatrix) -> List[Polynomial]:
    return [Polynomial.linear(forms.row(i)) for i in range(forms.rows)]


def tor_via_diagonal(
    n: int,
    x_forms: FormsLike,
    y_forms: FormsLike,
    window: Iterable[int],
    resolution: str = DiagonalResolutions.DIAGONAL,
    workers: int = 1,
) -> HilbertTable:
    """Tor^{S x S}(O_{X x Y}, O_Delta); Tor_k sits in cohomological degree -k."""
    x_forms = forms_matrix(n, x_forms)
    y_forms = forms_matrix(n, y_forms)
    if resolution == DiagonalResolutions.DIAGONAL:
        resolved = koszul_complex(_polynomials(diagonal_forms(n)), 2 * n)
        restricted = base_change(resolved, product_subvariety(n, x_forms, y_forms))
    elif resolution == DiagonalResolutions.PRODUCT:
        resolved = tensor_product(
            embed_complex(koszul_complex(_polynomials(x_forms), n), 2 * n, 0),
            embed_complex(koszul_complex(_polynomials(y_forms), n), 2 * n, n),
        )
        restricted = base_change(resolved, diagonal(n))
    else:
        raise ValueError(
            "resolution must be one of %s, got %r" % (", ".join(DiagonalResolutions.ALL), resolution)
        )
    logger.debug("diagonal route (%s): complex %r", resolution, restricted)
    return homology_table(restricted, window, workers)
