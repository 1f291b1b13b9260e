#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..core.errors import GroupClosureError, NotAGroupError
from ..core.matrix import RationalMatrix
from ..helpers.defaults import GROUP_BOUND


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteMatrixGroup:
    """
    Finite group of rational n x n matrices, elements in generation order
    with the identity at index 0. Everything else is stored by index.
    """

    generators: Tuple[RationalMatrix, ...]
    elements: Tuple[RationalMatrix, ...]
    mult_table: Tuple[Tuple[int, ...], ...]
    inverses: Tuple[int, ...]
    conjugacy_classes: Tuple[Tuple[int, ...], ...]
    centralizers: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.elements[0].rows

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def multiply(self, g: int, h: int) -> int:
        return self.mult_table[g][h]

    def conjugate(self, h: int, g: int) -> int:
        """Index of h g h^-1."""
        return self.mult_table[self.mult_table[h][g]][self.inverses[h]]

    def class_of(self, g: int) -> int:
        for index, members in enumerate(self.conjugacy_classes):
            if g in members:
                return index
        raise ValueError("element %d not in the group" % g)

    def representatives(self) -> List[int]:
        return [members[0] for members in self.conjugacy_classes]

    def index_of(self, matrix: RationalMatrix) -> int:
        for index, element in enumerate(self.elements):
            if element == matrix:
                return index
        raise ValueError("matrix is not an element of the group")


def build_group(generators: Sequence[RationalMatrix], bound: int = GROUP_BOUND) -> FiniteMatrixGroup:
    """Closure of the generators by breadth-first right multiplication."""
    if len(generators) == 0:
        raise ValueError("at least one generator is required")
    n = generators[0].rows
    for index, g in enumerate(generators):
        if not g.is_square() or g.rows != n:
            raise ValueError("generator %d must be %dx%d, got %dx%d" % (index, n, n, *g.shape))
        if g.determinant() == 0:
            raise NotAGroupError("generator %d is singular" % index)

    elements: List[RationalMatrix] = [RationalMatrix.identity(n)]
    lookup: Dict[RationalMatrix, int] = {elements[0]: 0}
    position = 0
    while position < len(elements):
        current = elements[position]
        for g in generators:
            product = current @ g
            if product not in lookup:
                if len(elements) >= bound:
                    raise GroupClosureError(bound)
                lookup[product] = len(elements)
                elements.append(product)
        position += 1

    size = len(elements)
    mult_table = tuple(
        tuple(lookup[elements[a] @ elements[b]] for b in range(size)) for a in range(size)
    )
    inverses = tuple(row.index(0) for row in mult_table)

    assigned = [False] * size
    classes: List[Tuple[int, ...]] = list()
    for g in range(size):
        if assigned[g]:
            continue
        members = sorted({mult_table[mult_table[h][g]][inverses[h]] for h in range(size)})
        for member in members:
            assigned[member] = True
        classes.append(tuple(members))
    centralizers = tuple(
        tuple(h for h in range(size) if mult_table[h][g] == mult_table[g][h]) for g in range(size)
    )

    group = FiniteMatrixGroup(
        tuple(generators), tuple(elements), mult_table, inverses, tuple(classes), centralizers
    )
    logger.info(
        "group of order %d on A^%d with %d conjugacy classes", size, n, len(classes)
    )
    return group


def trivial_group(n: int) -> FiniteMatrixGroup:
    return build_group([RationalMatrix.identity(n)])
