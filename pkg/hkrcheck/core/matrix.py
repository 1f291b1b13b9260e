#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .rational import RationalLike, format_rational, parse_rational


Vector = Tuple[Fraction, ...]
IntegerRow = Dict[int, int]

ZERO: Fraction = Fraction(0)
ONE: Fraction = Fraction(1)


class RationalMatrix:
    """
    Dense matrix of exact rationals.

    Entries are kept in a read-only numpy array of dtype=object holding
    fractions.Fraction values. Every operation returns a new matrix.
    """

    __slots__ = ("_array",)

    def __init__(self, rows: int, cols: int, entries: Sequence[RationalLike]) -> None:
        if not isinstance(rows, int) or rows < 0:
            raise ValueError("rows must be a non-negative integer")
        if not isinstance(cols, int) or cols < 0:
            raise ValueError("cols must be a non-negative integer")
        if len(entries) != rows * cols:
            raise ValueError(
                "expected %d entries for a %dx%d matrix, got %d"
                % (rows * cols, rows, cols, len(entries))
            )
        array = np.empty((rows, cols), dtype=object)
        for index, value in enumerate(entries):
            array[index // cols, index % cols] = parse_rational(value)
        array.flags.writeable = False
        self._array: np.ndarray = array

    @classmethod
    def _wrap(cls, array: np.ndarray) -> "RationalMatrix":
        out = cls.__new__(cls)
        array = np.array(array, dtype=object, copy=True)
        if array.ndim != 2:
            raise ValueError("a matrix needs a two dimensional array")
        for index in np.ndindex(array.shape):
            item = array[index]
            if not isinstance(item, Fraction):
                array[index] = Fraction(item)
        array.flags.writeable = False
        out._array = array
        return out

    # constructors

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None
    ) -> "RationalMatrix":
        rows = [list(row) for row in rows]
        if cols is None:
            if len(rows) == 0:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(
                    "row %d has %d entries, expected %d" % (index, len(row), cols)
                )
        entries = [value for row in rows for value in row]
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[RationalLike]], rows: Optional[int] = None
    ) -> "RationalMatrix":
        columns = [list(column) for column in columns]
        if rows is None:
            if len(columns) == 0:
                raise ValueError("rows must be given for a matrix without columns")
            rows = len(columns[0])
        return cls.from_rows(columns, rows).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls._wrap(np.full((rows, cols), ZERO, dtype=object))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        array = np.full((n, n), ZERO, dtype=object)
        for i in range(n):
            array[i, i] = ONE
        return cls._wrap(array)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "RationalMatrix":
        n = len(values)
        array = np.full((n, n), ZERO, dtype=object)
        for i, value in enumerate(values):
            array[i, i] = parse_rational(value)
        return cls._wrap(array)

    # accessors

    @property
    def rows(self) -> int:
        return self._array.shape[0]

    @property
    def cols(self) -> int:
        return self._array.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        return tuple(self._array.flatten())

    @property
    def array(self) -> np.ndarray:
        return self._array

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self._array[index]

    def row(self, i: int) -> Vector:
        return tuple(self._array[i, :])

    def column(self, j: int) -> Vector:
        return tuple(self._array[:, j])

    def row_list(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(
        self, row_indices: Sequence[int], col_indices: Sequence[int]
    ) -> "RationalMatrix":
        row_indices = np.asarray(list(row_indices), dtype=int)
        col_indices = np.asarray(list(col_indices), dtype=int)
        array = self._array[np.ix_(row_indices, col_indices)]
        return RationalMatrix._wrap(array.reshape(len(row_indices), len(col_indices)))

    # arithmetic

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(
                "cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, *other.shape)
            )
        if self.cols == 0:
            return RationalMatrix.zeros(self.rows, other.cols)
        return RationalMatrix._wrap(np.dot(self._array, other._array))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix._wrap(self._array + other._array)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix._wrap(self._array - other._array)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._wrap(-self._array)

    def scale(self, factor: RationalLike) -> "RationalMatrix":
        return RationalMatrix._wrap(self._array * parse_rational(factor))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix._wrap(self._array.T)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def hstack(self, *others: "RationalMatrix") -> "RationalMatrix":
        for other in others:
            if other.rows != self.rows:
                raise ValueError("hstack needs matching row counts")
        return RationalMatrix._wrap(
            np.hstack([self._array] + [other._array for other in others])
        )

    def vstack(self, *others: "RationalMatrix") -> "RationalMatrix":
        for other in others:
            if other.cols != self.cols:
                raise ValueError("vstack needs matching column counts")
        return RationalMatrix._wrap(
            np.vstack([self._array] + [other._array for other in others])
        )

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        rows, cols = self.rows * other.rows, self.cols * other.cols
        array = np.full((rows, cols), ZERO, dtype=object)
        for i in range(self.rows):
            for j in range(self.cols):
                value = self._array[i, j]
                if value != 0:
                    array[
                        i * other.rows : (i + 1) * other.rows,
                        j * other.cols : (j + 1) * other.cols,
                    ] = (other._array * value)
        return RationalMatrix._wrap(array)

    def power(self, exponent: int) -> "RationalMatrix":
        if not self.is_square():
            raise ValueError("only square matrices have powers")
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = RationalMatrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace needs a square matrix")
        return sum((self._array[i, i] for i in range(self.rows)), ZERO)

    def determinant(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        work = [list(self.row(i)) for i in range(n)]
        det = ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return ZERO
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            for r in range(col + 1, n):
                factor = work[r][col] / work[col][col]
                if factor != 0:
                    for c in range(col, n):
                        work[r][c] -= factor * work[col][c]
        return det

    def inverse(self) -> "RationalMatrix":
        if not self.is_square():
            raise ValueError("inverse needs a square matrix")
        n = self.rows
        work = [list(self.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            lead = work[col][col]
            work[col] = [value / lead for value in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return RationalMatrix.from_rows([row[n:] for row in work], n)

    def is_identity(self) -> bool:
        return self.is_square() and self == RationalMatrix.identity(self.rows)

    def is_zero(self) -> bool:
        return all(value == 0 for value in self._array.flat)

    # protocol

    def _check_same_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(format_rational(v) for v in row) + "]" for row in self.row_list()]
        return "RationalMatrix(%dx%d: [%s])" % (self.rows, self.cols, ", ".join(rows))


# elimination


class RankKernelImage(NamedTuple):
    """kernel_basis[j] has entry 1 at free_columns[j] and 0 at the other free columns."""

    rank: int
    kernel_basis: List[Vector]
    image_basis: List[Vector]
    free_columns: Tuple[int, ...]


def _primitive(row: IntegerRow) -> IntegerRow:
    content = reduce(gcd, row.values(), 0)
    if content > 1:
        return {col: value // content for col, value in row.items()}
    return row


def _integer_row(values: Iterable[Fraction]) -> IntegerRow:
    row = {col: value for col, value in enumerate(values) if value != 0}
    if not row:
        return {}
    denominator = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in row.values()), 1)
    return _primitive({col: int(value * denominator) for col, value in row.items()})


def _reduce_into(pivots: Dict[int, IntegerRow], row: IntegerRow) -> bool:
    """
    Fraction-free reduction of an integer row against an echelon set.

    Returns True when the row survives and becomes a new pivot row.
    """
    while row:
        col = min(row)
        pivot = pivots.get(col)
        if pivot is None:
            pivots[col] = row
            return True
        a, p = row[col], pivot[col]
        common = gcd(a, p)
        a, p = a // common, p // common
        reduced = {c: v * p for c, v in row.items()}
        for c, v in pivot.items():
            value = reduced.get(c, 0) - a * v
            if value:
                reduced[c] = value
            else:
                reduced.pop(c, None)
        row = _primitive(reduced)
    return False


def _echelon(rows: Iterable[IntegerRow]) -> Dict[int, IntegerRow]:
    pivots: Dict[int, IntegerRow] = dict()
    # short rows first keeps fill-in low on the sparse differentials
    for row in sorted((r for r in rows if r), key=len):
        _reduce_into(pivots, dict(row))
    return pivots


def rank(matrix: RationalMatrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if matrix.cols < matrix.rows:
        matrix = matrix.transpose()
    return len(_echelon(_integer_row(row) for row in matrix.row_list()))


def rank_kernel_image(matrix: RationalMatrix) -> RankKernelImage:
    pivots = _echelon(_integer_row(row) for row in matrix.row_list())
    pivot_columns = sorted(pivots)
    free_columns = [c for c in range(matrix.cols) if c not in pivots]

    kernel: List[Vector] = list()
    for free in free_columns:
        solution: Dict[int, Fraction] = {free: ONE}
        for col in reversed(pivot_columns):
            row = pivots[col]
            total = sum(
                (v * solution[c] for c, v in row.items() if c != col and c in solution),
                ZERO,
            )
            if total != 0:
                solution[col] = -total / row[col]
        kernel.append(tuple(solution.get(c, ZERO) for c in range(matrix.cols)))

    image = [matrix.column(c) for c in pivot_columns]
    return RankKernelImage(len(pivots), kernel, image, tuple(free_columns))


def independent_row_indices(matrix: RationalMatrix) -> List[int]:
    """Greedy choice of row indices forming a basis of the row space."""
    pivots: Dict[int, IntegerRow] = dict()
    chosen: List[int] = list()
    for index in range(matrix.rows):
        row = _integer_row(matrix.row(index))
        if row and _reduce_into(pivots, row):
            chosen.append(index)
    return chosen


def matrix_from_vectors(vectors: Sequence[Sequence[Fraction]], dimension: int) -> RationalMatrix:
    if len(vectors) == 0:
        return RationalMatrix.zeros(dimension, 0)
    return RationalMatrix.from_columns(vectors, dimension)


def solve_in_span(basis: RationalMatrix, targets: RationalMatrix) -> RationalMatrix:
    """
    Coordinates X with basis @ X == targets, where basis has independent
    columns. Raises ValueError when a target column leaves the span.
    """
    if basis.cols == 0:
        if not targets.is_zero():
            raise ValueError("target vectors are not in the span of the basis")
        return RationalMatrix.zeros(0, targets.cols)
    rows = independent_row_indices(basis)
    if len(rows) != basis.cols:
        raise ValueError("basis columns are not independent")
    result = basis.submatrix(rows, range(basis.cols)).inverse() @ targets.submatrix(
        rows, range(targets.cols)
    )
    if basis @ result != targets:
        raise ValueError("target vectors are not in the span of the basis")
    return result


def induced_matrix(action: RationalMatrix, basis: RationalMatrix) -> RationalMatrix:
    """
    Matrix X with action @ basis == basis @ X, for an invariant subspace
    spanned by the (independent) columns of basis.
    """
    if basis.cols == 0:
        return RationalMatrix.zeros(0, 0)
    try:
        return solve_in_span(basis, action @ basis)
    except ValueError as error:
        raise ValueError("subspace is not invariant under the action") from error


def right_inverse(matrix: RationalMatrix) -> RationalMatrix:
    """M^T (M M^T)^-1 for a matrix with independent rows."""
    if matrix.rows == 0:
        return RationalMatrix.zeros(matrix.cols, 0)
    return matrix.transpose() @ (matrix @ matrix.transpose()).inverse()


def annihilator(matrix: RationalMatrix) -> RationalMatrix:
    """Rows spanning the linear forms that vanish on the column space."""
    kernel = rank_kernel_image(matrix.transpose()).kernel_basis
    if len(kernel) == 0:
        return RationalMatrix.zeros(0, matrix.rows)
    return RationalMatrix.from_rows(kernel, matrix.rows)


def quotient_matrix(action: RationalMatrix, basis: RationalMatrix) -> RationalMatrix:
    """Matrix of the action induced on ambient / span(basis columns)."""
    n = action.rows
    if basis.cols == 0:
        return action
    rows = independent_row_indices(basis)
    if len(rows) != basis.cols:
        raise ValueError("basis columns are not independent")
    complement = [j for j in range(n) if j not in rows]
    units = RationalMatrix.identity(n).submatrix(range(n), complement)
    frame = basis.hstack(units)
    adapted = frame.inverse() @ action @ frame
    r = basis.cols
    if not adapted.submatrix(range(r, n), range(r)).is_zero():
        raise ValueError("subspace is not invariant under the action")
    return adapted.submatrix(range(r, n), range(r, n))


class TraceFrame(NamedTuple):
    """
    Traces on a subquotient Z / B of k^d, for operators preserving Z and B.

    tr(A | Z/B) = sum of weight * A[row, col] over the weights, so an
    operator is only ever read at those entries.
    """

    dimension: int
    weights: Tuple[Tuple[int, int, Fraction], ...]

    def trace(self, entry: Callable[[int, int], Fraction]) -> Fraction:
        return sum((weight * entry(row, col) for row, col, weight in self.weights), ZERO)


def trace_frame(
    cycles: Sequence[Vector], free_columns: Sequence[int], boundaries: Sequence[Sequence[Fraction]]
) -> TraceFrame:
    """
    Frame for Z / B with Z spanned by a kernel basis as rank_kernel_image
    returns it, with its free columns, and B spanned by independent
    boundary vectors inside Z.

    Kernel vectors are unit vectors on the free columns, so a cycle's
    coordinates are its free-column entries. The quotient map Q is the
    kernel of the boundary coordinates and its section S picks the free
    columns of that second reduction. The trace of A on Z / B is
    tr(Q P A Z S) with P the free-column projection, read off the
    sparse product Z S Q.
    """
    if len(cycles) == 0:
        return TraceFrame(0, tuple())
    free = tuple(free_columns)
    if len(boundaries) == 0:
        coordinates = RationalMatrix.zeros(0, len(cycles))
    else:
        coordinates = RationalMatrix.from_rows([[vector[c] for c in free] for vector in boundaries], len(cycles))
    quotient = rank_kernel_image(coordinates)
    if quotient.rank != len(boundaries):
        raise ValueError("boundary vectors are not independent")

    weights: Dict[Tuple[int, int], Fraction] = dict()
    for section, projection in zip(quotient.free_columns, quotient.kernel_basis):
        support = [(col, value) for col, value in enumerate(cycles[section]) if value != 0]
        for j, q in enumerate(projection):
            if q == 0:
                continue
            for col, value in support:
                key = (free[j], col)
                weights[key] = weights.get(key, ZERO) + q * value
    entries = tuple((row, col, w) for (row, col), w in sorted(weights.items()) if w != 0)
    return TraceFrame(len(quotient.kernel_basis), entries)
