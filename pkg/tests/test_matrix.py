#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from fractions import Fraction

import pytest

from hkrcheck.core.matrix import (
    RationalMatrix,
    annihilator,
    independent_row_indices,
    induced_matrix,
    matrix_from_vectors,
    quotient_matrix,
    rank,
    rank_kernel_image,
    right_inverse,
    solve_in_span,
    trace_frame,
)


def m(rows):
    return RationalMatrix.from_rows(rows)


def test_construction_and_access():
    a = m([["1/2", 0], [3, "-1"]])
    assert a.shape == (2, 2)
    assert a[0, 0] == Fraction(1, 2)
    assert a.row(1) == (Fraction(3), Fraction(-1))
    assert a.column(0) == (Fraction(1, 2), Fraction(3))
    assert RationalMatrix.from_columns([[1, 2], [3, 4]]) == m([[1, 3], [2, 4]])
    with pytest.raises(ValueError):
        RationalMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        m([["0.5"]])


def test_arithmetic():
    a = m([[1, 2], [3, 4]])
    b = m([[0, 1], [1, 0]])
    assert a @ b == m([[2, 1], [4, 3]])
    assert a + b == m([[1, 3], [4, 4]])
    assert a - a == RationalMatrix.zeros(2, 2)
    assert -b == b.scale(-1)
    assert a.transpose() == m([[1, 3], [2, 4]])
    assert a.hstack(b).shape == (2, 4)
    assert a.vstack(b, b).shape == (6, 2)
    assert b.power(2).is_identity()
    with pytest.raises(ValueError):
        a @ RationalMatrix.zeros(3, 1)


def test_empty_products():
    left = RationalMatrix.zeros(2, 0)
    right = RationalMatrix.zeros(0, 3)
    assert (left @ right) == RationalMatrix.zeros(2, 3)
    assert RationalMatrix.zeros(0, 0).inverse().shape == (0, 0)


def test_kron_is_block_structured():
    a = m([[1, 2], [0, 1]])
    b = m([[0, 1], [1, 0]])
    k = a.kron(b)
    assert k.shape == (4, 4)
    assert k.submatrix(range(2), range(2, 4)) == b.scale(2)
    assert k.submatrix(range(2, 4), range(2)).is_zero()
    assert k.trace() == a.trace() * b.trace()


def test_determinant_inverse_trace():
    a = m([[2, 1], [7, 4]])
    assert a.determinant() == 1
    assert a @ a.inverse() == RationalMatrix.identity(2)
    assert m([[1, 2], [2, 4]]).determinant() == 0
    with pytest.raises(ValueError, match="singular"):
        m([[1, 2], [2, 4]]).inverse()
    assert RationalMatrix.diagonal(["1/2", 3]).trace() == Fraction(7, 2)


def test_rank_kernel_image():
    a = m([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    result = rank_kernel_image(a)
    assert result.rank == 2
    assert len(result.kernel_basis) == 1
    kernel = matrix_from_vectors(result.kernel_basis, 3)
    assert (a @ kernel).is_zero()
    assert len(result.image_basis) == 2
    assert rank(a) == 2
    assert rank(RationalMatrix.zeros(0, 4)) == 0
    assert independent_row_indices(a) == [0, 2]


def test_solve_in_span():
    basis = m([[1, 0], [1, 1], [0, 1]])
    targets = m([[2], [5], [3]])
    assert solve_in_span(basis, targets) == m([[2], [3]])
    with pytest.raises(ValueError, match="span"):
        solve_in_span(basis, m([[1], [0], [0]]))
    assert solve_in_span(RationalMatrix.zeros(3, 0), RationalMatrix.zeros(3, 2)).shape == (0, 2)


def test_right_inverse_and_annihilator():
    forms = m([[1, 1, 0], [0, 1, 1]])
    assert forms @ right_inverse(forms) == RationalMatrix.identity(2)
    columns = m([[1], [0], [0]])
    rows = annihilator(columns)
    assert rows.shape == (2, 3)
    assert (rows @ columns).is_zero()
    assert annihilator(RationalMatrix.identity(2)).shape == (0, 2)


def test_induced_and_quotient_actions():
    swap = m([[0, 1], [1, 0]])
    diagonal = m([[1], [1]])
    assert induced_matrix(swap, diagonal) == m([[1]])
    assert quotient_matrix(swap, diagonal) == m([[-1]])
    with pytest.raises(ValueError, match="invariant"):
        induced_matrix(swap, m([[1], [0]]))


def test_kernel_of_a_rank_one_matrix():
    result = rank_kernel_image(m([[1, 2], [2, 4]]))
    assert result.rank == 1
    assert result.kernel_basis == [(Fraction(-2), Fraction(1))]
    assert result.free_columns == (1,)
    assert result.image_basis == [(Fraction(1), Fraction(2))]


def test_trace_frame_on_a_subquotient():
    # swap (+) 2 on k^3, Z = span(e0, e1), B = span(e0 + e1)
    action = m([[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    identity = RationalMatrix.identity(3)
    cycles = rank_kernel_image(m([[0, 0, 1]]))
    assert cycles.free_columns == (0, 1)

    frame = trace_frame(cycles.kernel_basis, cycles.free_columns, [(Fraction(1), Fraction(1), Fraction(0))])
    assert frame.dimension == 1
    assert frame.trace(lambda row, col: action[row, col]) == -1
    assert frame.trace(lambda row, col: identity[row, col]) == 1

    whole = trace_frame(cycles.kernel_basis, cycles.free_columns, [])
    assert whole.dimension == 2
    assert whole.trace(lambda row, col: action[row, col]) == 0

    assert trace_frame([], (), []).dimension == 0
    with pytest.raises(ValueError, match="independent"):
        trace_frame(cycles.kernel_basis, cycles.free_columns, [(1, 1, 0), (2, 2, 0)])


def test_trace_frame_matches_induced_traces():
    rotation = m([[0, -1], [1, -1]])
    cycles = rank_kernel_image(RationalMatrix.zeros(1, 2))
    frame = trace_frame(cycles.kernel_basis, cycles.free_columns, [])
    power = RationalMatrix.identity(2)
    for _ in range(3):
        assert frame.trace(lambda row, col: power[row, col]) == power.trace()
        power = power @ rotation


def test_hash_and_equality():
    a = m([[1, "1/2"]])
    assert a == m([[1, "2/4"]])
    assert len({a, m([[1, "2/4"]])}) == 1
    assert a != m([[1], ["1/2"]])
