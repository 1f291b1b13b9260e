#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import pickle

import pytest

from hkrcheck.core.errors import GroupClosureError, InstanceFormatError, NotAGroupError, NotFiniteOrderError
from hkrcheck.core.matrix import RationalMatrix
from hkrcheck.geometry.group import build_group, trivial_group
from hkrcheck.geometry.orbifold import verify_class_equation


def matrix(rows):
    return RationalMatrix.from_rows(rows)


ORDERS = {
    "trivial-plane": 1,
    "z2-line": 2,
    "z2-plane": 2,
    "s2-swap": 2,
    "z3-rotation": 3,
    "s3-permutations": 6,
}


@pytest.mark.parametrize("name, order", sorted(ORDERS.items()))
def test_orders(groups, name, order):
    assert groups[name].order == order


def test_identity_comes_first(corpus_group):
    group, _ = corpus_group
    assert group.elements[0].is_identity()
    assert all(group.multiply(0, g) == g for g in range(group.order))
    assert all(group.multiply(g, group.inverses[g]) == 0 for g in range(group.order))


def test_class_equation(corpus_group):
    group, _ = corpus_group
    assert verify_class_equation(group).passed
    for g in range(group.order):
        assert g in group.centralizers[g]
        assert group.conjugate(0, g) == g


def test_s3_classes(groups):
    s3 = groups["s3-permutations"]
    assert tuple(len(members) for members in s3.conjugacy_classes) == (1, 3, 2)
    assert s3.representatives() == [0, 1, 2]
    assert len(s3.centralizers[1]) == 2
    assert len(s3.centralizers[2]) == 3
    check = verify_class_equation(s3)
    assert dict(check.details) == {"order": "6", "classes": "1 3 2"}


def test_index_of(groups):
    swap = groups["s2-swap"]
    assert swap.index_of(matrix([[0, 1], [1, 0]])) == 1
    with pytest.raises(ValueError):
        swap.index_of(matrix([[1, 1], [0, 1]]))


def test_trivial_group():
    group = trivial_group(3)
    assert group.order == 1
    assert group.conjugacy_classes == ((0,),)


def test_infinite_closure_is_rejected():
    with pytest.raises(GroupClosureError) as error:
        build_group([matrix([[2]])], bound=10)
    assert error.value.bound == 10


def test_singular_generator_is_rejected():
    with pytest.raises(NotAGroupError):
        build_group([matrix([[1, 0], [0, 0]])])


def test_generator_shapes_must_agree():
    with pytest.raises(ValueError):
        build_group([RationalMatrix.identity(2), RationalMatrix.identity(3)])
    with pytest.raises(ValueError):
        build_group([])


@pytest.mark.parametrize(
    "error",
    [GroupClosureError(48), NotFiniteOrderError(24), InstanceFormatError("n", "expected an integer")],
)
def test_errors_cross_process_boundaries(error):
    copy = pickle.loads(pickle.dumps(error))
    assert type(copy) is type(error)
    assert str(copy) == str(error)
