#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import os
from typing import Dict, List, Tuple

import pytest

from hkrcheck.core.matrix import RationalMatrix
from hkrcheck.geometry.group import FiniteMatrixGroup, build_group
from hkrcheck.geometry.intersection import IntersectionInstance


TESTS_DIR = os.path.dirname(os.path.abspath(__file__))
ROOT_DIR = os.path.dirname(TESTS_DIR)
INSTANCES_DIR = os.path.join(ROOT_DIR, "instances")
GOLDEN_DIR = os.path.join(TESTS_DIR, "golden")


def pytest_addoption(parser):
    parser.addoption(
        "--regold",
        action="store_true",
        default=False,
        help="rewrite the golden machine reports instead of comparing against them",
    )


@pytest.fixture
def regold(request) -> bool:
    return request.config.getoption("--regold")


@pytest.fixture
def instances_dir() -> str:
    return INSTANCES_DIR


@pytest.fixture
def golden_dir() -> str:
    return GOLDEN_DIR


def matrix(rows) -> RationalMatrix:
    return RationalMatrix.from_rows(rows)


# name -> (n, X_forms, Y_forms, excess rank, dim W)
INTERSECTIONS: Dict[str, Tuple[int, List[List[str]], List[List[str]], int, int]] = {
    "transversal-lines": (2, [["1", "0"]], [["0", "1"]], 0, 0),
    "self-line": (2, [["1", "0"]], [["1", "0"]], 1, 1),
    "point-in-line": (2, [["1", "0"], ["0", "1"]], [["1", "0"]], 1, 0),
    "plane-and-line": (2, [], [["1", "0"]], 0, 1),
    "skew-lines": (2, [["1", "-1"]], [["1", "1"]], 0, 0),
    "rational-self-line": (2, [["1", "1/2"]], [["2", "1"]], 1, 1),
    "line-through-plane": (3, [["1", "0", "0"], ["0", "1", "0"]], [["0", "0", "1"]], 0, 0),
    "line-in-plane": (3, [["1", "0", "0"], ["0", "1", "0"]], [["1", "0", "0"]], 1, 1),
    "self-plane": (3, [["1", "0", "0"]], [["1", "0", "0"]], 1, 2),
    "crossing-lines": (3, [["0", "1", "0"], ["0", "0", "1"]], [["1", "0", "0"], ["0", "0", "1"]], 1, 0),
    "planes-along-a-line": (4, [["0", "0", "1", "0"], ["0", "0", "0", "1"]],
                            [["0", "1", "0", "0"], ["0", "0", "0", "1"]], 1, 1),
    "planes-at-a-point": (4, [["0", "0", "1", "0"], ["0", "0", "0", "1"]],
                          [["1", "0", "0", "0"], ["0", "1", "0", "0"]], 0, 0),
    "self-line-in-a4": (4, [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"]],
                        [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"]], 3, 1),
}


@pytest.fixture(params=sorted(INTERSECTIONS), scope="session")
def corpus_intersection(request) -> Tuple[IntersectionInstance, int, int]:
    n, x_forms, y_forms, excess_rank, dim_w = INTERSECTIONS[request.param]
    return IntersectionInstance.create(n, x_forms, y_forms), excess_rank, dim_w


S3_GENERATORS = [
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
]

# name -> (generators, invariant ring dimensions in degrees 0..6)
GROUPS: Dict[str, Tuple[List[List[List[int]]], List[int]]] = {
    "trivial-plane": ([[[1, 0], [0, 1]]], [1, 2, 3, 4, 5, 6, 7]),
    "z2-line": ([[[-1]]], [1, 0, 1, 0, 1, 0, 1]),
    "z2-plane": ([[[-1, 0], [0, -1]]], [1, 0, 3, 0, 5, 0, 7]),
    "s2-swap": ([[[0, 1], [1, 0]]], [1, 1, 2, 2, 3, 3, 4]),
    "z3-rotation": ([[[0, -1], [1, -1]]], [1, 0, 1, 2, 1, 2, 3]),
    "s3-permutations": (S3_GENERATORS, [1, 1, 2, 3, 4, 5, 7]),
}


@pytest.fixture(scope="session")
def groups() -> Dict[str, FiniteMatrixGroup]:
    return {
        name: build_group([matrix(g) for g in generators]) for name, (generators, _) in GROUPS.items()
    }


@pytest.fixture(params=sorted(GROUPS), scope="session")
def corpus_group(request, groups) -> Tuple[FiniteMatrixGroup, List[int]]:
    return groups[request.param], GROUPS[request.param][1]
