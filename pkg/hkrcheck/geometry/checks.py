#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..complexes.hilbert import Bidegree, HilbertTable


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """
    One verified identity. A mismatch is a failed check, never an
    exception; both sides are kept so a failure can be read off the report.
    """

    name: str
    passed: bool
    left_label: str = "formula"
    right_label: str = "oracle"
    left: Optional[HilbertTable] = None
    right: Optional[HilbertTable] = None
    details: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    @property
    def diff(self) -> Dict[Bidegree, Tuple[int, int]]:
        if self.left is None or self.right is None:
            return dict()
        return self.left.diff(self.right)


def compare_tables(
    name: str,
    left: HilbertTable,
    right: HilbertTable,
    left_label: str = "formula",
    right_label: str = "oracle",
    details: Optional[Dict[str, str]] = None,
) -> Check:
    passed = left == right
    check = Check(
        name,
        passed,
        left_label,
        right_label,
        left,
        right,
        tuple((details or {}).items()),
    )
    if passed:
        logger.info("%s: pass", name)
    else:
        logger.warning("%s: FAIL, %d mismatching bidegrees", name, len(check.diff))
    return check


def boolean_check(name: str, passed: bool, details: Optional[Dict[str, str]] = None) -> Check:
    if passed:
        logger.info("%s: pass", name)
    else:
        logger.warning("%s: FAIL", name)
    return Check(name, passed, details=tuple((details or {}).items()))


def all_passed(checks: List[Check]) -> bool:
    return all(check.passed for check in checks)
