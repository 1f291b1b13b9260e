#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Instance files: JSON objects with a "kind" discriminator.

    {
        "kind": "intersection" | "fixed-locus" | "orbifold",
        "n": 2,
        "name": "optional label",
        "window": [lo, hi],                    optional
        "twists": {"F": [0], "G": [0]},        optional
        "options": {"routes": [...], "oracle": true,
                    "order_bound": 24, "group_bound": 48, "workers": 1},
        "X_forms": [["1", "0"]], "Y_forms": [["0", "1"]],     intersection
        "phi": [["1", "0"], ["0", "-1"]],                      fixed-locus
        "generators": [[["-1"]]]                               orbifold
    }

Rational entries are integers or strings "p" / "p/q". Floats and decimal
strings are rejected.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..core.errors import InstanceFormatError
from ..core.matrix import RationalMatrix
from ..core.rational import format_rational, parse_rational
from ..helpers import defaults
from ..helpers.options import (
    InstanceKeys,
    InstanceKinds,
    OptionKeys,
    TwistKeys,
    check_known_keys,
    get_dict_value,
    list_static_class_variables,
    require_dict_value,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InstanceOptions:
    routes: Tuple[str, ...] = defaults.Routes.ALL
    oracle: bool = True
    order_bound: int = defaults.ORDER_BOUND
    group_bound: int = defaults.GROUP_BOUND
    workers: Optional[int] = None


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    n: int
    name: str = ""
    window: Optional[Tuple[int, int]] = None
    f_twists: Tuple[int, ...] = (0,)
    g_twists: Tuple[int, ...] = (0,)
    options: InstanceOptions = field(default_factory=InstanceOptions)
    x_forms: Optional[RationalMatrix] = None
    y_forms: Optional[RationalMatrix] = None
    phi: Optional[RationalMatrix] = None
    generators: Tuple[RationalMatrix, ...] = tuple()

    def echo(self) -> List[Tuple[str, str]]:
        """Key/value pairs describing the instance, in a fixed order."""
        items = [("kind", self.kind), ("n", str(self.n))]
        if self.name:
            items.append(("name", self.name))
        if self.kind == InstanceKinds.INTERSECTION:
            items.append(("X_forms", _format_matrix(self.x_forms)))
            items.append(("Y_forms", _format_matrix(self.y_forms)))
            items.append(("F", " ".join(str(a) for a in self.f_twists)))
            items.append(("G", " ".join(str(b) for b in self.g_twists)))
        elif self.kind == InstanceKinds.FIXED_LOCUS:
            items.append(("phi", _format_matrix(self.phi)))
        else:
            for index, generator in enumerate(self.generators):
                items.append(("generator.%d" % index, _format_matrix(generator)))
        return items


def _format_matrix(matrix: Optional[RationalMatrix]) -> str:
    if matrix is None:
        return ""
    return "; ".join(" ".join(format_rational(v) for v in row) for row in matrix.row_list())


def parse_matrix(value: Any, path: str, rows: Optional[int], cols: int) -> RationalMatrix:
    """A list of rows of rational entries; rows=None accepts any row count."""
    if not isinstance(value, list):
        raise InstanceFormatError(path, "expected a list of rows")
    if rows is not None and len(value) != rows:
        raise InstanceFormatError(path, "expected %d rows, got %d" % (rows, len(value)))
    parsed = list()
    for i, row in enumerate(value):
        row_path = "%s[%d]" % (path, i)
        if not isinstance(row, list):
            raise InstanceFormatError(row_path, "expected a list of entries")
        if len(row) != cols:
            raise InstanceFormatError(row_path, "expected %d entries, got %d" % (cols, len(row)))
        entries = list()
        for j, entry in enumerate(row):
            try:
                entries.append(parse_rational(entry))
            except (TypeError, ValueError) as error:
                raise InstanceFormatError("%s[%d]" % (row_path, j), str(error)) from error
        parsed.append(entries)
    return RationalMatrix.from_rows(parsed, cols)


def _parse_int_list(value: Any, path: str) -> Tuple[int, ...]:
    if not isinstance(value, list) or len(value) == 0:
        raise InstanceFormatError(path, "expected a non-empty list of integers")
    for index, item in enumerate(value):
        if isinstance(item, bool) or not isinstance(item, int):
            raise InstanceFormatError("%s[%d]" % (path, index), "expected an integer")
    return tuple(value)


def _parse_window(value: Any, path: str) -> Optional[Tuple[int, int]]:
    if value is None:
        return None
    window = _parse_int_list(value, path)
    if len(window) != 2:
        raise InstanceFormatError(path, "expected [lo, hi]")
    if window[0] > window[1]:
        raise InstanceFormatError(path, "lo must not exceed hi")
    return (window[0], window[1])


def _parse_options(value: Any) -> InstanceOptions:
    path = InstanceKeys.OPTIONS + "."
    if value is None:
        return InstanceOptions()
    if not isinstance(value, dict):
        raise InstanceFormatError(InstanceKeys.OPTIONS, "expected an object")
    check_known_keys(value, OptionKeys, path)

    routes = get_dict_value(value, OptionKeys.ROUTES, list, None, path)
    if routes is None:
        routes = defaults.Routes.ALL
    else:
        known = list_static_class_variables(defaults.Routes)
        for index, route in enumerate(routes):
            if route not in known:
                raise InstanceFormatError(
                    "%s%s[%d]" % (path, OptionKeys.ROUTES, index),
                    "unknown route %r, expected one of %s" % (route, ", ".join(defaults.Routes.ALL)),
                )
        if len(routes) == 0:
            raise InstanceFormatError(path + OptionKeys.ROUTES, "at least one route is required")
        routes = tuple(routes)

    numbers = dict()
    for key, default in (
        (OptionKeys.ORDER_BOUND, defaults.ORDER_BOUND),
        (OptionKeys.GROUP_BOUND, defaults.GROUP_BOUND),
        (OptionKeys.WORKERS, None),
    ):
        number = get_dict_value(value, key, int, default, path)
        if number is not None and number < 1:
            raise InstanceFormatError(path + key, "must be a positive integer")
        numbers[key] = number

    return InstanceOptions(
        routes,
        get_dict_value(value, OptionKeys.ORACLE, bool, True, path),
        numbers[OptionKeys.ORDER_BOUND],
        numbers[OptionKeys.GROUP_BOUND],
        numbers[OptionKeys.WORKERS],
    )


def parse_instance_dict(data: Any) -> InstanceFile:
    if not isinstance(data, dict):
        raise InstanceFormatError(None, "an instance must be a JSON object")
    check_known_keys(data, InstanceKeys)

    kind = require_dict_value(data, InstanceKeys.KIND, str)
    kinds = list_static_class_variables(InstanceKinds)
    if kind not in kinds:
        raise InstanceFormatError(InstanceKeys.KIND, "expected one of %s, got %r" % (", ".join(kinds), kind))
    n = require_dict_value(data, InstanceKeys.N, int)
    if n < 1:
        raise InstanceFormatError(InstanceKeys.N, "must be a positive integer")
    name = get_dict_value(data, InstanceKeys.NAME, str, "")
    window = _parse_window(data.get(InstanceKeys.WINDOW), InstanceKeys.WINDOW)

    f_twists: Tuple[int, ...] = (0,)
    g_twists: Tuple[int, ...] = (0,)
    twists = get_dict_value(data, InstanceKeys.TWISTS, dict, None)
    if twists is not None:
        path = InstanceKeys.TWISTS + "."
        check_known_keys(twists, TwistKeys, path)
        if twists.get(TwistKeys.F) is not None:
            f_twists = _parse_int_list(twists[TwistKeys.F], path + TwistKeys.F)
        if twists.get(TwistKeys.G) is not None:
            g_twists = _parse_int_list(twists[TwistKeys.G], path + TwistKeys.G)

    options = _parse_options(data.get(InstanceKeys.OPTIONS))

    payload: Dict[str, Any] = dict()
    expected = {
        InstanceKinds.INTERSECTION: (InstanceKeys.X_FORMS, InstanceKeys.Y_FORMS),
        InstanceKinds.FIXED_LOCUS: (InstanceKeys.PHI,),
        InstanceKinds.ORBIFOLD: (InstanceKeys.GENERATORS,),
    }[kind]
    for key in (InstanceKeys.X_FORMS, InstanceKeys.Y_FORMS, InstanceKeys.PHI, InstanceKeys.GENERATORS):
        if key in data and key not in expected:
            raise InstanceFormatError(key, "not allowed for kind %r" % kind)

    if kind == InstanceKinds.INTERSECTION:
        for key in expected:
            require_dict_value(data, key, list)
            payload[key] = parse_matrix(data[key], key, None, n)
        return InstanceFile(
            kind, n, name, window, f_twists, g_twists, options,
            x_forms=payload[InstanceKeys.X_FORMS],
            y_forms=payload[InstanceKeys.Y_FORMS],
        )
    if kind == InstanceKinds.FIXED_LOCUS:
        phi = parse_matrix(require_dict_value(data, InstanceKeys.PHI, list), InstanceKeys.PHI, n, n)
        return InstanceFile(kind, n, name, window, f_twists, g_twists, options, phi=phi)

    generators = require_dict_value(data, InstanceKeys.GENERATORS, list)
    if len(generators) == 0:
        raise InstanceFormatError(InstanceKeys.GENERATORS, "at least one generator is required")
    parsed = tuple(
        parse_matrix(generator, "%s[%d]" % (InstanceKeys.GENERATORS, index), n, n)
        for index, generator in enumerate(generators)
    )
    return InstanceFile(kind, n, name, window, f_twists, g_twists, options, generators=parsed)


def parse_instance(path: str) -> InstanceFile:
    """Read and validate an instance file; every rejection is an InstanceFormatError."""
    try:
        with open(path, "r", encoding="utf8") as f:
            data = json.load(f)
    except FileNotFoundError as error:
        raise InstanceFormatError(None, "instance file %s not found" % path) from error
    except json.JSONDecodeError as error:
        raise InstanceFormatError(
            None, "malformed JSON in %s at line %d column %d: %s" % (path, error.lineno, error.colno, error.msg)
        ) from error
    instance = parse_instance_dict(data)
    logger.debug("parsed %s instance from %s", instance.kind, path)
    return instance
