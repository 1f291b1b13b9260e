#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""Key names and typed accessors for instance-file dictionaries."""

from typing import Any, Dict, Final, List

from ..core.errors import InstanceFormatError


# basic functions


def list_static_class_variables(class_to_list) -> List[str]:
    items = list()
    for key in class_to_list.__dict__:
        if not key.startswith("__") and isinstance(class_to_list.__dict__[key], str):
            items.append(class_to_list.__dict__[key])
    return items


def get_dict_value(
    dict_object: Dict[str, Any],
    key: str,
    value_type: Any,
    default_value: Any,
    path: str = "",
) -> Any:
    """dict_object[key] checked against value_type, or default_value when absent/null."""
    if key in dict_object and dict_object[key] is not None:
        value = dict_object[key]
        # bool is an int subclass, never accept it as a number
        if isinstance(value, bool) and value_type is not bool:
            raise InstanceFormatError(path + key, "expected %s, got a boolean" % _type_name(value_type))
        if not isinstance(value, value_type):
            raise InstanceFormatError(
                path + key, "expected %s, got %s" % (_type_name(value_type), type(value).__name__)
            )
        return value
    return default_value


def require_dict_value(
    dict_object: Dict[str, Any], key: str, value_type: Any, path: str = ""
) -> Any:
    if key not in dict_object or dict_object[key] is None:
        raise InstanceFormatError(path + key, "missing required field")
    return get_dict_value(dict_object, key, value_type, None, path)


def check_known_keys(dict_object: Dict[str, Any], keys_class, path: str = "") -> None:
    known = set(list_static_class_variables(keys_class))
    for key in dict_object:
        if key not in known:
            raise InstanceFormatError(path + str(key), "unknown field")


def _type_name(value_type: Any) -> str:
    if isinstance(value_type, tuple):
        return " or ".join(t.__name__ for t in value_type)
    return value_type.__name__


# Model Definitions


class InstanceKinds:
    INTERSECTION: Final[str] = "intersection"
    FIXED_LOCUS: Final[str] = "fixed-locus"
    ORBIFOLD: Final[str] = "orbifold"


class InstanceKeys:
    KIND: Final[str] = "kind"
    N: Final[str] = "n"
    NAME: Final[str] = "name"
    WINDOW: Final[str] = "window"
    TWISTS: Final[str] = "twists"
    OPTIONS: Final[str] = "options"

    # intersection payload
    X_FORMS: Final[str] = "X_forms"
    Y_FORMS: Final[str] = "Y_forms"

    # fixed-locus payload
    PHI: Final[str] = "phi"

    # orbifold payload
    GENERATORS: Final[str] = "generators"


class TwistKeys:
    F: Final[str] = "F"
    G: Final[str] = "G"


class OptionKeys:
    ROUTES: Final[str] = "routes"
    ORACLE: Final[str] = "oracle"
    ORDER_BOUND: Final[str] = "order_bound"
    GROUP_BOUND: Final[str] = "group_bound"
    WORKERS: Final[str] = "workers"
