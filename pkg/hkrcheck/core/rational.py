#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import re
from fractions import Fraction
from typing import Any, Union

# "p" or "p/q", optional sign on p, no decimal point
_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

RationalLike = Union[int, Fraction, str]


def parse_rational(value: Any) -> Fraction:
    """
    Parse an exact rational.

    Accepts Python ints, Fractions and strings of the form "p" or "p/q".
    Floats and decimal strings such as "0.5" are rejected, they are not
    exact encodings.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if match is None:
            raise ValueError("'%s' is not an exact rational (use \"p/q\")" % value)
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ValueError("'%s' has a zero denominator" % value)
        return Fraction(numerator, denominator)
    raise TypeError("%r is not an exact rational" % (value,))


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)
