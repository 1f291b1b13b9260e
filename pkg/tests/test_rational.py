#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from fractions import Fraction

import pytest

from hkrcheck.core.rational import format_rational, parse_rational


@pytest.mark.parametrize(
    "value, expected",
    [
        ("1/2", Fraction(1, 2)),
        ("-3", Fraction(-3)),
        (" 4 / 6 ", Fraction(2, 3)),
        ("+7", Fraction(7)),
        (5, Fraction(5)),
        (Fraction(-2, 5), Fraction(-2, 5)),
    ],
)
def test_parse_exact_values(value, expected):
    assert parse_rational(value) == expected


@pytest.mark.parametrize("value", ["0.5", "1e3", "1/", "", "x", "1/-2"])
def test_parse_rejects_inexact_strings(value):
    with pytest.raises(ValueError):
        parse_rational(value)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ValueError, match="zero denominator"):
        parse_rational("3/0")


@pytest.mark.parametrize("value", [0.5, True, None, [1]])
def test_parse_rejects_other_types(value):
    with pytest.raises(TypeError):
        parse_rational(value)


def test_format():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert parse_rational(format_rational(Fraction(22, 7))) == Fraction(22, 7)
