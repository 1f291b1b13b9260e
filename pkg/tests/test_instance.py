#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import json
import os
from fractions import Fraction

import pytest

from hkrcheck.cli.instance import parse_instance, parse_instance_dict
from hkrcheck.core.errors import InstanceFormatError
from hkrcheck.core.matrix import RationalMatrix
from hkrcheck.helpers.defaults import ORDER_BOUND, Routes


def intersection(**changes):
    data = {"kind": "intersection", "n": 2, "X_forms": [["1", "0"]], "Y_forms": [["0", "1"]]}
    data.update(changes)
    return data


def rejection(data) -> InstanceFormatError:
    with pytest.raises(InstanceFormatError) as error:
        parse_instance_dict(data)
    return error.value


def test_every_shipped_instance_parses(instances_dir):
    names = sorted(name for name in os.listdir(instances_dir) if name.endswith(".json"))
    assert len(names) >= 3
    kinds = {parse_instance(os.path.join(instances_dir, name)).kind for name in names}
    assert kinds == {"intersection", "fixed-locus", "orbifold"}


def test_transversal_lines(instances_dir):
    instance = parse_instance(os.path.join(instances_dir, "transversal_lines.json"))
    assert (instance.kind, instance.n, instance.name) == ("intersection", 2, "transversal-lines")
    assert instance.x_forms == RationalMatrix.from_rows([[1, 0]])
    assert instance.window is None
    assert instance.options.routes == Routes.ALL
    assert instance.options.oracle
    assert instance.options.order_bound == ORDER_BOUND
    assert instance.echo() == [
        ("kind", "intersection"),
        ("n", "2"),
        ("name", "transversal-lines"),
        ("X_forms", "1 0"),
        ("Y_forms", "0 1"),
        ("F", "0"),
        ("G", "0"),
    ]


def test_optional_fields(instances_dir):
    instance = parse_instance(os.path.join(instances_dir, "planes_in_a4.json"))
    assert instance.window == (-6, 5)
    assert instance.f_twists == (0, -2)
    assert instance.g_twists == (0, -1)
    rational = parse_instance(os.path.join(instances_dir, "rational_self_line.json"))
    assert rational.x_forms[0, 1] == Fraction(1, 2)
    assert rational.options.routes == (Routes.RESOLVE_X, Routes.DIAGONAL)


def test_orbifold_echo(instances_dir):
    instance = parse_instance(os.path.join(instances_dir, "s2_swap.json"))
    assert instance.echo()[-1] == ("generator.0", "0 1; 1 0")


def test_decimal_entries_are_rejected():
    error = rejection(intersection(X_forms=[["0.5", "0"]]))
    assert error.field == "X_forms[0][0]"
    assert "p/q" in str(error)


def test_float_entries_are_rejected():
    assert rejection(intersection(Y_forms=[[0.5, 1]])).field == "Y_forms[0][0]"


def test_wrong_dimensions():
    data = {"kind": "fixed-locus", "n": 2, "phi": [["1", "0", "0"], ["0", "1", "0"]]}
    error = rejection(data)
    assert error.field == "phi[0]"
    assert "expected 2 entries" in str(error)
    assert rejection(intersection(X_forms=[["1"]])).field == "X_forms[0]"
    three_rows = {"kind": "orbifold", "n": 2, "generators": [[["1", "0"], ["0", "1"], ["0", "0"]]]}
    assert rejection(three_rows).field == "generators[0]"


def test_unknown_and_misplaced_fields():
    assert rejection(intersection(colour="red")).field == "colour"
    assert rejection(intersection(phi=[["1"]])).field == "phi"
    assert "not allowed" in str(rejection(intersection(generators=[])))
    assert rejection(intersection(options={"speed": 1})).field == "options.speed"
    assert rejection(intersection(twists={"H": [0]})).field == "twists.H"


def test_required_fields():
    assert rejection({"n": 2}).field == "kind"
    assert rejection({"kind": "orbifold", "n": 1}).field == "generators"
    assert rejection({"kind": "orbifold", "n": 1, "generators": []}).field == "generators"
    assert rejection({"kind": "torus", "n": 1}).field == "kind"
    assert rejection(intersection(n=0)).field == "n"
    assert rejection(intersection(n=True)).field == "n"
    assert rejection([1, 2]).field is None


def test_option_values():
    assert rejection(intersection(options={"routes": ["sideways"]})).field == "options.routes[0]"
    assert rejection(intersection(options={"routes": []})).field == "options.routes"
    assert rejection(intersection(options={"workers": 0})).field == "options.workers"
    assert rejection(intersection(options={"oracle": "yes"})).field == "options.oracle"
    assert rejection(intersection(window=[3, 1])).field == "window"
    assert rejection(intersection(window=[0])).field == "window"
    assert rejection(intersection(twists={"F": []})).field == "twists.F"
    parsed = parse_instance_dict(intersection(options={"oracle": False, "workers": 3}))
    assert not parsed.options.oracle
    assert parsed.options.workers == 3


def test_missing_file(tmp_path):
    with pytest.raises(InstanceFormatError, match="not found"):
        parse_instance(str(tmp_path / "missing.json"))


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "intersection",\n "n": 2,', encoding="utf8")
    with pytest.raises(InstanceFormatError, match="malformed JSON .* line 2"):
        parse_instance(str(path))


def test_round_trip_through_a_file(tmp_path):
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(intersection(name="lines")), encoding="utf8")
    assert parse_instance(str(path)) == parse_instance_dict(intersection(name="lines"))
