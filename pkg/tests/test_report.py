#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import pytest

from hkrcheck.cli.report import ALL_ZERO, Report, ReportFormats, format_grid, render
from hkrcheck.complexes.hilbert import HilbertTable
from hkrcheck.geometry.checks import boolean_check, compare_tables


WINDOW = (0, 2)
POINT = HilbertTable(WINDOW, {(0, 0): 1})
LINE = HilbertTable(WINDOW, {(0, 0): 1, (0, 1): 1, (0, 2): 1})


def report(*checks, tables=()):
    return Report("tor", WINDOW, (("kind", "intersection"), ("n", "2")), tuple(tables), tuple(checks), 0.25)


def test_machine_render_is_deterministic():
    value = report(compare_tables("same", POINT, POINT), tables=[("Tor", LINE)])
    first = render(value, ReportFormats.MACHINE)
    assert first == render(value, ReportFormats.MACHINE)
    assert first.startswith("hkrcheck-report: 1\ncommand: tor\nwindow: 0 2\ninstance.kind: intersection\n")
    assert "table.Tor: 0 1 1\n" in first
    assert first.endswith("verdict: pass\n")
    assert "0.25" not in first


def test_all_zero_marker():
    empty = HilbertTable(WINDOW)
    value = report(compare_tables("empty", empty, empty, "left", "right"), tables=[("Ext", empty)])
    machine = render(value, ReportFormats.MACHINE)
    assert "table.Ext: %s\n" % ALL_ZERO in machine
    assert "check.0.left: %s\n" % ALL_ZERO in machine
    assert "%s [0, 2]" % ALL_ZERO in render(value, ReportFormats.TABLE)


def test_failures_show_both_sides_and_the_diff():
    value = report(compare_tables("mismatch", POINT, LINE, "formula", "oracle"), boolean_check("ok", True))
    assert not value.passed
    machine = render(value, ReportFormats.MACHINE)
    assert "check.0.verdict: fail\n" in machine
    assert "check.0.diff: 0 1 0 1\ncheck.0.diff: 0 2 0 1\n" in machine
    assert machine.endswith("verdict: fail\n")
    table = render(value, ReportFormats.TABLE)
    assert "[FAIL] mismatch" in table
    assert "mismatch at (0, 1): 0 vs 1" in table
    assert "FAIL: 1 of 2 checks passed in 0.25 s" in table


def test_boolean_checks_have_no_sides():
    value = report(boolean_check("flag", True, {"rank E": "1"}))
    machine = render(value, ReportFormats.MACHINE)
    assert "check.0.detail.rank E: 1\n" in machine
    assert "check.0.left" not in machine


def test_with_checks_appends():
    value = report(boolean_check("first", True)).with_checks(boolean_check("second", False))
    assert [check.name for check in value.checks] == ["first", "second"]
    assert not value.passed


def test_grid():
    lines = format_grid(HilbertTable(WINDOW, {(-1, 1): 2, (0, 0): 1}), indent="")
    assert lines == ["k\\t  0  1  2", " -1  0  2  0", "  0  1  0  0"]


def test_unknown_format():
    with pytest.raises(ValueError, match="format"):
        render(report(), "xml")
