#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import os

import pytest

from hkrcheck.cli.commands import Commands, RunFlags, resolve_context, run
from hkrcheck.cli.instance import parse_instance, parse_instance_dict
from hkrcheck.cli.report import ReportFormats, render
from hkrcheck.complexes.hilbert import HilbertTable
from hkrcheck.core.errors import IncompatibleCommandError, NotFiniteOrderError
from hkrcheck.helpers.defaults import WORKERS_ENV, Routes


@pytest.fixture
def transversal(instances_dir):
    return parse_instance(os.path.join(instances_dir, "transversal_lines.json"))


@pytest.fixture
def z2_line(instances_dir):
    return parse_instance(os.path.join(instances_dir, "z2_line.json"))


def test_tor_on_transversal_lines(transversal):
    report = run(transversal, Commands.TOR, RunFlags(window=(0, 2)))
    assert report.passed
    assert [check.name for check in report.checks] == [
        "tor routes resolve_X/resolve_Y",
        "tor routes resolve_X/diagonal",
        "excess tor",
    ]
    assert report.checks[-1].right == HilbertTable((0, 2), {(0, 0): 1})


@pytest.mark.parametrize("command", [Commands.EXCESS, Commands.HKR_KERNEL, Commands.EXT, Commands.FULL])
def test_intersection_commands(instances_dir, command):
    instance = parse_instance(os.path.join(instances_dir, "planes_in_a4.json"))
    report = run(instance, command, RunFlags(window=(-3, 3)))
    assert report.passed, [(check.name, check.diff) for check in report.checks if not check.passed]


def test_fixed_locus_commands(instances_dir):
    instance = parse_instance(os.path.join(instances_dir, "rotation_order_6.json"))
    report = run(instance, Commands.FULL, RunFlags(window=(0, 3)))
    assert report.passed
    assert "fixed locus oracle" in [check.name for check in report.checks]


def test_orbifold_full_run(z2_line):
    report = run(z2_line, Commands.FULL, RunFlags(window=(-3, 3)))
    assert report.passed
    labels = [label for label, _ in report.tables]
    assert labels == ["HH^*", "HH^*.class.0", "HH^*.class.1", "HH_*", "HH_*.class.0", "HH_*.class.1"]


def test_no_oracle_drops_the_brute_force_sections(transversal, z2_line):
    report = run(transversal, Commands.TOR, RunFlags(window=(0, 2), oracle=False))
    assert [check.name for check in report.checks] == ["tor routes resolve_X/resolve_Y", "excess tor"]
    names = [check.name for check in run(z2_line, Commands.HH, RunFlags(window=(0, 2), oracle=False)).checks]
    assert names == ["class equation", "sector symmetry", "class representative averaging", "HH^0 = invariant ring"]


def test_single_route_keeps_the_diagonal(transversal):
    context = resolve_context(transversal, RunFlags(routes=(Routes.DIAGONAL,), oracle=False))
    assert context.routes == (Routes.DIAGONAL,)


def test_context_precedence(instances_dir, transversal, monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)
    context = resolve_context(transversal, RunFlags())
    assert context.window == (-4, 6)
    assert context.workers == 1
    planes = parse_instance(os.path.join(instances_dir, "planes_in_a4.json"))
    assert resolve_context(planes, RunFlags()).window == (-6, 5)
    assert resolve_context(planes, RunFlags(window=(0, 1))).window == (0, 1)
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert resolve_context(transversal, RunFlags()).workers == 3
    assert resolve_context(transversal, RunFlags(workers=2)).workers == 2
    monkeypatch.setenv(WORKERS_ENV, "many")
    with pytest.raises(ValueError, match=WORKERS_ENV):
        resolve_context(transversal, RunFlags())


def test_concurrent_sections_render_identically(z2_line):
    sequential = run(z2_line, Commands.FULL, RunFlags(window=(-2, 2), workers=1))
    parallel = run(z2_line, Commands.FULL, RunFlags(window=(-2, 2), workers=3))
    assert render(sequential, ReportFormats.MACHINE) == render(parallel, ReportFormats.MACHINE)


def test_incompatible_commands(transversal, z2_line):
    with pytest.raises(IncompatibleCommandError, match="does not apply"):
        run(transversal, Commands.HH)
    with pytest.raises(IncompatibleCommandError):
        run(z2_line, Commands.TOR)
    with pytest.raises(IncompatibleCommandError, match="unknown command"):
        run(transversal, "everything")


def test_infinite_order_automorphism():
    instance = parse_instance_dict({"kind": "fixed-locus", "n": 2, "phi": [["2", "0"], ["0", "1"]]})
    with pytest.raises(NotFiniteOrderError):
        run(instance, Commands.FIXED)


def test_expectation_check(transversal, golden_dir, tmp_path):
    golden = os.path.join(golden_dir, "transversal_lines_tor.txt")
    report = run(transversal, Commands.TOR, RunFlags(window=(0, 2), expect=golden))
    assert report.checks[-1].name == "expected report"
    assert report.passed

    falsified = tmp_path / "falsified.txt"
    with open(golden, "r", encoding="utf8") as f:
        falsified.write_text(f.read().replace("check.2.left: 0 0 1", "check.2.left: 0 0 2"), encoding="utf8")
    report = run(transversal, Commands.TOR, RunFlags(window=(0, 2), expect=str(falsified)))
    assert not report.passed
    assert dict(report.checks[-1].details)["first difference"] == "line 28"
