#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import json
import logging
import os
import shutil

import pytest

from hkrcheck import __version__
from hkrcheck.cli.main import ExitCodes, build_parser, main


GOLDEN_RUNS = [
    ("transversal_lines.json", "tor", "transversal_lines_tor.txt"),
    ("reflection.json", "fixed", "reflection_fixed.txt"),
    ("z2_line.json", "full", "z2_line_full.txt"),
    ("s2_swap.json", "full", "s2_swap_full.txt"),
]


@pytest.fixture(autouse=True)
def restore_logging():
    yield
    package_logger = logging.getLogger("hkrcheck")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
        handler.close()


@pytest.mark.parametrize("instance, command, golden", GOLDEN_RUNS)
def test_golden_reports(instances_dir, golden_dir, regold, tmp_path, instance, command, golden):
    out = tmp_path / golden
    argv = [command, os.path.join(instances_dir, instance), "--window", "0", "2",
            "--format", "machine", "--out", str(out)]
    assert main(argv) == ExitCodes.PASS
    golden_path = os.path.join(golden_dir, golden)
    if regold:
        shutil.copyfile(str(out), golden_path)
    with open(golden_path, "r", encoding="utf8") as f:
        assert out.read_text(encoding="utf8") == f.read()


def test_expect_flag(instances_dir, golden_dir, tmp_path):
    instance = os.path.join(instances_dir, "reflection.json")
    golden = os.path.join(golden_dir, "reflection_fixed.txt")
    out = str(tmp_path / "report.txt")
    assert main(["fixed", instance, "--window", "0", "2", "--expect", golden, "--out", out]) == ExitCodes.PASS

    falsified = tmp_path / "falsified.txt"
    with open(golden, "r", encoding="utf8") as f:
        falsified.write_text(f.read().replace("check.3.right: 0 1 1", "check.3.right: 0 1 2"), encoding="utf8")
    argv = ["fixed", instance, "--window", "0", "2", "--expect", str(falsified), "--out", out]
    assert main(argv) == ExitCodes.FAIL
    with open(out, "r", encoding="utf8") as f:
        assert "[FAIL] expected report" in f.read()


def test_table_format_on_stdout(instances_dir, capsys):
    assert main(["tor", os.path.join(instances_dir, "transversal_lines.json"), "--window", "0", "1"]) == ExitCodes.PASS
    output = capsys.readouterr().out
    assert output.startswith("hkrcheck tor on window [0, 1]")
    assert "PASS: 3 of 3 checks passed" in output


def test_route_selection(instances_dir, tmp_path):
    out = tmp_path / "report.txt"
    argv = ["tor", os.path.join(instances_dir, "transversal_lines.json"), "--window", "0", "1",
            "--routes", "y", "diag", "--format", "machine", "--out", str(out)]
    assert main(argv) == ExitCodes.PASS
    assert "check.0.name: tor routes resolve_Y/diagonal\n" in out.read_text(encoding="utf8")


def test_corrupted_instance(tmp_path, caplog):
    path = tmp_path / "corrupted.json"
    path.write_text('{"kind": "intersection", "n": 2, "X_forms": [["1", "0"]', encoding="utf8")
    assert main(["tor", str(path)]) == ExitCodes.INVALID
    assert "malformed JSON" in caplog.text


def test_missing_instance(tmp_path):
    assert main(["tor", str(tmp_path / "missing.json")]) == ExitCodes.INVALID


def test_incompatible_command(instances_dir, caplog):
    assert main(["hh", os.path.join(instances_dir, "transversal_lines.json")]) == ExitCodes.INVALID
    assert "does not apply" in caplog.text


def test_non_finite_order(tmp_path, caplog):
    path = tmp_path / "dilation.json"
    path.write_text(json.dumps({"kind": "fixed-locus", "n": 2, "phi": [["2", "0"], ["0", "1"]]}), encoding="utf8")
    assert main(["fixed", str(path), "--window", "0", "1"]) == ExitCodes.INVALID
    assert "1 <= k <= 24" in caplog.text


def test_empty_window(instances_dir, caplog):
    argv = ["tor", os.path.join(instances_dir, "transversal_lines.json"), "--window", "3", "1"]
    assert main(argv) == ExitCodes.INVALID
    assert "--window" in caplog.text


def test_log_file(instances_dir, tmp_path):
    log = tmp_path / "run.log"
    argv = ["tor", os.path.join(instances_dir, "transversal_lines.json"), "--window", "0", "1",
            "--verbose", "--log-file", str(log), "--out", str(tmp_path / "report.txt")]
    assert main(argv) == ExitCodes.PASS
    assert "[DEBUG]" in log.read_text(encoding="utf8")


def test_parser():
    parser = build_parser()
    args = parser.parse_args(["ext", "instance.json", "--no-oracle", "--workers", "2"])
    assert (args.command, args.no_oracle, args.workers, args.format) == ("ext", True, 2, "table")
    with pytest.raises(SystemExit):
        parser.parse_args(["ext", "instance.json", "--verbose", "--quiet"])
    with pytest.raises(SystemExit):
        parser.parse_args(["sideways", "instance.json"])
    assert __version__


def test_inconsistent_computation_is_a_failure(instances_dir, tmp_path, monkeypatch):
    def inconsistent(instance, command, flags):
        raise ArithmeticError("excess rank 2 differs from 1")

    monkeypatch.setattr("hkrcheck.cli.main.run", inconsistent)
    log = tmp_path / "run.log"
    argv = ["tor", os.path.join(instances_dir, "transversal_lines.json"), "--log-file", str(log)]
    assert main(argv) == ExitCodes.FAIL
    assert "inconsistent computation: excess rank 2 differs from 1" in log.read_text(encoding="utf8")
