#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Report rendering.

The machine format is line-oriented "key: value" records in a fixed
order, with no timing, so two runs of the same command render
byte-identical text:

    hkrcheck-report: 1
    command: <command>
    window: <lo> <hi>
    instance.<key>: <value>                 one per instance field
    table.<label>: <k> <t> <dim>            one per non-zero entry
    check.<i>.name: <name>
    check.<i>.verdict: pass | fail
    check.<i>.detail.<key>: <value>
    check.<i>.left.label: <label>           compared checks only
    check.<i>.left: <k> <t> <dim>
    check.<i>.right.label: <label>
    check.<i>.right: <k> <t> <dim>
    check.<i>.diff: <k> <t> <left> <right>  failed comparisons only
    verdict: pass | fail

A table without non-zero entries renders the single record
"all zero on window".
"""

from dataclasses import dataclass, field
from typing import Final, List, Tuple

from ..complexes.hilbert import HilbertTable, Window
from ..geometry.checks import Check, all_passed


MACHINE_VERSION: Final[str] = "1"
ALL_ZERO: Final[str] = "all zero on window"


class ReportFormats:
    TABLE: Final[str] = "table"
    MACHINE: Final[str] = "machine"

    ALL: Final[Tuple[str, ...]] = (TABLE, MACHINE)


@dataclass(frozen=True)
class Report:
    command: str
    window: Window
    instance: Tuple[Tuple[str, str], ...]
    tables: Tuple[Tuple[str, HilbertTable], ...] = field(default_factory=tuple)
    checks: Tuple[Check, ...] = field(default_factory=tuple)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all_passed(list(self.checks))

    def with_checks(self, *checks: Check) -> "Report":
        return Report(
            self.command, self.window, self.instance, self.tables, self.checks + tuple(checks), self.elapsed
        )


def _verdict(passed: bool) -> str:
    return "pass" if passed else "fail"


# machine format


def _table_records(key: str, table: HilbertTable) -> List[str]:
    if table.is_zero():
        return ["%s: %s" % (key, ALL_ZERO)]
    return ["%s: %d %d %d" % (key, k, t, value) for (k, t), value in table.items()]


def _render_machine(report: Report) -> str:
    lines = [
        "hkrcheck-report: %s" % MACHINE_VERSION,
        "command: %s" % report.command,
        "window: %d %d" % report.window,
    ]
    lines += ["instance.%s: %s" % (key, value) for key, value in report.instance]
    for label, table in report.tables:
        lines += _table_records("table.%s" % label, table)
    for index, check in enumerate(report.checks):
        prefix = "check.%d" % index
        lines.append("%s.name: %s" % (prefix, check.name))
        lines.append("%s.verdict: %s" % (prefix, _verdict(check.passed)))
        lines += ["%s.detail.%s: %s" % (prefix, key, value) for key, value in check.details]
        if check.left is not None and check.right is not None:
            lines.append("%s.left.label: %s" % (prefix, check.left_label))
            lines += _table_records(prefix + ".left", check.left)
            lines.append("%s.right.label: %s" % (prefix, check.right_label))
            lines += _table_records(prefix + ".right", check.right)
            for (k, t), (left, right) in check.diff.items():
                lines.append("%s.diff: %d %d %d %d" % (prefix, k, t, left, right))
    lines.append("verdict: %s" % _verdict(report.passed))
    return "\n".join(lines) + "\n"


# table format


def format_grid(table: HilbertTable, indent: str = "    ") -> List[str]:
    """Rows are cohomological degrees, columns internal degrees."""
    if table.is_zero():
        return [indent + "%s [%d, %d]" % ((ALL_ZERO,) + table.window)]
    columns = list(table.internal_degrees())
    cells = [["k\\t"] + [str(t) for t in columns]]
    for k in table.degrees():
        cells.append([str(k)] + [str(v) for v in table.row(k)])
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    return [indent + "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells]


def _render_table(report: Report) -> str:
    lines = ["hkrcheck %s on window [%d, %d]" % ((report.command,) + report.window), ""]
    width = max((len(key) for key, _ in report.instance), default=0)
    lines += ["  %s  %s" % (key.ljust(width), value) for key, value in report.instance]
    for label, table in report.tables:
        lines += ["", "%s:" % label]
        lines += format_grid(table)
    for check in report.checks:
        lines += ["", "[%s] %s" % ("PASS" if check.passed else "FAIL", check.name)]
        lines += ["    %s: %s" % (key, value) for key, value in check.details]
        if check.left is not None and check.right is not None:
            lines.append("  %s:" % check.left_label)
            lines += format_grid(check.left)
            lines.append("  %s:" % check.right_label)
            lines += format_grid(check.right)
            for (k, t), (left, right) in check.diff.items():
                lines.append("  mismatch at (%d, %d): %d vs %d" % (k, t, left, right))
    passed = sum(1 for check in report.checks if check.passed)
    lines += [
        "",
        "%s: %d of %d checks passed in %.2f s"
        % ("PASS" if report.passed else "FAIL", passed, len(report.checks), report.elapsed),
    ]
    return "\n".join(lines) + "\n"


def render(report: Report, output_format: str = ReportFormats.TABLE) -> str:
    if output_format == ReportFormats.MACHINE:
        return _render_machine(report)
    if output_format == ReportFormats.TABLE:
        return _render_table(report)
    raise ValueError("format must be one of %s, got %r" % (", ".join(ReportFormats.ALL), output_format))
