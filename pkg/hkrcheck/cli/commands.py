#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Command dispatch. Each command is a fixed list of sections; a section
calls module operations and returns the tables and checks it produced.
Sections are independent and may run in worker processes, the report
keeps their declared order.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import repeat
from typing import Callable, Dict, Final, List, Optional, Tuple

from ..core.errors import IncompatibleCommandError, InstanceFormatError
from ..complexes.hilbert import HilbertTable, Window
from ..geometry.checks import Check, boolean_check, compare_tables
from ..geometry.fixed_locus import (
    Automorphism,
    derived_fixed_locus_table,
    fixed_data,
    fixed_locus_instance,
    forms_table,
    verify_averaging,
    verify_excess_identification,
)
from ..geometry.group import FiniteMatrixGroup, build_group
from ..geometry.intersection import (
    IntersectionInstance,
    euler_characteristic_check,
    ext_table,
    route_agreement,
    verify_excess_sequence,
    verify_excess_tor,
    verify_hkr_kernel,
    verify_splitting,
)
from ..geometry.orbifold import (
    delta_pushpull,
    hh_cohomology,
    hh_homology,
    molien_table,
    verify_class_equation,
    verify_hh0_molien,
    verify_sector_symmetry,
)
from ..helpers import defaults
from ..helpers.options import InstanceKinds
from ..oracle.enumeration import enumeration_series
from ..oracle.twisted import oracle_invariants, twisted_tor_oracle
from .instance import InstanceFile
from .report import Report, ReportFormats, render


logger = logging.getLogger(__name__)

Section = Tuple[List[Tuple[str, HilbertTable]], List[Check]]


class Commands:
    TOR: Final[str] = "tor"
    EXCESS: Final[str] = "excess"
    HKR_KERNEL: Final[str] = "hkr-kernel"
    EXT: Final[str] = "ext"
    FIXED: Final[str] = "fixed"
    HH: Final[str] = "hh"
    FULL: Final[str] = "full"

    ALL: Final[Tuple[str, ...]] = (TOR, EXCESS, HKR_KERNEL, EXT, FIXED, HH, FULL)


# command -> section names, per instance kind
COMMAND_SECTIONS: Final[Dict[str, Dict[str, Tuple[str, ...]]]] = {
    InstanceKinds.INTERSECTION: {
        Commands.TOR: ("routes", "excess-tor"),
        Commands.EXCESS: ("splitting", "sequence", "excess-tor", "euler"),
        Commands.HKR_KERNEL: ("hkr-kernel",),
        Commands.EXT: ("ext",),
        Commands.FULL: ("routes", "excess-tor", "splitting", "sequence", "euler", "hkr-kernel", "ext"),
    },
    InstanceKinds.FIXED_LOCUS: {
        Commands.TOR: ("fixed-routes",),
        Commands.FIXED: ("averaging", "excess-identification", "fixed-locus", "fixed-oracle"),
        Commands.FULL: ("averaging", "excess-identification", "fixed-locus", "fixed-routes", "fixed-oracle"),
    },
    InstanceKinds.ORBIFOLD: {
        Commands.HH: ("class-equation", "sector-symmetry", "sectors", "hh0-molien", "molien-enumeration",
                      "hh-oracle-ext", "hh-oracle-tor"),
        Commands.FULL: ("class-equation", "sector-symmetry", "sectors", "hh0-molien", "molien-enumeration",
                        "hh-oracle-ext", "hh-oracle-tor"),
    },
}

# sections skipped by --no-oracle
ORACLE_SECTIONS: Final[Tuple[str, ...]] = (
    "fixed-oracle",
    "molien-enumeration",
    "hh-oracle-ext",
    "hh-oracle-tor",
)


@dataclass(frozen=True)
class RunFlags:
    """Command-line overrides; None falls back to the instance file, then to the defaults."""

    window: Optional[Window] = None
    routes: Optional[Tuple[str, ...]] = None
    oracle: Optional[bool] = None
    workers: Optional[int] = None
    expect: Optional[str] = None


@dataclass(frozen=True)
class RunContext:
    instance: InstanceFile
    window: Window
    routes: Tuple[str, ...]
    oracle: bool
    workers: int


def resolve_context(instance: InstanceFile, flags: RunFlags) -> RunContext:
    window = flags.window or instance.window or defaults.default_window(instance.n)
    if window[0] > window[1]:
        raise InstanceFormatError("window", "lo must not exceed hi")
    oracle = instance.options.oracle if flags.oracle is None else flags.oracle
    routes = flags.routes or instance.options.routes
    if not oracle and len(routes) > 1:
        # the diagonal route is an oracle computation
        routes = tuple(route for route in routes if route != defaults.Routes.DIAGONAL)
    workers = defaults.default_workers(flags.workers if flags.workers is not None else instance.options.workers)
    return RunContext(instance, (window[0], window[1]), tuple(routes), oracle, workers)


# intersection sections


def _intersection(context: RunContext) -> IntersectionInstance:
    instance = context.instance
    return IntersectionInstance.create(instance.n, instance.x_forms, instance.y_forms)


def _intersection_sections(context: RunContext) -> Dict[str, Callable[[], Section]]:
    instance = _intersection(context)
    window, workers = context.window, context.workers
    f_twists, g_twists = context.instance.f_twists, context.instance.g_twists
    return {
        "routes": lambda: ([], route_agreement(instance, window, context.routes, workers)),
        "excess-tor": lambda: ([], [verify_excess_tor(instance, window, workers)]),
        "splitting": lambda: ([], [verify_splitting(instance)]),
        "sequence": lambda: ([], [verify_excess_sequence(instance)]),
        "euler": lambda: ([], [euler_characteristic_check(instance, window, workers)]),
        "hkr-kernel": lambda: ([], [verify_hkr_kernel(instance, f_twists, window, workers)]),
        "ext": lambda: ([], [ext_table(instance, f_twists, g_twists, window, workers).check]),
    }


# fixed-locus sections


def _fixed_oracle(phi: Automorphism, window: Window) -> Section:
    group = build_group([phi.matrix], bound=phi.order)
    result = twisted_tor_oracle(group, group.index_of(phi.matrix), window)
    forms = forms_table(fixed_data(phi).dim_w, window)
    return (
        [],
        [
            compare_tables("fixed locus oracle", forms, result.table, "Omega_W", "twisted tor oracle"),
            boolean_check("oracle identity traces", result.identity_traces_match()),
        ],
    )


def _fixed_locus_sections(context: RunContext) -> Dict[str, Callable[[], Section]]:
    phi = Automorphism.create(context.instance.phi, context.instance.options.order_bound)
    window, workers = context.window, context.workers
    return {
        "averaging": lambda: ([], [verify_averaging(phi)]),
        "excess-identification": lambda: ([], [verify_excess_identification(phi)]),
        "fixed-locus": lambda: ([], [derived_fixed_locus_table(phi, window, workers).check]),
        "fixed-routes": lambda: ([], route_agreement(fixed_locus_instance(phi), window, context.routes, workers)),
        "fixed-oracle": lambda: _fixed_oracle(phi, window),
    }


# orbifold sections


def _sectors(group: FiniteMatrixGroup, window: Window) -> Section:
    cohomology = hh_cohomology(group, window)
    homology = hh_homology(group, window)
    tables = [("HH^*", cohomology.table)]
    tables += [("HH^*.class.%d" % g, table) for g, table in sorted(cohomology.sector_tables.items())]
    tables.append(("HH_*", homology.table))
    tables += [("HH_*.class.%d" % g, table) for g, table in sorted(homology.sector_tables.items())]
    check = boolean_check(
        "class representative averaging",
        cohomology.fast_path_agrees and homology.fast_path_agrees,
        {"classes": str(len(group.conjugacy_classes))},
    )
    return tables, [check]


def _molien_enumeration(group: FiniteMatrixGroup, window: Window) -> Section:
    enumerated = enumeration_series(group, window)
    table = HilbertTable(window, {(0, t): v for t, v in zip(range(window[0], window[1] + 1), enumerated)})
    return [], [compare_tables("molien = enumeration", molien_table(group, window), table, "molien", "enumeration")]


def _hh_oracle(group: FiniteMatrixGroup, window: Window, ext: bool) -> Section:
    invariants = oracle_invariants(group, window, ext)
    if ext:
        checks = [
            compare_tables("HH^* = oracle ext invariants", hh_cohomology(group, window).table,
                           invariants.table, "twisted sectors", "oracle")
        ]
    else:
        checks = [
            compare_tables("HH_* = oracle tor invariants", hh_homology(group, window).table,
                           invariants.table, "twisted sectors", "oracle")
        ]
        pushpull = delta_pushpull(group, window)
        for g in group.representatives():
            checks.append(
                compare_tables("sector %d tor" % g, pushpull[g], invariants.sectors[g].table,
                               "S(Omega_g[1])", "twisted tor oracle")
            )
    checks.append(
        boolean_check(
            "oracle identity traces (%s)" % ("ext" if ext else "tor"),
            all(result.identity_traces_match() for result in invariants.sectors.values()),
        )
    )
    return [], checks


def _orbifold_sections(context: RunContext) -> Dict[str, Callable[[], Section]]:
    group = build_group(context.instance.generators, context.instance.options.group_bound)
    window = context.window
    return {
        "class-equation": lambda: ([], [verify_class_equation(group)]),
        "sector-symmetry": lambda: ([], [verify_sector_symmetry(group)]),
        "sectors": lambda: _sectors(group, window),
        "hh0-molien": lambda: ([], [verify_hh0_molien(group, window)]),
        "molien-enumeration": lambda: _molien_enumeration(group, window),
        "hh-oracle-ext": lambda: _hh_oracle(group, window, ext=True),
        "hh-oracle-tor": lambda: _hh_oracle(group, window, ext=False),
    }


SECTION_BUILDERS: Final[Dict[str, Callable[[RunContext], Dict[str, Callable[[], Section]]]]] = {
    InstanceKinds.INTERSECTION: _intersection_sections,
    InstanceKinds.FIXED_LOCUS: _fixed_locus_sections,
    InstanceKinds.ORBIFOLD: _orbifold_sections,
}


def _run_section(context: RunContext, name: str) -> Section:
    return SECTION_BUILDERS[context.instance.kind](context)[name]()


def _expectation(report: Report, path: str) -> Check:
    rendered = render(report, ReportFormats.MACHINE)
    try:
        with open(path, "r", encoding="utf8") as f:
            expected = f.read()
    except FileNotFoundError as error:
        raise InstanceFormatError(None, "expected report %s not found" % path) from error
    details = {"path": path}
    if rendered != expected:
        actual_lines, expected_lines = rendered.splitlines(), expected.splitlines()
        line = next(
            (i for i, (a, b) in enumerate(zip(actual_lines, expected_lines)) if a != b),
            min(len(actual_lines), len(expected_lines)),
        )
        details["first difference"] = "line %d" % (line + 1)
    return boolean_check("expected report", rendered == expected, details)


def run(instance: InstanceFile, command: str, flags: Optional[RunFlags] = None) -> Report:
    """
    Run every section of a command and collect a report. Invalid input
    raises (exit code 2 in the CLI); mathematical mismatches are failed
    checks inside the report.
    """
    flags = flags or RunFlags()
    if command not in Commands.ALL:
        raise IncompatibleCommandError("unknown command %r, expected one of %s" % (command, ", ".join(Commands.ALL)))
    by_command = COMMAND_SECTIONS[instance.kind]
    if command not in by_command:
        raise IncompatibleCommandError(
            "command %r does not apply to a %s instance (use %s)"
            % (command, instance.kind, ", ".join(by_command))
        )

    start = time.perf_counter()
    context = resolve_context(instance, flags)
    sections = SECTION_BUILDERS[instance.kind](context)
    names = [name for name in by_command[command] if context.oracle or name not in ORACLE_SECTIONS]
    logger.info(
        "%s on %s instance, window [%d, %d], %d sections, %d workers",
        command, instance.kind, context.window[0], context.window[1], len(names), context.workers,
    )

    if context.workers > 1:
        # sections in worker processes compute their homology serially
        serial = replace(context, workers=1)
        with ProcessPoolExecutor(max_workers=context.workers) as executor:
            results = list(executor.map(_run_section, repeat(serial), names))
    else:
        results = [sections[name]() for name in names]

    tables: List[Tuple[str, HilbertTable]] = list()
    checks: List[Check] = list()
    for section_tables, section_checks in results:
        tables += section_tables
        checks += section_checks
    report = Report(
        command,
        context.window,
        tuple(instance.echo()),
        tuple(tables),
        tuple(checks),
        time.perf_counter() - start,
    )
    if flags.expect is not None:
        report = report.with_checks(_expectation(report, flags.expect))
    return report
