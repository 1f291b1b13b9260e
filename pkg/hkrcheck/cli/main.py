#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import argparse
import logging
import sys
from typing import Dict, Final, List, Optional, Tuple

from .. import __version__
from ..core.errors import InstanceFormatError
from ..helpers.defaults import Routes
from ..helpers.logger import LogLevel, setup_logging
from .commands import Commands, RunFlags, run
from .instance import parse_instance
from .report import ReportFormats, render


logger = logging.getLogger(__name__)


class ExitCodes:
    PASS: Final[int] = 0
    FAIL: Final[int] = 1
    INVALID: Final[int] = 2


ROUTE_CHOICES: Final[Dict[str, Tuple[str, ...]]] = {
    "all": Routes.ALL,
    "x": (Routes.RESOLVE_X,),
    "y": (Routes.RESOLVE_Y,),
    "diag": (Routes.DIAGONAL,),
}

# domain rejections are ValueError subclasses
INVALID_INPUT: Final[Tuple[type, ...]] = (ValueError, OSError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkrcheck",
        description="Exact checks of derived intersection, fixed locus and orbifold HKR formulas.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("command", choices=Commands.ALL)
    parser.add_argument("instance", help="JSON instance file")
    parser.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"), help="internal degree window")
    parser.add_argument(
        "--routes", nargs="+", choices=sorted(ROUTE_CHOICES), help="Tor routes to compare (default: all)"
    )
    parser.add_argument("--no-oracle", action="store_true", help="skip the brute-force oracle comparisons")
    parser.add_argument("--format", choices=ReportFormats.ALL, default=ReportFormats.TABLE)
    parser.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    parser.add_argument("--workers", type=int, help="worker processes (default: $HKRCHECK_WORKERS or 1)")
    parser.add_argument("--expect", metavar="PATH", help="machine-format report the run must reproduce")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("--quiet", action="store_true", help="errors only")
    parser.add_argument("--log-file", metavar="PATH", help="also write the log to this file")
    return parser


def _routes(choices: Optional[List[str]]) -> Optional[Tuple[str, ...]]:
    if not choices:
        return None
    routes: List[str] = list()
    for choice in choices:
        for route in ROUTE_CHOICES[choice]:
            if route not in routes:
                routes.append(route)
    return tuple(routes)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    level = LogLevel.WARNING
    if args.verbose:
        level = LogLevel.DEBUG
    elif args.quiet:
        level = LogLevel.ERROR
    setup_logging(args.log_file, enable_console=True, level=level)

    flags = RunFlags(
        window=tuple(args.window) if args.window else None,
        routes=_routes(args.routes),
        oracle=False if args.no_oracle else None,
        workers=args.workers,
        expect=args.expect,
    )
    try:
        if flags.window is not None and flags.window[0] > flags.window[1]:
            raise InstanceFormatError("--window", "LO must not exceed HI")
        instance = parse_instance(args.instance)
        report = run(instance, args.command, flags)
        text = render(report, args.format)
        if args.out:
            with open(args.out, "w", encoding="utf8") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    except INVALID_INPUT as error:
        logger.error("%s", error)
        return ExitCodes.INVALID
    except ArithmeticError as error:
        # an internal identity of the exact computation failed
        logger.error("inconsistent computation: %s", error)
        return ExitCodes.FAIL

    logger.info("%s: %s", args.command, "pass" if report.passed else "fail")
    return ExitCodes.PASS if report.passed else ExitCodes.FAIL


if __name__ == "__main__":
    sys.exit(main())
