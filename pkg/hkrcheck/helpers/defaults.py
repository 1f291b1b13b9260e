#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import os
from typing import Final, Optional, Tuple


ORDER_BOUND: Final[int] = 24
GROUP_BOUND: Final[int] = 48
WORKERS: Final[int] = 1
WORKERS_ENV: Final[str] = "HKRCHECK_WORKERS"

WINDOW_HIGH: Final[int] = 6


class Routes:
    RESOLVE_X: Final[str] = "resolve_X"
    RESOLVE_Y: Final[str] = "resolve_Y"
    DIAGONAL: Final[str] = "diagonal"

    ALL: Final[Tuple[str, ...]] = (RESOLVE_X, RESOLVE_Y, DIAGONAL)


def default_window(n: int) -> Tuple[int, int]:
    return (-n - 2, WINDOW_HIGH)


def default_workers(value: Optional[int] = None) -> int:
    """Explicit value, else HKRCHECK_WORKERS, else WORKERS."""
    if value is not None:
        workers = value
    else:
        raw = os.environ.get(WORKERS_ENV)
        if raw is None or raw.strip() == "":
            return WORKERS
        try:
            workers = int(raw)
        except ValueError as error:
            raise ValueError("%s must be a positive integer, got %r" % (WORKERS_ENV, raw)) from error
    if workers < 1:
        raise ValueError("workers must be a positive integer")
    return workers
