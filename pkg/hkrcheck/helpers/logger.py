#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

import logging
import sys
from enum import Enum
from typing import Optional


LOG_FORMAT = "[%(asctime)s] [%(name)s] [%(levelname)s]: %(message)s"

_HANDLER_TAG = "_hkrcheck_handler"


class LogLevel(Enum):
    ERROR = logging.ERROR
    WARNING = logging.WARNING
    INFO = logging.INFO
    DEBUG = logging.DEBUG

    @property
    def display_name(self) -> str:
        return self.name.capitalize()


class ColorFormatter(logging.Formatter):
    COLORS = {
        "ERROR": "\033[91m",  # Red
        "WARNING": "\033[93m",  # Yellow
        "INFO": "\033[92m",  # Green
        "DEBUG": "\033[94m",  # Blue
        "RESET": "\033[0m",  # Reset
    }

    def format(self, record: logging.LogRecord) -> str:
        # work on a copy, other handlers see the same record
        record = logging.makeLogRecord(record.__dict__)
        color = self.COLORS.get(record.levelname, self.COLORS["RESET"])
        record.levelname = f"{color}{record.levelname}{self.COLORS['RESET']}"
        record.name = f"\033[95m{record.name}{self.COLORS['RESET']}"  # Magenta
        return super().format(record)


def setup_logging(
    output_logger_file_path: Optional[str] = None,
    enable_console: bool = True,
    level: LogLevel = LogLevel.WARNING,
) -> logging.Logger:
    """
    Configure the package logger: a colour console handler on stderr and
    an optional plain file handler, both with LOG_FORMAT.

    Calling it again replaces the handlers installed by the previous call.
    """
    logger = logging.getLogger("hkrcheck")
    logger.setLevel(level.value)
    for handler in list(logger.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            logger.removeHandler(handler)
            handler.close()

    if enable_console:
        console_handler = logging.StreamHandler(sys.stderr)
        use_color = hasattr(sys.stderr, "isatty") and sys.stderr.isatty()
        console_handler.setFormatter(
            ColorFormatter(LOG_FORMAT) if use_color else logging.Formatter(LOG_FORMAT)
        )
        setattr(console_handler, _HANDLER_TAG, True)
        logger.addHandler(console_handler)

    # Add file handler if path is provided
    if output_logger_file_path:
        file_handler = logging.FileHandler(output_logger_file_path)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        setattr(file_handler, _HANDLER_TAG, True)
        logger.addHandler(file_handler)

    return logger
