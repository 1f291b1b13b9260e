#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from .logger import LogLevel, ColorFormatter, setup_logging
from . import defaults
from . import options

__all__ = ["LogLevel", "ColorFormatter", "setup_logging", "defaults", "options"]
