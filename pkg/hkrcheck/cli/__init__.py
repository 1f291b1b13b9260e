#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from .instance import InstanceFile, InstanceOptions, parse_instance, parse_instance_dict
from .report import Report, ReportFormats, render
from .commands import Commands, RunFlags, run


__all__ = [
    "InstanceFile",
    "InstanceOptions",
    "parse_instance",
    "parse_instance_dict",
    "Report",
    "ReportFormats",
    "render",
    "Commands",
    "RunFlags",
    "run",
]
