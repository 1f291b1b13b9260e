#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

__version__ = "0.1.0"

from .core import RationalMatrix, parse_rational
from .complexes import HilbertTable, koszul_complex, homology_table
from .geometry import (
    Automorphism,
    IntersectionInstance,
    build_group,
    derived_fixed_locus_table,
    ext_table,
    hh_cohomology,
    hh_homology,
    tor_table,
)
from .oracle import invariants_by_enumeration, tor_via_diagonal, twisted_ext_oracle, twisted_tor_oracle
from .helpers import setup_logging


__all__ = [
    "__version__",
    "RationalMatrix",
    "parse_rational",
    "HilbertTable",
    "koszul_complex",
    "homology_table",
    "Automorphism",
    "IntersectionInstance",
    "build_group",
    "derived_fixed_locus_table",
    "ext_table",
    "hh_cohomology",
    "hh_homology",
    "tor_table",
    "invariants_by_enumeration",
    "tor_via_diagonal",
    "twisted_ext_oracle",
    "twisted_tor_oracle",
    "setup_logging",
]
