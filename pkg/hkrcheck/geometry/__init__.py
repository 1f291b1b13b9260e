#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from .checks import Check, all_passed, boolean_check, compare_tables
from .intersection import (
    ExcessData,
    ExcessSequence,
    ExtResult,
    IntersectionInstance,
    analyze,
    euler_characteristic_check,
    excess_sequence,
    excess_table,
    ext_formula_table,
    ext_table,
    route_agreement,
    tor_table,
    verify_excess_sequence,
    verify_excess_tor,
    verify_hkr_kernel,
    verify_splitting,
)
from .fixed_locus import (
    Automorphism,
    FixedData,
    FixedLocusResult,
    derived_fixed_locus_table,
    fixed_data,
    fixed_locus_checks,
    fixed_locus_instance,
    forms_table,
    verify_averaging,
    verify_excess_identification,
)
from .group import FiniteMatrixGroup, build_group, trivial_group
from .orbifold import (
    OrbifoldTables,
    SectorData,
    delta_pushpull,
    hh_cohomology,
    hh_homology,
    molien,
    molien_table,
    sector_data,
    verify_class_equation,
    verify_fast_path,
    verify_hh0_molien,
    verify_sector_symmetry,
)


__all__ = [
    "Check",
    "all_passed",
    "boolean_check",
    "compare_tables",
    "ExcessData",
    "ExcessSequence",
    "ExtResult",
    "IntersectionInstance",
    "analyze",
    "euler_characteristic_check",
    "excess_sequence",
    "excess_table",
    "ext_formula_table",
    "ext_table",
    "route_agreement",
    "tor_table",
    "verify_excess_sequence",
    "verify_excess_tor",
    "verify_hkr_kernel",
    "verify_splitting",
    "Automorphism",
    "FixedData",
    "FixedLocusResult",
    "derived_fixed_locus_table",
    "fixed_data",
    "fixed_locus_checks",
    "fixed_locus_instance",
    "forms_table",
    "verify_averaging",
    "verify_excess_identification",
    "FiniteMatrixGroup",
    "build_group",
    "trivial_group",
    "OrbifoldTables",
    "SectorData",
    "delta_pushpull",
    "hh_cohomology",
    "hh_homology",
    "molien",
    "molien_table",
    "sector_data",
    "verify_class_equation",
    "verify_fast_path",
    "verify_hh0_molien",
    "verify_sector_symmetry",
]
