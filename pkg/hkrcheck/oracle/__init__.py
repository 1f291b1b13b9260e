#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from .diagonal import DiagonalResolutions, diagonal, diagonal_forms, tor_via_diagonal
from .twisted import (
    OracleInvariants,
    TwistedSectorOracleResult,
    graph_of,
    oracle_invariants,
    twisted_ext_oracle,
    twisted_tor_oracle,
)
from .enumeration import enumeration_series, invariants_by_enumeration


__all__ = [
    "DiagonalResolutions",
    "diagonal",
    "diagonal_forms",
    "tor_via_diagonal",
    "OracleInvariants",
    "TwistedSectorOracleResult",
    "graph_of",
    "oracle_invariants",
    "twisted_ext_oracle",
    "twisted_tor_oracle",
    "enumeration_series",
    "invariants_by_enumeration",
]
