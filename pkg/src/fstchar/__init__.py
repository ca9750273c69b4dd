"""Exact characters of principal-like subspace modules for rank-2 affine type.

The package computes truncated formal characters three independent ways --
brute-force enumeration of admissible configurations, a closed fermionic
formula, and previously known one-variable sums -- and verifies that they
agree coefficient-exactly, together with the recurrence system and the
polynomial identities behind the closed formula.

The enumeration hot loop has a compiled core (built from Cython) with a
pure-Python fallback; `fstchar.admissible.KERNEL` reports which one is live,
and setting FSTCHAR_PURE=1 before import forces the fallback.
"""

from .admissible import (
    KERNEL,
    HighestWeight,
    character_oracle,
    degree_weight,
    energy,
    enumerate_configs,
    is_admissible,
)
from .charseries import CharSeries, SpecializedSeries, specialize
from .fermionic import (
    BinaryPattern,
    NSequences,
    a_coefficient,
    character_fermionic,
    identity_battery,
    linear_term,
)
from .qseries import (
    QSeries,
    gaussian_binomial,
    inv_pochhammer,
    pochhammer,
    substitute_q_squared,
)
from .recurrence import build_system, verify_system
from .specialize import chi_fjmmt, chi_fjmmt2, verify_spec1, verify_spec2

__version__ = "0.1.0"

__all__ = [
    "KERNEL",
    "HighestWeight",
    "character_oracle",
    "degree_weight",
    "energy",
    "enumerate_configs",
    "is_admissible",
    "CharSeries",
    "SpecializedSeries",
    "specialize",
    "BinaryPattern",
    "NSequences",
    "a_coefficient",
    "character_fermionic",
    "identity_battery",
    "linear_term",
    "QSeries",
    "gaussian_binomial",
    "inv_pochhammer",
    "pochhammer",
    "substitute_q_squared",
    "build_system",
    "verify_system",
    "chi_fjmmt",
    "chi_fjmmt2",
    "verify_spec1",
    "verify_spec2",
    "__version__",
]
