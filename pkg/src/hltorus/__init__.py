"""Exact verification of Hall-Littlewood torus-integral identities.

The package evaluates Hall-Littlewood polynomials at signed-monomial
argument lists, assembles the q=0 Selberg/Koornwinder-type densities, and
checks closed-form values of normalized torus integrals by constant-term
extraction in an exact truncated parameter ring.
"""

from .errors import (
    ConfigurationError,
    DomainError,
    HLTorusError,
    InternalConsistencyError,
    ResourceLimitError,
)
from .series import ParamSeries, SeriesRing
from .laurent import LaurentPoly
from .partitions import DominantWeight, Partition, classify_shape
from .tcomb import TComb
from .hall_littlewood import (
    Mono,
    const_arg,
    degenerate_check,
    hl_full,
    hl_q,
    hl_term,
    pm_args,
    var_arg,
)
from .densities import (
    DensityProduct,
    ct_integrate,
    gustafson_rhs,
    koornwinder_density,
    selberg_density,
)
from .pfaffian import (
    AntisymMatrix,
    build_a_matrix,
    build_m_minus,
    build_m_plus,
    determinant,
    pf_closed_form,
    pfaffian,
)
from .identities import (
    REGISTRY,
    VerificationReport,
    pfaffian_bridge,
    pfaffian_bridge_minus,
    pfaffian_bridge_plus_odd,
    rhs_section8,
    rhs_special,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "AntisymMatrix",
    "ConfigurationError",
    "DensityProduct",
    "DominantWeight",
    "DomainError",
    "HLTorusError",
    "InternalConsistencyError",
    "LaurentPoly",
    "Mono",
    "ParamSeries",
    "Partition",
    "REGISTRY",
    "ResourceLimitError",
    "SeriesRing",
    "TComb",
    "VerificationReport",
    "build_a_matrix",
    "build_m_minus",
    "build_m_plus",
    "classify_shape",
    "const_arg",
    "ct_integrate",
    "degenerate_check",
    "determinant",
    "gustafson_rhs",
    "hl_full",
    "hl_q",
    "hl_term",
    "koornwinder_density",
    "pf_closed_form",
    "pfaffian",
    "pfaffian_bridge",
    "pfaffian_bridge_minus",
    "pfaffian_bridge_plus_odd",
    "pm_args",
    "rhs_section8",
    "rhs_special",
    "selberg_density",
    "var_arg",
    "verify",
]
