"""Vector-valued Fourier analysis on compact groups.

Spectral Barron and Sobolev norms, Fourier multiplier operators, and a
numerical verification suite for the inequalities relating them, on the
cyclic groups, the dihedral groups, the circle, and SU(2).
"""

__version__ = "0.1.0"

from .errors import (
    ConfigurationError,
    DimensionError,
    GroupSpectraError,
    InvalidElementError,
    PrecisionError,
    UnknownIrrepError,
    UnsupportedGridError,
    UnsupportedOperationError,
)
from .groups import (
    CompactGroup,
    CyclicGroup,
    DihedralGroup,
    Irrep,
    QuadratureRule,
    SU2Group,
    TorusGroup,
    TruncatedDual,
    element_from_json,
    element_to_json,
    make_group,
)
from .values import ValueSpace, make_value_space
from .fourier import (
    BandlimitedFunction,
    GridFunction,
    dense_sup_norm,
    forward,
    minimal_band,
    synthesize,
)
from .spectra import (
    NormReport,
    Weight,
    barron_norm,
    make_weight,
    sobolev_norm,
    sp_norm,
)
from .operators import (
    SpectralSymbol,
    bessel_potential,
    convolve_direct,
    convolve_spectral,
    make_symbol,
    pseudo_diff,
)
from .verify import (
    PROFILES,
    CheckResult,
    SuiteConfig,
    VerificationReport,
    default_config,
    run_suite,
)
from .report import report_json_text, write_report

__all__ = [
    "BandlimitedFunction",
    "CheckResult",
    "CompactGroup",
    "ConfigurationError",
    "CyclicGroup",
    "DihedralGroup",
    "DimensionError",
    "GridFunction",
    "GroupSpectraError",
    "InvalidElementError",
    "Irrep",
    "NormReport",
    "PROFILES",
    "PrecisionError",
    "QuadratureRule",
    "SU2Group",
    "SpectralSymbol",
    "SuiteConfig",
    "TorusGroup",
    "TruncatedDual",
    "UnknownIrrepError",
    "UnsupportedGridError",
    "UnsupportedOperationError",
    "ValueSpace",
    "VerificationReport",
    "Weight",
    "barron_norm",
    "bessel_potential",
    "convolve_direct",
    "convolve_spectral",
    "default_config",
    "dense_sup_norm",
    "element_from_json",
    "element_to_json",
    "forward",
    "make_group",
    "make_symbol",
    "make_value_space",
    "make_weight",
    "minimal_band",
    "pseudo_diff",
    "report_json_text",
    "run_suite",
    "sobolev_norm",
    "sp_norm",
    "synthesize",
    "write_report",
    "__version__",
]
