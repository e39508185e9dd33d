"""Bounded univalent quasiconformal harmonic disk mapping with an unbounded
analytic part: closed-form kernel, parameter selection, desk-scale
certification, and a reporting CLI."""

__version__ = "0.1.0"

from .construct import MappingInstance, analytic_A_hint, k_to_K, select_A
from .errors import (
    BudgetExhaustedWarning,
    ConfigError,
    DegenerateDenominatorError,
    DomainError,
    GridBoundaryWarning,
    InsufficientPairsWarning,
    ParameterError,
    RootBracketError,
    SearchExhaustedError,
    SpiralmapError,
    StepTooCoarseError,
)
from .kernel import (
    ConstructionParams,
    EvalRecord,
    UVPair,
    arg_log,
    hg_derivatives,
    hg_eval,
    hg_eval_c,
    log_spiral,
    log_spiral_deriv,
    model_spiral,
    omega_eval,
    perturbed_spiral,
    principal_power,
    S_map,
    S_map_c,
    uv_decompose,
)
from .verify import (
    GridSpec,
    StripRegion,
    VerificationReport,
    asymptotic_residuals,
    boundedness_scan,
    dilatation_sup,
    eta_estimate,
    h_growth,
    injectivity_pairs,
    level_curve_monotonicity,
    separation_profile,
    winding_degree,
    winding_number,
)

__all__ = [
    "__version__",
    "MappingInstance", "analytic_A_hint", "k_to_K", "select_A",
    "ConstructionParams", "EvalRecord", "UVPair",
    "arg_log", "hg_derivatives", "hg_eval", "hg_eval_c",
    "log_spiral", "log_spiral_deriv", "model_spiral", "omega_eval",
    "perturbed_spiral", "principal_power", "S_map", "S_map_c", "uv_decompose",
    "GridSpec", "StripRegion", "VerificationReport",
    "asymptotic_residuals", "boundedness_scan", "dilatation_sup",
    "eta_estimate", "h_growth", "injectivity_pairs",
    "level_curve_monotonicity", "separation_profile",
    "winding_degree", "winding_number",
    "SpiralmapError", "DomainError", "ParameterError", "ConfigError",
    "SearchExhaustedError", "DegenerateDenominatorError",
    "StepTooCoarseError", "RootBracketError",
    "GridBoundaryWarning", "BudgetExhaustedWarning", "InsufficientPairsWarning",
]
