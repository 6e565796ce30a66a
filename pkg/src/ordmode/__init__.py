"""ordmode: exact ordered-Stirling-type triangles, certified modes, asymptotics.

Exact integer triangles (Stirling, r-Stirling, Whitney) and their ordered
variants, the associated Fubini-type polynomials, mode location certified
through strict log-concavity and Darroch's bound, Sturm-chain
real-rootedness certificates, and numerical validation of the value/mode
asymptotic laws — all cross-checked against an exact rational
generating-function oracle.
"""

__version__ = "0.1.0"

from .asymptotics import (
    AsymptoticModel,
    ConvergenceRow,
    convergence_table,
    log_bigint,
    predicted_log_value,
    predicted_mode,
    predicted_mode_classical,
)
from .modes import (
    ModeReport,
    darroch_localize,
    is_strictly_log_concave,
    mode_of,
    r_fubini_darroch_mean,
    wegner_check,
    whitney_darroch_mean,
)
from .polynomials import (
    IntPolynomial,
    RootCertificate,
    certify_real_rooted_in_interval,
    r_fubini_poly,
    r_fubini_polynomials,
    sturm_count,
    whitney_fubini_poly,
    whitney_fubini_polynomials,
)
from .series import RationalSeries, factorial, r_fubini_numbers, whitney_fubini_numbers
from .triangles import (
    Triangle,
    TriangleFamily,
    build_triangle,
    check_r0_equals_stirling,
    check_w1_equals_stirling_shift,
    ordered_row,
    r_stirling,
    stirling,
    whitney,
)

__all__ = [
    "AsymptoticModel",
    "ConvergenceRow",
    "IntPolynomial",
    "ModeReport",
    "RationalSeries",
    "RootCertificate",
    "Triangle",
    "TriangleFamily",
    "build_triangle",
    "certify_real_rooted_in_interval",
    "check_r0_equals_stirling",
    "check_w1_equals_stirling_shift",
    "convergence_table",
    "darroch_localize",
    "factorial",
    "is_strictly_log_concave",
    "log_bigint",
    "mode_of",
    "ordered_row",
    "predicted_log_value",
    "predicted_mode",
    "predicted_mode_classical",
    "r_fubini_darroch_mean",
    "r_fubini_numbers",
    "r_fubini_poly",
    "r_fubini_polynomials",
    "r_stirling",
    "stirling",
    "sturm_count",
    "wegner_check",
    "whitney",
    "whitney_darroch_mean",
    "whitney_fubini_numbers",
    "whitney_fubini_poly",
    "whitney_fubini_polynomials",
]
