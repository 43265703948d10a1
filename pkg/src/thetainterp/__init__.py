"""Fourier interpolation basis on the nodes 0, ±sqrt(1), ±sqrt(2), ...

An even Schwartz function is determined by its values and the values of
its Fourier transform on the square roots of the nonnegative integers;
an odd one by the scaled values f(sqrt(n))/sqrt(n) together with f'(0)
and fhat'(0).  This package computes the interpolation basis realizing
those reconstructions, built from weakly holomorphic modular forms for
the theta group, along with exact q-expansions, independent numerical
oracles, and a self-verification suite.
"""

from .qseries import (
    PuiseuxSeries,
    SeriesError,
    coefficient,
    modular_series,
    series_from_json,
    series_to_json,
)
from .modular import (
    MoebiusWord,
    ModularPoint,
    ReductionError,
    ThetaTriple,
    automorphy_jtheta,
    eval_modular,
    reduce_gamma_theta,
    reduce_sl2,
    theta_constants,
)
from .forms import (
    FormError,
    FormSpec,
    build_form,
    eval_form,
    eval_kernel,
    form_q_expansion,
)
from .basis import (
    BasisError,
    EvalReport,
    SeriesValue,
    d0_closed_form,
    eval_a,
    eval_b,
    eval_d,
    generating_F,
    growth_constant,
)
from .interp import (
    InterpError,
    Reconstruction,
    SampleSet,
    gaussian_samples,
    r3_identity_check,
    reconstruct_even,
    reconstruct_odd,
    sampleset_from_json,
    sampleset_to_json,
)
from .oracle import (
    OracleError,
    TransformRequest,
    fourier_numeric,
    numeric_derivative_at_zero,
    poisson_residual,
    r3,
)
from .checks import CheckResult, check_names, run_checks

__version__ = "0.1.0"

__all__ = [
    "PuiseuxSeries", "SeriesError", "coefficient", "modular_series",
    "series_from_json", "series_to_json",
    "MoebiusWord", "ModularPoint", "ReductionError", "ThetaTriple",
    "automorphy_jtheta", "eval_modular", "reduce_gamma_theta", "reduce_sl2",
    "theta_constants",
    "FormError", "FormSpec", "build_form", "eval_form", "eval_kernel",
    "form_q_expansion",
    "BasisError", "EvalReport", "SeriesValue", "d0_closed_form", "eval_a",
    "eval_b", "eval_d", "generating_F", "growth_constant",
    "InterpError", "Reconstruction", "SampleSet", "gaussian_samples",
    "r3_identity_check", "reconstruct_even", "reconstruct_odd",
    "sampleset_from_json", "sampleset_to_json",
    "OracleError", "TransformRequest", "fourier_numeric",
    "numeric_derivative_at_zero", "poisson_residual", "r3",
    "CheckResult", "check_names", "run_checks",
]
