from src.maass.bessel import bessel_k, k_half_closed_form
from src.maass.cusps import CuspClass, CuspKind, classify_cusp
from src.maass.period import calibration_constant, period_integral
from src.maass.quantum import (
    FwValue,
    PeriodSample,
    SigmaQuantumValue,
    period_function,
    period_function_sample,
    quantum_eval_fW,
    quantum_eval_sigma,
)
from src.maass.waveform import (
    MaassEvalContext,
    UpperHalfPoint,
    fourier_half_sum,
    laplacian_residual,
    phi0_context,
    phi0w_context,
    phi_eval,
    required_n_max,
    s_transform_residual,
    single_mode_context,
    tail_bound,
    translation_residual,
)

__all__ = [
    "CuspClass",
    "CuspKind",
    "FwValue",
    "MaassEvalContext",
    "PeriodSample",
    "SigmaQuantumValue",
    "UpperHalfPoint",
    "bessel_k",
    "calibration_constant",
    "classify_cusp",
    "fourier_half_sum",
    "k_half_closed_form",
    "laplacian_residual",
    "period_function",
    "period_function_sample",
    "period_integral",
    "phi0_context",
    "phi0w_context",
    "phi_eval",
    "quantum_eval_fW",
    "quantum_eval_sigma",
    "required_n_max",
    "s_transform_residual",
    "single_mode_context",
    "tail_bound",
    "translation_residual",
]
