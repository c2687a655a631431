"""Gap probabilities, structured determinants and large-gap asymptotics."""

from ._gapasym import (
    NumericalFailure,
    airy,
    airy_det,
    asf_eval,
    constant_recovery,
    constants,
    di2_rhs_eval,
    diff_rhs_eval,
    dyson_expansion,
    hankel_delta,
    hankel_full_logdet,
    hankel_logdet,
    intD2_eval,
    run_cli,
    scaling_limit_airy,
    scaling_limit_sine,
    selberg_delta,
    selberg_logA,
    sine_det,
    smallarc_check,
    toeplitz_logdet,
    tw_expansion,
    verify_2det2,
    verify_idinterm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
