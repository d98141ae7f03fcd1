"""Certified arcsin enclosures from the Shafer bound family."""

from ._shafer import (
    BoundConstant,
    ConvergenceError,
    DomainError,
    PoleError,
    Regime,
    RegimeError,
    alpha_malesevic,
    alpha_star,
    big_f_fn,
    classic_shafer_second,
    classify_regime,
    enclosure,
    enclosure_midpoint,
    endpoint_limits,
    f_alpha,
    find_interior_minimum,
    g_fn,
    gap_profile,
    h_fn,
    h_limit_at_one,
    h_regime_root,
    lower_bound,
    mid_regime_upper_bound,
    oracle_arcsin,
    p_fn,
    run_verification,
    shafer_ratio,
    sharpened_mid_lower_constant,
    sharpness_probe,
    solve_alpha_star_by_bisection,
    suite_alphas,
    upper_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
