"""Exact verification of Euler-line and Brocard-axis theorems for rectangles."""
from .exact_arith import BigRat, MultiPoly, RatFun, ratfun_eq, schwartz_zippel_check
from .theorems import (
    ClaimId,
    RectConfig,
    TwoRectConfig,
    check_claim,
    reproduce_formulas,
    sample_config,
    verify_sampled,
    verify_symbolic,
)

__version__ = "0.1.0"

__all__ = [
    "BigRat",
    "ClaimId",
    "MultiPoly",
    "RatFun",
    "RectConfig",
    "TwoRectConfig",
    "check_claim",
    "ratfun_eq",
    "reproduce_formulas",
    "sample_config",
    "schwartz_zippel_check",
    "verify_sampled",
    "verify_symbolic",
]
