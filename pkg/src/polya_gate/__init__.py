"""Exact S-fraction tests for membership of pFq functions in the Laguerre-Polya class LP+."""
from .hyper import HyperParams, InvalidParams, pfq_series, signed_logderiv_moments
from .series import PowerSeries, format_rat, rat
from .sfrac import Verdict, VerdictKind, lp_plus_verdict, sfraction_expand, stieltjes_verdict

__all__ = [
    "HyperParams",
    "InvalidParams",
    "PowerSeries",
    "Verdict",
    "VerdictKind",
    "format_rat",
    "lp_plus_verdict",
    "pfq_series",
    "rat",
    "sfraction_expand",
    "signed_logderiv_moments",
    "stieltjes_verdict",
]
