"""Sign scans and threshold bisection for alpha_n of 1F2(b1 + gamma; b1, b2; x).

Every decision here is an exact sign of a rational number; no floats.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .hyper import HyperParams, InvalidParams
from .series import RatLike, format_rat, rat
from .sfrac import Verdict, VerdictKind, lp_plus_verdict


class BadBracket(ValueError):
    pass


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _params(b1: Fraction, gamma: Fraction, b2: Fraction) -> HyperParams:
    if b1 <= 0 or b2 <= 0:
        raise InvalidParams("b1 and b2 must be positive")
    if b1 + gamma <= 0:
        raise InvalidParams("a1 = b1 + gamma must be positive")
    return HyperParams([b1 + gamma], [b1, b2])


def alpha_sign_at(
    b1: RatLike, gamma: RatLike, b2: RatLike, n: int, depth: Optional[int] = None
) -> tuple[int, Verdict]:
    """Exact sign of alpha_n at one parameter point, with the verdict at ``depth``.

    The sign is 0 when the expansion stops (a zero alpha) at or before n.
    """
    depth = n if depth is None else depth
    if depth < n:
        raise ValueError("depth must be >= n")
    verdict = lp_plus_verdict(_params(rat(b1), rat(gamma), rat(b2)), depth)
    alphas = verdict.alphas
    if len(alphas) <= n:
        return 0, verdict
    return _sign(alphas[n]), verdict


@dataclass(frozen=True)
class ThresholdResult:
    bracket_lo: Fraction
    bracket_hi: Fraction
    n: int
    b1: Fraction
    gamma: Fraction
    steps: int = 0

    @property
    def width(self) -> Fraction:
        return self.bracket_hi - self.bracket_lo

    def contains(self, x: RatLike) -> bool:
        x = rat(x)
        return self.bracket_lo <= x <= self.bracket_hi

    def to_json(self) -> dict:
        return {
            "b1": format_rat(self.b1),
            "gamma": format_rat(self.gamma),
            "n": self.n,
            "lo": format_rat(self.bracket_lo),
            "hi": format_rat(self.bracket_hi),
            "width": format_rat(self.width),
        }


def threshold_bisect(
    b1: RatLike,
    gamma: RatLike,
    n: int,
    lo: RatLike,
    hi: RatLike,
    precision: RatLike,
) -> ThresholdResult:
    """Bracket the b2 where alpha_n turns negative, to width <= precision.

    Requires alpha_n >= 0 at ``lo`` and < 0 at ``hi``. A single crossing inside
    [lo, hi] is assumed, not checked.
    """
    b1, gamma, lo, hi, precision = map(rat, (b1, gamma, lo, hi, precision))
    if precision <= 0:
        raise ValueError("precision must be positive")
    if lo >= hi:
        raise BadBracket(f"need lo < hi, got [{lo}, {hi}]")
    s_lo, _ = alpha_sign_at(b1, gamma, lo, n)
    s_hi, _ = alpha_sign_at(b1, gamma, hi, n)
    if s_lo < 0 or s_hi >= 0:
        raise BadBracket(
            f"alpha_{n} signs at the endpoints are {s_lo:+d}, {s_hi:+d}; need >= 0 then < 0"
        )
    steps = 0
    while hi - lo > precision:
        mid = (lo + hi) / 2
        s, _ = alpha_sign_at(b1, gamma, mid, n)
        if s < 0:
            hi = mid
        else:
            lo = mid
        steps += 1
    return ThresholdResult(lo, hi, n, b1, gamma, steps)


@dataclass(frozen=True)
class ScanPoint:
    b1: Fraction
    gamma: Fraction
    b2: Fraction
    n: int
    alpha_sign: int
    verdict: Verdict

    @property
    def alpha_value(self) -> Optional[Fraction]:
        alphas = self.verdict.alphas
        return alphas[self.n] if len(alphas) > self.n else None

    def csv_row(self) -> list[str]:
        kind = self.verdict.kind
        if kind is VerdictKind.FIRST_NEGATIVE_ALPHA:
            first = str(self.verdict.k)
        elif kind is VerdictKind.DEGENERATE:
            first = "degenerate"
        else:
            first = "none"
        value = self.alpha_value
        return [
            format_rat(self.b1),
            format_rat(self.gamma),
            format_rat(self.b2),
            first,
            "" if value is None else format_rat(value),
            str(self.verdict.depth),
        ]

    def to_json(self) -> dict:
        value = self.alpha_value
        return {
            "b1": format_rat(self.b1),
            "gamma": format_rat(self.gamma),
            "b2": format_rat(self.b2),
            "n": self.n,
            "alpha_sign": self.alpha_sign,
            "alpha": None if value is None else format_rat(value),
            "verdict": self.verdict.to_json(),
        }


CSV_HEADER = ["b1", "gamma", "b2", "n_first_negative", "alpha_value", "depth"]


def _scan_point(args: tuple) -> ScanPoint:
    b1, gamma, b2, n_max, depth = args
    verdict = lp_plus_verdict(_params(b1, gamma, b2), depth)
    if verdict.kind is VerdictKind.FIRST_NEGATIVE_ALPHA and verdict.k <= n_max:
        n = verdict.k
    elif verdict.kind is VerdictKind.DEGENERATE:
        n = verdict.k
    else:
        n = n_max
    alphas = verdict.alphas
    sign = _sign(alphas[n]) if len(alphas) > n else 0
    return ScanPoint(b1, gamma, b2, n, sign, verdict)


def grid_scan(
    b1: RatLike,
    gamma_range: Sequence[RatLike],
    b2_range: Sequence[RatLike],
    n_max: int,
    depth: Optional[int] = None,
    threads: int = 1,
) -> list[ScanPoint]:
    """One point per (gamma, b2), gamma-major, in input order.

    Each point carries the S-fraction verdict at ``depth`` (default n_max);
    ``n`` is the first negative index when one occurs by n_max, else n_max.
    Results never depend on ``threads``.
    """
    depth = n_max if depth is None else depth
    if depth < n_max:
        raise ValueError("depth must be >= n_max")
    b1 = rat(b1)
    tasks = [(b1, rat(g), rat(b2), n_max, depth) for g in gamma_range for b2 in b2_range]
    if threads <= 1 or len(tasks) <= 1:
        return [_scan_point(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_scan_point, tasks, chunksize=max(1, len(tasks) // (4 * threads))))


def default_threads() -> int:
    env = os.environ.get("POLYA_GATE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
