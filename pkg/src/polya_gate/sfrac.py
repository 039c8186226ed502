"""Stieltjes continued fractions of moment sequences and LP+ verdicts.

A sequence (s_n) is expanded as

    sum s_n t^n = alpha_0 / (1 - alpha_1 t / (1 - alpha_2 t / (1 - ...)))

and a first strictly negative alpha_k (after strictly positive alpha_1..alpha_{k-1})
certifies that (s_n) is not a Stieltjes moment sequence. Applied to the signed
logarithmic-derivative moments of an entire function f, that certifies f is not
in LP+. The converse direction is only evidence: finitely many nonnegative
alphas never prove membership.

The expansion routines only use ``+ - * /`` and comparison with zero, so they
run unchanged over any exact field (Fractions here, rational functions in the
symbolic module).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Any, Optional, Sequence

from .hyper import HyperParams, InvalidParams, signed_logderiv_moments
from .series import format_rat, rat


class ZeroLeadingMoment(ValueError):
    pass


class Status(enum.Enum):
    COMPLETE = "complete"
    TERMINATED = "terminated"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SFractionReport:
    alphas: tuple            # alpha_0 .. alpha_k actually computed
    depth_requested: int
    status: Status
    at: Optional[int] = None  # k for TERMINATED / DEGENERATE

    @property
    def depth_reached(self) -> int:
        return len(self.alphas) - 1


def _recip(f: Sequence[Any]) -> list:
    inv0 = 1 / f[0]
    g = [inv0]
    for m in range(1, len(f)):
        acc = f[1] * g[m - 1]
        for k in range(2, m + 1):
            acc = acc + f[k] * g[m - k]
        g.append(-(acc * inv0))
    return g


def _mul(f: Sequence[Any], g: Sequence[Any]) -> list:
    n = min(len(f), len(g))
    out = []
    for m in range(n):
        acc = f[0] * g[m]
        for k in range(1, m + 1):
            acc = acc + f[k] * g[m - k]
        out.append(acc)
    return out


def _expand_division(moments: Sequence[Any], depth: int) -> SFractionReport:
    alpha0 = moments[0]
    h = [m / alpha0 for m in moments[: depth + 1]]
    alphas = [alpha0]
    for k in range(1, depth + 1):
        # h = 1/(1 - alpha_k t h'), so alpha_k h' = (1 - 1/h)/t
        r = _recip(h)
        g = [-c for c in r[1:]]
        alphas.append(g[0])
        if g[0] == 0:
            status = Status.TERMINATED if all(c == 0 for c in g) else Status.DEGENERATE
            return SFractionReport(tuple(alphas), depth, status, k)
        h = [c / g[0] for c in g]
    return SFractionReport(tuple(alphas), depth, Status.COMPLETE)


def _expand_qd(moments: Sequence[Any], depth: int) -> SFractionReport:
    """Quotient-difference rhombus rules; needs every moment nonzero."""
    c = list(moments[: depth + 1])
    if any(x == 0 for x in c):
        raise ZeroDivisionError("qd backend needs nonzero moments")
    alphas = [c[0]]
    # q[n] holds q_k^{(n)}, e[n] holds e_{k-1}^{(n)}
    q = [c[n + 1] / c[n] for n in range(depth)]
    e = [c[0] * 0 for _ in range(depth + 1)]
    while True:
        if len(alphas) > depth:
            break
        alphas.append(q[0])
        if q[0] == 0:
            raise ZeroDivisionError("qd backend hit a zero pivot")
        if len(alphas) > depth:
            break
        e = [q[n + 1] - q[n] + e[n + 1] for n in range(len(q) - 1)]
        alphas.append(e[0])
        if e[0] == 0:
            raise ZeroDivisionError("qd backend hit a zero pivot")
        q = [q[n + 1] * e[n + 1] / e[n] for n in range(len(e) - 1)]
    return SFractionReport(tuple(alphas), depth, Status.COMPLETE)


def sfraction_expand(
    moments: Sequence[Any], depth: int, method: str = "division"
) -> SFractionReport:
    """S-fraction coefficients alpha_0..alpha_depth of ``moments``.

    ``method="qd"`` selects the quotient-difference backend, which agrees with
    the default successive-division scheme whenever it applies (no zero moment,
    no zero pivot) and raises ``ZeroDivisionError`` otherwise.
    """
    if len(moments) < depth + 1:
        raise ValueError(f"need {depth + 1} moments, got {len(moments)}")
    if moments[0] == 0:
        raise ZeroLeadingMoment("moments[0] must be nonzero")
    if method == "division":
        return _expand_division(moments, depth)
    if method == "qd":
        return _expand_qd(moments, depth)
    raise ValueError(f"unknown method {method!r}")


def sfraction_to_series(report: SFractionReport, order: int) -> list:
    """Power-series coefficients 0..order of the (finite) fraction in ``report``.

    Coefficients up to ``report.depth_reached`` are fixed by the stored alphas;
    past that they are those of the truncated fraction.
    """
    alphas = report.alphas
    one = alphas[0] / alphas[0]
    zero = one - one
    # bottom-up: h_K = 1, h_{k-1} = 1/(1 - alpha_k t h_k)
    h = [one] + [zero] * order
    for a in reversed(alphas[1:]):
        denom = [one] + [-(a * c) for c in h[:order]]
        h = _recip(denom)
    return [alphas[0] * c for c in h]


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hankel_determinants(
    moments: Sequence[Fraction], depth: int
) -> tuple[list[Fraction], list[Fraction]]:
    """Leading principal minors of [s_{i+j}] and [s_{i+j+1}] fixed by s_0..s_depth."""
    if len(moments) < depth + 1:
        raise ValueError(f"need {depth + 1} moments, got {len(moments)}")
    s = [rat(x) for x in moments[: depth + 1]]
    scale = lcm(*(x.denominator for x in s))
    ints = [int(x * scale) for x in s]

    def minors(shift: int) -> list[Fraction]:
        out = []
        k = 1
        while 2 * k - 2 + shift <= depth:
            mat = [[ints[i + j + shift] for j in range(k)] for i in range(k)]
            out.append(Fraction(_bareiss_det(mat), scale**k))
            k += 1
        return out

    return minors(0), minors(1)


class VerdictKind(enum.Enum):
    STIELTJES_UP_TO = "stieltjes_up_to"
    FIRST_NEGATIVE_ALPHA = "first_negative_alpha"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the S-fraction sign test.

    ``FIRST_NEGATIVE_ALPHA`` is a certificate (of non-Stieltjes-ness, hence of
    non-membership in LP+ when the moments come from ``f'/f``).
    ``STIELTJES_UP_TO`` only says nothing went wrong through ``depth``.
    """

    kind: VerdictKind
    depth: int
    s0: Fraction
    k: Optional[int] = None
    alpha: Optional[Fraction] = None
    alphas: tuple = ()

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value, "depth": self.depth}
        if self.k is not None:
            out["k"] = self.k
        if self.alpha is not None:
            out["alpha"] = format_rat(self.alpha)
        out["s0"] = format_rat(self.s0)
        return out


def stieltjes_verdict(
    moments: Sequence[Fraction], depth: int, s0: Optional[Fraction] = None
) -> Verdict:
    """Sign test on the S-fraction of ``moments``.

    ``s0`` is recorded in the verdict; it defaults to ``moments[0]`` and lets
    callers that normalized beforehand keep the original leading moment.
    """
    moments = [rat(x) for x in moments]
    if moments[0] == 0:
        raise ZeroLeadingMoment("moments[0] must be nonzero")
    if moments[0] < 0:
        raise ValueError("a Stieltjes moment sequence needs moments[0] > 0")
    s0 = moments[0] if s0 is None else s0
    rep = sfraction_expand(moments, depth)
    alphas = rep.alphas
    for k, a in enumerate(alphas[1:], start=1):
        if a < 0:
            return Verdict(VerdictKind.FIRST_NEGATIVE_ALPHA, depth, s0, k, a, alphas)
    if rep.status is Status.DEGENERATE:
        return Verdict(VerdictKind.DEGENERATE, depth, s0, rep.at, alphas=alphas)
    return Verdict(VerdictKind.STIELTJES_UP_TO, depth, s0, alphas=alphas)


def lp_plus_verdict(params: HyperParams, depth: int) -> Verdict:
    """S-fraction test applied to the signed moments of f'/f, f = pFq(params)."""
    if not params.all_positive():
        raise InvalidParams("lp_plus_verdict needs all parameters > 0")
    moments = signed_logderiv_moments(params, depth)
    s0 = moments[0]
    return stieltjes_verdict([m / s0 for m in moments], depth, s0=s0)
