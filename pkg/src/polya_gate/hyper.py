"""Exact pFq series, their signed log-derivative moments, and identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .series import (
    PowerSeries,
    RatLike,
    format_rat,
    ps_add,
    ps_exp,
    ps_logderiv,
    ps_mul,
    ps_neg,
    ps_scale_arg,
    rat,
)


class InvalidParams(ValueError):
    pass


class ReductionFailure(ArithmeticError):
    """A coefficient that must vanish did not; points at an arithmetic bug."""


def _is_nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HyperParams:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    polynomial_mode: bool = field(default=False, compare=False)

    def __init__(
        self,
        upper: Sequence[RatLike],
        lower: Sequence[RatLike],
        polynomial_mode: bool = False,
    ):
        up = tuple(rat(a) for a in upper)
        lo = tuple(rat(b) for b in lower)
        if len(up) > len(lo):
            raise InvalidParams(f"need p <= q, got p={len(up)}, q={len(lo)}")
        for b in lo:
            if _is_nonpositive_int(b):
                raise InvalidParams(f"lower parameter {b} is a nonpositive integer")
        if not polynomial_mode:
            for a in up:
                if _is_nonpositive_int(a):
                    raise InvalidParams(
                        f"upper parameter {a} is a nonpositive integer (series is a polynomial)"
                    )
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "polynomial_mode", polynomial_mode)

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def all_positive(self) -> bool:
        return all(x > 0 for x in self.upper + self.lower)

    @classmethod
    def parse(cls, text: str) -> "HyperParams":
        """Parse ``"a1,a2;b1,b2,b3"``; an empty upper list is written ``";b1"``."""
        if text.count(";") != 1:
            raise InvalidParams(f"expected 'a1,...;b1,...', got {text!r}")
        up_s, lo_s = text.split(";")
        try:
            up = [rat(s) for s in up_s.split(",") if s.strip()]
            lo = [rat(s) for s in lo_s.split(",") if s.strip()]
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParams(f"bad rational in {text!r}: {exc}") from None
        return cls(up, lo)

    def __str__(self) -> str:
        up = ",".join(format_rat(a) for a in self.upper)
        lo = ",".join(format_rat(b) for b in self.lower)
        return f"{up};{lo}"


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial in x, lowest degree first; zero has degree -1."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence[RatLike]):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: RatLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def pochhammer(a: RatLike, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1)."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = rat(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def pfq_coefficients(params: HyperParams, order: int) -> list[Fraction]:
    """Taylor coefficients 0..order, built by the term-ratio recurrence."""
    coeffs = [Fraction(1)]
    for n in range(order):
        ratio = Fraction(1, n + 1)
        for a in params.upper:
            ratio *= a + n
        for b in params.lower:
            ratio /= b + n
        coeffs.append(coeffs[-1] * ratio)
    return coeffs


def pfq_series(params: HyperParams, order: int) -> PowerSeries:
    return PowerSeries(pfq_coefficients(params, order))


def signed_logderiv_moments(params: HyperParams, depth: int) -> list[Fraction]:
    """s_n = (-1)^n [x^n] f'/f for n = 0..depth, f the pFq series."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    ld = ps_logderiv(pfq_series(params, depth + 1))
    return [c if n % 2 == 0 else -c for n, c in enumerate(ld.coeffs)]


def laguerre_reduction(b: RatLike, m: int, guard: int | None = None) -> Polynomial:
    """Degree-m polynomial P with 1F1(b+m; b; x) = e^x P(x).

    The product e^{-x} 1F1(b+m; b; x) is expanded through ``guard`` (default
    m+10) and every coefficient past degree m must vanish exactly.
    """
    b = rat(b)
    if b <= 0:
        raise InvalidParams("laguerre_reduction needs b > 0")
    if m < 0:
        raise InvalidParams("laguerre_reduction needs m >= 0")
    if guard is None:
        guard = m + 10
    if guard < m + 5:
        raise ValueError(f"guard must be >= m+5, got {guard}")
    prod = ps_mul(ps_exp(-1, guard), pfq_series(HyperParams([b + m], [b]), guard))
    tail = prod.coeffs[m + 1 :]
    for k, c in enumerate(tail, start=m + 1):
        if c != 0:
            raise ReductionFailure(f"coefficient of x^{k} is {c}, expected 0")
    return Polynomial(prod.coeffs[: m + 1])


def _zero_f_one(b: Fraction, order: int) -> PowerSeries:
    return ps_scale_arg(pfq_series(HyperParams([], [b]), order), Fraction(1, 4))


def identity_driver_check(a: RatLike, order: int, squared: bool = True) -> bool:
    """1F2(a-1/2; a, 2a-1; x) == 0F1(;a;x/4)^2 through ``order``.

    ``squared=False`` compares against the unsquared right side (a control).
    """
    a = rat(a)
    if a <= 0 or a == Fraction(1, 2):
        raise InvalidParams("driver identity needs a > 0 and a != 1/2")
    lhs = pfq_series(HyperParams([a - Fraction(1, 2)], [a, 2 * a - 1]), order)
    g = _zero_f_one(a, order)
    rhs = ps_mul(g, g) if squared else g
    return lhs == rhs


def identity_bailey_check(
    a: RatLike, b: RatLike, order: int, last_lower: RatLike | None = None
) -> bool:
    """2F3((a+b)/2, (a+b-1)/2; a, b, a+b-1; x) == 0F1(;a;x/4) 0F1(;b;x/4).

    ``last_lower`` overrides the third lower parameter (mismatch controls).
    """
    a, b = rat(a), rat(b)
    if a <= 0 or b <= 0:
        raise InvalidParams("bailey identity needs a, b > 0")
    c = a + b - 1 if last_lower is None else rat(last_lower)
    lhs = pfq_series(HyperParams([(a + b) / 2, (a + b - 1) / 2], [a, b, c]), order)
    rhs = ps_mul(_zero_f_one(a, order), _zero_f_one(b, order))
    return lhs == rhs


def limit_convergence_check(
    a: RatLike, b1: RatLike, b2_values: Sequence[RatLike], order: int
) -> list[Fraction]:
    """max_n |[x^n] 1F2(a; b1, b2; b2 x) - [x^n] 1F1(a; b1; x)| for each b2."""
    a, b1 = rat(a), rat(b1)
    if a <= 0 or b1 <= 0:
        raise InvalidParams("limit check needs positive parameters")
    target = pfq_series(HyperParams([a], [b1]), order)
    out = []
    for b2 in map(rat, b2_values):
        if b2 <= 0:
            raise InvalidParams("limit check needs b2 > 0")
        scaled = ps_scale_arg(pfq_series(HyperParams([a], [b1, b2]), order), b2)
        diff = ps_add(scaled, ps_neg(target))
        out.append(max(abs(c) for c in diff.coeffs))
    return out
