"""Exact rationals and truncated formal power series.

Scalars are :class:`fractions.Fraction`; they are always stored reduced with a
positive denominator, so ``Rat`` values can be hashed and compared directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


class ZeroConstantTerm(ArithmeticError):
    """Raised when a series with vanishing constant term must be inverted."""


def rat(value: RatLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Strings may be ``"p/q"``, integers, or decimals (``"52.4865"`` becomes
    ``104973/2000``). Floats are refused: they would smuggle rounding in.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_rat(value: Fraction) -> str:
    """Serialize as ``"p/q"`` (or ``"p"`` for integers)."""
    return str(Fraction(value))


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of x^0..x^order; nothing beyond ``order`` is known."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RatLike]):
        cs = tuple(rat(c) for c in coeffs)
        if not cs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_add(self, other)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_add(self, ps_neg(other))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_mul(self, other)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [format_rat(c) for c in self.coeffs], "order": self.order}

    @classmethod
    def from_json(cls, data: dict) -> "PowerSeries":
        ps = cls(data["coeffs"])
        if ps.order != data["order"]:
            raise ValueError("order field disagrees with coefficient count")
        return ps

    def __repr__(self) -> str:
        return f"PowerSeries([{', '.join(format_rat(c) for c in self.coeffs)}])"


def constant(c: RatLike, order: int) -> PowerSeries:
    return PowerSeries([rat(c)] + [Fraction(0)] * order)


def ps_add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    n = min(f.order, g.order)
    return PowerSeries(f.coeffs[k] + g.coeffs[k] for k in range(n + 1))


def ps_neg(f: PowerSeries) -> PowerSeries:
    return PowerSeries(-c for c in f.coeffs)


def ps_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    return PowerSeries(sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n + 1))


def ps_derivative(f: PowerSeries) -> PowerSeries:
    if f.order < 1:
        raise ValueError("derivative needs a series of order >= 1")
    return PowerSeries(k * f.coeffs[k] for k in range(1, f.order + 1))


def ps_reciprocal(f: PowerSeries) -> PowerSeries:
    a = f.coeffs
    if a[0] == 0:
        raise ZeroConstantTerm("reciprocal of a series with f(0) = 0")
    inv0 = 1 / a[0]
    g = [inv0]
    for m in range(1, f.order + 1):
        g.append(-inv0 * sum(a[k] * g[m - k] for k in range(1, m + 1)))
    return PowerSeries(g)


def ps_logderiv(f: PowerSeries) -> PowerSeries:
    """f'/f, of order ``f.order - 1``."""
    if f.coeffs[0] == 0:
        raise ZeroConstantTerm("logarithmic derivative needs f(0) != 0")
    return ps_mul(ps_derivative(f), ps_reciprocal(f))


def ps_scale_arg(f: PowerSeries, c: RatLike) -> PowerSeries:
    """Coefficients of f(c*x)."""
    c = rat(c)
    out, p = [], Fraction(1)
    for a in f.coeffs:
        out.append(a * p)
        p *= c
    return PowerSeries(out)


def ps_exp(c: RatLike, order: int) -> PowerSeries:
    """Series of exp(c*x) through ``order``."""
    c = rat(c)
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * c / n)
    return PowerSeries(out)
