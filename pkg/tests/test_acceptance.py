"""End-to-end acceptance criteria, each at its stated tolerance and time budget.

A pass/fail line per criterion is printed in the terminal summary.
"""
import random
import time
from fractions import Fraction as F

from polya_gate.hyper import (
    HyperParams,
    identity_bailey_check,
    identity_driver_check,
    limit_convergence_check,
    signed_logderiv_moments,
)
from polya_gate.scan import alpha_sign_at, threshold_bisect
from polya_gate.sfrac import (
    Status,
    VerdictKind,
    hankel_determinants,
    lp_plus_verdict,
    sfraction_expand,
    sfraction_to_series,
)
from polya_gate.symbolic import CheckStatus, leading_coeff_check, expected_degree

PREC = F(1, 1000)
GRID = [F(1, 2), F(1), F(3, 2), F(7), F(100)]


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert elapsed < self.seconds, f"took {elapsed:.1f}s, budget {self.seconds}s"


def _bracket_ok(res, target):
    t = F(target)
    return res.width <= PREC and res.bracket_lo <= t <= res.bracket_hi + PREC


def test_ac1_threshold_n3():
    with Budget(10):
        res = threshold_bisect(1, F(1, 2), 3, 1, 100, PREC)
    assert _bracket_ok(res, "52.4865"), res.to_json()


def test_ac2_threshold_n5():
    with Budget(60):
        res = threshold_bisect(1, F(3, 2), 5, 100, 1000, PREC)
    assert _bracket_ok(res, "574.8859"), res.to_json()


def test_ac3_exact_sign_instances():
    with Budget(300):
        assert alpha_sign_at(1, F(5, 2), 72053, 7)[0] == -1
    with Budget(300):
        assert alpha_sign_at(1, F(7, 2), 750232, 9)[0] == -1


def test_ac4_leading_coefficients():
    rng = random.Random(20261018)
    with Budget(300):
        for n in (3, 4, 5):
            for _ in range(10):
                gamma = F(rng.randint(1, 400), 97)
                b1 = F(rng.randint(1, 500), 101)
                row = leading_coeff_check(n, gamma, b1)
                assert row.degree_actual == expected_degree(n), row.to_json()
                assert row.status is CheckStatus.MATCH, row.to_json()
                assert row.lead_actual == row.lead_expected


def test_ac5_positive_controls():
    with Budget(120):
        for b1 in GRID:
            for b2 in GRID:
                families = [HyperParams([], [b1, b2])]
                families += [HyperParams([b1 + m], [b1, b2]) for m in range(4)]
                for params in families:
                    v = lp_plus_verdict(params, 12)
                    assert v.kind is VerdictKind.STIELTJES_UP_TO and v.depth == 12, str(params)


def test_ac6_identities():
    rng = random.Random(6)
    with Budget(30):
        for _ in range(20):
            a = F(rng.randint(1, 900), rng.choice([7, 11, 13]))
            b = F(rng.randint(1, 900), rng.choice([7, 11, 13]))
            assert identity_driver_check(a, 30), a
            assert identity_bailey_check(a, b, 30), (a, b)


def test_ac7_literature_spot_checks():
    with Budget(120):
        for a in (F(1), F(3, 2)):
            v = lp_plus_verdict(HyperParams([1], [a, a + F(1, 2)]), 16)
            assert v.kind is VerdictKind.STIELTJES_UP_TO and v.depth == 16
        v = lp_plus_verdict(HyperParams([1], [2, F(5, 2)]), 16)
        assert v.kind is VerdictKind.FIRST_NEGATIVE_ALPHA
        assert (v.k, v.alpha) == (2, F(-1, 7))
        v = lp_plus_verdict(HyperParams([F(1, 2)], [F(1, 3), F(2, 3)]), 16)
        assert v.kind is VerdictKind.STIELTJES_UP_TO and v.depth == 16


def _random_moments(rng, depth):
    b1 = F(rng.randint(1, 40), rng.randint(1, 8))
    b2 = F(rng.randint(1, 1200), rng.randint(1, 8))
    gamma = F(rng.randint(0, 30), rng.randint(1, 8))
    s = signed_logderiv_moments(HyperParams([b1 + gamma], [b1, b2]), depth)
    return [m / s[0] for m in s]


def test_ac8_property_suites():
    rng = random.Random(8)
    depth = 8
    with Budget(120):
        done = 0
        while done < 100:
            m = _random_moments(rng, depth)
            rep = sfraction_expand(m, depth)
            if rep.status is not Status.COMPLETE:
                continue
            assert sfraction_to_series(rep, depth) == m
            done += 1
        for _ in range(20):
            c = F(rng.randint(1, 1000), rng.randint(1, 1000))
            m = _random_moments(rng, depth)
            base = sfraction_expand(m, depth).alphas
            scaled = sfraction_expand([c**n * x for n, x in enumerate(m)], depth).alphas
            assert scaled[0] == base[0]
            assert scaled[1:] == tuple(c * a for a in base[1:])
        done, both = 0, set()
        while done < 50:
            m = _random_moments(rng, depth)
            rep = sfraction_expand(m, depth)
            if rep.status is not Status.COMPLETE:
                continue
            h0, h1 = hankel_determinants(m, depth)
            alpha_pos = all(a > 0 for a in rep.alphas[1:])
            assert alpha_pos == all(d > 0 for d in h0 + h1)
            both.add(alpha_pos)
            done += 1
        assert both == {True, False}


def test_ac9_limit_check():
    with Budget(5):
        d = limit_convergence_check(F(3, 2), 1, [10, 100, 1000], 10)
    assert d[0] > d[1] > d[2]
