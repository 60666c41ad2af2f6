"""Exit criteria. Each test prints one PASS/FAIL line; run with ``-s`` to see them.

All comparisons are exact (zero tolerance); random sweeps use fixed seeds.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from oracles import greedy_egyptian
from yuga.calendar import (
    YugaParameters,
    accumulate_moon_position,
    default_parameters,
    moon_position,
    moon_rate,
    sun_position,
)
from yuga.precession import Epoch, EclipticLongitude, PrecessionRate, conjunction_date, elapsed_years, sensitivity
from yuga.rational import Rational, rule_of_three, to_decimal_string, to_mixed
from yuga.tally import greedy_unit_fractions, models_agree

P = default_parameters()


@pytest.fixture
def report(request):
    checks = []

    def check(cond, what):
        checks.append((bool(cond), what))
        return cond

    start = time.perf_counter()
    yield check
    elapsed = time.perf_counter() - start
    ok = checks and all(c for c, _ in checks)
    failed = [w for c, w in checks if not c]
    line = f"[{'PASS' if ok else 'FAIL'}] {request.node.name} ({len(checks)} checks, {elapsed:.2f}s)"
    if failed:
        line += " failed: " + "; ".join(failed)
    print("\n" + line)
    assert ok, line


def rand_rational(rng, nonzero=False):
    while True:
        n = rng.randint(-10**9, 10**9)
        if n or not nonzero:
            return Rational(n, rng.randint(1, 10**6))


def test_ac1_moon_rate_reproduction(report):
    r = moon_rate(P)
    report(r == Rational(1809, 124), "moon rate 1809/124")
    report(str(to_mixed(r)) == "14 73/124", "mixed 14 73/124")
    report(to_decimal_string(r, 5) == "14.58871", "decimal 14.58871")


def test_ac2_traversal_identity(report):
    report(P.moon_traversals == 67 * 27 == 1809, "67 x 27 = 1809")
    report(P.fortnights == 2 * 62 == 124, "2 x 62 = 124")
    with pytest.raises(ValueError):
        YugaParameters(moon_traversals=1808)
    with pytest.raises(ValueError):
        YugaParameters(fortnights=122)
    report(True, "invariants enforced on construction")


def test_ac3_cycle_closure(report):
    start = time.perf_counter()
    report(moon_position(P, 124) == moon_position(P, 0), "moon closes at 124")
    report(sun_position(P, 124) == sun_position(P, 0), "sun closes at 124")
    bad = [n for n in range(249) if accumulate_moon_position(P, n) != moon_position(P, n)]
    report(not bad, f"accumulation == closed form on [0, 248] (mismatches: {bad[:5]})")
    report(time.perf_counter() - start < 1.0, "runtime < 1 s")


def test_ac4_rule_of_three(report):
    report(rule_of_three(1, 1809, 124) == Rational(1809, 124), "ruleOfThree(1, 1809, 124)")
    rng = random.Random(4)
    n = 10_000
    bad = 0
    for _ in range(n):
        b, c, d = rand_rational(rng), rand_rational(rng), rand_rational(rng, nonzero=True)
        if rule_of_three(b, c, d) * d != b * c:
            bad += 1
    report(bad == 0, f"x*d == b*c over {n} random triples")


def test_ac5_precession_method(report):
    e = elapsed_years(EclipticLongitude(Rational(880, 3)), EclipticLongitude(Rational(270)), PrecessionRate(Rational(72)))
    report(e == Rational(1680), "elapsed(293°20′, 270°, 72) = 1680")
    report(conjunction_date(Epoch(530), e).label == "1151 BCE", "530 CE - 1680 -> 1151 BCE")
    report(sensitivity(Rational(1)) == Rational(72), "1° -> 72 years")
    report(sensitivity(Rational(3)) == Rational(216), "3° -> 216 years")


def test_ac6_tally_equivalence(report):
    bad = [n for n in range(249) if not models_agree(P, n)]
    report(not bad, "default yuga, fortnights 0..248")
    rng = random.Random(6)
    trials = 1_000
    failures = 0
    for _ in range(trials):
        years = rng.randint(1, 10)
        p = YugaParameters.build(
            years=years,
            synodic_months=12 * years + rng.randint(0, 6),
            sidereal_months=rng.randint(1, 200),
            naksatra_count=rng.randint(1, 40),
        )
        n = rng.randint(0, 3 * p.fortnights)
        w = models_agree(p, n)
        oracle = Fraction(n * p.moon_traversals, p.fortnights) % p.naksatra_count
        if not w or Fraction(w.tally_units, p.fortnights) != oracle:
            failures += 1
    report(failures == 0, f"{trials} random parameter/fortnight combinations")


def test_ac7_unit_fractions(report):
    dec = greedy_unit_fractions(Rational(73, 124))
    report(dec.denominators == (2, 12, 186), "73/124 -> [2, 12, 186]")
    report(sum(Fraction(1, d) for d in dec.denominators) == Fraction(73, 124), "re-sum equals 73/124")
    rng = random.Random(7)
    n = 10_000
    bad = 0
    for _ in range(n):
        den = rng.randint(2, 2000)
        num = rng.randint(1, den - 1)
        dec = greedy_unit_fractions(Rational(num, den))
        if dec.total() != Rational(num, den) or list(dec.denominators) != greedy_egyptian(Fraction(num, den)):
            bad += 1
    report(bad == 0, f"re-summation over {n} random proper fractions")


def test_ac8_determinism(report):
    cmd = [sys.executable, "-m", "yuga", "table", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    report(len(a) > 0, "non-empty output")
    report(a == b, "two runs byte-identical")
