from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import greedy_egyptian
from yuga.calendar import YugaParameters, default_parameters
from yuga.rational import Rational
from yuga.tally import (
    TallyQuantity,
    UnitFractionDecomposition,
    UnitFractionError,
    greedy_steps,
    greedy_unit_fractions,
    models_agree,
    scaled_moon_position,
    sixth_share,
    tally_circle,
)

P = default_parameters()


@pytest.mark.parametrize("n, units", [(0, 0), (1, 1809), (2, 270), (124, 0), (125, 1809)])
def test_scaled_moon_position(n, units):
    assert tally_circle(P) == 3348
    q = scaled_moon_position(P, n)
    assert q.count == units
    assert q.unit_label == "amsa-1/124-naksatra"


def test_scaled_matches_integer_formula():
    for n in range(0, 500):
        assert scaled_moon_position(P, n).count == (n * 1809) % 3348


@pytest.mark.parametrize("q, expected", [(12, (2, 0)), (5, (0, 5)), (6, (1, 0)), (0, (0, 0)), (17, (2, 5))])
def test_sixth_share(q, expected):
    assert sixth_share(q) == expected


def _count_off(quantity):
    # walk the measures one by one, every sixth goes to the tax pile
    tax = producer = pending = 0
    for _ in range(quantity):
        pending += 1
        if pending == 6:
            tax += 1
            producer += 5
            pending = 0
    return tax, producer, pending


@given(st.integers(0, 5000))
def test_sixth_share_conservation(q):
    tax, rem = sixth_share(q)
    assert q == 6 * tax + rem and 0 <= rem < 6
    t, producer, pending = _count_off(q)
    assert (tax, rem) == (t, pending)
    assert tax + producer + rem == q


def test_tally_quantity_rules():
    with pytest.raises(ValueError):
        TallyQuantity(-1)
    with pytest.raises(ValueError):
        TallyQuantity(1, "a") + TallyQuantity(1, "b")
    assert TallyQuantity(2, "a") + TallyQuantity(3, "a") == TallyQuantity(5, "a")
    assert TallyQuantity(13).separate(6) == (2, TallyQuantity(1))


@pytest.mark.parametrize(
    "r, expected",
    [(Rational(1, 6), (6,)), (Rational(73, 124), (2, 12, 186)), (Rational(2, 3), (2, 6))],
)
def test_greedy_unit_fractions(r, expected):
    dec = greedy_unit_fractions(r)
    assert dec.denominators == expected
    assert list(expected) == greedy_egyptian(Fraction(r.numerator, r.denominator))
    assert dec.total() == r
    assert sum(Fraction(1, d) for d in expected) == Fraction(r.numerator, r.denominator)


@pytest.mark.parametrize("r", [Rational(0), Rational(1), Rational(3, 2), Rational(-1, 2)])
def test_greedy_rejects_out_of_range(r):
    with pytest.raises(UnitFractionError):
        greedy_unit_fractions(r)


def test_decomposition_validates():
    with pytest.raises(UnitFractionError):
        UnitFractionDecomposition((3, 2))
    with pytest.raises(UnitFractionError):
        UnitFractionDecomposition((1,))
    assert str(greedy_unit_fractions(Rational(2, 3))) == "1/2 + 1/6"


proper = st.integers(2, 400).flatmap(lambda d: st.tuples(st.integers(1, d - 1), st.just(d)))


@settings(max_examples=500)
@given(proper)
def test_greedy_properties(nd):
    r = Rational(*nd)
    steps = list(greedy_steps(r))
    nums = [r.numerator] + [s.remainder.numerator for s in steps]
    assert all(a > b for a, b in zip(nums, nums[1:]))
    assert steps[-1].remainder == 0
    dec = greedy_unit_fractions(r)
    assert dec.total() == r
    assert list(dec.denominators) == greedy_egyptian(Fraction(*nd))


def test_models_agree_examples():
    w = models_agree(P, 1)
    assert w and w.tally_units == 1809
    assert w.rational_position == Rational(1809, 124)
    assert models_agree(P, 0).rational_position == 0
    assert models_agree(P, 0).as_row() == {
        "fortnight": 0, "tally_units": 0, "tally_circle": 3348, "rational_position": "0/1", "agree": "true",
    }


def test_models_agree_two_yugas():
    assert all(models_agree(P, n) for n in range(0, 249))


@st.composite
def yuga_params(draw):
    years = draw(st.integers(1, 8))
    return YugaParameters.build(
        years=years,
        synodic_months=12 * years + draw(st.integers(0, 5)),
        sidereal_months=draw(st.integers(1, 150)),
        naksatra_count=draw(st.integers(1, 40)),
    )


@given(yuga_params(), st.integers(0, 2000))
def test_models_agree_property(p, n):
    w = models_agree(p, n)
    assert w.agree
    assert w.tally_units == (n * p.moon_traversals) % (p.naksatra_count * p.fortnights)
