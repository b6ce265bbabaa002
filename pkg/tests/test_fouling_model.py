import math

import pytest

from src.app.models.fouling import FoulingParams
from src.app.services.fouling_model import effective_ua, fouling_resistance, resistance_timeline, ua_timeline
from src.app.services.heat_exchanger import overall_u

PARAMS = FoulingParams(asymptote=0.002, rate=0.1)


def test_fresh_surface_has_no_resistance():
    assert fouling_resistance(PARAMS, 0.0) == 0.0


def test_half_asymptote_time():
    assert fouling_resistance(PARAMS, math.log(2.0) / 0.1) == pytest.approx(0.001, rel=1e-12)


def test_resistance_approaches_the_asymptote():
    assert fouling_resistance(PARAMS, 1e6) == pytest.approx(0.002, abs=1e-12)


def test_resistance_is_monotone_and_below_the_asymptote():
    values = [fouling_resistance(PARAMS, t / 4.0) for t in range(400)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert all(v < PARAMS.asymptote for v in values)


def test_negative_elapsed_time_is_rejected():
    with pytest.raises(ValueError):
        fouling_resistance(PARAMS, -1.0)


def test_uncleaned_timeline_follows_the_fouling_law():
    timeline = resistance_timeline(PARAMS, [], 12)
    assert timeline.horizon == 12
    for t in range(1, 13):
        assert timeline.at(t) == pytest.approx(0.002 * (1.0 - math.exp(-0.1 * t)), rel=1e-12)


def test_cleaning_restarts_the_clock():
    timeline = resistance_timeline(PARAMS, {5}, 10)
    assert timeline.at(5) == 0.0
    assert timeline.at(6) == timeline.at(1)
    assert timeline.at(10) == pytest.approx(fouling_resistance(PARAMS, 5), rel=1e-12)


def test_second_cleaning_counts_from_the_first():
    timeline = resistance_timeline(PARAMS, {5, 10}, 10)
    assert timeline.at(9) == pytest.approx(0.002 * (1.0 - math.exp(-0.4)), rel=1e-12)
    assert timeline.at(10) == 0.0


def test_periodic_cleaning_gives_a_periodic_timeline():
    d = 6
    timeline = resistance_timeline(PARAMS, range(d, 45, d), 44)
    for t in range(1, 45):
        if t % d == 0:
            assert timeline.at(t) == 0.0
        else:
            assert timeline.at(t) == timeline.at(t % d)


def test_clean_steps_outside_the_horizon_are_rejected():
    with pytest.raises(ValueError):
        resistance_timeline(PARAMS, {0}, 10)
    with pytest.raises(ValueError):
        resistance_timeline(PARAMS, {11}, 10)


def test_clean_ua(geometry):
    assert effective_ua(geometry, 0.0) == pytest.approx(geometry.area * overall_u(geometry, 0.0, 0.0), rel=1e-12)


def test_fouled_ua_composes_overall_u(geometry):
    assert effective_ua(geometry, PARAMS.asymptote) == geometry.area * overall_u(geometry, PARAMS.asymptote, 0.0)


def test_ua_falls_toward_zero_as_resistance_grows(geometry):
    resistances = [0.0, 1e-4, 1e-3, 1e-2, 1e-1, 1.0, 100.0]
    ua = [effective_ua(geometry, r) for r in resistances]
    assert all(a > b for a, b in zip(ua, ua[1:]))
    assert ua[-1] < 1e-3 * ua[0]


def test_static_outer_resistance_lowers_ua(geometry):
    assert effective_ua(geometry, 0.001, 0.0005) < effective_ua(geometry, 0.001)


def test_ua_timeline_carries_clean_ua_in_clean_months(geometry):
    timeline = ua_timeline(geometry, PARAMS, [4, 8], 10)
    clean = effective_ua(geometry, 0.0)
    assert len(timeline) == 10
    assert timeline[3] == clean
    assert timeline[7] == clean
    assert timeline[4] == timeline[0] < clean
