import pytest

from src.app.services.schedule_decoder import clean_steps_for, decode_intervals, decode_position

CASE_INTERVALS = [16, 23, 28, 9, 5, 9, 28, 5, 9, 5, 24]
CASE_COUNTS = [2, 1, 1, 4, 8, 4, 1, 8, 4, 8, 1]


def test_sixteen_month_interval_over_44_months():
    schedule = decode_intervals([16], 44)
    assert schedule.clean_steps(0) == [16, 32]
    assert schedule.cleaning_counts == [2]


def test_five_month_interval_over_44_months():
    schedule = decode_intervals([5], 44)
    assert schedule.clean_steps(0) == [5, 10, 15, 20, 25, 30, 35, 40]
    assert schedule.cleaning_counts == [8]


def test_zero_interval_never_cleans():
    schedule = decode_intervals([0], 44)
    assert schedule.matrix[0] == [1] * 44
    assert schedule.cleaning_counts == [0]


def test_interval_beyond_the_horizon_never_cleans():
    assert decode_intervals([45], 44).cleaning_counts == [0]
    assert decode_intervals([44], 44).clean_steps(0) == [44]


def test_case_study_intervals_decode_to_case_study_counts():
    schedule = decode_intervals(CASE_INTERVALS, 44)
    assert schedule.cleaning_counts == CASE_COUNTS
    assert schedule.total_cleanings == 42
    assert schedule.exchanger_count == 11


def test_count_identity_holds_exhaustively():
    for horizon in range(1, 65):
        schedule = decode_intervals(list(range(1, 65)), horizon)
        assert schedule.cleaning_counts == [horizon // d for d in range(1, 65)], horizon


def test_matrix_zeros_are_exactly_the_multiples():
    schedule = decode_intervals([7, 3], 20)
    for n, d in enumerate([7, 3]):
        for t in range(1, 21):
            assert schedule.matrix[n][t - 1] == (0 if t % d == 0 else 1)


def test_clean_steps_for_matches_the_matrix():
    assert clean_steps_for(9, 44) == [9, 18, 27, 36]
    assert clean_steps_for(0, 44) == []
    with pytest.raises(ValueError):
        clean_steps_for(-1, 44)


@pytest.mark.parametrize("intervals", [[2.5], [-3]])
def test_invalid_intervals_are_rejected(intervals):
    with pytest.raises(ValueError):
        decode_intervals(intervals, 44)


def test_integral_floats_are_accepted():
    assert decode_intervals([6.0], 12).intervals == [6]


def test_decode_position_rounds_half_up_and_clamps():
    position = [0.4, 0.5, 1.49, 30.6, 31.4, -3.0, 40.0, 15.5]
    assert decode_position(position) == [0, 1, 1, 31, 31, 0, 31, 16]


def test_decode_position_custom_box():
    assert decode_position([11.7, 4.2], low=0, high=11) == [11, 4]
