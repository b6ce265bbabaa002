import argparse
import json

import pandas as pd
import pytest

from src.app.cli.commands import exit_code_for, main, parse_intervals
from src.app.core.exceptions import (
    MissingArtifactError,
    ObjectiveEvaluationError,
    ScenarioValidationError,
    TemperatureCrossError,
)
from src.app.models.schedule import CostBreakdown, ReferenceBreakdowns
from src.app.services.artifact_writer import write_json
from tests.factories import scenario_document


def _breakdown(recovered, cleaning, pumping):
    return CostBreakdown.from_components(
        recovered_energy_value=recovered,
        energy_loss_cost=0.0,
        cleaning_cost_total=cleaning,
        pumping_cost_total=pumping,
    )


CASE_STUDY = ReferenceBreakdowns(
    clean=_breakdown(23_437_800.0, 0.0, 236_909.0),
    fouled=_breakdown(18_570_433.0, 0.0, 596_365.0),
    scheduled=_breakdown(21_138_727.0, 1_478_400.0, 449_504.0),
)


def _write_document(path, document) -> str:
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


# ----------------------------------------------------------------------------
# Argument handling and exit codes
# ----------------------------------------------------------------------------

def test_parse_intervals():
    assert parse_intervals("16,23,28") == [16, 23, 28]
    assert parse_intervals(" 5, 0 ,9") == [5, 0, 9]


@pytest.mark.parametrize("text", ["", "a,b", "3,-1"])
def test_parse_intervals_rejects_bad_input(text):
    with pytest.raises(argparse.ArgumentTypeError):
        parse_intervals(text)


def test_bad_intervals_stop_argument_parsing():
    with pytest.raises(SystemExit) as exc_info:
        main(["simulate", "--intervals", "x"])
    assert exc_info.value.code == 2


def test_exit_codes():
    assert exit_code_for(ScenarioValidationError("bad", field_path="horizon_months")) == 2
    assert exit_code_for(ValueError("bad")) == 2
    assert exit_code_for(TemperatureCrossError("cross")) == 3
    assert exit_code_for(MissingArtifactError("gone")) == 4
    assert exit_code_for(FileNotFoundError("gone")) == 4
    assert exit_code_for(RuntimeError("other")) == 1


def test_exit_code_looks_through_objective_failures():
    wrapped = ObjectiveEvaluationError("objective failed", position=[3.0, 4.0])
    wrapped.__cause__ = TemperatureCrossError("cross")
    assert exit_code_for(wrapped) == 3


# ----------------------------------------------------------------------------
# simulate
# ----------------------------------------------------------------------------

def test_simulate_writes_the_run_directory(tmp_path, small_scenario_path):
    out = tmp_path / "run"
    assert main(["simulate", "--scenario", small_scenario_path, "--intervals", "0,0", "--out", str(out)]) == 0

    for name in ("schedule.csv", "breakdown.json", "duty_series.csv", "exchanger_savings.csv"):
        assert (out / name).is_file()
    schedule = pd.read_csv(out / "schedule.csv")
    assert schedule["interval"].tolist() == [0, 0]
    assert schedule.filter(like="month_").to_numpy().min() == 1

    breakdowns = ReferenceBreakdowns.model_validate_json((out / "breakdown.json").read_text(encoding="utf-8"))
    assert breakdowns.scheduled == breakdowns.fouled


def test_simulate_is_byte_reproducible(tmp_path, small_scenario_path):
    for name in ("a", "b"):
        main(["simulate", "--scenario", small_scenario_path, "--intervals", "6,9", "--out", str(tmp_path / name)])
    for name in ("schedule.csv", "breakdown.json", "duty_series.csv", "exchanger_savings.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_wrong_interval_count_is_invalid_input(tmp_path, small_scenario_path):
    code = main(["simulate", "--scenario", small_scenario_path, "--intervals", "1,2,3", "--out", str(tmp_path)])
    assert code == 2


def test_missing_scenario_is_an_io_error(tmp_path):
    code = main(["simulate", "--scenario", str(tmp_path / "absent.json"), "--intervals", "1", "--out", str(tmp_path)])
    assert code == 4


def test_malformed_scenario_is_invalid_input(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["simulate", "--scenario", str(path), "--intervals", "1", "--out", str(tmp_path)]) == 2


def test_temperature_cross_is_a_model_failure(tmp_path):
    path = _write_document(tmp_path / "cross.json", scenario_document(count=1, hot_temperatures=[290.0]))
    assert main(["simulate", "--scenario", path, "--intervals", "0", "--out", str(tmp_path / "run")]) == 3


# ----------------------------------------------------------------------------
# report
# ----------------------------------------------------------------------------

def test_report_on_missing_directory(tmp_path):
    assert main(["report", "--in", str(tmp_path / "nowhere")]) == 4


def test_report_without_breakdown(tmp_path):
    assert main(["report", "--in", str(tmp_path)]) == 4


def test_report_reproduces_case_study_savings(tmp_path, capsys):
    write_json(CASE_STUDY, str(tmp_path / "breakdown.json"))
    assert main(["report", "--in", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "1,236,755" in out
    assert "5,226,823" in out
    assert "23.7%" in out


def test_report_schedule_equal_to_fouled(tmp_path, capsys):
    refs = CASE_STUDY.model_copy(update={"scheduled": CASE_STUDY.fouled})
    write_json(refs, str(tmp_path / "breakdown.json"))
    assert main(["report", "--in", str(tmp_path)]) == 0
    assert "0.0%" in capsys.readouterr().out


def test_report_degenerate_reference(tmp_path, capsys):
    refs = CASE_STUDY.model_copy(update={"clean": CASE_STUDY.fouled})
    write_json(refs, str(tmp_path / "breakdown.json"))
    assert main(["report", "--in", str(tmp_path)]) == 2
    assert "Maximum potential savings" in capsys.readouterr().err


# ----------------------------------------------------------------------------
# optimize
# ----------------------------------------------------------------------------

def test_small_optimize_run(tmp_path, small_scenario_path, capsys):
    out = tmp_path / "pso"
    code = main([
        "optimize", "--scenario", small_scenario_path, "--particles", "4", "--iterations", "3",
        "--seed", "1", "--workers", "1", "--out", str(out),
    ])
    assert code == 0
    assert "Gbest intervals:" in capsys.readouterr().out

    history = pd.read_csv(out / "fitness_history.csv")
    assert history["iteration"].tolist() == [1, 2, 3]
    assert history["best_fitness"].is_monotonic_decreasing

    gbest = json.loads((out / "gbest.json").read_text(encoding="utf-8"))
    assert len(gbest["intervals"]) == 2
    assert all(0 <= d <= 31 for d in gbest["intervals"])
    assert gbest["iterations"] == 3 and gbest["particles"] == 4 and gbest["seed"] == 1

    assert main(["report", "--in", str(out), "--plot"]) == 0
    assert (out / "duty_series.png").is_file()
    assert (out / "fitness_history.png").is_file()
