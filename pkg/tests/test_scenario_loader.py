import json

import pytest

from src.app.core.exceptions import ScenarioParseError, ScenarioValidationError
from src.app.parsers.scenario_loader import load_scenario, parse_scenario, write_scenario
from tests.factories import exchanger_document, scenario_document


def _parse(document) -> object:
    return parse_scenario(json.dumps(document))


# ----------------------------------------------------------------------------
# Shipped scenarios
# ----------------------------------------------------------------------------

def test_default_scenario_loads(default_scenario):
    assert default_scenario.exchanger_count == 11
    assert default_scenario.horizon == 44
    assert default_scenario.exchanger_ids == [f"E-{n}" for n in range(1, 12)]
    assert default_scenario.costs.cleaning_cost == 35_200.0
    assert default_scenario.costs.charge_downtime is False


def test_small_scenario_loads(small_scenario):
    assert small_scenario.exchanger_count == 2
    assert small_scenario.horizon == 24
    assert small_scenario.costs.charge_downtime is False


# ----------------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------------

def test_valid_document_parses():
    scenario = _parse(scenario_document(count=3))
    assert scenario.name == "series-3"
    assert scenario.topology.hot_chain("H-2") == ["E-2"]


def test_duplicate_exchanger_id_is_rejected():
    document = scenario_document(count=2)
    document["exchangers"][1]["id"] = "E-1"
    with pytest.raises(ScenarioValidationError) as exc_info:
        _parse(document)
    assert "duplicate exchanger id" in exc_info.value.message


def test_wall_must_have_thickness():
    document = scenario_document(count=1)
    document["exchangers"][0]["geometry"]["d_inner_m"] = document["exchangers"][0]["geometry"]["d_outer_m"]
    with pytest.raises(ScenarioValidationError) as exc_info:
        _parse(document)
    assert "d_inner_m" in exc_info.value.message


def test_negative_mass_flow_names_the_field():
    document = scenario_document(count=1)
    document["cold_inlet"]["mass_flow_kg_s"] = -5.0
    with pytest.raises(ScenarioValidationError) as exc_info:
        _parse(document)
    assert exc_info.value.field_path == "cold_inlet.mass_flow_kg_s"


def test_fouling_rate_must_be_positive():
    document = scenario_document(count=2)
    document["exchangers"][1]["fouling"]["rate_per_month"] = 0.0
    with pytest.raises(ScenarioValidationError) as exc_info:
        _parse(document)
    assert "rate_per_month" in exc_info.value.field_path


def test_undeclared_hot_stream_is_rejected():
    document = scenario_document(count=2)
    document["exchangers"][1]["hot_stream"] = "H-9"
    with pytest.raises(ScenarioValidationError) as exc_info:
        _parse(document)
    assert "H-9" in exc_info.value.message


def test_gapped_visit_order_is_rejected():
    document = scenario_document(count=2)
    document["exchangers"][1] = exchanger_document("E-2", "H-1", visit_order=3)
    with pytest.raises(ScenarioValidationError):
        _parse(document)


def test_cold_path_must_cover_every_exchanger():
    document = scenario_document(count=3)
    document["cold_path"] = ["E-1", "E-3"]
    with pytest.raises(ScenarioValidationError):
        _parse(document)


def test_explicit_cold_path_sets_the_order():
    document = scenario_document(count=3)
    document["cold_path"] = ["E-2", "E-1", "E-3"]
    scenario = _parse(document)
    assert [ex.id for ex in scenario.exchangers_in_path_order()] == ["E-2", "E-1", "E-3"]


def test_per_exchanger_cleaning_cost_overrides_the_default():
    document = scenario_document(count=2)
    document["exchangers"][0]["cleaning_cost_per_action"] = 50_000.0
    scenario = _parse(document)
    first, second = scenario.exchangers
    assert scenario.cleaning_cost_for(first) == 50_000.0
    assert scenario.cleaning_cost_for(second) == 35_200.0


def test_fouling_disabled_copy_zeroes_every_asymptote():
    scenario = _parse(scenario_document(count=3))
    clean = scenario.with_fouling_disabled()
    assert [ex.fouling.asymptote for ex in clean.exchangers] == [0.0, 0.0, 0.0]
    assert [ex.fouling.asymptote for ex in scenario.exchangers] == [0.003, 0.003, 0.003]


# ----------------------------------------------------------------------------
# Parsing and files
# ----------------------------------------------------------------------------

def test_malformed_json_is_a_parse_error():
    with pytest.raises(ScenarioParseError) as exc_info:
        parse_scenario('{"name": "broken",', source="broken.json")
    assert "broken.json" in exc_info.value.message


def test_non_object_root_is_a_parse_error():
    with pytest.raises(ScenarioParseError):
        parse_scenario("[1, 2, 3]")


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_scenario(str(tmp_path / "absent.json"))


def test_directory_is_not_a_scenario(tmp_path):
    with pytest.raises(IsADirectoryError):
        load_scenario(str(tmp_path))


def test_written_scenario_loads_back_equal(tmp_path, small_scenario):
    path = write_scenario(small_scenario, str(tmp_path / "nested" / "copy.json"))
    assert load_scenario(path) == small_scenario
