"""
Scenario Loader
Reads and writes scenario documents (JSON with units in the field names).
"""

import json
import os
from typing import Any, Sequence

from loguru import logger
from pydantic import ValidationError

from src.app.core.exceptions import ScenarioParseError, ScenarioValidationError
from src.app.models.scenario import Scenario

# Upper bound on a scenario document
MAX_SCENARIO_BYTES = 10 * 1024 * 1024


def _field_path(loc: Sequence[Any]) -> str:
    return ".".join(str(part) for part in loc)


def validate_file(file_path: str) -> None:
    """
    Check that the path exists, is a regular readable file and is not oversized.

    Raises:
        FileNotFoundError / PermissionError / IsADirectoryError: On IO problems
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Scenario file not found: {file_path}")
    if not os.path.isfile(file_path):
        raise IsADirectoryError(f"Scenario path is not a file: {file_path}")
    if not os.access(file_path, os.R_OK):
        raise PermissionError(f"Scenario file is not readable: {file_path}")
    size = os.path.getsize(file_path)
    if size > MAX_SCENARIO_BYTES:
        raise ScenarioParseError(f"Scenario file exceeds 10MB: {size} bytes")


def parse_scenario(text: str, source: str = "<string>") -> Scenario:
    """
    Validate a scenario document held in memory.

    Raises:
        ScenarioParseError: Malformed JSON or a non-object root
        ScenarioValidationError: Any invariant breach; carries the dotted field path
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(
            f"{source}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(document, dict):
        raise ScenarioParseError(f"{source}: scenario root must be a JSON object")

    try:
        return Scenario.model_validate(document)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = _field_path(first.get("loc", ()))
        where = f" at '{path}'" if path else ""
        raise ScenarioValidationError(
            f"{source}: invalid scenario{where}: {first.get('msg', 'validation failed')}"
            + (f" (+{exc.error_count() - 1} more)" if exc.error_count() > 1 else ""),
            field_path=path,
        ) from exc


def load_scenario(file_path: str) -> Scenario:
    """Load and fully validate a scenario file."""
    validate_file(file_path)
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as exc:
        raise ScenarioParseError(f"{file_path}: not UTF-8 text") from exc

    scenario = parse_scenario(text, source=file_path)
    logger.info(
        f"[SCENARIO] Loaded '{scenario.name}' from {file_path}: "
        f"{scenario.exchanger_count} exchangers, {len(scenario.hot_streams)} hot streams, "
        f"horizon {scenario.horizon} months"
    )
    return scenario


def dump_scenario(scenario: Scenario) -> str:
    return scenario.model_dump_json(indent=2, by_alias=True, exclude_none=True) + "\n"


def write_scenario(scenario: Scenario, file_path: str) -> str:
    """Write a scenario document that load_scenario reads back to an equal Scenario."""
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dump_scenario(scenario))
    logger.info(f"[SCENARIO] Wrote '{scenario.name}' to {file_path}")
    return file_path
