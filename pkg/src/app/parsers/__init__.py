from src.app.parsers.scenario_loader import load_scenario, parse_scenario, write_scenario

__all__ = ["load_scenario", "parse_scenario", "write_scenario"]
