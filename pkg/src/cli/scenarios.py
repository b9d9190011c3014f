"""
Scenario files: YAML documents of saved CLI option defaults.

A scenario maps subcommand names to option values, e.g.

    exposure-or:
      estimate: 1.51
      ci: "1.03,2.22"
      target: 1.1

and is installed as the click default_map, so flags on the command line
still override it.
"""

import os
from typing import Dict, List

import yaml

from src.config import SCENARIOS_DIR, get_logger

logger = get_logger(__name__)


def load_scenario(scenario: str, scenarios_dir: str = SCENARIOS_DIR) -> Dict[str, Dict]:
    """
    Load a scenario by path, or by name from the scenarios directory.

    Args:
        scenario: Path to a YAML file, or a file name (".yaml" optional)
            inside scenarios_dir
        scenarios_dir: Directory searched for bare names

    Returns:
        Mapping of subcommand name to option defaults

    Raises:
        FileNotFoundError: If no matching scenario file exists
        ValueError: If the document is not a mapping of mappings
        yaml.YAMLError: If the file is not valid YAML
    """
    candidates = [scenario, os.path.join(scenarios_dir, scenario)]
    if not scenario.endswith((".yaml", ".yml")):
        candidates.append(os.path.join(scenarios_dir, f"{scenario}.yaml"))

    file_path = next((path for path in candidates if os.path.isfile(path)), None)
    if file_path is None:
        raise FileNotFoundError(f"Scenario file not found: {scenario}")

    with open(file_path, 'r', encoding='utf-8') as f:
        document = yaml.safe_load(f) or {}

    if not isinstance(document, dict) or not all(isinstance(v, dict) for v in document.values()):
        raise ValueError(f"Scenario {file_path} must map subcommand names to option values")

    # click looks options up by parameter name
    scenario_defaults = {
        command: {key.replace("-", "_"): value for key, value in options.items()}
        for command, options in document.items()
    }
    logger.info("Loaded scenario %s for %s", file_path, ", ".join(scenario_defaults))
    return scenario_defaults


def list_scenarios(scenarios_dir: str = SCENARIOS_DIR) -> List[str]:
    """Scenario names available in scenarios_dir, alphabetical"""
    if not os.path.isdir(scenarios_dir):
        return []
    return sorted(
        os.path.splitext(f)[0] for f in os.listdir(scenarios_dir) if f.endswith(('.yaml', '.yml'))
    )
