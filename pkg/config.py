from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from core.errors import ReductionToolError
from models import ToolConfig


class ConfigError(ReductionToolError):
    code = "config"


def load_config(config_path: str | Path | None = "config.yaml") -> ToolConfig:
    if config_path is None:
        return ToolConfig()

    path = Path(config_path)
    if not path.exists():
        return ToolConfig()

    with open(path) as f:
        try:
            data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{path}: {e}") from e

    return parse_config(data, source=str(path))


def parse_config(data: dict[str, Any], source: str = "<memory>") -> ToolConfig:
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: top level must be a mapping")
    try:
        return ToolConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"{source}: {e.errors()[0]['loc']} {e.errors()[0]['msg']}") from e
