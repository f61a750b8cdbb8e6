from enum import Enum

from pydantic import BaseModel, Field


class LogFormat(str, Enum):
    JSON = "json"
    CONSOLE = "console"


class SearchStrategy(str, Enum):
    BACKTRACKING = "backtracking"
    EXHAUSTIVE = "exhaustive"


class LoggingConfig(BaseModel):
    level: str = "WARNING"
    format: LogFormat = LogFormat.CONSOLE


class GuardConfig(BaseModel):
    max_dim: int = Field(default=20, ge=0)
    max_triangles: int = Field(default=10_000, ge=0)
    naive_max_triangles: int = Field(default=20, ge=0)


class SearchConfig(BaseModel):
    strategy: SearchStrategy = SearchStrategy.BACKTRACKING


class ToolConfig(BaseModel):
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    guards: GuardConfig = Field(default_factory=GuardConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
