from .config import (
    GuardConfig,
    LogFormat,
    LoggingConfig,
    SearchConfig,
    SearchStrategy,
    ToolConfig,
)

__all__ = [
    "GuardConfig",
    "LogFormat",
    "LoggingConfig",
    "SearchConfig",
    "SearchStrategy",
    "ToolConfig",
]
