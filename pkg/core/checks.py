from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Type

from algebra import BinaryCode
from models import GuardConfig, SearchConfig


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass
class CheckResult:
    name: str
    status: CheckStatus
    statement: str = ""
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != CheckStatus.FAIL

    def to_line(self) -> str:
        line = f"{self.status.value} {self.name}"
        if self.detail:
            line += f": {' '.join(self.detail.split())}"
        return line


@dataclass
class VerificationContext:
    code: BinaryCode
    guards: GuardConfig = field(default_factory=GuardConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    shared: dict[str, Any] = field(default_factory=dict)

    def memo(self, key: str, compute) -> Any:
        if key not in self.shared:
            self.shared[key] = compute()
        return self.shared[key]


class Check(ABC):
    name: str = "base"
    priority: int = 1000
    statement: str = ""

    def __init__(self, config: dict[str, Any] | None = None):
        self.config = dict(config or {})
        self.enabled = True

    def passed(self, detail: str = "") -> CheckResult:
        return CheckResult(self.name, CheckStatus.PASS, self.statement, detail)

    def failed(self, detail: str) -> CheckResult:
        return CheckResult(self.name, CheckStatus.FAIL, self.statement, detail)

    def skipped(self, detail: str) -> CheckResult:
        return CheckResult(self.name, CheckStatus.SKIP, self.statement, detail)

    @abstractmethod
    def run(self, ctx: VerificationContext) -> CheckResult:
        """Verify one statement against the shared context."""
        pass


class CheckRegistry:
    _checks: dict[str, Type[Check]] = {}

    @classmethod
    def register(cls, name: str | None = None):
        def decorator(check_cls: Type[Check]):
            check_name = name or check_cls.name
            cls._checks[check_name] = check_cls
            return check_cls
        return decorator

    @classmethod
    def get(cls, name: str) -> Type[Check] | None:
        return cls._checks.get(name)

    @classmethod
    def create(cls, name: str, config: dict[str, Any] | None = None) -> Check | None:
        check_cls = cls.get(name)
        if check_cls is None:
            return None
        return check_cls(config)

    @classmethod
    def list_checks(cls) -> list[str]:
        return list(cls._checks.keys())
