from typing import Any

import structlog

from .checks import Check, CheckRegistry, CheckResult, VerificationContext
from .errors import ReductionToolError
from . import theorems  # noqa: F401  registers the built-in checks

logger = structlog.get_logger(__name__)

GUARD_CODES = {"size"}


class Verifier:
    def __init__(self, names: list[str] | None = None):
        self._checks: list[Check] = []
        for name in names if names is not None else CheckRegistry.list_checks():
            if self.add_check(name) is None:
                raise ReductionToolError(f"unknown check {name!r}", code="usage")

    def add_check(self, name: str, config: dict[str, Any] | None = None) -> Check | None:
        check = CheckRegistry.create(name, config)
        if check:
            self._checks.append(check)
            self._checks.sort(key=lambda c: c.priority, reverse=True)
        return check

    @property
    def checks(self) -> list[Check]:
        return list(self._checks)

    def run(self, ctx: VerificationContext) -> list[CheckResult]:
        results = []
        for check in self._checks:
            if not check.enabled:
                continue
            try:
                result = check.run(ctx)
            except ReductionToolError as e:
                if e.code in GUARD_CODES:
                    result = check.skipped(e.to_line())
                else:
                    result = check.failed(e.to_line())
            logger.info("verify.check", check=check.name, status=result.status.value)
            results.append(result)
        return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)
