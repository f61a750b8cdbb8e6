from .errors import ReductionToolError, VerificationFailure
from .logging import configure_logging

__all__ = ["ReductionToolError", "VerificationFailure", "configure_logging"]
