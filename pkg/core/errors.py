class ReductionToolError(Exception):
    """Base error for every failure the command line reports as ``ERROR <code> <detail>``."""

    code: str = "error"
    exit_code: int = 2

    def __init__(self, message: str, code: str | None = None):
        self.message = message
        if code is not None:
            self.code = code
        super().__init__(message)

    def to_line(self) -> str:
        detail = " ".join(self.message.split())
        return f"ERROR {self.code} {detail}"


class VerificationFailure(ReductionToolError):
    code = "verification"
    exit_code = 1
