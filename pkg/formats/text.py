from collections.abc import Iterator
from pathlib import Path

from core.errors import ReductionToolError


def content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """(line number, fields) of every non-blank line with '#' comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if fields:
            yield lineno, fields


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except FileNotFoundError:
        raise FormatError(f"{path}: no such file", code="missing-file") from None
    except UnicodeDecodeError:
        raise FormatError(f"{path}: not an ASCII file") from None


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="ascii")


def parse_int(token: str, where: str) -> int:
    if not token.lstrip("-").isdigit():
        raise FormatError(f"{where}: expected an integer, got {token!r}")
    return int(token)


class FormatError(ReductionToolError):
    code = "format"
