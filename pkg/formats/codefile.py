from pathlib import Path

from algebra import BinaryCode, BitVector
from algebra.code import CodeError

from .text import FormatError, content_lines, parse_int, read_text, write_text


def parse_code(text: str, source: str = "<code>") -> BinaryCode:
    """Header "n d" followed by d basis rows of n characters from {0,1}."""
    lines = list(content_lines(text))
    if not lines:
        raise FormatError(f"{source}: missing 'n d' header")
    lineno, header = lines[0]
    if len(header) != 2:
        raise FormatError(f"{source}:{lineno}: header must be 'n d'")
    n = parse_int(header[0], f"{source}:{lineno}")
    d = parse_int(header[1], f"{source}:{lineno}")
    if n < 1 or d < 0:
        raise FormatError(f"{source}:{lineno}: need n >= 1 and d >= 0, got n={n} d={d}")
    rows = lines[1:]
    if len(rows) != d:
        raise FormatError(f"{source}: header declares {d} rows, found {len(rows)}")
    basis = []
    for lineno, fields in rows:
        row = "".join(fields)
        if len(row) != n or set(row) - {"0", "1"}:
            raise FormatError(f"{source}:{lineno}: expected {n} characters from {{0,1}}, got {row!r}")
        basis.append(BitVector.from_string(row))
    try:
        return BinaryCode(n, tuple(basis))
    except CodeError as e:
        raise FormatError(f"{source}: {e.message}", code=e.code) from e


def format_code(code: BinaryCode) -> str:
    lines = [f"{code.length} {code.dimension}"]
    lines += [row.to_string() for row in code.basis]
    return "\n".join(lines) + "\n"


def read_code(path: str | Path) -> BinaryCode:
    return parse_code(read_text(path), str(path))


def write_code(path: str | Path, code: BinaryCode) -> None:
    write_text(path, format_code(code))
