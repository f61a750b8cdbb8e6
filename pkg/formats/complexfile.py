from collections.abc import Sequence
from pathlib import Path

from topology import ConfigurationError, TriangularConfiguration

from .text import FormatError, content_lines, parse_int, read_text, write_text


def parse_complex(text: str, source: str = "<complex>") -> tuple[TriangularConfiguration, tuple[int, ...] | None]:
    """One triangle "v1 v2 v3" per line, optionally followed by "w=0" or "w=1".

    Weights are returned only when every line carries one.
    """
    triples = []
    weights: list[int | None] = []
    for lineno, fields in content_lines(text):
        where = f"{source}:{lineno}"
        if len(fields) not in (3, 4):
            raise FormatError(f"{where}: expected 'v1 v2 v3 [w=0|1]'")
        triples.append(tuple(parse_int(f, where) for f in fields[:3]))
        if len(fields) == 4:
            if fields[3] not in ("w=0", "w=1"):
                raise FormatError(f"{where}: weight must be w=0 or w=1, got {fields[3]!r}")
            weights.append(int(fields[3][2:]))
        else:
            weights.append(None)
    try:
        config = TriangularConfiguration.from_triangles(triples)
    except ConfigurationError as e:
        raise FormatError(f"{source}: {e.message}", code=e.code) from e
    if weights and all(w is not None for w in weights):
        return config, tuple(weights)  # type: ignore[arg-type]
    if any(w is not None for w in weights):
        raise FormatError(f"{source}: weights must be given on every line or on none")
    return config, None


def format_complex(config: TriangularConfiguration, weights: Sequence[int] | None = None) -> str:
    if weights is not None and len(weights) != len(config):
        raise FormatError(f"{len(weights)} weights for {len(config)} triangles")
    lines = []
    for i, (a, b, c) in enumerate(config.triangles):
        suffix = f" w={weights[i]}" if weights is not None else ""
        lines.append(f"{a} {b} {c}{suffix}")
    return "".join(line + "\n" for line in lines)


def read_complex(path: str | Path) -> tuple[TriangularConfiguration, tuple[int, ...] | None]:
    return parse_complex(read_text(path), str(path))


def write_complex(
    path: str | Path, config: TriangularConfiguration, weights: Sequence[int] | None = None
) -> None:
    write_text(path, format_complex(config, weights))
