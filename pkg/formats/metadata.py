from pathlib import Path
from typing import Any

from represent import Representation

from .text import FormatError, content_lines, parse_int, read_text, write_text


def format_metadata(representation: Representation, doubled: bool = False) -> str:
    """Sidecar of a representation: "key value" lines, then slot and block index lines."""
    lines = [
        f"n {representation.n}",
        f"d {representation.d}",
        f"m {representation.m}",
        f"e {representation.e if representation.e is not None else '-'}",
        f"doubled {int(doubled)}",
    ]
    for j, index in representation.slot_indices().items():
        lines.append(f"slot {j} {index}")
    for i in range(representation.d):
        lines.append(f"block {i} " + " ".join(str(k) for k in representation.block_indices(i)))
    return "".join(line + "\n" for line in lines)


def parse_metadata(text: str, source: str = "<meta>") -> dict[str, Any]:
    meta: dict[str, Any] = {"slots": {}, "blocks": {}}
    for lineno, fields in content_lines(text):
        where = f"{source}:{lineno}"
        key = fields[0]
        if key in ("n", "d", "m", "doubled") and len(fields) == 2:
            meta[key] = parse_int(fields[1], where)
        elif key == "e" and len(fields) == 2:
            meta["e"] = None if fields[1] == "-" else parse_int(fields[1], where)
        elif key == "slot" and len(fields) == 3:
            meta["slots"][parse_int(fields[1], where)] = parse_int(fields[2], where)
        elif key == "block" and len(fields) >= 2:
            meta["blocks"][parse_int(fields[1], where)] = [parse_int(f, where) for f in fields[2:]]
        else:
            raise FormatError(f"{where}: unrecognised metadata line")
    return meta


def write_metadata(path: str | Path, representation: Representation, doubled: bool = False) -> None:
    write_text(path, format_metadata(representation, doubled))


def read_metadata(path: str | Path) -> dict[str, Any]:
    return parse_metadata(read_text(path), str(path))
