from pathlib import Path

from algebra import WeightEnumerator
from algebra.enumerator import EnumeratorError

from .text import FormatError, read_text, write_text


def read_enumerator(path: str | Path) -> WeightEnumerator:
    """Lines of "exponent coefficient", ascending exponents."""
    try:
        return WeightEnumerator.from_text(read_text(path))
    except EnumeratorError as e:
        raise FormatError(f"{path}: {e.message}") from e


def write_enumerator(path: str | Path, enumerator: WeightEnumerator) -> None:
    write_text(path, enumerator.to_text())
