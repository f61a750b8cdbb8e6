from .codefile import format_code, parse_code, read_code, write_code
from .complexfile import format_complex, parse_complex, read_complex, write_complex
from .enumfile import read_enumerator, write_enumerator
from .metadata import format_metadata, parse_metadata, read_metadata, write_metadata
from .registry import format_registry, write_registry
from .text import FormatError

__all__ = [
    "FormatError",
    "format_code",
    "format_complex",
    "format_metadata",
    "format_registry",
    "parse_code",
    "parse_complex",
    "parse_metadata",
    "read_code",
    "read_complex",
    "read_enumerator",
    "read_metadata",
    "write_code",
    "write_complex",
    "write_enumerator",
    "write_metadata",
    "write_registry",
]
