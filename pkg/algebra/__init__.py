from .code import (
    BinaryCode,
    CodeError,
    CodeMembershipError,
    CodeSizeError,
    contains,
    degree,
    doubled,
    enumerate_codewords,
    extended_weight_enumerator,
    is_even,
    is_minimal,
    minimal_codewords,
    precedes,
    puncture,
    weight_enumerator,
)
from .enumerator import EnumeratorError, WeightEnumerator, split_by_degree, total_enumerator
from .gf2 import (
    BitMatrix,
    BitVector,
    DimensionMismatchError,
    RowEchelon,
    SpanSolver,
    combine,
    coordinates_in_span,
    kernel_basis,
    rank,
    row_reduce,
    span,
)

__all__ = [
    "BinaryCode",
    "BitMatrix",
    "BitVector",
    "CodeError",
    "CodeMembershipError",
    "CodeSizeError",
    "DimensionMismatchError",
    "EnumeratorError",
    "RowEchelon",
    "SpanSolver",
    "WeightEnumerator",
    "combine",
    "contains",
    "coordinates_in_span",
    "degree",
    "doubled",
    "enumerate_codewords",
    "extended_weight_enumerator",
    "is_even",
    "is_minimal",
    "kernel_basis",
    "minimal_codewords",
    "precedes",
    "puncture",
    "rank",
    "row_reduce",
    "span",
    "split_by_degree",
    "total_enumerator",
    "weight_enumerator",
]
