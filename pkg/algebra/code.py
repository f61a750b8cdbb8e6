from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import structlog

from core.errors import ReductionToolError
from .enumerator import WeightEnumerator, split_by_degree
from .gf2 import BitMatrix, BitVector, SpanSolver, row_reduce, span

logger = structlog.get_logger(__name__)

MAX_DIM = 20


@dataclass(frozen=True)
class BinaryCode:
    """Subspace of GF(2)^n given by a basis, kept exactly as supplied.

    The basis is never auto-reduced: degrees and the triangular representation
    are defined with respect to this particular basis.
    """

    length: int
    basis: tuple[BitVector, ...] = ()

    def __post_init__(self) -> None:
        if self.length < 1:
            raise CodeError(f"code length must be positive, got {self.length}")
        basis = tuple(self.basis)
        object.__setattr__(self, "basis", basis)
        for i, row in enumerate(basis):
            if row.length != self.length:
                raise CodeError(f"basis row {i} has length {row.length}, expected {self.length}")
        if len(basis) > self.length:
            raise CodeError(f"{len(basis)} basis rows exceed length {self.length}", code="dependent")
        if basis and row_reduce(BitMatrix.from_rows(list(basis), self.length)).rank != len(basis):
            raise CodeError("basis rows are linearly dependent", code="dependent")

    @classmethod
    def from_strings(cls, rows: Sequence[str], length: int | None = None) -> "BinaryCode":
        vectors = tuple(BitVector.from_string(row) for row in rows)
        if length is None:
            if not vectors:
                raise CodeError("length is required for a code without basis rows")
            length = vectors[0].length
        return cls(length, vectors)

    @classmethod
    def zero(cls, length: int) -> "BinaryCode":
        return cls(length, ())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def solver(self) -> SpanSolver:
        return SpanSolver(self.basis, self.length)

    def __contains__(self, word: BitVector) -> bool:
        return contains(self, word)


def contains(code: BinaryCode, word: BitVector) -> bool:
    if word.length != code.length:
        return False
    return code.solver().contains(word)


def _guard(code: BinaryCode, max_dim: int) -> None:
    if code.dimension > max_dim:
        raise CodeSizeError(
            f"dimension {code.dimension} exceeds the exhaustive-enumeration guard {max_dim}"
        )


def enumerate_codewords(code: BinaryCode, max_dim: int = MAX_DIM) -> list[BitVector]:
    """All 2^d codewords; entry ``k`` is the combination selected by the bits of ``k``."""
    _guard(code, max_dim)
    return span(code.basis, code.length)


def weight_enumerator(code: BinaryCode, max_dim: int = MAX_DIM) -> WeightEnumerator:
    return WeightEnumerator.from_weights(c.weight for c in enumerate_codewords(code, max_dim))


def coefficients(code: BinaryCode, word: BitVector, solver: SpanSolver | None = None) -> tuple[int, ...]:
    solver = solver or code.solver()
    coords = solver.coordinates(word) if word.length == code.length else None
    if coords is None:
        raise CodeMembershipError(f"{word} is not a codeword")
    return coords


def degree(code: BinaryCode, word: BitVector, solver: SpanSolver | None = None) -> int:
    """Number of basis vectors in the unique expansion of ``word``."""
    return sum(coefficients(code, word, solver))


def extended_weight_enumerator(code: BinaryCode, max_dim: int = MAX_DIM) -> list[WeightEnumerator]:
    """W^k_C for k = 0..d; enumeration order gives the degree as a popcount."""
    words = enumerate_codewords(code, max_dim)
    return split_by_degree(
        ((word.weight, k.bit_count()) for k, word in enumerate(words)), max_degree=code.dimension
    )


def precedes(c: BitVector, d: BitVector) -> bool:
    return c.precedes(d)


def is_minimal(code: BinaryCode, word: BitVector, max_dim: int = MAX_DIM) -> bool:
    """True iff no other nonzero codeword has support strictly inside ``word``'s.

    The zero word is reported minimal (vacuously); minimality is only meaningful
    among nonzero words.
    """
    if word.length != code.length or not code.solver().contains(word):
        raise CodeMembershipError(f"{word} is not a codeword")
    if not word:
        return True
    return not any(
        other and other != word and other.precedes(word)
        for other in enumerate_codewords(code, max_dim)
    )


def minimal_codewords(code: BinaryCode, max_dim: int = MAX_DIM) -> list[BitVector]:
    words = [w for w in enumerate_codewords(code, max_dim) if w]
    return [w for w in words if not any(o != w and o.precedes(w) for o in words)]


def puncture(code: BinaryCode, coordinates: Iterable[int]) -> BinaryCode:
    """Delete the given (0-based) coordinates from every codeword."""
    dropped = sorted(set(coordinates))
    for j in dropped:
        if not 0 <= j < code.length:
            raise CodeError(f"coordinate {j} outside 0..{code.length - 1}", code="index")
    new_length = code.length - len(dropped)
    if new_length < 1:
        raise CodeError("puncturing would delete every coordinate", code="index")
    if not dropped:
        return code
    images = [row.delete(dropped) for row in code.basis]
    if not images:
        return BinaryCode.zero(new_length)
    echelon = row_reduce(BitMatrix.from_rows(images, new_length))
    basis = tuple(echelon.rref.row(i) for i in range(echelon.rank))
    logger.debug("code.punctured", dropped=dropped, dimension=len(basis))
    return BinaryCode(new_length, basis)


def doubled(code: BinaryCode) -> BinaryCode:
    """The code {(c|c) : c in C}; its weights are exactly twice those of C."""
    return BinaryCode(2 * code.length, tuple(row.concat(row) for row in code.basis))


def is_even(code: BinaryCode) -> bool:
    return all(row.weight % 2 == 0 for row in code.basis)


class CodeError(ReductionToolError):
    code = "code"


class CodeSizeError(CodeError):
    code = "size"


class CodeMembershipError(CodeError):
    code = "membership"
