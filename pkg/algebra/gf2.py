from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from core.errors import ReductionToolError

WORD = 64
_ONE = np.uint64(1)


@dataclass(frozen=True, slots=True)
class BitVector:
    """Fixed-length GF(2) vector; coordinate ``j`` is bit ``j`` of ``bits``."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits do not fit in length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        value = 0
        length = 0
        for j, bit in enumerate(bits):
            if bit not in (0, 1):
                raise ValueError(f"not a bit: {bit!r}")
            value |= bit << j
            length = j + 1
        return cls(length, value)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        value = 0
        for j in support:
            if not 0 <= j < length:
                raise IndexError(j)
            value |= 1 << j
        return cls(length, value)

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(index)
        return (self.bits >> index) & 1

    def __iter__(self) -> Iterator[int]:
        for j in range(self.length):
            yield (self.bits >> j) & 1

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: "BitVector") -> "BitVector":
        _check_lengths(self.length, other.length)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        _check_lengths(self.length, other.length)
        return BitVector(self.length, self.bits & other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [j for j in range(self.length) if (self.bits >> j) & 1]

    def precedes(self, other: "BitVector") -> bool:
        """Support order: every 1 of ``self`` is a 1 of ``other``."""
        _check_lengths(self.length, other.length)
        return self.bits & ~other.bits == 0

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.length + other.length, self.bits | (other.bits << self.length))

    def delete(self, indices: Iterable[int]) -> "BitVector":
        dropped = set(indices)
        kept = [bit for j, bit in enumerate(self) if j not in dropped]
        return BitVector(len(kept), sum(bit << k for k, bit in enumerate(kept)))

    def to_string(self) -> str:
        return "".join(str(bit) for bit in self)

    def __str__(self) -> str:
        return self.to_string()


class BitMatrix:
    """Row-major GF(2) matrix, rows packed little-endian into uint64 words."""

    def __init__(self, words: np.ndarray, cols: int):
        if words.ndim != 2 or words.dtype != np.uint64:
            raise ValueError("words must be a 2-d uint64 array")
        if words.shape[1] != _word_count(cols):
            raise ValueError(f"{words.shape[1]} words cannot hold {cols} columns")
        self._words = words
        self._cols = cols
        self._words.setflags(write=False)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, _word_count(cols)), dtype=np.uint64), cols)

    @classmethod
    def from_dense(cls, dense: np.ndarray | Sequence[Sequence[int]]) -> "BitMatrix":
        array = np.asarray(dense, dtype=np.uint8)
        if array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2:
            raise ValueError("dense matrix must be 2-d")
        rows, cols = array.shape
        return cls(_pack(array & 1, cols), cols)

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not rows:
                raise ValueError("cols is required for an empty row list")
            cols = rows[0].length
        nwords = _word_count(cols)
        words = np.zeros((len(rows), nwords), dtype=np.uint64)
        for i, row in enumerate(rows):
            _check_lengths(cols, row.length)
            words[i] = _int_to_words(row.bits, nwords)
        return cls(words, cols)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]) -> "BitMatrix":
        """Matrix with a 1 at every listed (row, column) position."""
        words = np.zeros((rows, _word_count(cols)), dtype=np.uint64)
        pairs = np.array(list(entries), dtype=np.int64).reshape(-1, 2)
        if pairs.size:
            r, c = pairs[:, 0], pairs[:, 1]
            if r.min() < 0 or r.max() >= rows or c.min() < 0 or c.max() >= cols:
                raise IndexError("entry outside the matrix")
            shifts = (c % WORD).astype(np.uint64)
            np.bitwise_or.at(words, (r, c // WORD), np.left_shift(_ONE, shifts))
        return cls(words, cols)

    @property
    def rows(self) -> int:
        return self._words.shape[0]

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def words(self) -> np.ndarray:
        return self._words

    def row(self, i: int) -> BitVector:
        return BitVector(self._cols, _words_to_int(self._words[i]))

    def row_vectors(self) -> list[BitVector]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self._cols):
            raise IndexError(index)
        return int((self._words[i, j // WORD] >> np.uint64(j % WORD)) & _ONE)

    def to_dense(self) -> np.ndarray:
        if self.rows == 0 or self._cols == 0:
            return np.zeros((self.rows, self._cols), dtype=np.uint8)
        raw = np.ascontiguousarray(self._words).view(np.uint8)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, : self._cols]

    def multiply(self, v: BitVector) -> BitVector:
        _check_lengths(self._cols, v.length)
        out = 0
        for i in range(self.rows):
            if (_words_to_int(self._words[i]) & v.bits).bit_count() & 1:
                out |= 1 << i
        return BitVector(self.rows, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self._cols == other._cols and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self._cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix(rows={self.rows}, cols={self.cols})"


@dataclass(frozen=True)
class RowEchelon:
    rref: BitMatrix
    rank: int
    pivots: tuple[int, ...]


def row_reduce(matrix: BitMatrix) -> RowEchelon:
    """Reduced row-echelon form by whole-row XOR.

    Columns are resolved left to right; the pivot for a column is the lowest-index
    unresolved row holding a 1 there.
    """
    words = matrix.words.copy()
    rows = words.shape[0]
    pivots: list[int] = []
    r = 0
    for col in range(matrix.cols):
        if r >= rows:
            break
        column = _column_bits(words, col)
        candidates = np.flatnonzero(column[r:])
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
            column[[r, p]] = column[[p, r]]
        mask = column.astype(bool)
        mask[r] = False
        if mask.any():
            words[mask] ^= words[r]
        pivots.append(col)
        r += 1
    return RowEchelon(BitMatrix(words, matrix.cols), r, tuple(pivots))


def rank(matrix: BitMatrix) -> int:
    return row_reduce(matrix).rank


def kernel_basis(matrix: BitMatrix) -> list[BitVector]:
    """Basis of {v : M·v = 0}, one vector per free column in ascending order."""
    echelon = row_reduce(matrix)
    pivot_rows = [_words_to_int(echelon.rref.words[i]) for i in range(echelon.rank)]
    pivot_set = set(echelon.pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for row_bits, pivot in zip(pivot_rows, echelon.pivots):
            if (row_bits >> free) & 1:
                bits |= 1 << pivot
        basis.append(BitVector(matrix.cols, bits))
    return basis


class SpanSolver:
    """Coordinates of vectors with respect to a fixed independent basis."""

    def __init__(self, basis: Sequence[BitVector], length: int | None = None):
        if length is None:
            length = basis[0].length if basis else 0
        self.length = length
        self.size = len(basis)
        # each entry: (pivot bit, reduced vector bits, combination of basis indices)
        self._reduced: list[tuple[int, int, int]] = []
        for i, vector in enumerate(basis):
            _check_lengths(length, vector.length)
            bits, combo = self._reduce(vector.bits, 1 << i)
            if bits == 0:
                raise DimensionMismatchError(
                    f"basis vector {i} is dependent on the previous ones", code="dependent"
                )
            pivot = bits & -bits
            self._reduced = [
                (p, b ^ bits, c ^ combo) if b & pivot else (p, b, c)
                for p, b, c in self._reduced
            ]
            self._reduced.append((pivot, bits, combo))

    def _reduce(self, bits: int, combo: int) -> tuple[int, int]:
        for pivot, row_bits, row_combo in self._reduced:
            if bits & pivot:
                bits ^= row_bits
                combo ^= row_combo
        return bits, combo

    def coordinates(self, v: BitVector) -> tuple[int, ...] | None:
        _check_lengths(self.length, v.length)
        residual, combo = self._reduce(v.bits, 0)
        if residual:
            return None
        return tuple((combo >> i) & 1 for i in range(self.size))

    def contains(self, v: BitVector) -> bool:
        return self.coordinates(v) is not None


def coordinates_in_span(basis: Sequence[BitVector], v: BitVector) -> tuple[int, ...] | None:
    if basis:
        _check_lengths(basis[0].length, v.length)
    return SpanSolver(basis, v.length).coordinates(v)


def combine(basis: Sequence[BitVector], coefficients: Sequence[int], length: int) -> BitVector:
    bits = 0
    for vector, coefficient in zip(basis, coefficients, strict=True):
        if coefficient:
            bits ^= vector.bits
    return BitVector(length, bits)


def span(basis: Sequence[BitVector], length: int) -> list[BitVector]:
    """All 2^k XOR-combinations; entry ``k`` uses the basis vectors set in ``k``."""
    values = [0] * (1 << len(basis))
    for k in range(1, len(values)):
        low = (k & -k).bit_length() - 1
        values[k] = values[k & (k - 1)] ^ basis[low].bits
    return [BitVector(length, bits) for bits in values]


def _word_count(cols: int) -> int:
    return max(1, (cols + WORD - 1) // WORD)


def _pack(dense: np.ndarray, cols: int) -> np.ndarray:
    rows = dense.shape[0]
    nwords = _word_count(cols)
    padded = np.zeros((rows, nwords * WORD), dtype=np.uint8)
    padded[:, :cols] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(rows, nwords)


def _column_bits(words: np.ndarray, col: int) -> np.ndarray:
    return (words[:, col // WORD] >> np.uint64(col % WORD)) & _ONE


def _int_to_words(bits: int, nwords: int) -> np.ndarray:
    return np.frombuffer(bits.to_bytes(nwords * 8, "little"), dtype="<u8").astype(np.uint64)


def _words_to_int(row: np.ndarray) -> int:
    return int.from_bytes(row.astype("<u8").tobytes(), "little")


def _check_lengths(expected: int, actual: int) -> None:
    if expected != actual:
        raise DimensionMismatchError(f"length {actual} does not match {expected}")


class DimensionMismatchError(ReductionToolError):
    code = "dimension"
