from collections.abc import Mapping
from dataclasses import dataclass, field

import structlog

from algebra import BinaryCode, BitVector, is_even
from core.errors import ReductionToolError
from gadgets import LabeledGadget, disjoint_triangles, join, sphere
from topology import (
    SubconfigurationVector,
    Triangle,
    TriangularConfiguration,
    VertexAllocator,
    union_all,
)

logger = structlog.get_logger(__name__)


def sphere_size(n: int) -> int:
    """Smallest even m with m >= n and m >= 4."""
    m = max(n, 4)
    return m + (m % 2)


@dataclass(frozen=True)
class Representation:
    """Δ^C_B: the union of one cycle per basis vector, sharing the Bⁿ slots.

    ``slots`` maps a 0-based coordinate j to the triangle B^n_{j+1}; only
    coordinates where some basis vector is 1 have a slot. ``blocks[i]`` is the
    triangle set of the cycle representing basis vector i.
    """

    code: BinaryCode
    m: int
    config: TriangularConfiguration
    slots: Mapping[int, Triangle] = field(default_factory=dict)
    blocks: tuple[frozenset[Triangle], ...] = ()
    e: int | None = None

    def __post_init__(self) -> None:
        if len(self.blocks) != self.code.dimension:
            raise RepresentationError(
                f"{len(self.blocks)} blocks for a code of dimension {self.code.dimension}"
            )

    @property
    def n(self) -> int:
        return self.code.length

    @property
    def d(self) -> int:
        return self.code.dimension

    @property
    def slot_triangles(self) -> frozenset[Triangle]:
        return frozenset(self.slots.values())

    @property
    def is_balanced(self) -> bool:
        return self.e is not None and all(k == self.e for k in self.excesses())

    def excess(self, i: int) -> int:
        """k_i = |block_i| - w(b_i)."""
        return len(self.blocks[i]) - self.code.basis[i].weight

    def excesses(self) -> list[int]:
        return [self.excess(i) for i in range(self.d)]

    def block_vector(self, i: int) -> SubconfigurationVector:
        return self.config.vector(self.blocks[i])

    def block_indices(self, i: int) -> list[int]:
        return sorted(self.config.index_of(t) for t in self.blocks[i])

    def slot_indices(self) -> dict[int, int]:
        return {j: self.config.index_of(t) for j, t in sorted(self.slots.items())}


def represent_basis_vector(
    b: BitVector,
    n: int,
    m: int,
    allocator: VertexAllocator | None = None,
    slots: Mapping[int, Triangle] | None = None,
) -> LabeledGadget:
    """Δ^C_b: S^m joined to B^n_j for every j with b_j = 1; used sphere faces and
    unused Bⁿ triangles removed.

    ``slots`` supplies shared Bⁿ triangles by 0-based coordinate; otherwise a
    fresh Bⁿ is built.
    """
    if b.length != n:
        raise RepresentationError(f"vector of length {b.length} for n = {n}")
    if not b:
        raise RepresentationError("the zero vector has no representation", code="zero-vector")
    if m < 4 or m % 2 or m < n:
        raise RepresentationError(f"sphere size m={m} must be even and at least max(n, 4)")
    allocator = allocator or VertexAllocator()
    if slots is None:
        bn = disjoint_triangles(n, allocator)
        slots = {j: bn.port(f"B{j + 1}") for j in range(n)}
    s = sphere(m, allocator)

    support = b.support()
    used = {s.port(f"S{j + 1}") for j in support}
    host = union_all(
        [TriangularConfiguration(tuple(slots[j] for j in support)), s.config]
    )
    for j in support:
        host = join(host, s.port(f"S{j + 1}"), slots[j])
    config = host.without(used)
    return LabeledGadget(
        name="block",
        config=config,
        ports={f"B{j + 1}": slots[j] for j in support},
        labels={k: t for k, t in s.labels.items() if t not in used},
    )


def represent_code(code: BinaryCode, m: int | None = None) -> Representation:
    """Unbalanced Δ^C_B for an even code, blocks in basis order."""
    if not is_even(code):
        raise RepresentationError(
            "code has an odd-weight basis vector; double it first", code="odd-code"
        )
    n = code.length
    m = m if m is not None else sphere_size(n)
    allocator = VertexAllocator()
    bn = disjoint_triangles(n, allocator)
    used = sorted({j for b in code.basis for j in b.support()})
    slots = {j: bn.port(f"B{j + 1}") for j in used}

    blocks = [represent_basis_vector(b, n, m, allocator, slots) for b in code.basis]
    config = union_all(
        [TriangularConfiguration(tuple(slots[j] for j in used))] + [blk.config for blk in blocks]
    )
    representation = Representation(
        code=code,
        m=m,
        config=config,
        slots=slots,
        blocks=tuple(frozenset(blk.config.triangles) for blk in blocks),
    )
    logger.info("represent.built", n=n, d=code.dimension, m=m, triangles=len(config))
    return representation


class RepresentationError(ReductionToolError):
    code = "represent"
