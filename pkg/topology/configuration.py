from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import structlog

from algebra.enumerator import WeightEnumerator
from algebra.gf2 import BitMatrix, BitVector, kernel_basis, row_reduce, span
from core.errors import ReductionToolError

logger = structlog.get_logger(__name__)

Triangle = tuple[int, int, int]
Edge = tuple[int, int]

MAX_CYCLE_DIM = 20


def normalize_triangle(triple: Iterable[int]) -> Triangle:
    vertices = tuple(sorted(int(v) for v in triple))
    if len(vertices) != 3:
        raise ConfigurationError(f"{vertices} is not a vertex triple", code="degenerate")
    if len(set(vertices)) != 3:
        raise ConfigurationError(f"triangle {vertices} repeats a vertex", code="degenerate")
    if vertices[0] < 0:
        raise ConfigurationError(f"triangle {vertices} has a negative vertex id", code="degenerate")
    return vertices  # type: ignore[return-value]


def triangle_edges(t: Triangle) -> tuple[Edge, Edge, Edge]:
    a, b, c = t
    return (a, b), (a, c), (b, c)


@dataclass(frozen=True)
class TriangularConfiguration:
    """Pure 2-dimensional complex given by its triangles.

    Edges and vertices are the downward closure of the triangle list. The list
    order is the column order of the incidence matrix.
    """

    triangles: tuple[Triangle, ...] = ()

    def __post_init__(self) -> None:
        normalized = tuple(normalize_triangle(t) for t in self.triangles)
        seen: set[Triangle] = set()
        for t in normalized:
            if t in seen:
                raise ConfigurationError(f"duplicate triangle {t}", code="duplicate")
            seen.add(t)
        object.__setattr__(self, "triangles", normalized)

    @classmethod
    def from_triangles(cls, triples: Iterable[Iterable[int]]) -> "TriangularConfiguration":
        return cls(tuple(normalize_triangle(t) for t in triples))

    @classmethod
    def empty(cls) -> "TriangularConfiguration":
        return cls(())

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for t in self.triangles for v in t}))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted({e for t in self.triangles for e in triangle_edges(t)}))

    @cached_property
    def _triangle_index(self) -> dict[Triangle, int]:
        return {t: i for i, t in enumerate(self.triangles)}

    @cached_property
    def _edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def _edge_triangles(self) -> dict[Edge, tuple[int, ...]]:
        incident: dict[Edge, list[int]] = {}
        for i, t in enumerate(self.triangles):
            for e in triangle_edges(t):
                incident.setdefault(e, []).append(i)
        return {e: tuple(ids) for e, ids in incident.items()}

    def __len__(self) -> int:
        return len(self.triangles)

    def __contains__(self, triple: object) -> bool:
        if not isinstance(triple, tuple):
            return False
        return tuple(sorted(triple)) in self._triangle_index

    def __iter__(self):
        return iter(self.triangles)

    @property
    def max_vertex(self) -> int:
        return self.vertices[-1] if self.triangles else -1

    def index_of(self, triple: Iterable[int]) -> int:
        t = normalize_triangle(triple)
        try:
            return self._triangle_index[t]
        except KeyError:
            raise ConfigurationError(f"triangle {t} is not in the configuration", code="missing") from None

    def edge_index(self, edge: Iterable[int]) -> int:
        e = tuple(sorted(edge))
        try:
            return self._edge_index[e]  # type: ignore[index]
        except KeyError:
            raise ConfigurationError(f"edge {e} is not in the configuration", code="missing") from None

    def triangles_on_edge(self, edge: Iterable[int]) -> tuple[int, ...]:
        """Indices of the triangles containing ``edge``, ascending."""
        e = tuple(sorted(edge))
        return self._edge_triangles.get(e, ())  # type: ignore[arg-type]

    def edge_degree(self, edge: Iterable[int]) -> int:
        return len(self.triangles_on_edge(edge))

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.triangles)

    def vector(self, triples: Iterable[Iterable[int]]) -> "SubconfigurationVector":
        """Incidence vector of a set of this configuration's triangles."""
        return SubconfigurationVector(
            self, BitVector.from_support(len(self), (self.index_of(t) for t in triples))
        )

    def zero_vector(self) -> "SubconfigurationVector":
        return SubconfigurationVector(self, BitVector.zeros(len(self)))

    def full_vector(self) -> "SubconfigurationVector":
        return SubconfigurationVector(self, BitVector(len(self), (1 << len(self)) - 1))

    def relabeled(self, mapping: Mapping[int, int]) -> "TriangularConfiguration":
        return TriangularConfiguration(
            tuple(normalize_triangle(mapping.get(v, v) for v in t) for t in self.triangles)
        )

    def without(self, triples: Iterable[Iterable[int]]) -> "TriangularConfiguration":
        dropped = {normalize_triangle(t) for t in triples}
        return TriangularConfiguration(tuple(t for t in self.triangles if t not in dropped))


@dataclass(frozen=True)
class SubconfigurationVector:
    """χ(C): membership of each host triangle in a subconfiguration."""

    host: TriangularConfiguration
    bits: BitVector

    def __post_init__(self) -> None:
        if self.bits.length != len(self.host):
            raise ConfigurationError(
                f"vector of length {self.bits.length} on a host with {len(self.host)} triangles",
                code="dimension",
            )

    def __xor__(self, other: "SubconfigurationVector") -> "SubconfigurationVector":
        if other.host is not self.host and other.host != self.host:
            raise ConfigurationError("vectors live on different hosts", code="dimension")
        return SubconfigurationVector(self.host, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return bool(self.bits)

    @property
    def weight(self) -> int:
        return self.bits.weight

    def indices(self) -> list[int]:
        return self.bits.support()

    def triangles(self) -> list[Triangle]:
        return [self.host.triangles[i] for i in self.bits.support()]

    def subconfiguration(self) -> TriangularConfiguration:
        return TriangularConfiguration(tuple(self.triangles()))

    def precedes(self, other: "SubconfigurationVector") -> bool:
        return self.bits.precedes(other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubconfigurationVector):
            return NotImplemented
        return self.bits == other.bits and self.host == other.host

    def __hash__(self) -> int:
        return hash((len(self.host), self.bits))


def from_triangles(triples: Iterable[Iterable[int]]) -> TriangularConfiguration:
    return TriangularConfiguration.from_triangles(triples)


def union(a: TriangularConfiguration, b: TriangularConfiguration) -> TriangularConfiguration:
    present = set(a.triangles)
    return TriangularConfiguration(a.triangles + tuple(t for t in b.triangles if t not in present))


def union_all(parts: Iterable[TriangularConfiguration]) -> TriangularConfiguration:
    ordered: dict[Triangle, None] = {}
    for part in parts:
        for t in part.triangles:
            ordered.setdefault(t, None)
    return TriangularConfiguration(tuple(ordered))


def intersection(a: TriangularConfiguration, b: TriangularConfiguration) -> TriangularConfiguration:
    present = set(b.triangles)
    return TriangularConfiguration(tuple(t for t in a.triangles if t in present))


def difference(a: TriangularConfiguration, b: TriangularConfiguration) -> TriangularConfiguration:
    """Triangles of ``a`` outside ``b``; edges and vertices left without a triangle vanish."""
    present = set(b.triangles)
    return TriangularConfiguration(tuple(t for t in a.triangles if t not in present))


def symmetric_difference(
    a: TriangularConfiguration, b: TriangularConfiguration
) -> TriangularConfiguration:
    return difference(union(a, b), intersection(a, b))


def incidence_matrix(config: TriangularConfiguration) -> BitMatrix:
    """Edge-by-triangle matrix; rows follow the sorted edge list, columns the triangle list."""
    edge_index = config._edge_index
    entries = (
        (edge_index[e], j) for j, t in enumerate(config.triangles) for e in triangle_edges(t)
    )
    return BitMatrix.from_entries(len(config.edges), len(config), entries)


def cycle_space(config: TriangularConfiguration) -> list[SubconfigurationVector]:
    basis = [SubconfigurationVector(config, v) for v in kernel_basis(incidence_matrix(config))]
    logger.debug("complex.cycle_space", triangles=len(config), dimension=len(basis))
    return basis


def cycle_space_dimension(config: TriangularConfiguration) -> int:
    return len(config) - row_reduce(incidence_matrix(config)).rank


def is_cycle(config: TriangularConfiguration, v: SubconfigurationVector | BitVector) -> bool:
    bits = v.bits if isinstance(v, SubconfigurationVector) else v
    if bits.length != len(config):
        raise ConfigurationError(
            f"vector of length {bits.length} on a host with {len(config)} triangles",
            code="dimension",
        )
    return not incidence_matrix(config).multiply(bits)


def is_circuit(config: TriangularConfiguration, v: SubconfigurationVector) -> bool:
    """Nonempty cycle containing no smaller nonempty cycle."""
    if not v or not is_cycle(config, v):
        return False
    return cycle_space_dimension(v.subconfiguration()) == 1


def enumerate_cycles(
    config: TriangularConfiguration, max_dim: int = MAX_CYCLE_DIM
) -> list[SubconfigurationVector]:
    basis = cycle_space(config)
    if len(basis) > max_dim:
        raise CycleGuardError(
            f"cycle space dimension {len(basis)} exceeds the enumeration guard {max_dim}"
        )
    return [
        SubconfigurationVector(config, v)
        for v in span([b.bits for b in basis], len(config))
    ]


def weight_enumerator_cycles(
    config: TriangularConfiguration, max_dim: int = MAX_CYCLE_DIM
) -> WeightEnumerator:
    return WeightEnumerator.from_weights(v.weight for v in enumerate_cycles(config, max_dim))


def subdivide(
    config: TriangularConfiguration, triangle: Sequence[int], vertex: int | None = None
) -> TriangularConfiguration:
    """Replace ``triangle`` {a,b,c} by {a,b,v}, {b,c,v}, {a,c,v} around a fresh vertex v.

    The three new triangles go to the end of the triangle list.
    """
    t = normalize_triangle(triangle)
    if t not in config:
        raise ConfigurationError(f"cannot subdivide {t}: not in the configuration", code="missing")
    if vertex is None:
        vertex = config.max_vertex + 1
    elif vertex in config.vertices:
        raise ConfigurationError(f"vertex {vertex} is already used", code="collision")
    a, b, c = t
    fresh = ((a, b, vertex), (b, c, vertex), (a, c, vertex))
    kept = tuple(s for s in config.triangles if s != t)
    return TriangularConfiguration(kept + tuple(normalize_triangle(s) for s in fresh))


def has_shared_vertex(t1: Iterable[int], t2: Iterable[int]) -> bool:
    return bool(set(t1) & set(t2))


def pairwise_vertex_disjoint(triples: Sequence[Iterable[int]]) -> bool:
    return not any(has_shared_vertex(a, b) for a, b in combinations(triples, 2))


class ConfigurationError(ReductionToolError):
    code = "complex"


class CycleGuardError(ConfigurationError):
    code = "size"
