from collections.abc import Sequence
from dataclasses import dataclass, field

import structlog

from gadgets import build_chain, chain_states, matching_triangle
from gadgets.base import GadgetError, LabeledGadget
from topology import (
    Edge,
    SubconfigurationVector,
    Triangle,
    TriangularConfiguration,
    VertexAllocator,
    triangle_edges,
)

from .matching import Matching, MatchingError

logger = structlog.get_logger(__name__)

PORT_NAMES = ("p", "q", "r")


@dataclass(frozen=True)
class TriangleGadget:
    """The opened T_pqr standing in for one source triangle."""

    source: Triangle
    start: int
    stop: int
    ports: tuple[Triangle, Triangle, Triangle]
    m1: tuple[int, ...]
    m0: tuple[int, ...]
    weight_index: int


@dataclass(frozen=True)
class ChainGadget:
    """The opened chain standing in for one source edge.

    ``members`` are the source triangle indices on the edge, in order;
    ``parts`` maps each part name to its (N0, N1) triangle indices.
    """

    source: Edge
    start: int
    stop: int
    members: tuple[int, ...]
    ports: tuple[Triangle, ...]
    parts: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=dict)


@dataclass(frozen=True)
class MatchingInstance:
    """Δ′ with 0/1 triangle weights and the registry tying it back to Δ."""

    source: TriangularConfiguration
    config: TriangularConfiguration
    weights: tuple[int, ...]
    triangles: tuple[TriangleGadget, ...]
    chains: tuple[ChainGadget, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.config):
            raise MatchingError(
                f"{len(self.weights)} weights for {len(self.config)} triangles", code="dimension"
            )

    @property
    def port_triangles(self) -> list[Triangle]:
        return [t for gadget in self.triangles for t in gadget.ports]


def _indices(config: TriangularConfiguration, triangles: Sequence[Triangle] | frozenset[Triangle]) -> tuple[int, ...]:
    return tuple(sorted(config.index_of(t) for t in triangles))


def reduce(source: TriangularConfiguration) -> MatchingInstance:
    """Build Δ′ whose perfect matchings correspond one-to-one to the cycles of Δ.

    One hollow port triangle per incidence (t, e); per source triangle an opened
    T_pqr on its three ports; per source edge an opened chain on the ports of its
    triangles, in triangle order. T-gadgets come first, then chains by edge order.
    """
    allocator = VertexAllocator()
    ports: dict[tuple[int, Edge], Triangle] = {}
    for i, t in enumerate(source.triangles):
        for e in triangle_edges(t):
            ports[(i, e)] = allocator.fresh_triangle()

    t_gadgets: list[LabeledGadget] = []
    for i, t in enumerate(source.triangles):
        identify = {name: ports[(i, e)] for name, e in zip(PORT_NAMES, triangle_edges(t))}
        t_gadgets.append(matching_triangle().instantiate(allocator, identify).opened())

    c_gadgets: list[LabeledGadget] = []
    for e in source.edges:
        members = source.triangles_on_edge(e)
        c_gadgets.append(build_chain([ports[(i, e)] for i in members], allocator).opened())

    triangles: list[Triangle] = []
    for gadget in (*t_gadgets, *c_gadgets):
        triangles.extend(gadget.config.triangles)
    config = TriangularConfiguration(tuple(triangles))

    weights = [0] * len(config)
    t_entries: list[TriangleGadget] = []
    offset = 0
    for i, (t, gadget) in enumerate(zip(source.triangles, t_gadgets)):
        weight_index = config.index_of(gadget.label("weight"))
        weights[weight_index] = 1
        t_entries.append(
            TriangleGadget(
                source=t,
                start=offset,
                stop=offset + len(gadget.config),
                ports=tuple(ports[(i, e)] for e in triangle_edges(t)),  # type: ignore[arg-type]
                m1=_indices(config, gadget.matching("N1")),
                m0=_indices(config, gadget.matching("N0")),
                weight_index=weight_index,
            )
        )
        offset += len(gadget.config)

    c_entries: list[ChainGadget] = []
    for e, gadget in zip(source.edges, c_gadgets):
        members = source.triangles_on_edge(e)
        c_entries.append(
            ChainGadget(
                source=e,
                start=offset,
                stop=offset + len(gadget.config),
                members=members,
                ports=tuple(ports[(i, e)] for i in members),
                parts={
                    part.name: (_indices(config, part.state("N0")), _indices(config, part.state("N1")))
                    for part in gadget.parts
                },
            )
        )
        offset += len(gadget.config)

    instance = MatchingInstance(
        source=source,
        config=config,
        weights=tuple(weights),
        triangles=tuple(t_entries),
        chains=tuple(c_entries),
    )
    logger.info(
        "matching.reduced",
        source_triangles=len(source),
        source_edges=len(source.edges),
        triangles=len(config),
    )
    return instance


def matching_for_cycle(instance: MatchingInstance, cycle: SubconfigurationVector) -> Matching:
    """M_C: M¹ on triangles of C, M⁰ elsewhere, and the unique chain state per edge."""
    if cycle.bits.length != len(instance.source):
        raise MatchingError(
            f"vector of length {cycle.bits.length} for {len(instance.source)} source triangles",
            code="dimension",
        )
    in_cycle = set(cycle.indices())
    chosen: set[int] = set()
    for i, gadget in enumerate(instance.triangles):
        chosen.update(gadget.m1 if i in in_cycle else gadget.m0)
    for chain in instance.chains:
        inside = [k for k, i in enumerate(chain.members, start=1) if i in in_cycle]
        if len(inside) % 2:
            raise MatchingError(
                f"edge {chain.source} lies in {len(inside)} triangles of the subconfiguration; not a cycle",
                code="odd-edge",
            )
        covered = set(range(1, len(chain.members) + 1)) - set(inside)
        try:
            states = chain_states(len(chain.members), covered)
        except GadgetError as e:
            raise MatchingError(f"edge {chain.source}: {e.message}", code="odd-edge") from e
        for name, (off, on) in chain.parts.items():
            chosen.update(on if states[name] == "N1" else off)
    return Matching(instance.config, frozenset(chosen))


def cycle_for_matching(instance: MatchingInstance, matching: Matching) -> SubconfigurationVector:
    """Read C back from the state of every T-gadget."""
    if not matching.is_perfect():
        raise MatchingError("matching is not perfect", code="not-perfect")
    in_cycle = []
    for i, gadget in enumerate(instance.triangles):
        local = {k for k in matching.chosen if gadget.start <= k < gadget.stop}
        if local == set(gadget.m1):
            in_cycle.append(i)
        elif local != set(gadget.m0):
            raise MatchingError(
                f"gadget of triangle {gadget.source} is in neither canonical state",
                code="non-canonical",
            )
    return instance.source.vector(instance.source.triangles[i] for i in in_cycle)
