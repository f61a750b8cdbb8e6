from collections.abc import Iterable, Sequence
from itertools import combinations

import structlog

from topology import (
    Triangle,
    TriangularConfiguration,
    VertexAllocator,
    normalize_triangle,
    pairwise_vertex_disjoint,
)

from ..base import GadgetError, GadgetPart, LabeledGadget
from ..registry import GadgetBuilder, GadgetRegistry
from .matching_edge import matching_edge_prototype

logger = structlog.get_logger(__name__)

ON, OFF = "N1", "N0"


def part_names(n: int) -> list[str]:
    """a_i joins port i to internal i, b_i port i to internal i-1, c_i internals i and i+1."""
    names = [f"a{i}" for i in range(1, n + 1)]
    names += [f"b{i}" for i in range(2, n + 1)]
    names += [f"c{i}" for i in range(1, n)]
    return names


def build_chain(
    ports: Sequence[Sequence[int]],
    allocator: VertexAllocator,
    with_matchings: bool = False,
) -> LabeledGadget:
    """Chain C_{t1..tn} on the given port triangles, port triangles included.

    Internal triangles t'_1..t'_n are hollow. Every part is an opened matching
    edge whose state N1 covers both of its port triangles' edges and N0 covers
    neither.
    """
    n = len(ports)
    if n < 1:
        raise GadgetError("a chain needs at least one port", code="usage")
    port_triangles = [normalize_triangle(t) for t in ports]
    if not pairwise_vertex_disjoint(port_triangles):
        raise GadgetError("chain ports must be pairwise vertex-disjoint")
    for t in port_triangles:
        allocator.reserve(max(t))
    internals = [allocator.fresh_triangle() for _ in range(n)]

    ends: dict[str, tuple[Triangle, Triangle]] = {}
    for i in range(1, n + 1):
        ends[f"a{i}"] = (port_triangles[i - 1], internals[i - 1])
    for i in range(2, n + 1):
        ends[f"b{i}"] = (port_triangles[i - 1], internals[i - 2])
    for i in range(1, n):
        ends[f"c{i}"] = (internals[i - 1], internals[i])

    triangles: list[Triangle] = []
    parts: list[GadgetPart] = []
    for name in part_names(n):
        p, q = ends[name]
        edge = matching_edge_prototype().instantiate(allocator, {"p": p, "q": q}).opened()
        triangles.extend(edge.config.triangles)
        parts.append(GadgetPart(name, {OFF: edge.matching("N0"), ON: edge.matching("N1")}))
    triangles.extend(port_triangles)

    labels = {f"t{i}": t for i, t in enumerate(port_triangles, start=1)}
    labels.update({f"t'{i}": t for i, t in enumerate(internals, start=1)})
    gadget = LabeledGadget(
        name=f"chain{n}",
        config=TriangularConfiguration(tuple(triangles)),
        ports={f"t{i}": t for i, t in enumerate(port_triangles, start=1)},
        labels=labels,
        parts=tuple(parts),
    )
    if with_matchings:
        matchings = {
            _matching_key(chosen): chain_matching(gadget, chosen)
            for size in range(0, n + 1, 2)
            for chosen in combinations(range(1, n + 1), size)
        }
        gadget = LabeledGadget(
            name=gadget.name,
            config=gadget.config,
            ports=gadget.ports,
            labels=gadget.labels,
            matchings=matchings,
            parts=gadget.parts,
        )
    logger.debug("gadget.chain", ports=n, triangles=len(triangles))
    return gadget


def _matching_key(chosen: Iterable[int]) -> str:
    return "I={" + ",".join(str(i) for i in chosen) + "}"


def chain_states(n: int, covered: Iterable[int]) -> dict[str, str]:
    """State of every part when the chain itself covers exactly the ports in ``covered``.

    Sweeps left to right tracking whether internal triangle t'_{i-1} still
    waits for a cover. The result is unique; it exists iff n - |covered| is even.
    """
    covered = set(covered)
    if not covered <= set(range(1, n + 1)):
        raise GadgetError(f"covered ports {sorted(covered)} outside 1..{n}", code="usage")
    states = {name: OFF for name in part_names(n)}
    waiting = False
    for i in range(1, n + 1):
        if waiting:
            if i in covered:
                states[f"b{i}"] = ON
            else:
                states[f"c{i - 1}"] = ON
                waiting = False
        elif i in covered:
            states[f"a{i}"] = ON
        else:
            waiting = True
    if waiting:
        raise GadgetError(
            f"no chain state covers {len(covered)} of {n} ports: {n - len(covered)} uncovered ports is odd",
            code="parity",
        )
    return states


def chain_matching(gadget: LabeledGadget, chosen_ports: Iterable[int]) -> frozenset[Triangle]:
    """The unique perfect matching of a closed chain containing exactly ``chosen_ports``."""
    n = len(gadget.ports)
    chosen = set(chosen_ports)
    states = chain_states(n, set(range(1, n + 1)) - chosen)
    matching: set[Triangle] = {gadget.port(f"t{i}") for i in chosen}
    for part in gadget.parts:
        matching |= part.state(states[part.name])
    return frozenset(matching)


def chain(n: int, allocator: VertexAllocator | None = None) -> LabeledGadget:
    allocator = allocator or VertexAllocator()
    ports = [allocator.fresh_triangle() for _ in range(n)] if n > 0 else []
    return build_chain(ports, allocator, with_matchings=True)


@GadgetRegistry.register()
class ChainBuilder(GadgetBuilder):
    name = "chain"
    description = "parity chain C_{t1..tn} with ports t1..tn"
    parameters = ("n",)

    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        return chain(self.int_param("n"), allocator)
