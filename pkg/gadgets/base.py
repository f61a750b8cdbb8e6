from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from core.errors import ReductionToolError
from topology import Triangle, TriangularConfiguration, VertexAllocator, normalize_triangle


def _relabel(t: Triangle, mapping: Mapping[int, int]) -> Triangle:
    return normalize_triangle(mapping.get(v, v) for v in t)


@dataclass(frozen=True)
class GadgetPart:
    """A sub-gadget with exactly two local states, each a set of its triangles."""

    name: str
    states: Mapping[str, frozenset[Triangle]]

    def state(self, name: str) -> frozenset[Triangle]:
        try:
            return self.states[name]
        except KeyError:
            raise GadgetError(f"part {self.name} has no state {name!r}") from None

    def relabeled(self, mapping: Mapping[int, int]) -> "GadgetPart":
        return GadgetPart(
            self.name,
            {k: frozenset(_relabel(t, mapping) for t in v) for k, v in self.states.items()},
        )

    def without(self, dropped: set[Triangle]) -> "GadgetPart":
        return GadgetPart(self.name, {k: v - dropped for k, v in self.states.items()})


@dataclass(frozen=True)
class LabeledGadget:
    """A configuration with named port triangles, face labels and declared matchings.

    When ``hollow_ports`` is set the port triangles are absent from ``config``:
    only their vertices and edges survive through the neighbouring faces.
    """

    name: str
    config: TriangularConfiguration
    ports: Mapping[str, Triangle] = field(default_factory=dict)
    labels: Mapping[str, Triangle] = field(default_factory=dict)
    matchings: Mapping[str, frozenset[Triangle]] = field(default_factory=dict)
    parts: tuple[GadgetPart, ...] = ()
    hollow_ports: bool = False

    def __post_init__(self) -> None:
        present = set(self.config.triangles)
        if not self.hollow_ports:
            for port, t in self.ports.items():
                if t not in present:
                    raise GadgetError(f"{self.name}: port {port} {t} is not a triangle of the gadget")
        for key, chosen in self.matchings.items():
            stray = chosen - present
            if stray:
                raise GadgetError(f"{self.name}: matching {key} uses foreign triangle {min(stray)}")

    def port(self, name: str) -> Triangle:
        try:
            return self.ports[name]
        except KeyError:
            raise GadgetError(f"{self.name} has no port {name!r}") from None

    def label(self, name: str) -> Triangle:
        try:
            return self.labels[name]
        except KeyError:
            raise GadgetError(f"{self.name} has no face labelled {name!r}") from None

    def matching(self, name: str) -> frozenset[Triangle]:
        try:
            return self.matchings[name]
        except KeyError:
            raise GadgetError(f"{self.name} declares no matching {name!r}") from None

    def part(self, name: str) -> GadgetPart:
        for part in self.parts:
            if part.name == name:
                return part
        raise GadgetError(f"{self.name} has no part {name!r}")

    def indices(self, triangles: Iterable[Triangle]) -> tuple[int, ...]:
        return tuple(sorted(self.config.index_of(t) for t in triangles))

    def relabeled(self, mapping: Mapping[int, int]) -> "LabeledGadget":
        return LabeledGadget(
            name=self.name,
            config=self.config.relabeled(mapping),
            ports={k: _relabel(t, mapping) for k, t in self.ports.items()},
            labels={k: _relabel(t, mapping) for k, t in self.labels.items()},
            matchings={
                k: frozenset(_relabel(t, mapping) for t in v) for k, v in self.matchings.items()
            },
            parts=tuple(p.relabeled(mapping) for p in self.parts),
            hollow_ports=self.hollow_ports,
        )

    def instantiate(
        self,
        allocator: VertexAllocator,
        identify: Mapping[str, Triangle] | None = None,
    ) -> "LabeledGadget":
        """Copy with fresh vertex ids, except that each port in ``identify`` is
        glued onto the given triangle (sorted vertex to sorted vertex)."""
        mapping: dict[int, int] = {}
        for port, target in (identify or {}).items():
            source = self.port(port)
            for u, v in zip(source, normalize_triangle(target)):
                if mapping.get(u, v) != v:
                    raise GadgetError(f"{self.name}: port {port} conflicts with another identification")
                mapping[u] = v
        vertices = set(self.config.vertices)
        for t in self.ports.values():
            vertices.update(t)
        for v in sorted(vertices):
            if v not in mapping:
                mapping[v] = allocator.fresh_vertex()
        return self.relabeled(mapping)

    def opened(self) -> "LabeledGadget":
        """The gadget with its port triangles removed."""
        if self.hollow_ports:
            return self
        dropped = set(self.ports.values())
        return LabeledGadget(
            name=self.name,
            config=self.config.without(dropped),
            ports=dict(self.ports),
            labels={k: t for k, t in self.labels.items() if t not in dropped},
            matchings={k: v - dropped for k, v in self.matchings.items()},
            parts=tuple(p.without(dropped) for p in self.parts),
            hollow_ports=True,
        )


class GadgetError(ReductionToolError):
    code = "gadget"
