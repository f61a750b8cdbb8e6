from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from core.errors import ReductionToolError
from topology import Edge, Triangle, TriangularConfiguration, triangle_edges


@dataclass(frozen=True)
class Matching:
    """Triangles of ``host`` pairwise sharing no edge."""

    host: TriangularConfiguration
    chosen: frozenset[int]

    def __post_init__(self) -> None:
        chosen = frozenset(self.chosen)
        object.__setattr__(self, "chosen", chosen)
        seen: dict[Edge, int] = {}
        for i in sorted(chosen):
            if not 0 <= i < len(self.host):
                raise MatchingError(f"triangle index {i} outside the host", code="index")
            for e in triangle_edges(self.host.triangles[i]):
                if e in seen:
                    raise MatchingError(
                        f"triangles {seen[e]} and {i} share edge {e}", code="not-a-matching"
                    )
                seen[e] = i

    @classmethod
    def from_triangles(cls, host: TriangularConfiguration, triangles: Iterable[Triangle]) -> "Matching":
        return cls(host, frozenset(host.index_of(t) for t in triangles))

    def __len__(self) -> int:
        return len(self.chosen)

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.chosen))

    def triangles(self) -> list[Triangle]:
        return [self.host.triangles[i] for i in self.key()]

    def covered_edges(self) -> set[Edge]:
        return {e for t in self.triangles() for e in triangle_edges(t)}

    def defect(self) -> set[Edge]:
        return defect(self)

    def is_perfect(self) -> bool:
        return len(self.chosen) * 3 == len(self.host.edges)

    def weight(self, weights: Sequence[int]) -> int:
        return sum(weights[i] for i in self.chosen)


def defect(matching: Matching) -> set[Edge]:
    """Edges of the host covered by no chosen triangle."""
    return set(matching.host.edges) - matching.covered_edges()


def is_matching(host: TriangularConfiguration, chosen: Iterable[int]) -> bool:
    try:
        Matching(host, frozenset(chosen))
    except MatchingError:
        return False
    return True


class MatchingError(ReductionToolError):
    code = "matching"
