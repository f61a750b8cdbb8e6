from abc import ABC, abstractmethod
from collections.abc import Sequence
from itertools import combinations

import structlog

from algebra import WeightEnumerator
from models import GuardConfig
from topology import TriangularConfiguration, triangle_edges

from .matching import Matching, MatchingError

logger = structlog.get_logger(__name__)


class MatchingStrategy(ABC):
    name: str = "base"

    @abstractmethod
    def search(self, config: TriangularConfiguration) -> list[tuple[int, ...]]:
        """Every perfect matching as a sorted tuple of triangle indices."""
        pass

    def guard(self, guards: GuardConfig) -> int:
        return guards.max_triangles


class BacktrackingStrategy(MatchingStrategy):
    """Exact cover search over edges.

    Always branches on an uncovered edge with the fewest available covering
    triangles (lowest edge index on ties), trying covers in triangle order.
    Runs on an explicit stack, so search depth is not bounded by recursion.
    """

    name = "backtracking"

    def search(self, config: TriangularConfiguration) -> list[tuple[int, ...]]:
        edges = config.edges
        if not edges:
            return [()]
        edge_id = {e: i for i, e in enumerate(edges)}
        tri_edges = [tuple(edge_id[e] for e in triangle_edges(t)) for t in config.triangles]
        edge_tris = [config.triangles_on_edge(e) for e in edges]

        available = [True] * len(config)
        covered = [False] * len(edges)
        count = [len(ts) for ts in edge_tris]
        buckets: list[set[int]] = [set() for _ in range(max(count) + 1)]
        for e, c in enumerate(count):
            buckets[c].add(e)
        chosen: list[int] = []

        def take(t: int) -> list[int]:
            for e in tri_edges[t]:
                covered[e] = True
                buckets[count[e]].discard(e)
            removed = []
            for e in tri_edges[t]:
                for u in edge_tris[e]:
                    if not available[u]:
                        continue
                    available[u] = False
                    removed.append(u)
                    for f in tri_edges[u]:
                        if covered[f]:
                            count[f] -= 1
                        else:
                            buckets[count[f]].discard(f)
                            count[f] -= 1
                            buckets[count[f]].add(f)
            chosen.append(t)
            return removed

        def undo(t: int, removed: list[int]) -> None:
            chosen.pop()
            for u in reversed(removed):
                available[u] = True
                for f in tri_edges[u]:
                    if covered[f]:
                        count[f] += 1
                    else:
                        buckets[count[f]].discard(f)
                        count[f] += 1
                        buckets[count[f]].add(f)
            for e in tri_edges[t]:
                covered[e] = False
                buckets[count[e]].add(e)

        def most_constrained() -> tuple[int, int] | None:
            for c, bucket in enumerate(buckets):
                if bucket:
                    return c, min(bucket)
            return None

        results: list[tuple[int, ...]] = []
        # frame: [candidates, next position, triangle taken, triangles it removed]
        stack: list[list] = []
        while True:
            pick = most_constrained()
            if pick is None:
                results.append(tuple(sorted(chosen)))
            else:
                c, e = pick
                if c > 0:
                    stack.append([[u for u in edge_tris[e] if available[u]], 0, None, None])
            while stack:
                frame = stack[-1]
                if frame[2] is not None:
                    undo(frame[2], frame[3])
                    frame[2] = None
                if frame[1] < len(frame[0]):
                    t = frame[0][frame[1]]
                    frame[1] += 1
                    frame[3] = take(t)
                    frame[2] = t
                    break
                stack.pop()
            else:
                break
        return sorted(results)


class ExhaustiveStrategy(MatchingStrategy):
    """All subsets of |E|/3 triangles; an oracle for small configurations."""

    name = "exhaustive"

    def guard(self, guards: GuardConfig) -> int:
        return guards.naive_max_triangles

    def search(self, config: TriangularConfiguration) -> list[tuple[int, ...]]:
        edges = config.edges
        if len(edges) % 3:
            return []
        edge_id = {e: i for i, e in enumerate(edges)}
        masks = [sum(1 << edge_id[e] for e in triangle_edges(t)) for t in config.triangles]
        full = (1 << len(edges)) - 1
        results = []
        for combo in combinations(range(len(config)), len(edges) // 3):
            union = 0
            for i in combo:
                if union & masks[i]:
                    break
                union |= masks[i]
            else:
                if union == full:
                    results.append(combo)
        return results


class PerfectMatchingSearch:
    STRATEGIES = {
        "backtracking": BacktrackingStrategy,
        "exhaustive": ExhaustiveStrategy,
    }

    def __init__(self, strategy: str = "backtracking", guards: GuardConfig | None = None):
        strategy_cls = self.STRATEGIES.get(strategy)
        if strategy_cls is None:
            raise MatchingError(
                f"unknown search strategy {strategy!r}; choose from {', '.join(self.STRATEGIES)}",
                code="usage",
            )
        self._strategy = strategy_cls()
        self._guards = guards or GuardConfig()

    @property
    def strategy(self) -> str:
        return self._strategy.name

    @classmethod
    def available_strategies(cls) -> list[str]:
        return list(cls.STRATEGIES.keys())

    def enumerate(self, config: TriangularConfiguration) -> list[Matching]:
        limit = self._strategy.guard(self._guards)
        if len(config) > limit:
            raise SearchGuardError(
                f"{len(config)} triangles exceed the {self.strategy} search guard {limit}"
            )
        found = self._strategy.search(config)
        logger.debug("matching.search", strategy=self.strategy, triangles=len(config), found=len(found))
        return [Matching(config, frozenset(key)) for key in found]


def enumerate_perfect_matchings(
    config: TriangularConfiguration,
    strategy: str = "backtracking",
    guards: GuardConfig | None = None,
) -> list[Matching]:
    return PerfectMatchingSearch(strategy, guards).enumerate(config)


def pm_weight_enumerator(
    config: TriangularConfiguration,
    weights: Sequence[int],
    matchings: Sequence[Matching] | None = None,
    search: PerfectMatchingSearch | None = None,
) -> WeightEnumerator:
    """P(x) = Σ over perfect matchings of x^(sum of chosen weights)."""
    if len(weights) != len(config):
        raise MatchingError(f"{len(weights)} weights for {len(config)} triangles", code="dimension")
    if matchings is None:
        matchings = (search or PerfectMatchingSearch()).enumerate(config)
    return WeightEnumerator.from_weights(m.weight(weights) for m in matchings)


class SearchGuardError(MatchingError):
    code = "size"
