from dataclasses import dataclass, field

import networkx as nx
import structlog

from topology import triangle_edges

from .reduction import MatchingInstance

logger = structlog.get_logger(__name__)


def gadget_graph(instance: MatchingInstance) -> nx.Graph:
    """Triangles of Δ′, linked when they share an edge that is not a port-triangle edge."""
    port_edges = {e for t in instance.port_triangles for e in triangle_edges(t)}
    graph = nx.Graph()
    graph.add_nodes_from(range(len(instance.config)))
    for e in instance.config.edges:
        if e in port_edges:
            continue
        ids = instance.config.triangles_on_edge(e)
        graph.add_edges_from(zip(ids, ids[1:]))
    return graph


@dataclass
class LocalityReport:
    passed: bool
    components: int
    expected: int
    mismatches: list[str] = field(default_factory=list)


def audit_locality(instance: MatchingInstance) -> LocalityReport:
    """Every registry block must be exactly one connected component of the gadget graph."""
    components = [frozenset(c) for c in nx.connected_components(gadget_graph(instance))]
    expected = {
        frozenset(range(entry.start, entry.stop)): label
        for entry, label in [(g, f"triangle {g.source}") for g in instance.triangles]
        + [(c, f"edge {c.source}") for c in instance.chains]
    }
    mismatches = [label for block, label in expected.items() if block not in components]
    report = LocalityReport(
        passed=not mismatches and len(components) == len(expected),
        components=len(components),
        expected=len(expected),
        mismatches=mismatches,
    )
    logger.debug("matching.locality", components=report.components, expected=report.expected)
    return report
