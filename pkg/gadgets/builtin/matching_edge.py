from cachetools import LRUCache, cached

from topology import VertexAllocator

from ..base import LabeledGadget
from ..registry import GadgetBuilder, GadgetRegistry
from .pyramid import pyramid_with_tunnels


@cached(cache=LRUCache(maxsize=4))
def matching_edge_prototype() -> LabeledGadget:
    return pyramid_with_tunnels("matching-edge", ("t1", "t3"), ("p", "q"))


def matching_edge(allocator: VertexAllocator | None = None) -> LabeledGadget:
    """E_pq: either both ports are in a perfect matching or neither is."""
    prototype = matching_edge_prototype()
    return prototype if allocator is None else prototype.instantiate(allocator)


@GadgetRegistry.register()
class MatchingEdgeBuilder(GadgetBuilder):
    name = "matching-edge"
    description = "matching edge E_pq with ports p, q"

    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        return matching_edge(allocator)
