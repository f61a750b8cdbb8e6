from cachetools import LRUCache, cached

from topology import VertexAllocator

from ..base import LabeledGadget
from ..registry import GadgetBuilder, GadgetRegistry
from .pyramid import pyramid_with_tunnels


@cached(cache=LRUCache(maxsize=4))
def matching_triangle_prototype() -> LabeledGadget:
    return pyramid_with_tunnels("matching-triangle", ("t1", "t3", "t5"), ("p", "q", "r"))


def matching_triangle(allocator: VertexAllocator | None = None) -> LabeledGadget:
    """T_pqr: the three ports enter a perfect matching all together or not at all."""
    prototype = matching_triangle_prototype()
    return prototype if allocator is None else prototype.instantiate(allocator)


@GadgetRegistry.register()
class MatchingTriangleBuilder(GadgetBuilder):
    name = "matching-triangle"
    description = "matching triangle T_pqr with ports p, q, r"

    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        return matching_triangle(allocator)
