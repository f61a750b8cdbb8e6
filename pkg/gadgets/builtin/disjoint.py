from topology import TriangularConfiguration, VertexAllocator

from ..base import GadgetError, LabeledGadget
from ..registry import GadgetBuilder, GadgetRegistry


def disjoint_triangles(n: int, allocator: VertexAllocator | None = None) -> LabeledGadget:
    """Bⁿ: n pairwise vertex-disjoint triangles, ports B1..Bn."""
    if n < 0:
        raise GadgetError(f"number of triangles must be nonnegative, got {n}", code="usage")
    allocator = allocator or VertexAllocator()
    slots = [allocator.fresh_triangle() for _ in range(n)]
    ports = {f"B{j}": t for j, t in enumerate(slots, start=1)}
    return LabeledGadget(
        name=f"B{n}",
        config=TriangularConfiguration(tuple(slots)),
        ports=ports,
        labels=dict(ports),
    )


@GadgetRegistry.register()
class DisjointTrianglesBuilder(GadgetBuilder):
    name = "disjoint"
    description = "n pairwise disjoint triangles"
    parameters = ("n",)

    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        return disjoint_triangles(self.int_param("n"), allocator)
