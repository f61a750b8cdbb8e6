from itertools import combinations

from cachetools import LRUCache, cached

from topology import TriangularConfiguration, VertexAllocator

from ..base import GadgetError, LabeledGadget
from ..registry import GadgetBuilder, GadgetRegistry


@cached(cache=LRUCache(maxsize=64))
def sphere_prototype(m: int) -> LabeledGadget:
    if m < 4 or m % 2:
        raise GadgetError(f"sphere needs an even number of triangles >= 4, got {m}", code="usage")
    if m == 4:
        faces = list(combinations(range(4), 3))
    else:
        k = m // 2
        top, bottom = k, k + 1
        faces = [(i, (i + 1) % k, top) for i in range(k)]
        faces += [(i, (i + 1) % k, bottom) for i in range(k)]
    config = TriangularConfiguration.from_triangles(faces)
    ports = {f"S{j}": t for j, t in enumerate(config.triangles, start=1)}
    return LabeledGadget(name=f"S{m}", config=config, ports=ports, labels=dict(ports))


def sphere(m: int, allocator: VertexAllocator | None = None) -> LabeledGadget:
    """S^m: tetrahedron for m = 4, otherwise the bipyramid over the (m/2)-gon.

    Faces S1..Sm are listed top cap first, each cap going around the equator.
    """
    prototype = sphere_prototype(m)
    if allocator is None:
        return prototype
    return prototype.instantiate(allocator)


@GadgetRegistry.register()
class SphereBuilder(GadgetBuilder):
    name = "sphere"
    description = "triangulated 2-sphere with m triangles"
    parameters = ("m",)

    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        return sphere(self.int_param("m"), allocator)
