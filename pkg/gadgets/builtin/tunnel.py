from collections.abc import Sequence

from cachetools import LRUCache, cached

from topology import (
    Triangle,
    TriangularConfiguration,
    VertexAllocator,
    normalize_triangle,
    union,
)

from ..base import GadgetError, LabeledGadget
from ..registry import GadgetBuilder, GadgetRegistry

# Octahedron faces as sign patterns: "+" at position k picks the k-th vertex of
# the first end triangle, "-" the k-th vertex of the second. Faces one sign away
# from each other share an edge.
BAND_SIGNS = ("-++", "+-+", "++-", "+--", "-+-", "--+")


def octahedron_face(signs: str, plus: Sequence[int], minus: Sequence[int]) -> Triangle:
    return normalize_triangle(plus[k] if s == "+" else minus[k] for k, s in enumerate(signs))


def tunnel_band(t1: Sequence[int], t2: Sequence[int]) -> list[Triangle]:
    """The six side faces s1..s6 of the octahedron spanned by two disjoint triangles.

    Sorted vertices are paired as antipodes. s1..s3 each share an edge with
    ``t1``; s4..s6 each share an edge with ``t2``.
    """
    a, b = normalize_triangle(t1), normalize_triangle(t2)
    if set(a) & set(b):
        raise GadgetError(f"cannot build a tunnel between {a} and {b}: they share a vertex")
    return [octahedron_face(signs, a, b) for signs in BAND_SIGNS]


def join(config: TriangularConfiguration, t1: Sequence[int], t2: Sequence[int]) -> TriangularConfiguration:
    """Add the open tunnel between two vertex-disjoint triangles of ``config``."""
    for t in (t1, t2):
        if tuple(sorted(t)) not in config:
            raise GadgetError(f"cannot join at {tuple(sorted(t))}: not a triangle of the configuration")
    band = TriangularConfiguration(tuple(tunnel_band(t1, t2)))
    return union(config, band)


@cached(cache=LRUCache(maxsize=4))
def closed_tunnel_prototype() -> LabeledGadget:
    t1, t2 = (0, 1, 2), (3, 4, 5)
    band = tunnel_band(t1, t2)
    labels = {"t1": t1, "t2": t2}
    labels.update({f"s{k}": t for k, t in enumerate(band, start=1)})
    return LabeledGadget(
        name="tunnel",
        config=TriangularConfiguration((t1, *band, t2)),
        ports={"t1": t1, "t2": t2},
        labels=labels,
        matchings={
            "Nt1": frozenset({t1, *band[3:]}),
            "Nt2": frozenset({t2, *band[:3]}),
        },
    )


def closed_tunnel(allocator: VertexAllocator | None = None) -> LabeledGadget:
    """Octahedron with antipodal ports t1, t2 and its two perfect matchings."""
    prototype = closed_tunnel_prototype()
    return prototype if allocator is None else prototype.instantiate(allocator)


@GadgetRegistry.register()
class ClosedTunnelBuilder(GadgetBuilder):
    name = "tunnel"
    description = "closed tunnel (octahedron with antipodal ports t1, t2)"

    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        return closed_tunnel(allocator)
