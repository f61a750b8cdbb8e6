from collections.abc import Sequence

from cachetools import LRUCache, cached

from topology import Triangle, TriangularConfiguration, VertexAllocator

from ..base import GadgetError, LabeledGadget
from ..registry import GadgetBuilder, GadgetRegistry
from .tunnel import closed_tunnel_prototype, octahedron_face

PYRAMID_SIGNS = ("+++", "-++", "--+", "+-+", "+--", "++-", "-+-", "---")
CLASS_A = ("t1", "t3", "t5", "t7")
CLASS_B = ("t2", "t4", "t6", "t8")
WEIGHT_FACE = "t2"


@cached(cache=LRUCache(maxsize=4))
def pyramid_prototype() -> LabeledGadget:
    faces = [octahedron_face(signs, (0, 2, 4), (1, 3, 5)) for signs in PYRAMID_SIGNS]
    labels = {f"t{k}": t for k, t in enumerate(faces, start=1)}
    return LabeledGadget(
        name="pyramid",
        config=TriangularConfiguration(tuple(faces)),
        ports={name: labels[name] for name in ("t1", "t3", "t5")},
        labels=labels,
        matchings={
            "A": frozenset(labels[name] for name in CLASS_A),
            "B": frozenset(labels[name] for name in CLASS_B),
        },
    )


def pyramid(allocator: VertexAllocator | None = None) -> LabeledGadget:
    """Octahedron whose faces t1..t8 alternate between the two colour classes."""
    prototype = pyramid_prototype()
    return prototype if allocator is None else prototype.instantiate(allocator)


def pyramid_with_tunnels(name: str, sites: Sequence[str], port_names: Sequence[str]) -> LabeledGadget:
    """Glue a closed tunnel onto each pyramid face in ``sites`` and delete the glued faces.

    The far end of the k-th tunnel becomes port ``port_names[k]``. The result has
    exactly two perfect matchings: N1 (class B plus the port-side half of every
    band, no port) and N0 (every port, the pyramid-side half of every band and
    the rest of class A).
    """
    if len(sites) != len(port_names) or not set(sites) <= set(CLASS_A):
        raise GadgetError(f"{name}: tunnels can only sit on class-A faces, one per port")
    allocator = VertexAllocator()
    base = pyramid_prototype().instantiate(allocator)
    removed = {base.label(site) for site in sites}
    triangles: list[Triangle] = [t for t in base.config.triangles if t not in removed]
    labels = {k: t for k, t in base.labels.items() if t not in removed}
    ports: dict[str, Triangle] = {}
    n0 = {base.label(face) for face in CLASS_A if face not in sites}
    n1 = {base.label(face) for face in CLASS_B}
    for site, port in zip(sites, port_names):
        tunnel = closed_tunnel_prototype().instantiate(allocator, {"t1": base.label(site)})
        band = [tunnel.label(f"s{k}") for k in range(1, 7)]
        triangles.extend(band)
        triangles.append(tunnel.label("t2"))
        ports[port] = tunnel.label("t2")
        labels[port] = tunnel.label("t2")
        labels.update({f"{port}.s{k}": t for k, t in enumerate(band, start=1)})
        n0.update(band[:3])
        n0.add(tunnel.label("t2"))
        n1.update(band[3:])
    labels["weight"] = base.label(WEIGHT_FACE)
    return LabeledGadget(
        name=name,
        config=TriangularConfiguration(tuple(triangles)),
        ports=ports,
        labels=labels,
        matchings={"N0": frozenset(n0), "N1": frozenset(n1)},
    )


@GadgetRegistry.register()
class PyramidBuilder(GadgetBuilder):
    name = "pyramid"
    description = "pyramid P: octahedron with faces t1..t8 in two colour classes"

    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        return pyramid(allocator)
