from .allocator import VertexAllocator
from .configuration import (
    ConfigurationError,
    CycleGuardError,
    Edge,
    SubconfigurationVector,
    Triangle,
    TriangularConfiguration,
    cycle_space,
    cycle_space_dimension,
    difference,
    enumerate_cycles,
    from_triangles,
    incidence_matrix,
    intersection,
    is_circuit,
    is_cycle,
    normalize_triangle,
    pairwise_vertex_disjoint,
    subdivide,
    symmetric_difference,
    triangle_edges,
    union,
    union_all,
    weight_enumerator_cycles,
)

__all__ = [
    "ConfigurationError",
    "CycleGuardError",
    "Edge",
    "SubconfigurationVector",
    "Triangle",
    "TriangularConfiguration",
    "VertexAllocator",
    "cycle_space",
    "cycle_space_dimension",
    "difference",
    "enumerate_cycles",
    "from_triangles",
    "incidence_matrix",
    "intersection",
    "is_circuit",
    "is_cycle",
    "normalize_triangle",
    "pairwise_vertex_disjoint",
    "subdivide",
    "symmetric_difference",
    "triangle_edges",
    "union",
    "union_all",
    "weight_enumerator_cycles",
]
