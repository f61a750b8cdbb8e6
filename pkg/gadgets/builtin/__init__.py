from .chain import build_chain, chain, chain_matching, chain_states, part_names
from .disjoint import disjoint_triangles
from .matching_edge import matching_edge
from .matching_triangle import matching_triangle
from .pyramid import CLASS_A, CLASS_B, pyramid
from .sphere import sphere
from .tunnel import closed_tunnel, join, tunnel_band

__all__ = [
    "CLASS_A",
    "CLASS_B",
    "build_chain",
    "chain",
    "chain_matching",
    "chain_states",
    "closed_tunnel",
    "disjoint_triangles",
    "join",
    "matching_edge",
    "matching_triangle",
    "part_names",
    "pyramid",
    "sphere",
    "tunnel_band",
]
