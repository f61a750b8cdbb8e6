from .base import GadgetError, GadgetPart, LabeledGadget
from .registry import GadgetBuilder, GadgetRegistry
from .builtin import (
    build_chain,
    chain,
    chain_matching,
    chain_states,
    closed_tunnel,
    disjoint_triangles,
    join,
    matching_edge,
    matching_triangle,
    pyramid,
    sphere,
    tunnel_band,
)

__all__ = [
    "GadgetBuilder",
    "GadgetError",
    "GadgetPart",
    "GadgetRegistry",
    "LabeledGadget",
    "build_chain",
    "chain",
    "chain_matching",
    "chain_states",
    "closed_tunnel",
    "disjoint_triangles",
    "join",
    "matching_edge",
    "matching_triangle",
    "pyramid",
    "sphere",
    "tunnel_band",
]
