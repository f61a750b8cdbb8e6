from .balance import balance, block_excess_parities, next_even_above, subdivision_target
from .mapping import (
    BijectionReport,
    RecoveredEnumerator,
    extended_kernel_enumerator,
    kernel_degree,
    kernel_enumerator_via_f,
    map_f,
    recover_weight_enumerator,
    uncovered_cycle,
    verify_bijection,
    weight_law_violations,
)
from .pipeline import PipelineResult, build_balanced_representation, pipeline
from .representation import (
    Representation,
    RepresentationError,
    represent_basis_vector,
    represent_code,
    sphere_size,
)

__all__ = [
    "BijectionReport",
    "PipelineResult",
    "RecoveredEnumerator",
    "Representation",
    "RepresentationError",
    "balance",
    "block_excess_parities",
    "build_balanced_representation",
    "extended_kernel_enumerator",
    "kernel_degree",
    "kernel_enumerator_via_f",
    "map_f",
    "next_even_above",
    "pipeline",
    "recover_weight_enumerator",
    "represent_basis_vector",
    "represent_code",
    "sphere_size",
    "subdivision_target",
    "uncovered_cycle",
    "verify_bijection",
    "weight_law_violations",
]
