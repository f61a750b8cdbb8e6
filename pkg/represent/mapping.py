from collections.abc import Sequence
from dataclasses import dataclass, field

import structlog

from algebra import (
    BitVector,
    SpanSolver,
    WeightEnumerator,
    degree,
    enumerate_codewords,
    minimal_codewords,
)
from algebra.code import MAX_DIM, coefficients
from topology import SubconfigurationVector, enumerate_cycles

from .representation import Representation, RepresentationError

logger = structlog.get_logger(__name__)


def map_f(
    representation: Representation, c: BitVector, solver: SpanSolver | None = None
) -> SubconfigurationVector:
    """f(c) = χ(△ of the blocks of the basis vectors in c's expansion)."""
    coords = coefficients(representation.code, c, solver)
    result = representation.config.zero_vector()
    for i, bit in enumerate(coords):
        if bit:
            result = result ^ representation.block_vector(i)
    return result


def kernel_solver(representation: Representation) -> SpanSolver:
    """Coordinates of cycles with respect to {f(b_i)}."""
    return SpanSolver(
        [representation.block_vector(i).bits for i in range(representation.d)],
        len(representation.config),
    )


def kernel_degree(representation: Representation, v: SubconfigurationVector, solver: SpanSolver | None = None) -> int:
    solver = solver or kernel_solver(representation)
    coords = solver.coordinates(v.bits)
    if coords is None:
        raise RepresentationError("vector is not in the span of the block cycles", code="membership")
    return sum(coords)


@dataclass
class BijectionReport:
    passed: bool = True
    checks: dict[str, bool] = field(default_factory=dict)
    counterexample: str | None = None

    def fail(self, check: str, detail: str) -> None:
        self.checks[check] = False
        if self.passed:
            self.counterexample = f"{check}: {detail}"
        self.passed = False


def verify_bijection(representation: Representation, max_dim: int = MAX_DIM) -> BijectionReport:
    """f maps C onto the cycle space, injectively, minimal words to minimal cycles."""
    code = representation.code
    report = BijectionReport()
    words = enumerate_codewords(code, max_dim)
    solver = code.solver()
    images = [map_f(representation, c, solver) for c in words]
    kernel = enumerate_cycles(representation.config, max_dim)

    image_set = {v.bits for v in images}
    kernel_set = {v.bits for v in kernel}
    report.checks["onto"] = True
    if image_set != kernel_set:
        stray = sorted(kernel_set ^ image_set, key=lambda b: b.bits)[0]
        report.fail("onto", f"cycle {stray.support()} differs between f(C) and the kernel")
    report.checks["size"] = True
    if len(kernel_set) != len(words):
        report.fail("size", f"|ker| = {len(kernel_set)} but |C| = {len(words)}")
    report.checks["injective"] = True
    if len(image_set) != len(words):
        report.fail("injective", "two codewords share an image")

    report.checks["minimal"] = True
    nonzero_images = [v for v in kernel if v]
    minimal = set(minimal_codewords(code, max_dim))
    for c, image in zip(words, images):
        if c not in minimal:
            continue
        if any(o.bits != image.bits and o.precedes(image) for o in nonzero_images):
            report.fail("minimal", f"minimal codeword {c} maps to a non-minimal cycle")
            break
    logger.info("represent.bijection", passed=report.passed, codewords=len(words))
    return report


def weight_law_violations(
    representation: Representation, max_dim: int = MAX_DIM
) -> list[tuple[BitVector, int, int]]:
    """Codewords with w(f(c)) != w(c) + deg(c)·e, as (c, expected, actual)."""
    if representation.e is None:
        raise RepresentationError("weight law needs a balanced representation", code="unbalanced")
    code = representation.code
    solver = code.solver()
    violations = []
    for c in enumerate_codewords(code, max_dim):
        expected = c.weight + degree(code, c, solver) * representation.e
        actual = map_f(representation, c, solver).weight
        if expected != actual:
            violations.append((c, expected, actual))
    return violations


def kernel_enumerator_via_f(representation: Representation, max_dim: int = MAX_DIM) -> WeightEnumerator:
    solver = representation.code.solver()
    return WeightEnumerator.from_weights(
        map_f(representation, c, solver).weight
        for c in enumerate_codewords(representation.code, max_dim)
    )


def extended_kernel_enumerator(
    representation: Representation, cycles: Sequence[SubconfigurationVector]
) -> list[WeightEnumerator]:
    """W^k_ker for k = 0..d, degree taken against the block cycles."""
    solver = kernel_solver(representation)
    buckets: list[dict[int, int]] = [{} for _ in range(representation.d + 1)]
    for v in cycles:
        k = kernel_degree(representation, v, solver)
        buckets[k][v.weight] = buckets[k].get(v.weight, 0) + 1
    return [WeightEnumerator(bucket) for bucket in buckets]


def uncovered_cycle(
    representation: Representation, cycles: Sequence[SubconfigurationVector]
) -> SubconfigurationVector | None:
    """A nonempty cycle containing no whole block outside the Bⁿ slots, if any."""
    slots = representation.slot_triangles
    cores = [block - slots for block in representation.blocks]
    for v in cycles:
        if not v:
            continue
        chosen = set(v.triangles())
        if not any(core <= chosen for core in cores):
            return v
    return None


@dataclass(frozen=True)
class RecoveredEnumerator:
    enumerator: WeightEnumerator
    blocks: tuple[WeightEnumerator, ...]


def recover_weight_enumerator(
    kernel_enumerator: WeightEnumerator, e: int, n: int, d: int
) -> RecoveredEnumerator:
    """Fold W_ker mod e; the degree-k part of W_ker lives in exponents [k·e, k·e + n]."""
    if e <= n:
        raise RepresentationError(f"exponent e={e} must exceed the code length n={n}", code="unbalanced")
    top = kernel_enumerator.max_exponent
    if top is not None and top > d * e + n:
        raise RepresentationError(
            f"exponent {top} exceeds d·e + n = {d * e + n}; representation is not balanced",
            code="range",
        )
    blocks = tuple(kernel_enumerator.restrict(k * e, k * e + n) for k in range(d + 1))
    tiled = WeightEnumerator()
    for block in blocks:
        tiled = tiled + block
    if tiled != kernel_enumerator:
        raise RepresentationError(
            "kernel enumerator has terms outside every degree window", code="range"
        )
    return RecoveredEnumerator(kernel_enumerator.fold_mod(e), blocks)
