import structlog

from topology import Triangle, TriangularConfiguration, normalize_triangle, subdivide

from .representation import Representation, RepresentationError

logger = structlog.get_logger(__name__)


def next_even_above(n: int) -> int:
    return n + 2 if n % 2 == 0 else n + 1


def block_excess_parities(representation: Representation) -> list[int]:
    return [k % 2 for k in representation.excesses()]


def subdivision_target(block: frozenset[Triangle], slots: frozenset[Triangle]) -> Triangle:
    """Smallest block triangle away from every Bⁿ slot, else the smallest non-slot one."""
    slot_vertices = {v for t in slots for v in t}
    candidates = sorted(t for t in block if t not in slots)
    if not candidates:
        raise RepresentationError("block has no triangle outside the Bⁿ slots")
    for t in candidates:
        if not slot_vertices.intersection(t):
            return t
    return candidates[0]


def balance(representation: Representation) -> Representation:
    """Subdivide block triangles until every k_i equals e = max(n', k_1, ..., k_d).

    n' is the smallest even integer above n. Each subdivision raises one k_i by 2.
    """
    ks = representation.excesses()
    if len({k % 2 for k in ks}) > 1:
        raise RepresentationError(
            f"block excesses {ks} have mixed parity; the code is not even", code="parity"
        )
    e = max([next_even_above(representation.n), *ks])
    if ks and (e - ks[0]) % 2:
        raise RepresentationError(f"excesses {ks} cannot reach the even exponent {e}", code="parity")

    config: TriangularConfiguration = representation.config
    blocks = [set(block) for block in representation.blocks]
    slots = representation.slot_triangles
    steps = 0
    for i, block in enumerate(blocks):
        while len(block) - representation.code.basis[i].weight < e:
            target = subdivision_target(frozenset(block), slots)
            v = config.max_vertex + 1
            a, b, c = target
            config = subdivide(config, target, v)
            block.discard(target)
            block.update(normalize_triangle(t) for t in ((a, b, v), (b, c, v), (a, c, v)))
            steps += 1

    balanced = Representation(
        code=representation.code,
        m=representation.m,
        config=config,
        slots=dict(representation.slots),
        blocks=tuple(frozenset(block) for block in blocks),
        e=e,
    )
    logger.info("represent.balanced", e=e, subdivisions=steps, triangles=len(config))
    return balanced
