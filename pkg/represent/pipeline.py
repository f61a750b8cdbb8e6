from dataclasses import dataclass

import structlog

from algebra import BinaryCode, WeightEnumerator, doubled, is_even
from algebra.code import MAX_DIM, CodeSizeError
from topology import weight_enumerator_cycles

from .balance import balance
from .mapping import recover_weight_enumerator
from .representation import Representation, represent_code

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class PipelineResult:
    code: BinaryCode
    representation: Representation
    doubled: bool
    kernel_enumerator: WeightEnumerator
    folded: WeightEnumerator
    enumerator: WeightEnumerator

    @property
    def e(self) -> int:
        assert self.representation.e is not None
        return self.representation.e


def build_balanced_representation(code: BinaryCode) -> tuple[Representation, bool]:
    """Balanced Δ^C_B of ``code``, or of its doubling when some codeword has odd weight."""
    working = code if is_even(code) else doubled(code)
    return balance(represent_code(working)), working is not code


def pipeline(code: BinaryCode, max_dim: int = MAX_DIM) -> PipelineResult:
    """W_C recovered from the cycle space of a balanced representation.

    Odd codes run on {(c|c)}; the folded enumerator is then W_C(x²) and its
    exponents are halved.
    """
    if code.dimension > max_dim:
        raise CodeSizeError(f"dimension {code.dimension} exceeds the enumeration guard {max_dim}")
    representation, was_doubled = build_balanced_representation(code)
    working = representation.code
    kernel = weight_enumerator_cycles(representation.config, max_dim)
    folded = recover_weight_enumerator(
        kernel, representation.e, working.length, working.dimension
    ).enumerator
    enumerator = folded.halve_exponents() if was_doubled else folded
    logger.info(
        "represent.pipeline",
        n=code.length,
        d=code.dimension,
        doubled=was_doubled,
        e=representation.e,
        terms=len(enumerator.terms),
    )
    return PipelineResult(
        code=code,
        representation=representation,
        doubled=was_doubled,
        kernel_enumerator=kernel,
        folded=folded,
        enumerator=enumerator,
    )
