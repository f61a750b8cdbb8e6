from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from core.errors import ReductionToolError


@dataclass(frozen=True)
class WeightEnumerator:
    """Sparse polynomial sum a_i x^i; ``terms`` maps exponent (weight) to count."""

    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[int, int] = {}
        for exponent, coefficient in sorted(self.terms.items()):
            if exponent < 0:
                raise EnumeratorError(f"negative exponent {exponent}")
            if coefficient < 0:
                raise EnumeratorError(f"negative coefficient {coefficient} at x^{exponent}")
            if coefficient:
                cleaned[int(exponent)] = int(coefficient)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_weights(cls, weights: Iterable[int]) -> "WeightEnumerator":
        counts: dict[int, int] = {}
        for weight in weights:
            counts[weight] = counts.get(weight, 0) + 1
        return cls(counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        merged = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            merged[exponent] = merged.get(exponent, 0) + coefficient
        return WeightEnumerator(merged)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exponent: int) -> int:
        return self.terms.get(exponent, 0)

    def items(self) -> list[tuple[int, int]]:
        return list(self.terms.items())

    def total(self) -> int:
        return sum(self.terms.values())

    @property
    def max_exponent(self) -> int | None:
        return max(self.terms) if self.terms else None

    def add_term(self, weight: int) -> "WeightEnumerator":
        merged = dict(self.terms)
        merged[weight] = merged.get(weight, 0) + 1
        return WeightEnumerator(merged)

    def fold_mod(self, e: int) -> "WeightEnumerator":
        if e < 1:
            raise EnumeratorError(f"modulus must be positive, got {e}")
        folded: dict[int, int] = {}
        for exponent, coefficient in self.terms.items():
            folded[exponent % e] = folded.get(exponent % e, 0) + coefficient
        return WeightEnumerator(folded)

    def halve_exponents(self) -> "WeightEnumerator":
        odd = [exponent for exponent in self.terms if exponent % 2]
        if odd:
            raise EnumeratorError(
                f"x^{odd[0]} has an odd exponent; not a polynomial in x^2", code="odd-exponent"
            )
        return WeightEnumerator({exponent // 2: c for exponent, c in self.terms.items()})

    def double_exponents(self) -> "WeightEnumerator":
        return WeightEnumerator({2 * exponent: c for exponent, c in self.terms.items()})

    def shift(self, k: int) -> "WeightEnumerator":
        return WeightEnumerator({exponent + k: c for exponent, c in self.terms.items()})

    def restrict(self, low: int, high: int) -> "WeightEnumerator":
        return WeightEnumerator(
            {exponent: c for exponent, c in self.terms.items() if low <= exponent <= high}
        )

    def to_text(self) -> str:
        return "".join(f"{exponent} {coefficient}\n" for exponent, coefficient in self.terms.items())

    @classmethod
    def from_text(cls, text: str) -> "WeightEnumerator":
        terms: dict[int, int] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise EnumeratorError(
                    f"line {lineno}: expected 'exponent coefficient', got {raw!r}", code="format"
                )
            exponent, coefficient = int(parts[0]), int(parts[1])
            if exponent in terms:
                raise EnumeratorError(f"line {lineno}: duplicate exponent {exponent}", code="format")
            terms[exponent] = coefficient
        return cls(terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}" if e == 0 else f"{c}x^{e}" for e, c in self.terms.items()
        )


def split_by_degree(
    weights_with_degrees: Iterable[tuple[int, int]], max_degree: int | None = None
) -> list[WeightEnumerator]:
    """Extended enumerators: entry ``k`` collects x^w for every object of degree k."""
    buckets: dict[int, dict[int, int]] = {}
    for weight, degree in weights_with_degrees:
        if degree < 0:
            raise EnumeratorError(f"negative degree {degree}")
        bucket = buckets.setdefault(degree, {})
        bucket[weight] = bucket.get(weight, 0) + 1
    top = max(buckets, default=0)
    if max_degree is not None:
        if top > max_degree:
            raise EnumeratorError(f"degree {top} exceeds {max_degree}")
        top = max_degree
    return [WeightEnumerator(buckets.get(k, {})) for k in range(top + 1)]


def total_enumerator(parts: Iterable[WeightEnumerator]) -> WeightEnumerator:
    result = WeightEnumerator()
    for part in parts:
        result = result + part
    return result


class EnumeratorError(ReductionToolError):
    code = "enumerator"
