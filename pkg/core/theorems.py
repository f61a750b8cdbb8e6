import structlog

from algebra import extended_weight_enumerator, weight_enumerator
from matching import (
    PerfectMatchingSearch,
    audit_locality,
    cycle_for_matching,
    matching_for_cycle,
    pm_weight_enumerator,
    reduce,
)
from represent import (
    PipelineResult,
    extended_kernel_enumerator,
    pipeline,
    recover_weight_enumerator,
    uncovered_cycle,
    verify_bijection,
    weight_law_violations,
)
from topology import enumerate_cycles, weight_enumerator_cycles

from .checks import Check, CheckRegistry, CheckResult, VerificationContext

logger = structlog.get_logger(__name__)


def pipeline_result(ctx: VerificationContext) -> PipelineResult:
    return ctx.memo("pipeline", lambda: pipeline(ctx.code, ctx.guards.max_dim))


def kernel_cycles(ctx: VerificationContext):
    rep = pipeline_result(ctx).representation
    return ctx.memo("cycles", lambda: enumerate_cycles(rep.config, ctx.guards.max_dim))


@CheckRegistry.register()
class WeightPolynomialCheck(Check):
    name = "weight-polynomial"
    priority = 100
    statement = "folding the cycle-space enumerator mod e gives W_C(x), via W_C(x^2) for odd codes"

    def run(self, ctx: VerificationContext) -> CheckResult:
        result = pipeline_result(ctx)
        direct = weight_enumerator(ctx.code, ctx.guards.max_dim)
        if result.enumerator != direct:
            return self.failed(f"pipeline gives {result.enumerator}, enumeration gives {direct}")
        return self.passed(f"e={result.e} doubled={int(result.doubled)}")


@CheckRegistry.register()
class CycleBijectionCheck(Check):
    name = "cycle-bijection"
    priority = 90
    statement = "f is a bijection from C onto the cycle space sending minimal words to minimal cycles"

    def run(self, ctx: VerificationContext) -> CheckResult:
        report = verify_bijection(pipeline_result(ctx).representation, ctx.guards.max_dim)
        if not report.passed:
            return self.failed(report.counterexample or "bijection check failed")
        return self.passed()


@CheckRegistry.register()
class WeightLawCheck(Check):
    name = "weight-law"
    priority = 80
    statement = "w(f(c)) = w(c) + deg(c)·e for every codeword"

    def run(self, ctx: VerificationContext) -> CheckResult:
        violations = weight_law_violations(pipeline_result(ctx).representation, ctx.guards.max_dim)
        if violations:
            c, expected, actual = violations[0]
            return self.failed(f"codeword {c}: expected weight {expected}, got {actual}")
        return self.passed()


@CheckRegistry.register()
class ExtendedPolynomialCheck(Check):
    name = "extended-polynomial"
    priority = 70
    statement = "W^k_ker(x) = W^k_C(x)·x^(k·e), each in the window [k·e, k·e + n]"

    def run(self, ctx: VerificationContext) -> CheckResult:
        result = pipeline_result(ctx)
        rep = result.representation
        e = result.e
        by_degree = extended_kernel_enumerator(rep, kernel_cycles(ctx))
        expected = extended_weight_enumerator(rep.code, ctx.guards.max_dim)
        windows = recover_weight_enumerator(result.kernel_enumerator, e, rep.n, rep.d).blocks
        for k, (actual, code_part, window) in enumerate(zip(by_degree, expected, windows)):
            if actual != code_part.shift(k * e):
                return self.failed(f"degree {k}: kernel part {actual}, code part shifted {code_part.shift(k * e)}")
            if actual != window:
                return self.failed(f"degree {k}: window [{k * e}, {k * e + rep.n}] holds {window}, expected {actual}")
        return self.passed()


@CheckRegistry.register()
class BlockCoverCheck(Check):
    name = "blocks-in-cycles"
    priority = 60
    statement = "every nonempty cycle contains a whole block outside the Bⁿ slots; blocks are balanced"

    def run(self, ctx: VerificationContext) -> CheckResult:
        rep = pipeline_result(ctx).representation
        if not rep.is_balanced:
            return self.failed(f"block excesses {rep.excesses()} differ from e={rep.e}")
        bad = uncovered_cycle(rep, kernel_cycles(ctx))
        if bad is not None:
            return self.failed(f"cycle on triangles {bad.indices()} contains no block")
        return self.passed()


@CheckRegistry.register()
class ExponentBoundCheck(Check):
    name = "exponent-bound"
    priority = 55
    statement = "n < e <= 6n + 2 for the (even) code that was represented"

    def run(self, ctx: VerificationContext) -> CheckResult:
        result = pipeline_result(ctx)
        n = result.representation.n
        if not n < result.e <= 6 * n + 2:
            return self.failed(f"e={result.e} outside ({n}, {6 * n + 2}]")
        return self.passed(f"n={n} e={result.e}")


@CheckRegistry.register()
class MatchingBijectionCheck(Check):
    name = "matching-bijection"
    priority = 50
    statement = "perfect matchings of Δ′ correspond to cycles of Δ, with W_Δ(x) = P_Δ′(x)"

    def run(self, ctx: VerificationContext) -> CheckResult:
        source = pipeline_result(ctx).representation.config
        instance = reduce(source)
        if len(instance.config) > ctx.guards.max_triangles:
            return self.skipped(
                f"Δ′ has {len(instance.config)} triangles, over the guard {ctx.guards.max_triangles}"
            )
        search = PerfectMatchingSearch(ctx.search.strategy.value, ctx.guards)
        matchings = search.enumerate(instance.config)
        cycles = kernel_cycles(ctx)
        if len(matchings) != len(cycles):
            return self.failed(f"{len(matchings)} perfect matchings but {len(cycles)} cycles")
        for m in matchings:
            back = matching_for_cycle(instance, cycle_for_matching(instance, m))
            if back.chosen != m.chosen:
                return self.failed(f"matching {m.key()[:8]}... does not round-trip")
        for v in cycles:
            m = matching_for_cycle(instance, v)
            if not m.is_perfect():
                return self.failed(f"M_C of cycle {v.indices()} is not perfect")
            if m.weight(instance.weights) != v.weight:
                return self.failed(f"w(M_C) = {m.weight(instance.weights)} but |C| = {v.weight}")
        p = pm_weight_enumerator(instance.config, instance.weights, matchings)
        w = weight_enumerator_cycles(source, ctx.guards.max_dim)
        if p != w:
            return self.failed(f"P_Δ′ = {p} but W_Δ = {w}")
        locality = audit_locality(instance)
        if not locality.passed:
            return self.failed(f"gadget blocks are not separate components: {locality.mismatches[:3]}")
        logger.info("verify.matching", triangles=len(instance.config), matchings=len(matchings))
        return self.passed(f"{len(matchings)} perfect matchings on {len(instance.config)} triangles")
