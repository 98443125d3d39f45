"""
Unit tests for the WLP deciders.

Covers:
- the independent-set search and the block form of the determinant method
- the kernel-quotient algorithm, its trace and quotient passes
- the pencil oracle and the method router
- has_wlp over whole modules, witnesses, caveats and debug cross-checks
- decreasing-submodule certificates and the direct-sum rule
"""

import logging

import pytest

from conftest import load_fixture
from wlpkit.bipoly import parse_ideal
from wlpkit.exceptions import (
    DeterminantNotApplicableError,
    FieldMismatchError,
    MethodDisagreementError,
    PreconditionError,
    UnknownMethodError,
)
from wlpkit.field import FieldSpec
from wlpkit.linalg import UniPoly
from wlpkit.module import cyclic, degree_pair, direct_sum, shift
from wlpkit.wlp import (
    Behavior,
    DeciderRouter,
    StepOutcome,
    TraceKind,
    WlpReport,
    algorithm_step,
    block_form,
    check_degree_pair_algorithm,
    debug_from_env,
    decreasing_submodule_certificate,
    degree1_generator_obstruction,
    determinant_method,
    direct_sum_wlp_analysis,
    find_witness,
    first_nonroot,
    gamma_survey,
    has_wlp,
    hilbert_behavior,
    lemma1_search,
    mixed_candidates,
    pencil_oracle,
    router,
    run_algorithm,
    split_assignment,
    verify_witness,
    witness_bound,
)


def matrix_text(rows):
    return [[str(v) for v in row] for row in rows]


class TestLemma1Search:
    """Test the search for an independent set z_j e_j."""

    def test_square_pair_assignment(self):
        """Test the first independent assignment is (x, y, y)."""
        result = lemma1_search(load_fixture("section2"))
        assert result.found
        assert result.assignment == ("x", "y", "y")
        assert str(result) == "(x,y,y)"

    def test_no_assignment(self):
        """Test a pair whose vectors never span."""
        result = lemma1_search(load_fixture("example1_1"))
        assert not result.found
        assert str(result) == "none"

    def test_more_generators_than_targets(self):
        """Test h_0 > h_1 cannot carry an independent set."""
        pair = degree_pair(cyclic(parse_ideal("(x^2, y^2)")), 1)
        assert pair.dims == (2, 1)
        assert not lemma1_search(pair).found

    def test_generator_in_degree_one(self):
        """Test the search refuses a pair with a degree-1 generator."""
        pair = degree_pair(load_fixture("section4"), 2)
        with pytest.raises(PreconditionError):
            lemma1_search(pair)

    def test_split_assignment(self):
        """Test x-assigned generators come first."""
        assert split_assignment(("y", "x", "y", "x")) == [1, 3, 0, 2]


class TestDeterminantMethod:
    """Test the determinant test for (n, n) pairs."""

    def test_block_form_matrices(self):
        """Test A and B after rebasing on the assignment vectors."""
        pair = load_fixture("section2")
        a, b = block_form(pair, ("x", "y", "y"))
        assert a.to_lists() == matrix_text([[1, 1, 0], [0, 0, 0], [0, -2, 0]])
        assert b.to_lists() == matrix_text([[0, 0, 0], [1, 1, 0], [0, 0, 1]])

    def test_vanishing_determinant(self):
        """Test p(γ) is identically zero and the verdict negative."""
        outcome = determinant_method(load_fixture("section2"), 6)
        assert outcome.polynomial.is_zero()
        assert str(outcome.polynomial) == "0"
        assert not outcome.report.verdict
        assert outcome.report.per_degree[0].generic == 2
        kinds = [t.kind for t in outcome.report.trace]
        assert kinds == [TraceKind.LEMMA1, TraceKind.DETERMINANT]

    def test_no_assignment_gives_zero_polynomial(self):
        """Test a pair without an independent set fails with p(γ) = 0 and says so."""
        outcome = determinant_method(load_fixture("example1_1"))
        assert not outcome.report.verdict
        assert outcome.polynomial.is_zero()
        assert not outcome.report.lemma1.found
        assert outcome.report.witness is None
        kinds = [t.kind for t in outcome.report.trace]
        assert kinds == [TraceKind.LEMMA1, TraceKind.DETERMINANT]
        last = outcome.report.trace[-1]
        assert last.data["assignment"] is False
        assert last.data["p"] == "0"
        assert "no independent assignment" in last.message

    def test_invertible_y(self):
        """Test an invertible ×y gives the witness y directly."""
        outcome = determinant_method(load_fixture("example1_2"))
        assert outcome.report.verdict
        assert outcome.report.witness_text == "y"
        assert outcome.report.trace[0].kind is TraceKind.INJ_Y

    def test_identity_x(self):
        """Test an invertible ×x gives the witness x."""
        pair = degree_pair(load_fixture("section4"), 3)
        outcome = determinant_method(pair)
        assert outcome.report.verdict
        assert outcome.report.witness_text == "x"

    def test_not_square(self):
        """Test a (1, 2) pair is outside the method."""
        with pytest.raises(DeterminantNotApplicableError, match="HF"):
            determinant_method(degree_pair(load_fixture("section4"), 0))

    def test_degree_one_generator(self):
        """Test a pair with a degree-1 generator is outside the method."""
        with pytest.raises(DeterminantNotApplicableError, match="degree 0"):
            determinant_method(degree_pair(load_fixture("section4"), 2))

    def test_first_nonroot(self):
        """Test the smallest τ with p(τ) != 0."""
        assert first_nonroot(UniPoly([0, 1])) == 1
        assert first_nonroot(UniPoly([0, -1, 1])) == 2
        assert first_nonroot(UniPoly([5])) == 0

    def test_gamma_survey(self):
        """Test which pairs of the long module the determinant covers."""
        entries = gamma_survey(load_fixture("section4"))
        assert [e.degree for e in entries] == [1, 2, 3, 4]
        assert [e.applicable for e in entries] == [False, True, False, True]
        assert all(e.outcome.report.verdict for e in entries if e.applicable)
        assert entries[0].reason


class TestKernelQuotientAlgorithm:
    """Test steps 1-5 of the kernel-quotient algorithm."""

    def test_injective_y(self):
        """Test step 2 settles a pair where ×y is injective."""
        step = algorithm_step(load_fixture("example1_2"))
        assert step.outcome is StepOutcome.WLP
        assert (step.r, step.s) == (2, 0)
        assert step.witness == (0, 1)

    def test_kernel_summary_step(self):
        """Test the first trace step records dim Ker(×x) and dim Ker(×y)."""
        step = algorithm_step(load_fixture("section2"))
        first = step.trace[0]
        assert first.kind is TraceKind.KERNELS
        assert (first.data["r"], first.data["s"]) == (1, 1)
        assert all(t.kind is not TraceKind.INJ_X for t in step.trace)

    def test_common_kernel(self):
        """Test step 3 finds a vector killed by x and y."""
        step = algorithm_step(load_fixture("example1_1"))
        assert step.outcome is StepOutcome.NO_WLP
        assert step.obstruction.dim == 1
        assert step.trace[-1].kind is TraceKind.KERNEL_MEET

    def test_image_meet(self):
        """Test step 4 finds y·Ker(×x) ∩ x·Ker(×y) != 0."""
        step = algorithm_step(load_fixture("section2"))
        assert step.outcome is StepOutcome.NO_WLP
        assert (step.r, step.s) == (1, 1)
        assert step.trace[-1].kind is TraceKind.IMAGE_MEET

    def test_quotient_passes(self):
        """Test two quotient passes (5,6) -> (3,4) -> (1,2), then ×x injective."""
        steps = run_algorithm(load_fixture("section3"), 8)
        assert [s.outcome for s in steps] == [StepOutcome.REDUCE, StepOutcome.REDUCE, StepOutcome.WLP]
        assert [s.quotient.dims for s in steps[:2]] == [(3, 4), (1, 2)]
        assert steps[-1].trace[-1].kind is TraceKind.INJ_X

    def test_mixed_witness_after_quotients(self):
        """Test the witness after quotient passes is a verified τx + y with τ != 0."""
        pair = load_fixture("section3")
        report = check_degree_pair_algorithm(pair, 8)
        assert report.verdict
        alpha, beta = report.witness
        assert alpha and beta == 1
        assert verify_witness(pair, alpha, beta)

    def test_decreasing_pair_refused(self):
        """Test h_0 > h_1 must be dualized first."""
        pair = degree_pair(cyclic(parse_ideal("(x^2, y^2)")), 1)
        with pytest.raises(PreconditionError, match="dualize"):
            algorithm_step(pair)

    def test_single_component(self):
        """Test a one-component module trivially passes."""
        assert check_degree_pair_algorithm(cyclic(parse_ideal("(x, y)"))).verdict


class TestPencilOracle:
    """Test the pencil rank oracle."""

    def test_failing_pair(self):
        """Test the pencil of the vanishing-determinant pair has rank 2 < 3."""
        report = pencil_oracle(load_fixture("section2"))
        assert not report.verdict
        assert report.per_degree[0].generic == 2
        assert report.witness is None

    def test_passing_pair(self):
        """Test the oracle finds y for two copies of S/(x, y^2)."""
        report = pencil_oracle(load_fixture("example1_2"))
        assert report.verdict
        assert report.witness_text == "y"

    def test_requires_pair(self):
        """Test the oracle refuses modules with more than two components."""
        with pytest.raises(PreconditionError):
            pencil_oracle(load_fixture("section4"))


class TestRouter:
    """Test method registration and lookup."""

    def test_registered_methods(self):
        """Test the built-in methods and the auto alias."""
        assert set(router.methods) == {"auto", "algorithm", "determinant", "oracle"}
        assert router.canonical("auto") == "algorithm"

    def test_unknown_method(self):
        """Test an unknown method name."""
        with pytest.raises(UnknownMethodError, match="choose from"):
            router.canonical("magic")
        with pytest.raises(UnknownMethodError):
            has_wlp(load_fixture("example1_2"), "magic")

    def test_decorator_registration(self):
        """Test registering a decider with the decorator."""
        custom = DeciderRouter()

        @custom.decider("always")
        def always(pair, degree):
            return WlpReport(True, pair.field)

        assert custom.resolve("always") is always
        with pytest.raises(ValueError):
            custom.add_decider("always", always)
        with pytest.raises(ValueError):
            custom.alias("auto", "missing")


class TestHasWlp:
    """Test whole-module decisions."""

    def test_flat_sum_has_wlp(self):
        """Test two copies of S/(x, y^2) have the WLP with witness y."""
        report = has_wlp(load_fixture("example1_2"))
        assert report.verdict
        assert report.witness_text == "y"
        assert report.method == "algorithm"
        assert report.caveat is None

    def test_mixed_sum_fails(self):
        """Test S/(x,y)^2 + S/(x,y) fails in degrees 0 -> 1."""
        report = has_wlp(load_fixture("example1_1"))
        assert not report.verdict
        assert report.failing_degrees == [(0, 1)]
        assert report.witness is None

    def test_long_module(self):
        """Test the long module fails only in degrees 3 -> 4."""
        m = load_fixture("section4")
        report = has_wlp(m)
        assert not report.verdict
        assert report.failing_degrees == [(3, 4)]
        assert report.generator_degrees == [(1, 1), (4, 1)]
        assert report.hilbert.shift == 1
        assert report.hilbert.values == (1, 2, 2, 2, 2)

    def test_quotient_passes_in_trace(self):
        """Test the trace records both quotient passes."""
        m = load_fixture("section3")
        report = has_wlp(m)
        assert report.verdict
        assert [t.kind for t in report.trace].count(TraceKind.QUOTIENT) == 2
        assert all(t.degree == 8 for t in report.trace)
        assert verify_witness(m, *report.witness)

    @pytest.mark.parametrize("name", ["example1_1", "example1_2", "section2", "section3", "section4"])
    def test_methods_agree(self, name):
        """Test the algorithm and the oracle agree on every fixture."""
        m = load_fixture(name)
        assert has_wlp(m, "algorithm").verdict == has_wlp(m, "oracle").verdict

    def test_determinant_method_on_square_pair(self):
        """Test has_wlp with the determinant method keeps p(γ) and the assignment."""
        report = has_wlp(load_fixture("section2"), "determinant")
        assert not report.verdict
        assert str(report.polynomial) == "0"
        assert str(report.lemma1) == "(x,y,y)"

    def test_determinant_method_out_of_scope(self):
        """Test the determinant method on a module with a (1, 2) pair."""
        with pytest.raises(DeterminantNotApplicableError):
            has_wlp(load_fixture("section4"), "determinant")

    def test_decreasing_pairs_dualized(self):
        """Test decreasing pairs are dualized and recorded."""
        report = has_wlp(cyclic(parse_ideal("(x^2, y^2)")))
        assert report.verdict
        assert [c.dualized for c in report.per_degree] == [False, True]
        assert TraceKind.DUALIZE in [t.kind for t in report.trace]

    def test_zero_dimension_pairs_trivial(self):
        """Test pairs with a zero component are trivially fine."""
        point = cyclic(parse_ideal("(x, y)"))
        report = has_wlp(direct_sum([point, shift(point, 2)]))
        assert report.verdict
        assert [c.method for c in report.per_degree] == ["trivial", "trivial"]

    def test_finite_field_caveat(self, caplog):
        """Test GF(p) results carry a caveat and log a warning."""
        m = cyclic(parse_ideal("(x^2, y^2)", FieldSpec.prime(3)))
        with caplog.at_level(logging.WARNING, logger="wlpkit"):
            report = has_wlp(m)
        assert "GF(3)" in report.caveat
        assert any("GF(3)" in r.getMessage() for r in caplog.records)

    def test_debug_cross_check_passes(self):
        """Test debug mode re-decides every pair without complaint."""
        assert not has_wlp(load_fixture("section4"), debug=True).verdict

    def test_debug_cross_check_disagreement(self):
        """Test a lying decider is caught by the cross-check."""
        custom = DeciderRouter()

        @custom.decider("liar")
        def liar(pair, degree):
            return WlpReport(True, pair.field)

        with pytest.raises(MethodDisagreementError):
            has_wlp(load_fixture("example1_1"), "liar", debug=True, router=custom)

    def test_debug_from_env(self, monkeypatch):
        """Test WLPKIT_DEBUG switches debug mode."""
        monkeypatch.setenv("WLPKIT_DEBUG", "1")
        assert debug_from_env()
        monkeypatch.setenv("WLPKIT_DEBUG", "0")
        assert not debug_from_env()
        monkeypatch.delenv("WLPKIT_DEBUG")
        assert not debug_from_env()

    def test_report_dict(self):
        """Test the JSON-ready report."""
        data = has_wlp(load_fixture("example1_2")).to_dict()
        assert data["verdict"] is True
        assert data["hilbert_function"] == {"shift": 0, "values": [2, 2]}
        assert data["witness"]["form"] == "y"
        assert data["failing_degrees"] == []


class TestWitness:
    """Test Lefschetz element search and verification."""

    def test_verify(self):
        """Test y is a Lefschetz element and x is not."""
        m = load_fixture("example1_2")
        assert verify_witness(m, 0, 1)
        assert not verify_witness(m, 1, 0)

    def test_bound_and_candidates(self):
        """Test the candidate bound and the mixed candidates."""
        m = load_fixture("example1_2")
        assert witness_bound(m) == 3
        assert all(alpha != 0 for alpha, _ in mixed_candidates(m))

    def test_no_witness(self):
        """Test no candidate works without the WLP."""
        assert find_witness(load_fixture("example1_1")) is None

    def test_prime_field_points_cut(self):
        """Test GF(2) offers at most the points 0 and 1."""
        m = cyclic(parse_ideal("(x^2, y^2)", FieldSpec.prime(2)))
        assert len(mixed_candidates(m)) == 1


class TestObstructions:
    """Test degree1_generator_obstruction and decreasing-submodule certificates."""

    def test_degree_one_generator(self):
        """Test the (2,2) pair with a new generator in degree 4."""
        m = load_fixture("section4")
        assert degree1_generator_obstruction(degree_pair(m, 2))
        assert not degree1_generator_obstruction(degree_pair(m, 1))

    def test_degree_one_generator_shape(self):
        """Test the obstruction needs an (n, n) pair."""
        with pytest.raises(PreconditionError):
            degree1_generator_obstruction(degree_pair(load_fixture("section4"), 0))

    def test_certificate_from_common_kernel(self):
        """Test the long module has a submodule with HF (1,0) in degrees 3 -> 4."""
        cert = decreasing_submodule_certificate(load_fixture("section4"))
        assert cert.degree == 3
        assert cert.dims == (1, 0)
        assert cert.source is TraceKind.KERNEL_MEET
        assert cert.cycles == 0

    def test_certificate_from_image_meet(self):
        """Test step 4 yields HF (2,1) for the vanishing-determinant pair."""
        cert = decreasing_submodule_certificate(load_fixture("section2"))
        assert cert.degree == 6
        assert cert.dims == (2, 1)
        assert cert.source is TraceKind.IMAGE_MEET
        assert cert.to_dict()["source"] == "image_meet"

    def test_no_certificate_with_wlp(self):
        """Test modules with the WLP have no certificate."""
        assert decreasing_submodule_certificate(load_fixture("section3")) is None
        assert decreasing_submodule_certificate(load_fixture("example1_2")) is None


class TestDirectSum:
    """Test the direct-sum rule."""

    @pytest.mark.parametrize(
        "h,expected",
        [((0, 0), Behavior.ABSENT), ((0, 1), Behavior.INCREASE),
         ((2, 0), Behavior.DECREASE), ((1, 1), Behavior.FLAT)],
    )
    def test_hilbert_behavior(self, h, expected):
        """Test classification of one step of a Hilbert function."""
        assert hilbert_behavior(*h) is expected

    def test_conflict(self):
        """Test an increasing and a decreasing summand in the same degree."""
        parts = [cyclic(parse_ideal("(x^2, x*y, y^2)")), cyclic(parse_ideal("(x, y)"))]
        analysis = direct_sum_wlp_analysis(parts)
        assert not analysis.sum_verdict
        assert [r.verdict for r in analysis.part_reports] == [True, True]
        assert analysis.behavior_conflicts == [0]
        assert analysis.to_dict()["behaviors"] == {"0": ["increase", "decrease"]}

    def test_flat_parts(self):
        """Test flat summands with the WLP give a sum with the WLP."""
        part = cyclic(parse_ideal("(x, y^2)"))
        analysis = direct_sum_wlp_analysis([part, part])
        assert analysis.sum_verdict
        assert analysis.behavior_conflicts == []

    def test_agrees_with_sum(self):
        """Test the rule matches has_wlp on the sum."""
        parts = [cyclic(parse_ideal("(x^2, y^3)")), shift(cyclic(parse_ideal("(x, y^2)")), 1)]
        analysis = direct_sum_wlp_analysis(parts)
        assert analysis.sum_verdict == has_wlp(direct_sum(parts)).verdict

    def test_errors(self):
        """Test empty and mixed-field inputs."""
        with pytest.raises(PreconditionError):
            direct_sum_wlp_analysis([])
        q = cyclic(parse_ideal("(x, y)"))
        p = cyclic(parse_ideal("(x, y)", FieldSpec.prime(5)))
        with pytest.raises(FieldMismatchError):
            direct_sum_wlp_analysis([q, p])
