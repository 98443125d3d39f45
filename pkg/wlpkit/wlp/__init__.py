from .algorithm import (
    AlgorithmStep,
    StepOutcome,
    algorithm_step,
    check_degree_pair_algorithm,
    run_algorithm,
)
from .certificate import SubmoduleCertificate, decreasing_submodule_certificate
from .core import (
    DEBUG_ENV,
    debug_from_env,
    degree1_generator_obstruction,
    finite_field_caveat,
    has_wlp,
)
from .determinant import (
    DeterminantOutcome,
    GammaEntry,
    block_form,
    check_determinant_applicable,
    determinant_method,
    first_nonroot,
    gamma_survey,
)
from .directsum import Behavior, DirectSumAnalysis, direct_sum_wlp_analysis, hilbert_behavior
from .lemma import assignment_matrix, lemma1_search, split_assignment
from .oracle import pencil_oracle
from .report import (
    DegreeCertificate,
    Lemma1Result,
    TraceKind,
    TraceStep,
    Witness,
    WlpReport,
    format_witness,
)
from .router import DeciderRouter, DecisionRequest, router
from .witness import find_witness, mixed_candidates, verify_witness, witness_bound

__all__ = [
    "AlgorithmStep",
    "StepOutcome",
    "algorithm_step",
    "check_degree_pair_algorithm",
    "run_algorithm",
    "SubmoduleCertificate",
    "decreasing_submodule_certificate",
    "DEBUG_ENV",
    "debug_from_env",
    "degree1_generator_obstruction",
    "finite_field_caveat",
    "has_wlp",
    "DeterminantOutcome",
    "GammaEntry",
    "block_form",
    "check_determinant_applicable",
    "determinant_method",
    "first_nonroot",
    "gamma_survey",
    "Behavior",
    "DirectSumAnalysis",
    "direct_sum_wlp_analysis",
    "hilbert_behavior",
    "assignment_matrix",
    "lemma1_search",
    "split_assignment",
    "pencil_oracle",
    "DegreeCertificate",
    "Lemma1Result",
    "TraceKind",
    "TraceStep",
    "Witness",
    "WlpReport",
    "format_witness",
    "DeciderRouter",
    "DecisionRequest",
    "router",
    "find_witness",
    "mixed_candidates",
    "verify_witness",
    "witness_bound",
]
