from .construct import artinian_basis, cyclic, from_quotient_submodule
from .embedded import (
    EmbeddedSubmodule,
    embedded_from_spaces,
    lift_from_quotient,
    quotient,
    reduce_modulo,
    submodule_generated,
)
from .graded import (
    GradedModule,
    HilbertFunction,
    degree_pair,
    direct_sum,
    dual,
    generated_in_degree_zero,
    hilbert_function,
    minimal_generator_degrees,
    shift,
)

__all__ = [
    "artinian_basis",
    "cyclic",
    "from_quotient_submodule",
    "EmbeddedSubmodule",
    "embedded_from_spaces",
    "lift_from_quotient",
    "quotient",
    "reduce_modulo",
    "submodule_generated",
    "GradedModule",
    "HilbertFunction",
    "degree_pair",
    "direct_sum",
    "dual",
    "generated_in_degree_zero",
    "hilbert_function",
    "minimal_generator_degrees",
    "shift",
]
