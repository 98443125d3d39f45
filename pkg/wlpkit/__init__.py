__version__ = "0.1.0"

from .bipoly import (
    BiPoly,
    IdealGens,
    Monomial,
    format_poly,
    parse_ideal,
    parse_poly,
    parse_poly_list,
)
from .exceptions import (
    DeterminantNotApplicableError,
    FieldMismatchError,
    MethodDisagreementError,
    ModuleConstructionError,
    NonArtinianError,
    ParseError,
    PreconditionError,
    ScalarDivisionError,
    ShapeError,
    UnknownMethodError,
    WlpError,
)
from .field import GF, QQ, FieldSpec, parse_scalar
from .groebner import GroebnerBasis, buchberger, normal_form, standard_monomials
from .module import (
    GradedModule,
    HilbertFunction,
    cyclic,
    degree_pair,
    direct_sum,
    dual,
    from_quotient_submodule,
    quotient,
    shift,
    submodule_generated,
)
from .status import ExitStatus
from .wlp import (
    WlpReport,
    check_degree_pair_algorithm,
    decreasing_submodule_certificate,
    determinant_method,
    direct_sum_wlp_analysis,
    has_wlp,
    lemma1_search,
    pencil_oracle,
)

__all__ = [
    "BiPoly",
    "IdealGens",
    "Monomial",
    "format_poly",
    "parse_ideal",
    "parse_poly",
    "parse_poly_list",
    "DeterminantNotApplicableError",
    "FieldMismatchError",
    "MethodDisagreementError",
    "ModuleConstructionError",
    "NonArtinianError",
    "ParseError",
    "PreconditionError",
    "ScalarDivisionError",
    "ShapeError",
    "UnknownMethodError",
    "WlpError",
    "GF",
    "QQ",
    "FieldSpec",
    "parse_scalar",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "standard_monomials",
    "GradedModule",
    "HilbertFunction",
    "cyclic",
    "degree_pair",
    "direct_sum",
    "dual",
    "from_quotient_submodule",
    "quotient",
    "shift",
    "submodule_generated",
    "ExitStatus",
    "WlpReport",
    "check_degree_pair_algorithm",
    "decreasing_submodule_certificate",
    "determinant_method",
    "direct_sum_wlp_analysis",
    "has_wlp",
    "lemma1_search",
    "pencil_oracle",
]
