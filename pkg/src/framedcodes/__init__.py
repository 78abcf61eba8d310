"""Exact binary-code combinatorics of framed vertex operator algebras."""

from .errors import (
    BudgetExceededError,
    CodeFormatError,
    FramedCodesError,
    InternalConsistencyError,
    LengthMismatchError,
    PreconditionError,
    UnsupportedFusionError,
)
from .gf2 import (
    Budget,
    Codeword,
    LinearCode,
    WeightEnumerator,
    coset_min_weight,
    coset_words_up_to_weight,
    dual,
    from_generators,
    intersect,
    macwilliams,
    puncture,
    read_code,
    reed_muller,
    subcode_supported_on,
    sum_codes,
    weight_enumerator,
    write_code,
)
from .modules import (
    ModuleLabel,
    ModuleSum,
    count_modules_with_tau,
    dual_label,
    fuse,
    fuse_coset,
    fuse_coset_general,
    fuse_same_beta,
    fuse_with_dual,
    is_self_dual_module,
    is_simple_current,
    make_label,
    top_level_dimension,
    top_weight,
)
from .moonshine import MoonshineFrame, build_moonshine_codes, run_demo
from .qseries import QSeries, code_voa_character, code_voa_character_from_dual, mckay_thompson, product_half_odd
from .quadratic import epsilon, kappa_vector, maximal_self_orthogonal_subcode, radical
from .selfdual import extend_to_doubly_even_self_dual, find_self_dual_subcode_wrt, is_self_dual_wrt
from .stabilizer import commute_lifts, compute_P, describe_stabilizer, graded_split, order_of_lift
from .structcheck import (
    StructureReport,
    extend_structure_codes,
    is_f_admissible,
    is_f_admissible_via_dual,
    is_holomorphic_pair,
    orbifold_codes,
    validate_structure_codes,
)

__all__ = [
    "BudgetExceededError",
    "CodeFormatError",
    "FramedCodesError",
    "InternalConsistencyError",
    "LengthMismatchError",
    "PreconditionError",
    "UnsupportedFusionError",
    "Budget",
    "Codeword",
    "LinearCode",
    "WeightEnumerator",
    "coset_min_weight",
    "coset_words_up_to_weight",
    "dual",
    "from_generators",
    "intersect",
    "macwilliams",
    "puncture",
    "read_code",
    "reed_muller",
    "subcode_supported_on",
    "sum_codes",
    "weight_enumerator",
    "write_code",
    "ModuleLabel",
    "ModuleSum",
    "count_modules_with_tau",
    "dual_label",
    "fuse",
    "fuse_coset",
    "fuse_coset_general",
    "fuse_same_beta",
    "fuse_with_dual",
    "is_self_dual_module",
    "is_simple_current",
    "make_label",
    "top_level_dimension",
    "top_weight",
    "MoonshineFrame",
    "build_moonshine_codes",
    "run_demo",
    "QSeries",
    "code_voa_character",
    "code_voa_character_from_dual",
    "mckay_thompson",
    "product_half_odd",
    "epsilon",
    "kappa_vector",
    "maximal_self_orthogonal_subcode",
    "radical",
    "extend_to_doubly_even_self_dual",
    "find_self_dual_subcode_wrt",
    "is_self_dual_wrt",
    "commute_lifts",
    "compute_P",
    "describe_stabilizer",
    "graded_split",
    "order_of_lift",
    "StructureReport",
    "extend_structure_codes",
    "is_f_admissible",
    "is_f_admissible_via_dual",
    "is_holomorphic_pair",
    "orbifold_codes",
    "validate_structure_codes",
]

__version__ = "0.1.0"
