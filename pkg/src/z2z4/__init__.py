"""Additive codes in Z2^alpha x Z4^beta.

Construction and enumeration of additive codes, Gray images and Lee
weight profiles, duals, relative two-weight structure, permutation
equivalence and automorphism groups, plus brute-force audits of the
structural claims the library is built around.
"""

from .classify import (
    EvenWeightCheck,
    GeneratorStats,
    RelativeStructure,
    check_g1_row_units,
    classification_report,
    even_weight_criterion,
    find_relative_structure,
    generator_stats,
    is_one_weight,
    is_two_distance,
    predicted_single_gen_weights,
    verify_relative,
    weight_profile,
)
from .codefile import ParseError, export_code, parse_code_file, parse_code_text
from .codes import (
    DEFAULT_AMBIENT_LIMIT,
    DEFAULT_ENUM_LIMIT,
    AdditiveCode,
    BinaryCode,
    CapError,
    ContainmentError,
    SubcodeWitness,
    cyclic_shift,
    is_linear_binary,
)
from .symmetry import (
    DEFAULT_PAIR_LIMIT,
    CyclicPautAudit,
    PAutGroup,
    PermPair,
    apply_perm_pair,
    audit_cyclic_paut,
    find_equivalence,
    image_code,
    paut,
    paut_order_formula,
    paut_report,
)
from .words import (
    GRAY_TABLE,
    LEE_TABLE,
    MixedWord,
    ShapeError,
    add_words,
    gray_scalar,
    gray_word,
    hamming_distance_mixed,
    hamming_weight,
    inner_product,
    lee_distance,
    lee_weight,
    parse_word,
    scalar_mul,
    word_str,
)

__version__ = "0.1.0"
