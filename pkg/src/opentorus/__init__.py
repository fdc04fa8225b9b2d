"""Genus-one open books with one boundary component: normal forms, tightness, invariants."""

from .twistword import (
    DELTA,
    EMPTY,
    W,
    Generator,
    Letter,
    TwistWord,
    WordSyntaxError,
    concat,
    cyclic_rotate,
    exponent_sum,
    format_word,
    invert,
    parse_word,
)
from .mcg import (
    DynamicsClass,
    SL2Matrix,
    dynamics_class,
    equal_in_mcg,
    open_book_invariants,
    rep_of_word,
)
from .tightness import (
    InvariantChain,
    SoberingForm,
    Status,
    SteinWord,
    Verdict,
    check_certificate,
    decide,
    dehn_obstruction,
    sobering_certificate,
    stein_witness,
    tight_minus_dehn,
)
from .normalform import (
    CanonicalType,
    MForm,
    MoveSpec,
    SixType,
    apply_move,
    canonical_word_text,
    expand_to_word,
    normalize,
    reduce_six,
    to_canonical,
    to_m_form,
    to_p_form,
    x_power_identity,
)


__version__ = "0.1.0"
