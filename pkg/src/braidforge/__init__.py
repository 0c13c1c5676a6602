"""Braid words, Garside conjugacy, exchange moves and entropy of braids."""

from .burau_rep import burau, entropy_lower_bound, trace_certificate
from .exchange import (
    DegeneracyReport,
    ExchangePresentation,
    is_degenerate,
    iterated_exchange,
    markov_invariants_check,
    tau,
    twist_identity_check,
)
from .garside import (
    NormalForm,
    SummitInvariant,
    SuperSummitOverflow,
    conjugate_test,
    cycling,
    decycling,
    equal,
    normal_form,
    summit_invariant,
    super_summit_set,
)
from .lamination import (
    DynnikovCoords,
    EntropyEstimate,
    act,
    curve_family,
    entropy_estimate,
    entropy_of_power_check,
    exchange_curve,
    geometric_nondegeneracy,
    round_curve,
)
from .laurent import LaurentMatrix, LaurentPoly
from .words import (
    BraidError,
    BraidWord,
    Permutation,
    closure_component_count,
    compose,
    exponent_sum,
    invert,
    parse_word,
    permutation,
)

__version__ = "0.1.0"
