"""Braid words, the Artin action on free groups, the Dehornoy bracket,
and the free left-distributive algebra on one generator.

The package decides braid-word triviality and equality through the
(faithful) action on a free group, and term equality in the free
left-distributive algebra through the bracket embedding into braids.
"""

from .action import (ActionConfig, DEFAULT_CONFIG, act_conj_sequence, act_g,
                     act_x, braid_equal, braid_is_identity, leans_right_at,
                     phi, phi_inv)
from .braid import (BraidWord, EPSILON, PositiveDecomposition, bracket,
                    free_cancel, max_index, parse_braid, reverse, shift,
                    sigma, sigma_decompose)
from .braid import invert as braid_invert
from .errors import (AlphabetMismatch, InverseNotApplicable,
                     PositionOutOfRange, WordCapExceeded)
from .freegroup import (FreeWord, Letter, concat, empty, gen, invert, leading,
                        parse_word, reduce)
from .ldterm import (Apply, LdSequence, LdTerm, Leaf, X, chi,
                     irreflexivity_witness, ld_equal, left_prefix, parse_term,
                     sequence_act)
from .properties import RunReport, prop_run

__all__ = [
    "ActionConfig", "DEFAULT_CONFIG", "act_conj_sequence", "act_g", "act_x",
    "braid_equal", "braid_is_identity", "leans_right_at", "phi", "phi_inv",
    "BraidWord", "EPSILON", "PositiveDecomposition", "bracket", "free_cancel",
    "max_index", "parse_braid", "reverse", "shift", "sigma", "sigma_decompose",
    "braid_invert",
    "AlphabetMismatch", "InverseNotApplicable", "PositionOutOfRange", "WordCapExceeded",
    "FreeWord", "Letter", "concat", "empty", "gen", "invert", "leading",
    "parse_word", "reduce",
    "Apply", "LdSequence", "LdTerm", "Leaf", "X", "chi",
    "irreflexivity_witness", "ld_equal", "left_prefix", "parse_term",
    "sequence_act",
    "RunReport", "prop_run",
]

__version__ = "0.1.0"
