"""Free Lie algebra and shuffle algebra computations on words."""

from .words import (
    Alphabet,
    Factorization,
    apply_literal_morphism,
    factorizations,
    is_lyndon,
    is_palindrome,
    lyndon_words,
    multi_degree,
    primitive_root,
    reverse,
    standard_factorization,
)
from .poly import (
    Poly,
    TrailingDecomposition,
    coefficient_gcd,
    concat_product,
    left_residual,
    parse_poly,
    poly_combine,
    rank,
    reverse_poly,
    right_residual,
    scalar_product,
    shuffle,
    shuffle_words,
    trailing_decomposition,
)
from .lie import (
    BracketTree,
    Verdict,
    VerdictKind,
    classify_pair,
    e_d_invariants,
    ell,
    gamma,
    in_support,
    lambda_closed_single_b,
    lambda_factor_expansion,
    lambda_oracle,
    lambda_pascal,
    lambda_proportional,
    lambda_rec,
    lyndon_bracket,
)
from .render import render

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
