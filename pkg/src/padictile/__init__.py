"""Explicit homeomorphisms between rings of p-adic integers, built from tilings of the p-ary tree."""
from .caps import DEFAULT_CAP, ResourceCapError
from .streams import (
    DigitStream,
    NotPAdicIntegerError,
    Truncation,
    rational_to_stream,
    residue_equal,
    truncate,
)
from .tiles import (
    DiophantineSolution,
    ExplicitTileParams,
    InvalidTileError,
    Tile,
    enumerate_tiles,
    explicit_params,
    explicit_tile,
    leaf_count,
    partition_at_level,
    replicate,
    solve_diophantine,
    verify_tile,
    verify_tile_oracle,
)
from .transducer import (
    Composite,
    Homeo,
    LeafBijection,
    ParseState,
    Transducer,
    apply,
    apply_stream,
    canonical_tau,
    check_inclusion_isomorphism,
    compose,
    explicit_homeo,
    factorize,
    identity_homeo,
    inverse,
    required_input_precision,
    worked_example_homeo,
)
from .words import Ball, BaseMismatchError, Word, ball_contains, ball_of, is_prefix, nu, word_cmp

__version__ = "0.1.0"
