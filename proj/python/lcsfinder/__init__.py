"""Longest-common-substring match lengths and non-parametric entropy rates."""

from ._lcsfinder import (
    CrossEntropyMode,
    EntropyReport,
    LcsIndex,
    VocabMap,
    brute_force_strict,
    cross_entropy_rate,
    generate_uniform_tokens,
    match_length_profile,
    self_entropy_rate,
    tokenize,
)

__all__ = [
    "CrossEntropyMode",
    "EntropyReport",
    "LcsIndex",
    "VocabMap",
    "brute_force_strict",
    "cross_entropy_rate",
    "generate_uniform_tokens",
    "match_length_profile",
    "self_entropy_rate",
    "tokenize",
]
