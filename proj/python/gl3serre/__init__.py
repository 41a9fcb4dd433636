"""Python access to the serre library."""

from ._core import (
    acceptance,
    admissible,
    distance,
    golden,
    golden_names,
    jh,
    lemma_names,
    length,
    trns,
    trns_inverse,
    verify_lemma,
)

__all__ = [
    "acceptance",
    "admissible",
    "distance",
    "golden",
    "golden_names",
    "jh",
    "lemma_names",
    "length",
    "trns",
    "trns_inverse",
    "verify_lemma",
]
