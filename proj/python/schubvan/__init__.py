"""Vanishing of Schubert structure constants in types A, B, C and D."""

from ._core import (
    InputError,
    dimension_check,
    length,
    long_word,
    lr_coeff,
    lr_vanishing,
    num_positive_roots,
    pschur_coeff,
    schubert_coeff,
    symbolic_vanishing,
    vanishing,
    verify_witness,
)

__all__ = [
    "InputError",
    "dimension_check",
    "length",
    "long_word",
    "lr_coeff",
    "lr_vanishing",
    "num_positive_roots",
    "pschur_coeff",
    "schubert_coeff",
    "symbolic_vanishing",
    "vanishing",
    "verify_witness",
]
