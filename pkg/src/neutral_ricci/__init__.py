"""Algebraic classification of the traceless Ricci tensor in 4-dimensional
neutral-signature (++--) spaces.

The public entry point is :func:`neutral_ricci.classify`, which takes a
symmetric traceless 4x4 component table and returns the full type report:
characteristic invariants, root pattern, eigenstructure with causal classes,
Petrov-Penrose types of both Plebanski spinors and the registry entry (one of
33 types).
"""

from neutral_ricci.errors import (
    AsymmetryViolation,
    ClassificationError,
    ConstraintViolation,
    DegeneracyViolation,
    EdgeViolation,
    InconsistentPattern,
    NoAnnihilation,
    NotApplicable,
    TraceViolation,
    UnknownSymbol,
)
from neutral_ricci.frame import CovariantTensor, Tetrad
from neutral_ricci.taxonomy import (
    REGISTRY,
    CanonicalParams,
    canonical,
    classify,
    lookup,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetryViolation",
    "CanonicalParams",
    "ClassificationError",
    "ConstraintViolation",
    "CovariantTensor",
    "DegeneracyViolation",
    "EdgeViolation",
    "InconsistentPattern",
    "NoAnnihilation",
    "NotApplicable",
    "REGISTRY",
    "Tetrad",
    "TraceViolation",
    "UnknownSymbol",
    "canonical",
    "classify",
    "lookup",
]
