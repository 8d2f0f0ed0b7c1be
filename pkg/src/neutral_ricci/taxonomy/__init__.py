"""Type symbols, the registry of 33 types, canonical forms and degenerations."""

from neutral_ricci.taxonomy.canonical import (
    CanonicalParams,
    canonical,
    draw,
    identify,
    sigma1,
    sigma2,
    sigma_criteria,
)
from neutral_ricci.taxonomy.classify import ClassificationReport, classify
from neutral_ricci.taxonomy.degeneration import (
    check_all_edges,
    degeneration_check,
    limit_survey,
    restricted_limit_check,
)
from neutral_ricci.taxonomy.registry import (
    ENTRIES,
    PARENTS,
    REGISTRY,
    TypeRegistryEntry,
    descendants,
    edges,
    entries_of,
    get,
    lookup,
    registry_json,
)
from neutral_ricci.taxonomy.symbol import RicciTypeSymbol, Term, assemble_symbol, parse_symbol

__all__ = [
    "ENTRIES",
    "PARENTS",
    "REGISTRY",
    "CanonicalParams",
    "ClassificationReport",
    "RicciTypeSymbol",
    "Term",
    "TypeRegistryEntry",
    "assemble_symbol",
    "canonical",
    "check_all_edges",
    "classify",
    "degeneration_check",
    "descendants",
    "draw",
    "edges",
    "entries_of",
    "get",
    "identify",
    "limit_survey",
    "lookup",
    "parse_symbol",
    "registry_json",
    "restricted_limit_check",
    "sigma1",
    "sigma2",
    "sigma_criteria",
]
