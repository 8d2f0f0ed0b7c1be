"""End-to-end classification of a covariant traceless Ricci table."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from neutral_ricci.errors import InconsistentPattern
from neutral_ricci.frame import EPS, CovariantTensor, EpsilonConvention, Tetrad, convert_tensor
from neutral_ricci.plebanski import pp_pair
from neutral_ricci.quartic import DepressedQuartic, QuarticInvariants, RootPattern, Signs, classify_real, invariants
from neutral_ricci.scalars import QuadraticNumber
from neutral_ricci.spectral import EigenEntry, EigenReport, char_coeffs, eigen_structure, minimal_exponents, mixed
from neutral_ricci.taxonomy.registry import TypeRegistryEntry, lookup
from neutral_ricci.taxonomy.symbol import RicciTypeSymbol, assemble_symbol


@dataclass(frozen=True)
class ClassificationReport:
    tensor: CovariantTensor
    exact: bool
    coefficients: DepressedQuartic
    invariants: QuarticInvariants
    pattern: RootPattern
    eigen: EigenReport
    pp: tuple
    symbol: RicciTypeSymbol
    entry: TypeRegistryEntry
    scale: float = 1.0
    warnings: tuple = field(default_factory=tuple)

    @property
    def id(self) -> int:
        return self.entry.id

    def as_dict(self):
        return {
            "input": {"tetrad": self.tensor.tetrad.value, "label": self.tensor.label,
                      "components": [[encode(x) for x in r] for r in self.tensor.components]},
            "mode": "rational" if self.exact else "float",
            "characteristic": {"c2": encode(self.coefficients.c2), "c3": encode(self.coefficients.c3),
                               "c4": encode(self.coefficients.c4)},
            "invariants": {k: encode(v) for k, v in self.invariants.as_dict().items()},
            "root_pattern": self.pattern.value,
            "eigenvalues": [encode_entry(e) for e in self.eigen.entries],
            "pp_pair": [p.value for p in self.pp],
            "symbol": self.symbol.render(),
            "registry": {"id": self.entry.id, "code": self.entry.code, "parent": self.entry.parent},
            "warnings": list(self.warnings),
        }


def encode(x):
    """JSON-friendly scalar: exact values as strings, floats as numbers."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, QuadraticNumber):
        return str(x)
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, int):
        return str(x)
    return float(x)


def encode_entry(e: EigenEntry):
    return {"value": encode(e.value), "n": e.multiplicity, "dim": e.dim, "q": e.q, "class": e.causal}


def _scaled(C: CovariantTensor, s: float) -> CovariantTensor:
    rows = tuple(tuple(float(x) / s for x in r) for r in C.components)
    return CovariantTensor(rows, C.tetrad, C.label)


def _rescale_report(rep: EigenReport, s: float) -> EigenReport:
    entries = tuple(
        EigenEntry(e.value * s, e.multiplicity, e.basis, e.causal, e.q, e.exact, e.factor) for e in rep.entries
    )
    return EigenReport(entries, rep.exact, rep.warnings)


def classify(C: CovariantTensor, tetrad=None, tol: float = 1e-9, eps: EpsilonConvention = EPS) -> ClassificationReport:
    """Full pipeline: invariants, root pattern, eigenstructure, PP pair, registry entry.

    Rational input is handled exactly.  Float input is normalised by its
    largest component first and every sign test uses ``tol`` relative to
    that scale; near-boundary decisions are listed in ``warnings``.
    """
    if not isinstance(C, CovariantTensor):
        C = CovariantTensor.from_rows(C, Tetrad.parse(tetrad or "null"), tol=tol)
    elif tetrad is not None and Tetrad.parse(tetrad) != C.tetrad:
        C = convert_tensor(C, Tetrad.parse(tetrad))
    original = C
    warnings: list[str] = []
    scale = 1.0
    if not C.exact:
        scale = C.max_abs() or 1.0
        C = _scaled(C, scale)

    M = mixed(C, tol)
    cq = char_coeffs(M, tol=tol)
    inv = invariants(cq)
    if cq.exact:
        pattern = classify_real(cq)
    else:
        signs = Signs(tol=tol, scale=max(cq.root_scale(), 1e-300))
        pattern = classify_real(cq, signs)
        warnings.extend(f"{name} is boundary-proximate" for name in signs.near)

    eig = eigen_structure(M, pattern, tol)
    warnings.extend(eig.warnings)
    q_check = minimal_exponents(M, eig)
    if q_check != eig.q_list:
        raise InconsistentPattern(f"kernel chain exponents {eig.q_list} disagree with annihilator {q_check}",
                                  stage="spectral")

    pp = pp_pair(convert_tensor(C, Tetrad.NULL), eps, tol)
    symbol = assemble_symbol(eig, pp)
    entry = lookup(symbol)
    if scale != 1.0:
        eig = _rescale_report(eig, scale)
    return ClassificationReport(original, original.exact, cq, inv, pattern, eig, tuple(pp), symbol, entry, scale,
                                tuple(warnings))
