"""Type symbols ``[A] x [B] [n1E1-n2E2-...]^v_(q1q2...)``.

Plain-text form used throughout: PP labels such as ``[I]_rc`` or ``[-]``,
real eigenvalues ``2R1^nst``, complex ones ``Z``/``Zbar`` (numbered
``Z1``/``Z1bar`` when there are two conjugate pairs).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from neutral_ricci.errors import UnknownSymbol
from neutral_ricci.plebanski import PPType
from neutral_ricci.spectral import EigenReport


@dataclass(frozen=True)
class Term:
    n: int
    kind: str  # "R", "Z" or "Zbar"
    causal: str  # s, t, n, ns, nt, nst or complex
    index: int | None = None

    def render(self) -> str:
        head = str(self.n) if self.n > 1 else ""
        if self.kind == "R":
            idx = "" if self.index is None else str(self.index)
            return f"{head}R{idx}^{self.causal}"
        idx = "" if self.index is None else str(self.index)
        bar = "bar" if self.kind == "Zbar" else ""
        return f"{head}Z{idx}{bar}"


@dataclass(frozen=True)
class RicciTypeSymbol:
    pp: tuple  # (PPType, PPType)
    terms: tuple  # Term, in display order
    v: int
    q: tuple

    def __post_init__(self):
        if len(self.terms) != len(self.q):
            raise ValueError("one q per eigenvalue term")

    def render(self) -> str:
        a, b = (p.value for p in self.pp)
        sep = " x " if ("_" in a or "_" in b) else "x"
        body = "-".join(t.render() for t in self.terms)
        qs = "".join(str(x) for x in self.q)
        return f"{a}{sep}{b} [{body}]^{self.v}_({qs})"

    __str__ = render

    def key(self):
        """Order-free identity: PP pair, v and the multiset of (n, R|Z, class, q)."""
        items = Counter((t.n, "R" if t.kind == "R" else "Z", t.causal, q) for t, q in zip(self.terms, self.q))
        return (self.pp, self.v, tuple(sorted(items.items())))

    @property
    def multiplicity_sum(self) -> int:
        return sum(t.n for t in self.terms)


_PP = r"\[(?:[^\]]*)\](?:_[a-z]+)?"
_SYMBOL = re.compile(rf"^\s*({_PP})\s*x\s*({_PP})\s*\[([^\]]*)\]\^(\d+)_\((\d+)\)\s*$")
_TERM = re.compile(r"^(\d*)(R|Z)(\d*)(bar)?(?:\^([a-z]+))?$")


def parse_symbol(text: str) -> RicciTypeSymbol:
    m = _SYMBOL.match(text)
    if not m:
        raise UnknownSymbol(f"cannot parse symbol {text!r}", symbol=text, stage="taxonomy")
    try:
        pp = (PPType.from_label(m.group(1)), PPType.from_label(m.group(2)))
    except ValueError as exc:
        raise UnknownSymbol(f"unknown Petrov-Penrose label in {text!r}", symbol=text, stage="taxonomy") from exc
    terms = []
    for raw in m.group(3).split("-"):
        t = _TERM.match(raw.strip())
        if not t:
            raise UnknownSymbol(f"bad eigenvalue term {raw!r}", symbol=text, stage="taxonomy")
        n = int(t.group(1)) if t.group(1) else 1
        idx = int(t.group(3)) if t.group(3) else None
        if t.group(2) == "R":
            if t.group(4) or not t.group(5):
                raise UnknownSymbol(f"bad real term {raw!r}", symbol=text, stage="taxonomy")
            terms.append(Term(n, "R", t.group(5), idx))
        else:
            if t.group(5):
                raise UnknownSymbol(f"complex term with causal class {raw!r}", symbol=text, stage="taxonomy")
            terms.append(Term(n, "Zbar" if t.group(4) else "Z", "complex", idx))
    qs = tuple(int(c) for c in m.group(5))
    if len(qs) != len(terms):
        raise UnknownSymbol(f"q list length does not match terms in {text!r}", symbol=text, stage="taxonomy")
    return RicciTypeSymbol(pp, tuple(terms), int(m.group(4)), qs)


def assemble_symbol(report: EigenReport, pp) -> RicciTypeSymbol:
    """Build the symbol from an eigen report already in display order."""
    reals = [e for e in report.entries if e.causal != "complex"]
    comps = [e for e in report.entries if e.causal == "complex"]
    number_reals = len(reals) > 1
    upper = [e for e in comps if e.approx().imag > 0]
    number_pairs = len(upper) > 1
    pair_index = {id(e): i + 1 for i, e in enumerate(upper)}
    terms = []
    r_index = 0
    for e in report.entries:
        if e.causal != "complex":
            r_index += 1
            terms.append(Term(e.multiplicity, "R", e.causal, r_index if number_reals else None))
            continue
        z = e.approx()
        if z.imag > 0:
            idx = pair_index[id(e)]
            terms.append(Term(e.multiplicity, "Z", "complex", idx if number_pairs else None))
        else:
            partner = min(upper, key=lambda u: abs(u.approx() - z.conjugate()))
            idx = pair_index[id(partner)]
            terms.append(Term(e.multiplicity, "Zbar", "complex", idx if number_pairs else None))
    return RicciTypeSymbol(tuple(pp), tuple(terms), report.v, report.q_list)
