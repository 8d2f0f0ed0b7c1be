"""The 33 algebraic types of a traceless Ricci tensor in neutral signature.

Each entry carries its parent Type, its symbol, the parameter conditions
that single it out inside the parent's canonical family and its direct
degeneration successors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from neutral_ricci.errors import UnknownSymbol
from neutral_ricci.taxonomy.symbol import RicciTypeSymbol, parse_symbol

REGISTRY_SCHEMA = "neutral-ricci-registry/1"

PARENTS = ("I_r", "I_c", "I_rc", "II_r", "II_rc", "III_t", "III_s", "III_n", "IV")

PARAMETER_NAMES = {
    "I_r": ("R1s", "R2s", "R3t", "R4t"),
    "I_c": ("ReZ1", "ImZ1", "ReZ2", "ImZ2"),
    "I_rc": ("R1s", "R2t", "ReZ", "ImZ"),
    "II_r": ("R1s", "R2t", "R3n"),
    "II_rc": ("ReZ", "ImZ", "Rn"),
    "III_t": ("R1t", "R2n"),
    "III_s": ("R1s", "R2n"),
    "III_n": ("R1n", "R2n"),
    "IV": (),
}

CONSTRAINTS = {
    "I_r": "R1s + R2s + R3t + R4t = 0",
    "I_c": "ReZ1 + ReZ2 = 0, ImZ1 != 0, ImZ2 != 0",
    "I_rc": "R1s + R2t + 2 ReZ = 0, ImZ != 0",
    "II_r": "R1s + R2t + 2 R3n = 0",
    "II_rc": "Rn + ReZ = 0, ImZ != 0",
    "III_t": "R1t + 3 R2n = 0",
    "III_s": "R1s + 3 R2n = 0",
    "III_n": "R1n + R2n = 0",
    "IV": "no parameters",
}


@dataclass(frozen=True)
class TypeRegistryEntry:
    id: int
    code: str
    parent: str
    template: str
    condition: str
    successors: tuple = ()
    form: int | None = None
    alias: str | None = None

    @cached_property
    def symbol(self) -> RicciTypeSymbol:
        return parse_symbol(self.template)

    @property
    def pp(self):
        return self.symbol.pp

    @property
    def v(self) -> int:
        return self.symbol.v

    @property
    def subtype(self) -> int:
        return int(self.code.split(".")[1])

    def key(self):
        return self.symbol.key()

    def as_dict(self):
        s = self.symbol
        return {
            "id": self.id,
            "code": self.code,
            "alias": self.alias,
            "parent": self.parent,
            "subtype_row": self.subtype,
            "symbol": self.template,
            "pp_pair": [p.value for p in s.pp],
            "v": s.v,
            "q": list(s.q),
            "terms": [{"n": t.n, "kind": t.kind, "class": t.causal} for t in s.terms],
            "condition": self.condition,
            "canonical_form": self.form,
            "successors": list(self.successors),
        }


def _e(i, code, template, condition, succ=(), form=None, alias=None):
    return TypeRegistryEntry(i, code, code.split(".")[0], template, condition, tuple(succ), form, alias)


ENTRIES = (
    _e(1, "I_r.1", "[I]_c x [I]_c [R1^s-R2^s-R3^t-R4^t]^4_(1111)", "all distinct, sigma1 > 0", (3, 5, 4)),
    _e(2, "I_r.2", "[I]_r x [I]_r [R1^s-R2^s-R3^t-R4^t]^4_(1111)", "all distinct, sigma1 < 0", (4,)),
    _e(3, "I_r.3", "[D]_c x [D]_c [2R1^s-R2^t-R3^t]^4_(111)", "R1s = R2s, otherwise distinct", (6, 9)),
    _e(4, "I_r.4", "[D]_r x [D]_r [R1^s-2R2^nst-R3^t]^4_(111)", "one spacelike equals one timelike value",
       (9, 8, 7)),
    _e(5, "I_r.5", "[D]_c x [D]_c [R1^s-R2^s-2R3^t]^4_(111)", "R3t = R4t, otherwise distinct", (6, 8)),
    _e(6, "I_r.6", "[D]_c x [D]_c [2R1^s-2R2^t]^4_(11)", "R1s = R2s = -R3t = -R4t != 0", (10,)),
    _e(7, "I_r.7", "[D]_r x [D]_r [2R1^nst-2R2^nst]^4_(11)", "two spacelike-timelike coincidences", (10,)),
    _e(8, "I_r.8", "[-] x [-] [R1^s-3R2^nst]^4_(11)", "three equal values, the lone one spacelike", (10,)),
    _e(9, "I_r.9", "[-] x [-] [R1^t-3R2^nst]^4_(11)", "three equal values, the lone one timelike", (10,)),
    _e(10, "I_r.10", "[-] x [-] [4R^nst]^4_(1)", "all values zero"),
    _e(11, "I_c.1", "[I]_c x [I]_r [Z1-Z1bar-Z2-Z2bar]^4_(1111)", "ImZ1 ImZ2 < 0, Z1 != conj(Z2)"),
    _e(12, "I_c.2", "[I]_r x [I]_c [Z1-Z1bar-Z2-Z2bar]^4_(1111)", "ImZ1 ImZ2 > 0, Z1 != Z2", (13,)),
    _e(13, "I_c.3", "[D]_r x [D]_c [2Z-2Zbar]^4_(11)", "Z1 = Z2"),
    _e(14, "I_rc.1", "[I]_rc x [I]_rc [Z-Zbar-R1^s-R2^t]^4_(1111)", "R1s != R2t", (15,)),
    _e(15, "I_rc.2", "[D]_r x [D]_r [Z-Zbar-2R^nst]^4_(111)", "R1s = R2t"),
    _e(16, "II_r.1", "[II]_rc x [II]_rc [R1^s-R2^t-2R3^n]^3_(112)", "all distinct, sigma2 < 0", (18, 19, 20)),
    _e(17, "II_r.2", "[II]_r x [II]_r [R1^s-R2^t-2R3^n]^3_(112)", "all distinct, sigma2 > 0", (18, 19, 20)),
    _e(18, "II_r.3", "[D]_r x [D]_r [2R1^nst-2R2^n]^3_(12)", "R1s = R2t != R3n", (21,)),
    _e(19, "II_r.4", "[N]_r x [N]_r [R1^s-3R2^nt]^3_(12)", "R2t = R3n != R1s", (21,)),
    _e(20, "II_r.5", "[N]_r x [N]_r [R1^t-3R2^ns]^3_(12)", "R1s = R3n != R2t", (21,)),
    _e(21, "II_r.6", "[-] x [-] [4R^nst]^3_(2)", "all values zero"),
    _e(22, "II_rc.1", "[II]_r x [II]_rc [Z-Zbar-2R^n]^3_(112)", "ImZ > 0"),
    _e(23, "II_rc.2", "[II]_rc x [II]_r [Z-Zbar-2R^n]^3_(112)", "ImZ < 0"),
    _e(24, "III_t.1", "[III]_r x [III]_r [R1^t-3R2^n]^2_(13)", "R2n != 0", (25,)),
    _e(25, "III_t.2", "[N]_r x [N]_r [4R^nt]^2_(3)", "R2n = 0"),
    _e(26, "III_s.1", "[III]_r x [III]_r [R1^s-3R2^n]^2_(13)", "R2n != 0", (27,)),
    _e(27, "III_s.2", "[N]_r x [N]_r [4R^ns]^2_(3)", "R2n = 0"),
    _e(28, "III_n.1", "[D]_r x [II]_r [2R1^n-2R2^n]^2_(22)", "first form, R1n != 0", (30,), form=1),
    _e(29, "III_n.2", "[II]_r x [D]_r [2R1^n-2R2^n]^2_(22)", "second form, R1n != 0", (31,), form=2),
    _e(30, "III_n.3", "[-] x [N]_r [4R^n]^2_(2)", "first form, R1n = 0", form=1),
    _e(31, "III_n.4", "[N]_r x [-] [4R^n]^2_(2)", "second form, R1n = 0", form=2),
    _e(32, "IV.1", "[N]_r x [III]_r [4R^n]^1_(4)", "first form", form=1, alias="IV.a"),
    _e(33, "IV.2", "[III]_r x [N]_r [4R^n]^1_(4)", "second form", form=2, alias="IV.b"),
)

REGISTRY = {e.id: e for e in ENTRIES}
_BY_CODE = {e.code: e for e in ENTRIES}
_BY_CODE.update({e.alias: e for e in ENTRIES if e.alias})
_BY_KEY = {}
for _entry in ENTRIES:
    _k = _entry.key()
    if _k in _BY_KEY:  # pragma: no cover - guarded by tests
        raise RuntimeError(f"registry keys collide: {_BY_KEY[_k].code} and {_entry.code}")
    _BY_KEY[_k] = _entry


def get(ref) -> TypeRegistryEntry:
    """Entry by numeric id, code ('I_r.3'), alias ('IV.a') or symbol text."""
    if isinstance(ref, TypeRegistryEntry):
        return ref
    if isinstance(ref, int) or (isinstance(ref, str) and ref.isdigit()):
        try:
            return REGISTRY[int(ref)]
        except KeyError:
            raise UnknownSymbol(f"no registry entry with id {ref}", stage="taxonomy") from None
    if ref in _BY_CODE:
        return _BY_CODE[ref]
    return lookup(parse_symbol(ref))


def entries_of(parent: str):
    return [e for e in ENTRIES if e.parent == parent]


def lookup(symbol: RicciTypeSymbol) -> TypeRegistryEntry:
    try:
        return _BY_KEY[symbol.key()]
    except KeyError:
        raise UnknownSymbol(f"symbol {symbol.render()} matches no registered type", symbol=symbol.render(),
                            stage="taxonomy") from None


def edges():
    return [(e.id, s) for e in ENTRIES for s in e.successors]


def descendants(entry_id: int):
    seen, stack = set(), list(REGISTRY[entry_id].successors)
    while stack:
        s = stack.pop()
        if s not in seen:
            seen.add(s)
            stack.extend(REGISTRY[s].successors)
    return seen


def registry_document():
    return {
        "schema": REGISTRY_SCHEMA,
        "count": len(ENTRIES),
        "parents": list(PARENTS),
        "constraints": CONSTRAINTS,
        "parameters": {k: list(v) for k, v in PARAMETER_NAMES.items()},
        "entries": [e.as_dict() for e in ENTRIES],
    }


def registry_json(indent: int = 2) -> str:
    return json.dumps(registry_document(), indent=indent, sort_keys=False)
