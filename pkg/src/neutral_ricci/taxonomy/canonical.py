"""Canonical null-tetrad forms of every parent Type, parameter draws and
the sign criteria that predict the Petrov-Penrose pair.

All forms are written in the null tetrad; ``e_a e_b`` means the component
C_ab = 1 (plus its mirror for a != b).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from neutral_ricci.errors import ConstraintViolation, DegeneracyViolation, NotApplicable, ValidationError
from neutral_ricci.frame import CovariantTensor, Tetrad
from neutral_ricci.plebanski import PPType
from neutral_ricci.scalars import parse_scalar, sgn
from neutral_ricci.taxonomy.registry import PARAMETER_NAMES, PARENTS, REGISTRY, TypeRegistryEntry, get

Q = Fraction


@dataclass(frozen=True)
class CanonicalParams:
    parent: str
    values: tuple = ()
    form: int = 1
    subtype: int | None = None  # registry id the caller asks for, checked when set

    def __post_init__(self):
        if self.parent not in PARENTS:
            raise ValidationError(f"unknown parent Type {self.parent!r}", stage="canonical")
        want = len(PARAMETER_NAMES[self.parent])
        if len(self.values) != want:
            raise ValidationError(f"{self.parent} takes {want} parameters, got {len(self.values)}",
                                  stage="canonical")
        object.__setattr__(self, "values", tuple(parse_scalar(v) for v in self.values))

    def named(self):
        return dict(zip(PARAMETER_NAMES[self.parent], self.values))


def _tensor(entries, label=None):
    c = [[Q(0)] * 4 for _ in range(4)]
    for (a, b), v in entries.items():
        c[a - 1][b - 1] += v
        if a != b:
            c[b - 1][a - 1] += v
    exact = all(isinstance(x, Fraction) for r in c for x in r)
    if not exact:
        c = [[float(x) for x in r] for r in c]
    return CovariantTensor(tuple(tuple(r) for r in c), Tetrad.NULL, label)


def _block(r1, r2, lo):
    """Diagonal pair r1 E E + r2 E E written in the null legs (lo, lo+1)."""
    return {(lo, lo): (r1 - r2) / 2, (lo + 1, lo + 1): (r1 - r2) / 2, (lo, lo + 1): (r1 + r2) / 2}


def _complex_block(x, y, lo):
    return {(lo, lo + 1): x, (lo, lo): -y, (lo + 1, lo + 1): y}


def check_constraint(p: CanonicalParams):
    v = p.values
    zero = 0
    if p.parent == "I_r":
        ok = sum(v) == zero
    elif p.parent == "I_c":
        ok = v[0] + v[2] == zero
        if ok and (v[1] == 0 or v[3] == 0):
            raise DegeneracyViolation("complex eigenvalues need nonzero imaginary parts", stage="canonical")
    elif p.parent == "I_rc":
        ok = v[0] + v[1] + 2 * v[2] == zero
        if ok and v[3] == 0:
            raise DegeneracyViolation("ImZ must be nonzero", stage="canonical")
    elif p.parent == "II_r":
        ok = v[0] + v[1] + 2 * v[2] == zero
    elif p.parent == "II_rc":
        ok = v[2] + v[0] == zero
        if ok and v[1] == 0:
            raise DegeneracyViolation("ImZ must be nonzero", stage="canonical")
    elif p.parent in ("III_t", "III_s"):
        ok = v[0] + 3 * v[1] == zero
    elif p.parent == "III_n":
        ok = v[0] + v[1] == zero
    else:
        ok = True
    if p.parent in ("III_n", "IV") and p.form not in (1, 2):
        raise ValidationError("form must be 1 or 2", stage="canonical")
    if not ok:
        raise ConstraintViolation(f"{p.parent} parameters {p.values} violate the trace constraint",
                                  stage="canonical")


def identify(p: CanonicalParams) -> int | None:
    """Registry id that the parameter conditions single out (None off-registry)."""
    v = p.values
    par = p.parent
    if par == "I_r":
        r1, r2, r3, r4 = v
        vals = [r1, r2, r3, r4]
        distinct = set(vals)
        if distinct == {0}:
            return 10
        if len(distinct) == 4:
            return 1 if sigma1(r1, r2, r3, r4) > 0 else 2
        if len(distinct) == 3:
            if r1 == r2:
                return 3
            if r3 == r4:
                return 5
            return 4
        counts = sorted(vals.count(x) for x in distinct)
        if counts == [2, 2]:
            return 6 if r1 == r2 else 7
        lone = next(i for i, x in enumerate(vals) if vals.count(x) == 1)
        return 8 if lone < 2 else 9
    if par == "I_c":
        x1, y1, x2, y2 = v
        if x1 == 0 and y1 == y2:
            return 13
        if x1 == 0 and y1 == -y2:
            return None
        return 11 if y1 * y2 < 0 else 12
    if par == "I_rc":
        return 15 if v[0] == v[1] else 14
    if par == "II_r":
        r1, r2, r3 = v
        if r1 == r2 == r3:
            return 21
        if r1 == r2:
            return 18
        if r2 == r3:
            return 19
        if r1 == r3:
            return 20
        return 16 if sigma2(r1, r2, r3) < 0 else 17
    if par == "II_rc":
        return 22 if v[1] > 0 else 23
    if par == "III_t":
        return 24 if v[1] != 0 else 25
    if par == "III_s":
        return 26 if v[1] != 0 else 27
    if par == "III_n":
        if p.form == 1:
            return 28 if v[0] != 0 else 30
        return 29 if v[0] != 0 else 31
    return 32 if p.form == 1 else 33


def canonical(p: CanonicalParams) -> CovariantTensor:
    """The canonical null-tetrad component table of the requested type."""
    check_constraint(p)
    if p.subtype is not None:
        want = get(p.subtype).id
        got = identify(p)
        if got != want:
            raise DegeneracyViolation(
                f"parameters {p.values} describe {REGISTRY[got].code if got else 'no registered type'}, "
                f"not {REGISTRY[want].code}", stage="canonical")
    v = p.values
    par = p.parent
    c: dict = {}

    def put(d):
        for k, x in d.items():
            c[k] = c.get(k, 0) + x

    if par == "I_r":
        put(_block(v[0], v[2], 1))
        put(_block(v[1], v[3], 3))
    elif par == "I_c":
        put(_complex_block(v[0], v[1], 3))
        put(_complex_block(v[2], v[3], 1))
    elif par == "I_rc":
        put(_block(v[0], v[1], 1))
        put(_complex_block(v[2], v[3], 3))
    elif par == "II_r":
        put(_block(v[0], v[1], 1))
        put({(3, 4): v[2], (4, 4): 1})
    elif par == "II_rc":
        put(_complex_block(v[0], v[1], 1))
        put({(3, 4): v[2], (4, 4): 1})
    elif par == "III_t":
        r1, r2 = v
        put({(1, 2): (r2 + r1) / 2, (1, 1): (r2 - r1) / 2, (2, 2): (r2 - r1) / 2, (3, 4): r2, (1, 4): 1, (2, 4): 1})
    elif par == "III_s":
        r1, r2 = v
        put({(1, 1): (r1 - r2) / 2, (2, 2): (r1 - r2) / 2, (1, 2): (r1 + r2) / 2, (3, 4): r2,
             (1, 4): 1, (2, 4): -1})
    elif par == "III_n":
        lead = (1, 1) if p.form == 1 else (2, 2)
        put({lead: 1, (4, 4): 1, (3, 4): v[0], (1, 2): v[1]})
    else:
        if p.form == 1:
            put({(1, 1): 1, (2, 4): 1})
        else:
            put({(2, 2): 1, (1, 4): 1})
    c = {k: (Q(x) if isinstance(x, int) else x) for k, x in c.items()}
    return _tensor(c, label=REGISTRY[identify(p)].code if identify(p) else p.parent)


# -- sign criteria --------------------------------------------------------

def sigma1(r1, r2, r3, r4=None):
    """(R3-R1)(R3-R2)(R3+R1+2R2)(R3+2R1+R2); with R4 = -(R1+R2+R3)."""
    return (r3 - r1) * (r3 - r2) * (r3 + r1 + 2 * r2) * (r3 + 2 * r1 + r2)


def sigma2(r1, r2, r3=None):
    """(R1-R2)(3R1+R2)(R1+3R2)."""
    return (r1 - r2) * (3 * r1 + r2) * (r1 + 3 * r2)


def sigma_criteria(p: CanonicalParams):
    """Petrov-Penrose pair predicted by the sign criteria alone."""
    v = p.values
    if p.parent == "I_r":
        if len(set(v)) == 4:
            return (PPType.I_c, PPType.I_c) if sigma1(*v) > 0 else (PPType.I_r, PPType.I_r)
        return REGISTRY[identify(p)].pp
    if p.parent == "I_c":
        x1, y1, _, y2 = v
        if x1 == 0 and y1 == y2:
            return PPType.D_r, PPType.D_c
        if x1 == 0 and y1 == -y2:
            return PPType.D_c, PPType.D_r
        return (PPType.I_c, PPType.I_r) if y1 * y2 < 0 else (PPType.I_r, PPType.I_c)
    if p.parent == "I_rc":
        return (PPType.D_r, PPType.D_r) if v[0] == v[1] else (PPType.I_rc, PPType.I_rc)
    if p.parent == "II_r":
        if len(set(v)) == 3:
            return (PPType.II_r, PPType.II_r) if sigma2(*v) > 0 else (PPType.II_rc, PPType.II_rc)
        return REGISTRY[identify(p)].pp
    if p.parent == "II_rc":
        return (PPType.II_r, PPType.II_rc) if sgn(v[1]) > 0 else (PPType.II_rc, PPType.II_r)
    raise NotApplicable(f"no sign criterion for parent {p.parent}", stage="taxonomy")


# -- random draws -------------------------------------------------------

def _rq(rng: random.Random, bound: int = 10, nonzero: bool = False):
    while True:
        den = rng.randint(1, 4)
        x = Q(rng.randint(-bound * den, bound * den), den)
        if not nonzero or x != 0:
            return x


def _small(params, bound=10):
    return all(abs(x) <= bound for x in params)


def draw(entry, rng: random.Random, bound: int = 10, max_tries: int = 10000) -> CanonicalParams:
    """Random rational parameters (|value| <= bound) realising ``entry``."""
    e: TypeRegistryEntry = get(entry)
    for _ in range(max_tries):
        p = _propose(e, rng, bound)
        if p is not None and _small(p.values, bound) and identify(p) == e.id:
            return CanonicalParams(p.parent, p.values, p.form, e.id)
    raise RuntimeError(f"could not draw parameters for {e.code}")  # pragma: no cover


def _propose(e: TypeRegistryEntry, rng, bound):
    r = lambda nz=False: _rq(rng, bound, nz)  # noqa: E731
    s = e.subtype
    par = e.parent
    if par == "I_r":
        if s in (1, 2):
            a, b, c = r(), r(), r()
            vals = (a, b, c, -(a + b + c))
        elif s == 3:
            a, b = r(), r()
            vals = (a, a, b, -2 * a - b)
        elif s == 4:
            a, b = r(), r()
            vals = (b, a, a, -b - 2 * a) if rng.random() < 0.5 else (a, b, -b - 2 * a, a)
        elif s == 5:
            a, b = r(), r()
            vals = (b, -b - 2 * a, a, a)
        elif s == 6:
            a = r(True)
            vals = (a, a, -a, -a)
        elif s == 7:
            a = r(True)
            vals = (a, -a, a, -a) if rng.random() < 0.5 else (a, -a, -a, a)
        elif s == 8:
            b = r(True)
            vals = (-3 * b, b, b, b) if rng.random() < 0.5 else (b, -3 * b, b, b)
        elif s == 9:
            b = r(True)
            vals = (b, b, -3 * b, b) if rng.random() < 0.5 else (b, b, b, -3 * b)
        else:
            vals = (Q(0),) * 4
        return CanonicalParams(par, vals)
    if par == "I_c":
        x = r()
        y1 = r(True)
        if s == 3:
            return CanonicalParams(par, (Q(0), y1, Q(0), y1))
        y2 = r(True)
        if s == 1:
            y2 = -abs(y2) if y1 > 0 else abs(y2)
        else:
            y2 = abs(y2) if y1 > 0 else -abs(y2)
        return CanonicalParams(par, (x, y1, -x, y2))
    if par == "I_rc":
        a, b, y = r(), r(), r(True)
        if s == 2:
            b = a
        return CanonicalParams(par, (a, b, -(a + b) / 2, y))
    if par == "II_r":
        a, b = r(), r()
        if s == 3:
            b = a
        elif s == 4:
            b = -a / 3  # R2 = R3 = -R1/3
        elif s == 5:
            a = -b / 3  # R1 = R3 = -R2/3
        elif s == 6:
            a = b = Q(0)
        return CanonicalParams(par, (a, b, -(a + b) / 2))
    if par == "II_rc":
        x, y = r(), abs(r(True))
        return CanonicalParams(par, (x, y if s == 1 else -y, -x))
    if par in ("III_t", "III_s"):
        b = r(True) if s == 1 else Q(0)
        return CanonicalParams(par, (-3 * b, b))
    if par == "III_n":
        a = r(True) if s in (1, 2) else Q(0)
        return CanonicalParams(par, (a, -a), form=e.form)
    return CanonicalParams(par, (), form=e.form)
