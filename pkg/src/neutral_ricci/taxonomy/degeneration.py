"""Degeneration edges between types, realised by one-parameter canonical families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from neutral_ricci.errors import EdgeViolation, UnknownSymbol
from neutral_ricci.taxonomy.canonical import CanonicalParams, canonical, draw, identify
from neutral_ricci.taxonomy.classify import classify
from neutral_ricci.taxonomy.registry import REGISTRY, descendants, edges, entries_of, get

Q = Fraction

# Test points along each family: the source must hold for every one of them.
EPSILONS = (Q(1, 10), Q(1, 100), Q(1, 1000), Q(1, 10**6))


@dataclass(frozen=True)
class Family:
    """params(eps) = base + eps * direction; ``sign`` picks the side where the source lives."""

    parent: str
    base: tuple
    direction: tuple
    sign: int = 1
    form: int = 1

    def at(self, eps) -> CanonicalParams:
        vals = tuple(Q(b) + self.sign * eps * Q(d) for b, d in zip(self.base, self.direction))
        return CanonicalParams(self.parent, vals, self.form)

    def limit(self) -> CanonicalParams:
        return CanonicalParams(self.parent, tuple(Q(b) for b in self.base), self.form)


def _shrink(entry_id: int) -> Family:
    """Uniform scaling of a fixed representative down to zero."""
    reps = {
        6: (1, 1, -1, -1), 7: (1, -1, 1, -1), 8: (-3, 1, 1, 1), 9: (1, 1, 1, -3),
        18: (1, 1, -1), 19: (3, -1, -1), 20: (-1, 3, -1),
    }
    e = REGISTRY[entry_id]
    d = reps[entry_id]
    return Family(e.parent, (0,) * len(d), d)


FAMILIES = {
    (1, 3): Family("I_r", (1, 1, 2, -4), (1, -1, 0, 0)),
    (1, 5): Family("I_r", (3, 1, -2, -2), (0, 0, 1, -1)),
    (1, 4): Family("I_r", (3, 1, 1, -5), (0, 1, -1, 0), 1),
    (2, 4): Family("I_r", (3, 1, 1, -5), (0, 1, -1, 0), -1),
    (3, 6): Family("I_r", (1, 1, -1, -1), (0, 0, 1, -1)),
    (3, 9): Family("I_r", (1, 1, 1, -3), (0, 0, 1, -1)),
    (5, 6): Family("I_r", (1, 1, -1, -1), (1, -1, 0, 0)),
    (5, 8): Family("I_r", (-3, 1, 1, 1), (1, -1, 0, 0)),
    (4, 9): Family("I_r", (1, 1, 1, -3), (1, 0, 0, -1)),
    (4, 8): Family("I_r", (-3, 1, 1, 1), (-1, 0, 0, 1)),
    (4, 7): Family("I_r", (1, -1, 1, -1), (0, 1, 0, -1)),
    (6, 10): _shrink(6),
    (7, 10): _shrink(7),
    (8, 10): _shrink(8),
    (9, 10): _shrink(9),
    (12, 13): Family("I_c", (0, 1, 0, 1), (1, 0, -1, 0)),
    (14, 15): Family("I_rc", (1, 1, -1, 1), (1, -1, 0, 0)),
    (16, 18): Family("II_r", (1, 1, -1), (1, -1, 0), -1),
    (17, 18): Family("II_r", (1, 1, -1), (1, -1, 0), 1),
    (16, 19): Family("II_r", (3, -1, -1), (-1, 1, 0), -1),
    (17, 19): Family("II_r", (3, -1, -1), (-1, 1, 0), 1),
    (16, 20): Family("II_r", (-1, 3, -1), (1, -1, 0), 1),
    (17, 20): Family("II_r", (-1, 3, -1), (1, -1, 0), -1),
    (18, 21): _shrink(18),
    (19, 21): _shrink(19),
    (20, 21): _shrink(20),
    (24, 25): Family("III_t", (0, 0), (-3, 1)),
    (26, 27): Family("III_s", (0, 0), (-3, 1)),
    (28, 30): Family("III_n", (0, 0), (1, -1), form=1),
    (29, 31): Family("III_n", (0, 0), (1, -1), form=2),
}


@dataclass(frozen=True)
class EdgeVerdict:
    source: int
    target: int
    observed_source: tuple
    observed_limit: int

    @property
    def ok(self) -> bool:
        return all(s == self.source for s in self.observed_source) and self.observed_limit == self.target


def _classify_params(p: CanonicalParams) -> int:
    return classify(canonical(p)).entry.id


def degeneration_check(source, target=None) -> EdgeVerdict:
    """Verify one edge: the family sits in ``source`` for small eps and lands on ``target`` at eps = 0.

    ``source`` may also be an (id, id) pair.  Raises EdgeViolation when
    the observed entries differ from the edge.
    """
    if target is None:
        source, target = source
    s, t = get(source).id, get(target).id
    if t not in REGISTRY[s].successors:
        raise EdgeViolation(f"{REGISTRY[s].code} -> {REGISTRY[t].code} is not a declared edge", stage="taxonomy")
    fam = FAMILIES[(s, t)]
    seen = tuple(_classify_params(fam.at(e)) for e in EPSILONS)
    limit = _classify_params(fam.limit())
    verdict = EdgeVerdict(s, t, seen, limit)
    if not verdict.ok:
        raise EdgeViolation(
            f"edge {REGISTRY[s].code} -> {REGISTRY[t].code}: family gives "
            f"{[REGISTRY[i].code for i in seen]} -> {REGISTRY[limit].code}", stage="taxonomy")
    return verdict


def check_all_edges():
    return [degeneration_check(e) for e in edges()]


# -- limit survey -------------------------------------------------------

def _direction(parent: str, rng: random.Random):
    r = lambda: Q(rng.randint(-9, 9), rng.randint(1, 3))  # noqa: E731
    if parent == "I_r":
        a, b, c = r(), r(), r()
        return (a, b, c, -(a + b + c))
    if parent == "I_c":
        x = r()
        return (x, r(), -x, r())
    if parent in ("I_rc", "II_r"):
        a, b = r(), r()
        return (a, b, -(a + b) / 2) + ((r(),) if parent == "I_rc" else ())
    if parent == "II_rc":
        x = r()
        return (x, r(), -x)
    if parent in ("III_t", "III_s"):
        b = r()
        return (-3 * b, b)
    if parent == "III_n":
        a = r()
        return (a, -a)
    return ()


@dataclass
class SurveyResult:
    checked: int = 0
    violations: list = None
    gaps: list = None

    def __post_init__(self):
        self.violations = self.violations or []
        self.gaps = self.gaps or []


def limit_survey(rng: random.Random, draws: int = 5, pushes: int = 4, eps=Q(1, 1000)) -> SurveyResult:
    """Perturb points of every type inside their parent family.

    Each perturbed point N must have the unperturbed type among N's type
    and its descendants; otherwise the limit lands outside the declared
    successor set.
    """
    out = SurveyResult()
    for entry in REGISTRY.values():
        for _ in range(draws):
            p = draw(entry, rng)
            for _ in range(pushes):
                d = _direction(p.parent, rng)
                near = CanonicalParams(p.parent, tuple(a + eps * b for a, b in zip(p.values, d)), p.form)
                try:
                    n = _classify_params(near)
                except UnknownSymbol:
                    out.gaps.append((near.parent, near.values))
                    continue
                out.checked += 1
                if entry.id != n and entry.id not in descendants(n):
                    out.violations.append((n, entry.id, near.values))
    return out


def restricted_limit_check(rng: random.Random, draws: int = 50, eps=Q(1, 1000)):
    """Near every [D]_r x [D]_c point of the I_c family only I_c.2 or I_c.3 occur.

    Returns the list of I_c subtype ids seen around those points; I_c.1
    (id 11) never appearing means it admits no limit to I_c.3.
    """
    target = get("I_c.3")
    seen = set()
    for _ in range(draws):
        p = draw(target, rng)
        for _ in range(4):
            d = _direction("I_c", rng)
            near = CanonicalParams("I_c", tuple(a + eps * b for a, b in zip(p.values, d)))
            seen.add(_classify_params(near))
    return sorted(seen)


def unregistered_limit(y=Q(1)):
    """The I_c point ReZ1 = 0, ImZ1 = -ImZ2; approached only from I_c.1."""
    p = CanonicalParams("I_c", (Q(0), Q(y), Q(0), -Q(y)))
    return p, identify(p)


__all__ = [
    "EPSILONS",
    "FAMILIES",
    "EdgeVerdict",
    "Family",
    "SurveyResult",
    "check_all_edges",
    "degeneration_check",
    "entries_of",
    "limit_survey",
    "restricted_limit_check",
    "unregistered_limit",
]
