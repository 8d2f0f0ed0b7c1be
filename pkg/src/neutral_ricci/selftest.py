"""Self-test sweeps shared by the CLI and the acceptance suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from neutral_ricci import polynomial as poly
from neutral_ricci.quartic import DepressedQuartic, RootPattern, classify_real, exact_pattern, invariants, roots_oracle
from neutral_ricci.taxonomy import ENTRIES, REGISTRY, canonical, classify, draw, edges, limit_survey
from neutral_ricci.taxonomy.degeneration import degeneration_check, restricted_limit_check

Q = Fraction


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self):
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "seconds": round(self.seconds, 3),
                "stats": self.stats, "failures": [str(f) for f in self.failures[:50]]}


# -- quartic fuzz ------------------------------------------------------------

def _rq(rng, num=20, den=4):
    return Q(rng.randint(-num, num), rng.randint(1, den))


def _from_roots(rng) -> DepressedQuartic:
    """Depressed quartic with a prescribed real root pattern."""
    shape = rng.choice([p.shape for p in RootPattern if not p.is_complex_mode])
    p = [Q(1)]
    pairs = 0
    for mult, kind in shape:
        if kind == "R":
            f = [-_rq(rng, 6, 2), Q(1)]
        else:
            # conjugate pairs show up twice in the shape; build each pair once
            pairs += 1
            if pairs % 2 == 0:
                continue
            a, b = _rq(rng, 6, 2), _rq(rng, 6, 2) or Q(1)
            f = [a * a + b * b, -2 * a, Q(1)]
        for _ in range(mult):
            p = poly.mul(p, f)
    shift = -p[3] / 4
    # p(x + shift), constant first
    shifted = [sum(p[k] * comb(k, j) * shift ** (k - j) for k in range(j, 5)) for j in range(5)]
    return DepressedQuartic(shifted[2], -shifted[1], shifted[0])


def random_quartic(rng: random.Random, structured: float = 0.3) -> DepressedQuartic:
    if rng.random() < structured:
        return _from_roots(rng)
    return DepressedQuartic(_rq(rng), _rq(rng), _rq(rng))


def quartic_fuzz(n: int, rng: random.Random, classifier=classify_real) -> SweepResult:
    """Invariant-chain pattern vs clustered numeric roots on ``n`` rational quartics.

    A confident oracle that disagrees is a failure.  Unconfident cases are
    disagreement candidates: each must have Delta = 0 exactly and be settled
    by the exact square-free/Sturm route.
    """
    res = SweepResult("quartic_oracle")
    t0 = time.perf_counter()
    confident = candidates = zero_delta = escalated = 0
    for _ in range(n):
        q = random_quartic(rng)
        pat = classifier(q)
        ora = roots_oracle(q)
        delta = invariants(q).Delta
        zero_delta += delta == 0
        escalated += ora.escalated
        res.checked += 1
        if ora.confident:
            confident += 1
            if ora.pattern != pat:
                res.failures.append(f"{q}: table {pat.value}, oracle {ora.pattern.value}")
            elif delta == 0 and exact_pattern(q) != pat:
                res.failures.append(f"{q}: exact route disagrees on repeated-root quartic")
            continue
        candidates += 1
        if delta != 0:
            res.failures.append(f"{q}: unconfident oracle with Delta != 0")
        elif exact_pattern(q) != pat:
            res.failures.append(f"{q}: exact route gives {exact_pattern(q).value}, table {pat.value}")
    res.stats = {"confident": confident, "candidates": candidates, "delta_zero": zero_delta,
                 "escalated": escalated}
    res.seconds = time.perf_counter() - t0
    return res


# -- taxonomy sweeps -------------------------------------------------------------

def roundtrip(per_entry: int, rng: random.Random) -> SweepResult:
    res = SweepResult("registry_roundtrip")
    t0 = time.perf_counter()
    for e in ENTRIES:
        for _ in range(per_entry):
            p = draw(e, rng)
            res.checked += 1
            try:
                got = classify(canonical(p)).entry.id
            except Exception as exc:  # noqa: BLE001 - report everything
                res.failures.append(f"{e.code} {p.values}: {exc}")
                continue
            if got != e.id:
                res.failures.append(f"{e.code} {p.values}: classified as {REGISTRY[got].code}")
    res.seconds = time.perf_counter() - t0
    return res


def degeneration(rng: random.Random, survey_draws: int = 0) -> SweepResult:
    res = SweepResult("degeneration_closure")
    t0 = time.perf_counter()
    for edge in edges():
        res.checked += 1
        try:
            degeneration_check(edge)
        except Exception as exc:  # noqa: BLE001
            res.failures.append(str(exc))
    seen = restricted_limit_check(rng, draws=5)
    res.checked += 1
    if 11 in seen:
        res.failures.append("I_c.1 reached a [D]_r x [D]_c point")
    if survey_draws:
        s = limit_survey(rng, draws=survey_draws, pushes=3)
        res.checked += s.checked
        res.failures += [f"{REGISTRY[a].code} limits to {REGISTRY[b].code} at {v}" for a, b, v in s.violations]
    res.seconds = time.perf_counter() - t0
    return res


def registry_count() -> SweepResult:
    res = SweepResult("registry_count", checked=1)
    if len(REGISTRY) != 33:
        res.failures.append(f"registry holds {len(REGISTRY)} entries")
    return res


def run(full: bool = False, seed: int = 0):
    rng = random.Random(seed)
    sweeps = [
        registry_count(),
        roundtrip(100 if full else 3, rng),
        degeneration(rng, survey_draws=5 if full else 0),
        quartic_fuzz(100_000 if full else 2_000, rng),
    ]
    return all(s.ok for s in sweeps), sweeps
