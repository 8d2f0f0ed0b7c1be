"""Acceptance criteria 1-7.

Each test prints one PASS/FAIL line.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary lines.
"""

import random
import sys
import time
from collections import Counter, defaultdict
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from closed_forms import expected  # noqa: E402
from neutral_ricci.frame import Tetrad, convert_tensor  # noqa: E402
from neutral_ricci.plebanski import PPType, plebanski_pair, pp_pair, spinor_image  # noqa: E402
from neutral_ricci.selftest import quartic_fuzz  # noqa: E402
from neutral_ricci.taxonomy import (  # noqa: E402
    ENTRIES,
    PARENTS,
    REGISTRY,
    CanonicalParams,
    canonical,
    classify,
    degeneration_check,
    draw,
    edges,
    entries_of,
    restricted_limit_check,
    sigma_criteria,
)

SEED = 20261015


def report(number, title, ok, detail, capsys=None):
    line = f"criterion {number} {title}: {'PASS' if ok else 'FAIL'} ({detail})"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


# -- 1 ------------------------------------------------------------------------

def criterion_1():
    counts = Counter(e.parent for e in ENTRIES)
    want = dict(zip(("I_r", "I_c", "I_rc", "II_r", "II_rc", "III_t", "III_s", "III_n", "IV"),
                    (10, 3, 2, 6, 2, 2, 2, 4, 2)))
    ok = len(REGISTRY) == 33 and set(PARENTS) == set(want) and dict(counts) == want
    return ok, f"{len(REGISTRY)} types, {len(counts)} parents, counts {[counts[p] for p in want]}"


# -- 2 ------------------------------------------------------------------------

def criterion_2(per_entry=100):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    failures = []
    for e in ENTRIES:
        for _ in range(per_entry):
            p = draw(e, rng, bound=10)
            assert all(isinstance(x, F) and abs(x) <= 10 for x in p.values)
            try:
                got = classify(canonical(p))
            except Exception as exc:  # noqa: BLE001
                failures.append((e.code, p.values, repr(exc)))
                continue
            if got.entry is not e or not got.exact:
                failures.append((e.code, p.values, got.entry.code))
    dt = time.perf_counter() - t0
    return not failures and dt < 30, f"{33 * per_entry} draws, {len(failures)} failures, {dt:.1f} s"


# -- 3 ------------------------------------------------------------------------

def criterion_3(n=100_000):
    res = quartic_fuzz(n, random.Random(SEED))
    s = res.stats
    ok = res.ok and res.seconds < 60
    return ok, (f"{n} quartics, {s['confident']} high-confidence, {s['candidates']} candidates, "
                f"{s['escalated']} escalated, {len(res.failures)} failures, {res.seconds:.1f} s")


# -- 4 ------------------------------------------------------------------------

def criterion_4(per_parent=20):
    rng = random.Random(SEED)
    mismatches = []
    for parent in PARENTS:
        subtypes = entries_of(parent)
        for i in range(per_parent):
            p = draw(subtypes[i % len(subtypes)], rng)
            und, dot = plebanski_pair(spinor_image(canonical(p)))
            a, b = expected(parent, p.values, p.form)
            if und.components != tuple(a) or dot.components != tuple(b):
                mismatches.append((parent, p.values))
    return not mismatches, f"{9 * per_parent} draws, {len(mismatches)} mismatches"


# -- 5 ------------------------------------------------------------------------

def _rq(rng):
    return F(rng.randint(-40, 40), rng.randint(1, 4))


def _cell_fixture(cell, rng):
    """Random nondegenerate parameters and the sign that places them in a cell."""
    if cell[0] == "I_r":
        a, b, c = _rq(rng), _rq(rng), _rq(rng)
        v = (a, b, c, -(a + b + c))
        if len(set(v)) < 4:
            return None
        r1, r2, r3, _ = v
        s = (r3 - r1) * (r3 - r2) * (r3 + r1 + 2 * r2) * (r3 + 2 * r1 + r2)
        pred = (PPType.I_c, PPType.I_c) if s > 0 else (PPType.I_r, PPType.I_r)
    elif cell[0] == "I_c":
        x, y1, y2 = _rq(rng), _rq(rng), _rq(rng)
        if y1 == 0 or y2 == 0 or (x == 0 and abs(y1) == abs(y2)):
            return None
        v = (x, y1, -x, y2)
        s = y1 * y2
        pred = (PPType.I_r, PPType.I_c) if s > 0 else (PPType.I_c, PPType.I_r)
    elif cell[0] == "II_r":
        a, b = _rq(rng), _rq(rng)
        v = (a, b, -(a + b) / 2)
        if len(set(v)) < 3:
            return None
        s = (a - b) * (3 * a + b) * (a + 3 * b)
        pred = (PPType.II_r, PPType.II_r) if s > 0 else (PPType.II_rc, PPType.II_rc)
    else:
        x, y = _rq(rng), _rq(rng)
        if y == 0:
            return None
        v = (x, y, -x)
        s = y
        pred = (PPType.II_r, PPType.II_rc) if s > 0 else (PPType.II_rc, PPType.II_r)
    if (s > 0) != (cell[1] > 0) or s == 0:
        return None
    return CanonicalParams(cell[0], v), pred


def criterion_5(per_cell=20):
    rng = random.Random(SEED)
    cells = [(p, s) for p in ("I_r", "I_c", "II_r", "II_rc") for s in (1, -1)]
    tested = defaultdict(int)
    mismatches = []
    for cell in cells:
        while tested[cell] < per_cell:
            fx = _cell_fixture(cell, rng)
            if fx is None:
                continue
            p, pred = fx
            computed = pp_pair(canonical(p))
            if sigma_criteria(p) != computed or pred != computed:
                mismatches.append((cell, p.values))
            tested[cell] += 1
    ok = not mismatches and all(tested[c] >= per_cell for c in cells)
    return ok, f"{len(cells)} cells x {per_cell} fixtures, {len(mismatches)} mismatches"


# -- 6 ------------------------------------------------------------------------

def criterion_6():
    failures = []
    for e in edges():
        try:
            degeneration_check(e)
        except Exception as exc:  # noqa: BLE001
            failures.append(str(exc))
    seen = restricted_limit_check(random.Random(SEED), draws=40)
    restricted = 11 not in seen and 13 in REGISTRY[12].successors and 13 not in REGISTRY[11].successors
    return not failures and restricted, (f"{len(edges())} edges, {len(failures)} failures; "
                                         f"I_c subtypes near [D]_r x [D]_c points: {[REGISTRY[i].code for i in seen]}")


# -- 7 ------------------------------------------------------------------------

def criterion_7(n=1000):
    rng = random.Random(SEED)
    diffs = []
    for _ in range(n):
        e = rng.choice(ENTRIES)
        C = canonical(draw(e, rng))
        a = classify(C)
        b = classify(convert_tensor(C, Tetrad.ORTHONORMAL))
        if a.entry is not b.entry or a.symbol.render() != b.symbol.render() or a.entry is not e:
            diffs.append((e.code, a.entry.code, b.entry.code))
    return not diffs, f"{n} fixtures, {len(diffs)} differences"


CRITERIA = [
    (1, "registry cardinality", criterion_1),
    (2, "round-trip exactness", criterion_2),
    (3, "quartic criteria vs oracle", criterion_3),
    (4, "Plebanski closed forms", criterion_4),
    (5, "criterion equivalence", criterion_5),
    (6, "degeneration closure", criterion_6),
    (7, "frame covariance", criterion_7),
]


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ok, detail = fn()
    assert report(number, title, ok, detail, capsys), detail


if __name__ == "__main__":
    results = [report(n, t, *fn()) for n, t, fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
