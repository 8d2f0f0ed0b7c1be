from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import fractions, seeded_rngs
from neutral_ricci.quartic import (
    DepressedQuartic,
    RootPattern,
    classify_complex,
    classify_real,
    depress,
    discriminant_from_roots,
    exact_pattern,
    invariants,
    roots_oracle,
)
from neutral_ricci.selftest import _from_roots, quartic_fuzz


def q(c2, c3, c4):
    return DepressedQuartic(F(c2), F(c3), F(c4))


def test_invariants_of_zero_quartic():
    inv = invariants(q(0, 0, 0))
    assert all(v == 0 for v in inv.as_dict().values())


def test_invariants_hand_values():
    inv = invariants(q(2, 0, 1))
    assert (inv.I, inv.J, inv.K, inv.N, inv.Delta) == (F(4, 3), F(8, 27), 0, 0, 0)
    inv = invariants(q(0, 0, -1))
    assert (inv.I, inv.J, inv.Delta) == (-1, 0, -256)


def test_delta_identity():
    for c in [(2, 0, 1), (-5, 0, 4), (1, 3, -2), (F(1, 3), F(-7, 2), 5)]:
        inv = invariants(q(*c))
        assert inv.Delta == 256 * (inv.I ** 3 - 27 * inv.J ** 2)


@pytest.mark.parametrize("coeffs, pattern", [
    ((0, 0, -1), RootPattern.R1R2ZZbar),
    ((-5, 0, 4), RootPattern.R1R2R3R4),
    ((2, 0, 1), RootPattern.Z_2Zbar_2),
    ((0, 0, 0), RootPattern.R_4),
    ((-2, 0, 1), RootPattern.R1_2R2_2),
    ((-6, -8, -3), RootPattern.R1R2_3),
    ((1, 0, 0), RootPattern.R_2ZZbar),
    ((-1, 0, 0), RootPattern.R1R2R3_2),
    ((5, 0, 4), RootPattern.Z1Z1barZ2Z2bar),
])
def test_table_two_examples(coeffs, pattern):
    assert classify_real(q(*coeffs)) is pattern
    assert exact_pattern(q(*coeffs)) is pattern


@pytest.mark.parametrize("coeffs, pattern", [
    ((0, 0, -1), RootPattern.Z1Z2Z3Z4),
    ((2, 0, 1), RootPattern.Z1_2Z2_2),
    ((0, 0, 0), RootPattern.Z_4),
    ((-6, -8, -3), RootPattern.Z1Z2_3),
    ((1, 0, 0), RootPattern.Z1Z2Z3_2),
])
def test_table_three_examples(coeffs, pattern):
    assert classify_complex(q(*coeffs)) is pattern


def test_complex_coefficients():
    # (x - i)^2 (x + i)^2 shifted is real; (x^2 - i)^2 = x^4 - 2i x^2 - 1 has two double roots
    assert classify_complex(DepressedQuartic(-2j, 0, -1)) is RootPattern.Z1_2Z2_2
    assert classify_complex(DepressedQuartic(1j, 2, 3)) is RootPattern.Z1Z2Z3Z4


@pytest.mark.parametrize("coeffs, roots", [
    ((0, 0, -1), [1, -1, 1j, -1j]),
    ((0, 0, 0), [0, 0, 0, 0]),
    ((-5, 0, 4), [1, -1, 2, -2]),
])
def test_oracle_roots(coeffs, roots):
    res = roots_oracle(q(*coeffs))
    got = sorted(res.roots, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    want = sorted((complex(r) for r in roots), key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    assert np.allclose(got, want, atol=1e-6)
    assert res.confident


def test_float_signs_use_scaled_band():
    assert classify_real(DepressedQuartic(-5.0, 1e-13, 4.0)) is RootPattern.R1R2R3R4
    # (x^2 - 1)^2 perturbed below tolerance still reads as a double-double
    assert classify_real(DepressedQuartic(-2.0, 0.0, 1.0 + 1e-14)) is RootPattern.R1_2R2_2


def test_depress_shifts_roots():
    # (x-1)(x-2)(x-3)(x-4)
    dq = depress([24, -50, 35, -10, 1])
    assert classify_real(dq) is RootPattern.R1R2R3R4
    dq = depress([F(1), F(-4), F(6), F(-4), F(1)])  # (x-1)^4
    assert classify_real(dq) is RootPattern.R_4


@given(fractions(), fractions(), fractions())
def test_negating_c3_keeps_pattern(c2, c3, c4):
    assert classify_real(q(c2, c3, c4)) is classify_real(q(c2, -c3, c4))


@given(fractions(), fractions(), fractions())
def test_table_matches_sturm_route(c2, c3, c4):
    assert classify_real(q(c2, c3, c4)) is exact_pattern(q(c2, c3, c4))


@given(seeded_rngs())
def test_repeated_root_quartics(rnd):
    dq = _from_roots(rnd)
    assert classify_real(dq) is exact_pattern(dq)
    assert roots_oracle(dq).pattern is classify_real(dq)


@given(st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10))
def test_delta_two_ways(c2, c3, c4):
    dq = DepressedQuartic(c2, c3, c4)
    d1 = invariants(dq).Delta
    d2 = discriminant_from_roots(roots_oracle(dq).roots)
    scale = max(1.0, abs(c2) ** 6, abs(c3) ** 4, abs(c4) ** 3)
    assert abs(d1 - d2.real) <= 1e-8 * scale
    assert abs(d2.imag) <= 1e-8 * scale


def test_fuzz_small():
    import random

    res = quartic_fuzz(500, random.Random(4))
    assert res.ok, res.failures[:3]


def test_fuzz_catches_flipped_branch():
    import random

    def flipped(dq):
        pat = classify_real(dq)
        swap = {RootPattern.R1R2R3R4: RootPattern.Z1Z1barZ2Z2bar, RootPattern.Z1Z1barZ2Z2bar: RootPattern.R1R2R3R4}
        return swap.get(pat, pat)

    res = quartic_fuzz(300, random.Random(4), classifier=flipped)
    assert not res.ok
    assert any("oracle" in f for f in res.failures)


def test_integer_coefficients_stay_exact():
    dq = DepressedQuartic(F(-289, 4), 0, 0)
    assert dq.exact and isinstance(dq.c3, F)
    assert invariants(dq).Delta == 0
    assert classify_real(dq) is RootPattern.R1R2R3_2


def test_close_roots_escalate_to_high_precision():
    from neutral_ricci import polynomial as poly

    d = F(1, 10**5)
    roots = [F(1), 1 + d, F(-3), 1 - d]
    p = [F(1)]
    for r in roots:
        p = poly.mul(p, [-r, F(1)])
    shift = -p[3] / 4  # roots already sum to zero
    assert shift == 0
    dq = DepressedQuartic(p[2], -p[1], p[0])
    res = roots_oracle(dq)
    assert res.escalated and res.confident
    assert res.pattern is classify_real(dq) is RootPattern.R1R2R3R4
