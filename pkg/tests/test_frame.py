import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import fractions
from neutral_ricci.errors import AsymmetryViolation, ValidationError
from neutral_ricci.frame import (
    EPS,
    EPS_FLIPPED,
    NULL_METRIC,
    ORTHONORMAL_METRIC,
    STANDARD_K,
    STANDARD_L,
    CausalType,
    CovariantTensor,
    Tetrad,
    causal_type,
    convert_tensor,
    dictionary_identities,
    dyad_vectors,
    metric,
    random_frame_change,
    transform_tensor,
)


def sym(vals):
    it = iter(vals)
    rows = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i, 4):
            rows[i][j] = rows[j][i] = next(it)
    return rows


def test_metric_tables():
    assert [list(r) for r in metric(Tetrad.NULL)] == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    assert [list(r) for r in metric(Tetrad.ORTHONORMAL)] == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    g = np.array(NULL_METRIC, dtype=float)
    assert np.array_equal(g @ g, np.eye(4))


def test_tetrad_parse():
    assert Tetrad.parse("orthonormal") is Tetrad.ORTHONORMAL
    assert Tetrad.parse(Tetrad.NULL) is Tetrad.NULL
    with pytest.raises(ValueError):
        Tetrad.parse("lorentz")


def test_convert_zero_and_metric():
    assert convert_tensor(CovariantTensor.zero(), "orthonormal") == CovariantTensor.zero("orthonormal")
    g = CovariantTensor.from_rows(NULL_METRIC)
    assert [list(r) for r in convert_tensor(g, "orthonormal").components] == [list(r) for r in ORTHONORMAL_METRIC]


@given(st.lists(fractions(), min_size=10, max_size=10))
def test_convert_round_trip_exact(vals):
    C = CovariantTensor.from_rows(sym(vals))
    back = convert_tensor(convert_tensor(C, "orthonormal"), "null")
    assert back == C


@given(st.lists(st.floats(-100, 100), min_size=10, max_size=10))
def test_convert_round_trip_float(vals):
    C = CovariantTensor.from_rows(sym(vals))
    back = convert_tensor(convert_tensor(C, "orthonormal"), "null")
    assert np.max(np.abs(back.to_float() - C.to_float())) <= 1e-12 * max(1.0, C.max_abs())


def test_asymmetric_input_rejected():
    with pytest.raises(AsymmetryViolation):
        CovariantTensor.from_rows([[0, 1, 0, 0], [2, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


def test_fraction_strings_are_exact():
    C = CovariantTensor.from_rows(sym(["3/4", 0, 0, 0, 0, 0, 0, 0, 0, 0]))
    assert C.exact and C[0, 0] == F(3, 4)
    D = CovariantTensor.from_rows(sym([0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0]))
    assert not D.exact


@pytest.mark.parametrize("v, want", [
    ((1, 1, 0, 0), CausalType.SPACELIKE),
    ((1, 0, 0, 0), CausalType.NULL),
    ((1, -1, 0, 0), CausalType.TIMELIKE),
])
def test_causal_type_examples(v, want):
    assert causal_type(v) is want


def test_causal_type_orthonormal_and_zero():
    assert causal_type((0, 0, 1, 0), "orthonormal") is CausalType.TIMELIKE
    with pytest.raises(ValidationError):
        causal_type((0, 0, 0, 0))


@given(st.lists(fractions(), min_size=4, max_size=4).filter(any), fractions().filter(bool))
def test_causal_type_scale_invariant(v, lam):
    assert causal_type(v) is causal_type([lam * x for x in v])


def test_dictionary_identities_exact():
    for eps in (EPS, EPS_FLIPPED):
        r1, r2 = dictionary_identities(eps)
        assert all(x == 0 for row in r1 for x in row)
        assert all(x == 0 for x in r2.values())


def test_standard_dyad_reproduces_tetrad():
    e = dyad_vectors(STANDARD_K, STANDARD_L)
    basis = [tuple(1 if i == j else 0 for j in range(4)) for i in range(4)]
    for vec in e:
        # each leg is plus or minus one of the ambient legs
        assert any(vec == b or vec == tuple(-x for x in b) for b in basis)
    assert sorted(tuple(abs(x) for x in v) for v in e) == sorted(basis)


def test_swapping_dyad_swaps_legs():
    e = dyad_vectors(STANDARD_K, STANDARD_L)
    # k <-> l, with one sign flipped so the pair stays normalised
    f = dyad_vectors(tuple(-x for x in STANDARD_L), STANDARD_K)
    neg = lambda v: tuple(-x for x in v)  # noqa: E731
    assert (f[0], f[1]) == (neg(e[1]), neg(e[0]))
    assert (f[2], f[3]) == (neg(e[3]), neg(e[2]))


def test_dyad_normalisation():
    with pytest.raises(ValidationError):
        dyad_vectors((1, 0), (0, 1))  # k^A l_A = -1 under the default convention
    dyad_vectors((F(1), F(0)), (F(0), F(1)), eps=EPS_FLIPPED)
    assert EPS.contract((1, 0), (1, 1)) in (1, -1)
    dyad_vectors((F(1), F(0)), (F(-1), F(-1)))


def test_random_frame_change_preserves_metric(rng):
    g = [list(r) for r in NULL_METRIC]
    for _ in range(50):
        T = random_frame_change(rng)
        assert transform_tensor(CovariantTensor.from_rows(g), T) == CovariantTensor.from_rows(g)
