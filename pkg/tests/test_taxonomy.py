import json
import random
from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import seeded_rngs
from neutral_ricci import classify
from neutral_ricci.errors import (
    ConstraintViolation,
    DegeneracyViolation,
    EdgeViolation,
    NotApplicable,
    TraceViolation,
    UnknownSymbol,
    ValidationError,
)
from neutral_ricci.frame import EPS_FLIPPED, CovariantTensor, Tetrad, random_frame_change, transform_tensor
from neutral_ricci.plebanski import PPType
from neutral_ricci.taxonomy import (
    ENTRIES,
    PARENTS,
    REGISTRY,
    CanonicalParams,
    canonical,
    degeneration_check,
    descendants,
    draw,
    edges,
    get,
    identify,
    limit_survey,
    lookup,
    parse_symbol,
    registry_json,
    restricted_limit_check,
    sigma1,
    sigma2,
    sigma_criteria,
)
from neutral_ricci.taxonomy.degeneration import unregistered_limit

P = CanonicalParams


def components(C):
    return [[C[i, j] for j in range(4)] for i in range(4)]


# -- registry ---------------------------------------------------------------

def test_registry_counts():
    assert len(REGISTRY) == 33
    assert len(PARENTS) == 9
    counts = Counter(e.parent for e in ENTRIES)
    assert [counts[p] for p in ("I_r", "I_c", "I_rc", "II_r", "II_rc", "III_t", "III_s", "III_n", "IV")] == \
        [10, 3, 2, 6, 2, 2, 2, 4, 2]


def test_registry_keys_distinct_and_templates_round_trip():
    assert len({e.key() for e in ENTRIES}) == 33
    for e in ENTRIES:
        assert lookup(parse_symbol(e.template)) is e
        assert parse_symbol(e.symbol.render()).key() == e.key()
        assert e.symbol.multiplicity_sum == 4


def test_successor_graph_is_acyclic():
    for e in ENTRIES:
        assert e.id not in descendants(e.id)
        assert all(REGISTRY[s].parent == e.parent for s in e.successors)
    assert REGISTRY[32].successors == () and REGISTRY[33].successors == ()
    assert len(edges()) == 30


def test_lookup_examples():
    assert get(parse_symbol("[N]_r x [III]_r [4R^n]^1_(4)").render()).code == "IV.1"
    assert lookup(parse_symbol("[-] x [N]_r [4R^n]^2_(2)")).code == "III_n.3"
    assert get("IV.a").id == 32 and get("IV.b").id == 33 and get(7).code == "I_r.7"


def test_unknown_symbols():
    with pytest.raises(UnknownSymbol):
        lookup(parse_symbol("[D]_c x [D]_r [2Z-2Zbar]^4_(11)"))
    with pytest.raises(UnknownSymbol):
        parse_symbol("[Q]_r x [N]_r [4R^n]^1_(4)")
    with pytest.raises(UnknownSymbol):
        parse_symbol("[N]_r x [III]_r [4R^n]^1_(44)")


def test_registry_document():
    doc = json.loads(registry_json())
    assert doc["schema"].startswith("neutral-ricci-registry/")
    assert doc["count"] == 33 and len(doc["entries"]) == 33
    assert doc["entries"][31]["alias"] == "IV.a"


# -- canonical forms ----------------------------------------------------------

def test_canonical_type_four():
    C = canonical(P("IV", (), 1))
    want = [[0] * 4 for _ in range(4)]
    want[0][0] = want[1][3] = want[3][1] = 1
    assert components(C) == want


def test_canonical_iii_n():
    C = canonical(P("III_n", (1, -1), 1))
    want = [[0] * 4 for _ in range(4)]
    want[0][0] = want[3][3] = 1
    want[2][3] = want[3][2] = 1
    want[0][1] = want[1][0] = -1
    assert components(C) == want


def test_canonical_i_r_blocks():
    c = components(canonical(P("I_r", (1, 2, -1, -2))))
    assert (c[0][0], c[1][1], c[0][1]) == (1, 1, 0)  # (R1 - R3)/2, (R1 + R3)/2
    assert (c[2][2], c[3][3], c[2][3]) == (2, 2, 0)
    assert null_traceless(c)


def null_traceless(c):
    return c[0][1] + c[2][3] == 0


def test_constraint_and_degeneracy_errors():
    with pytest.raises(ConstraintViolation):
        canonical(P("I_r", (1, 2, 3, 4)))
    with pytest.raises(ConstraintViolation):
        canonical(P("I_rc", (1, 1, 1, 1)))
    with pytest.raises(DegeneracyViolation):
        canonical(P("I_c", (1, 0, -1, 2)))
    with pytest.raises(DegeneracyViolation):
        canonical(P("I_r", (1, 1, -1, -1), subtype=1))
    with pytest.raises(ValidationError):
        P("IV", (1,))
    with pytest.raises(ValidationError):
        canonical(P("IV", (), 3))


def test_sigma_values():
    assert sigma1(1, 2, -1, -2) == 72
    assert sigma1(1, -3, 2, 0) == -15
    assert sigma_criteria(P("I_r", (1, 2, -1, -2))) == (PPType.I_c, PPType.I_c)
    assert sigma_criteria(P("I_r", (1, -3, 2, 0))) == (PPType.I_r, PPType.I_r)
    assert sigma_criteria(P("II_rc", (-1, 2, 1))) == (PPType.II_r, PPType.II_rc)
    assert sigma2(4, -2, -1) == 6 * 10 * -2
    with pytest.raises(NotApplicable):
        sigma_criteria(P("IV", (), 1))


# -- classify --------------------------------------------------------------------

def test_classify_zero():
    rep = classify(CovariantTensor.zero())
    assert rep.symbol.render() == "[-]x[-] [4R^nst]^4_(1)"
    assert rep.entry.code == "I_r.10"


@pytest.mark.parametrize("params, code", [
    (P("II_rc", (-1, 2, 1)), "II_rc.1"),
    (P("I_r", (1, -3, 2, 0)), "I_r.2"),
    (P("I_rc", (3, -1, -1, 1)), "I_rc.1"),
    (P("III_t", (3, -1)), "III_t.1"),
    (P("I_rc", (1, 1, -1, 1)), "I_rc.2"),
    (P("IV", (), 1), "IV.1"),
])
def test_classify_examples(params, code):
    rep = classify(canonical(params))
    assert rep.entry.code == code
    assert rep.symbol.key() == parse_symbol(rep.entry.template).key()


def test_rendering_follows_ordering_rule():
    rep = classify(canonical(P("II_rc", (-1, 2, 1))))
    assert rep.symbol.render() == "[II]_r x [II]_rc [2R^n-Z-Zbar]^3_(211)"
    assert classify(canonical(P("IV", (), 1))).symbol.render() == "[N]_r x [III]_r [4R^n]^1_(4)"


def test_classify_errors_carry_stage():
    bad = CovariantTensor.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    with pytest.raises(TraceViolation) as exc:
        classify(bad)
    assert str(exc.value).startswith("[spectral]")


def test_classify_accepts_rows_and_tetrad():
    rows = components(canonical(P("III_s", (3, -1))))
    assert classify(rows).entry.code == "III_s.1"
    rep = classify(canonical(P("III_s", (3, -1))), tetrad="orthonormal")
    assert rep.tensor.tetrad is Tetrad.ORTHONORMAL and rep.entry.code == "III_s.1"


def test_float_classification_flags_boundaries():
    C = canonical(P("II_r", (1, 1, -1)))
    Cf = CovariantTensor(tuple(tuple(float(x) for x in r) for r in C.components), Tetrad.NULL)
    rep = classify(Cf)
    assert rep.entry.code == "II_r.3"
    assert rep.warnings and all("boundary-proximate" in w for w in rep.warnings)


@given(seeded_rngs(), st.sampled_from(ENTRIES))
def test_round_trip(rnd, entry):
    assert classify(canonical(draw(entry, rnd))).entry is entry


@given(seeded_rngs(), st.sampled_from(ENTRIES))
def test_type_is_frame_invariant(rnd, entry):
    C = canonical(draw(entry, rnd))
    D = transform_tensor(C, random_frame_change(rnd))
    assert classify(D).entry is entry
    assert classify(C, eps=EPS_FLIPPED).entry is entry


@given(seeded_rngs(), st.sampled_from(ENTRIES))
def test_scaling_keeps_type(rnd, entry):
    C = canonical(draw(entry, rnd))
    lam = F(rnd.randint(1, 9), rnd.randint(1, 9))
    D = CovariantTensor(tuple(tuple(lam * x for x in r) for r in C.components), Tetrad.NULL)
    assert classify(D).entry is entry


@given(seeded_rngs(), st.sampled_from(ENTRIES))
def test_identify_agrees_with_classify(rnd, entry):
    p = draw(entry, rnd)
    assert identify(p) == entry.id


# -- degenerations ------------------------------------------------------------------

@pytest.mark.parametrize("edge", edges(), ids=lambda e: f"{REGISTRY[e[0]].code}->{REGISTRY[e[1]].code}")
def test_edges(edge):
    v = degeneration_check(edge)
    assert v.ok


def test_non_edge_rejected():
    with pytest.raises(EdgeViolation):
        degeneration_check(11, 13)
    with pytest.raises(EdgeViolation):
        degeneration_check(32, 33)


def test_only_i_c_2_reaches_d_r_d_c(rng):
    assert 11 not in restricted_limit_check(rng, draws=20)


def test_limit_survey(rng):
    res = limit_survey(rng, draws=2, pushes=2)
    assert res.checked > 100 and not res.violations


def test_gap_point_is_unregistered():
    p, ident = unregistered_limit()
    assert ident is None
    with pytest.raises(UnknownSymbol) as exc:
        classify(canonical(p))
    assert exc.value.symbol == "[D]_c x [D]_r [2Z-2Zbar]^4_(11)"
    # approached from I_c.1 only
    for eps in (F(1, 10), F(1, 1000)):
        near = P("I_c", (eps, F(1), -eps, F(-1)))
        assert classify(canonical(near)).entry.code == "I_c.1"


@pytest.mark.xfail(strict=True, raises=UnknownSymbol,
                   reason="the I_c limit with ReZ1 = 0, ImZ1 = -ImZ2 is a [D]_c x [D]_r type absent from the 33")
def test_every_i_c_limit_is_a_declared_successor():
    p, _ = unregistered_limit()
    got = classify(canonical(p)).entry.id
    assert got in descendants(11) | {11}


def test_orthonormal_input_with_vanishing_minors():
    from neutral_ricci.frame import convert_tensor

    C = canonical(P("I_r", (F(0), F(0), F(-17, 2), F(17, 2))))
    assert classify(convert_tensor(C, Tetrad.ORTHONORMAL)).entry.code == "I_r.3"
