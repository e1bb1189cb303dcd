import pytest

from nlo.families import (
    FamilyParams,
    M_ZERO_NOTE,
    ParameterError,
    Slope,
    UNVERIFIED_ELL_NOTE,
    build,
    build_minus,
    build_plus,
    is_lspace_knot,
    surgery_presentation,
)
from nlo.homology import h1_class_map, word_class
from nlo.serialize import knot_data_to_doc
from nlo.words import Word, exponent_sum, parse_word

GRID = [
    (p, k, sign, ell, m)
    for p in range(3, 8)
    for k in range(1, 5)
    for sign in (-1, 1)
    for ell, m in [(p - 1, 1), (p - 1, 2), (p - 1, 3)]
    + ([(p - 2, 1)] if p >= 4 else [])
]


def test_build_minus_t35_instance():
    kd = build_minus(FamilyParams(3, 2, -1, 2, 1))
    assert kd.presentation.relators[0] == parse_word("a^2 b^-1 a^2 b^-2 a^-1 b^-2")
    assert kd.peripheral.mu == parse_word("a^-1 b^2")
    assert kd.peripheral.s == parse_word("a b^-1 a^2 b^-1 a^2")
    assert kd.peripheral.v == 19
    assert kd.presentation.label("mu") == kd.peripheral.mu
    assert kd.presentation.label("s") == kd.peripheral.s


def test_build_minus_m0_collapse():
    for p, k, ell in [(3, 1, 2), (5, 2, 3), (7, 4, 6), (4, 1, 4)]:
        params = FamilyParams(p, k, -1, ell, 0)
        kd = build_minus(params, unverified_range=(ell == p))
        q = p * k - 1
        assert kd.presentation.relators[0] == Word([("a", p), ("b", -q)])
        assert kd.peripheral.s == Word([("a", p)])
        assert kd.peripheral.v == p * q
        assert M_ZERO_NOTE in kd.notes


def test_build_minus_trefoil():
    kd = build_minus(FamilyParams(3, 1, -1, 2, 0))
    assert kd.presentation.relators[0] == parse_word("a^3 b^-2")
    assert kd.peripheral.mu == parse_word("a^-1 b")
    assert kd.peripheral.s == parse_word("a^3")
    assert kd.peripheral.v == 6


def test_build_plus_t34_instance():
    kd = build_plus(FamilyParams(3, 1, 1, 2, 1))
    lhs, rhs = parse_word("a b^2 a"), parse_word("b^3 a^-1 b^3")
    assert kd.presentation.relators[0] == lhs * ~rhs
    assert kd.peripheral.mu == parse_word("b^-1 a")
    assert kd.peripheral.s == parse_word("b^4 a")
    assert kd.peripheral.v == 16


def test_build_plus_m0_collapse():
    kd = build_plus(FamilyParams(4, 2, 1, 3, 0))
    assert kd.presentation.relators[0] == Word([("a", 4), ("b", -9)])


def test_build_plus_exponent_sums():
    kd = build_plus(FamilyParams(5, 1, 1, 4, 1))
    r = kd.presentation.relators[0]
    assert (exponent_sum(r, "a"), exponent_sum(r, "b")) == (5, -6)


@pytest.mark.parametrize("ptuple", GRID)
def test_grid_invariants(ptuple):
    params = FamilyParams(*ptuple)
    kd = build(params)
    r = kd.presentation.relators[0]
    assert (exponent_sum(r, "a"), exponent_sum(r, "b")) == (params.p, -params.q)
    classes = h1_class_map(kd.presentation, normalize_by=kd.peripheral.mu)
    assert word_class(kd.peripheral.mu, classes) == 1
    assert word_class(kd.peripheral.s, classes) == kd.peripheral.v


def test_parameter_validation():
    with pytest.raises(ParameterError):
        FamilyParams(1, 1, -1, 2, 1)
    with pytest.raises(ParameterError):
        FamilyParams(3, 0, -1, 2, 1)
    with pytest.raises(ParameterError):
        FamilyParams(3, 1, 2, 2, 1)
    with pytest.raises(ParameterError):
        FamilyParams(3, 1, -1, 1, 1)  # ell below 2
    with pytest.raises(ParameterError):
        FamilyParams(4, 1, -1, 5, 1)  # ell above p
    with pytest.raises(ParameterError):
        FamilyParams(3, 1, -1, 2, -1)
    with pytest.raises(ParameterError):
        build_minus(FamilyParams(3, 1, 1, 2, 1))  # sign mismatch
    with pytest.raises(ParameterError):
        build_plus(FamilyParams(3, 1, -1, 2, 1))


def test_ell_equals_p_needs_flag():
    params = FamilyParams(3, 2, -1, 3, 1)
    with pytest.raises(ParameterError):
        build_minus(params)
    kd = build_minus(params, unverified_range=True)
    assert UNVERIFIED_ELL_NOTE in kd.notes


def test_is_lspace_knot_cases():
    status = is_lspace_knot(FamilyParams(5, 1, -1, 4, 3))
    assert status.is_lspace and status.case == "ell=p-1"
    status = is_lspace_knot(FamilyParams(5, 1, -1, 3, 1))
    assert status.is_lspace and status.case == "ell=p-2,m=1"
    status = is_lspace_knot(FamilyParams(5, 1, -1, 2, 1))
    assert status.is_lspace and status.case == "ell=2,m=1"
    status = is_lspace_knot(FamilyParams(5, 1, -1, 3, 2))
    assert not status.is_lspace and status.case is None


def test_slope_reduction_and_parse():
    assert Slope(38, 2) == Slope(19, 1)
    assert Slope(-20, -4) == Slope(5, 1)
    assert Slope.parse("19/1") == Slope(19, 1)
    assert Slope.parse("7") == Slope(7, 1)
    with pytest.raises(ParameterError):
        Slope(1, 0)
    with pytest.raises(ParameterError):
        Slope.parse("x/y")


def test_surgery_presentation_trefoil():
    tref = build(FamilyParams(3, 1, -1, 2, 0))
    pres = surgery_presentation(tref, Slope(1, 1))
    expected = tref.peripheral.mu ** -5 * tref.peripheral.s
    assert pres.relators == (tref.presentation.relators[0], expected)
    assert pres.labels == tref.presentation.labels


def test_surgery_presentation_at_framing_slope():
    kd = build(FamilyParams(3, 2, -1, 2, 1))
    pres = surgery_presentation(kd, Slope(19, 1))
    assert pres.relators[1] == kd.peripheral.s == parse_word("a b^-1 a^2 b^-1 a^2")


def test_build_is_deterministic():
    import json

    a = knot_data_to_doc(build(FamilyParams(5, 2, -1, 4, 2)))
    b = knot_data_to_doc(build(FamilyParams(5, 2, -1, 4, 2)))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
