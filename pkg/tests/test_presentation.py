import pytest

from nlo.families import FamilyParams, build
from nlo.homology import abelianization_matrix, h1
from nlo.presentation import (
    GeneratorChange,
    LHS_TO_RHS,
    RHS_TO_LHS,
    Presentation,
    Relation,
    RewriteError,
    RewriteStep,
    RoundTripError,
    SearchCapExceeded,
    apply_relation,
    change_generators,
    find_relation_applications,
    one_step_to,
    replay_trace,
)
from nlo.words import Word, exponent_sum, parse_word, substitute


def knot_relation(kd):
    """The displayed equality lhs = rhs backing the stored relator."""
    p, k, ell, m = kd.params.p, kd.params.k, kd.params.ell, kd.params.m
    pl = p - ell
    a, b = parse_word("a"), parse_word("b")
    c = Word([("b", 1 - k * pl), ("a", pl)])
    lhs = a ** pl * (a * c ** m) ** (ell - 1) * a
    rhs = b ** (k * pl - 1) * (b ** k * c ** m) ** (ell - 1) * b ** k
    return Relation(lhs, rhs)


def test_presentation_validates_alphabet():
    with pytest.raises(ValueError):
        Presentation(("a",), (parse_word("a b"),))
    with pytest.raises(ValueError):
        Presentation(("a", "b"), (), {"mu": parse_word("c")})
    with pytest.raises(ValueError):
        Presentation(("a", "a"))


def test_apply_relation_whole_word():
    rel = Relation(parse_word("a^3"), parse_word("b^2"))
    step = RewriteStep(0, LHS_TO_RHS, 0)
    assert apply_relation(parse_word("a^3"), rel, step) == parse_word("b^2")
    # Un-applying at the same position restores the original word.
    back = RewriteStep(0, RHS_TO_LHS, 0)
    assert apply_relation(parse_word("b^2"), rel, back) == parse_word("a^3")


def test_apply_relation_occurrence_mismatch():
    rel = Relation(parse_word("a^3"), parse_word("b^2"))
    with pytest.raises(RewriteError):
        apply_relation(parse_word("a^2 b"), rel, RewriteStep(0, LHS_TO_RHS, 0))
    with pytest.raises(RewriteError):
        apply_relation(parse_word("a^3"), rel, RewriteStep(0, LHS_TO_RHS, 7))


def test_apply_relation_replays_framing_rewrite_at_p4():
    # For the (p, pk-1; p-2, 1) family at p = 4, k = 1, one relator
    # application turns s = a(ab^-1a^2)^2 a into a^-1 b (a^2)^2 a.
    kd = build(FamilyParams(4, 1, -1, 2, 1))
    s = kd.peripheral.s
    assert s == parse_word("a^2 b^-1 a^3 b^-1 a^3")
    target = parse_word("a^-1 b a^5")
    trace = one_step_to(s, kd.presentation.relators[0], target)
    assert trace is not None and len(trace) == 1
    rel, step = trace[0]
    assert apply_relation(s, rel, step) == target
    assert rel.matches_relator(kd.presentation.relators[0])
    # The plain subword occurrence of the displayed left side lands on the
    # cyclically rotated form of the same element.
    plain = knot_relation(kd)
    rotated = apply_relation(s, plain, RewriteStep(0, LHS_TO_RHS, 3))
    assert rotated == parse_word("a^4 b")


def test_replay_trace_validates_relations():
    kd = build(FamilyParams(4, 1, -1, 2, 1))
    s = kd.peripheral.s
    target = parse_word("a^-1 b a^5")
    trace = one_step_to(s, kd.presentation.relators[0], target)
    assert replay_trace(s, trace, kd.presentation.relators) == target
    bogus = Relation(Word(), parse_word("a b a^-1 b^-1"))
    with pytest.raises(RewriteError):
        replay_trace(s, ((bogus, trace[0][1]),), kd.presentation.relators)
    with pytest.raises(RewriteError):
        replay_trace(s, ((trace[0][0], RewriteStep(5, LHS_TO_RHS, 0)),),
                     kd.presentation.relators)


def test_find_relation_applications_zero_steps():
    rel = Relation(parse_word("a^3"), parse_word("b^2"))
    results = find_relation_applications(parse_word("a b"), rel, 0)
    assert results == [((), parse_word("a b"))]


def test_find_relation_applications_reaches_proof_form():
    kd = build(FamilyParams(4, 1, -1, 2, 1))
    rel = knot_relation(kd)
    results = find_relation_applications(kd.peripheral.s, rel, 1)
    reachable = {w for _, w in results}
    assert parse_word("a^-1 b a^5") in reachable
    assert parse_word("a^4 b") in reachable
    # Every discovered trace replays to its recorded word.
    for trace, w in results[:50]:
        assert replay_trace(kd.peripheral.s, trace, kd.presentation.relators) == w


def test_find_relation_applications_deduplicates():
    rel = Relation(parse_word("a^2"), parse_word("a^2"))
    results = find_relation_applications(parse_word("a"), rel, 2)
    seen = [w for _, w in results]
    assert len(seen) == len(set(seen))


def test_search_cap():
    kd = build(FamilyParams(4, 1, -1, 2, 1))
    rel = knot_relation(kd)
    with pytest.raises(SearchCapExceeded):
        find_relation_applications(kd.peripheral.s, rel, 2, node_cap=50)


def test_generator_change_round_trip_enforced():
    with pytest.raises(RoundTripError):
        GeneratorChange(
            forward={"a": parse_word("x")},
            backward={"x": parse_word("a^2")},
        )


def test_change_generators_family_relator():
    kd = build(FamilyParams(3, 2, -1, 2, 1))
    gc = GeneratorChange(
        forward={"a": parse_word("y x y"), "b": parse_word("y x")},
        backward={"x": parse_word("a^-1 b^2"), "y": parse_word("b^-1 a")},
    )
    changed = change_generators(kd.presentation, gc)
    assert changed.generators == ("x", "y")
    assert changed.relators[0] == substitute(kd.presentation.relators[0], gc.forward)
    assert changed.label("mu") == parse_word("x")
    # Unimodular changes preserve the abelianization.
    assert h1(changed) == h1(kd.presentation)


def test_change_generators_identity():
    kd = build(FamilyParams(3, 2, -1, 2, 1))
    gc = GeneratorChange(
        forward={"a": parse_word("a"), "b": parse_word("b")},
        backward={"a": parse_word("a"), "b": parse_word("b")},
    )
    changed = change_generators(kd.presentation, gc)
    assert changed.relators == kd.presentation.relators
    assert changed.labels == kd.presentation.labels


def test_apply_relation_preserves_abelianization():
    kd = build(FamilyParams(4, 1, -1, 2, 1))
    s = kd.peripheral.s
    trace = one_step_to(s, kd.presentation.relators[0], parse_word("a^-1 b a^5"))
    rel, step = trace[0]
    after = apply_relation(s, rel, step)
    matrix = abelianization_matrix(kd.presentation)[0]
    diff = [
        exponent_sum(after, "a") - exponent_sum(s, "a"),
        exponent_sum(after, "b") - exponent_sum(s, "b"),
    ]
    # The change must be an integer multiple of the relator row.
    assert diff[0] * matrix[1] == diff[1] * matrix[0]
