"""Word evaluation, fiber classification, table identities."""

from __future__ import annotations

import random

import pytest

from grapecalc.monodromy import (
    IDENTITY,
    U,
    V,
    FiberType,
    SL2Matrix,
    classify,
    evaluate,
    fiber_word,
    order,
    parse_word,
    verify_tables,
)


def test_generators():
    assert U == SL2Matrix(1, 0, -1, 1)
    assert V == SL2Matrix(1, 1, 0, 1)
    assert evaluate("U") == U
    assert evaluate("") == IDENTITY


def test_left_to_right_product():
    # the cusp monodromy: first letter is the leftmost factor
    assert evaluate("UV") == SL2Matrix(1, 1, -1, 0)


def test_power_identities():
    assert evaluate("(UV)^3") == IDENTITY.neg()
    assert evaluate("(UV)^6") == IDENTITY
    assert evaluate("(UVU)^4") == IDENTITY
    assert evaluate("UVU") == evaluate("VUV")
    assert evaluate("(UV)^5") * evaluate("UV") == IDENTITY
    assert order(evaluate("UV")) == 6


def test_parse_word_forms():
    assert parse_word("(UV)^2") == "UVUV"
    assert parse_word("V^3") == "VVV"
    assert parse_word("((UV)^2U)^2") == "UVUVUUVUVU"
    with pytest.raises(ValueError):
        parse_word("UX")
    with pytest.raises(ValueError):
        parse_word("(UV")
    with pytest.raises(ValueError):
        parse_word("U^")


def test_evaluate_is_a_homomorphism():
    rng = random.Random(11)
    for _ in range(50):
        w1 = "".join(rng.choice("UV") for _ in range(rng.randrange(0, 9)))
        w2 = "".join(rng.choice("UV") for _ in range(rng.randrange(0, 9)))
        assert evaluate(w1 + w2) == evaluate(w1) * evaluate(w2)


def test_all_evaluations_unimodular():
    rng = random.Random(13)
    for _ in range(40):
        w = "".join(rng.choice("UV") for _ in range(rng.randrange(0, 14)))
        assert evaluate(w).det() == 1


def test_classify_examples():
    assert classify(V) == FiberType("I", 1)
    assert classify(evaluate("V^2").neg()) == FiberType("I*", 2)
    assert classify(evaluate("UVU")) == FiberType("III")
    assert classify(IDENTITY) == "regular"
    assert classify(IDENTITY.neg()) == FiberType("I*", 0)
    assert classify(SL2Matrix(2, 1, 1, 1)) == "unrecognized"  # hyperbolic
    with pytest.raises(ValueError):
        classify(SL2Matrix(1, 0, 0, -1))


def test_classify_round_trip_all_types():
    types = [FiberType("I", n) for n in range(1, 11)]
    types += [FiberType("I*", n) for n in range(0, 11)]
    types += [FiberType(k) for k in ("II", "III", "IV", "II*", "III*", "IV*")]
    for t in types:
        assert classify(evaluate(fiber_word(t))) == t, t


def test_classify_is_conjugation_invariant():
    rng = random.Random(17)
    reps = [evaluate(fiber_word(t)) for t in
            (FiberType("I", 2), FiberType("I*", 3), FiberType("II"),
             FiberType("III"), FiberType("IV"), FiberType("II*"),
             FiberType("III*"), FiberType("IV*"))]
    for m in reps:
        want = classify(m)
        for _ in range(12):
            w = "".join(rng.choice("UV") for _ in range(rng.randrange(0, 13)))
            g = evaluate(w)
            conj = g * m * g.inv()
            assert classify(conj) == want


def test_fiber_words_match_table():
    assert fiber_word(FiberType("I", 1)) == "V"
    assert fiber_word(FiberType("I", 4)) == "VVVV"
    assert fiber_word(FiberType("II")) == "UV"
    assert fiber_word(FiberType("III")) == "UVU"
    assert fiber_word(FiberType("IV")) == "UVUV"
    assert fiber_word(FiberType("I*", 0)) == "UVUVUV"
    assert fiber_word(FiberType("I*", 2)) == "UVUVUVVV"
    assert fiber_word(FiberType("II*")) == "UVUVUVUVUV"
    assert fiber_word(FiberType("III*")) == "UVUVUVUVU"
    assert fiber_word(FiberType("IV*")) == "UVUVUVUV"


def test_fiber_type_parsing_and_validation():
    assert FiberType.parse("I_3") == FiberType("I", 3)
    assert FiberType.parse("I3") == FiberType("I", 3)
    assert FiberType.parse("I*_0") == FiberType("I*", 0)
    assert FiberType.parse("I*2") == FiberType("I*", 2)
    assert FiberType.parse("III*") == FiberType("III*")
    assert str(FiberType("I*", 1)) == "I*_1"
    for bad in ("V", "I", "I*", "II_3", "II**"):
        with pytest.raises(ValueError):
            FiberType.parse(bad)
    with pytest.raises(ValueError):
        FiberType("I", 0)
    with pytest.raises(ValueError):
        FiberType("II", 1)


def test_verify_tables_is_twelve_green_checks():
    checks = verify_tables()
    assert len(checks) == 12
    assert all(ok for _, ok in checks)
