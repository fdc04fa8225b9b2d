import itertools
import random

import pytest

from conftest import X, Y, random_word
from opentorus.mcg import dynamics_class, open_book_invariants
from opentorus.normalform import CanonicalType, MForm, expand_to_word, normalize
from opentorus.tightness import (
    InvariantChain,
    SoberingForm,
    Status,
    SteinWord,
    check_certificate,
    decide,
    dehn_obstruction,
    is_tight,
    sobering_certificate,
    stein_witness,
    tight_minus_dehn,
)
from opentorus.twistword import EMPTY, TwistWord, parse_word

TABLE = {
    "A": lambda d, m: d >= 1,
    "B": lambda d, m: d >= 0,
    "C": lambda d, m: d > 0 or (d == 0 and m >= 0),
    "D": lambda d, m: d >= 0,
    "E": lambda d, m: d >= 1,
    "F": lambda d, m: d >= 0,
}


def small_types(d_range=range(-3, 4), max_len=2, max_entry=3):
    for d in d_range:
        for v in "CD":
            for m in range(-6, 7):
                yield CanonicalType(v, d, m=m)
        for v in "EF":
            for m in (-1, -2, -3):
                yield CanonicalType(v, d, m=m)
        for v in "AB":
            for n in range(1, max_len + 1):
                for a in itertools.product(range(max_entry + 1), repeat=n):
                    for b in itertools.product(range(max_entry + 1), repeat=n):
                        if any(a) and any(b):
                            yield CanonicalType(v, d, a, b)


def test_decide_examples():
    assert decide(CanonicalType("A", 1, (1,), (1,))).status is Status.TIGHT
    assert decide(CanonicalType("B", -1, (1,), (1,))).status is Status.OVERTWISTED
    assert decide(CanonicalType("C", 0, m=-4)).status is Status.OVERTWISTED
    assert decide(CanonicalType("C", 0, m=0)).status is Status.TIGHT


def test_decide_matches_table_and_certificates_check():
    for ct in small_types():
        verdict = decide(ct)
        assert (verdict.status is Status.TIGHT) == TABLE[ct.variant](ct.d, ct.m), ct
        assert check_certificate(ct, verdict.certificate), ct
        if verdict.status is Status.OVERTWISTED:
            assert isinstance(verdict.certificate, SoberingForm)
            assert sum(verdict.certificate.triple) <= 0


def test_sobering_examples():
    cert = sobering_certificate(CanonicalType("A", 0, (2, 1), (1, 3)))
    assert (cert.curve, cert.triple) == (Y, (0, 0, -1))
    cert = sobering_certificate(CanonicalType("D", -1, m=2))
    assert (cert.curve, cert.triple) == (X, (0, 0, -1))
    assert cert.witness == parse_word("y^-2 x^-1 y^-2 x^-1 y^2")
    cert = sobering_certificate(CanonicalType("C", 0, m=-4))
    assert cert.curve is Y and cert.witness == parse_word("y^-4")
    with pytest.raises(ValueError):
        sobering_certificate(CanonicalType("A", 1, (1,), (1,)))


def test_stein_examples():
    assert stein_witness(MForm(0, (2, 2, -1, 0, 0))) == SteinWord(parse_word("y x^7"))
    assert stein_witness(CanonicalType("F", 0, m=-3)) == SteinWord(parse_word("y x"))
    assert stein_witness(CanonicalType("C", 0, m=3)) == SteinWord(parse_word("y^3"))
    assert stein_witness(CanonicalType("C", 0, m=0)) == SteinWord(EMPTY)
    assert stein_witness(CanonicalType("A", 3, (1,), (2,))) is None
    assert stein_witness(CanonicalType("B", -1, (1,), (1,))) is None


def test_stein_word_rejects_negative_twists():
    with pytest.raises(ValueError):
        SteinWord(parse_word("x y^-1"))


def test_chain_for_long_type_D():
    cert = decide(CanonicalType("D", 0, m=-7)).certificate
    assert isinstance(cert, InvariantChain)
    assert cert.grading_lens == 7
    assert decide(CanonicalType("D", 0, m=-8)).certificate.grading_lens == 7


def test_bad_certificates_fail():
    ct = CanonicalType("C", 0, m=3)
    assert not check_certificate(ct, SteinWord(parse_word("y^2")))
    assert not check_certificate(ct, InvariantChain(parse_word("y x^5"), 1, 0))
    ot = CanonicalType("C", 0, m=-2)
    assert not check_certificate(ot, SoberingForm(X, (0, 0, -1), parse_word("y^-2")))
    assert not check_certificate(ot, SoberingForm(Y, (0, 1, 0), parse_word("y^-2")))


def test_periodic_tight_iff_stein():
    for ct in small_types(range(-5, 6)):
        if ct.variant in "EF":
            assert (decide(ct).status is Status.TIGHT) == (stein_witness(ct) is not None)
            assert str(dynamics_class(expand_to_word(ct))) == "periodic"


def test_dehn_obstruction():
    assert dehn_obstruction(EMPTY)
    assert dehn_obstruction(parse_word("y^-1"))
    assert not dehn_obstruction(parse_word("x y"))


def test_tight_minus_dehn_examples():
    assert tight_minus_dehn(CanonicalType("B", 0, (1,), (7,)))
    assert not tight_minus_dehn(CanonicalType("B", 0, (1,), (2,)))
    assert tight_minus_dehn(CanonicalType("C", 0, m=0))
    assert not tight_minus_dehn(CanonicalType("B", -1, (1,), (20,)))


def test_naturality_on_random_tight_words():
    rng = random.Random(11)
    found = 0
    while found < 150:
        ct = normalize(random_word(rng, 12, 4))
        if not is_tight(ct):
            continue
        found += 1
        u = expand_to_word(ct)
        for g in ("x", "y"):
            assert decide(normalize(u * parse_word(g))).status is Status.TIGHT


def test_decide_is_rotation_invariant():
    rng = random.Random(13)
    for _ in range(200):
        u = random_word(rng, 12, 4)
        r = TwistWord(u.letters[2:] + u.letters[:2])
        assert decide(normalize(u)).status is decide(normalize(r)).status


def test_stein_words_match_open_book():
    for ct in small_types(range(0, 3)):
        s = stein_witness(ct)
        if s is not None:
            assert open_book_invariants(s.word) == open_book_invariants(expand_to_word(ct))
