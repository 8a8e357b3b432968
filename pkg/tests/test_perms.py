from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from outer6.perms import (CycleParseError, Perm, compose, conjugacy_classes, enumerate_group,
                          format_cycles, generators, parse_cycles, sign)

perm6 = st.permutations(range(1, 7)).map(Perm)


def inversion_sign(images):
    n = len(images)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])
    return -1 if inv % 2 else 1


def test_composition_right_acts_first():
    a = parse_cycles("(1 2)", 3)
    b = parse_cycles("(2 3)", 3)
    # (1 2)(2 3) sends 3 -> 2 -> 1
    assert compose(a, b)(3) == 1
    assert format_cycles(a * b) == "(1 2 3)"


def test_parse_letters_and_points():
    g = parse_cycles("(ad)(bc)(ef)", 6)
    assert g == parse_cycles("(a d)(b c)(e f)", 6) == parse_cycles("(1,4)(2 3)(5,6)", 6)
    assert format_cycles(g, letters=True) == "(a d)(b c)(e f)"
    assert parse_cycles("", 6).is_identity()
    assert parse_cycles("()", 6).is_identity()
    assert format_cycles(Perm.identity(6)) == "()"


@pytest.mark.parametrize("text, pos", [
    ("(1 2 1)", 5),   # repeated point
    ("(1 7)", 3),     # out of range
    ("(1 2", 4),      # unterminated
    ("(1,,2)", 3),    # misplaced comma
    ("(12)", 1),      # integers need separators
    ("1 2)", 0),
    ("(1 a)", 3),     # mixed alphabets: letter then number check below
])
def test_parse_errors_carry_positions(text, pos):
    alphabet = "points" if "a" in text else "any"
    with pytest.raises(CycleParseError) as err:
        parse_cycles(text, 6, alphabet=alphabet)
    assert err.value.position == pos


def test_wrong_alphabet():
    with pytest.raises(CycleParseError):
        parse_cycles("(1 2)", 6, alphabet="letters")
    with pytest.raises(CycleParseError):
        parse_cycles("(g a)", 6)


@given(perm6)
def test_format_parse_round_trip(g):
    assert parse_cycles(format_cycles(g), 6) == g
    assert parse_cycles(format_cycles(g, letters=True), 6, alphabet="letters") == g


@given(perm6, perm6)
def test_sign_is_multiplicative_and_matches_inversions(g, h):
    assert sign(g * h) == sign(g) * sign(h)
    assert g.sign() == inversion_sign(g.images)


@given(perm6, perm6)
def test_group_laws(g, h):
    e = Perm.identity(6)
    assert g * g.inverse() == e
    assert (g * h).inverse() == h.inverse() * g.inverse()
    assert g.conjugate_by(h).cycle_type() == g.cycle_type()
    assert g ** 6 * g ** -6 == e


def test_group_enumeration():
    group = enumerate_group(6)
    assert len(group) == 720 == len(set(group))
    assert group[0].is_identity()
    assert list(group) == sorted(group)
    classes = conjugacy_classes(6)
    assert len(classes) == 11
    assert sorted(len(v) for v in classes.values()) == [1, 15, 15, 40, 40, 45, 90, 90, 120, 120, 144]
    assert len(conjugacy_classes(5)) == 7


def test_generators_generate():
    seen = {Perm.identity(6)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators(6):
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    assert len(seen) == 720
    assert {p for p in permutations(range(1, 7))} == {g.images for g in seen}
