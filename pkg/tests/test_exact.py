import math
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outer6.exact import (MERSENNE61, PHI, Fp, MultiPoly, QPhi, det_exact, format_rat,
                          parse_rat, pit_zero, projectively_equal, ratio)


def cofactor_det(m):
    """Independent oracle: Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * Fraction(m[0][j]) * cofactor_det(minor)
    return total


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction((-1) ** inv)
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


# --- rationals --------------------------------------------------------------

def test_parse_rat_forms():
    assert parse_rat(3) == 3
    assert parse_rat("-7/21") == Fraction(-1, 3)
    assert parse_rat(" 5 ") == 5
    assert format_rat(Fraction(6, -4)) == "-3/2"
    assert format_rat(4) == "4/1"


@pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", "", "2/-3", True, 1.5, None])
def test_parse_rat_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


@given(rationals)
def test_rat_round_trip(q):
    assert parse_rat(format_rat(q)) == q


# --- prime field ------------------------------------------------------------

def test_fp_basics():
    a = Fp(3)
    assert a * a.inverse() == 1
    assert Fp(-1) == MERSENNE61 - 1
    assert Fp(Fraction(1, 2)) * 2 == 1
    with pytest.raises(ZeroDivisionError):
        Fp(0).inverse()
    with pytest.raises(ZeroDivisionError):
        Fp(Fraction(1, MERSENNE61))


@given(st.integers(), st.integers(), st.integers())
def test_fp_ring_axioms(x, y, z):
    a, b, c = Fp(x), Fp(y), Fp(z)
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == 0
    if b != 0:
        assert (a / b) * b == a


# --- golden field -----------------------------------------------------------

def test_phi_identity():
    assert PHI * PHI == PHI + 1
    assert PHI.conjugate() == 1 - PHI
    assert PHI * PHI.conjugate() == -1
    assert PHI.norm() == -1
    assert PHI > 1 and PHI.conjugate() < 0
    assert abs(float(PHI) - 1.6180339887) < 1e-9


@given(rationals, rationals, rationals, rationals)
def test_qphi_field(a, b, c, d):
    x, y = QPhi(a, b), QPhi(c, d)
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * y).norm() == x.norm() * y.norm()
    if y != 0:
        assert (x / y) * y == x
    # the exact sign agrees with floating point when far from zero
    if abs(float(x)) > 1e-6:
        assert x.sign() == (1 if float(x) > 0 else -1)


# --- polynomials ------------------------------------------------------------

def poly_strategy(nvars=3):
    mono = st.tuples(*[st.integers(0, 2)] * nvars)
    return st.dictionaries(mono, st.integers(-5, 5), max_size=5).map(
        lambda d: MultiPoly(nvars, d))


@settings(max_examples=60)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_poly_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@settings(max_examples=60)
@given(poly_strategy(), poly_strategy(), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_evaluation_is_a_homomorphism(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
    fp = [Fp(x) for x in pt]
    assert (p * q).evaluate(fp) == Fp(p.evaluate(pt) * q.evaluate(pt))


def test_poly_small_cases():
    x, y = MultiPoly.variables(2)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert ((x + y) ** 3 - (x - y) ** 3).total_degree() == 3
    assert (x ** 0) == 1
    assert (x * y / 2).evaluate([2, 3]) == 3
    with pytest.raises(ValueError):
        x ** -1
    with pytest.raises(ValueError):
        x + MultiPoly.var(0, 3)
    sub = (x * y).substitute([x + y, x - y])
    assert sub == x * x - y * y
    assert MultiPoly.from_json((x - 3 * y).to_json()) == x - 3 * y


# --- determinants -----------------------------------------------------------

@settings(max_examples=40)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_cofactor_oracle(m):
    assert det_exact(m) == cofactor_det(m)


def test_det_cases():
    assert det_exact([]) == 1
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    m = [[(i + 1) ** j for j in range(6)] for i in range(6)]  # Vandermonde
    assert det_exact(m) == leibniz_det(m) == 34560
    with pytest.raises(ValueError):
        det_exact([[1, 2]])


# --- identity testing -------------------------------------------------------

def test_pit_detects_nonzero_and_is_reproducible():
    x, y = MultiPoly.variables(2)
    f = (x + y) ** 2 - x * x - y * y - 2 * x * y
    assert pit_zero(f.evaluate, 2, 2).zero
    g = x * y - 1
    r1 = pit_zero(g.evaluate, 2, 2, seed=5)
    r2 = pit_zero(g.evaluate, 2, 2, seed=5)
    assert not r1.zero
    assert r1 == r2
    assert g.evaluate([Fp(w) for w in r1.witness]) == r1.value
    res = pit_zero(f.evaluate, 2, 2, trials=64)
    assert res.failure_bound < 1e-15
    assert res.log10_failure_bound() == pytest.approx(64 * (math.log10(2) - math.log10(MERSENNE61)), abs=0.1)


def test_projective_helpers():
    assert projectively_equal([1, 2, 3], [-2, -4, -6])
    assert not projectively_equal([0, 0], [0, 0])
    assert not projectively_equal([1, 2], [1, 3])
    assert ratio([2, 4], [1, 2]) == 2
    assert ratio([2, 5], [1, 2]) is None
    assert ratio([1, 2], [0, 0]) is None
