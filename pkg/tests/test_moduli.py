import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outer6 import moduli as M
from outer6.exact import MultiPoly, det_exact, projectively_equal, ratio
from outer6.mystic import pentagon
from outer6.perms import LETTERS, Perm

from test_exact import cofactor_det

coord = st.integers(-30, 30)
p1_point = st.tuples(coord, coord).filter(any)
p1_config = st.lists(p1_point, min_size=6, max_size=6).map(lambda p: M.PointConfig.make(p, 1))


def cfgs(dim, n, label):
    rng = random.Random(label)
    return [M.sample_config(rng, dim) for _ in range(n)]


# --- direct formula oracles, written from the definitions -------------------

def triangle_sign(x, tri):
    """+1 if black.  Triangle 6AB has the colour of AB; CDE the opposite of
    the complementary edge in {1..5}."""
    p = pentagon(x)
    if 6 in tri:
        col = p.color(set(tri) - {6})
        return 1 if col == "black" else -1
    col = p.color(set(range(1, 6)) - set(tri))
    return -1 if col == "black" else 1


def segre_oracle(c):
    out = []
    for x in LETTERS:
        s = Fraction(0)
        for tri in combinations(range(1, 7), 3):
            term = Fraction(triangle_sign(x, tri))
            for i in range(1, 7):
                term *= c.points[i - 1][0] if i in tri else c.points[i - 1][1]
            s += term
        out.append(s)
    return out


def igusa_oracle(ts, same, opposite):
    """Affine sum over 120 x 6 ordered assignments, points [t; 1]."""
    out = []
    for x in LETTERS:
        P = pentagon(x)
        s = 0
        for A, B, C, D, E in permutations(range(1, 6)):
            N = same if P.color({B, C}) == P.color({D, E}) else opposite
            p = {i: ts[i - 1] for i in range(1, 7)}
            for al, be, ga in permutations((0, 1, 2)):
                s += N * (p[6] * p[A]) ** al * (p[B] * p[C]) ** be * (p[D] * p[E]) ** ga
        out.append(s)
    return out


def p2_oracle(c, same, opposite):
    out = []
    pts = {i + 1: p for i, p in enumerate(c.points)}
    for x in LETTERS:
        P = pentagon(x)
        s = Fraction(0)
        for o in permutations(range(1, 7)):
            A, B, C, D, E, F = o
            edges = [e for e in ((A, B), (C, D), (E, F)) if 6 not in e]
            N = same if P.color(set(edges[0])) == P.color(set(edges[1])) else opposite
            s += N * pts[A][0] * pts[B][0] * pts[C][1] * pts[D][1] * pts[E][2] * pts[F][2]
        out.append(s)
    return out


# --- data types -------------------------------------------------------------

def test_point_config_validation():
    c = M.PointConfig.from_json({"space": "P1", "points": [[0, 1], ["1/2", 1], [2, 1], [3, 1],
                                                           [4, 1], [5, 1]]})
    assert c.points[1] == (Fraction(1, 2), 1)
    assert M.PointConfig.from_json(c.to_json()) == c
    with pytest.raises(M.InputError) as err:
        M.PointConfig.from_json({"space": "P2", "points": c.to_json()["points"]})
    assert err.value.kind == "dimension"
    with pytest.raises(M.InputError) as err:
        M.PointConfig.from_json({"space": "P1", "points": [["1/0", 1]] * 6})
    assert err.value.kind == "rational"
    for bad in [{"space": "P4", "points": []}, {"points": []}, [1, 2],
                {"space": "P1", "points": [[0, 0]] * 6}, {"space": "P1", "points": [[1, 1]] * 5},
                {"space": "P1", "points": [[1.5, 1]] * 6}]:
        with pytest.raises(M.InputError) as err:
            M.PointConfig.from_json(bad)
        assert err.value.kind == "schema"


def test_permuted_moves_slot_i_to_g_i():
    c = M.line_config(range(6))
    g = Perm.cycle(6, 1, 2, 3)
    moved = c.permuted(g)
    assert moved.points[1] == c.points[0] and moved.points[0] == c.points[2]


# --- Segre ------------------------------------------------------------------

def test_segre_matches_oracle():
    for c in cfgs(1, 10, "segre"):
        assert M.segre_map(c).as_list() == segre_oracle(c)


def test_segre_symbolic_identities():
    Z = list(M.segre_map(mode="symbolic").as_list())
    assert all(len(z) == 20 for z in Z)
    assert sum(Z[1:], Z[0]).is_zero()
    assert sum((z ** 3 for z in Z[1:]), Z[0] ** 3).is_zero()


def test_segre_small_example():
    z = M.segre_map(M.line_config(range(6)))
    assert z.as_list() == [-15, 31, -33, 23, 9, -15]


@settings(max_examples=40, deadline=None)
@given(p1_config)
def test_segre_relations_hold_everywhere(c):
    z = M.segre_map(c).as_list()
    assert sum(z) == 0
    assert sum(a ** 3 for a in z) == 0


def test_coincident_points_still_sum_to_zero():
    c = M.PointConfig.make([(1, 2), (1, 2), (3, 1), (0, 1), (5, 7), (1, 0)])
    assert M.segre_map(c).total() == 0
    assert M.igusa_quartic(M.igusa_p1_map(c).as_list()) == 0


# --- cross-ratios -----------------------------------------------------------

def test_symmetric_cross_ratio_line():
    P = MultiPoly.variables(8)
    X, Y, Z = M.sym_cross_ratio(*[(P[2 * i], P[2 * i + 1]) for i in range(4)])
    assert (X + Y + Z).is_zero()
    X, Y, Z = M.sym_cross_ratio((3, 1), (3, 1), (5, 1), (7, 1))
    assert Y == 0 and X != 0
    with pytest.raises(ValueError):
        M.sym_cross_ratio((1, 1), (1, 1), (1, 1), (2, 1))


def test_traditional_cross_ratio_convention():
    # -X/Y equals the classical (a, b; c, d) = (a-c)(b-d)/((b-c)(a-d)) at (z1, z3; z4, z2)
    def classical(a, b, c, d):
        return (a - c) * (b - d) / ((b - c) * (a - d))

    rng = random.Random(20)
    for _ in range(20):
        z = [Fraction(rng.randint(-99, 99), rng.randint(1, 40)) for _ in range(4)]
        if len(set(z)) < 4:
            continue
        r = M.traditional_cross_ratio(*[(x, 1) for x in z])
        assert r == classical(z[0], z[2], z[3], z[1])
    # 0, 1, infinity, lambda
    lam = Fraction(7, 3)
    assert M.traditional_cross_ratio((0, 1), (1, 1), (1, 0), (lam, 1)) == lam


def test_cross_ratio_from_segre_witness():
    assert M.cross_ratio_witnesses()[0] == M.CROSS_RATIO_WITNESS[("ab", "cd", "ef")] == (1, 6, 2, 3)
    for c in cfgs(1, 25, "cr"):
        z = M.segre_map(c)
        tri = M.cross_ratio_from_Z(z)
        assert sum(tri) == 0
        assert projectively_equal(tri, M.sym_cross_ratio(*[c.points[i - 1] for i in (1, 6, 2, 3)]))
    with pytest.raises(ValueError):
        M.cross_ratio_from_Z(M.InvariantVector.from_list([0] * 6))
    with pytest.raises(ValueError):
        M.cross_ratio_from_Z(z, ("ab", "bc", "ef"))


# --- Igusa ------------------------------------------------------------------

def test_igusa_matches_oracle():
    rng = random.Random(4)
    for _ in range(5):
        ts = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(6)]
        w = M.igusa_p1_map(M.line_config(ts)).as_list()
        assert w == igusa_oracle(ts, M.N_SAME, M.N_OPPOSITE)


def test_igusa_coefficient_convention():
    """The swapped weights (2 when colours agree, -1 otherwise) do not give
    sum W = 0; the implemented weights are minus their trace-free part."""
    rng = random.Random(8)
    ts = [rng.randint(-20, 20) for _ in range(6)]
    swapped = igusa_oracle(ts, 2, -1)
    assert sum(swapped) != 0
    mean = Fraction(sum(swapped), 6)
    assert M.igusa_p1_map(M.line_config(ts)).as_list() == [-(w - mean) for w in swapped]


def test_igusa_symbolic():
    W = M.igusa_p1_map(mode="symbolic").as_list()
    assert all(len(w) == 90 for w in W)
    assert sum(W[1:], W[0]).is_zero()
    for w in W:
        for e in w.terms:
            assert all(e[2 * i] + e[2 * i + 1] == 2 for i in range(6))


def test_igusa_quartic_pit():
    res = M.igusa_quartic_pit(trials=64, seed=0)
    assert res.zero and res.degree_bound == 48 and res.failure_bound < 1e-15
    assert M.igusa_quartic_pit(trials=8, seed=3).zero


@settings(max_examples=20, deadline=None)
@given(p1_config)
def test_igusa_quartic_on_rational_points(c):
    assert M.igusa_quartic(M.igusa_p1_map(c).as_list()) == 0


def test_igusa_unstable():
    assert M.igusa_p1_map(M.line_config([2] * 6)).unstable


# --- duality ----------------------------------------------------------------

def test_duality_lambda_and_round_trip():
    for c in cfgs(1, 20, "dual"):
        z = M.segre_map(c)
        w = M.duality_maps(z, "StoI")
        assert w.total() == 0
        assert ratio(w.as_list(), M.igusa_p1_map(c).as_list()) == M.DUALITY_LAMBDA == Fraction(1, 6)
        back = M.duality_maps(w, "ItoS")
        assert back.total() == 0
        assert projectively_equal(back.as_list(), z.as_list())
        # and the other way round on the Igusa image
        w2 = M.igusa_p1_map(c)
        assert projectively_equal(M.duality_maps(M.duality_maps(w2, "ItoS"), "StoI").as_list(),
                                  w2.as_list())


def test_duality_zero_and_bad_direction():
    zero = M.InvariantVector.from_list([0] * 6)
    assert M.duality_maps(zero, "StoI").unstable
    with pytest.raises(ValueError):
        M.duality_maps(zero, "sideways")


# --- P^2 --------------------------------------------------------------------

def test_p2_matches_oracle_and_veronese():
    for c in cfgs(2, 3, "p2o"):
        w, V = M.p2_map(c)
        expect = [a * M.P2_SCALE for a in p2_oracle(c, M.N_SAME, M.N_OPPOSITE)]
        assert w.as_list() == expect
        assert V == cofactor_det(M.veronese_matrix(c))


def test_p2_double_cover_constant():
    kappas = set()
    for c in cfgs(2, 30, "kappa"):
        w, V = M.p2_map(c)
        assert w.total() == 0
        assert M.double_cover_residual(w, V) == 0
        kappas.add(-M.igusa_quartic(w.as_list()) / (V * V))
    assert kappas == {324}
    # without the 1/8 the constant is 324 * 8^4
    c = cfgs(2, 1, "raw")[0]
    w, V = M.p2_map(c)
    assert -M.igusa_quartic([8 * a for a in w.as_list()]) / (V * V) == 1327104


def test_p2_conic():
    ts = [3, -1, 4, 1, -5, 9]
    w, V = M.p2_map(M.conic_config(ts))
    assert V == 0
    assert M.igusa_quartic(w.as_list()) == 0
    rep = M.p2_conic_restriction_check(samples=20)
    assert rep["pass"] and rep["constants"] == [Fraction(1, 8)]


def test_p2_wrong_dimension():
    with pytest.raises(M.InputError):
        M.p2_map(M.line_config(range(6)))


# --- P^3 --------------------------------------------------------------------

def test_seed_audit():
    assert M.seed_audit() == []
    e = M.parse_seed("w2 w4 w6 x1 x2 x4 y1 y3 y5 z3 z5 z6")
    assert [sum(e[4 * i:4 * i + 4]) for i in range(6)] == [2] * 6
    assert M.seed_audit([(1, "w1^3 x2")]) != []
    with pytest.raises(ValueError):
        M.parse_seed("q1")


def bracket(pts, idx):
    return det_exact([pts[i - 1] for i in idx])


def test_bracket_monomials_on_the_curve():
    """[ijkl][ijmn][klmn] on the twisted cubic is the Vandermonde product of
    all 15 differences times (t_j - t_i)(t_l - t_k)(t_n - t_m): every degree-2
    invariant of six points in P^3 restricts to Vandermonde times a degree-1
    invariant of six points on the line (up to the sign of the bracket order)."""
    ts = [2, -3, 5, 7, -11, 4]
    pts = [(1, t, t * t, t ** 3) for t in ts]
    d = M.vandermonde(ts)
    for (i, j), (k, l), (m, n) in [((1, 2), (3, 4), (5, 6)), ((1, 3), (2, 6), (4, 5))]:
        lhs = (bracket(pts, (i, j, k, l)) * bracket(pts, (i, j, m, n))
               * bracket(pts, (k, l, m, n)))
        rhs = d * (ts[j - 1] - ts[i - 1]) * (ts[l - 1] - ts[k - 1]) * (ts[n - 1] - ts[m - 1])
        assert rhs != 0 and lhs in (rhs, -rhs)


@pytest.fixture(scope="module")
def rnc_outcomes():
    return {(r, o): M.p3_rnc_test(r, o, samples=8, seed=1)
            for r in M.ORBIT_RULES for o in ("igusa_p1", "segre")}


def test_p3_coset_rule_is_vandermonde_times_segre(rnc_outcomes):
    out = rnc_outcomes[("coset", "segre")]
    assert out.matched and out.constants == [-1]


def test_p3_no_rule_matches_igusa(rnc_outcomes):
    for r in M.ORBIT_RULES:
        out = rnc_outcomes[(r, "igusa_p1")]
        assert not out.matched and out.witness is not None
    assert not rnc_outcomes[("stabilizer", "segre")].matched
    assert not rnc_outcomes[("fix6", "segre")].matched


def test_p3_invariance():
    assert M.sl4_invariance_failures("coset", trials=3) == []
    # symmetrizing over the stabilizer of x only works for x = a
    assert M.sl4_invariance_failures("stabilizer", trials=3) == list("bcdef")


def test_p3_sums_and_unstable():
    for c in cfgs(3, 3, "p3"):
        assert M.p3_map(c).total() == 0
    assert M.p3_map(M.rnc_config([5] * 6)).unstable
    polys = M.p3_polys("fix6")
    assert all(polys[x] == polys["a"] for x in LETTERS)


# --- Kempe ------------------------------------------------------------------

def test_kempe_orientation_table():
    orient = M.kempe_orientations()
    assert orient["ab"] == "13.26.45"
    assert len(orient) == 15
    synths = {frozenset(frozenset(a) for a in M.parse_kempe_label(l)) for l in orient.values()}
    assert len(synths) == 15


def test_kempe_symbolic_identity():
    Z = M.segre_polys()
    P = MultiPoly.variables(12)

    def d(j, i):  # p_j - p_i
        return P[M.u(j)] * P[M.v(i)] - P[M.u(i)] * P[M.v(j)]

    assert d(3, 1) * d(6, 2) * d(5, 4) == (Z["a"] + Z["b"]) / 2


def test_kempe_round_trip_and_reversal():
    for c in cfgs(1, 10, "kempe"):
        z = M.segre_map(c)
        X = M.kempe_maps(z, "ZtoX")
        assert X.values == M.kempe_from_points(c).values
        assert M.kempe_maps(X, "XtoZ") == z
        assert X["31.26.45"] == -X["13.26.45"] == X["13.62.45"]
        assert X["45.13.26"] == X["13.26.45"]
    bad = M.KempeVector({**X.values, "13.26.45": X.values["13.26.45"] + 1})
    with pytest.raises(M.KempeInconsistent):
        M.kempe_maps(bad, "XtoZ")
    with pytest.raises(ValueError):
        M.parse_kempe_label("12.34.55")


# --- equivariance -----------------------------------------------------------

@pytest.mark.parametrize("name, odd_sign", [("segre", -1), ("igusa_p1", 1), ("p2", 1)])
def test_equivariance(name, odd_sign):
    rep = M.equivariance_check(name, samples=6, seed=2)
    assert rep["pass"]
    rows = {r["g"]: r["signs"] for r in rep["rows"]}
    assert rows["()"] == [1]
    assert rows["(1 2)"] == [odd_sign]
    assert rows["(1 2 3 4 5 6)"] == [odd_sign]


def test_equivariance_all_of_s6_for_segre():
    from outer6.perms import enumerate_group
    rep = M.equivariance_check("segre", samples=1, seed=3, group=enumerate_group(6)[::7])
    assert rep["pass"]


def test_equivariance_p3():
    assert M.equivariance_check("p3", samples=2)["pass"]
