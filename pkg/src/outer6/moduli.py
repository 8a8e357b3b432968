"""Invariant maps of six points on P^1, P^2 and P^3.

Variables are laid out point by point: on P^1 the point i is [u_i; v_i]
(affine coordinate u/v) at indices 2(i-1), 2(i-1)+1; on P^2 it is
[x_i; y_i; z_i] at 3(i-1)+{0,1,2}; on P^3 it is [w_i; x_i; y_i; z_i] at
4(i-1)+{0,1,2,3}.  All maps return an :class:`InvariantVector` indexed
by the six letters a..f.

A permutation g of the points acts on configurations by moving the
point in slot i to slot g(i).  With this convention each map satisfies

    F(g.c)[outer(g)(y)] == s(g) * F(c)[y]

with s = sign for the Segre map and s = +1 for the Igusa-type maps.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import lcm, prod
from typing import Sequence

from .exact import Fp, MultiPoly, det_exact, parse_rat, pit_zero, projectively_equal, ratio
from .mystic import (BLACK, TRIANGLES, canonical_colorings, outer_via_cosets,
                     outer_via_triangles, pentagon)
from .perms import LETTERS, Perm, enumerate_group, format_cycles, generators

SPACES = {"P1": 1, "P2": 2, "P3": 3}
SAMPLE_RANGE = 10 ** 4


class InputError(ValueError):
    """Bad point configuration; ``kind`` is schema, dimension or rational."""

    def __init__(self, message: str, kind: str = "schema"):
        super().__init__(message)
        self.kind = kind


class KempeInconsistent(ValueError):
    pass


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class PointConfig:
    dim: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.dim not in (1, 2, 3):
            raise InputError(f"unsupported space P{self.dim}", "dimension")
        if len(self.points) != 6:
            raise InputError(f"need six points, got {len(self.points)}")
        for k, p in enumerate(self.points):
            if len(p) != self.dim + 1:
                raise InputError(f"point {k + 1} has {len(p)} coordinates, "
                                 f"expected {self.dim + 1} for P{self.dim}", "dimension")
            if all(x == 0 for x in p):
                raise InputError(f"point {k + 1} is the zero vector")

    @classmethod
    def make(cls, points, dim: int | None = None) -> PointConfig:
        pts = tuple(tuple(Fraction(x) for x in p) for p in points)
        if dim is None:
            dim = len(pts[0]) - 1 if pts else 1
        return cls(dim, pts)

    @classmethod
    def from_json(cls, doc) -> PointConfig:
        if not isinstance(doc, dict) or set(doc) != {"space", "points"}:
            raise InputError('expected an object with keys "space" and "points"')
        space = doc["space"]
        if space not in SPACES:
            raise InputError(f"space must be one of P1, P2, P3, got {space!r}")
        pts = doc["points"]
        if not isinstance(pts, list) or not all(isinstance(p, list) for p in pts):
            raise InputError('"points" must be a list of coordinate lists')
        out = []
        for p in pts:
            row = []
            for x in p:
                if isinstance(x, bool) or not isinstance(x, (int, str)):
                    raise InputError(f"coordinate {x!r} is neither an integer nor a string")
                try:
                    row.append(parse_rat(x))
                except (ValueError, ZeroDivisionError) as exc:
                    raise InputError(str(exc), "rational") from None
            out.append(tuple(row))
        return cls(SPACES[space], tuple(out))

    def to_json(self) -> dict:
        return {"space": f"P{self.dim}",
                "points": [[_fmt(x) for x in p] for p in self.points]}

    def flat(self) -> list:
        return [x for p in self.points for x in p]

    def permuted(self, g: Perm) -> PointConfig:
        """The point in slot i moves to slot g(i)."""
        new = [None] * 6
        for i in range(6):
            new[g(i + 1) - 1] = self.points[i]
        return PointConfig(self.dim, tuple(new))


def _fmt(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class InvariantVector:
    values: dict = field(default_factory=dict)

    @classmethod
    def from_list(cls, vals) -> InvariantVector:
        return cls(dict(zip(LETTERS, vals)))

    def __getitem__(self, x):
        return self.values[x]

    def as_list(self) -> list:
        return [self.values[x] for x in LETTERS]

    def total(self):
        return sum(self.as_list()[1:], self.values["a"])

    @property
    def unstable(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def relabel(self, h: Perm) -> InvariantVector:
        """Letter y moves to h(y)."""
        return InvariantVector({h.letter(y): v for y, v in self.values.items()})

    def to_json(self) -> dict:
        return {"values": {x: _fmt(self.values[x]) for x in LETTERS},
                "unstable": self.unstable}


def _require(c: PointConfig, dim: int):
    if c.dim != dim:
        raise InputError(f"this map needs points in P{dim}, got P{c.dim}", "dimension")


def sample_config(rng: random.Random, dim: int) -> PointConfig:
    """Integer coordinates uniform in [-10^4, 10^4]; zero points redrawn."""
    pts = []
    while len(pts) < 6:
        p = tuple(Fraction(rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE)) for _ in range(dim + 1))
        if any(p):
            pts.append(p)
    return PointConfig(dim, tuple(pts))


def sample_rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{label}:{seed}")


# ---------------------------------------------------------------------------
# fast evaluation of forms of equal degree in every point


class _PointwiseForm:
    """A polynomial of degree d in each of the six points (k coordinates
    each), compiled so that each term is a product of six looked-up
    monomials of degree d."""

    def __init__(self, poly: MultiPoly, k: int, d: int = 2):
        self.k, self.d = k, d
        # integer coefficients over one common denominator
        self.den = lcm(*(Fraction(c).denominator for c in poly.terms.values()))
        self.quads = [e for e in product(range(d + 1), repeat=k) if sum(e) == d]
        index = {q: j for j, q in enumerate(self.quads)}
        # nested by point: trie[i0][i1]...[i4] is a list of (i5, coefficient)
        self.trie: dict = {}
        for e, c in poly.terms.items():
            idx = [index[e[k * i:k * i + k]] for i in range(6)]
            node = self.trie
            for j in idx[:4]:
                node = node.setdefault(j, {})
            node.setdefault(idx[4], []).append((idx[5], int(c * self.den)))

    def __call__(self, pts) -> Fraction:
        scale = self.den
        ipts = []
        for p in pts:
            m = lcm(*(Fraction(x).denominator for x in p))
            scale *= m ** self.d
            ipts.append([int(x * m) for x in p])
        t0, t1, t2, t3, t4, t5 = [[prod(x ** a for x, a in zip(p, q)) for q in self.quads]
                                  for p in ipts]
        total = 0
        for i0, n0 in self.trie.items():
            s0 = 0
            for i1, n1 in n0.items():
                s1 = 0
                for i2, n2 in n1.items():
                    s2 = 0
                    for i3, n3 in n2.items():
                        s3 = 0
                        for i4, leaves in n3.items():
                            s3 += t4[i4] * sum(c * t5[i5] for i5, c in leaves)
                        s2 += t3[i3] * s3
                    s1 += t2[i2] * s2
                s0 += t1[i1] * s1
            total += t0[i0] * s0
        return Fraction(total, scale)


# ---------------------------------------------------------------------------
# Segre map


def u(i: int) -> int:
    return 2 * (i - 1)


def v(i: int) -> int:
    return 2 * (i - 1) + 1


@lru_cache(maxsize=None)
def segre_polys() -> dict[str, MultiPoly]:
    """Z_x = sum over triangles ABC of +-u_A u_B u_C v_D v_E v_F, + on black."""
    cols = canonical_colorings()
    out = {}
    for x in LETTERS:
        terms = {}
        for t in TRIANGLES:
            e = [0] * 12
            for i in range(1, 7):
                e[u(i) if i in t else v(i)] = 1
            terms[tuple(e)] = 1 if cols[x].color(t) == BLACK else -1
        out[x] = MultiPoly(12, terms)
    return out


def segre_map(c: PointConfig | None = None, mode: str = "numeric") -> InvariantVector:
    polys = segre_polys()
    if mode == "symbolic":
        return InvariantVector(dict(polys))
    _require(c, 1)
    pt = c.flat()
    return InvariantVector({x: polys[x].evaluate(pt) for x in LETTERS})


def diff(p, q):
    """(p - q) for projective points of P^1: u_p v_q - u_q v_p."""
    return p[0] * q[1] - q[0] * p[1]


def sym_cross_ratio(p1, p2, p3, p4) -> tuple:
    """[(p2-p3)(p1-p4); (p1-p2)(p3-p4); (p1-p3)(p4-p2)], on the line X+Y+Z=0."""
    out = (diff(p2, p3) * diff(p1, p4), diff(p1, p2) * diff(p3, p4), diff(p1, p3) * diff(p4, p2))
    if all(x == 0 for x in out):
        raise ValueError("degenerate: three or more of the four points coincide")
    return out


def traditional_cross_ratio(p1, p2, p3, p4):
    X, Y, _ = sym_cross_ratio(p1, p2, p3, p4)
    if Y == 0:
        raise ZeroDivisionError("cross-ratio is infinite")
    return Fraction(-X) / Fraction(Y)


def cross_ratio_from_Z(z: InvariantVector, pairs=("ab", "cd", "ef")) -> tuple:
    if sorted("".join(pairs)) != list(LETTERS) or any(len(p) != 2 for p in pairs):
        raise ValueError(f"{pairs} is not a partition of a..f into pairs")
    out = tuple(z[p[0]] + z[p[1]] for p in pairs)
    if all(x == 0 for x in out):
        raise ValueError("degenerate: all three pair sums vanish")
    return out


# Found by search over ordered 4-subsets; the lexicographically first hit.
CROSS_RATIO_WITNESS = {("ab", "cd", "ef"): (1, 6, 2, 3)}


def cross_ratio_witnesses(pairs=("ab", "cd", "ef"), samples: int = 4, seed: int = 0) -> list:
    """All ordered 4-subsets (i,j,k,l) whose symmetric cross-ratio agrees
    projectively with the pair sums of the Segre vector on random samples."""
    rng = sample_rng(seed, "witness")
    cfgs = [sample_config(rng, 1) for _ in range(samples)]
    sums = [cross_ratio_from_Z(segre_map(c), pairs) for c in cfgs]
    hits = []
    for o in permutations(range(6), 4):
        if all(projectively_equal(s, sym_cross_ratio(*[c.points[i] for i in o]))
               for c, s in zip(cfgs, sums)):
            hits.append(tuple(i + 1 for i in o))
    return hits


# ---------------------------------------------------------------------------
# Igusa map from P^1

# Coefficient of a term when the two compared edges share a colour, and when
# they do not.  These make sum_x W_x vanish.
N_SAME, N_OPPOSITE = -1, 2


@lru_cache(maxsize=None)
def igusa_polys() -> dict[str, MultiPoly]:
    """W_x = sum N (p6 pA)^al (pB pC)^be (pD pE)^ga over ordered (A..E), (al,be,ga),
    each point homogenized to degree 2."""
    out = {}
    for x in LETTERS:
        P = pentagon(x)
        terms: dict = {}
        for A, B, C, D, E in permutations(range(1, 6)):
            N = N_SAME if P.color((B, C)) == P.color((D, E)) else N_OPPOSITE
            for al, be, ga in permutations((0, 1, 2)):
                d = {6: al, A: al, B: be, C: be, D: ga, E: ga}
                e = [0] * 12
                for i in range(1, 7):
                    e[u(i)], e[v(i)] = d[i], 2 - d[i]
                e = tuple(e)
                terms[e] = terms.get(e, 0) + N
        out[x] = MultiPoly(12, terms)
    return out


@lru_cache(maxsize=None)
def _igusa_compiled():
    return {x: _PointwiseForm(p, 2) for x, p in igusa_polys().items()}


def igusa_p1_map(c: PointConfig | None = None, mode: str = "numeric") -> InvariantVector:
    if mode == "symbolic":
        return InvariantVector(dict(igusa_polys()))
    _require(c, 1)
    forms = _igusa_compiled()
    return InvariantVector({x: forms[x](c.points) for x in LETTERS})


def igusa_quartic(w: Sequence):
    s2 = sum(a * a for a in w)
    return s2 * s2 - 4 * sum(a ** 4 for a in w)


def igusa_quartic_pit(trials: int = 64, seed: int = 0):
    polys = igusa_polys()

    def ev(point):
        return igusa_quartic([polys[x].evaluate(point) for x in LETTERS])

    return pit_zero(ev, 12, 48, trials=trials, seed=seed)


def igusa_quartic_exact() -> bool:
    """Expand (sum W^2)^2 - 4 sum W^4 completely.  Slow (minutes)."""
    polys = list(igusa_polys().values())
    s2 = sum((w * w for w in polys[1:]), polys[0] * polys[0])
    sq = [w * w for w in polys]
    s4 = sum((q * q for q in sq[1:]), sq[0] * sq[0])
    return (s2 * s2 - s4.scale(4)).is_zero()


# ---------------------------------------------------------------------------
# duality


def duality_maps(vec: InvariantVector, direction: str) -> InvariantVector:
    vals = [Fraction(a) if not isinstance(a, MultiPoly) else a for a in vec.as_list()]
    if direction == "StoI":
        s2 = sum(a * a for a in vals)
        return InvariantVector.from_list([a * a - s2 / 6 for a in vals])
    if direction == "ItoS":
        s2 = sum(a * a for a in vals)
        s3 = sum(a ** 3 for a in vals)
        return InvariantVector.from_list([s2 * a - 4 * a ** 3 + Fraction(2, 3) * s3 for a in vals])
    raise ValueError(f"unknown direction {direction!r}")


# StoI(segre(c)) == DUALITY_LAMBDA * igusa_p1(c)
DUALITY_LAMBDA = Fraction(1, 6)


# ---------------------------------------------------------------------------
# six points on P^2

# The ordered sum over 720 assignments counts each unordered term 8 times.
P2_SCALE = Fraction(1, 8)
P2_KAPPA = 324


@lru_cache(maxsize=None)
def p2_polys() -> dict[str, MultiPoly]:
    out = {}
    for x in LETTERS:
        P = pentagon(x)
        terms: dict = {}
        for o in permutations(range(1, 7)):
            pairs = ((o[0], o[1]), (o[2], o[3]), (o[4], o[5]))
            e1, e2 = [q for q in pairs if 6 not in q]
            N = N_SAME if P.color(e1) == P.color(e2) else N_OPPOSITE
            e = [0] * 18
            for k, (a, b) in enumerate(pairs):
                e[3 * (a - 1) + k] += 1
                e[3 * (b - 1) + k] += 1
            e = tuple(e)
            terms[e] = terms.get(e, 0) + N
        out[x] = MultiPoly(18, terms).scale(P2_SCALE)
    return out


@lru_cache(maxsize=None)
def _p2_compiled():
    return {x: _PointwiseForm(p, 3, 1) for x, p in p2_polys().items()}


def veronese_matrix(c: PointConfig) -> list[list]:
    return [[x * x, y * y, z * z, x * y, y * z, z * x] for x, y, z in c.points]


def veronese_det(c: PointConfig):
    _require(c, 2)
    return det_exact(veronese_matrix(c))


def p2_map(c: PointConfig | None = None, mode: str = "numeric"):
    """(W, V) with (sum W^2)^2 - 4 sum W^4 + 324 V^2 == 0."""
    if mode == "symbolic":
        return InvariantVector(dict(p2_polys())), None
    _require(c, 2)
    forms = _p2_compiled()
    w = InvariantVector({x: forms[x](c.points) for x in LETTERS})
    return w, veronese_det(c)


def double_cover_residual(w: InvariantVector, V) -> Fraction:
    return igusa_quartic(w.as_list()) + P2_KAPPA * V * V


def conic_config(ts) -> PointConfig:
    return PointConfig.make([(1, t, t * t) for t in ts], 2)


def line_config(ts) -> PointConfig:
    return PointConfig.make([(t, 1) for t in ts], 1)


def p2_conic_restriction_check(samples: int = 50, seed: int = 0) -> dict:
    """[1; t; t^2] on the conic versus [t; 1] on the line."""
    rng = sample_rng(seed, "conic")
    ratios = set()
    bad_v, mismatched = [], []
    for _ in range(samples):
        ts = [rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE) for _ in range(6)]
        w, V = p2_map(conic_config(ts))
        if V != 0:
            bad_v.append(ts)
        r = ratio(w.as_list(), igusa_p1_map(line_config(ts)).as_list())
        if r is None or r == 0:
            mismatched.append(ts)
        else:
            ratios.add(r)
    ok = not bad_v and not mismatched and len(ratios) == 1
    return {"pass": ok, "samples": samples, "V_nonzero": bad_v[:3],
            "mismatched": mismatched[:3], "constants": sorted(ratios)}


# ---------------------------------------------------------------------------
# six points on P^3

COORDS = "wxyz"

P3_SEEDS = (
    (Fraction(1, 2), "w2 w4 w6 x1 x2 x4 y1 y3 y5 z3 z5 z6"),
    (Fraction(1), "w1 w2 w4 x5 x6^2 y1 y2 y5 z3^2 z4"),
    (Fraction(-1, 2), "w2 w3^2 x5^2 x6 y2 y4^2 z1^2 z6"),
    (Fraction(2), "w2 w3 w4 x3 x5 x6 y4 y5 y6 z1^2 z2"),
    (Fraction(-1), "w1 w2 w4 x3^2 x4 y5^2 y6 z1 z2 z6"),
    (Fraction(-2, 3), "w2 w5 w6 x3^2 x6 y1^2 y5 z2 z4^2"),
    (Fraction(-1, 2), "w1 w2 w3 x1 x5 x6 y2 y3 y4 z4 z5 z6"),
    (Fraction(1, 6), "w2 w3 w4 x1 x2 x5 y1 y4 y6 z3 z5 z6"),
    (Fraction(1, 4), "w1^2 w2 x2 x3^2 y5^2 y6 z4^2 z6"),
)

_TOKEN = re.compile(r"([wxyz])([1-6])(?:\^(\d+))?")


def parse_seed(text: str) -> tuple[int, ...]:
    """Exponent vector (24 entries) of a monomial like ``w1^2 x3``."""
    e = [0] * 24
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"bad factor {tok!r}")
        c, i, k = COORDS.index(m.group(1)), int(m.group(2)), int(m.group(3) or 1)
        e[4 * (i - 1) + c] += k
    return tuple(e)


def seed_audit(seeds=P3_SEEDS) -> list[tuple[str, list[int]]]:
    """Seeds whose degree in some point is not 2, with their per-point degrees."""
    bad = []
    for _, text in seeds:
        e = parse_seed(text)
        degs = [sum(e[4 * i:4 * i + 4]) for i in range(6)]
        if degs != [2] * 6:
            bad.append((text, degs))
    return bad


# Interpretations of "S5 acting through the outer action attached to x":
#   stabilizer  sum over the permutations g with outer(g) fixing x
#   fix6        sum over the permutations fixing the point 6, for every x
#   coset       sum over the permutations g with outer(g) sending a to x
ORBIT_RULES = ("stabilizer", "fix6", "coset")
DEFAULT_RULE = "coset"


def orbit_elements(rule: str, x: str) -> list[Perm]:
    group = enumerate_group(6)
    if rule == "stabilizer":
        return [g for g in group if outer_via_triangles(g).letter(x) == x]
    if rule == "fix6":
        return [g for g in group if g(6) == 6]
    if rule == "coset":
        return [g for g in group if outer_via_triangles(g).letter("a") == x]
    raise ValueError(f"unknown orbit rule {rule!r}")


def _seed_factors():
    out = []
    for c, text in P3_SEEDS:
        e = parse_seed(text)
        out.append((c, [(k % 4, k // 4, n) for k, n in enumerate(e) if n]))
    return out


@lru_cache(maxsize=None)
def p3_polys(rule: str = DEFAULT_RULE) -> dict[str, MultiPoly]:
    """Sum of the seeds under sigma in the rule's 120 permutations (acting on
    point indices) and tau in S4 (permuting w,x,y,z, weighted by sign tau)."""
    bad = seed_audit()
    if bad:
        raise ValueError(f"seed monomials not of degree 2 in every point: {bad}")
    seeds = _seed_factors()
    taus = [(t, Perm.from0(t).sign()) for t in permutations(range(4))]
    out = {}
    for x in LETTERS:
        terms: dict = {}
        for s in orbit_elements(rule, x):
            img = [s(i) - 1 for i in range(1, 7)]
            for tau, st in taus:
                for c, factors in seeds:
                    e = [0] * 24
                    for coord, i, n in factors:
                        e[4 * img[i] + tau[coord]] += n
                    e = tuple(e)
                    terms[e] = terms.get(e, 0) + c * st
        out[x] = MultiPoly(24, {k: (int(c) if c.denominator == 1 else c)
                                for k, c in terms.items() if c})
    return out


@lru_cache(maxsize=None)
def _p3_compiled(rule: str):
    return {x: _PointwiseForm(p, 4) for x, p in p3_polys(rule).items()}


def p3_map(c: PointConfig, rule: str = DEFAULT_RULE) -> InvariantVector:
    _require(c, 3)
    forms = _p3_compiled(rule)
    return InvariantVector({x: forms[x](c.points) for x in LETTERS})


def rnc_config(ts) -> PointConfig:
    return PointConfig.make([(1, t, t * t, t ** 3) for t in ts], 3)


def vandermonde(ts):
    return prod(ts[j] - ts[i] for i, j in combinations(range(len(ts)), 2))


@dataclass
class RuleOutcome:
    rule: str
    oracle: str
    matched: bool
    samples: int
    constants: list = field(default_factory=list)
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"rule": self.rule, "oracle": self.oracle, "matched": self.matched,
                "samples": self.samples, "constants": [_fmt(c) for c in self.constants],
                "witness": self.witness}


def p3_rnc_test(rule: str, oracle: str = "igusa_p1", samples: int = 25, seed: int = 0) -> RuleOutcome:
    """Compare p3 on [1; t; t^2; t^3] with igusa_p1 (or with Vandermonde times
    segre) at [t; 1].  Stops at the first mismatch, which becomes the witness."""
    rng = sample_rng(seed, "rnc")
    consts = set()
    for k in range(samples):
        ts = [rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE) for _ in range(6)]
        z = p3_map(rnc_config(ts), rule).as_list()
        line = line_config(ts)
        if oracle == "igusa_p1":
            ref = igusa_p1_map(line).as_list()
        elif oracle == "segre":
            d = vandermonde(ts)
            ref = [d * a for a in segre_map(line).as_list()]
        else:
            raise ValueError(f"unknown oracle {oracle!r}")
        r = ratio(z, ref)
        if r is None or r == 0:
            w = {"t": ts, "p3": [_fmt(a) for a in z], "oracle": [_fmt(a) for a in ref]}
            return RuleOutcome(rule, oracle, False, k + 1, sorted(consts), w)
        consts.add(r)
    if len(consts) > 1:
        return RuleOutcome(rule, oracle, False, samples, sorted(consts),
                           {"reason": "ratio varies between samples"})
    return RuleOutcome(rule, oracle, True, samples, sorted(consts))


def sl4_invariance_failures(rule: str = DEFAULT_RULE, trials: int = 6, seed: int = 0) -> list:
    """Letters whose p3 coordinate changes under an elementary matrix row operation."""
    rng = sample_rng(seed, "sl4")
    bad = []
    for _ in range(trials):
        c = sample_config(rng, 3)
        i, j = rng.sample(range(4), 2)
        s = rng.choice([1, -1, 2])
        moved = []
        for p in c.points:
            q = list(p)
            q[i] += s * p[j]
            moved.append(tuple(q))
        before = p3_map(c, rule)
        after = p3_map(PointConfig(3, tuple(moved)), rule)
        for x in LETTERS:
            if before[x] != after[x] and x not in bad:
                bad.append(x)
    return bad


# ---------------------------------------------------------------------------
# Kempe variables


def pair_dictionary() -> dict[str, frozenset]:
    """Letter pair xy -> syntheme whose three transpositions make up the
    image of (x y) under the outer isomorphism."""
    out = {}
    for x, y in combinations(LETTERS, 2):
        img = outer_via_cosets(Perm.cycle(6, x, y))
        out[x + y] = frozenset(frozenset(cyc) for cyc in img.cycles())
    return out


def kempe_label(arrows) -> str:
    """``((1,3),(2,6),(4,5))`` -> ``"13.26.45"``; each pair is an arrow first->second."""
    return ".".join(f"{a}{b}" for a, b in arrows)


def parse_kempe_label(label: str) -> tuple[tuple[int, int], ...]:
    parts = label.split(".")
    if len(parts) != 3 or any(len(p) != 2 or not p.isdigit() for p in parts):
        raise ValueError(f"bad directed syntheme label {label!r}")
    arrows = tuple((int(p[0]), int(p[1])) for p in parts)
    if sorted(i for a in arrows for i in a) != list(range(1, 7)):
        raise ValueError(f"{label!r} is not a matching of 1..6")
    return arrows


def kempe_monomial(arrows, pts):
    """(p_B - p_A)(p_D - p_C)(p_F - p_E) for arrows A->B, C->D, E->F."""
    return prod(diff(pts[b - 1], pts[a - 1]) for a, b in arrows)


def _kempe_poly(arrows) -> MultiPoly:
    P = MultiPoly.variables(12)
    out = MultiPoly.constant(1, 12)
    for a, b in arrows:
        out = out * (P[u(b)] * P[v(a)] - P[u(a)] * P[v(b)])
    return out


@lru_cache(maxsize=None)
def kempe_orientations() -> dict[str, str]:
    """Letter pair -> directed label with X == (Z_x + Z_y)/2 as polynomials.

    For each syntheme the 8 orientations are tried and the one matching with
    constant +1 is kept; a syntheme without one raises.
    """
    Z = segre_polys()
    out = {}
    for xy, syn in pair_dictionary().items():
        target = (Z[xy[0]] + Z[xy[1]]) / 2
        base = sorted(tuple(sorted(p)) for p in syn)
        found = None
        for flips in product((False, True), repeat=3):
            arrows = tuple((b, a) if f else (a, b) for (a, b), f in zip(base, flips))
            if _kempe_poly(arrows) == target:
                found = arrows
                break
        if found is None:
            raise ArithmeticError(f"no orientation of {base} matches (Z_{xy[0]}+Z_{xy[1]})/2")
        out[xy] = kempe_label(found)
    return out


KEMPE_CONSTANT = 1


@dataclass(frozen=True)
class KempeVector:
    values: dict  # directed label -> value

    def __getitem__(self, label: str):
        arrows = parse_kempe_label(label)
        key = frozenset(frozenset(a) for a in arrows)
        for lab, val in self.values.items():
            other = parse_kempe_label(lab)
            if frozenset(frozenset(a) for a in other) == key:
                flips = sum(1 for a in arrows if a not in other)
                return -val if flips % 2 else val
        raise KeyError(label)

    def to_json(self) -> dict:
        return {"values": {k: _fmt(v) for k, v in sorted(self.values.items())}}


def kempe_from_points(c: PointConfig) -> KempeVector:
    _require(c, 1)
    return KempeVector({lab: kempe_monomial(parse_kempe_label(lab), c.points)
                        for lab in kempe_orientations().values()})


def kempe_maps(vec, direction: str):
    orient = kempe_orientations()
    if direction == "ZtoX":
        return KempeVector({orient[xy]: Fraction(vec[xy[0]] + vec[xy[1]], 2)
                            for xy in orient})
    if direction == "XtoZ":
        def X(x, y):
            return vec[orient["".join(sorted(x + y))]]
        out = []
        for x in LETTERS:
            y, z = [l for l in LETTERS if l != x][:2]
            out.append(X(x, y) + X(x, z) - X(y, z))
        z = InvariantVector.from_list(out)
        back = kempe_maps(z, "ZtoX")
        bad = [lab for lab in back.values if back.values[lab] != vec[lab]]
        if bad or z.total() != 0:
            raise KempeInconsistent(f"X values violate the Segre linear relations at {bad[:3]}")
        return z
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# equivariance

EXPECTED_SIGN = {"segre": "sign", "igusa_p1": "trivial", "p2": "trivial", "p3": "trivial"}


def _map_for(name: str):
    if name == "segre":
        return 1, segre_map
    if name == "igusa_p1":
        return 1, igusa_p1_map
    if name == "p2":
        return 2, lambda c: p2_map(c)[0]
    if name == "p3":
        return 3, p3_map
    raise ValueError(f"unknown map {name!r}")


def equivariance_check(name: str, samples: int = 20, seed: int = 0, group=None) -> dict:
    """F(g.c) == s(g) * outer(g).F(c) for g in ``group`` (default: identity
    and the two generators of S6)."""
    dim, F = _map_for(name)
    if group is None:
        group = [Perm.identity(6)] + generators(6)
    rng = sample_rng(seed, f"equiv-{name}")
    cfgs = [sample_config(rng, dim) for _ in range(samples)]
    rows = []
    ok = True
    for g in group:
        t = outer_via_triangles(g)
        signs = set()
        for c in cfgs:
            moved = F(c.permuted(g)).as_list()
            ref = F(c).relabel(t).as_list()
            if moved == ref:
                signs.add(1)
            elif moved == [-a for a in ref]:
                signs.add(-1)
            else:
                signs.add(None)
        expect = g.sign() if EXPECTED_SIGN[name] == "sign" else 1
        good = signs == {expect}
        ok &= good
        rows.append({"g": str(g), "outer": format_cycles(t, letters=True), "signs": sorted(signs, key=str),
                     "expected": expect, "pass": good})
    return {"map": name, "pass": ok, "samples": samples, "rows": rows}
