"""The verification suite behind ``outer6 verify``.

Every check returns a status and a JSON-ready detail record.  Reports list
all checks in a fixed order; checks outside the requested suite appear as
"skipped".  Nothing here depends on the clock unless timing is asked for,
so two runs with the same seed produce identical reports.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from . import moduli as M
from . import mystic, reps
from .exact import MultiPoly, projectively_equal, ratio
from .perms import LETTERS, Perm, enumerate_group, format_cycles

VERSION = "0.1.0"
SUITES = ("outer", "reps", "segre", "igusa", "duality", "p2", "p3", "kempe")
PASS, FAIL, DEGENERATE, UNRESOLVED, SKIPPED, ERROR = (
    "pass", "fail", "degenerate", "unresolved", "skipped", "error")


@dataclass
class CheckRecord:
    name: str
    suite: str
    status: str
    details: dict = field(default_factory=dict)
    seed: int | None = None
    seconds: float | None = None

    def to_json(self, timing: bool = False) -> dict:
        out = {"name": self.name, "suite": self.suite, "status": self.status,
               "seed": self.seed, "details": self.details}
        if timing:
            out["seconds"] = round(self.seconds or 0.0, 3)
        return out


@dataclass
class RunReport:
    checks: list[CheckRecord]
    suite: str
    seed: int
    trials: int

    @property
    def exit_code(self) -> int:
        """0 when nothing failed, 1 on a failed check, 3 on an internal error.

        "unresolved" is not a failure: it marks an open interpretation whose
        candidates were all rejected, reported with witnesses.
        """
        statuses = {c.status for c in self.checks}
        if ERROR in statuses:
            return 3
        if FAIL in statuses or DEGENERATE in statuses:
            return 1
        return 0

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for c in self.checks:
            counts[c.status] = counts.get(c.status, 0) + 1
        return dict(sorted(counts.items()))

    def to_json(self, timing: bool = False) -> dict:
        return {
            "artifact_version": VERSION,
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "constants": frozen_constants(),
            "letter_dictionary": mystic.letter_dictionary(),
            "summary": self.summary(),
            "checks": [c.to_json(timing) for c in self.checks],
        }


def frozen_constants() -> dict:
    return {
        "duality_lambda": M._fmt(M.DUALITY_LAMBDA),
        "p2_scale": M._fmt(M.P2_SCALE),
        "p2_kappa": M.P2_KAPPA,
        "igusa_N": {"same": M.N_SAME, "opposite": M.N_OPPOSITE},
        "kempe_constant": M.KEMPE_CONSTANT,
        "kempe_orientations": M.kempe_orientations(),
        "cross_ratio_witness": {"|".join(k): list(v) for k, v in M.CROSS_RATIO_WITNESS.items()},
        "p3_rule": M.DEFAULT_RULE,
        "coset_numbering": "inverse",
        "pair_dictionary": {k: mystic.fmt_syntheme(s) for k, s in M.pair_dictionary().items()},
    }


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# ---------------------------------------------------------------------------
# outer automorphism and its avatars


def check_enumerations(ctx):
    counts = {
        "mystic_colorings": mystic.count_mystic_colorings(),
        "pentagons": len(mystic.enumerate_pentagons()),
        "triangle_colorings": len(mystic.enumerate_triangle_colorings()),
        "ordered_triangle_colorings": len(mystic.enumerate_triangle_colorings(ordered=True)),
        "synthemes": len(mystic.enumerate_synthemes()),
        "pentads": len(mystic.enumerate_pentads()),
        "icosahedra": len(mystic.enumerate_icosahedra()),
        "icosahedron_orbits": mystic.count_labelings_up_to_symmetry(),
        "opposite_pairs": len(mystic.opposite_pairs()),
    }
    expected = {"mystic_colorings": 6, "pentagons": 6, "triangle_colorings": 6,
                "ordered_triangle_colorings": 12, "synthemes": 15, "pentads": 6,
                "icosahedra": 12, "icosahedron_orbits": 12, "opposite_pairs": 6}
    # the triangle rule applied to the pentagons reproduces the brute-force list
    images = {mystic.pentagon_to_triangles(p) for p in mystic.enumerate_pentagons()}
    images |= {t.swapped() for t in images}
    brute = set(mystic.enumerate_triangle_colorings(ordered=True))
    ok = counts == expected and images == brute
    return _status(ok), {"counts": counts, "expected": expected, "pentagon_images_match": images == brute}


def check_outer_homomorphism(ctx):
    table = mystic.outer_table()
    bad = mystic.homomorphism_failures(table)
    bij = len(set(table.values())) == 720
    w = [[str(g), str(h)] for g, h in bad]
    return _status(not bad and bij), {"pairs": 720 * 720, "bijective": bij, "witnesses": w}


def check_noninner(ctx):
    rows = mystic.noninner_certificate()
    ok = len(rows) == 15 and all(r["cycle_type"] == (2, 2, 2) for r in rows)
    details = {format_cycles(r["letters"], letters=True): str(r["image"]) for r in rows}
    return _status(ok), {"images": details}


def check_cosets_inverse(ctx):
    group = enumerate_group(6)
    bad = [str(g) for g in group if mystic.outer_via_cosets(mystic.outer_via_triangles(g)) != g]
    bad2 = [str(h) for h in group if mystic.outer_via_triangles(mystic.outer_via_cosets(h)) != h]
    t12 = format_cycles(mystic.outer_via_triangles(Perm.cycle(6, 1, 2)), letters=True)
    return _status(not bad and not bad2), {
        "elements": 720, "f_after_T_failures": bad[:5], "T_after_f_failures": bad2[:5],
        "T((1 2))": t12, "stabilizer_order": mystic.stabilizer_order_check(),
    }


def check_pentad_misprint(ctx):
    rep = mystic.pentad_misprint_report()
    ok = (len(rep["matched"]) == 4 and rep["not_a_partition"] == ["12/35/56"]
          and rep["corrected_to"] == ["12/35/46"])
    bad = mystic.pentad_equivariance_failures()
    rep["equivariance_failures"] = [str(g) for g in bad]
    return _status(ok and not bad), rep


def check_icosahedra(ctx):
    icos = mystic.enumerate_icosahedra()
    images = [mystic.icosahedron_to_pentagon(l) for l in icos]
    bijective = len({(p.label, col) for p, col in images}) == 12
    same_pentagon = all(images[i][0] == images[j][0] and images[i][1] != images[j][1]
                        for i, j in mystic.opposite_pairs())
    equiv = mystic.icosahedron_equivariance_failures()
    golden = mystic.golden_conjugation_check()
    ok = bijective and same_pentagon and not equiv and golden["pass"]
    return _status(ok), {"bijective": bijective, "opposites_share_pentagon": same_pentagon,
                         "equivariance_failures": len(equiv), "golden": golden}


# ---------------------------------------------------------------------------
# characters


def check_characters(ctx):
    table = reps.inner_product_table()
    pairs = {k: k[1:-1].split(",") for k in table}
    norms_ok = all(table[k] == 1 for k, (a, b) in pairs.items() if a == b)
    orth_ok = all(table[k] == 0 for k, (a, b) in pairs.items() if a != b)
    restr = reps.restriction_check()
    twelve = reps.twelve_variable_report()
    swaps = reps.color_swap_report()
    inter = reps.outer_intertwines_check()
    ok = (norms_ok and orth_ok and all(restr.values()) and all(twelve.values())
          and swaps["odd_swaps_all"] and swaps["even_swaps_none"] and inter)
    return _status(ok), {"inner_products": {k: M._fmt(v) for k, v in table.items()},
                         "restrictions": restr, "twelve_variable": twelve,
                         "colour_swaps": swaps, "outer_intertwines": inter}


# ---------------------------------------------------------------------------
# Segre cubic


def check_segre_identities(ctx):
    Z = list(M.segre_polys().values())
    s1 = reduce(lambda a, b: a + b, Z)
    s3 = reduce(lambda a, b: a + b, (z * z * z for z in Z))
    return _status(s1.is_zero() and s3.is_zero()), {
        "terms_per_coordinate": [len(z) for z in Z],
        "sum_is_zero": s1.is_zero(), "cubic_is_zero": s3.is_zero()}


def check_cross_ratio(ctx):
    P = MultiPoly.variables(8)
    pts = [(P[2 * i], P[2 * i + 1]) for i in range(4)]
    X, Y, Zc = M.sym_cross_ratio(*pts)
    line_ok = (X + Y + Zc).is_zero()
    wit = M.CROSS_RATIO_WITNESS[("ab", "cd", "ef")]
    rng = M.sample_rng(ctx.seed, "cross-ratio")
    bad = []
    for _ in range(25):
        c = M.sample_config(rng, 1)
        tri = M.cross_ratio_from_Z(M.segre_map(c))
        ref = M.sym_cross_ratio(*[c.points[i - 1] for i in wit])
        if not projectively_equal(tri, ref):
            bad.append(c.to_json())
    return _status(line_ok and not bad), {"line_identity": line_ok, "witness": list(wit),
                                          "samples": 25, "mismatches": bad[:2]}


def _equivariance(name, samples):
    def run(ctx):
        rep = M.equivariance_check(name, samples=samples, seed=ctx.seed)
        for row in rep["rows"]:
            row["signs"] = [s if s is not None else "mismatch" for s in row["signs"]]
        return _status(rep["pass"]), rep
    return run


# ---------------------------------------------------------------------------
# Igusa quartic


def check_igusa_linear(ctx):
    W = list(M.igusa_polys().values())
    total = reduce(lambda a, b: a + b, W)
    return _status(total.is_zero()), {"terms_per_coordinate": [len(w) for w in W],
                                      "sum_is_zero": total.is_zero()}


def check_igusa_quartic(ctx):
    res = M.igusa_quartic_pit(trials=ctx.trials, seed=ctx.seed)
    return _status(res.zero), res.to_json()


def check_igusa_unstable(ctx):
    c = M.line_config([3] * 6)
    w = M.igusa_p1_map(c)
    return _status(w.unstable), {"config": c.to_json(), "unstable": w.unstable}


# ---------------------------------------------------------------------------
# duality


def check_duality(ctx):
    rng = M.sample_rng(ctx.seed, "duality")
    lambdas, round_trip_bad, quartic_bad = set(), [], []
    for _ in range(50):
        c = M.sample_config(rng, 1)
        z = M.segre_map(c)
        w = M.duality_maps(z, "StoI")
        if M.igusa_quartic(w.as_list()) != 0:
            quartic_bad.append(c.to_json())
        if not projectively_equal(M.duality_maps(w, "ItoS").as_list(), z.as_list()):
            round_trip_bad.append(c.to_json())
        lambdas.add(ratio(w.as_list(), M.igusa_p1_map(c).as_list()))
    lam_ok = lambdas == {M.DUALITY_LAMBDA}
    ok = lam_ok and not round_trip_bad and not quartic_bad
    return _status(ok), {"samples": 50, "lambda_found": sorted(M._fmt(l) if l is not None else None
                                                                for l in lambdas),
                         "lambda_frozen": M._fmt(M.DUALITY_LAMBDA),
                         "round_trip_failures": round_trip_bad[:2], "quartic_failures": quartic_bad[:2]}


# ---------------------------------------------------------------------------
# P^2


def check_p2_double_cover(ctx):
    rng = M.sample_rng(ctx.seed, "p2")
    kappas, linear_bad = set(), []
    for _ in range(100):
        c = M.sample_config(rng, 2)
        w, V = M.p2_map(c)
        if w.total() != 0:
            linear_bad.append(c.to_json())
        if V == 0:
            continue
        kappas.add(-M.igusa_quartic(w.as_list()) / (V * V))
    ok = kappas == {Fraction(M.P2_KAPPA)} and not linear_bad
    return _status(ok), {"samples": 100, "kappa_found": [M._fmt(k) for k in sorted(kappas)],
                         "kappa_frozen": M.P2_KAPPA, "scale": M._fmt(M.P2_SCALE),
                         "sum_failures": linear_bad[:2]}


def check_p2_conic(ctx):
    rep = M.p2_conic_restriction_check(samples=50, seed=ctx.seed)
    # a coincident pair on the conic: both sides are zero or both proportional
    ts = [2, 2, 5, -7, 11, 13]
    w, V = M.p2_map(M.conic_config(ts))
    wi = M.igusa_p1_map(M.line_config(ts))
    coherent = V == 0 and ((w.unstable and wi.unstable) or
                           projectively_equal(w.as_list(), wi.as_list()))
    rep["constants"] = [M._fmt(c) for c in rep["constants"]]
    rep["degenerate_sample"] = {"t": ts, "coherent": coherent}
    return _status(rep["pass"] and coherent), rep


# ---------------------------------------------------------------------------
# P^3


def check_p3_seeds(ctx):
    bad = M.seed_audit()
    return _status(not bad), {"seeds": len(M.P3_SEEDS), "bad": bad}


def check_p3_oracle(ctx):
    """Each orbit rule against the rational normal curve oracle."""
    outcomes = [M.p3_rnc_test(r, "igusa_p1", samples=25, seed=ctx.seed) for r in M.ORBIT_RULES]
    selected = [o.rule for o in outcomes if o.matched]
    status = PASS if selected else UNRESOLVED
    return status, {"oracle": "igusa_p1 at [t; 1]", "selected": selected[:1],
                    "rejected": [o.rule for o in outcomes if not o.matched],
                    "outcomes": [o.to_json() for o in outcomes]}


def check_p3_segre(ctx):
    """On the curve, the coset rule gives Vandermonde times the Segre vector."""
    outcomes = [M.p3_rnc_test(r, "segre", samples=25, seed=ctx.seed) for r in M.ORBIT_RULES]
    default = next(o for o in outcomes if o.rule == M.DEFAULT_RULE)
    return _status(default.matched), {"oracle": "vandermonde * segre at [t; 1]",
                                      "outcomes": [o.to_json() for o in outcomes]}


def check_p3_invariance(ctx):
    bad = {r: M.sl4_invariance_failures(r, trials=4, seed=ctx.seed) for r in M.ORBIT_RULES}
    return _status(not bad[M.DEFAULT_RULE]), {"non_invariant_letters": bad}


def check_p3_unstable(ctx):
    z = M.p3_map(M.rnc_config([4] * 6))
    return _status(z.unstable), {"unstable": z.unstable}


# ---------------------------------------------------------------------------
# Kempe


def check_kempe_symbolic(ctx):
    orient = M.kempe_orientations()
    Z = M.segre_polys()
    mono = M._kempe_poly(M.parse_kempe_label(orient["ab"]))
    ok = mono == (Z["a"] + Z["b"]) / 2 and orient["ab"] == "13.26.45"
    return _status(ok and len(orient) == 15), {"ab": orient["ab"], "constant": M.KEMPE_CONSTANT,
                                               "orientations": orient}


def check_kempe_round_trip(ctx):
    rng = M.sample_rng(ctx.seed, "kempe")
    bad, points_bad = [], []
    for _ in range(50):
        c = M.sample_config(rng, 1)
        z = M.segre_map(c)
        X = M.kempe_maps(z, "ZtoX")
        if M.kempe_maps(X, "XtoZ") != z:
            bad.append(c.to_json())
        if X.values != M.kempe_from_points(c).values:
            points_bad.append(c.to_json())
    # reversing an arrow negates; a perturbed X vector is rejected
    lab = M.kempe_orientations()["ab"]
    flipped = "31" + lab[2:]
    neg_ok = X[flipped] == -X[lab]
    broken = M.KempeVector({**X.values, lab: X.values[lab] + 1})
    try:
        M.kempe_maps(broken, "XtoZ")
        detects = False
    except M.KempeInconsistent:
        detects = True
    ok = not bad and not points_bad and neg_ok and detects
    return _status(ok), {"samples": 50, "round_trip_failures": bad[:2],
                         "point_formula_failures": points_bad[:2],
                         "reversal_negates": neg_ok, "inconsistency_detected": detects}


CHECKS = [
    ("outer", "enumeration_counts", check_enumerations),
    ("outer", "outer_homomorphism", check_outer_homomorphism),
    ("outer", "noninner_certificate", check_noninner),
    ("outer", "cosets_inverse", check_cosets_inverse),
    ("outer", "pentad_misprint", check_pentad_misprint),
    ("outer", "icosahedra", check_icosahedra),
    ("reps", "characters", check_characters),
    ("segre", "segre_identities", check_segre_identities),
    ("segre", "cross_ratio", check_cross_ratio),
    ("segre", "segre_equivariance", _equivariance("segre", 20)),
    ("igusa", "igusa_linear", check_igusa_linear),
    ("igusa", "igusa_quartic_pit", check_igusa_quartic),
    ("igusa", "igusa_unstable", check_igusa_unstable),
    ("igusa", "igusa_equivariance", _equivariance("igusa_p1", 20)),
    ("duality", "duality", check_duality),
    ("p2", "p2_double_cover", check_p2_double_cover),
    ("p2", "p2_conic", check_p2_conic),
    ("p2", "p2_equivariance", _equivariance("p2", 20)),
    ("p3", "p3_seed_audit", check_p3_seeds),
    ("p3", "p3_igusa_oracle", check_p3_oracle),
    ("p3", "p3_segre_match", check_p3_segre),
    ("p3", "p3_sl4_invariance", check_p3_invariance),
    ("p3", "p3_unstable", check_p3_unstable),
    ("p3", "p3_equivariance", _equivariance("p3", 5)),
    ("kempe", "kempe_symbolic", check_kempe_symbolic),
    ("kempe", "kempe_round_trip", check_kempe_round_trip),
]


@dataclass
class Context:
    seed: int = 0
    trials: int = 64


def run_check(name: str, seed: int = 0, trials: int = 64) -> CheckRecord:
    for suite, n, fn in CHECKS:
        if n == name:
            return _run(suite, n, fn, Context(seed, trials))
    raise KeyError(name)


def _run(suite, name, fn, ctx) -> CheckRecord:
    t0 = time.perf_counter()
    try:
        status, details = fn(ctx)
    except Exception as exc:  # reported, never swallowed silently
        status, details = ERROR, {"exception": f"{type(exc).__name__}: {exc}"}
    return CheckRecord(name, suite, status, details, ctx.seed, time.perf_counter() - t0)


def run_suite(suite: str = "all", seed: int = 0, trials: int = 64) -> RunReport:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    ctx = Context(seed, trials)
    records = []
    for s, name, fn in CHECKS:
        if suite in ("all", s):
            records.append(_run(s, name, fn, ctx))
        else:
            records.append(CheckRecord(name, s, SKIPPED, {}, seed))
    return RunReport(records, suite, seed, trials)
