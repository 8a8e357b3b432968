"""The outer automorphism of S6 through mystic pentagons and their avatars.

Four equivalent families of six objects are built here: the mystic
pentagons (two-colourings of K5 into two 5-cycles), the balanced
two-colourings of the 20 triangles on six points, Sylvester's pentads,
and the 12 antipodally labelled icosahedra.  S6 acting on any of them is
the outer automorphism.

Letters and colours are fixed by the white classes frozen in
:data:`WHITE_CYCLES`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .exact import QPhi
from .perms import LETTERS, Perm, enumerate_group, generators, transpositions

POINTS5 = range(1, 6)
POINTS6 = range(1, 7)

# White 5-cycle of each lettered pentagon; the black class is the complement.
WHITE_CYCLES = {
    "a": (1, 2, 3, 4, 5),
    "b": (1, 3, 4, 2, 5),
    "c": (1, 2, 4, 5, 3),
    "d": (1, 4, 2, 3, 5),
    "e": (1, 2, 5, 3, 4),
    "f": (1, 3, 2, 5, 4),
}

WHITE, BLACK = "white", "black"


def edge(a, b) -> frozenset:
    return frozenset((a, b))


def cycle_edges(cycle) -> frozenset:
    return frozenset(edge(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1]))


K5_EDGES = frozenset(edge(a, b) for a, b in combinations(POINTS5, 2))
TRIANGLES = tuple(frozenset(t) for t in combinations(POINTS6, 3))
TETRAHEDRA = tuple(frozenset(t) for t in combinations(POINTS6, 4))


def fmt_edge(e) -> str:
    return "".join(str(i) for i in sorted(e))


def fmt_set(s) -> str:
    return "".join(str(i) for i in sorted(s))


def apply_to_set(g: Perm, s) -> frozenset:
    return frozenset(g(i) for i in s)


# ---------------------------------------------------------------------------
# pentagons


@dataclass(frozen=True)
class Pentagon:
    label: str
    white: frozenset
    black: frozenset

    def color(self, e) -> str:
        e = frozenset(e)
        if e in self.white:
            return WHITE
        if e in self.black:
            return BLACK
        raise KeyError(f"{set(e)} is not an edge of K5")

    def swapped(self) -> Pentagon:
        return Pentagon(self.label, self.black, self.white)

    def white_cycle(self) -> tuple[int, ...]:
        return _edges_to_cycle(self.white)

    def black_cycle(self) -> tuple[int, ...]:
        return _edges_to_cycle(self.black)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "white": sorted(fmt_edge(e) for e in self.white),
            "black": sorted(fmt_edge(e) for e in self.black),
            "white_cycle": list(self.white_cycle()),
            "black_cycle": list(self.black_cycle()),
        }


def _edges_to_cycle(edges) -> tuple[int, ...]:
    adj: dict[int, list[int]] = {}
    for e in edges:
        a, b = sorted(e)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = min(adj)
    cyc = [start, min(adj[start])]
    while len(cyc) < len(adj):
        nxt = [v for v in adj[cyc[-1]] if v != cyc[-2]][0]
        cyc.append(nxt)
    return tuple(cyc)


@lru_cache(maxsize=None)
def five_cycles() -> tuple[frozenset, ...]:
    """The 12 Hamiltonian cycles of K5 as edge sets."""
    out = set()
    for rest in permutations((2, 3, 4, 5)):
        out.add(cycle_edges((1,) + rest))
    return tuple(sorted(out, key=lambda s: sorted(fmt_edge(e) for e in s)))


def count_mystic_colorings() -> int:
    """Brute force over all 2^10 edge colourings of K5, counted up to colour swap."""
    edges = sorted(K5_EDGES, key=fmt_edge)
    cycles = set(five_cycles())
    found = 0
    for bits in product((0, 1), repeat=len(edges)):
        w = frozenset(e for e, b in zip(edges, bits) if b)
        if w in cycles and (K5_EDGES - w) in cycles:
            found += 1
    return found // 2


@lru_cache(maxsize=None)
def enumerate_pentagons() -> tuple[Pentagon, ...]:
    """The six complementary pairs of 5-cycles, labelled and coloured a..f."""
    cycles = five_cycles()
    pairs = []
    for c in cycles:
        comp = K5_EDGES - c
        assert comp in cycles
        pair = frozenset((c, comp))
        if pair not in pairs:
            pairs.append(pair)
    by_white = {cycle_edges(cyc): x for x, cyc in WHITE_CYCLES.items()}
    out = {}
    for pair in pairs:
        hits = [(by_white[c], c) for c in pair if c in by_white]
        if len(hits) != 1:
            raise AssertionError("canonical pentagon table is inconsistent")
        x, w = hits[0]
        out[x] = Pentagon(x, w, K5_EDGES - w)
    return tuple(out[x] for x in LETTERS)


def pentagon(x: str) -> Pentagon:
    return enumerate_pentagons()[LETTERS.index(x)]


@lru_cache(maxsize=None)
def _oriented_cycle_index() -> dict:
    """5-cycle edge set -> (letter, swapped?) where swapped means it is black."""
    idx = {}
    for p in enumerate_pentagons():
        idx[p.white] = (p.label, False)
        idx[p.black] = (p.label, True)
    return idx


def s5_signed_action(g: Perm) -> tuple[Perm, dict[str, bool]]:
    """Letter permutation i(g) and, per letter, whether g swaps its colours."""
    if g.n == 6:
        if g(6) != 6:
            raise ValueError("permutation does not fix 6")
        g = Perm.from0(g._img[:5])
    if g.n != 5:
        raise ValueError("expected an element of S5")
    idx = _oriented_cycle_index()
    img = [0] * 6
    swaps = {}
    for p in enumerate_pentagons():
        y, sw = idx[apply_edges(g, p.white)]
        img[LETTERS.index(p.label)] = LETTERS.index(y)
        swaps[p.label] = sw
    return Perm.from0(img), swaps


def apply_edges(g: Perm, edges) -> frozenset:
    return frozenset(apply_to_set(g, e) for e in edges)


def s5_action_on_pentagons(g: Perm) -> Perm:
    """The inclusion i: S5 -> S_{a..f} given by moving pentagon vertices."""
    return s5_signed_action(g)[0]


@lru_cache(maxsize=None)
def inclusion_image() -> frozenset:
    return frozenset(s5_action_on_pentagons(g) for g in enumerate_group(5))


def stabilizer_order_check() -> int:
    """Order of the subgroup of S5 whose pentagon action fixes ``a``."""
    return sum(1 for g in enumerate_group(5) if s5_action_on_pentagons(g).letter("a") == "a")


# ---------------------------------------------------------------------------
# triangle colourings


@dataclass(frozen=True)
class TriangleColoring:
    """A colouring of the 20 triangles, stored as its black class."""

    black: frozenset

    @property
    def white(self) -> frozenset:
        return frozenset(TRIANGLES) - self.black

    def color(self, t) -> str:
        return BLACK if frozenset(t) in self.black else WHITE

    def swapped(self) -> TriangleColoring:
        return TriangleColoring(self.white)

    def division(self) -> frozenset:
        return frozenset((self.black, self.white))

    def act(self, g: Perm) -> TriangleColoring:
        return TriangleColoring(frozenset(apply_to_set(g, t) for t in self.black))

    def is_valid(self) -> bool:
        all6 = frozenset(POINTS6)
        if len(self.black) != 10:
            return False
        for t in TRIANGLES:
            if (t in self.black) == ((all6 - t) in self.black):
                return False
        for tet in TETRAHEDRA:
            nb = sum(1 for t in combinations(sorted(tet), 3) if frozenset(t) in self.black)
            if nb != 2:
                return False
        return True

    def to_json(self) -> dict:
        return {"black": sorted(fmt_set(t) for t in self.black),
                "white": sorted(fmt_set(t) for t in self.white)}


def pentagon_to_triangles(p: Pentagon) -> TriangleColoring:
    """Triangle 6AB takes the colour of edge AB; triangle CDE the opposite
    colour of the complementary edge."""
    black = set()
    for t in TRIANGLES:
        if 6 in t:
            col = p.color(t - {6})
        else:
            col = p.color(frozenset(POINTS5) - t)
            col = WHITE if col == BLACK else BLACK
        if col == BLACK:
            black.add(t)
    return TriangleColoring(frozenset(black))


def enumerate_triangle_colorings(ordered: bool = False) -> list[TriangleColoring]:
    """Brute force: choose the colour of the triangle through 1 in every
    complementary pair (2^10 choices), keep those satisfying the
    tetrahedron condition.  Without ``ordered`` one representative per
    colour swap is returned, the one with {1,2,3} black."""
    all6 = frozenset(POINTS6)
    reps = [t for t in TRIANGLES if 1 in t]
    out = []
    for bits in product((0, 1), repeat=len(reps)):
        black = set()
        for t, b in zip(reps, bits):
            black.add(t if b else all6 - t)
        c = TriangleColoring(frozenset(black))
        if c.is_valid():
            out.append(c)
    if not ordered:
        out = [c for c in out if frozenset((1, 2, 3)) in c.black]
    return sorted(out, key=lambda c: sorted(fmt_set(t) for t in c.black))


@lru_cache(maxsize=None)
def canonical_colorings() -> dict[str, TriangleColoring]:
    return {p.label: pentagon_to_triangles(p) for p in enumerate_pentagons()}


@lru_cache(maxsize=None)
def _oriented_coloring_index() -> dict:
    idx = {}
    for x, c in canonical_colorings().items():
        idx[c.black] = (x, False)
        idx[c.white] = (x, True)
    return idx


def signed_outer(g: Perm) -> tuple[Perm, dict[str, bool]]:
    """Action of g in S6 on the six colourings: letter permutation plus
    whether each colouring lands on the swap of its image."""
    if g.n != 6:
        raise ValueError("expected an element of S6")
    idx = _oriented_coloring_index()
    img = [0] * 6
    swaps = {}
    for x, c in canonical_colorings().items():
        y, sw = idx[c.act(g).black]
        img[LETTERS.index(x)] = LETTERS.index(y)
        swaps[x] = sw
    return Perm.from0(img), swaps


@lru_cache(maxsize=None)
def outer_table() -> dict[Perm, Perm]:
    return {g: signed_outer(g)[0] for g in enumerate_group(6)}


@lru_cache(maxsize=None)
def outer_signed_table() -> dict[Perm, tuple[Perm, dict[str, bool]]]:
    return {g: signed_outer(g) for g in enumerate_group(6)}


def outer_via_triangles(g: Perm) -> Perm:
    """S_{1..6} -> S_{a..f}: the action on the six triangle colourings."""
    return outer_table()[g]


# ---------------------------------------------------------------------------
# cosets of i(S5)


@lru_cache(maxsize=None)
def coset_numbering(rule: str = "inverse") -> dict[Perm, int]:
    """Map every letter permutation to the number (1..6) of its left coset k i(S5).

    ``rule="smallest"`` numbers cosets in the order of their smallest
    element.  ``rule="inverse"`` gives the coset containing the image of
    the transposition (k 6) the number k (identity for k = 6), which is the
    numbering making the coset action inverse to the triangle action.
    """
    H = inclusion_image()
    group = enumerate_group(6)
    cosets: dict[frozenset, int] = {}
    owner: dict[Perm, frozenset] = {}
    for k in group:
        if k in owner:
            continue
        cos = frozenset(k * h for h in H)
        for m in cos:
            owner[m] = cos
        cosets[cos] = len(cosets) + 1
    if rule == "inverse":
        cosets = {}
        for k in POINTS6:
            g = Perm.identity(6) if k == 6 else Perm.cycle(6, k, 6)
            cosets[owner[outer_via_triangles(g)]] = k
        if len(cosets) != 6:
            raise AssertionError("transpositions (k 6) do not hit six distinct cosets")
    elif rule != "smallest":
        raise ValueError(f"unknown coset rule {rule!r}")
    return {m: cosets[c] for m, c in owner.items()}


@lru_cache(maxsize=None)
def _coset_reps(rule: str) -> dict[int, Perm]:
    reps = {}
    for m, k in coset_numbering(rule).items():
        if k not in reps or m < reps[k]:
            reps[k] = m
    return reps


def outer_via_cosets(h: Perm, rule: str = "inverse") -> Perm:
    """f: S_{a..f} -> S_{1..6}, the action of h on the cosets of i(S5)."""
    num = coset_numbering(rule)
    reps = _coset_reps(rule)
    img = [0] * 6
    for k, r in reps.items():
        img[k - 1] = num[h * r] - 1
    return Perm.from0(img)


# ---------------------------------------------------------------------------
# synthemes and pentads


def syntheme(*pairs) -> frozenset:
    s = frozenset(frozenset(p) for p in pairs)
    if len(s) != 3 or frozenset().union(*s) != frozenset(POINTS6):
        raise ValueError(f"not a syntheme: {pairs}")
    return s


def parse_syntheme(text: str) -> frozenset:
    """``"12/35/46"`` -> syntheme; raises on non-partitions such as 12/35/56."""
    parts = text.split("/")
    if len(parts) != 3 or any(len(p) != 2 for p in parts):
        raise ValueError(f"malformed syntheme {text!r}")
    return syntheme(*[(int(p[0]), int(p[1])) for p in parts])


def fmt_syntheme(s) -> str:
    return "/".join(fmt_edge(p) for p in sorted(s, key=lambda p: sorted(p)))


def syntheme_perm(s) -> Perm:
    img = list(range(6))
    for p in s:
        a, b = sorted(p)
        img[a - 1], img[b - 1] = b - 1, a - 1
    return Perm.from0(img)


@lru_cache(maxsize=None)
def enumerate_synthemes() -> tuple[frozenset, ...]:
    pairs = [frozenset(p) for p in combinations(POINTS6, 2)]
    out = []
    for trio in combinations(pairs, 3):
        if len(frozenset().union(*trio)) == 6:
            out.append(frozenset(trio))
    return tuple(sorted(out, key=fmt_syntheme))


@lru_cache(maxsize=None)
def enumerate_pentads() -> tuple[frozenset, ...]:
    """All 5-sets of synthemes covering each of the 15 pairs once (checks all 3003)."""
    allpairs = frozenset(frozenset(p) for p in combinations(POINTS6, 2))
    out = []
    for five in combinations(enumerate_synthemes(), 5):
        covered = [p for s in five for p in s]
        if len(covered) == 15 and frozenset(covered) == allpairs:
            out.append(frozenset(five))
    return tuple(sorted(out, key=lambda P: sorted(fmt_syntheme(s) for s in P)))


def pentad_of_pentagon(p: Pentagon) -> frozenset:
    """Match each white edge AB with the disjoint black edge CD; emit AB/CD/E6."""
    out = []
    for w in p.white:
        cds = [b for b in p.black if not (b & w)]
        if len(cds) != 1:
            raise AssertionError("white edge without a unique disjoint black edge")
        cd = cds[0]
        (e,) = frozenset(POINTS5) - w - cd
        out.append(syntheme(w, cd, (e, 6)))
    return frozenset(out)


REFERENCE_PENTAD_A = ("12/35/56", "23/14/56", "34/25/16", "45/13/26", "15/24/36")


def pentad_misprint_report() -> dict:
    """Compare the computed pentad of ``a`` with the reference list."""
    computed = pentad_of_pentagon(pentagon("a"))
    matched, invalid = [], []
    for text in REFERENCE_PENTAD_A:
        try:
            s = parse_syntheme(text)
        except ValueError:
            invalid.append(text)
            continue
        if s in computed:
            matched.append(text)
    reference_ok = {parse_syntheme(t) for t in matched}
    corrections = sorted(fmt_syntheme(s) for s in computed - reference_ok)
    return {
        "computed": sorted(fmt_syntheme(s) for s in computed),
        "reference": list(REFERENCE_PENTAD_A),
        "matched": matched,
        "not_a_partition": invalid,
        "corrected_to": corrections,
    }


def act_on_pentad(g: Perm, P) -> frozenset:
    return frozenset(frozenset(apply_to_set(g, pair) for pair in s) for s in P)


def pentad_action(g: Perm) -> Perm:
    """Letter permutation induced by g on pentads, labelled via their pentagons."""
    label = {pentad_of_pentagon(p): p.label for p in enumerate_pentagons()}
    img = [0] * 6
    for P, x in label.items():
        img[LETTERS.index(x)] = LETTERS.index(label[act_on_pentad(g, P)])
    return Perm.from0(img)


# ---------------------------------------------------------------------------
# icosahedra


def icosahedron_vertices() -> tuple[tuple[QPhi, QPhi, QPhi], ...]:
    """(+-1, +-phi, 0), (0, +-1, +-phi), (+-phi, 0, +-1) over Q(phi)."""
    one, phi, zero = QPhi(1), QPhi(0, 1), QPhi(0)
    out = []
    for s1, s2 in product((1, -1), repeat=2):
        out.append((one * s1, phi * s2, zero))
        out.append((zero, one * s1, phi * s2))
        out.append((phi * s1, zero, one * s2))
    return tuple(out)


def _sqdist(p, q) -> QPhi:
    return sum(((a - b) * (a - b) for a, b in zip(p, q)), QPhi(0))


def _faces_of(vertices) -> tuple[frozenset, ...]:
    """Vertex-index triples that are pairwise at minimal distance."""
    n = len(vertices)
    d = {(i, j): _sqdist(vertices[i], vertices[j]) for i in range(n) for j in range(i + 1, n)}
    m = min(d.values())
    adj = {k for k, v in d.items() if v == m}
    return tuple(frozenset(t) for t in combinations(range(n), 3)
                 if {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= adj)


@dataclass(frozen=True)
class Icosahedron:
    """Fixed combinatorial icosahedron: faces, adjacency, antipodal classes."""

    vertices: tuple
    faces: tuple
    neighbors: dict
    antipode: tuple
    axes: tuple  # axis index of each vertex, 0..5

    @classmethod
    @lru_cache(maxsize=None)
    def standard(cls) -> Icosahedron:
        verts = icosahedron_vertices()
        faces = _faces_of(verts)
        nb = {i: set() for i in range(len(verts))}
        for f in faces:
            for a, b in combinations(f, 2):
                nb[a].add(b)
                nb[b].add(a)
        antipode = tuple(verts.index(tuple(-c for c in v)) for v in verts)
        axes, reps = [], []
        for i in range(len(verts)):
            r = min(i, antipode[i])
            if r not in reps:
                reps.append(r)
            axes.append(reps.index(r))
        return cls(verts, faces, {k: frozenset(v) for k, v in nb.items()}, antipode, tuple(axes))

    def rim(self, v: int) -> tuple[int, ...]:
        """Neighbours of v in cyclic order."""
        ring = sorted(self.neighbors[v])
        cyc = [ring[0]]
        while len(cyc) < 5:
            nxt = [w for w in self.neighbors[cyc[-1]] & self.neighbors[v] if w not in cyc]
            cyc.append(min(nxt))
        return tuple(cyc)

    def symmetries(self) -> list[tuple[int, ...]]:
        """All 120 rotations and reflections, as vertex permutations.

        A symmetry commutes with the antipodal map, so it is fixed by where
        vertex 0 and its rim go; the antipodes of those cover the rest.
        """
        faceset = set(self.faces)
        rim0 = self.rim(0)
        out = []
        for a in range(12):
            ra = self.rim(a)
            for turn in range(5):
                for direction in (1, -1):
                    m = {0: a}
                    for k, v in enumerate(rim0):
                        m[v] = ra[(turn + direction * k) % 5]
                    for v in list(m):
                        m[self.antipode[v]] = self.antipode[m[v]]
                    perm = tuple(m[i] for i in range(12))
                    if all(frozenset(perm[i] for i in f) in faceset for f in self.faces):
                        out.append(perm)
        return sorted(set(out))


@dataclass(frozen=True)
class IcosLabeling:
    """A labelling of the six antipodal vertex pairs by 1..6, kept as its
    10 face triples plus one representative assignment."""

    triples: frozenset
    labels: tuple  # label of each axis, axis order of Icosahedron.standard()

    def relabel(self, g: Perm) -> IcosLabeling:
        return make_labeling(tuple(g(x) for x in self.labels))

    def rim_cycle(self) -> tuple[int, ...]:
        ico = Icosahedron.standard()
        v = next(i for i in range(12) if self.labels[ico.axes[i]] == 6)
        return tuple(self.labels[ico.axes[w]] for w in ico.rim(v))

    def to_json(self) -> dict:
        return {"triples": sorted(fmt_set(t) for t in self.triples),
                "rim": list(self.rim_cycle())}


def labeling_triples(labels, faces=None) -> frozenset:
    ico = Icosahedron.standard()
    faces = ico.faces if faces is None else faces
    return frozenset(frozenset(labels[ico.axes[v]] for v in f) for f in faces)


def make_labeling(labels) -> IcosLabeling:
    return IcosLabeling(labeling_triples(labels), tuple(labels))


@lru_cache(maxsize=None)
def enumerate_icosahedra() -> tuple[IcosLabeling, ...]:
    """The 12 labellings up to symmetry, by distinct triple sets over all 720."""
    seen: dict[frozenset, tuple] = {}
    for labels in permutations(POINTS6):
        t = labeling_triples(labels)
        if t not in seen:
            seen[t] = labels
    out = [IcosLabeling(t, lab) for t, lab in seen.items()]
    return tuple(sorted(out, key=lambda l: sorted(fmt_set(t) for t in l.triples)))


def count_labelings_up_to_symmetry() -> int:
    """Orbit count of the 720 axis labellings under the 120 symmetries."""
    ico = Icosahedron.standard()
    axis_perms = set()
    for s in ico.symmetries():
        ap = [0] * 6
        for v in range(12):
            ap[ico.axes[v]] = ico.axes[s[v]]
        axis_perms.add(tuple(ap))
    seen = set()
    orbits = 0
    for labels in permutations(POINTS6):
        if labels in seen:
            continue
        orbits += 1
        for ap in axis_perms:
            moved = [0] * 6
            for a in range(6):
                moved[ap[a]] = labels[a]
            seen.add(tuple(moved))
    return orbits


def opposite_pairs() -> list[tuple[int, int]]:
    icos = enumerate_icosahedra()
    pairs = []
    for i, j in combinations(range(len(icos)), 2):
        if not (icos[i].triples & icos[j].triples):
            pairs.append((i, j))
    return pairs


def icosahedron_to_pentagon(l: IcosLabeling) -> tuple[Pentagon, str]:
    """Pentagon whose colour class is the cycle of labels around vertex 6,
    together with that colour."""
    x, swapped = _oriented_cycle_index()[cycle_edges(l.rim_cycle())]
    return pentagon(x), (BLACK if swapped else WHITE)


def golden_conjugation_check() -> dict:
    """Galois conjugation of the vertex coordinates yields the opposite labelling."""
    ico = Icosahedron.standard()
    conj = tuple(tuple(c.conjugate() for c in v) for v in ico.vertices)
    conj_faces = _faces_of(conj)
    anti_ok = all(tuple(-c for c in conj[i]) == conj[ico.antipode[i]] for i in range(12))
    disjoint = True
    opposite_found = True
    triples = {l.triples for l in enumerate_icosahedra()}
    for labels in permutations(POINTS6):
        a = labeling_triples(labels)
        b = labeling_triples(labels, conj_faces)
        if a & b:
            disjoint = False
        if b not in triples:
            opposite_found = False
    return {
        "vertices": len(ico.vertices),
        "faces": len(ico.faces),
        "conjugate_faces": len(conj_faces),
        "antipodes_preserved": anti_ok,
        "conjugate_is_opposite": disjoint and opposite_found,
        "pass": len(ico.vertices) == 12 and len(ico.faces) == 20 and len(conj_faces) == 20
        and anti_ok and disjoint and opposite_found,
    }


# ---------------------------------------------------------------------------
# verification helpers


def homomorphism_failures(table: dict[Perm, Perm], limit: int = 1) -> list:
    """Exhaustive check of table[g*h] == table[g]*table[h]; returns witnesses."""
    items = list(table.items())
    # raw image tuples avoid Perm allocation in the 720x720 loop
    imgs = [v._img for _, v in items]
    keys = [g._img for g, _ in items]
    index = {k: i for i, k in enumerate(keys)}
    bad = []
    for i, gi in enumerate(keys):
        ti = imgs[i]
        for j, hj in enumerate(keys):
            gh = index[tuple(gi[k] for k in hj)]
            tj = imgs[j]
            if imgs[gh] != tuple(ti[k] for k in tj):
                bad.append((items[i][0], items[j][0]))
                if len(bad) >= limit:
                    return bad
    return bad


def noninner_certificate() -> list[dict]:
    """Images of the 15 letter transpositions under the coset map."""
    out = []
    for t in transpositions(6):
        img = outer_via_cosets(t)
        out.append({"letters": t, "image": img, "cycle_type": img.cycle_type()})
    return out


def pentad_equivariance_failures() -> list[Perm]:
    return [g for g in generators(6) if pentad_action(g) != outer_via_triangles(g)]


def icosahedron_equivariance_failures() -> list:
    bad = []
    for g in generators(6):
        t = outer_via_triangles(g)
        for l in enumerate_icosahedra():
            before = icosahedron_to_pentagon(l)[0].label
            after = icosahedron_to_pentagon(l.relabel(g))[0].label
            if after != t.letter(before):
                bad.append((g, l))
    return bad


def letter_dictionary() -> dict[str, list[int]]:
    return {p.label: list(p.white_cycle()) for p in enumerate_pentagons()}
