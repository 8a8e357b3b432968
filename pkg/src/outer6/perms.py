"""Permutations of {1..n} and their cycle notation.

Composition is ``(g * h)(i) == g(h(i))``: the right factor acts first.
Points are 1-based at every interface.  The letters ``a..f`` stand for
the points 1..6 wherever a permutation of the six mystic pentagons is
meant.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

LETTERS = "abcdef"


class CycleParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Perm:
    """Immutable permutation stored as a 0-based image tuple."""

    __slots__ = ("_img",)

    def __init__(self, images):
        img = tuple(int(x) - 1 for x in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {tuple(images)}")
        self._img = img

    @classmethod
    def from0(cls, img) -> Perm:
        p = cls.__new__(cls)
        p._img = tuple(img)
        return p

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls.from0(range(n))

    @classmethod
    def cycle(cls, n: int, *points) -> Perm:
        img = list(range(n))
        pts = [_point_index(p) for p in points]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
        return cls.from0(img)

    @property
    def n(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self._img)

    def __call__(self, i):
        return self._img[_point_index(i)] + 1

    def letter(self, x: str) -> str:
        return LETTERS[self._img[LETTERS.index(x)]]

    def __mul__(self, other: Perm) -> Perm:
        if other.n != self.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        g = self._img
        return Perm.from0([g[i] for i in other._img])

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for i, j in enumerate(self._img):
            inv[j] = i
        return Perm.from0(inv)

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, smallest point first, sorted."""
        seen = set()
        out = []
        for start in range(self.n):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self._img[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self._img[j]
            if len(cyc) > 1:
                out.append(tuple(c + 1 for c in cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.n - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def fixed_points(self) -> list[int]:
        return [i + 1 for i, j in enumerate(self._img) if i == j]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def conjugate_by(self, g: Perm) -> Perm:
        return g * self * g.inverse()

    def __eq__(self, other):
        return isinstance(other, Perm) and self._img == other._img

    def __lt__(self, other: Perm):
        return self._img < other._img

    def __hash__(self):
        return hash(self._img)

    def __repr__(self):
        return f"Perm({format_cycles(self)!r})"

    def __str__(self):
        return format_cycles(self)


def _point_index(p) -> int:
    if isinstance(p, str):
        return LETTERS.index(p)
    return p - 1


def compose(g: Perm, h: Perm) -> Perm:
    return g * h


def inverse(g: Perm) -> Perm:
    return g.inverse()


def sign(g: Perm) -> int:
    return g.sign()


def cycle_type(g: Perm) -> tuple[int, ...]:
    return g.cycle_type()


def parse_cycles(text: str, n: int, alphabet: str = "any") -> Perm:
    """Parse disjoint-cycle notation such as ``"(1 2)(3,4,5)"`` or ``"(ad)(bc)"``.

    ``alphabet`` is ``"points"`` (digits only), ``"letters"`` (a-f only)
    or ``"any"``.  Integers must be separated by whitespace or commas;
    single letters may also be written adjacently.  ``""`` and ``"()"``
    give the identity.
    """
    img = list(range(n))
    used: set[int] = set()
    pos, L = 0, len(text)
    while pos < L:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' but found {ch!r}", pos)
        pos += 1
        cyc: list[int] = []
        adjacent = None  # kind of the token just before, if no separator since
        comma = False
        while True:
            if pos >= L:
                raise CycleParseError("unterminated cycle", pos)
            ch = text[pos]
            if ch.isspace():
                pos += 1
                adjacent = None
                continue
            if ch == ",":
                if not cyc or comma:
                    raise CycleParseError("misplaced ','", pos)
                comma, adjacent = True, None
                pos += 1
                continue
            if ch == ")":
                if comma:
                    raise CycleParseError("expected a point after ','", pos)
                pos += 1
                break
            start = pos
            if ch.isdigit():
                kind = "int"
                while pos < L and text[pos].isdigit():
                    pos += 1
                value = int(text[start:pos])
                if alphabet == "letters":
                    raise CycleParseError(f"expected a letter, found {text[start:pos]!r}", start)
            elif ch.isalpha():
                kind = "letter"
                if ch not in LETTERS:
                    raise CycleParseError(f"unknown letter {ch!r}", start)
                if alphabet == "points":
                    raise CycleParseError(f"expected a point 1-{n}, found {ch!r}", start)
                value = LETTERS.index(ch) + 1
                pos += 1
            else:
                raise CycleParseError(f"unexpected character {ch!r}", pos)
            if adjacent is not None and not (adjacent == kind == "letter"):
                raise CycleParseError("missing separator between points", start)
            if not 1 <= value <= n:
                raise CycleParseError(f"point {text[start:pos]} out of range 1..{n}", start)
            if value - 1 in used:
                raise CycleParseError(f"point {text[start:pos]} repeated", start)
            used.add(value - 1)
            cyc.append(value - 1)
            adjacent, comma = kind, False
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return Perm.from0(img)


def format_cycles(g: Perm, letters: bool = False) -> str:
    cycles = g.cycles()
    if not cycles:
        return "()"
    if letters:
        return "".join("(" + " ".join(LETTERS[i - 1] for i in c) + ")" for c in cycles)
    return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycles)


@lru_cache(maxsize=None)
def enumerate_group(n: int) -> tuple[Perm, ...]:
    """All n! permutations, lexicographic by image tuple (identity first)."""
    if n > 8:
        raise ValueError(f"refusing to enumerate S_{n}: n must be <= 8")
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(Perm.from0(p) for p in permutations(range(n)))


def transpositions(n: int) -> list[Perm]:
    return [Perm.cycle(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def generators(n: int) -> list[Perm]:
    """A transposition and an n-cycle, which generate S_n."""
    return [Perm.cycle(n, 1, 2), Perm.cycle(n, *range(1, n + 1))]


def conjugacy_classes(n: int) -> dict[tuple[int, ...], list[Perm]]:
    classes: dict[tuple[int, ...], list[Perm]] = {}
    for g in enumerate_group(n):
        classes.setdefault(g.cycle_type(), []).append(g)
    return classes
