"""Characters of the five-dimensional representations of S5 and S6.

Everything is a class function keyed by cycle type and computed by
summing over the whole group, so no matrices appear.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .mystic import outer_signed_table, s5_signed_action
from .perms import Perm, conjugacy_classes, enumerate_group, generators


class CharacterError(ValueError):
    pass


class Character:
    def __init__(self, n: int, values: dict[tuple[int, ...], int]):
        self.n = n
        self.values = dict(values)
        missing = set(conjugacy_classes(n)) - set(self.values)
        if missing:
            raise CharacterError(f"no value for classes {sorted(missing)}")

    def __call__(self, g: Perm):
        return self.values[g.cycle_type()]

    def _same(self, other: Character):
        if self.n != other.n:
            raise CharacterError(f"group mismatch: S{self.n} vs S{other.n}")

    def __add__(self, other: Character) -> Character:
        self._same(other)
        return Character(self.n, {c: v + other.values[c] for c, v in self.values.items()})

    def __sub__(self, other: Character) -> Character:
        self._same(other)
        return Character(self.n, {c: v - other.values[c] for c, v in self.values.items()})

    def tensor(self, other: Character) -> Character:
        self._same(other)
        return Character(self.n, {c: v * other.values[c] for c, v in self.values.items()})

    __mul__ = tensor

    def inner(self, other: Character) -> Fraction:
        """<a, b> = (1/|G|) sum_g a(g) b(g), summed element by element."""
        self._same(other)
        group = enumerate_group(self.n)
        total = sum(self(g) * other(g) for g in group)
        return Fraction(total, len(group))

    def restrict(self) -> Character:
        """Restriction from S6 to the S5 fixing the point 6."""
        if self.n != 6:
            raise CharacterError("restriction is from S6 to S5")
        vals = {}
        for ct in conjugacy_classes(5):
            vals[ct] = self.values[tuple(sorted(ct + (1,), reverse=True))]
        return Character(5, vals)

    def __eq__(self, other):
        return isinstance(other, Character) and self.n == other.n and self.values == other.values

    def __repr__(self):
        return f"Character(S{self.n}, {self.values})"

    def to_json(self) -> dict:
        return {"group": f"S{self.n}",
                "values": {"".join(map(str, c)): v for c, v in sorted(self.values.items())}}


def character_arith(a: Character, b: Character, op: str):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "tensor":
        return a.tensor(b)
    if op == "inner_product":
        return a.inner(b)
    raise ValueError(f"unknown character operation {op!r}")


def class_function(n: int, f: Callable[[Perm], int]) -> Character:
    """Tabulate f over S_n, insisting it is constant on conjugacy classes."""
    vals: dict[tuple[int, ...], int] = {}
    for g in enumerate_group(n):
        v = f(g)
        ct = g.cycle_type()
        if vals.setdefault(ct, v) != v:
            raise CharacterError(f"not a class function: differs on class {ct} at {g}")
    return Character(n, vals)


def check_homomorphism(n: int, action: Callable[[Perm], Perm]) -> None:
    """action(g*s) == action(g)*action(s) for all g and both generators,
    which forces a homomorphism on all of S_n."""
    for s in generators(n):
        a_s = action(s)
        for g in enumerate_group(n):
            if action(g * s) != action(g) * a_s:
                raise CharacterError(f"action is not a homomorphism at ({g}, {s})")


def perm_character(n: int, action: Callable[[Perm], Perm], signed: bool = False,
                   check: bool = True) -> Character:
    """Fixed-point count of action(g), times sign(g) when ``signed``."""
    if check:
        check_homomorphism(n, action)
    if signed:
        return class_function(n, lambda g: len(action(g).fixed_points()) * g.sign())
    return class_function(n, lambda g: len(action(g).fixed_points()))


def trivial(n: int) -> Character:
    return class_function(n, lambda g: 1)


def sign_character(n: int) -> Character:
    return class_function(n, lambda g: g.sign())


def _outer(g: Perm) -> Perm:
    return outer_signed_table()[g][0]


def _s5_on_pentagons(g: Perm) -> Perm:
    return s5_signed_action(g)[0]


@lru_cache(maxsize=None)
def named_characters() -> dict[str, Character]:
    """F5, F5', B5, B5', O5, O5' plus the trivial and sign characters."""
    one5, eps5 = trivial(5), sign_character(5)
    one6, eps6 = trivial(6), sign_character(6)
    F5 = perm_character(5, _s5_on_pentagons) - one5
    B5 = perm_character(6, lambda g: g) - one6
    O5 = perm_character(6, _outer) - one6
    return {
        "1_S5": one5, "eps_S5": eps5, "1_S6": one6, "eps_S6": eps6,
        "F5": F5, "F5'": F5 * eps5,
        "B5": B5, "B5'": B5 * eps6,
        "O5": O5, "O5'": O5 * eps6,
    }


def signed_action(group: int):
    """g -> (letter permutation, colour-swap flags) on the 12 oriented objects."""
    if group == 6:
        return lambda g: outer_signed_table()[g]
    if group == 5:
        return s5_signed_action
    raise ValueError("group must be 5 or 6")


def twelve_variable_character(mode: str, group: int) -> Character:
    """Trace of g on span{Z_x} with Z_xbar = -Z_x (antisymmetric) or +Z_x.

    g sends Z_x to Z_y, or to Z_ybar when it swaps the colours of x, so
    the trace only sees the fixed letters and their swap flags.
    """
    if mode not in ("antisymmetric", "symmetric"):
        raise ValueError(f"unknown mode {mode!r}")
    act = signed_action(group)

    def trace(g):
        perm, swaps = act(g)
        t = 0
        for x in "abcdef":
            if perm.letter(x) == x:
                t += -1 if (swaps[x] and mode == "antisymmetric") else 1
        return t

    return class_function(group, trace)


def twelve_variable_report() -> dict:
    ch = named_characters()
    rows = {
        "antisymmetric/S6": (twelve_variable_character("antisymmetric", 6), ch["O5'"] + ch["eps_S6"]),
        "symmetric/S6": (twelve_variable_character("symmetric", 6), ch["O5"] + ch["1_S6"]),
        "antisymmetric/S5": (twelve_variable_character("antisymmetric", 5), ch["F5'"] + ch["eps_S5"]),
        "symmetric/S5": (twelve_variable_character("symmetric", 5), ch["F5"] + ch["1_S5"]),
    }
    return {k: a == b for k, (a, b) in rows.items()}


def restriction_check() -> dict:
    ch = named_characters()
    return {
        "O5|S5 == F5": ch["O5"].restrict() == ch["F5"],
        "O5'|S5 == F5'": ch["O5'"].restrict() == ch["F5'"],
        "B5|S5 != F5": ch["B5"].restrict() != ch["F5"],
    }


def inner_product_table() -> dict[str, Fraction]:
    ch = named_characters()
    out = {f"<{k},{k}>": ch[k].inner(ch[k]) for k in ("F5", "F5'", "B5", "B5'", "O5", "O5'")}
    six = ("B5", "B5'", "O5", "O5'")
    for i, a in enumerate(six):
        for b in six[i + 1:]:
            out[f"<{a},{b}>"] = ch[a].inner(ch[b])
    return out


def color_swap_report() -> dict:
    """Odd permutations send every Z_x to some Z_ybar; even ones never do."""
    table = outer_signed_table()
    odd_all = odd_some = True
    even_none = True
    for g, (_, swaps) in table.items():
        if g.sign() == -1:
            odd_all &= all(swaps.values())
            odd_some &= any(swaps.values())
        else:
            even_none &= not any(swaps.values())
    return {"odd_swaps_some": odd_some, "odd_swaps_all": odd_all, "even_swaps_none": even_none}


def outer_intertwines_check() -> bool:
    """chi_O5(g) == chi_B5(outer(g)) on every element."""
    ch = named_characters()
    return all(ch["O5"](g) == ch["B5"](_outer(g)) for g in enumerate_group(6))
