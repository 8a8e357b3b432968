"""Exact scalars and sparse multivariate polynomials.

Rationals are :class:`fractions.Fraction` (always in lowest terms, positive
denominator).  On top of that this module provides a prime field
:class:`Fp`, the golden field :class:`QPhi`, the dict-of-exponents
polynomial :class:`MultiPoly`, a fraction-free determinant and a
Schwartz-Zippel identity tester.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from operator import add
from typing import Callable, Sequence

MERSENNE61 = 2**61 - 1

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rat(value) -> Fraction:
    """Parse an int or a ``"num/den"`` / ``"num"`` string into a Fraction."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str):
        raise ValueError(f"not a rational: {value!r}")
    m = _RAT_RE.match(value)
    if not m:
        raise ValueError(f"malformed rational: {value!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {value!r}")
    return Fraction(int(m.group(1)), den)


def format_rat(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# prime field


class Fp:
    """Element of the prime field of order ``modulus``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus: int = MERSENNE61):
        if isinstance(value, Fp):
            if value.modulus != modulus:
                raise ValueError("modulus mismatch")
            value = value.value
        elif isinstance(value, Fraction):
            if value.denominator % modulus == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} not invertible mod {modulus}")
            value = value.numerator * pow(value.denominator, -1, modulus)
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return Fp(other, self.modulus).value
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.modulus)

    def inverse(self) -> Fp:
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return Fp(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        return Fp(other, self.modulus) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.value, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == Fp(other, self.modulus).value
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value})"


# ---------------------------------------------------------------------------
# golden field Q(phi), phi^2 = phi + 1


class QPhi:
    """``a + b*phi`` with rational ``a``, ``b``; ordered via phi = (1+sqrt5)/2."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _lift(x):
        if isinstance(x, QPhi):
            return x
        if isinstance(x, (int, Fraction)):
            return QPhi(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QPhi(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QPhi(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return QPhi(-self.a, -self.b)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        bd = self.b * o.b
        return QPhi(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def conjugate(self) -> QPhi:
        # phi -> 1 - phi
        return QPhi(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> QPhi:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 has no inverse in Q(phi)")
        c = self.conjugate()
        return QPhi(c.a / n, c.b / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = QPhi(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        """Sign of the real number a + b*phi, decided exactly."""
        # a + b/2 + (b/2) sqrt5 = p + q sqrt5
        p, q = self.a + self.b / 2, self.b / 2
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if (p > 0) == (q > 0):
            return 1 if p > 0 else -1
        # opposite signs: the larger magnitude wins
        if p * p > 5 * q * q:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * (1 + math.sqrt(5)) / 2

    def __repr__(self):
        return f"QPhi({self.a}, {self.b})"


PHI = QPhi(0, 1)


# ---------------------------------------------------------------------------
# sparse polynomials


def _is_zero(c) -> bool:
    return c == 0


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables.

    ``terms`` maps dense exponent tuples to nonzero coefficients (int,
    Fraction or Fp).  Zero is the empty map.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], object] = {}
        if terms:
            for exps, c in (terms.items() if isinstance(terms, dict) else terms):
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has arity != {nvars}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                c = self.terms.get(exps, 0) + c
                if _is_zero(c):
                    self.terms.pop(exps, None)
                else:
                    self.terms[exps] = c

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def var(cls, i: int, nvars: int) -> MultiPoly:
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def constant(cls, c, nvars: int) -> MultiPoly:
        if _is_zero(c):
            return cls._raw(nvars, {})
        return cls._raw(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps, c=1) -> MultiPoly:
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variables(cls, nvars: int) -> list[MultiPoly]:
        return [cls.var(i, nvars) for i in range(nvars)]

    def _check(self, other: MultiPoly):
        if other.nvars != self.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(other, self.nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if _is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> MultiPoly:
        if _is_zero(c):
            return MultiPoly._raw(self.nvars, {})
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        acc: dict = {}
        get = acc.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                acc[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in acc.items() if not _is_zero(c)})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(Fraction(1) / c if isinstance(c, int) else 1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        out = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self.nvars)
        return NotImplemented

    __hash__ = None

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, variables: Sequence[int]) -> set[int]:
        """Set of degrees of the terms in the given group of variables."""
        return {sum(e[i] for i in variables) for e in self.terms}

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def evaluate(self, point: Sequence):
        """Evaluate at ``point``; coefficients are mapped into the point's domain."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        if not self.terms:
            return _zero_like(point)
        maxdeg = [0] * self.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k > maxdeg[i]:
                    maxdeg[i] = k
        powers = []
        for x, m in zip(point, maxdeg):
            row = [1]
            for _ in range(m):
                row.append(row[-1] * x)
            powers.append(row)
        fp_mod = next((x.modulus for x in point if isinstance(x, Fp)), None)
        total = 0
        for e, c in self.terms.items():
            if fp_mod is not None:
                c = Fp(c, fp_mod) if not isinstance(c, Fp) else c
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * powers[i][k]
            total = total + t
        return total

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Compose: replace variable i by ``images[i]`` (all of one arity)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        out = MultiPoly.constant(0, nv)
        cache: dict = {}
        for e, c in self.terms.items():
            t = MultiPoly.constant(c, nv)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    t = t * cache[key]
            out = out + t
        return out

    def sorted_terms(self):
        """Terms in graded lexicographic order (highest degree first)."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-k for k in t[0]]))

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            cs = str(int(c)) + "/1" if isinstance(c, Fp) else format_rat(c)
            terms.append({"exponents": list(e), "coefficient": cs})
        return {"nvars": self.nvars, "terms": terms}

    @classmethod
    def from_json(cls, doc: dict) -> MultiPoly:
        return cls(doc["nvars"], [(t["exponents"], parse_rat(t["coefficient"])) for t in doc["terms"]])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def _zero_like(point):
    for x in point:
        if isinstance(x, Fp):
            return Fp(0, x.modulus)
    return 0


# ---------------------------------------------------------------------------
# determinant


def det_exact(m: Sequence[Sequence]) -> Fraction:
    """Determinant by Bareiss fraction-free elimination.

    Rows are first scaled to integers; the integer Bareiss recurrence keeps
    every intermediate exact without any rational arithmetic.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    rows = []
    scale = 1
    for row in m:
        row = [Fraction(x) for x in row]
        den = math.lcm(*(x.denominator for x in row))
        scale *= den
        rows.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


# ---------------------------------------------------------------------------
# polynomial identity testing


@dataclass(frozen=True)
class PitResult:
    zero: bool
    trials: int
    degree_bound: int
    modulus: int
    failure_bound: float
    witness: tuple[int, ...] | None = None
    value: int | None = None

    def log10_failure_bound(self) -> float | None:
        """The bound as a base-10 exponent; the float itself underflows to 0."""
        if not self.zero:
            return None
        return round(self.trials * (math.log10(self.degree_bound) - math.log10(self.modulus)), 1)

    def to_json(self) -> dict:
        return {
            "zero": self.zero,
            "trials": self.trials,
            "degree_bound": self.degree_bound,
            "modulus": self.modulus,
            "failure_bound": self.failure_bound,
            "log10_failure_bound": self.log10_failure_bound(),
            "witness": list(self.witness) if self.witness is not None else None,
            "value": self.value,
        }


def trial_rng(seed: int, trial: int) -> random.Random:
    # str seeds are hashed with sha512 by random.Random, which is stable across runs
    return random.Random(f"pit:{seed}:{trial}")


def pit_zero(evaluate: Callable[[Sequence[Fp]], Fp], arity: int, degree_bound: int,
             trials: int = 64, seed: int = 0, modulus: int = MERSENNE61) -> PitResult:
    """Schwartz-Zippel test: is the polynomial behind ``evaluate`` zero?

    ``evaluate`` receives a tuple of ``arity`` field elements.  A nonzero
    value is a certificate; otherwise the answer is wrong with probability
    at most ``(degree_bound/modulus)**trials``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    for t in range(trials):
        rng = trial_rng(seed, t)
        point = tuple(Fp(rng.randrange(modulus), modulus) for _ in range(arity))
        v = evaluate(point)
        if v != 0:
            return PitResult(False, t + 1, degree_bound, modulus, 0.0,
                             tuple(int(x) for x in point), int(Fp(v, modulus)))
    bound = (degree_bound / modulus) ** trials
    return PitResult(True, trials, degree_bound, modulus, bound)


def projectively_equal(a: Sequence, b: Sequence) -> bool:
    """Both nonzero and proportional."""
    if len(a) != len(b):
        return False
    if all(x == 0 for x in a) or all(x == 0 for x in b):
        return False
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))


def ratio(a: Sequence, b: Sequence):
    """The scalar c with a == c*b, or None when a is not a multiple of b."""
    idx = next((i for i, y in enumerate(b) if y != 0), None)
    if idx is None:
        return None
    c = Fraction(a[idx]) / Fraction(b[idx])
    if all(x == c * y for x, y in zip(a, b)):
        return c
    return None


__all__ = [
    "MERSENNE61", "Fp", "QPhi", "PHI", "MultiPoly", "det_exact", "pit_zero", "PitResult",
    "parse_rat", "format_rat", "projectively_equal", "ratio",
]
