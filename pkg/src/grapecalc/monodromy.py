"""Words in the Dehn-twist generators U, V and their SL(2,Z) values.

U is the meridianal twist, V the longitudinal one:

    U = [[1, 0], [-1, 1]]        V = [[1, 1], [0, 1]]

Words evaluate left to right (first letter = leftmost factor); with this
convention the torus-bundle monodromy of the cusp fiber is
UV = [[1, 1], [-1, 0]].
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Union


class SL2Matrix(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __mul__(self, o: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(self.a * o.a + self.b * o.c,
                         self.a * o.b + self.b * o.d,
                         self.c * o.a + self.d * o.c,
                         self.c * o.b + self.d * o.d)

    def inv(self) -> "SL2Matrix":
        if self.det() != 1:
            raise ValueError("not in SL(2,Z)")
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def neg(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    def trace(self) -> int:
        return self.a + self.d

    def __pow__(self, k: int) -> "SL2Matrix":
        if k < 0:
            return self.inv() ** (-k)
        out = IDENTITY
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


IDENTITY = SL2Matrix(1, 0, 0, 1)
U = SL2Matrix(1, 0, -1, 1)
V = SL2Matrix(1, 1, 0, 1)

_GENS = {"U": U, "V": V}


def parse_word(word: str) -> str:
    """Validate and flatten a word over {U, V}; `(UV)^3 V^2` style powers
    are expanded."""
    word = word.replace(" ", "")
    out = []

    def expand(s: str) -> str:
        res = []
        i = 0
        while i < len(s):
            ch = s[i]
            if ch in "UV":
                unit = ch
                i += 1
            elif ch == "(":
                depth = 1
                j = i + 1
                while j < len(s) and depth:
                    if s[j] == "(":
                        depth += 1
                    elif s[j] == ")":
                        depth -= 1
                    j += 1
                if depth:
                    raise ValueError("unbalanced parentheses")
                unit = expand(s[i + 1:j - 1])
                i = j
            else:
                raise ValueError(f"unexpected character {ch!r} in word")
            if i < len(s) and s[i] == "^":
                m = re.match(r"\^(\d+)", s[i:])
                if not m:
                    raise ValueError("malformed exponent")
                unit = unit * int(m.group(1))
                i += len(m.group(0))
            res.append(unit)
        return "".join(res)

    flat = expand(word)
    for ch in flat:
        if ch not in "UV":
            raise ValueError(f"letter {ch!r} is not U or V")
        out.append(ch)
    return "".join(out)


def evaluate(word: str) -> SL2Matrix:
    """Left-to-right product of the generator matrices."""
    m = IDENTITY
    for ch in parse_word(word):
        m = m * _GENS[ch]
    return m


def order(m: SL2Matrix, limit: int = 24) -> int | None:
    cur = m
    for k in range(1, limit + 1):
        if cur == IDENTITY:
            return k
        cur = cur * m
    return None


# -- fiber types -------------------------------------------------------------------


@dataclass(frozen=True)
class FiberType:
    """One of the eight simple singular fiber classes.

    kind is "I", "II", "III", "IV", "I*", "II*", "III*" or "IV*"; n is the
    index for the two infinite families (I_n needs n >= 1, I*_n needs n >= 0).
    """

    kind: str
    n: int | None = None

    _KINDS = ("I", "II", "III", "IV", "I*", "II*", "III*", "IV*")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown fiber kind {self.kind!r}")
        if self.kind == "I":
            if self.n is None or self.n < 1:
                raise ValueError("type I_n needs n >= 1")
        elif self.kind == "I*":
            if self.n is None or self.n < 0:
                raise ValueError("type I*_n needs n >= 0")
        elif self.n is not None:
            raise ValueError(f"type {self.kind} takes no index")

    def __str__(self) -> str:
        if self.n is None:
            return self.kind
        if self.kind == "I*":
            return f"I*_{self.n}"
        return f"I_{self.n}"

    @staticmethod
    def parse(text: str) -> "FiberType":
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"(I|II|III|IV)(\*?)_?(\d*)", s)
        if not m:
            raise ValueError(f"cannot parse fiber type {text!r}")
        kind = m.group(1) + m.group(2)
        idx = m.group(3)
        if kind in ("I", "I*"):
            if not idx:
                raise ValueError(f"fiber type {kind} needs an index")
            return FiberType(kind, int(idx))
        if idx:
            raise ValueError(f"fiber type {kind} takes no index")
        return FiberType(kind)


def fiber_word(t: FiberType) -> str:
    """The monodromy word attached to each fiber class."""
    if t.kind == "I":
        return "V" * t.n
    if t.kind == "II":
        return "UV"
    if t.kind == "III":
        return "UVU"
    if t.kind == "IV":
        return "UVUV"
    if t.kind == "I*":
        return "UVUVUV" + "V" * t.n
    if t.kind == "II*":
        return "UV" * 5
    if t.kind == "III*":
        return "UV" * 4 + "U"
    return "UV" * 4  # IV*


def _parabolic_index(m: SL2Matrix) -> int:
    """For trace-2 m != I, the integer k with m conjugate to V^k in SL(2,Z):
    conjugate the fixed eigenvector to (1, 0) and read the off-diagonal."""
    # primitive fixed vector of (m - I)
    a, b, c, d = m.a - 1, m.b, m.c, m.d - 1
    if a == 0 and c == 0:
        v = (1, 0)
    elif b == 0 and d == 0:
        v = (0, 1)
    else:
        # rows are proportional; solve (a, b) . v = 0
        if a == 0 and b == 0:
            a, b = c, d
        g = gcd(abs(a), abs(b))
        v = (b // g, -a // g)
    p, q = v
    g = gcd(abs(p), abs(q))
    p, q = p // g, q // g
    # complete (p, q) to an SL(2,Z) basis: find (s, t) with p*t - q*s = 1
    s, t = _bezout_column(p, q)
    G = SL2Matrix(p, s, q, t)  # columns (p,q), (s,t); det 1
    conj = G.inv() * m * G
    assert conj.a == 1 and conj.d == 1 and conj.c == 0
    return conj.b


def _bezout_column(p: int, q: int) -> tuple[int, int]:
    """(s, t) with p*t - q*s = 1 for coprime (p, q)."""
    # extended euclid: x*p + y*q = 1  ->  t = x, s = -y
    old_r, r = p, q
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_x, x = x, old_x - k * x
        old_y, y = y, old_y - k * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    return (-old_y, old_x)


def classify(m: SL2Matrix) -> Union[FiberType, str]:
    """Fiber class of a monodromy matrix, or "regular"/"unrecognized".

    Parabolic classes are detected exactly (the twist count is the invariant
    off-diagonal datum after moving the fixed vector to (1,0), taken in
    absolute value so orientation-reversed representatives land in the same
    class).  Finite-order classes are separated from their inverses by the
    sign of the lower-left entry, which fixes the rotation sense at the
    elliptic fixed point.
    """
    if m.det() != 1:
        raise ValueError("classify needs a determinant-1 matrix")
    if m == IDENTITY:
        return "regular"
    t = m.trace()
    if t == 2:
        return FiberType("I", abs(_parabolic_index(m)))
    if t == -2:
        neg = m.neg()
        if neg == IDENTITY:
            return FiberType("I*", 0)
        return FiberType("I*", abs(_parabolic_index(neg)))
    if t == 1:
        return FiberType("II") if m.c < 0 else FiberType("II*")
    if t == 0:
        return FiberType("III") if m.c < 0 else FiberType("III*")
    if t == -1:
        return FiberType("IV") if m.c < 0 else FiberType("IV*")
    return "unrecognized"


# -- the table identities -------------------------------------------------------


def verify_tables(max_n: int = 10) -> list[tuple[str, bool]]:
    """The twelve named identities behind the two fiber tables."""
    checks: list[tuple[str, bool]] = []
    UVm = evaluate("UV")
    checks.append(("braid relation UVU = VUV",
                   evaluate("UVU") == evaluate("VUV")))
    checks.append(("(UV)^6 = I and UV has order 6",
                   evaluate("(UV)^6") == IDENTITY and order(UVm) == 6))
    checks.append(("(UVU)^4 = I and UVU has order 4",
                   evaluate("(UVU)^4") == IDENTITY and order(evaluate("UVU")) == 4))
    checks.append(("(UV)^3 = -I",
                   evaluate("(UV)^3") == IDENTITY.neg()))
    checks.append((f"(UV)^3 V^n = -V^n for n <= {max_n}",
                   all(evaluate(f"(UV)^3V^{n}") == evaluate(f"V^{n}").neg()
                       for n in range(1, max_n + 1))))
    checks.append(("(UV)^5 = (UV)^-1",
                   evaluate("(UV)^5") == UVm.inv()))
    checks.append(("(UV)^4 U = (UVU)^-1",
                   evaluate("(UV)^4U") == evaluate("UVU").inv()))
    checks.append(("(UV)^4 = (UVUV)^-1",
                   evaluate("(UV)^4") == evaluate("UVUV").inv()))
    for kind in ("II", "III", "IV"):
        w = fiber_word(FiberType(kind))
        wd = fiber_word(FiberType(kind + "*"))
        prod = evaluate(w) * evaluate(wd)
        checks.append((f"duality {kind} * {kind}* = +-I",
                       prod in (IDENTITY, IDENTITY.neg())))
    types = [FiberType("I", 1), FiberType("I", 3), FiberType("II"),
             FiberType("III"), FiberType("IV"), FiberType("I*", 0),
             FiberType("I*", 2), FiberType("II*"), FiberType("III*"),
             FiberType("IV*")]
    checks.append(("classify(evaluate(word)) round-trips all eight classes",
                   all(classify(evaluate(fiber_word(t))) == t for t in types)))
    return checks
