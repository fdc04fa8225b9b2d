"""Rewriting twist words into canonical monodromies.

Every stage preserves the open book: each rewrite is either a relation in the
mapping class group or a cyclic rotation of the word.  The pipeline is

    word --to_m_form--> M(k; b) --to_p_form--> M(k'; entries >= 3)
         --reduce_six--> one of six shapes T1..T6 --to_canonical--> type A..F

where ``M(k; b_1, ..., b_n)`` stands for ``d^k * x y^b_1 * ... * x y^b_n`` and
the canonical types are

    A  d^k   x^a1 y^-b1 ... x^an y^-bn        B  d^k w x^a1 y^-b1 ... x^an y^-bn
    C  d^k   y^m                              D  d^k w y^m
    E  d^k   x^m y^-1,  m in {-1,-2,-3}       F  d^k w x^m y^-1,  m in {-1,-2,-3}

In an ``M`` form a pair of adjacent entries ``2, 2`` is the central element
``w``; :func:`reduce_six` keeps it as a flag instead of as list entries.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Sequence

from .twistword import (
    DELTA,
    EMPTY,
    W,
    XY,
    Generator,
    TwistWord,
    cyclic_reduce,
    format_word,
    gen_power,
)

X, Y = Generator.X, Generator.Y


@dataclass(frozen=True)
class MForm:
    k: int
    b: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))

    def __str__(self) -> str:
        return f"M({self.k}; {', '.join(map(str, self.b))})"


@dataclass(frozen=True)
class SixType:
    """One of the six reduced shapes; implicit ``2`` prefixes are not stored in ``p``.

    ===  ====================  ===============
    T1   M(d; p_1, ..., p_m)   all p_i >= 4
    T2   M(d; 2,2, p_1..p_m)   all p_i >= 4
    T3   M(d; 2, p_1)          p_1 >= 2
    T4   M(d; 2,2,2, p_1)      p_1 >= 2
    T5   M(d; p_1)             p_1 >= 1
    T6   M(d; 2,2, p_1)        p_1 >= 1
    ===  ====================  ===============
    """

    variant: int
    d: int
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        v, p = self.variant, self.p
        if v in (1, 2):
            ok = all(x >= 4 for x in p)
        elif v in (3, 4):
            ok = len(p) == 1 and p[0] >= 2
        elif v in (5, 6):
            ok = len(p) == 1 and p[0] >= 1
        else:
            raise ValueError(f"unknown six-type variant {v}")
        if not ok:
            raise ValueError(f"parameters {p} violate the T{v} constraints")

    _PREFIX = {1: (), 2: (2, 2), 3: (2,), 4: (2, 2, 2), 5: (), 6: (2, 2)}

    def as_mform(self) -> MForm:
        return MForm(self.d, self._PREFIX[self.variant] + self.p)

    def __str__(self) -> str:
        return f"T{self.variant}(d={self.d}; p={', '.join(map(str, self.p))})"


_PERIODIC_M = (-1, -2, -3)


@dataclass(frozen=True)
class CanonicalType:
    variant: str
    d: int
    a: tuple[int, ...] = ()
    b: tuple[int, ...] = ()
    m: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        v = self.variant
        if v in ("A", "B"):
            if self.m is not None:
                raise ValueError("types A and B carry exponent lists, not m")
            if len(self.a) != len(self.b) or not self.a:
                raise ValueError("a and b must be non-empty lists of equal length")
            if min(self.a) < 0 or min(self.b) < 0:
                raise ValueError("exponents of types A and B are non-negative")
            if not any(self.a) or not any(self.b):
                raise ValueError("types A and B need some a_i != 0 and some b_j != 0")
        elif v in ("C", "D", "E", "F"):
            if self.a or self.b or self.m is None:
                raise ValueError(f"type {v} carries only d and m")
            if v in ("E", "F") and self.m not in _PERIODIC_M:
                raise ValueError(f"type {v} needs m in {{-1, -2, -3}}, got {self.m}")
        else:
            raise ValueError(f"unknown canonical variant {v!r}")

    @property
    def has_w(self) -> bool:
        return self.variant in ("B", "D", "F")

    def __str__(self) -> str:
        if self.variant in ("A", "B"):
            return (f"{self.variant}(d={self.d}; a={','.join(map(str, self.a))};"
                    f" b={','.join(map(str, self.b))})")
        return f"{self.variant}(d={self.d}; m={self.m})"

    def as_dict(self) -> dict:
        out: dict = {"type": self.variant, "d": self.d}
        if self.variant in ("A", "B"):
            out["a"] = list(self.a)
            out["b"] = list(self.b)
        else:
            out["m"] = self.m
        return out


class InapplicableMove(ValueError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    """A word move on an ``M`` form.

    ``kind`` is the move number (1-6), ``position`` the index of the entry the
    move acts on (its left neighbour for moves 3 and 5 is the start of the
    run of 2's) and ``shift`` the amount moved across a 2 by move 4.
    Neighbours are taken cyclically.
    """

    kind: int
    position: int = 0
    shift: int = field(default=0)


def x_power_identity(m: int) -> TwistWord:
    """Right-hand side of ``x^m = d^-1 * xyxyxyxyx y^(m+1) x y``."""
    return DELTA ** -1 * XY ** 4 * gen_power(X, 1) * gen_power(Y, m + 1) * XY


def to_m_form(word: TwistWord) -> MForm:
    w = cyclic_reduce(word)
    syl = list(w.letters)
    if not syl:
        return MForm(0, ())
    if len(syl) == 1:
        g, e = syl[0]
        pairs = [(e, 0)] if g is X else [(0, e)]
    else:
        if syl[0].gen is Y:
            syl = syl[1:] + syl[:1]
        pairs = [(syl[i].exp, syl[i + 1].exp) for i in range(0, len(syl), 2)]
    n = len(pairs)
    entries = tuple(v + 2 for pair in pairs for v in pair)
    if n % 2 == 0:
        return MForm(-n // 2, entries)
    return MForm((-n - 1) // 2, (2, 2) + entries)


def to_p_form(form: MForm) -> MForm:
    """Rewrite ``form`` so that every entry is at least 3.

    One pass of ``M(k; b_1..b_2n) = M(k-n; 3, b_1+2, ..., 3, b_2n+2)`` is
    always applied; entries still below 3 are then raised with the local
    version ``(p, u, v) -> (p+1, 3, u+2, 3, v+1)`` at the cost of one ``d``.
    An odd-length list is first made even with the ``x^1`` identity of
    :func:`x_power_identity` on its first entry.
    """
    k = form.k
    b = list(form.b)
    if len(b) % 2:
        b = [1, 1, 1, 1, 2, b[0] + 1] + b[1:]
        k -= 1
    k -= len(b) // 2
    b = [v for e in b for v in (3, e + 2)]
    j = 0
    while j < len(b):
        if b[j] >= 3:
            j += 1
            continue
        size = len(b)
        b[(j - 1) % size] += 1
        b[(j + 1) % size] += 1
        b[j:j + 1] = [3, b[j] + 2, 3]
        k -= 1
        j += 1
    return MForm(k, tuple(b))


def reduce_six(form: MForm) -> SixType:
    """Iterate move 6 and its clean-ups until one of the six shapes remains.

    The leftmost entry equal to 3 is processed first.  Each round removes at
    least one entry, so the loop runs at most ``len(form.b)`` times.
    """
    d = form.k
    b = list(form.b)
    flag = False
    if len(b) >= 2 and b[0] == b[1] == 2:
        flag = True
        b = b[2:]
    if any(v < 3 for v in b):
        raise ValueError(f"{form} is not in p-form (entries must be >= 3)")

    def toggle():
        nonlocal flag, d
        if flag:
            flag = False
            d += 1
        else:
            flag = True

    while True:
        if 3 not in b:
            return SixType(2 if flag else 1, d, tuple(b))
        m = len(b)
        i = b.index(3)
        if m == 1:
            return SixType(6 if flag else 5, d, (3,))
        if m == 2:
            q = b[1 - i]
            if flag:
                return SixType(5, d + 1, (q - 2,))
            return SixType(6, d, (q - 2,))
        li, ri = (i - 1) % m, (i + 1) % m
        b[li] -= 1
        b[ri] -= 1
        left, right = b[li], b[ri]
        del b[i]
        toggle()
        if left != 2 and right != 2:
            continue
        if m == 3:
            q = b[1] if b[0] == 2 else b[0]
            return SixType(4 if flag else 3, d, (q,))
        size = m - 1
        li = li - 1 if li > i else li
        ri = ri - 1 if ri > i else ri
        if left == 2 and right == 2:
            drop = (li, ri)
        elif left == 2:
            pre = (li - 1) % size
            b[ri] += b[pre] - 2
            drop = (pre, li)
        else:
            post = (ri + 1) % size
            b[li] += b[post] - 2
            drop = (ri, post)
        for idx in sorted(drop, reverse=True):
            del b[idx]
        toggle()


def canonical_ab(variant: str, d: int, a: Sequence[int], b: Sequence[int]) -> CanonicalType:
    """Canonical representative of ``d^k [w] x^a1 y^-b1 ...`` with non-negative exponents."""
    flat = TwistWord(t for ai, bi in zip(a, b) for t in ((X, ai), (Y, -bi)))
    syl = list(cyclic_reduce(flat).letters)
    short = "D" if variant == "B" else "C"
    if not syl:
        return CanonicalType(short, d, m=0)
    if len(syl) == 1:
        # x^s is conjugate to y^s
        return CanonicalType(short, d, m=syl[0].exp)
    if syl[0].gen is Y:
        syl = syl[1:] + syl[:1]
    pairs = [(syl[i].exp, -syl[i + 1].exp) for i in range(0, len(syl), 2)]
    best = min(pairs[r:] + pairs[:r] for r in range(len(pairs)))
    return CanonicalType(variant, d, a=[p[0] for p in best], b=[p[1] for p in best])


def canonicalize(ct: CanonicalType) -> CanonicalType:
    """Merge zero exponents and pick the least rotation of an A/B exponent list."""
    if ct.variant in ("A", "B"):
        return canonical_ab(ct.variant, ct.d, ct.a, ct.b)
    return ct


def _single(variant: str, d: int, e: int) -> CanonicalType:
    # d^k [w] x^e y^-1
    with_w = variant == "B"
    if e < 0:
        return CanonicalType("F" if with_w else "E", d, m=e)
    if e == 0:
        return CanonicalType("D" if with_w else "C", d, m=-1)
    return CanonicalType(variant, d, a=(e,), b=(1,))


def to_canonical(six: SixType) -> CanonicalType:
    v, d, p = six.variant, six.d, six.p
    if v in (1, 2):
        m = len(p)
        odd = m % 2
        if v == 1:
            variant, shift = ("B", (m - 1) // 2) if odd else ("A", m // 2)
        else:
            variant, shift = ("A", (m + 1) // 2) if odd else ("B", m // 2)
        return canonical_ab(variant, d + shift, [x - 4 for x in p], [1] * m)
    if v == 3:
        return CanonicalType("D", d, m=p[0] - 2)
    if v == 4:
        return CanonicalType("C", d + 1, m=p[0] - 2)
    if v == 5:
        return _single("B", d, p[0] - 4)
    return _single("A", d + 1, p[0] - 4)


def normalize(word: TwistWord) -> CanonicalType:
    return to_canonical(reduce_six(to_p_form(to_m_form(word))))


def apply_move(form: MForm, move: MoveSpec) -> MForm:
    k = form.k
    b = list(form.b)
    n = len(b)
    i = move.position

    def fail(why: str):
        raise InapplicableMove(f"move {move.kind} at position {i} of {form}: {why}")

    if not 0 <= i < max(n, 1):
        fail("position out of range")
    if move.kind == 1:
        return MForm(k, b[i:] + b[:i])
    if move.kind in (2, 4, 6):
        need = {2: 1, 4: 2, 6: 3}[move.kind]
        if n < 3:
            fail("needs two distinct neighbours")
        if b[i] != need:
            fail(f"entry is {b[i]}, expected {need}")
        li, ri = (i - 1) % n, (i + 1) % n
        if move.kind == 2:
            b[li] += 1
            b[ri] += 1
            del b[i]
            return MForm(k, b)
        if move.kind == 4:
            b[li] += move.shift
            b[ri] -= move.shift
            return MForm(k, b)
        b[li] -= 1
        b[ri] -= 1
        del b[i]
        return MForm(k, [2, 2] + b)
    if move.kind in (3, 5):
        run = 4 if move.kind == 3 else 2
        if n < run:
            fail(f"needs {run} entries")
        idx = [(i + t) % n for t in range(run)]
        if any(b[t] != 2 for t in idx):
            fail(f"needs {run} consecutive 2's")
        rest = [v for t, v in enumerate(b) if t not in idx]
        if move.kind == 3:
            return MForm(k + 1, rest)
        return MForm(k, [2, 2] + rest)
    fail("no such move")


@functools.singledispatch
def expand_to_word(form) -> TwistWord:
    raise TypeError(f"cannot expand {type(form).__name__}")


@expand_to_word.register
def _(form: MForm) -> TwistWord:
    body = TwistWord(t for e in form.b for t in ((X, 1), (Y, e)))
    return DELTA ** form.k * body


@expand_to_word.register
def _(six: SixType) -> TwistWord:
    return expand_to_word(six.as_mform())


@expand_to_word.register
def _(ct: CanonicalType) -> TwistWord:
    head = DELTA ** ct.d * (W if ct.has_w else EMPTY)
    return head * canonical_tail(ct)


def canonical_tail(ct: CanonicalType) -> TwistWord:
    """The part of the canonical word after ``d^k`` and ``w``."""
    if ct.variant in ("A", "B"):
        return TwistWord(t for ai, bi in zip(ct.a, ct.b) for t in ((X, ai), (Y, -bi)))
    if ct.variant in ("C", "D"):
        return gen_power(Y, ct.m)
    return TwistWord([(X, ct.m), (Y, -1)])


def canonical_word_text(ct: CanonicalType) -> str:
    """Compact word text for ``ct`` in the input grammar (``d`` and ``w`` kept as tokens)."""
    parts = []
    if ct.d:
        parts.append("d" if ct.d == 1 else f"d^{ct.d}")
    if ct.has_w:
        parts.append("w")
    tail = canonical_tail(ct)
    if tail:
        parts.append(format_word(tail))
    return " ".join(parts)
