"""Words in the two Dehn twists ``x`` and ``y`` of the once-punctured torus.

A :class:`TwistWord` is a free word stored in syllable-merged form: adjacent
letters always carry different generators and no exponent is zero.  Words are
read left to right.

Grammar accepted by :func:`parse_word`::

    word   := (sep* token)* sep*
    token  := ("x" | "y" | "d" | "w") ("^" [+-]? digits)?
    sep    := "*" | whitespace

``d`` is the boundary twist ``(xy)^6`` and ``w`` is ``xyxyxy``; matching is
case-insensitive.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Generator(enum.Enum):
    X = "x"
    Y = "y"

    def __str__(self) -> str:
        return self.value


X = Generator.X
Y = Generator.Y


class Letter(NamedTuple):
    gen: Generator
    exp: int


def _merge(letters: Iterable[tuple[Generator, int]]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1].gen is gen:
            total = out[-1].exp + exp
            out.pop()
            if total:
                out.append(Letter(gen, total))
        else:
            out.append(Letter(gen, exp))
    return tuple(out)


@dataclass(frozen=True, init=False)
class TwistWord:
    letters: tuple[Letter, ...]

    def __init__(self, letters: Iterable[tuple[Generator, int]] = ()):
        object.__setattr__(self, "letters", _merge(letters))

    def __len__(self) -> int:
        """Number of syllables."""
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: TwistWord) -> TwistWord:
        return concat(self, other)

    def __pow__(self, k: int) -> TwistWord:
        if k < 0:
            return invert(self) ** -k
        if len(self.letters) > 1 and self.letters[0].gen is not self.letters[-1].gen:
            return _merged(self.letters * k)
        return TwistWord(self.letters * k)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"TwistWord({format_word(self)!r})"

    @property
    def length(self) -> int:
        """Number of single twists, i.e. the sum of ``|exp|``."""
        return sum(abs(e) for _, e in self.letters)


def _merged(letters: tuple[Letter, ...]) -> TwistWord:
    # trusted constructor for letters that are already syllable-merged
    w = object.__new__(TwistWord)
    object.__setattr__(w, "letters", letters)
    return w


EMPTY = TwistWord()


def word(*letters: tuple[Generator, int]) -> TwistWord:
    return TwistWord(letters)


def gen_power(gen: Generator, exp: int) -> TwistWord:
    return TwistWord([(gen, exp)])


XY = TwistWord([(X, 1), (Y, 1)])
W = XY ** 3
DELTA = XY ** 6


class WordSyntaxError(ValueError):
    """Raised for malformed word text; ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, message: str, text: str, index: int):
        self.offset = len(text[:index].encode("utf-8"))
        self.text = text
        super().__init__(f"{message} at byte offset {self.offset}")


_TOKEN = re.compile(r"([xywd])(?:\^([+-]?\d+))?", re.IGNORECASE)
_SEP = re.compile(r"[\s*]+")
_SUGAR = {"d": DELTA, "w": W}


def parse_word(text: str) -> TwistWord:
    parts: list[Letter] = []
    pos = 0
    while pos < len(text):
        sep = _SEP.match(text, pos)
        if sep:
            pos = sep.end()
            continue
        tok = _TOKEN.match(text, pos)
        if not tok:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        if tok.group(2) is None and text.startswith("^", tok.end()):
            raise WordSyntaxError("expected an integer after '^'", text, tok.end() + 1)
        name = tok.group(1).lower()
        exp = int(tok.group(2)) if tok.group(2) is not None else 1
        if name in _SUGAR:
            parts.extend((_SUGAR[name] ** exp).letters)
        else:
            parts.append(Letter(Generator(name), exp))
        pos = tok.end()
        if pos < len(text) and not _SEP.match(text, pos) and not _TOKEN.match(text, pos):
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
    return TwistWord(parts)


def format_word(w: TwistWord) -> str:
    return " ".join(
        str(g) if e == 1 else f"{g}^{e}" for g, e in w.letters
    )


def exponent_sum(w: TwistWord) -> int:
    return sum(e for _, e in w.letters)


def concat(a: TwistWord, b: TwistWord) -> TwistWord:
    left, right = list(a.letters), list(b.letters)
    # only the seam can merge, possibly cascading through cancellations
    while left and right and left[-1].gen is right[0].gen:
        total = left[-1].exp + right[0].exp
        left.pop()
        g = right.pop(0).gen
        if total:
            left.append(Letter(g, total))
            break
    return _merged(tuple(left) + tuple(right))


def invert(a: TwistWord) -> TwistWord:
    return TwistWord((g, -e) for g, e in reversed(a.letters))


def cyclic_rotate(a: TwistWord, positions: int) -> TwistWord:
    """Move ``positions`` single twists from the front of ``a`` to its back.

    Negative ``positions`` move twists from the back to the front.  Syllables
    are split where the cut falls inside them.
    """
    total = a.length
    if total == 0:
        return a
    cut = positions % total
    head: list[Letter] = []
    tail: list[Letter] = []
    for g, e in a.letters:
        size = abs(e)
        if cut >= size:
            head.append(Letter(g, e))
            cut -= size
        elif cut > 0:
            sign = 1 if e > 0 else -1
            head.append(Letter(g, sign * cut))
            tail.append(Letter(g, e - sign * cut))
            cut = 0
        else:
            tail.append(Letter(g, e))
    return TwistWord(tail + head)


def cyclic_reduce(a: TwistWord) -> TwistWord:
    """Rotate until the first and last syllables use different generators.

    The result is a cyclic rotation of ``a`` (so the same open book) with
    syllables merged across the wrap.
    """
    letters = list(a.letters)
    while len(letters) >= 2 and letters[0].gen is letters[-1].gen:
        last = letters.pop()
        merged = list(_merge([last, letters[0]]))
        letters = merged + letters[1:]
        letters = list(_merge(letters))
    return TwistWord(letters)
