"""Tight versus overtwisted, decided on the canonical monodromy type.

A verdict always carries a certificate that can be re-checked mechanically
with :func:`check_certificate`:

* ``SteinWord``: a word in positive twists only, equal as an open book to the
  canonical word (same trace and exponent sum).
* ``InvariantChain``: the inductive route used for families with no single
  positive word.  It starts from a positive base word, removes twists by
  surgery steps, adds them back by naturality steps (each adds one positive
  twist, possibly inside a boundary twist), and optionally uses one grading
  step.  The exponent-sum bookkeeping must land on the canonical word.
* ``SoberingForm``: a word equal to the canonical word in which every twist
  about one curve is left-handed.  An arc crossing that curve once then has
  intersection data ``(0, 0, -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .mcg import equal_in_mcg, open_book_invariants
from .normalform import CanonicalType, canonical_tail, expand_to_word, normalize
from .twistword import DELTA, XY, Generator, TwistWord, exponent_sum, gen_power

X, Y = Generator.X, Generator.Y


class Status(Enum):
    TIGHT = "tight"
    OVERTWISTED = "overtwisted"


@dataclass(frozen=True)
class SteinWord:
    word: TwistWord

    def __post_init__(self):
        if any(e <= 0 for _, e in self.word):
            raise ValueError(f"Stein word must use positive twists only: {self.word}")

    def describe(self) -> str:
        return f"stein word: {self.word or '(empty)'}"

    def as_dict(self) -> dict:
        return {"kind": "stein", "word": str(self.word)}


@dataclass(frozen=True)
class InvariantChain:
    base: TwistWord
    surgery_steps: int = 0
    naturality_steps: int = 0
    grading_lens: int | None = None

    def describe(self) -> str:
        text = (f"invariant chain: base {self.base}, {self.surgery_steps} surgery steps,"
                f" {self.naturality_steps} naturality steps")
        if self.grading_lens is not None:
            text += f", grading step via L({self.grading_lens},1)"
        return text

    def as_dict(self) -> dict:
        return {"kind": "chain", "base": str(self.base), "surgery_steps": self.surgery_steps,
                "naturality_steps": self.naturality_steps, "grading_lens": self.grading_lens}


@dataclass(frozen=True)
class SoberingForm:
    curve: Generator
    triple: tuple[int, int, int]
    witness: TwistWord

    def describe(self) -> str:
        return (f"sobering arc across {self.curve.value}: intersections {self.triple};"
                f" left-handed form {self.witness}")

    def as_dict(self) -> dict:
        return {"kind": "sobering", "curve": self.curve.value, "triple": list(self.triple),
                "witness": str(self.witness)}


Certificate = Union[SteinWord, InvariantChain, SoberingForm]


@dataclass(frozen=True)
class Verdict:
    status: Status
    certificate: Certificate


def is_tight(ct: CanonicalType) -> bool:
    v, d = ct.variant, ct.d
    if v in ("A", "E"):
        return d >= 1
    if v in ("B", "D", "F"):
        return d >= 0
    return d > 0 or (d == 0 and ct.m >= 0)


def _pos_delta(d: int) -> TwistWord:
    return XY ** (6 * d)


def stein_witness(form) -> SteinWord | None:
    """A positive word for ``form`` when a known family produces one, else ``None``.

    ``form`` may be a canonical type or any other normal form, which is
    normalized first.
    """
    ct = form if isinstance(form, CanonicalType) else normalize(expand_to_word(form))
    v, d, m = ct.variant, ct.d, ct.m
    if d < 0:
        return None
    y = lambda e: gen_power(Y, e)
    x = lambda e: gen_power(X, e)
    if v == "C" and m >= 0:
        return SteinWord(_pos_delta(d) * y(m))
    if v == "D" and m >= -2:
        return SteinWord(_pos_delta(d) * y(2 + m) * x(1) * y(2) * x(1))
    if v == "E" and d >= 1:
        return SteinWord(_pos_delta(d - 1) * y(1) * x(2) * y(1) * x(2) * y(1) * x(4 + m))
    if v == "F":
        return SteinWord(_pos_delta(d) * y(1) * x(4 + m))
    if v == "B" and len(ct.a) == 1 and ct.b == (1,):
        return SteinWord(_pos_delta(d) * y(1) * x(ct.a[0] + 4))
    return None


def _chain(ct: CanonicalType) -> InvariantChain:
    v, d, m = ct.variant, ct.d, ct.m
    lens_base = lambda k: gen_power(Y, 1) * gen_power(X, k + 4)
    if v == "A":
        return InvariantChain(lens_base(sum(ct.a)), sum(ct.b) - 1, 6 + 12 * (d - 1))
    if v == "B":
        return InvariantChain(lens_base(sum(ct.a)), sum(ct.b) - 1, 12 * d)
    if v == "C":
        return InvariantChain(lens_base(1), -m - 1, 5 + 12 * (d - 1))
    if v == "D" and d > 0:
        return InvariantChain(lens_base(1), -m - 1, 11 + 12 * (d - 1))
    if v == "D" and m in (-3, -4):
        return InvariantChain(gen_power(X, 1) * gen_power(Y, 4 + m), 0, 1)
    if v == "D":
        k = -m
        return InvariantChain(lens_base(1), k - 1, 0, k if k % 2 else k - 1)
    raise ValueError(f"no invariant chain for {ct}")


def sobering_certificate(ct: CanonicalType) -> SoberingForm:
    if is_tight(ct):
        raise ValueError(f"{ct} is tight; no sobering arc exists")
    v, d = ct.variant, ct.d
    if ct.has_w:
        # w = d * w^-1, with w^-1 written to keep one curve left-handed
        curve = Y if v == "B" else X
        w_inv = (TwistWord([(X, -2), (Y, -1), (X, -2), (Y, -1)]) if curve is Y
                 else TwistWord([(Y, -2), (X, -1), (Y, -2), (X, -1)]))
        word = DELTA ** (d + 1) * w_inv * canonical_tail(ct)
    else:
        curve = Y if v == "A" or (v == "C" and d == 0) else X
        word = expand_to_word(ct)
    return SoberingForm(curve, (0, 0, -1), word)


def decide(ct: CanonicalType) -> Verdict:
    if not is_tight(ct):
        return Verdict(Status.OVERTWISTED, sobering_certificate(ct))
    return Verdict(Status.TIGHT, stein_witness(ct) or _chain(ct))


def dehn_obstruction(word: TwistWord) -> bool:
    """True when ``word`` cannot be a product of right-handed twists (exponent sum <= 0)."""
    return exponent_sum(word) <= 0


def tight_minus_dehn(ct: CanonicalType) -> bool:
    """Tight yet provably not a product of right-handed twists."""
    if ct.variant == "B" and ct.d >= 0 and 6 + 12 * ct.d + sum(ct.a) <= sum(ct.b):
        return True
    return is_tight(ct) and dehn_obstruction(expand_to_word(ct))


def check_certificate(ct: CanonicalType, cert: Certificate) -> bool:
    target = expand_to_word(ct)
    if isinstance(cert, SteinWord):
        positive = all(e > 0 for _, e in cert.word)
        return positive and open_book_invariants(cert.word) == open_book_invariants(target)
    if isinstance(cert, InvariantChain):
        if any(e <= 0 for _, e in cert.base) or min(cert.surgery_steps, cert.naturality_steps) < 0:
            return False
        total = (exponent_sum(cert.base) - cert.surgery_steps + cert.naturality_steps
                 - (1 if cert.grading_lens is not None else 0))
        return total == exponent_sum(target)
    if isinstance(cert, SoberingForm):
        if sum(cert.triple) > 0 or not equal_in_mcg(cert.witness, target):
            return False
        about = [e for g, e in cert.witness if g is cert.curve]
        return bool(about) and all(e < 0 for e in about)
    return False
