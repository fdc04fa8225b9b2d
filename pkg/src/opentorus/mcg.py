"""Homology action of twist words and an exact equality test.

The boundary-fixing mapping class group of the once-punctured torus is the
three-strand braid group ``<x, y | xyx = yxy>``.  Its action on
``H_1(Sigma)`` (basis ``[x], [y]``) sends

    x^m -> [[1, m], [0, 1]],    y^m -> [[1, 0], [-m, 1]],

and the kernel of this map onto SL(2, Z) is the infinite cyclic group
generated by the boundary twist ``d = (xy)^6``.  Because ``d`` has exponent
sum 12, the pair (matrix, exponent sum) determines a mapping class, which is
what :func:`equal_in_mcg` checks.  Matrices multiply in reading order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .twistword import Generator, TwistWord, exponent_sum


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, o: SL2Matrix) -> SL2Matrix:
        return SL2Matrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> SL2Matrix:
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> SL2Matrix:
        # valid for determinant one
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))


IDENTITY = SL2Matrix(1, 0, 0, 1)


class DynamicsClass(enum.Enum):
    PSEUDO_ANOSOV = "pseudo-Anosov"
    REDUCIBLE = "reducible"
    PERIODIC = "periodic"

    def __str__(self) -> str:
        return self.value


def generator_matrix(gen: Generator, m: int) -> SL2Matrix:
    if gen is Generator.X:
        return SL2Matrix(1, m, 0, 1)
    return SL2Matrix(1, 0, -m, 1)


def rep_of_word(w: TwistWord) -> SL2Matrix:
    out = IDENTITY
    for g, e in w.letters:
        out = out @ generator_matrix(g, e)
    return out


def classify_trace(trace: int) -> DynamicsClass:
    if abs(trace) > 2:
        return DynamicsClass.PSEUDO_ANOSOV
    if abs(trace) == 2:
        return DynamicsClass.REDUCIBLE
    return DynamicsClass.PERIODIC


def dynamics_class(w: TwistWord) -> DynamicsClass:
    return classify_trace(rep_of_word(w).trace)


def equal_in_mcg(a: TwistWord, b: TwistWord) -> bool:
    return exponent_sum(a) == exponent_sum(b) and rep_of_word(a) == rep_of_word(b)


def open_book_invariants(w: TwistWord) -> tuple[int, int]:
    """``(trace, exponent sum)``; both are unchanged by conjugation."""
    return rep_of_word(w).trace, exponent_sum(w)


def h1_order(w: TwistWord) -> int | None:
    """Order of ``H_1`` of the closed manifold of the open book ``(Sigma, w)``.

    ``H_1`` is the cokernel of ``rep - I``, whose determinant is ``2 - trace``.
    Returns ``None`` when the group is infinite.
    """
    n = abs(2 - rep_of_word(w).trace)
    return n or None
