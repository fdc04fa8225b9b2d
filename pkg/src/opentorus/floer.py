"""Exact grading arithmetic, L-space status and the first-homology closed form.

Every quantity is a :class:`fractions.Fraction` or an int; nothing here uses
floating point.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Sequence

from .mcg import h1_order
from .normalform import CanonicalType, expand_to_word


class LSpaceStatus(Enum):
    LSPACE = "L-space"
    NOT_LSPACE = "not an L-space"
    OUT_OF_SCOPE = "out of scope"


def _check_ab(a: Sequence[int], b: Sequence[int]):
    if len(a) != len(b) or not a:
        raise ValueError("a and b must be non-empty lists of equal length")
    if min(a) < 0 or min(b) < 0:
        raise ValueError("exponents must be non-negative")
    if not any(a) or not any(b):
        raise ValueError("need some a_i != 0 and some b_j != 0")


def hopf_invariant_B(a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Hopf invariant of ``w x^a1 y^-b1 ... x^an y^-bn``: ``-1 + sum(b_i - a_i) / 4``."""
    _check_ab(a, b)
    return -1 + Fraction(sum(b) - sum(a), 4)


def lens_gradings(m: int) -> list[Fraction]:
    """Absolute gradings ``((2j - m)^2 - m) / 4m`` of the generators of L(m, 1), j = 0..m-1."""
    if m < 1:
        raise ValueError("m must be positive")
    return [Fraction((2 * j - m) ** 2 - m, 4 * m) for j in range(m)]


def grading_shift(c1sq, sigma: int, chi: int) -> Fraction:
    return (Fraction(c1sq) - 3 * sigma - 2 * chi) / 4


def c1_squared(m: int, a: int, b: int) -> Fraction:
    """Square of the characteristic class with coordinates (a, b) on the two-handle cobordism."""
    if m < 1:
        raise ValueError("m must be positive")
    if (a - m) % 2:
        raise ValueError(f"a must have the parity of m (m={m}, a={a})")
    if b % 2 == 0:
        raise ValueError(f"b must be odd, got {b}")
    return Fraction(a * a - 4 * a * b - m * b * b, m + 4)


def _odd_square_residue(m: int) -> bool:
    # m^2 b^2 mod 4 for odd m and every odd residue of b
    return all((m * m * b * b) % 4 == 1 for b in (1, 3))


def step3_obstruction(m: int, bound: int) -> bool:
    """True when no (j, a, b) in range makes the grading of L(m,1) plus the shift hit (m-5)/4.

    The equation is cleared of denominators:
    ``(m+4)((2j-m)^2 - m) - m^2 b^2 - 4abm - 4a^2 = m(m+4)(m-5)``.
    Also checks the parity argument behind it: ``m^2 b^2`` is 1 mod 4.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be an odd positive integer")
    if not _odd_square_residue(m):
        return False
    target = m * (m + 4) * (m - 5)
    lens = {(m + 4) * ((2 * j - m) ** 2 - m) for j in range(m)}
    a_range = [a for a in range(-bound, bound + 1) if (a - m) % 2 == 0]
    b_range = [b for b in range(-bound, bound + 1) if b % 2]
    for b in b_range:
        mb = m * b
        for a in a_range:
            if target + mb * mb + 4 * a * mb + 4 * a * a in lens:
                return False
    return True


def is_l_space(ct: CanonicalType) -> LSpaceStatus:
    if ct.variant == "A":
        return LSpaceStatus.LSPACE if ct.d == 0 else LSpaceStatus.NOT_LSPACE
    if ct.variant == "B":
        return LSpaceStatus.LSPACE if ct.d in (-1, 0) else LSpaceStatus.NOT_LSPACE
    return LSpaceStatus.OUT_OF_SCOPE


def elementary_symmetric(values: Sequence[int], i: int) -> int:
    return sum(prod(c) for c in combinations(values, i))


def h1_closed_form(b: Sequence[int]) -> int:
    """``4 + sum_i (n - i + 1) * sigma_i(b)``."""
    if not b or min(b) < 0 or not any(b):
        raise ValueError("b must be non-negative with some entry non-zero")
    n = len(b)
    return 4 + sum((n - i + 1) * elementary_symmetric(b, i) for i in range(1, n + 1))


def b_list_for(ct: CanonicalType) -> tuple[int, ...]:
    """Surgery coefficients of a type-B word with d = 0: ``(0^(a1-1), b1, ..., 0^(an-1), bn)``."""
    if ct.variant != "B":
        raise ValueError("only type B words have a surgery list")
    out: list[int] = []
    for ai, bi in zip(ct.a, ct.b):
        out.extend([0] * (ai - 1))
        out.append(bi)
    return tuple(out)


def integer_homology_sphere_report(ct: CanonicalType) -> str:
    order = h1_order(expand_to_word(ct))
    if order == 1 and is_l_space(ct) is LSpaceStatus.LSPACE:
        return ("integer homology sphere L-space with a genus one fibred knot:"
                " S^3 or the Poincare sphere with either orientation")
    return "not an integer homology sphere in scope"
