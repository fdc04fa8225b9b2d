"""Linking matrices of the surgery diagrams and brute-force checks of their determinant identities.

Indices follow the partial sums ``S_j = b_n + ... + b_(n-j+1)`` (the last j
entries of b).  All arithmetic is on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Sequence

from .floer import h1_closed_form


@dataclass(frozen=True)
class IntSymMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _check_b(b: Sequence[int], nonzero: bool = True):
    if not b:
        raise ValueError("b must be non-empty")
    if min(b) < 0:
        raise ValueError("b entries must be non-negative")
    if nonzero and not any(b):
        raise ValueError("some b entry must be non-zero")


def partial_sums(b: Sequence[int]) -> list[int]:
    """``[S_0, S_1, ..., S_n]`` with ``S_j`` the sum of the last j entries."""
    out = [0]
    for v in reversed(b):
        out.append(out[-1] + v)
    return out


def matrix_A(b: Sequence[int]) -> IntSymMatrix:
    """Linking matrix of size n+2 for the diagram with surgery list ``b``."""
    _check_b(b)
    n = len(b)
    S = partial_sums(b)
    M = [[0] * (n + 2) for _ in range(n + 2)]
    M[0][0] = S[n] - 4
    M[0][n + 1] = M[n + 1][0] = S[n] - 2
    for j in range(1, n + 1):
        M[0][j] = M[j][0] = S[j]
        M[n + 1][j] = M[j][n + 1] = S[j] + 1
        for i in range(1, n + 1):
            M[i][j] = S[min(i, j)] + (2 if i == j else 1)
    M[n + 1][n + 1] = S[n]
    return IntSymMatrix(M)


def matrix_bordered(base: IntSymMatrix, corner: int) -> IntSymMatrix:
    """Append a row and column of 1's with ``corner`` on the diagonal."""
    if corner not in (-1, 0):
        raise ValueError(f"corner must be -1 or 0, got {corner}")
    rows = [list(r) + [1] for r in base.entries]
    rows.append([1] * base.size + [corner])
    return IntSymMatrix(rows)


def matrix_C(b: Sequence[int]) -> IntSymMatrix:
    _check_b(b, nonzero=False)
    n = len(b)
    S = partial_sums(b)
    M = [[0] * n for _ in range(n)]
    for i in range(1, n):
        for j in range(1, n):
            M[i - 1][j - 1] = S[min(i, j)] + (2 if i == j else 1)
        M[i - 1][n - 1] = M[n - 1][i - 1] = S[i] + 2
    M[n - 1][n - 1] = S[n] + 4
    return IntSymMatrix(M)


def matrix_D(b: Sequence[int]) -> IntSymMatrix:
    n = len(b)
    if n and min(b) < 0:
        raise ValueError("b entries must be non-negative")
    S = partial_sums(b)
    return IntSymMatrix([[S[min(i, j)] + (1 if i == j else 0) for j in range(1, n + 1)]
                         for i in range(1, n + 1)])


def det_exact(m: IntSymMatrix | Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination; the empty matrix has determinant 1."""
    rows = [list(r) for r in (m.entries if isinstance(m, IntSymMatrix) else m)]
    n = len(rows)
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
        prev = pivot
    return sign * rows[-1][-1] if n else 1


def _bump_last(b: Sequence[int]) -> tuple[int, ...]:
    return tuple(b[:-1]) + (b[-1] + 1,)


def verify_h1_sum(b: Sequence[int]) -> bool:
    A = matrix_A(b)
    a, am1, a0 = det_exact(A), det_exact(matrix_bordered(A, -1)), det_exact(matrix_bordered(A, 0))
    return (am1 + a == a0
            and am1 == -det_exact(matrix_A(_bump_last(b)))
            and abs(am1) == abs(a) + abs(a0))


def h1_Q(b: Sequence[int]) -> int:
    """Order of first homology of Q(b), modelled as ``|det bordered(A(b), 0)|``."""
    return abs(det_exact(matrix_bordered(matrix_A(b), 0)))


def verify_claim_q(b: Sequence[int]) -> bool:
    if len(b) < 2:
        raise ValueError("the Q recursion needs n >= 2")
    _check_b(b)
    lhs = h1_Q(_bump_last(b))
    shorter = tuple(b[:-2]) + (b[-2] + 1,)
    return lhs == h1_Q(b) + h1_Q(shorter)


def verify_A_equals_minus_C(b: Sequence[int]) -> bool:
    return det_exact(matrix_A(b)) == -det_exact(matrix_C(b))


def verify_closed_form(b: Sequence[int]) -> bool:
    return abs(det_exact(matrix_A(b))) == h1_closed_form(b)


def verify_D_recursion(b: Sequence[int]) -> bool:
    """``D(b_1..b_n) = D(b_1..b_(n-2), b_(n-1) + b_n) + b_n D(b_1..b_(n-1))``; vacuous for n < 2."""
    if len(b) < 2:
        return True
    b = tuple(b)
    merged = b[:-2] + (b[-2] + b[-1],)
    return det_exact(matrix_D(b)) == det_exact(matrix_D(merged)) + b[-1] * det_exact(matrix_D(b[:-1]))


def verify_D_positivity(b: Sequence[int]) -> bool:
    return det_exact(matrix_D(b)) > 0


def verify_D_monotonicity(b: Sequence[int]) -> bool:
    """``D(b_1..b_n) >= D(b_2..b_n)``."""
    return det_exact(matrix_D(b)) - det_exact(matrix_D(tuple(b)[1:])) >= 0


def verify_C_positive_increasing(b: Sequence[int]) -> bool:
    c, c_next = det_exact(matrix_C(b)), det_exact(matrix_C(_bump_last(b)))
    return 0 < c < c_next


IDENTITIES: dict[str, Callable[[Sequence[int]], bool]] = {
    "h1_closed_form": verify_closed_form,
    "h1_sum": verify_h1_sum,
    "A_equals_minus_C": verify_A_equals_minus_C,
    "D_recursion": verify_D_recursion,
    "D_positivity": verify_D_positivity,
    "D_monotonicity": verify_D_monotonicity,
    "C_positive_increasing": verify_C_positive_increasing,
}


def b_vectors(nmax: int, bmax: int) -> Iterator[tuple[int, ...]]:
    """Every b with 1 <= n <= nmax, 0 <= b_i <= bmax and some entry non-zero, in a fixed order."""
    for n in range(1, nmax + 1):
        for b in product(range(bmax + 1), repeat=n):
            if any(b):
                yield b


def sweep(nmax: int, bmax: int, names: Sequence[str] | None = None) -> Iterator[tuple[str, tuple[int, ...], bool]]:
    checks = [(k, IDENTITIES[k]) for k in (names or IDENTITIES)]
    for b in b_vectors(nmax, bmax):
        for name, fn in checks:
            yield name, b, fn(b)


def format_line(name: str, b: Sequence[int], result) -> str:
    status = result if isinstance(result, str) else ("pass" if result else "fail")
    return f"{name}\t{','.join(map(str, b))}\t{status}"
