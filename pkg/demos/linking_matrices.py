"""Linking matrices, their determinants, and where the closed form for |H_1| stops working.

The order of first homology can be read two ways: as |det| of the linking
matrix, or as |2 - trace| of the monodromy.  The two agree everywhere we look.
The symmetric-polynomial closed form agrees with both up to three surgery
coefficients and then drifts.
"""

from collections import Counter

from opentorus import W, TwistWord
from opentorus.floer import h1_closed_form, step3_obstruction
from opentorus.mcg import h1_order
from opentorus.surgeryoracle import b_vectors, det_exact, matrix_A, matrix_bordered
from opentorus.twistword import Generator

X, Y = Generator.X, Generator.Y


def by_trace(b):
    return h1_order(W * TwistWord(t for v in b for t in ((X, 1), (Y, -v))))


A = matrix_A((1,))
print("A(1) =", A.tolist(), " det", det_exact(A))
print("bordered with 0:", matrix_bordered(A, 0).tolist()[-1], " det", det_exact(matrix_bordered(A, 0)))

agree, closed = Counter(), Counter()
for b in b_vectors(5, 3):
    d = abs(det_exact(matrix_A(b)))
    agree[len(b)] += d == by_trace(b)
    closed[len(b)] += d == h1_closed_form(b)
print()
print("n  |det|=|2-tr|  |det|=closed form  (entries 0..3)")
for n in sorted(agree):
    total = 4 ** n - 1
    print(f"{n}  {agree[n]:>5}/{total:<5}  {closed[n]:>5}/{total}")

b = (0, 1, 0, 1)
print()
print(f"b={b}: det {det_exact(matrix_A(b))}, trace route {by_trace(b)}, closed form {h1_closed_form(b)}")

print()
odd = [m for m in range(1, 40, 2) if step3_obstruction(m, 60)]
print(f"grading equation has no solution for odd m = 1..39: {len(odd) == 20}")
