"""Follow one word through every rewriting stage.

Each stage is checked against the starting word with the (trace, exponent
sum) pair, which is the open-book invariant used throughout the package.

    python demos/pipeline_walkthrough.py "x^3 y^-2 x^-1 y^4"
"""

import sys

from opentorus import normalize, open_book_invariants, parse_word
from opentorus.normalform import expand_to_word, reduce_six, to_canonical, to_m_form, to_p_form

text = sys.argv[1] if len(sys.argv) > 1 else "x^3 y^-2 x^-1 y^4"
word = parse_word(text)
print(f"input          {word}")
print(f"invariants     trace={open_book_invariants(word)[0]}, exponent sum={open_book_invariants(word)[1]}")

m = to_m_form(word)
p = to_p_form(m)
six = reduce_six(p)
ct = to_canonical(six)
for label, stage in [("M form", m), ("p form", p), ("six type", six), ("canonical", ct)]:
    same = open_book_invariants(expand_to_word(stage)) == open_book_invariants(word)
    print(f"{label:<14} {stage}   invariants {'kept' if same else 'LOST'}")

assert normalize(word) == ct
# running the canonical word through again changes nothing
print(f"idempotent     {normalize(expand_to_word(ct)) == ct}")
