"""Tour of the tight/overtwisted decision with the certificate behind each verdict."""

from opentorus import CanonicalType, check_certificate, decide, normalize, parse_word
from opentorus.floer import hopf_invariant_B, is_l_space
from opentorus.tightness import tight_minus_dehn

examples = [
    "x y^-1",            # the figure-eight monodromy: overtwisted
    "d x y^-1",          # one boundary twist makes it tight
    "y^-4",              # reducible, left-handed: overtwisted
    "",                  # identity monodromy: tight, two copies of S^1 x S^2
    "y x^5",             # lens space family, a positive word
    "w x y^-9",          # tight although the exponent sum is negative
    "d^-1 x y x y^-1",   # periodic with a negative boundary twist
]

for text in examples:
    ct = normalize(parse_word(text))
    v = decide(ct)
    print(f"{text or '(empty)':<18} {str(ct):<26} {v.status.value:<12} {v.certificate.describe()}")
    assert check_certificate(ct, v.certificate)

print()
print("Hopf invariants of w x y^-m grow by 1/4 per extra twist:")
print("  " + ", ".join(f"m={m}: {hopf_invariant_B((1,), (m,))}" for m in range(1, 10)))

print()
print("Some tight structures whose monodromy is not a product of right-handed twists:")
for b in (7, 8, 12):
    ct = CanonicalType("B", 0, (1,), (b,))
    print(f"  {ct}: tight-minus-Dehn={tight_minus_dehn(ct)}, {is_l_space(ct).value}")
