"""Sphere-packing bounds and alphabet equivalences.

Bounds return exact rationals with a floor; equivalence maps transport a
whole codebook to a different budget profile without re-verifying it.
Run with: python3 demos/06_bounds_and_equivalence.py
"""

from composite_dna import (
    Word,
    gspb_deletion_bound,
    oracle_is_code,
    sp_bound_total,
    sub_per_row,
    transport_code,
    word_to_rank_text,
)

for n in range(2, 7):
    report = sp_bound_total(2, 2, n, 1)
    print(f"one-substitution bound, k=2, n={n}: "
          f"{report.value} (floor {report.floor})")

print()
for n in range(2, 7):
    report = gspb_deletion_bound(n, 2)
    print(f"first-row deletion bound, k=2, n={n}: "
          f"{report.value} (floor {report.floor})")

print()
book = [Word.from_ranks(r, 2, 3) for r in [(0, 0, 0), (3, 3, 3)]]
before = oracle_is_code(book, sub_per_row(1, 0, 0))
print("codebook corrects one first-row substitution:", before.is_code)
moved = transport_code(book, "shift")
after = oracle_is_code(moved, sub_per_row(0, 1, 0))
print("shifted codebook corrects one second-row substitution:", after.is_code)
print("shifted codewords:", [word_to_rank_text(w) for w in moved])
