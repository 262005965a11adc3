"""Marker-based codes that survive one deletion in each of up to t rows.

The payload travels verbatim; duplicated marker letters let each row report
how many symbols it lost and where its payload segment ends, and a block of
base-Q digit columns carries power-sum syndromes that a small Vandermonde
solve turns into per-row checksums.
Run with: python3 demos/04_multi_row_deletion_codes.py
"""

from composite_dna import (
    C2DSpec,
    C4DSpec,
    ReceivedRows,
    Word,
    c2d_decode,
    c2d_encode,
    c4d_decode,
    c4d_encode,
    word_to_rank_text,
    word_to_text,
)

spec = C2DSpec(k=2, t=2, m=4)
print(f"binary spec: payload m={spec.m}, prime p={spec.p}, length n={spec.n}")
payload = Word.from_ranks((1, 0, 2, 1), 2, 2)
word = c2d_encode(payload, spec)
print(word_to_text(word))

rows = word.rows()
damaged = (
    rows[0][:3] + rows[0][4:],   # one symbol lost in row 1
    rows[1][:9] + rows[1][10:],  # and one in row 2
)
received = ReceivedRows(damaged, 2, spec.n)
print("both rows lost a symbol; decoded payload:",
      word_to_rank_text(c2d_decode(received, spec)))

print()
qspec = C4DSpec(q=3, k=2, t=2, m=4)
print(f"q-ary spec: q={qspec.q}, p={qspec.p}, length n={qspec.n}")
qpayload = Word.from_ranks((5, 0, 3, 2), 3, 2)
qword = c4d_encode(qpayload, qspec)
qrows = qword.rows()
qreceived = ReceivedRows((qrows[0][:6] + qrows[0][7:], qrows[1]), 3, qspec.n)
print("one symbol lost in row 1; decoded payload:",
      word_to_rank_text(c4d_decode(qreceived, qspec)))
