"""Substitution-correcting families, from first-row flips to t-row damage.

Four constructions, in increasing generality:
 * the enumerative first-row code (invalid columns betray the error),
 * the binary one-substitution code built on a weighted checksum,
 * the q-ary one-substitution code with three checksums and marker rows,
 * the t-row code with per-row parity pairs and syndrome blocks.
Run with: python3 demos/05_substitution_codes.py
"""

from composite_dna import (
    C1SSpec,
    C2SSpec,
    DollSpec,
    ReceivedRows,
    Word,
    c1s_decode,
    c1s_encode,
    c2s_decode,
    c2s_encode,
    cecc1_decode,
    cecc1_encode,
    dec_doll,
    enc_doll,
    word_to_rank_text,
    word_to_text,
)


def flip(word, row, pos, value=None):
    rows = word.rows()
    new = value if value is not None else 1 - rows[row][pos]
    changed = rows[row][:pos] + (new,) + rows[row][pos + 1 :]
    return ReceivedRows(rows[:row] + (changed,) + rows[row + 1 :], word.q, word.n)


spec = DollSpec(2, 2, 4)
word = enc_doll((2, 1), spec)
print("first-row family, message (2, 1):")
print(word_to_text(word))
received = flip(word, 0, 1)
print("after a first-row flip the decoder returns:", dec_doll(received, spec))

print()
word = cecc1_encode((3, 1), 0, 3, 5)
print("binary one-substitution code, message (3, 1):")
print(word_to_rank_text(word))
received = flip(word, 2, 4)
print("decoded word matches:", cecc1_decode(received, 0) == word)

print()
c1s = C1SSpec(3, 2, 3)
payload = Word.from_ranks((4, 1, 5), 3, 2)
word = c1s_encode(payload, c1s)
print(f"q-ary one-substitution code stretches m=3 payload to n={c1s.n}")
received = flip(word, 1, 2, value=(word.rows()[1][2] + 1) % 3)
print("decoded payload:", word_to_rank_text(c1s_decode(received, c1s)))

print()
c2s = C2SSpec(2, 3, 2, 3)
payload = Word.from_ranks((3, 0, 2), 2, 3)
word = c2s_encode(payload, c2s)
print(f"t-row code: payload m=3 becomes n={c2s.n} with p={c2s.p}")
received = flip(word, 0, 1)
received = ReceivedRows(
    received.rows[:2] + (flip(word, 2, 17).rows[2],), 2, c2s.n
)
print("two rows hit; decoded payload:",
      word_to_rank_text(c2s_decode(received, c2s)))
