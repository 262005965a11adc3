"""Systematic single-deletion correction over the composite alphabet.

The binary family embeds a message into free positions, fixes the rest so a
weighted checksum lands in a target class, and the decoder locates any one
lost symbol from the checksum deficit.
Run with: python3 demos/03_single_deletion_code.py
"""

import itertools

from composite_dna import (
    ReceivedRows,
    Word,
    c1d_contains,
    c1d_decode,
    c1d_encode,
    c1d_message,
    c1d_message_length,
    word_to_text,
)

k, n, a = 2, 6, 0
length = c1d_message_length(k, n)
print(f"k={k}, n={n}: {length} message symbols over {k + 1} values")

message = (2, 0, 1, 1)
word = c1d_encode(message, a, k, n)
print("encoded word:")
print(word_to_text(word))

rows = word.rows()
damaged = (rows[0][:2] + rows[0][3:],) + rows[1:]
received = ReceivedRows(damaged, 2, n)
print("after deleting one symbol from the first row, the decoder returns")
decoded = c1d_decode(received, a)
print(f"the original word: {decoded == word}")
print("and the embedded message:", c1d_message(decoded))

members = sum(
    c1d_contains(Word.from_ranks(r, 2, k), a)
    for r in itertools.product(range(k + 1), repeat=n)
)
print(f"the class a={a} holds {members} of {(k + 1) ** n} words")
