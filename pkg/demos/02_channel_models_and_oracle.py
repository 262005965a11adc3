"""Error models, random corruption, and the brute-force code oracle.

Six models describe how the k parallel channels may damage a word:
substitutions or deletions, budgeted per row, in total, or confined to at
most t unidentified rows.  The oracle declares a codebook valid when no two
codewords can produce the same raw received picture.
Run with: python3 demos/02_channel_models_and_oracle.py
"""

from composite_dna import (
    Word,
    del_total,
    oracle_is_code,
    random_errors,
    raw_received_set,
    received_to_text,
    sub_per_row,
)

word = Word.from_ranks((0, 2, 1, 2), 2, 2)
model = sub_per_row(1, 0)
print(f"model {model}: at most one substitution, first row only")
received, plan = random_errors(word, model, seed=7)
print("a seeded corruption of the word:")
print(received_to_text(received))

outputs = raw_received_set(word, model)
print(f"the word has {len(outputs)} possible raw outputs under this model")

print()
book = [Word.from_ranks(r, 2, 2) for r in [(0, 0, 0), (2, 2, 2)]]
verdict = oracle_is_code(book, del_total(1))
print(f"is the {len(book)}-word book a one-deletion code?", verdict.is_code)

book.append(Word.from_ranks((1, 0, 0), 2, 2))
verdict = oracle_is_code(book, del_total(1))
print(f"after adding a near neighbour, still a code?", verdict.is_code)
a, b, shared = verdict.witness
print("collision witness: two codewords share the received picture")
print(received_to_text(shared))
