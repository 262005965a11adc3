"""Tour of the ordered composite alphabet and the word text format.

A resolution-k composite letter is a nondecreasing column of k digits from
Sigma_q; a length-n word is a k x n matrix of such columns, or equivalently
the sequence of their ranks.  Run with: python3 demos/01_alphabet_tour.py
"""

from composite_dna import (
    Word,
    all_letters,
    alphabet_size,
    letter_rank,
    letter_values,
    word_from_text,
    word_to_rank_text,
    word_to_text,
)

q, k = 3, 2
values = letter_values(q, k)
print(f"alphabet Phi_{{q={q}, k={k}}} has {alphabet_size(q, k)} letters:")
for letter in all_letters(q, k):
    rank = letter_rank(letter)
    print(f"  rank {rank}: column {letter.digits}, mixture value {values[rank]}")

print()
word = Word.from_ranks((0, 3, 5, 1), q, k)
print("a length-4 word, one digit row per channel:")
print(word_to_text(word))
print("the same word as a rank sequence:")
print(word_to_rank_text(word))

parsed = word_from_text(word_to_text(word))
print("text round-trip preserves the word:", parsed == word)
