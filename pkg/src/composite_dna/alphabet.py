"""Ordered composite alphabet: letters, words and the rank bijection.

A letter of resolution k over Sigma_q is a nondecreasing column of k digits.
The alphabet Phi_{q,k} of all such columns has size

    Q_{q,k} = binom(k + q - 1, q - 1).

Mapping a letter sigma to the value

    v(sigma) = sum_{i=1}^{q-1} w_i(sigma) * (k+1)^(i-1)

(w_i = multiplicity of digit i in the column) is injective, and sorting the
value set A_{q,k} ascending yields the canonical bijection between Phi_{q,k}
and the rank alphabet {0, ..., Q_{q,k}-1} used by every code construction in
this package.  For q = 2 the rank of a column is simply its number of ones.

A word is a sequence of n letters, equivalently a k x n matrix whose rows are
length-n digit strings and whose columns are all nondecreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb


def alphabet_size(q: int, k: int) -> int:
    """Size Q_{q,k} of the ordered composite alphabet.

    k = 0 is allowed (Q_{q,0} = 1); it shows up as an edge case in the bound
    formulas.
    """
    if q < 1 or k < 0:
        raise ValueError(f"alphabet_size needs q >= 1 and k >= 0, got q={q}, k={k}")
    return comb(k + q - 1, q - 1)


def letter_is_valid(digits, q: int) -> bool:
    """True iff digits is a nondecreasing sequence over {0, ..., q-1}."""
    ds = tuple(digits)
    if not all(0 <= d <= q - 1 for d in ds):
        return False
    return all(ds[i] <= ds[i + 1] for i in range(len(ds) - 1))


@dataclass(frozen=True)
class Letter:
    """A single composite letter: a nondecreasing digit column over Sigma_q."""

    digits: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if self.q < 2:
            raise ValueError(f"alphabet base q must be >= 2, got {self.q}")
        if len(self.digits) < 2:
            raise ValueError(f"resolution k must be >= 2, got {len(self.digits)}")
        if not letter_is_valid(self.digits, self.q):
            raise ValueError(f"invalid letter over Sigma_{self.q}: {self.digits}")

    @property
    def k(self) -> int:
        return len(self.digits)

    def weight(self, digit: int) -> int:
        """w_digit: multiplicity of the given digit in the column."""
        return self.digits.count(digit)

    @property
    def rank(self) -> int:
        return letter_rank(self)


def _v_value(digits: tuple[int, ...], q: int) -> int:
    k = len(digits)
    return sum(digits.count(i) * (k + 1) ** (i - 1) for i in range(1, q))


@lru_cache(maxsize=None)
def _rank_tables(q: int, k: int):
    """(ascending letter tuples, digits -> rank lookup) for Phi_{q,k}."""
    # combinations_with_replacement yields exactly the nondecreasing tuples
    tuples = sorted(
        combinations_with_replacement(range(q), k), key=lambda ds: _v_value(ds, q)
    )
    assert len(tuples) == alphabet_size(q, k)
    return tuple(tuples), {ds: r for r, ds in enumerate(tuples)}


def letter_values(q: int, k: int) -> tuple[int, ...]:
    """The ascending value set A_{q,k} that the ranks index into."""
    tuples, _ = _rank_tables(q, k)
    return tuple(_v_value(ds, q) for ds in tuples)


def letter_rank(letter: Letter) -> int:
    """Rank of a letter: its index in the ascending value set A_{q,k}."""
    _, lookup = _rank_tables(letter.q, letter.k)
    return lookup[letter.digits]


def letter_unrank(rank: int, q: int, k: int) -> Letter:
    """Inverse of letter_rank."""
    tuples, _ = _rank_tables(q, k)
    if not 0 <= rank < len(tuples):
        raise ValueError(
            f"rank {rank} out of range for Phi_{{{q},{k}}} (size {len(tuples)})"
        )
    return Letter(tuples[rank], q)


def all_letters(q: int, k: int) -> tuple[Letter, ...]:
    """All of Phi_{q,k} in rank order."""
    tuples, _ = _rank_tables(q, k)
    return tuple(Letter(ds, q) for ds in tuples)


@dataclass(frozen=True)
class Word:
    """A word over Phi_{q,k}: n letters, i.e. a k x n matrix of digits."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("a word must contain at least one letter")
        q, k = self.letters[0].q, self.letters[0].k
        for lt in self.letters:
            if lt.q != q or lt.k != k:
                raise ValueError("all letters in a word must share q and k")

    @property
    def q(self) -> int:
        return self.letters[0].q

    @property
    def k(self) -> int:
        return self.letters[0].k

    @property
    def n(self) -> int:
        return len(self.letters)

    def column(self, j: int) -> Letter:
        return self.letters[j]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row view: row i collects digit i of every column."""
        return tuple(
            tuple(lt.digits[i] for lt in self.letters) for i in range(self.k)
        )

    def ranks(self) -> tuple[int, ...]:
        """Rank-sequence view over {0, ..., Q_{q,k}-1}."""
        return tuple(letter_rank(lt) for lt in self.letters)

    @classmethod
    def from_rows(cls, rows, q: int) -> "Word":
        rows = [tuple(int(d) for d in row) for row in rows]
        if len(rows) < 2:
            raise ValueError("a word needs at least two rows (k >= 2)")
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise ValueError("all rows of a word must have equal length")
        letters = []
        for j in range(n):
            col = tuple(row[j] for row in rows)
            if not letter_is_valid(col, q):
                raise ValueError(f"column {j} is not nondecreasing over Sigma_{q}: {col}")
            letters.append(Letter(col, q))
        return cls(tuple(letters))

    @classmethod
    def from_ranks(cls, ranks, q: int, k: int) -> "Word":
        return cls(tuple(letter_unrank(r, q, k) for r in ranks))

    @classmethod
    def from_letters(cls, letters) -> "Word":
        return cls(tuple(letters))


# ---------------------------------------------------------------------------
# text round-trip: the on-disk format shared with the CLI
# ---------------------------------------------------------------------------

def word_to_text(word: Word) -> str:
    """Serialize a word: a 'q k n' header plus k digit rows.

    Digits are written without separators, so q <= 10 is enforced here.
    """
    if word.q > 10:
        raise ValueError("text format only supports q <= 10")
    lines = [f"{word.q} {word.k} {word.n}"]
    lines += ["".join(str(d) for d in row) for row in word.rows()]
    return "\n".join(lines) + "\n"


def word_to_rank_text(word: Word) -> str:
    """Serialize a word in rank-sequence form: header plus one CSV line."""
    lines = [f"{word.q} {word.k} {word.n}", ",".join(str(r) for r in word.ranks())]
    return "\n".join(lines) + "\n"


def _parse_header(line: str) -> tuple[int, int, int]:
    parts = line.split()
    if len(parts) != 3:
        raise ValueError(f"expected header 'q k n', got {line!r}")
    q, k, n = (int(p) for p in parts)
    if q < 2 or q > 10 or k < 2 or n < 1:
        raise ValueError(f"bad header values q={q} k={k} n={n}")
    return q, k, n


def word_from_text(text: str) -> Word:
    """Parse either text form: k digit rows, or one comma-separated rank line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty word file")
    q, k, n = _parse_header(lines[0])
    body = lines[1:]
    if len(body) == 1:
        # k >= 2, so a one-line body can only be the rank-sequence form
        ranks = [int(tok) for tok in body[0].split(",")]
        if len(ranks) != n:
            raise ValueError(f"expected {n} ranks, got {len(ranks)}")
        return Word.from_ranks(ranks, q, k)
    if len(body) != k:
        raise ValueError(f"expected {k} digit rows or 1 rank line, got {len(body)} lines")
    rows = []
    for row in body:
        if len(row) != n or not row.isdigit():
            raise ValueError(f"bad digit row {row!r} (expected {n} digits)")
        rows.append(tuple(int(ch) for ch in row))
    return Word.from_rows(rows, q)
