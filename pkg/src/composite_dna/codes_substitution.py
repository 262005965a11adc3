"""Substitution-correcting code families over the composite channel.

Four groups of constructions:

* HammingFamily / hamming_build: shortened Hamming codes C(l) over a prime
  field, the inner layer of the enumeration code below.  The check matrix
  keeps all weight-1 columns and drops the lexicographically largest
  heavier columns, so ranks are reproducible across implementations.
* DollSpec / enc_doll / dec_doll: the enumeration-encoded code correcting
  one substitution confined to row 1.  Letters split into A1 (second digit
  zero, untouchable by a detectable row-1 error only up to repair) and A2
  (second digit positive); the A2 subsequence carries a C(l) codeword.
  For q = 2 this specializes to the {k-1, k} alphabet and fill digits over
  {0, ..., k-2}; larger q requires |A2| to be prime.
* cecc1_*: the binary single-substitution code driven by the 1-limited-
  magnitude machinery on rank sequences, plus invalid-column repair.
* q1cecc_* / C1SSpec / C2SSpec: the q-ary three-checksum decoder, its
  systematic single-substitution construction, and the t-row construction
  with duplicated row parities and marker-checked syndrome blocks.

Substitution decoders take ReceivedRows with full-length rows; columns may
be non-monotone (that is the visible half of the error).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .alphabet import Letter, Word, alphabet_size, letter_unrank
from .algebra import (
    compose_base,
    cw_rank,
    cw_unrank,
    digit_width,
    expand_base,
    f_threshold,
    is_prime,
    next_prime_bertrand,
    smallest_prime_at_least,
    solve_mod_p,
)
from .channel import ReceivedRows
from .vt_core import (
    DecodeFailure,
    lme_contains,
    lme_decode,
    lme_decode_message,
    lme_encode,
    lme_message_length,
    qary_decode_one_substitution,
    vt_syndrome,
)


# ---------------------------------------------------------------------------
# shortened Hamming codes C(l)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HammingFamily:
    """The inner check code C(l) over F_field.

    For l >= 3 the columns are the projective representatives (first
    nonzero entry 1) of F_field^r in lexicographic order, shortened down to
    l columns.  l <= 2 uses the fixed singletons C(0) = {eps}, C(1) = {1},
    C(2) = {11}.
    """

    l: int
    field: int
    columns: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.columns[0]) if self.columns else self.l

    @property
    def size(self) -> int:
        return self.field ** (self.l - self.r)

    @property
    def message_coords(self) -> tuple[int, ...]:
        return tuple(
            i for i, c in enumerate(self.columns) if sum(1 for v in c if v) >= 2
        )

    @property
    def parity_coords(self) -> tuple[int, ...]:
        return tuple(
            i for i, c in enumerate(self.columns) if sum(1 for v in c if v) == 1
        )

    def encode(self, message) -> tuple[int, ...]:
        message = tuple(message)
        if self.l <= 2:
            if message:
                raise ValueError(f"C({self.l}) carries no message symbols")
            return (1,) * self.l
        coords = self.message_coords
        if len(message) != len(coords):
            raise ValueError(
                f"need {len(coords)} message symbols, got {len(message)}"
            )
        if any(not 0 <= v < self.field for v in message):
            raise ValueError(f"message symbols must lie in F_{self.field}")
        word = [0] * self.l
        for pos, v in zip(coords, message):
            word[pos] = v
        for pos in self.parity_coords:
            row = self.columns[pos].index(1)
            word[pos] = (
                -sum(self.columns[j][row] * word[j] for j in coords)
            ) % self.field
        return tuple(word)

    def syndrome(self, word) -> tuple[int, ...]:
        return tuple(
            sum(col[row] * v for col, v in zip(self.columns, word)) % self.field
            for row in range(self.r)
        )

    def decode(self, word) -> tuple[int, ...]:
        """Correct at most one substitution; DecodeFailure when impossible."""
        word = tuple(word)
        if len(word) != self.l:
            raise ValueError(f"expected length {self.l}, got {len(word)}")
        if any(not 0 <= v < self.field for v in word):
            raise ValueError(f"symbols must lie in F_{self.field}")
        if self.l == 0:
            return ()
        if self.l == 1:
            return (1,)
        if self.l == 2:
            if 1 not in word:
                raise DecodeFailure("C(2) = {11}: received differs in both symbols")
            return (1, 1)
        s = self.syndrome(word)
        if not any(s):
            return word
        beta = next(v for v in s if v)
        inv = pow(beta, -1, self.field)
        target = tuple(v * inv % self.field for v in s)
        try:
            pos = self.columns.index(target)
        except ValueError:
            raise DecodeFailure("syndrome matches no check column") from None
        fixed = list(word)
        fixed[pos] = (fixed[pos] - beta) % self.field
        return tuple(fixed)

    def message(self, word) -> tuple[int, ...]:
        if self.l <= 2:
            return ()
        return tuple(word[i] for i in self.message_coords)

    def codewords(self):
        width = self.l - self.r if self.l >= 3 else 0
        for msg in itertools.product(range(self.field), repeat=width):
            yield self.encode(msg)


@lru_cache(maxsize=None)
def hamming_build(l: int, field: int = 2) -> HammingFamily:
    if l < 0:
        raise ValueError("need l >= 0")
    if field < 2 or not is_prime(field):
        raise ValueError(f"field size must be prime, got {field}")
    if l <= 2:
        return HammingFamily(l=l, field=field, columns=())
    r = 1
    while (field**r - 1) // (field - 1) < l:
        r += 1
    cols = [
        col
        for col in itertools.product(range(field), repeat=r)
        if any(col) and next(v for v in col if v) == 1
    ]
    excess = len(cols) - l
    heavy = sorted((c for c in cols if sum(1 for v in c if v) >= 2), reverse=True)
    dropped = set(heavy[:excess])
    return HammingFamily(
        l=l, field=field, columns=tuple(c for c in cols if c not in dropped)
    )


def _code_size(l: int, field: int) -> int:
    if l <= 2:
        return 1
    r = 1
    while (field**r - 1) // (field - 1) < l:
        r += 1
    return field ** (l - r)


# ---------------------------------------------------------------------------
# the enumeration code for one row-1 substitution
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _rank_split(q: int, k: int):
    """Ranks of letters with a zero second digit (A1) and the rest (A2)."""
    a1, a2 = [], []
    for rank in range(alphabet_size(q, k)):
        if letter_unrank(rank, q, k).digits[1] == 0:
            a1.append(rank)
        else:
            a2.append(rank)
    return tuple(a1), tuple(a2)


@dataclass(frozen=True)
class DollSpec:
    """Parameters of the enumeration-encoded (1,0,...,0)-substitution code."""

    q: int
    k: int
    n: int

    def __post_init__(self):
        if self.q < 2 or self.k < 2 or self.n < 1:
            raise ValueError("need q >= 2, k >= 2, n >= 1")
        if not is_prime(self.field):
            raise ValueError(
                f"|A2| = {self.field} is not prime; the inner check code "
                "needs a prime field (composite sizes are unsupported)"
            )

    @property
    def a1_ranks(self) -> tuple[int, ...]:
        return _rank_split(self.q, self.k)[0]

    @property
    def a2_ranks(self) -> tuple[int, ...]:
        return _rank_split(self.q, self.k)[1]

    @property
    def fill(self) -> int:
        return len(self.a1_ranks)

    @property
    def field(self) -> int:
        return len(self.a2_ranks)

    def class_size(self, l: int) -> int:
        return comb(self.n, l) * self.fill ** (self.n - l) * _code_size(l, self.field)

    @property
    def size(self) -> int:
        return sum(self.class_size(l) for l in range(self.n + 1))

    @property
    def m(self) -> int:
        base = alphabet_size(self.q, self.k)
        if self.q == 2:
            # floor log of the closed-form lower bound, in exact arithmetic
            num = (self.k + 1) ** (self.n + 1) - (self.k - 1) ** (self.n + 1)
            den = 4 * (self.n + 1)
            m = 0
            while base ** (m + 1) * den <= num:
                m += 1
            return m
        m = 0
        while base ** (m + 1) <= self.size:
            m += 1
        return m

    def table(self):
        """Per-class counts: (l, supports, fills, inner codewords, class size)."""
        return [
            (
                l,
                comb(self.n, l),
                self.fill ** (self.n - l),
                _code_size(l, self.field),
                self.class_size(l),
            )
            for l in range(self.n + 1)
        ]


def doll_size(n: int, k: int) -> int:
    return DollSpec(2, k, n).size


def doll_m(n: int, k: int) -> int:
    return DollSpec(2, k, n).m


def doll_F(s, k: int) -> tuple[int, ...]:
    """Binary F-map: keep rank symbols in {k-1, k}, as 0 and 1 respectively."""
    s = tuple(s)
    if any(not 0 <= v <= k for v in s):
        raise ValueError(f"ranks must lie in [0, {k}]")
    return tuple(v - (k - 1) for v in s if v >= k - 1)


def _fixed_digits(value: int, base: int, width: int) -> tuple[int, ...]:
    """LSD-first digits of fixed width; base 1 admits only the zero value."""
    if base == 1:
        if value:
            raise ValueError("base-1 expansion of a nonzero value")
        return (0,) * width
    return expand_base(value, base, base**width)


def _doll_unrank(index: int, spec: DollSpec) -> Word:
    """The index-th codeword, 1-based, in (l, inner word, support, fill) order."""
    if not 1 <= index <= spec.size:
        raise ValueError(f"index {index} out of [1, {spec.size}]")
    remaining = index
    for l in range(spec.n + 1):
        cls = spec.class_size(l)
        if remaining > cls:
            remaining -= cls
            continue
        fam = hamming_build(l, spec.field)
        per_support = spec.fill ** (spec.n - l)
        per_codeword = comb(spec.n, l) * per_support
        temp1 = -(-remaining // per_codeword)
        n2 = remaining - (temp1 - 1) * per_codeword
        width = l - fam.r if l >= 3 else 0
        image = fam.encode(_fixed_digits(temp1 - 1, fam.field, width))
        temp2 = -(-n2 // per_support)
        n3 = n2 - (temp2 - 1) * per_support
        support = cw_unrank(temp2, spec.n, l)
        fills = _fixed_digits(n3 - 1, spec.fill, spec.n - l)
        ranks = []
        si, fi = iter(image), iter(fills)
        for bit in support:
            ranks.append(spec.a2_ranks[next(si)] if bit else spec.a1_ranks[next(fi)])
        return Word.from_ranks(ranks, spec.q, spec.k)
    raise AssertionError("index exhausted the class sizes")


def enc_doll(x, spec: DollSpec) -> Word:
    x = tuple(x)
    base = alphabet_size(spec.q, spec.k)
    if len(x) != spec.m:
        raise ValueError(f"message must have {spec.m} symbols, got {len(x)}")
    if any(not 0 <= v < base for v in x):
        raise ValueError(f"message symbols must lie in [0, {base})")
    return _doll_unrank(compose_base(x, base) + 1, spec)


def dec_doll(received: ReceivedRows, spec: DollSpec) -> tuple[int, ...]:
    """Invert enc_doll after at most one substitution in row 1.

    A row-1 overshoot (first digit above the second) is visible as an
    invalid column and is repaired by copying the second digit; letters of
    A1 are always restored exactly this way, letters of A2 at worst turn
    into a different A2 letter, which the inner C(l) decoder then fixes.
    """
    if (received.q, received.k, received.n) != (spec.q, spec.k, spec.n):
        raise ValueError("received shape does not match the code spec")
    if any(len(row) != spec.n for row in received.rows):
        raise ValueError("substitution decoding expects full-length rows")
    a1_index = {r: i for i, r in enumerate(spec.a1_ranks)}
    a2_index = {r: i for i, r in enumerate(spec.a2_ranks)}
    ranks = []
    repaired = 0
    for j in range(spec.n):
        col = tuple(row[j] for row in received.rows)
        if all(col[i] <= col[i + 1] for i in range(spec.k - 1)):
            ranks.append(Letter(col, spec.q).rank)
            continue
        tail = col[1:]
        if any(tail[i] > tail[i + 1] for i in range(len(tail) - 1)):
            raise ValueError(f"column {j} is corrupted below row 1; model breach")
        repaired += 1
        if repaired > 1:
            raise ValueError("more than one invalid column; model breach")
        ranks.append(Letter((col[1],) + tail, spec.q).rank)
    support = [1 if r in a2_index else 0 for r in ranks]
    l = sum(support)
    fam = hamming_build(l, spec.field)
    image = fam.decode(tuple(a2_index[r] for r in ranks if r in a2_index))
    fills = tuple(a1_index[r] for r in ranks if r in a1_index)
    per_support = spec.fill ** (spec.n - l)
    per_codeword = comb(spec.n, l) * per_support
    index = (
        sum(spec.class_size(lp) for lp in range(l))
        + (compose_base(fam.message(image), fam.field)) * per_codeword
        + (cw_rank(support, l) - 1) * per_support
        + compose_base(fills, spec.fill)
        + 1
    )
    base = alphabet_size(spec.q, spec.k)
    if index - 1 >= base**spec.m:
        raise ValueError("codeword index lies outside the encoder image")
    return _fixed_digits(index - 1, base, spec.m)


# ---------------------------------------------------------------------------
# binary 1-substitution code on rank sequences
# ---------------------------------------------------------------------------

def cecc1_message_length(k: int, n: int) -> int:
    return lme_message_length(n, k + 1)


def cecc1_contains(word: Word, a: int) -> bool:
    if word.q != 2:
        raise ValueError("this family is binary")
    return lme_contains(word.ranks(), a)


def cecc1_encode(message, a: int, k: int, n: int) -> Word:
    return Word.from_ranks(lme_encode(message, a, k + 1, n), 2, k)


def cecc1_message(word: Word) -> tuple[int, ...]:
    return lme_decode_message(word.ranks(), word.k + 1, word.n)


def cecc1_decode(received: ReceivedRows, a: int) -> Word:
    """Correct one substitution anywhere in the binary word.

    An invalid column pins the position; its two monotone completions have
    ranks w-1 and w+1, whose syndromes differ by 2j != 0 mod 2n+1, so the
    code congruence picks exactly one.  With all columns valid, the rank
    sequence carries at most one +-1 error, which is the 1-limited-magnitude
    decoder's model.
    """
    if received.q != 2:
        raise ValueError("this family is binary")
    n, k = received.n, received.k
    if any(len(row) != n for row in received.rows):
        raise ValueError("substitution decoding expects full-length rows")
    mod = 2 * n + 1
    columns = [tuple(row[j] for row in received.rows) for j in range(n)]
    invalid = [
        j
        for j, col in enumerate(columns)
        if any(col[i] > col[i + 1] for i in range(k - 1))
    ]
    if len(invalid) > 1:
        raise ValueError("more than one invalid column; model breach")
    if invalid:
        j = invalid[0]
        w = sum(columns[j])
        others = sum((p + 1) * sum(col) for p, col in enumerate(columns) if p != j)
        fits = [
            cand
            for cand in (w - 1, w + 1)
            if 0 <= cand <= k and (others + (j + 1) * cand) % mod == a % mod
        ]
        if len(fits) != 1:
            raise ValueError("invalid column admits no consistent completion")
        ranks = [sum(col) for col in columns]
        ranks[j] = fits[0]
        return Word.from_ranks(ranks, 2, k)
    ranks = tuple(sum(col) for col in columns)
    if lme_contains(ranks, a):
        return Word.from_ranks(ranks, 2, k)
    return Word.from_ranks(lme_decode(ranks, a, k + 1), 2, k)


# ---------------------------------------------------------------------------
# q-ary three-checksum machinery and its systematic construction
# ---------------------------------------------------------------------------

def _check_q1_primes(q: int, n: int, p1: int, p2: int):
    if q <= 2:
        raise ValueError("the three-checksum machinery needs q > 2")
    if not is_prime(p1) or p1 < n:
        raise ValueError(f"p1 must be a prime >= n = {n}, got {p1}")
    if not is_prime(p2) or p2 < q:
        raise ValueError(f"p2 must be a prime >= q = {q}, got {p2}")


def _square_sum(rows) -> int:
    return sum(v * v for row in rows for v in row)


def q1cecc_checksums(word: Word, p1: int, p2: int) -> tuple[int, int, int]:
    """(digit sum mod 2q-1, VT row sum mod p1, squared digit sum mod p2)."""
    _check_q1_primes(word.q, word.n, p1, p2)
    rows = word.rows()
    a1 = sum(v for row in rows for v in row) % (2 * word.q - 1)
    a2 = sum(vt_syndrome(row) for row in rows) % p1
    a3 = _square_sum(rows) % p2
    return a1, a2, a3


def q1cecc_decode(
    received: ReceivedRows, a1: int, a2: int, a3: int, p1: int, p2: int
) -> Word:
    """Correct one substitution given the three checksums.

    The digit sum pins the substitution value delta over [-(q-1), q-1]; an
    invalid column localizes the error directly (delta's sign says which of
    the violating pair moved), otherwise the VT sum names the column and
    the squared sum the original digit, with the column rebuilt as the
    unique nondecreasing completion.
    """
    q, k, n = received.q, received.k, received.n
    _check_q1_primes(q, n, p1, p2)
    if n < q:
        raise ValueError("the three-checksum decoder needs n >= q")
    rows = received.rows
    if any(len(row) != n for row in rows):
        raise ValueError("substitution decoding expects full-length rows")
    span = 2 * q - 1
    delta1 = (sum(v for row in rows for v in row) - a1) % span
    delta = delta1 if delta1 <= q - 1 else delta1 - span
    columns = [list(row[j] for row in rows) for j in range(n)]
    invalid = [
        j
        for j, col in enumerate(columns)
        if any(col[i] > col[i + 1] for i in range(k - 1))
    ]
    if len(invalid) > 1:
        raise ValueError("more than one invalid column; model breach")
    if delta == 0:
        if invalid:
            raise ValueError("digit sum clean but a column is invalid; breach")
        word = Word.from_rows(rows, q)
        if q1cecc_checksums(word, p1, p2) != (a1 % span, a2 % p1, a3 % p2):
            raise ValueError("checksums disagree on an allegedly clean word")
        return word
    if invalid:
        j = invalid[0]
        col = columns[j]
        r = next(i for i in range(k - 1) if col[i] > col[i + 1])
        target = r if delta > 0 else r + 1
        col[target] -= delta
        if not 0 <= col[target] < q:
            raise ValueError("repaired digit leaves Sigma_q; breach")
    else:
        delta2 = (sum(vt_syndrome(row) for row in rows) - a2) % p1
        inv1 = pow(delta % p1, -1, p1)
        j = delta2 * inv1 % p1
        if j == 0:
            j = p1
        if j > n:
            raise ValueError("implied column index out of range; breach")
        delta3 = (_square_sum(rows) - a3) % p2
        inv2 = pow(delta % p2, -1, p2)
        alpha = (delta3 * inv2 - delta) * pow(2, -1, p2) % p2
        corrupted = alpha + delta
        if alpha >= q or not 0 <= corrupted < q:
            raise ValueError("implied digit values leave Sigma_q; breach")
        col = columns[j - 1]
        if corrupted not in col:
            raise ValueError("implied digit absent from the implied column; breach")
        col.remove(corrupted)
        col.append(alpha)
        col.sort()
    word = Word.from_letters(Letter(tuple(col), q) for col in columns)
    if q1cecc_checksums(word, p1, p2) != (a1 % span, a2 % p1, a3 % p2):
        raise ValueError("repaired word fails the checksums; breach")
    return word


@dataclass(frozen=True)
class C1SSpec:
    """Systematic q-ary single-substitution code: payload m, two marker
    columns for the digit sum, Delta columns packing the two prime checksums."""

    q: int
    k: int
    m: int

    def __post_init__(self):
        if self.q <= 2:
            raise ValueError("needs q > 2 (binary single errors: cecc1)")
        if self.k < 2:
            raise ValueError("need k >= 2")
        if self.m < self.q:
            raise ValueError("need payload length m >= q")

    @property
    def p1(self) -> int:
        return smallest_prime_at_least(self.m)

    @property
    def p2(self) -> int:
        return smallest_prime_at_least(self.q)

    @property
    def delta(self) -> int:
        return digit_width(alphabet_size(self.q, self.k), self.p1 * self.p2)

    @property
    def n(self) -> int:
        return self.m + 2 + self.delta


def c1s_encode(payload: Word, spec: C1SSpec) -> Word:
    if (payload.q, payload.k, payload.n) != (spec.q, spec.k, spec.m):
        raise ValueError(
            f"payload must be a ({spec.q},{spec.k}) word of length {spec.m}"
        )
    a1, a2, a3 = q1cecc_checksums(payload, spec.p1, spec.p2)
    a, b = divmod(a1, spec.q)
    letters = list(payload.letters)
    letters.append(Letter((a,) * spec.k, spec.q))
    letters.append(Letter((b,) * spec.k, spec.q))
    big_q = alphabet_size(spec.q, spec.k)
    packed = a2 + spec.p1 * a3
    letters += [
        letter_unrank(d, spec.q, spec.k)
        for d in expand_base(packed, big_q, big_q**spec.delta)
    ]
    word = Word.from_letters(letters)
    assert word.n == spec.n
    return word


def c1s_decode(received: ReceivedRows, spec: C1SSpec) -> Word:
    """Decode by elimination: marker hit, then payload checksum, then the
    three-checksum decoder on the packed digits."""
    if (received.q, received.k) != (spec.q, spec.k) or received.n != spec.n:
        raise ValueError("received shape does not match the code spec")
    rows = received.rows
    if any(len(row) != spec.n for row in rows):
        raise ValueError("substitution decoding expects full-length rows")
    q, m = spec.q, spec.m
    payload_rows = tuple(row[:m] for row in rows)
    marker_a = {row[m] for row in rows}
    marker_b = {row[m + 1] for row in rows}
    if len(marker_a) > 1 and len(marker_b) > 1:
        raise ValueError("both marker columns disagree; model breach")
    if len(marker_a) > 1 or len(marker_b) > 1:
        # the lone substitution hit a marker column; the rest is intact
        return Word.from_rows(payload_rows, q)
    a, b = marker_a.pop(), marker_b.pop()
    if a not in (0, 1):
        raise ValueError("first marker digit outside {0, 1}; breach")
    a1 = a * q + b
    if sum(v for row in payload_rows for v in row) % (2 * q - 1) == a1:
        return Word.from_rows(payload_rows, q)
    # payload checksum is off, so the error is there and the digits are clean
    big_q = alphabet_size(q, spec.k)
    digits = [
        Letter(tuple(row[m + 2 + idx] for row in rows), q).rank
        for idx in range(spec.delta)
    ]
    packed = compose_base(digits, big_q)
    if packed >= spec.p1 * spec.p2:
        raise ValueError("packed checksum value out of range; breach")
    a3, a2 = divmod(packed, spec.p1)
    return q1cecc_decode(
        ReceivedRows(payload_rows, q, m), a1, a2, a3, spec.p1, spec.p2
    )


# ---------------------------------------------------------------------------
# t-row single-substitution construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class C2SSpec:
    """t rows may each suffer one substitution: duplicated per-row parity
    columns flag dirty payload rows, marker-checked syndrome blocks carry
    the weighted VT residues mod p."""

    q: int
    k: int
    t: int
    m: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("need q >= 2")
        if not 2 <= self.t <= self.k:
            raise ValueError("need 2 <= t <= k")
        if self.m < 1:
            raise ValueError("need m >= 1")

    @property
    def span(self) -> int:
        return 2 * self.m * (self.q - 1)

    @property
    def p(self) -> int:
        return next_prime_bertrand(max(self.span, f_threshold(self.k, self.t)))

    @property
    def delta(self) -> int:
        return digit_width(alphabet_size(self.q, self.k), self.p)

    @property
    def n(self) -> int:
        return self.m + 2 * self.k + self.t * (self.delta + self.k)

    def row_syndromes(self, payload: Word) -> list[int]:
        return [vt_syndrome(row) % self.span for row in payload.rows()]

    def syndromes(self, payload: Word) -> list[int]:
        bars = self.row_syndromes(payload)
        return [
            sum(i**j * v for i, v in enumerate(bars, start=1)) % self.p
            for j in range(self.t)
        ]


def c2s_encode(payload: Word, spec: C2SSpec) -> Word:
    if (payload.q, payload.k, payload.n) != (spec.q, spec.k, spec.m):
        raise ValueError(
            f"payload must be a ({spec.q},{spec.k}) word of length {spec.m}"
        )
    q, k = spec.q, spec.k
    big_q = alphabet_size(q, k)
    letters = list(payload.letters)
    for row in payload.rows():
        parity = Letter((sum(row) % q,) * k, q)
        letters += [parity, parity]
    for value in spec.syndromes(payload):
        block = [
            letter_unrank(d, q, k)
            for d in expand_base(value, big_q, big_q**spec.delta)
        ]
        letters += block
        for i in range(k):
            parity = sum(lt.digits[i] for lt in block) % q
            letters.append(Letter((parity,) * k, q))
    word = Word.from_letters(letters)
    assert word.n == spec.n
    return word


def c2s_decode(received: ReceivedRows, spec: C2SSpec) -> Word:
    """Row parities identify dirty payload rows; block parities identify
    intact syndrome blocks; a Vandermonde solve mod p recovers the dirty
    rows' VT residues, and the q-ary single-substitution decoder finishes."""
    if (received.q, received.k) != (spec.q, spec.k) or received.n != spec.n:
        raise ValueError("received shape does not match the code spec")
    rows = received.rows
    if any(len(row) != spec.n for row in rows):
        raise ValueError("substitution decoding expects full-length rows")
    q, k, m, t = spec.q, spec.k, spec.m, spec.t
    dirty = [
        i
        for i, row in enumerate(rows)
        if sum(row[:m]) % q not in (row[m + 2 * i], row[m + 2 * i + 1])
    ]
    if len(dirty) > t:
        raise ValueError(f"{len(dirty)} corrupted payload rows; handles {t}")
    payload_rows = [tuple(row[:m]) for row in rows]
    if dirty:
        base = m + 2 * k
        stride = spec.delta + k
        intact = [
            j
            for j in range(t)
            if all(
                sum(row[base + j * stride : base + j * stride + spec.delta]) % q
                == row[base + j * stride + spec.delta + i]
                for i, row in enumerate(rows)
            )
        ]
        if len(intact) < len(dirty):
            raise ValueError("fewer intact syndrome blocks than dirty rows; breach")
        chosen = intact[: len(dirty)]
        big_q = alphabet_size(q, k)
        known = [
            (i + 1, vt_syndrome(payload_rows[i]) % spec.span)
            for i in range(k)
            if i not in dirty
        ]
        matrix = [[pow(i + 1, j, spec.p) for i in dirty] for j in chosen]
        rhs = []
        for j in chosen:
            start = base + j * stride
            digits = [
                Letter(tuple(row[start + idx] for row in rows), q).rank
                for idx in range(spec.delta)
            ]
            value = compose_base(digits, big_q)
            rhs.append((value - sum(node**j * v for node, v in known)) % spec.p)
        solved = solve_mod_p(matrix, rhs, spec.p)
        for i, bar in zip(dirty, solved):
            if bar >= spec.span:
                raise ValueError("solved VT residue does not lift; breach")
            copies = (rows[i][m + 2 * i], rows[i][m + 2 * i + 1])
            if copies[0] != copies[1]:
                raise ValueError(
                    "dirty payload row with disagreeing parity copies; breach"
                )
            payload_rows[i] = qary_decode_one_substitution(
                rows[i][:m], bar, copies[0], q
            )
    return Word.from_rows(payload_rows, q)
