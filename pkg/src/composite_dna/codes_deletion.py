"""Deletion-correcting code families over the composite channel.

Four constructions plus a family of congruence-defined codes:

* c1d_*: binary single-composite-deletion code fixing sum_i VT(c_i) mod n+1,
  with a systematic encoder whose redundancy lives on the base-(k+1) power
  positions {(k+1)^j}.
* congruence_*: existential families cut out by syndrome congruences —
  binary t-row variants weight the per-row VT sums by i^j mod p, q-ary
  variants use VT(psi(.)) mod qn.  No encoders (these families exist by
  pigeonhole on the best class); membership tests and decoders are given.
* C2D/C4D: systematic t-row single-deletion codes that append, per syndrome
  index j, a marker column pair (all-zero, all-one) followed by the base-Q
  digits of the j-th weighted syndrome mod p.  The marker pair localizes
  which segment of an affected row lost its symbol.
* C3D: the q-ary single-deletion analogue with one marker pair and one
  syndrome block mod qm.

Row indices inside syndrome weights are 1-based (i = 1..k), as are the
congruence targets; everything else in the code is 0-indexed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .alphabet import Letter, Word, alphabet_size, letter_unrank
from .algebra import (
    compose_base,
    digit_width,
    expand_base,
    f_threshold,
    is_prime,
    next_prime_bertrand,
    solve_mod_p,
)
from .channel import ReceivedRows
from .vt_core import (
    qary_decode_one_deletion,
    qary_vt_syndrome,
    vt_decode_one_deletion,
    vt_syndrome,
)


def _is_subsequence(sub, sup) -> bool:
    it = iter(sup)
    return all(any(v == w for w in it) for v in sub)


def _row_deficits(received: ReceivedRows) -> dict[int, int]:
    """row index -> number of missing symbols; rejects deficits above one."""
    deficits = {}
    for i, row in enumerate(received.rows):
        d = received.n - len(row)
        if d < 0 or d > 1:
            raise ValueError(f"row {i} lost {d} symbols; these codes handle one")
        if d:
            deficits[i] = d
    return deficits


# ---------------------------------------------------------------------------
# C1D: binary single-deletion code, VT sum over all rows
# ---------------------------------------------------------------------------

def c1d_message_length(k: int, n: int) -> int:
    """Payload length n - ceil(log_{k+1}(n+1)) of the systematic encoder."""
    if n < 3:
        raise ValueError("need n >= 3")
    return n - digit_width(k + 1, n + 1)


def _c1d_redundancy_positions(k: int, n: int):
    m = n - c1d_message_length(k, n)
    return tuple((k + 1) ** j for j in range(m))  # 1-indexed positions


def c1d_contains(word: Word, a: int) -> bool:
    """Membership: sum_i VT(c_i) = sum_j j*rank(c[j]) = a mod n+1 (binary)."""
    if word.q != 2:
        raise ValueError("c1d is a binary family")
    return vt_syndrome(word.ranks()) % (word.n + 1) == a % (word.n + 1)


def c1d_encode(message, a: int, k: int, n: int) -> Word:
    """Place rank digits on non-power positions, balance on {(k+1)^j}."""
    message = tuple(message)
    powers = _c1d_redundancy_positions(k, n)
    if len(message) != n - len(powers):
        raise ValueError(
            f"message must have {n - len(powers)} ranks, got {len(message)}"
        )
    ranks = [0] * (n + 1)  # 1-indexed
    slots = [j for j in range(1, n + 1) if j not in powers]
    for pos, r in zip(slots, message):
        ranks[pos] = r
    current = sum(j * ranks[j] for j in range(1, n + 1))
    d = (a - current) % (n + 1)
    for power, digit in zip(powers, expand_base(d, k + 1, n + 1)):
        ranks[power] = digit
    word = Word.from_ranks(ranks[1:], 2, k)
    assert c1d_contains(word, a)
    return word


def c1d_message(word: Word) -> tuple[int, ...]:
    powers = set(_c1d_redundancy_positions(word.k, word.n))
    return tuple(r for j, r in enumerate(word.ranks(), start=1) if j not in powers)


def c1d_decode(received: ReceivedRows, a: int) -> Word:
    """Recover from at most one deletion anywhere: the short row's VT residue
    is a minus the intact rows' VT sums, then one-deletion VT decoding."""
    if received.q != 2:
        raise ValueError("c1d is a binary family")
    n = received.n
    deficits = _row_deficits(received)
    if len(deficits) > 1:
        raise ValueError("more than one row lost a symbol")
    if not deficits:
        word = Word.from_rows(received.rows, 2)
        if not c1d_contains(word, a):
            raise ValueError("clean rows do not satisfy the code congruence")
        return word
    (short,) = deficits
    residue = (a - sum(vt_syndrome(r) for i, r in enumerate(received.rows) if i != short)) % (n + 1)
    restored = vt_decode_one_deletion(received.rows[short], residue, n + 1)
    rows = list(received.rows)
    rows[short] = restored
    word = Word.from_rows(rows, 2)
    assert c1d_contains(word, a)
    return word


# ---------------------------------------------------------------------------
# congruence families (membership + decoding; existential, no encoders)
# ---------------------------------------------------------------------------

def _check_prime_above(p: int, floor: int, what: str):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= floor:
        raise ValueError(f"{what} needs p > {floor}, got {p}")


def _weighted_sums(values, t: int, p: int):
    """[sum_i i^j * v_i mod p for j in 0..t-1], rows 1-indexed."""
    return [
        sum(i**j * v for i, v in enumerate(values, start=1)) % p for j in range(t)
    ]


def congruence_contains_binary_t(word: Word, targets, p: int) -> bool:
    targets = tuple(targets)
    if word.q != 2:
        raise ValueError("binary congruence family needs q = 2")
    _check_prime_above(p, max(word.k - 1, word.n), "the binary t-row family")
    sums = _weighted_sums([vt_syndrome(r) for r in word.rows()], len(targets), p)
    return sums == [t % p for t in targets]


def congruence_contains_qary_one(word: Word, a: int) -> bool:
    modulus = word.q * word.n
    total = sum(qary_vt_syndrome(r, word.q) for r in word.rows()) % modulus
    return total == a % modulus


def congruence_contains_qary_t(word: Word, targets, p: int) -> bool:
    targets = tuple(targets)
    _check_prime_above(p, max(word.k - 1, word.q * word.n), "the q-ary t-row family")
    values = [qary_vt_syndrome(r, word.q) for r in word.rows()]
    return _weighted_sums(values, len(targets), p) == [t % p for t in targets]


def _solve_short_rows(short_rows, intact_contrib, targets, p):
    """Solve sum_{i in I} i^j u_i = targets[j] - intact_contrib[j] over F_p.

    Uses the first |I| congruences; with consecutive powers j = 0..s-1 the
    coefficient matrix is a plain Vandermonde in the distinct row nodes, so
    it is invertible whenever p exceeds every node difference.
    """
    s = len(short_rows)
    nodes = [i + 1 for i in short_rows]
    matrix = [[pow(node, j, p) for node in nodes] for j in range(s)]
    rhs = [(targets[j] - intact_contrib[j]) % p for j in range(s)]
    return solve_mod_p(matrix, rhs, p)


def congruence_decode_binary_t(received: ReceivedRows, targets, p: int) -> Word:
    targets = tuple(targets)
    if received.q != 2:
        raise ValueError("binary congruence family needs q = 2")
    n, k, t = received.n, received.k, len(targets)
    _check_prime_above(p, max(k - 1, n), "the binary t-row family")
    if p <= f_threshold(k, t) and t >= 2:
        warnings.warn(
            "p is below the generalized-Vandermonde threshold f(k, t); "
            "decoding still uses consecutive syndrome indices, which stay invertible",
            stacklevel=2,
        )
    deficits = _row_deficits(received)
    if len(deficits) > t:
        raise ValueError(f"{len(deficits)} rows lost symbols; family handles {t}")
    if not deficits:
        word = Word.from_rows(received.rows, 2)
        if not congruence_contains_binary_t(word, targets, p):
            raise ValueError("clean rows do not satisfy the code congruences")
        return word
    short = sorted(deficits)
    intact = [
        sum(
            (i + 1) ** j * vt_syndrome(row)
            for i, row in enumerate(received.rows)
            if i not in deficits
        )
        for j in range(len(short))
    ]
    solved = _solve_short_rows(short, intact, targets, p)
    rows = list(received.rows)
    for i, residue in zip(short, solved):
        rows[i] = vt_decode_one_deletion(received.rows[i], residue, p)
    word = Word.from_rows(rows, 2)
    assert congruence_contains_binary_t(word, targets, p)
    return word


def congruence_decode_qary_one(received: ReceivedRows, a: int) -> Word:
    q, n = received.q, received.n
    deficits = _row_deficits(received)
    if len(deficits) > 1:
        raise ValueError("more than one row lost a symbol")
    if not deficits:
        word = Word.from_rows(received.rows, q)
        if not congruence_contains_qary_one(word, a):
            raise ValueError("clean rows do not satisfy the code congruence")
        return word
    (short,) = deficits
    modulus = q * n
    residue = (
        a - sum(qary_vt_syndrome(r, q) for i, r in enumerate(received.rows) if i != short)
    ) % modulus
    rows = list(received.rows)
    rows[short] = qary_decode_one_deletion(received.rows[short], residue, q, n)
    word = Word.from_rows(rows, q)
    assert congruence_contains_qary_one(word, a)
    return word


def congruence_decode_qary_t(received: ReceivedRows, targets, p: int) -> Word:
    targets = tuple(targets)
    q, n, k, t = received.q, received.n, received.k, len(targets)
    _check_prime_above(p, max(k - 1, q * n), "the q-ary t-row family")
    deficits = _row_deficits(received)
    if len(deficits) > t:
        raise ValueError(f"{len(deficits)} rows lost symbols; family handles {t}")
    if not deficits:
        word = Word.from_rows(received.rows, q)
        if not congruence_contains_qary_t(word, targets, p):
            raise ValueError("clean rows do not satisfy the code congruences")
        return word
    short = sorted(deficits)
    intact = [
        sum(
            (i + 1) ** j * qary_vt_syndrome(row, q)
            for i, row in enumerate(received.rows)
            if i not in deficits
        )
        for j in range(len(short))
    ]
    solved = _solve_short_rows(short, intact, targets, p)
    rows = list(received.rows)
    for i, residue in zip(short, solved):
        if residue >= q * n:
            raise ValueError("solved syndrome does not lift below qn; inputs breach the model")
        rows[i] = qary_decode_one_deletion(received.rows[i], residue, q, n)
    word = Word.from_rows(rows, q)
    assert congruence_contains_qary_t(word, targets, p)
    return word


# ---------------------------------------------------------------------------
# marker constructions C2D, C3D, C4D
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class C2DSpec:
    """Binary t-row single-deletion code: payload length m, prime in (m, 2m)."""

    k: int
    t: int
    m: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("need k >= 2")
        if not 2 <= self.t <= self.k:
            raise ValueError("need 2 <= t <= k")
        need = f_threshold(self.k, self.t)
        if self.m < need:
            raise ValueError(f"payload length m={self.m} below f(k,t)={need}")

    @property
    def q(self) -> int:
        return 2

    @property
    def p(self) -> int:
        return next_prime_bertrand(self.m)

    @property
    def delta(self) -> int:
        return digit_width(self.k + 1, self.p)

    @property
    def n(self) -> int:
        return self.m + self.t * (self.delta + 2)

    def syndromes(self, payload: Word):
        rows_vt = [vt_syndrome(r) for r in payload.rows()]
        return [
            sum(i**j * v for i, v in enumerate(rows_vt, start=1)) % self.p
            for j in range(self.t)
        ]


@dataclass(frozen=True)
class C3DSpec:
    """q-ary single-deletion code with one marker pair and a mod-qm block."""

    q: int
    k: int
    m: int

    def __post_init__(self):
        if self.q < 3:
            raise ValueError("need q >= 3 (binary is the c1d family)")
        if self.k < 2 or self.m < 3:
            raise ValueError("need k >= 2 and m >= 3")

    @property
    def modulus(self) -> int:
        return self.q * self.m

    @property
    def delta(self) -> int:
        return digit_width(alphabet_size(self.q, self.k), self.modulus)

    @property
    def n(self) -> int:
        return self.m + 2 + self.delta

    def syndromes(self, payload: Word):
        return [
            sum(qary_vt_syndrome(r, self.q) for r in payload.rows()) % self.modulus
        ]


@dataclass(frozen=True)
class C4DSpec:
    """q-ary t-row single-deletion code; syndromes are VT(psi) mod qm, lifted to F_p."""

    q: int
    k: int
    t: int
    m: int

    def __post_init__(self):
        if self.q < 3:
            raise ValueError("need q >= 3 (binary is the C2D construction)")
        if not 2 <= self.t <= self.k:
            raise ValueError("need 2 <= t <= k")
        need = f_threshold(self.k, self.t)
        if self.m < need:
            raise ValueError(f"payload length m={self.m} below f(k,t)={need}")

    @property
    def p(self) -> int:
        return next_prime_bertrand(self.q * self.m)

    @property
    def delta(self) -> int:
        return digit_width(alphabet_size(self.q, self.k), self.p)

    @property
    def n(self) -> int:
        return self.m + self.t * (self.delta + 2)

    def syndromes(self, payload: Word):
        values = [qary_vt_syndrome(r, self.q) for r in payload.rows()]
        return [
            sum(i**j * v for i, v in enumerate(values, start=1)) % self.p
            for j in range(self.t)
        ]


def _marker_encode(payload: Word, spec, digit_base: int) -> Word:
    q, k = payload.q, payload.k
    if (q, k, payload.n) != (spec.q, spec.k, spec.m):
        raise ValueError(
            f"payload must be a ({spec.q},{spec.k}) word of length {spec.m}"
        )
    zero = Letter((0,) * k, q)
    one = Letter((1,) * k, q)
    letters = list(payload.letters)
    for value in spec.syndromes(payload):
        letters += [zero, one]
        letters += [
            letter_unrank(d, q, k)
            for d in expand_base(value, digit_base, digit_base**spec.delta)
        ]
    word = Word.from_letters(letters)
    assert word.n == spec.n
    return word


def c2d_encode(payload: Word, spec: C2DSpec) -> Word:
    return _marker_encode(payload, spec, spec.k + 1)


def c3d_encode(payload: Word, spec: C3DSpec) -> Word:
    return _marker_encode(payload, spec, alphabet_size(spec.q, spec.k))


def c4d_encode(payload: Word, spec: C4DSpec) -> Word:
    return _marker_encode(payload, spec, alphabet_size(spec.q, spec.k))


def _segment_of(row, deficit: int, spec) -> int | None:
    """Which block the row's deletion damaged, or None for a payload hit.

    The zero/one marker pair opening block j sits at positions
    P_j = m + j*(delta+2) and P_j + 1; after one deletion at or before P_j
    the received row reads 1 at P_j, otherwise 0.  Flags are therefore
    monotone over j: all-zero means the deletion hit the last block's tail,
    a first 1 at j = 0 means the payload (or its trailing marker) was hit,
    and a first 1 at j >= 1 localizes the hit to block j-1.
    """
    if not deficit:
        return -1  # clean row: damages nothing, shifts nothing
    flags = [row[spec.m + j * (spec.delta + 2)] == 1 for j in range(spec.t)]
    if any(flags[j] and not flags[j + 1] for j in range(spec.t - 1)):
        raise ValueError("marker flags are not monotone; more than one deletion?")
    if flags[0]:
        return None
    if not flags[-1]:
        return spec.t - 1
    return next(j for j in range(spec.t) if flags[j]) - 1


def _read_block_digits(received, spec, damage, j: int, digit_base: int) -> int:
    """Assemble block j's digit columns across rows, undoing per-row shifts.

    A row shifted at block j's digits is one whose deletion happened earlier
    in the row: every payload-hit row, and every row whose damaged block
    precedes j.  Rows damaged at or after block j (and clean rows, seg = -1)
    read in place.
    """
    start = spec.m + j * (spec.delta + 2) + 2
    digits = []
    for idx in range(spec.delta):
        column = []
        for i, row in enumerate(received.rows):
            seg = damage[i]
            shift = 1 if (seg is None or 0 <= seg < j) else 0
            column.append(row[start + idx - shift])
        digits.append(Letter(tuple(column), received.q).rank)
    return compose_base(digits, digit_base)


def _marker_decode(received: ReceivedRows, spec, digit_base, lift_bound, row_decode, row_syndrome) -> Word:
    if (received.q, received.k) != (spec.q, spec.k) or received.n != spec.n:
        raise ValueError("received shape does not match the code spec")
    t = spec.t
    deficits = _row_deficits(received)
    if len(deficits) > t:
        raise ValueError(f"{len(deficits)} rows lost symbols; construction handles {t}")

    # damage[i]: -1 clean, None payload hit, j >= 0 block j hit
    damage = {
        i: _segment_of(row, deficits.get(i, 0), spec)
        for i, row in enumerate(received.rows)
    }
    unknown = sorted(i for i, seg in damage.items() if seg is None)
    rows = [None] * received.k
    for i, row in enumerate(received.rows):
        if damage[i] is not None:
            rows[i] = row[: spec.m]

    if unknown:
        s = len(unknown)
        blocked = {seg for seg in damage.values() if seg is not None and seg >= 0}
        intact_blocks = [j for j in range(t) if j not in blocked]
        if len(intact_blocks) < s:
            raise ValueError("fewer intact syndrome blocks than damaged payload rows")
        chosen = intact_blocks[:s]
        known = [
            (i + 1, row_syndrome(rows[i]))
            for i in range(received.k)
            if damage[i] is not None
        ]
        matrix = [[pow(i + 1, j, spec.p) for i in unknown] for j in chosen]
        rhs = [
            (_read_block_digits(received, spec, damage, j, digit_base)
             - sum(node**j * v for node, v in known)) % spec.p
            for j in chosen
        ]
        solved = solve_mod_p(matrix, rhs, spec.p)
        for i, value in zip(unknown, solved):
            if value >= lift_bound:
                raise ValueError("syndrome residue does not lift; inputs breach the model")
            rows[i] = row_decode(received.rows[i][: spec.m - 1], value)

    payload = Word.from_rows(rows, received.q)
    codeword = _marker_encode(payload, spec, digit_base)
    for got, want in zip(received.rows, codeword.rows()):
        if not _is_subsequence(got, want):
            raise ValueError("decoded payload is inconsistent with the received rows")
    return payload


def c2d_decode(received: ReceivedRows, spec: C2DSpec) -> Word:
    return _marker_decode(
        received,
        spec,
        digit_base=spec.k + 1,
        lift_bound=spec.p,
        row_decode=lambda prefix, value: vt_decode_one_deletion(prefix, value, spec.p),
        row_syndrome=vt_syndrome,
    )


def c3d_decode(received: ReceivedRows, spec: C3DSpec) -> Word:
    """Single deletion anywhere: the lone marker pair says whether the short
    row's payload was hit; if so the syndrome block drives VT(psi) decoding."""
    if (received.q, received.k) != (spec.q, spec.k) or received.n != spec.n:
        raise ValueError("received shape does not match the code spec")
    deficits = _row_deficits(received)
    if len(deficits) > 1:
        raise ValueError("more than one row lost a symbol")
    if deficits:
        (short,) = deficits
        y = received.rows[short]
        if y[spec.m] == 1:
            # zero-marker position reads 1: the deletion hit at or before it,
            # so the payload lost a symbol and every later column shifted
            digits = []
            for idx in range(spec.delta):
                column = []
                for i, row in enumerate(received.rows):
                    shift = 1 if i == short else 0
                    column.append(row[spec.m + 2 + idx - shift])
                digits.append(Letter(tuple(column), spec.q).rank)
            value = compose_base(digits, alphabet_size(spec.q, spec.k))
            residue = (
                value
                - sum(
                    qary_vt_syndrome(row[: spec.m], spec.q)
                    for i, row in enumerate(received.rows)
                    if i != short
                )
            ) % spec.modulus
            rows = [r[: spec.m] for r in received.rows]
            rows[short] = qary_decode_one_deletion(
                y[: spec.m - 1], residue, spec.q, spec.m
            )
        else:
            # deletion after the zero marker: payload columns are untouched
            rows = [r[: spec.m] for r in received.rows]
    else:
        rows = [r[: spec.m] for r in received.rows]
    payload = Word.from_rows(rows, spec.q)
    codeword = c3d_encode(payload, spec)
    for got, want in zip(received.rows, codeword.rows()):
        if not _is_subsequence(got, want):
            raise ValueError("decoded payload is inconsistent with the received rows")
    return payload


def c4d_decode(received: ReceivedRows, spec: C4DSpec) -> Word:
    return _marker_decode(
        received,
        spec,
        digit_base=alphabet_size(spec.q, spec.k),
        lift_bound=spec.q * spec.m,
        row_decode=lambda prefix, value: qary_decode_one_deletion(
            prefix, value, spec.q, spec.m
        ),
        row_syndrome=lambda row: qary_vt_syndrome(row, spec.q),
    )
