"""VT-style syndromes and the single-error decoders built from them.

This module works on plain digit sequences (rows), not composite words.  It
provides:

* the weighted syndrome VT(x) = sum_i i * x_i (1-indexed),
* single-deletion decoding from VT(x) mod N with N > len(x),
* the difference transform psi and q-ary single-deletion decoding from
  VT(psi(x)) mod q*n,
* q-ary single-substitution decoding from the pair (VT(x) mod 2n(q-1),
  Sum(x) mod q),
* the 1-limited-magnitude code {c : VT(c) = a mod 2n+1} over Sigma_Q with its
  systematic encoder and decoder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import compose_base, digit_width, expand_base


class DecodeFailure(ValueError):
    """No candidate (or more than one) is consistent with the syndromes."""


def vt_syndrome(x) -> int:
    """VT(x) = sum_i i * x_i with positions counted from 1."""
    return sum((i + 1) * v for i, v in enumerate(x))


def digit_sum(x) -> int:
    return sum(x)


@dataclass(frozen=True)
class Syndromes:
    """The (VT, Sum) pair used by the substitution decoders."""

    vt: int
    total: int


def syndromes(x) -> Syndromes:
    return Syndromes(vt_syndrome(x), digit_sum(x))


# ---------------------------------------------------------------------------
# single deletion, direct VT syndrome
# ---------------------------------------------------------------------------

def vt_decode_one_deletion(y, a: int, modulus: int, q: int = 2):
    """Recover x from y in D_1(x) given VT(x) = a (mod modulus).

    Uniqueness requires modulus > len(x) = len(y) + 1 for q = 2.  Candidates
    are enumerated by inserting every symbol at every position; exactly one
    must satisfy the congruence.
    """
    y = tuple(y)
    n = len(y) + 1
    if modulus <= n:
        raise ValueError(f"modulus {modulus} too small for length {n}")
    if any(not 0 <= v < q for v in y):
        raise ValueError(f"received row is not over Sigma_{q}")
    candidates = set()
    for pos in range(n):
        for sym in range(q):
            cand = y[:pos] + (sym,) + y[pos:]
            if vt_syndrome(cand) % modulus == a % modulus:
                candidates.add(cand)
    if len(candidates) != 1:
        raise DecodeFailure(
            f"expected exactly one candidate, found {len(candidates)}"
        )
    return candidates.pop()


# ---------------------------------------------------------------------------
# psi transform and q-ary single deletion
# ---------------------------------------------------------------------------

def psi(x, q: int):
    """Difference transform: psi(x)_i = x_i - x_{i+1} mod q, psi(x)_n = x_n."""
    x = tuple(x)
    if not x:
        raise ValueError("psi of an empty sequence")
    return tuple((x[i] - x[i + 1]) % q for i in range(len(x) - 1)) + (x[-1],)


def psi_inverse(z, q: int):
    z = tuple(z)
    if not z:
        raise ValueError("psi_inverse of an empty sequence")
    out = [0] * len(z)
    out[-1] = z[-1] % q
    for i in range(len(z) - 2, -1, -1):
        out[i] = (z[i] + out[i + 1]) % q
    return tuple(out)


def qary_vt_syndrome(x, q: int) -> int:
    """VT(psi(x)) mod q*n — the deletion syndrome for q-ary rows."""
    n = len(tuple(x))
    return vt_syndrome(psi(x, q)) % (q * n)


def qary_decode_one_deletion(y, a: int, q: int, n: int):
    """Recover x of length n over Sigma_q from one deletion, given
    VT(psi(x)) = a (mod q*n)."""
    y = tuple(y)
    if len(y) != n - 1:
        raise ValueError(f"received length {len(y)}, expected {n - 1}")
    if any(not 0 <= v < q for v in y):
        raise ValueError(f"received row is not over Sigma_{q}")
    candidates = set()
    for pos in range(n):
        for sym in range(q):
            cand = y[:pos] + (sym,) + y[pos:]
            if qary_vt_syndrome(cand, q) == a % (q * n):
                candidates.add(cand)
    if len(candidates) != 1:
        raise DecodeFailure(
            f"expected exactly one candidate, found {len(candidates)}"
        )
    return candidates.pop()


# ---------------------------------------------------------------------------
# q-ary single substitution from (VT mod 2n(q-1), Sum mod q)
# ---------------------------------------------------------------------------

def qary_decode_one_substitution(y, vt_mod: int, sum_mod: int, q: int):
    """Correct at most one substitution in y over Sigma_q.

    vt_mod is VT(x) mod 2n(q-1) and sum_mod is Sum(x) mod q for the original
    row x.  The substituted value delta = y_i - x_i lies in
    [-(q-1), q-1] \\ {0}; Sum pins delta mod q and VT pins i * delta mod
    2n(q-1), which determines (i, delta) uniquely.
    """
    y = tuple(y)
    n = len(y)
    if n == 0:
        raise ValueError("empty row")
    if any(not 0 <= v < q for v in y):
        raise ValueError(f"received row is not over Sigma_{q}")
    delta1 = (digit_sum(y) - sum_mod) % q
    if delta1 == 0:
        return y
    span = 2 * n * (q - 1)
    delta2 = (vt_syndrome(y) - vt_mod) % span
    half = n * (q - 1)
    if delta2 == 0:
        raise DecodeFailure("syndromes disagree: Sum dirty but VT clean")
    if delta2 < half:
        delta = delta1
        num = delta2
    elif delta2 > half:
        delta = delta1 - q
        num = delta2 - span
    else:
        # i * delta = +- n(q-1): position n, magnitude q-1.  For q = 2 the two
        # signs collide mod q, so the boundary digit decides.
        pos = n - 1
        if q == 2:
            delta = 1 if y[pos] == 1 else -1
        elif delta1 == q - 1:
            delta = q - 1
        elif delta1 == 1:
            delta = -(q - 1)
        else:
            raise DecodeFailure("boundary case with inconsistent Sum syndrome")
        return _apply_correction(y, pos, delta, q)
    if num % delta != 0:
        raise DecodeFailure("VT offset not divisible by the substitution value")
    pos1 = num // delta
    if not 1 <= pos1 <= n:
        raise DecodeFailure(f"implied position {pos1} out of range")
    return _apply_correction(y, pos1 - 1, delta, q)


def _apply_correction(y, pos, delta, q):
    value = y[pos] - delta
    if not 0 <= value < q:
        raise DecodeFailure(f"corrected digit {value} out of Sigma_{q}")
    return y[:pos] + (value,) + y[pos + 1:]


# ---------------------------------------------------------------------------
# 1-limited-magnitude code: C(n; Q, a) = {c in Sigma_Q^n : VT(c) = a mod 2n+1}
# ---------------------------------------------------------------------------

def lme_contains(x, a: int, modulus: int | None = None) -> bool:
    n = len(tuple(x))
    mod = modulus if modulus is not None else 2 * n + 1
    return vt_syndrome(x) % mod == a % mod


def lme_decode(y, a: int, q: int):
    """Correct one magnitude-1 error (some y_i = x_i +- 1) in y over Sigma_Q.

    Delta = VT(y) - a mod 2n+1 localizes the error: Delta in [1, n] means
    position Delta gained 1; Delta in [n+1, 2n] means position 2n+1-Delta
    lost 1.
    """
    y = tuple(y)
    n = len(y)
    if n == 0:
        raise ValueError("empty row")
    if any(not 0 <= v < q for v in y):
        raise ValueError(f"received row is not over Sigma_{q}")
    mod = 2 * n + 1
    delta = (vt_syndrome(y) - a) % mod
    if delta == 0:
        return y
    if 1 <= delta <= n:
        pos, shift = delta - 1, -1
    else:
        pos, shift = (2 * n + 1 - delta) - 1, +1
    value = y[pos] + shift
    if not 0 <= value < q:
        raise DecodeFailure(f"corrected digit {value} out of Sigma_{q}")
    return y[:pos] + (value,) + y[pos + 1:]


def lme_message_length(n: int, q: int) -> int:
    """Payload symbols of the systematic encoder: n - m - 1, m = ceil(log_Q n)."""
    if q < 3:
        raise ValueError("systematic 1-LME encoding needs Q >= 3")
    if n < 2:
        raise ValueError("need n >= 2")
    m = digit_width(q, n)
    if n <= q ** (m - 1):
        raise ValueError(f"length n={n} violates n > Q^(m-1)")
    return n - m - 1


def lme_encode(message, a: int, q: int, n: int):
    """Systematic encoder into C(n; Q, a).

    Redundancy positions are T = {Q^0, ..., Q^(m-1)} union {n}; the offset
    d = a - VT(c) mod 2n+1 is written as base-Q digits over the powers, with
    position n absorbing one or two extra multiples of n.
    """
    message = tuple(message)
    m = digit_width(q, n)
    if len(message) != lme_message_length(n, q):
        raise ValueError(
            f"message length {len(message)} != {lme_message_length(n, q)}"
        )
    if any(not 0 <= v < q for v in message):
        raise ValueError(f"message is not over Sigma_{q}")
    powers = [q ** j for j in range(m)]
    redundancy = set(powers) | {n}
    c = [0] * (n + 1)  # 1-indexed
    it = iter(message)
    for pos in range(1, n + 1):
        if pos not in redundancy:
            c[pos] = next(it)
    d = (a - vt_syndrome(c[1:])) % (2 * n + 1)
    if d == 2 * n:
        c[n] = 2
    else:
        if d >= n:
            c[n] = 1
            d -= n
        for j, digit in enumerate(expand_base(d, q, n)):
            c[powers[j]] = digit
    out = tuple(c[1:])
    assert lme_contains(out, a)
    return out


def lme_decode_message(x, q: int, n: int):
    """Project a codeword back onto its message coordinates."""
    x = tuple(x)
    m = digit_width(q, n)
    redundancy = {q ** j for j in range(m)} | {n}
    return tuple(x[pos - 1] for pos in range(1, n + 1) if pos not in redundancy)
