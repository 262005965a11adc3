"""Number-theoretic and combinatorial helpers shared by the code constructions.

Contents: primality and Bertrand-interval prime search, fixed-width base-Q
expansions, ranking/unranking of constant-weight binary sequences, semistandard
tableau enumeration with Schur polynomial evaluation, shape-shifted Vandermonde
determinants, Gaussian elimination over a prime field, and the threshold
function f(k, t) under which every square submatrix of the syndrome
coefficient matrix [i^(j-1)] is invertible mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb


class SingularMatrixError(ValueError):
    """Raised when a linear system over F_p has no unique solution."""


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime_bertrand(m: int) -> int:
    """Smallest prime p with m < p < 2m (exists for m >= 2 by Bertrand)."""
    if m < 2:
        raise ValueError(f"Bertrand interval needs m >= 2, got {m}")
    for p in range(m + 1, 2 * m):
        if is_prime(p):
            return p
    raise AssertionError("unreachable: Bertrand's postulate")


def smallest_prime_at_least(m: int) -> int:
    """Smallest prime p >= m (m >= 2)."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    p = m
    while not is_prime(p):
        p += 1
    return p


@dataclass(frozen=True)
class PrimeField:
    """A prime modulus validated at construction."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, self.p - 2, self.p)


# ---------------------------------------------------------------------------
# fixed-width base expansions
# ---------------------------------------------------------------------------

def digit_width(base: int, bound: int) -> int:
    """ceil(log_base(bound)): smallest D with base**D >= bound (bound >= 1)."""
    if base < 2 or bound < 1:
        raise ValueError(f"need base >= 2 and bound >= 1, got {base}, {bound}")
    width, reach = 0, 1
    while reach < bound:
        reach *= base
        width += 1
    return width


def expand_base(value: int, base: int, bound: int) -> tuple[int, ...]:
    """LSD-first base digits of value, zero-padded to digit_width(base, bound).

    Requires 0 <= value < bound.
    """
    if not 0 <= value < bound:
        raise ValueError(f"value {value} out of [0, {bound})")
    width = digit_width(base, bound)
    digits = []
    for _ in range(width):
        digits.append(value % base)
        value //= base
    return tuple(digits)


def compose_base(digits, base: int) -> int:
    """Inverse of expand_base (LSD-first)."""
    value = 0
    for d in reversed(tuple(digits)):
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        value = value * base + d
    return value


# ---------------------------------------------------------------------------
# constant-weight ranking (lexicographic, 1-based)
# ---------------------------------------------------------------------------

def cw_rank(bits, w: int | None = None) -> int:
    """Rank of a constant-weight binary sequence among its weight class.

    The rank of a with ones at positions i_1 < ... < i_w (1-indexed) is
    1 + sum_j binom(i_j - 1, j); ranks run from 1 to binom(n, w).
    """
    bits = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0/1")
    ones = [i + 1 for i, b in enumerate(bits) if b]
    if w is not None and w != len(ones):
        raise ValueError(f"declared weight {w} != actual weight {len(ones)}")
    return 1 + sum(comb(pos - 1, j + 1) for j, pos in enumerate(ones))


def cw_unrank(index: int, n: int, w: int) -> tuple[int, ...]:
    """Inverse of cw_rank: the index-th weight-w sequence of length n."""
    if not 0 <= w <= n:
        raise ValueError(f"need 0 <= w <= n, got w={w}, n={n}")
    if not 1 <= index <= comb(n, w):
        raise ValueError(f"index {index} out of [1, binom({n},{w})]")
    temp = index - 1
    left = w
    bits = [0] * n
    for pos in range(n, 0, -1):
        if left == 0:
            break
        if temp >= comb(pos - 1, left):
            bits[pos - 1] = 1
            temp -= comb(pos - 1, left)
            left -= 1
    assert left == 0 and temp == 0
    return tuple(bits)


# ---------------------------------------------------------------------------
# semistandard tableaux and Schur polynomials
# ---------------------------------------------------------------------------

def partition_is_valid(shape) -> bool:
    """weakly decreasing nonnegative integer tuple"""
    shape = tuple(shape)
    return all(isinstance(x, int) and x >= 0 for x in shape) and all(
        shape[i] >= shape[i + 1] for i in range(len(shape) - 1)
    )


def enumerate_ssts(shape, s: int):
    """All semistandard tableaux of the given shape with entries in [1, s].

    Rows weakly increase left to right, columns strictly increase top to
    bottom.  Zero-length rows are allowed (they contribute nothing).
    """
    shape = tuple(shape)
    if not partition_is_valid(shape):
        raise ValueError(f"not a partition: {shape}")
    if s < 0:
        raise ValueError("alphabet size s must be >= 0")
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    tableau = [[0] * length for length in shape]
    out = []

    def fill(idx):
        if idx == len(cells):
            out.append(tuple(tuple(row) for row in tableau))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, tableau[r][c - 1])  # weak along the row
        if r > 0:
            lo = max(lo, tableau[r - 1][c] + 1)  # strict down the column
        for val in range(lo, s + 1):
            tableau[r][c] = val
            fill(idx + 1)
        tableau[r][c] = 0

    fill(0)
    return out


def schur_eval(shape, xs) -> Fraction | int:
    """Schur polynomial s_shape evaluated at the point xs, by direct SST sum."""
    xs = tuple(xs)
    total = 0
    for tab in enumerate_ssts(shape, len(xs)):
        term = 1
        for row in tab:
            for val in row:
                term *= xs[val - 1]
        total += term
    return total


def sst_count(shape, s: int) -> int:
    """Number of SSTs of the shape with entries in [1, s] (= s_shape(1,...,1))."""
    return len(enumerate_ssts(shape, s))


def _det_fraction(matrix) -> Fraction:
    """exact determinant by fraction-free-ish Gaussian elimination"""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def vandermonde_shape_det(shape, xs, p: int | None = None) -> int:
    """Determinant of the shape-shifted Vandermonde matrix V_shape.

    Row i (i = 1..s, counting from the bottom exponent up) of V_shape is
    (x_1^(e_i), ..., x_s^(e_i)) with e_i = shape[s-i] + i - 1, so the zero
    shape gives the classical Vandermonde matrix.  Exact integer value, or
    reduced mod p when p is given.
    """
    shape = tuple(shape)
    xs = tuple(xs)
    if not partition_is_valid(shape):
        raise ValueError(f"not a partition: {shape}")
    if len(shape) != len(xs):
        raise ValueError("shape and point must have equal length")
    s = len(xs)
    exponents = [shape[s - 1 - i] + i for i in range(s)]
    matrix = [[x ** e for x in xs] for e in exponents]
    det = _det_fraction(matrix)
    assert det.denominator == 1
    value = det.numerator
    return value % p if p is not None else value


# ---------------------------------------------------------------------------
# prime-field linear algebra
# ---------------------------------------------------------------------------

def solve_mod_p(matrix, rhs, p: int) -> list[int]:
    """Solve A x = b over F_p by Gaussian elimination.

    Raises SingularMatrixError when A is singular mod p.
    """
    field = PrimeField(p)
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("solve_mod_p expects a square system")
    aug = [[x % p for x in row] + [b % p] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix singular mod {p}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [(a - factor * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def det_mod_p(matrix, p: int) -> int:
    field = PrimeField(p)
    n = len(matrix)
    m = [[x % p for x in row] for row in matrix]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = (-det) % p
        det = (det * m[col][col]) % p
        inv = field.inv(m[col][col])
        for r in range(col + 1, n):
            factor = (m[r][col] * inv) % p
            if factor:
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[col])]
    return det % p


# ---------------------------------------------------------------------------
# the f(k, t) threshold
# ---------------------------------------------------------------------------

def f_threshold(k: int, t: int) -> int:
    """Threshold f(k, t): for any prime p > f(k, t), every square submatrix
    of the t x k matrix [i^(j-1)] (j = 1..t, i = 1..k) is invertible mod p.

    Piecewise: k for t = 2; 2k for t = 3; for t >= 4,
    t^binom(s0, 2) * k^(s0 (t - s0)) with
    s0 = min(floor((t-1) ln k / (2 ln k - ln t)) + 1, t - 1).
    """
    if not 2 <= t <= k:
        raise ValueError(f"need 2 <= t <= k, got t={t}, k={k}")
    if t == 2:
        return k
    if t == 3:
        return 2 * k
    # floor((t-1) ln k / (2 ln k - ln t)) via exact integer comparisons:
    # j <= (t-1) ln k / (2 ln k - ln t)  <=>  k^(2j) <= k^(t-1) * t^j
    j = 0
    while k ** (2 * (j + 1)) <= k ** (t - 1) * t ** (j + 1):
        j += 1
    s0 = min(j + 1, t - 1)
    return t ** comb(s0, 2) * k ** (s0 * (t - s0))


def all_submatrices_invertible(k: int, t: int, p: int) -> bool:
    """Exhaustively check every s x s submatrix of [i^(j-1)] mod p, s = 1..t."""
    if not 2 <= t <= k:
        raise ValueError(f"need 2 <= t <= k, got t={t}, k={k}")
    PrimeField(p)
    rows = [[pow(i, j, p) for i in range(1, k + 1)] for j in range(t)]
    for s in range(1, t + 1):
        for row_sel in combinations(range(t), s):
            for col_sel in combinations(range(k), s):
                sub = [[rows[r][c] for c in col_sel] for r in row_sel]
                if det_mod_p(sub, p) == 0:
                    return False
    return True
