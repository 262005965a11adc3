"""The k-resolution composite channel: error models, corruption, and oracles.

A word is transmitted as k parallel digit rows.  Six adversarial error models
are supported:

* ``sub-per-row``  — up to e_i substitutions in row i,
* ``sub-total``    — up to e substitutions anywhere,
* ``sub-t-rows``   — up to t rows affected, row given budget e_i takes at most
  e_i substitutions (budgets are assigned to affected rows in every order),
* ``del-per-row``  — exactly e_i deletions in row i,
* ``del-total``    — exactly e deletions anywhere,
* ``del-t-rows``   — up to t rows affected, an affected row with budget e_i
  loses exactly e_i symbols.

The decodability oracle works on RAW outputs: a received matrix is just k
digit rows (possibly of unequal lengths) with no column-monotonicity
requirement, because a decoder must handle every channel output.  The
column-valid substitution balls from the bound analysis are provided
separately (valid_sub_ball).

Random corruption uses a splitmix64 generator (documented in SplitMix64) so
that the same seed reproduces the same plan in any implementation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations

from .alphabet import Word, all_letters

_SUB_KINDS = ("sub-per-row", "sub-total", "sub-t-rows")
_DEL_KINDS = ("del-per-row", "del-total", "del-t-rows")


@dataclass(frozen=True)
class ErrorModel:
    """One of the six channel error models (see module docstring)."""

    kind: str
    budgets: tuple[int, ...] = ()  # per-row or per-affected-row budgets
    total: int | None = None
    t: int | None = None

    def __post_init__(self):
        if self.kind not in _SUB_KINDS + _DEL_KINDS:
            raise ValueError(f"unknown error model kind {self.kind!r}")
        object.__setattr__(self, "budgets", tuple(self.budgets))
        if any(b < 0 for b in self.budgets):
            raise ValueError("budgets must be nonnegative")
        if self.kind.endswith("-total"):
            if self.total is None or self.total < 0:
                raise ValueError("total-budget models need total >= 0")
        elif self.kind.endswith("-t-rows"):
            if self.t is None or self.t < 0:
                raise ValueError("t-rows models need t >= 0")
            if len(self.budgets) != self.t:
                raise ValueError(f"expected {self.t} budgets, got {len(self.budgets)}")
        else:  # per-row
            if not self.budgets:
                raise ValueError("per-row models need a budget per row")

    @property
    def is_substitution(self) -> bool:
        return self.kind in _SUB_KINDS


def sub_per_row(*budgets: int) -> ErrorModel:
    return ErrorModel("sub-per-row", budgets=budgets)


def sub_total(e: int) -> ErrorModel:
    return ErrorModel("sub-total", total=e)


def sub_t_rows(t: int, budgets) -> ErrorModel:
    return ErrorModel("sub-t-rows", budgets=tuple(budgets), t=t)


def del_per_row(*budgets: int) -> ErrorModel:
    return ErrorModel("del-per-row", budgets=budgets)


def del_total(e: int) -> ErrorModel:
    return ErrorModel("del-total", total=e)


def del_t_rows(t: int, budgets) -> ErrorModel:
    return ErrorModel("del-t-rows", budgets=tuple(budgets), t=t)


def _check_model_fits(model: ErrorModel, k: int):
    if model.kind.endswith("-per-row") and len(model.budgets) != k:
        raise ValueError(f"model has {len(model.budgets)} row budgets but word has {k} rows")
    if model.kind.endswith("-t-rows") and model.t > k:
        raise ValueError(f"t={model.t} exceeds the number of rows k={k}")


@dataclass(frozen=True)
class ReceivedRows:
    """Raw channel output: k digit rows over Sigma_q, lengths in [0, n]."""

    rows: tuple[tuple[int, ...], ...]
    q: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) < 2:
            raise ValueError("need k >= 2 rows")
        for row in self.rows:
            if len(row) > self.n:
                raise ValueError("row longer than the nominal length")
            if any(not 0 <= d < self.q for d in row):
                raise ValueError(f"row digits must lie in Sigma_{self.q}")

    @property
    def k(self) -> int:
        return len(self.rows)

    def sort_key(self):
        return self.rows


def received_from_word(word: Word) -> ReceivedRows:
    return ReceivedRows(word.rows(), word.q, word.n)


def received_to_text(received: ReceivedRows) -> str:
    if received.q > 10:
        raise ValueError("text format only supports q <= 10")
    lines = [f"{received.q} {received.k} {received.n}"]
    lines += ["".join(str(d) for d in row) for row in received.rows]
    return "\n".join(lines) + "\n"


def received_from_text(text: str) -> ReceivedRows:
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise ValueError("empty received file")
    parts = lines[0].split()
    if len(parts) != 3:
        raise ValueError(f"expected header 'q k n', got {lines[0]!r}")
    q, k, n = (int(p) for p in parts)
    body = lines[1 : 1 + k]
    if len(body) < k:
        body += [""] * (k - len(body))  # trailing empty rows may be dropped by editors
    if any(line.strip() for line in lines[1 + k :]):
        raise ValueError(f"expected {k} digit rows, found extra content after them")
    rows = []
    for raw in body:
        raw = raw.strip()
        if raw and not raw.isdigit():
            raise ValueError(f"bad digit row {raw!r}")
        rows.append(tuple(int(ch) for ch in raw))
    return ReceivedRows(tuple(rows), q, n)


# ---------------------------------------------------------------------------
# runs and deletion balls
# ---------------------------------------------------------------------------

def runs(x) -> int:
    """Number of maximal constant substrings; runs of the empty sequence is 0."""
    x = tuple(x)
    return sum(1 for i, v in enumerate(x) if i == 0 or v != x[i - 1])


def deletion_ball(x, t: int) -> set[tuple[int, ...]]:
    """D_t(x): all distinct subsequences of x with exactly t symbols removed."""
    x = tuple(x)
    if t < 0 or t > len(x):
        raise ValueError(f"cannot delete {t} symbols from length {len(x)}")
    current = {x}
    for _ in range(t):
        current = {y[:i] + y[i + 1:] for y in current for i in range(len(y))}
    return current


def hamming_sphere(row, d: int, q: int) -> set[tuple[int, ...]]:
    """All rows at Hamming distance exactly d from row, over Sigma_q."""
    row = tuple(row)
    out = set()
    for positions in combinations(range(len(row)), d):
        def expand(idx, current):
            if idx == len(positions):
                out.add(tuple(current))
                return
            pos = positions[idx]
            for val in range(q):
                if val != row[pos]:
                    current[pos] = val
                    expand(idx + 1, current)
            current[pos] = row[pos]

        expand(0, list(row))
    return out


def hamming_ball(row, e: int, q: int) -> set[tuple[int, ...]]:
    """All rows at Hamming distance at most e from row."""
    out = set()
    for d in range(min(e, len(row)) + 1):
        out |= hamming_sphere(row, d, q)
    return out


# ---------------------------------------------------------------------------
# explicit corruption plans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Plan:
    """An explicit corruption plan: cell edits and/or cell deletions.

    Rows and positions are 0-indexed against the original word.
    """

    substitutions: tuple[tuple[int, int, int], ...] = ()
    deletions: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "substitutions", tuple(tuple(s) for s in self.substitutions))
        object.__setattr__(self, "deletions", tuple(tuple(d) for d in self.deletions))


def _row_counts(cells, k: int) -> list[int]:
    counts = [0] * k
    for cell in cells:
        counts[cell[0]] += 1
    return counts


def _validate_plan(word: Word, model: ErrorModel, plan: Plan):
    k, n, q = word.k, word.n, word.q
    rows = word.rows()
    if model.is_substitution:
        if plan.deletions:
            raise ValueError("substitution model cannot delete symbols")
        cells = [(r, p) for r, p, _ in plan.substitutions]
        for r, p, v in plan.substitutions:
            if not (0 <= r < k and 0 <= p < n):
                raise ValueError(f"edit ({r},{p}) outside the word")
            if not 0 <= v < q:
                raise ValueError(f"substituted value {v} outside Sigma_{q}")
            if v == rows[r][p]:
                raise ValueError(f"edit at ({r},{p}) does not change the digit")
    else:
        if plan.substitutions:
            raise ValueError("deletion model cannot substitute symbols")
        cells = list(plan.deletions)
        for r, p in plan.deletions:
            if not (0 <= r < k and 0 <= p < n):
                raise ValueError(f"deletion ({r},{p}) outside the word")
    if len(set(cells)) != len(cells):
        raise ValueError("plan touches the same cell twice")

    counts = _row_counts(cells, k)
    kind = model.kind
    if kind == "sub-per-row":
        for i, (c, e) in enumerate(zip(counts, model.budgets)):
            if c > e:
                raise ValueError(f"row {i} has {c} edits, budget {e}")
    elif kind == "del-per-row":
        for i, (c, e) in enumerate(zip(counts, model.budgets)):
            if c != e:
                raise ValueError(f"row {i} has {c} deletions, model requires exactly {e}")
    elif kind == "sub-total":
        if sum(counts) > model.total:
            raise ValueError(f"{sum(counts)} edits exceed total budget {model.total}")
    elif kind == "del-total":
        if sum(counts) != model.total:
            raise ValueError(f"model requires exactly {model.total} deletions, plan has {sum(counts)}")
    elif kind == "sub-t-rows":
        affected = sorted((c for c in counts if c > 0), reverse=True)
        budgets = sorted(model.budgets, reverse=True)
        if len(affected) > model.t or any(
            c > e for c, e in zip(affected, budgets)
        ):
            raise ValueError("edits cannot be covered by any budget-to-row assignment")
    elif kind == "del-t-rows":
        affected = Counter(c for c in counts if c > 0)
        if sum(affected.values()) > model.t or affected - Counter(model.budgets):
            raise ValueError("deletion counts cannot be matched to the row budgets")


def apply_errors(word: Word, model: ErrorModel, plan: Plan) -> ReceivedRows:
    """Corrupt word according to an explicit plan, checked against the model."""
    _check_model_fits(model, word.k)
    _validate_plan(word, model, plan)
    rows = [list(r) for r in word.rows()]
    for r, p, v in plan.substitutions:
        rows[r][p] = v
    drop = {}
    for r, p in plan.deletions:
        drop.setdefault(r, set()).add(p)
    out = []
    for i, row in enumerate(rows):
        gone = drop.get(i, ())
        out.append(tuple(v for j, v in enumerate(row) if j not in gone))
    return ReceivedRows(tuple(out), word.q, word.n)


# ---------------------------------------------------------------------------
# seeded random corruption
# ---------------------------------------------------------------------------

class SplitMix64:
    """splitmix64: a tiny 64-bit mixing generator.

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64, then the output is state
    mixed by two xor-shift-multiply rounds:
        z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
        z ^= z >> 27; z *= 0x94D049BB133111EB
        z ^= z >> 31
    Bounded draws use plain modulo reduction (the tiny bias is irrelevant at
    desk scale and keeps the recurrence trivially portable).
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next64() % bound

    def distinct(self, count: int, bound: int) -> list[int]:
        """First-occurrence order sample of `count` distinct values in [0, bound)."""
        if count > bound:
            raise ValueError(f"cannot draw {count} distinct values below {bound}")
        seen: list[int] = []
        while len(seen) < count:
            v = self.below(bound)
            if v not in seen:
                seen.append(v)
        return seen


def _random_row_subs(rng, row, positions, q):
    subs = []
    for p in positions:
        new = (row[p] + 1 + rng.below(q - 1)) % q
        subs.append((p, new))
    return subs


def random_errors(word: Word, model: ErrorModel, seed: int) -> tuple[ReceivedRows, Plan]:
    """Sample a maximal-count plan admissible under the model and apply it.

    Maximal means every budget is spent: substitution counts equal the e_i
    (not just bounded by them) and t distinct rows are chosen for the t-rows
    kinds.  Deterministic in (word, model, seed).
    """
    _check_model_fits(model, word.k)
    rng = SplitMix64(seed)
    k, n, q = word.k, word.n, word.q
    rows = word.rows()
    kind = model.kind

    def row_positions(count):
        if count > n:
            raise ValueError(f"budget {count} exceeds row length {n}")
        return rng.distinct(count, n)

    subs: list[tuple[int, int, int]] = []
    dels: list[tuple[int, int]] = []
    if kind in ("sub-per-row", "del-per-row"):
        for i, e in enumerate(model.budgets):
            pos = row_positions(e)
            if kind == "sub-per-row":
                subs += [(i, p, v) for p, v in _random_row_subs(rng, rows[i], pos, q)]
            else:
                dels += [(i, p) for p in pos]
    elif kind in ("sub-total", "del-total"):
        if model.total > k * n:
            raise ValueError(f"budget {model.total} exceeds the {k}x{n} grid")
        cells = [divmod(c, n) for c in rng.distinct(model.total, k * n)]
        if kind == "sub-total":
            for r, p in cells:
                new = (rows[r][p] + 1 + rng.below(q - 1)) % q
                subs.append((r, p, new))
        else:
            dels += cells
    else:  # t-rows kinds
        chosen = rng.distinct(model.t, k)
        for i, e in zip(chosen, model.budgets):
            pos = row_positions(e)
            if kind == "sub-t-rows":
                subs += [(i, p, v) for p, v in _random_row_subs(rng, rows[i], pos, q)]
            else:
                dels += [(i, p) for p in pos]
    plan = Plan(tuple(subs), tuple(dels))
    return apply_errors(word, model, plan), plan


# ---------------------------------------------------------------------------
# exact output-set enumeration (raw) and valid substitution balls
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int):
    """all tuples of `parts` nonnegative ints summing to exactly `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def raw_received_set(word: Word, model: ErrorModel) -> set[ReceivedRows]:
    """Every channel output reachable from word under the model (raw rows)."""
    _check_model_fits(model, word.k)
    rows = word.rows()
    k, n, q = word.k, word.n, word.q
    out: set[ReceivedRows] = set()

    def emit(row_sets):
        def rec(idx, acc):
            if idx == k:
                out.add(ReceivedRows(tuple(acc), q, n))
                return
            for variant in row_sets[idx]:
                rec(idx + 1, acc + [variant])

        rec(0, [])

    kind = model.kind
    if kind == "sub-per-row":
        emit([sorted(hamming_ball(rows[i], e, q)) for i, e in enumerate(model.budgets)])
    elif kind == "del-per-row":
        emit([sorted(deletion_ball(rows[i], e)) for i, e in enumerate(model.budgets)])
    elif kind == "sub-total":
        for budget in range(model.total + 1):
            for split in _compositions(budget, k):
                if all(d <= n for d in split):
                    emit([sorted(hamming_sphere(rows[i], d, q)) for i, d in enumerate(split)])
    elif kind == "del-total":
        if model.total > k * n:
            raise ValueError(f"budget {model.total} exceeds the {k}x{n} grid")
        for split in _compositions(model.total, k):
            if all(d <= n for d in split):
                emit([sorted(deletion_ball(rows[i], d)) for i, d in enumerate(split)])
    else:
        # t-rows kinds: any subset of <= t rows, budgets assigned to the
        # chosen rows injectively, in every order
        for s in range(model.t + 1):
            for row_sel in combinations(range(k), s):
                for budget_sel in permutations(range(model.t), s):
                    row_sets = []
                    for i in range(k):
                        if i in row_sel:
                            e = model.budgets[budget_sel[row_sel.index(i)]]
                            if kind == "sub-t-rows":
                                row_sets.append(sorted(hamming_ball(rows[i], e, q)))
                            else:
                                if e > n:
                                    row_sets = None
                                    break
                                row_sets.append(sorted(deletion_ball(rows[i], e)))
                        else:
                            row_sets.append([rows[i]])
                    if row_sets is not None:
                        emit(row_sets)
    return out


def valid_sub_ball(word: Word, per_row=None, total: int | None = None) -> set[Word]:
    """Column-valid substitution ball around word.

    Exactly one of per_row (budgets e_1..e_k) and total may be given.  The
    result contains word itself and every valid word reachable within the
    budgets; this is the ball the bound analysis counts, not the raw channel
    output set.
    """
    if (per_row is None) == (total is None):
        raise ValueError("give exactly one of per_row and total")
    q, k, n = word.q, word.k, word.n
    letters = all_letters(q, k)
    cols = [word.column(j).digits for j in range(n)]

    results: set[Word] = set()

    def rec(j, acc, budget):
        if j == n:
            results.add(Word.from_letters(acc))
            return
        original = cols[j]
        for lt in letters:
            diff = [i for i in range(k) if lt.digits[i] != original[i]]
            if per_row is not None:
                new_budget = list(budget)
                ok = True
                for i in diff:
                    new_budget[i] -= 1
                    if new_budget[i] < 0:
                        ok = False
                        break
                if ok:
                    rec(j + 1, acc + [lt], tuple(new_budget))
            else:
                if len(diff) <= budget:
                    rec(j + 1, acc + [lt], budget - len(diff))

    if per_row is not None:
        per_row = tuple(per_row)
        if len(per_row) != k:
            raise ValueError(f"expected {k} row budgets, got {len(per_row)}")
        rec(0, [], per_row)
    else:
        rec(0, [], total)
    return results


# ---------------------------------------------------------------------------
# brute-force decodability oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    is_code: bool
    witness: tuple[Word, Word, ReceivedRows] | None = None

    def __bool__(self):
        return self.is_code


def oracle_is_code(codebook, model: ErrorModel) -> OracleResult:
    """True iff the raw output sets of distinct codewords are pairwise disjoint.

    On failure the witness is the lexicographically smallest colliding pair
    (by rank sequence) together with one shared output (smallest by rows).
    """
    words = sorted(set(codebook), key=lambda w: w.ranks())
    first_owner: dict[ReceivedRows, int] = {}
    collisions: list[tuple[int, int, ReceivedRows]] = []
    for idx, w in enumerate(words):
        for received in raw_received_set(w, model):
            owner = first_owner.setdefault(received, idx)
            if owner != idx:
                collisions.append((owner, idx, received))
    if not collisions:
        return OracleResult(True, None)
    i, j, received = min(
        collisions,
        key=lambda c: (words[c[0]].ranks(), words[c[1]].ranks(), c[2].sort_key()),
    )
    return OracleResult(False, (words[i], words[j], received))
