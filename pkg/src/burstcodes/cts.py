"""Interleaved construction correcting one (t, s)-burst, t >= 2s >= 2.

Write a codeword of length n as an array of k = t - s rows, row i
holding coordinates i, i+k, i+2k, ...  A (t, s)-burst deletes t
consecutive coordinates and inserts s, so the array of the corrupted
word keeps its row alignment (each row loses exactly one net symbol)
and every row suffers either a single deletion or a (2, 1)-burst.
Exactly s rows get the (2, 1)-bursts, and all the damage sits within
two adjacent columns.

Row 1 therefore carries a code that corrects any (2, 1)-burst outright
(C21 with a run cap f so its deletions localize well), and decoding it
first yields a short window of columns where every other row's error
starts.  Rows 2..k only need the cheaper windowed SVT21 codes.

Window bookkeeping, verified exhaustively in the test suite:

* merge on row 1 at column p      ->  other rows start in [p-1, p+1]
* deletion inside run [c1, c2]    ->  other rows start in [c1-1, c2]
  when s = 1, and in [c1-2, c2] when s >= 2.

The s >= 2 widening is real: a burst that starts on a late row wraps
row 1's damage one column to the right of everyone else's, and when
row 1's burst imitates a deletion at the front of a run the documented
[c1-1, c2] just misses the true start column of the rows below it
(directed sweeps show e.g. word 00000010, t=4, s=2, start 4, insert 10
needs column 2 while [c1-1, c2] clips to {3}).  The window capacity P
of the row codes is f+1 when s = 1 and f+2 when s >= 2 so the widened
window always fits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    MERGE_00_TO_1,
    MERGE_11_TO_0,
    Codebook,
    DecodeOutcome,
    DEFAULT_ENUM_GUARD,
    c21_decode,
    c21_member,
    c21rll_member,
    rll_max_run,
    rll_member,
    svt21_decode,
    svt21_member,
)
from .errors import DecodeFailure, GuardLimit
from .words import all_words, check_word, deinterleave, interleave, vt_syndrome

__all__ = [
    "CtsParams",
    "CtsTrace",
    "row_run_cap",
    "window_capacity",
    "column_window",
    "cts_member",
    "cts_decode",
    "cts_param_search",
]


def row_run_cap(m: int) -> int:
    """Run cap for the row-1 code at row length m."""
    return rll_max_run(m)


def window_capacity(m: int, s: int) -> int:
    """Window capacity P for the row codes: f+1, or f+2 once s >= 2."""
    return row_run_cap(m) + (1 if s == 1 else 2)


@dataclass(frozen=True)
class CtsParams:
    """Syndrome choices for one interleaved code.

    a, b are row 1's C21 values; row_params holds (c_i, d_i) for rows
    2..k in order.  f and P are determined by n, t, s and are stored
    for the record.
    """

    n: int
    t: int
    s: int
    a: int
    b: int
    row_params: tuple[tuple[int, int], ...]
    f: int
    P: int

    def __post_init__(self):
        n, t, s = self.n, self.t, self.s
        if s < 1:
            raise ValueError("need s >= 1")
        if t < 2 * s:
            raise ValueError(f"construction needs t >= 2s, got t={t}, s={s}")
        k = t - s
        if n % k != 0:
            raise ValueError(f"row count {k} must divide n={n}")
        m = n // k
        if m < 2:
            raise ValueError("rows must have length >= 2")
        if len(self.row_params) != k - 1:
            raise ValueError(
                f"expected {k - 1} row parameter pairs, got {len(self.row_params)}"
            )
        if self.f != row_run_cap(m):
            raise ValueError(f"run cap must be {row_run_cap(m)} at m={m}")
        if self.P != window_capacity(m, s):
            raise ValueError(f"window capacity must be {window_capacity(m, s)}")

    @classmethod
    def derive(cls, n, t, s, a, b, row_params=()):
        m = n // (t - s)
        return cls(
            n, t, s, a, b, tuple(tuple(rp) for rp in row_params),
            row_run_cap(m), window_capacity(m, s),
        )

    @property
    def k(self) -> int:
        return self.t - self.s

    @property
    def m(self) -> int:
        return self.n // self.k

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "s": self.s,
            "a": self.a,
            "b": self.b,
            "rows": [list(rp) for rp in self.row_params],
            "f": self.f,
            "P": self.P,
        }


def cts_member(x: str, params: CtsParams) -> bool:
    check_word(x)
    if len(x) != params.n:
        return False
    rows = interleave(x, params.k)
    if not c21rll_member(rows[0], params.a, params.b, params.m, params.f):
        return False
    return all(
        svt21_member(row, c, d, params.P)
        for row, (c, d) in zip(rows[1:], params.row_params)
    )


def column_window(outcome: DecodeOutcome, s: int, m: int) -> tuple[int, int]:
    """Column interval (1-based, clipped to [1, m]) holding every other
    row's error start, given row 1's decode outcome."""
    if outcome.classification in (MERGE_00_TO_1, MERGE_11_TO_0):
        p = outcome.window[0]
        lo, hi = p - 1, p + 1
    else:
        c1, c2 = outcome.window
        lo = c1 - 1 - (0 if s == 1 else 1)
        hi = c2
    return max(1, lo), min(m, hi)


@dataclass(frozen=True)
class CtsTrace:
    """How a decode went: the row-1 outcome, the column window it
    implied, and every decoded row in order."""

    row1: DecodeOutcome
    column_window: tuple[int, int] | None
    rows: tuple[str, ...]


def cts_decode(y: str, params: CtsParams, *, trace: bool = False):
    """Recover the codeword one (t, s)-burst of which produced y.

    Returns the codeword, or (codeword, CtsTrace) when trace=True.
    """
    check_word(y)
    k, m = params.k, params.m
    if len(y) != params.n - k:
        raise ValueError(
            f"received word must have length {params.n - k}, got {len(y)}"
        )
    if k == 1:
        # single row: the row-1 code does all the work
        out = c21_decode(y, params.a, params.b, m)
        if not rll_member(out.word, params.f):
            raise DecodeFailure("decoded word violates the run cap")
        if trace:
            return out.word, CtsTrace(out, None, (out.word,))
        return out.word

    rows_y = tuple(y[i::k] for i in range(k))
    out1 = c21_decode(rows_y[0], params.a, params.b, m)
    if not rll_member(out1.word, params.f):
        raise DecodeFailure("row 1 decoded outside the run cap")
    window = column_window(out1, params.s, m)
    rows_x = [out1.word]
    for row, (c, d) in zip(rows_y[1:], params.row_params):
        rows_x.append(svt21_decode(row, c, d, params.P, window, m))
    word = deinterleave(rows_x)
    if trace:
        return word, CtsTrace(out1, window, tuple(rows_x))
    return word


def cts_param_search(
    n: int, t: int, s: int, *, guard: int = DEFAULT_ENUM_GUARD
) -> tuple[CtsParams, Codebook]:
    """Largest syndrome bucket for the construction at (n, t, s).

    Buckets every word whose first row respects the run cap by the full
    tuple of row syndromes; ties go to the lexicographically smallest
    tuple.
    """
    if n > guard:
        raise GuardLimit(f"search at n={n} exceeds the enumeration guard {guard}")
    if s < 1 or t < 2 * s:
        raise ValueError(f"construction needs t >= 2s >= 2, got t={t}, s={s}")
    k = t - s
    if n % k != 0:
        raise ValueError(f"row count {k} must divide n={n}")
    m = n // k
    if m < 2:
        raise ValueError("rows must have length >= 2")
    f = row_run_cap(m)
    P = window_capacity(m, s)

    def key_of(x):
        rows = interleave(x, k)
        if not rll_member(rows[0], f):
            return None
        key = [vt_syndrome(rows[0]) % (2 * m - 1), rows[0].count("1") % 4]
        for row in rows[1:]:
            key.append(vt_syndrome(row) % (2 * P - 1))
            key.append(row.count("1") % 4)
        return tuple(key)

    counts: dict[tuple, int] = {}
    for x in all_words(n):
        key = key_of(x)
        if key is not None:
            counts[key] = counts.get(key, 0) + 1
    best = min(counts, key=lambda kk: (-counts[kk], kk))

    members = tuple(x for x in all_words(n) if key_of(x) == best)
    params = CtsParams.derive(
        n, t, s, best[0], best[1],
        tuple(zip(best[2::2], best[3::2])),
    )
    book = Codebook("cts", n, params.to_dict(), members)
    return params, book
