"""Component codes: syndrome definitions, membership tests, decoders.

Four single-error families live here.

* VT(n; a): position-weighted syndrome mod n+1, corrects one deletion.
* LEV2(n; a): zero-prefixed run syndrome mod 2n, corrects one burst of
  at most two deletions.
* C21(n; a, b): position-weighted syndrome mod 2n-1 plus weight mod 4,
  corrects any (2, 1)-burst (two deletions, one arbitrary insertion at
  the same spot).
* SVT21(P; c, d): the shifted variant, syndrome mod 2P-1, correcting a
  (2, 1)-burst whose start is already known to lie in a window of at
  most P consecutive coordinates.

All decoders work the same way: enumerate the finitely many preimages
the claimed error type allows, keep the syndrome-consistent ones, and
demand exactly one survivor.  Zero survivors raise DecodeFailure and
two or more raise DecodeAmbiguity; the two conditions are different
facts about the received word and are never conflated.

The weight residue mod 4 of a received (2, 1)-burst output determines
what happened: with delta = (b - weight(y)) mod 4,

    delta == 3  ->  a 1 replaced 00          (merge-00->1)
    delta == 2  ->  a 0 replaced 11          (merge-11->0)
    delta in {0, 1}  ->  the burst acted like a single deletion.

pigeonhole_search() finds, for any family, the syndrome values whose
codebook is largest by bucketing the full length-n space; averaging
guarantees the winner is at least 2^n over the number of residue
classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DecodeAmbiguity, DecodeFailure, GuardLimit
from .words import all_words, check_word, run_profile, rsyn0, vt_syndrome

__all__ = [
    "NO_ERROR",
    "SINGLE_DELETION",
    "TWO_BURST_DELETION",
    "MERGE_00_TO_1",
    "MERGE_11_TO_0",
    "PATTERN_000_TO_1",
    "PATTERN_010_TO_1",
    "PATTERN_111_TO_0",
    "PATTERN_101_TO_0",
    "DecodeOutcome",
    "Codebook",
    "vt_member",
    "vt_decode",
    "lev2_member",
    "lev2_decode",
    "c21_member",
    "c21_decode",
    "svt21_member",
    "svt21_decode",
    "rll_max_run",
    "rll_member",
    "max_run_length",
    "c21rll_member",
    "pigeonhole_search",
    "SEARCH_FAMILIES",
    "DEFAULT_ENUM_GUARD",
]

NO_ERROR = "no-error"
SINGLE_DELETION = "single-deletion"
TWO_BURST_DELETION = "two-burst-deletion"
MERGE_00_TO_1 = "merge-00->1"
MERGE_11_TO_0 = "merge-11->0"
PATTERN_000_TO_1 = "pattern-000->1"
PATTERN_010_TO_1 = "pattern-010->1"
PATTERN_111_TO_0 = "pattern-111->0"
PATTERN_101_TO_0 = "pattern-101->0"

DEFAULT_ENUM_GUARD = 24


@dataclass(frozen=True)
class DecodeOutcome:
    """Decoded word plus what the error looked like and where.

    window is a 1-based inclusive interval of burst start coordinates
    consistent with the received word.  For merge classifications it
    pins the exact coordinate; for a single deletion it spans the full
    run of the decoded word that the deletion happened in (whose upper
    end can exceed the received length by one, since a deletion at the
    very end leaves no later anchor).
    """

    word: str
    classification: str
    window: tuple[int, int]


@dataclass(frozen=True)
class Codebook:
    """All words of one length satisfying one family's syndrome equations."""

    family: str
    n: int
    params: dict
    members: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def redundancy(self) -> float:
        return self.n - math.log2(self.size)

    def to_dict(self, include_members: bool = False) -> dict:
        d = {
            "family": self.family,
            "n": self.n,
            "params": dict(self.params),
            "size": self.size,
            "redundancy": round(self.redundancy, 4),
        }
        if include_members:
            d["members"] = list(self.members)
        return d

    def __contains__(self, x: str) -> bool:
        return x in set(self.members)


def _survivors(candidates, predicate):
    """Deduplicated candidates passing predicate; candidates are (tag, word)."""
    seen: dict[str, object] = {}
    for tag, word in candidates:
        if word not in seen and predicate(word):
            seen[word] = tag
    return seen


def _expect_one(seen: dict, context: str) -> tuple[str, object]:
    if not seen:
        raise DecodeFailure(f"{context}: no syndrome-consistent candidate")
    if len(seen) > 1:
        raise DecodeAmbiguity(
            f"{context}: {len(seen)} syndrome-consistent candidates: "
            + ", ".join(sorted(seen))
        )
    [(word, tag)] = seen.items()
    return word, tag


# ---------------------------------------------------------------- VT


def vt_member(x: str, a: int, n: int) -> bool:
    check_word(x)
    if len(x) != n:
        return False
    return vt_syndrome(x) % (n + 1) == a % (n + 1)


def vt_decode(y: str, a: int, n: int) -> str:
    """Recover the VT(n; a) codeword a single deletion of which gave y."""
    check_word(y)
    if len(y) != n - 1:
        raise ValueError(f"received word must have length {n - 1}, got {len(y)}")
    cands = ((i, y[:i] + bit + y[i:]) for i in range(n) for bit in "01")
    seen = _survivors(cands, lambda w: vt_syndrome(w) % (n + 1) == a % (n + 1))
    word, _ = _expect_one(seen, "vt_decode")
    return word


# ---------------------------------------------------------------- LEV2


def lev2_member(x: str, a: int, n: int) -> bool:
    check_word(x)
    if len(x) != n:
        return False
    return rsyn0(x) % (2 * n) == a % (2 * n)


def lev2_decode(y: str, a: int, n: int) -> str:
    """Recover from a burst of at most two deletions.

    The received length says how many symbols went missing (0, 1, or 2);
    the zero-prefixed run syndrome mod 2n then pins the unique preimage.
    """
    check_word(y)
    a = a % (2 * n)
    if len(y) == n:
        if lev2_member(y, a, n):
            return y
        raise DecodeFailure("lev2_decode: full-length word is not a codeword")
    if len(y) == n - 1:
        cands = ((i, y[:i] + bit + y[i:]) for i in range(n) for bit in "01")
    elif len(y) == n - 2:
        cands = (
            (i, y[:i] + pair + y[i:])
            for i in range(n - 1)
            for pair in ("00", "01", "10", "11")
        )
    else:
        raise ValueError(f"received length {len(y)} not in {{n, n-1, n-2}} for n={n}")
    seen = _survivors(cands, lambda w: rsyn0(w) % (2 * n) == a)
    word, _ = _expect_one(seen, "lev2_decode")
    return word


# ---------------------------------------------------------------- C21


def c21_member(x: str, a: int, b: int, n: int) -> bool:
    check_word(x)
    if len(x) != n:
        return False
    return vt_syndrome(x) % (2 * n - 1) == a % (2 * n - 1) and x.count("1") % 4 == b % 4


def _deletion_run(x: str, y: str) -> tuple[int, int]:
    """The run of x whose one-symbol deletion yields y, as 1-based bounds."""
    hits = [p for p in range(1, len(x) + 1) if x[: p - 1] + x[p:] == y]
    if not hits:
        raise DecodeFailure("decoded word does not reduce to the received word")
    return hits[0], hits[-1]


def c21_decode(y: str, a: int, b: int, n: int) -> DecodeOutcome:
    """Correct one (2, 1)-burst against syndromes (a mod 2n-1, b mod 4).

    The weight delta picks the error shape; candidate preimages of that
    shape are filtered by the position-weighted syndrome.
    """
    check_word(y)
    if len(y) != n - 1:
        raise ValueError(f"received word must have length {n - 1}, got {len(y)}")
    a = a % (2 * n - 1)
    b = b % 4
    delta = (b - y.count("1")) % 4

    def vt_ok(w: str) -> bool:
        return vt_syndrome(w) % (2 * n - 1) == a

    if delta == 3 or delta == 2:
        mark, patch, label = (
            ("1", "00", MERGE_00_TO_1) if delta == 3 else ("0", "11", MERGE_11_TO_0)
        )
        cands = (
            (p, y[: p - 1] + patch + y[p:])
            for p in range(1, n)
            if y[p - 1] == mark
        )
        seen = _survivors(cands, vt_ok)
        word, p = _expect_one(seen, "c21_decode")
        return DecodeOutcome(word, label, (p, p))

    # delta 0 or 1: the burst kept one of the two symbols it deleted, so the
    # net effect is a single deletion
    cands = ((i, y[:i] + bit + y[i:]) for i in range(n) for bit in "01")
    seen = _survivors(cands, lambda w: vt_ok(w) and w.count("1") % 4 == b)
    word, _ = _expect_one(seen, "c21_decode")
    return DecodeOutcome(word, SINGLE_DELETION, _deletion_run(word, y))


# ---------------------------------------------------------------- SVT21


def svt21_member(x: str, c: int, d: int, P: int) -> bool:
    check_word(x)
    if P < 1:
        raise ValueError("window capacity P must be >= 1")
    return vt_syndrome(x) % (2 * P - 1) == c % (2 * P - 1) and x.count("1") % 4 == d % 4


def svt21_decode(
    y: str, c: int, d: int, P: int, window: tuple[int, int], n: int
) -> str:
    """Correct a (2, 1)-burst known to start inside window.

    window is a 1-based inclusive interval of at most P coordinates; it
    is clamped to the valid start range 1..n-1.  Only syndromes mod
    2P-1 and mod 4 are needed because candidate starts this close
    together can never collide on both.
    """
    check_word(y)
    if len(y) != n - 1:
        raise ValueError(f"received word must have length {n - 1}, got {len(y)}")
    if P < 1:
        raise ValueError("window capacity P must be >= 1")
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    if hi - lo + 1 > P:
        raise ValueError(f"window {window} longer than P={P}")
    lo, hi = max(lo, 1), min(hi, n - 1)
    if lo > hi:
        raise ValueError(f"window {window} has no valid burst start for n={n}")
    c = c % (2 * P - 1)
    d = d % 4
    cands = (
        (p, y[: p - 1] + pair + y[p:])
        for p in range(lo, hi + 1)
        for pair in ("00", "01", "10", "11")
    )
    seen = _survivors(
        cands,
        lambda w: vt_syndrome(w) % (2 * P - 1) == c and w.count("1") % 4 == d,
    )
    word, _ = _expect_one(seen, "svt21_decode")
    return word


# ---------------------------------------------------------------- RLL


def rll_max_run(n: int) -> int:
    """Run cap ceil(log2 n) + 3 used by the interleaved construction."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return (n - 1).bit_length() + 3


def max_run_length(x: str) -> int:
    """Length of the longest run in x; 0 for the empty word."""
    check_word(x)
    if not x:
        return 0
    best = cur = 1
    for prev, ch in zip(x, x[1:]):
        cur = cur + 1 if ch == prev else 1
        if cur > best:
            best = cur
    return best


def rll_member(x: str, f: int) -> bool:
    """True when every run of x has length at most f."""
    if f < 1:
        raise ValueError("run cap must be >= 1")
    return max_run_length(x) <= f


def c21rll_member(x: str, a: int, b: int, n: int, f: int | None = None) -> bool:
    """C21 membership with the run cap added (default cap rll_max_run(n))."""
    if f is None:
        f = rll_max_run(n)
    return c21_member(x, a, b, n) and rll_member(x, f)


# ---------------------------------------------------------------- search

SEARCH_FAMILIES = ("vt", "lev2", "c21", "c21rll", "svt21")


def _family_key(family: str, n: int, P: int | None, f: int | None):
    """Return (key function, parameter names, fixed params) for a family."""
    if family == "vt":
        return (lambda x: (vt_syndrome(x) % (n + 1),)), ("a",), {}
    if family == "lev2":
        return (lambda x: (rsyn0(x) % (2 * n),)), ("a",), {}
    if family == "c21":
        return (
            lambda x: (vt_syndrome(x) % (2 * n - 1), x.count("1") % 4)
        ), ("a", "b"), {}
    if family == "c21rll":
        cap = rll_max_run(n) if f is None else f
        key = lambda x: (  # noqa: E731
            (vt_syndrome(x) % (2 * n - 1), x.count("1") % 4)
            if rll_member(x, cap)
            else None
        )
        return key, ("a", "b"), {"f": cap}
    if family == "svt21":
        if P is None:
            raise ValueError("svt21 search needs the window capacity P")
        return (
            lambda x: (vt_syndrome(x) % (2 * P - 1), x.count("1") % 4)
        ), ("c", "d"), {"P": P}
    raise ValueError(f"unknown family {family!r}; choose from {SEARCH_FAMILIES}")


def pigeonhole_search(
    family: str,
    n: int,
    *,
    P: int | None = None,
    f: int | None = None,
    guard: int = DEFAULT_ENUM_GUARD,
) -> tuple[dict, Codebook]:
    """Best syndrome values for a family at length n, by full enumeration.

    Buckets all 2^n words by their residue tuple and returns the largest
    bucket; ties go to the lexicographically smallest tuple, so results
    are reproducible.  Lengths above guard are refused.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    if n > guard:
        raise GuardLimit(f"search at n={n} exceeds the enumeration guard {guard}")
    key_of, names, fixed = _family_key(family, n, P, f)

    counts: dict[tuple, int] = {}
    for x in all_words(n):
        key = key_of(x)
        if key is not None:
            counts[key] = counts.get(key, 0) + 1
    best_key = min(counts, key=lambda k: (-counts[k], k))

    members = tuple(x for x in all_words(n) if key_of(x) == best_key)
    params = dict(zip(names, best_key)) | fixed
    return params, Codebook(family, n, params, members)
