"""The (t, s)-burst channel and its combinatorial geometry.

A (t, s)-burst at coordinate i deletes the t consecutive symbols
x_i ... x_{i+t-1} and inserts an arbitrary word of length s in their
place.  ball() enumerates everything such a burst can produce from a
center word; refined_ball() restricts to outputs whose inserted block
disagrees with the deleted block at both boundary symbols, which is the
partition device behind the closed-form ball size.

Ball size and the resulting sphere-packing ceiling are exact:

    |B_{t,s}(x)| = (n - t + 2) * 2^(s-1)        for any center x,
    |C|         <= 2^(n-m+1) / (n - m + 2)       with m = max(t, s),

the max coming from the fact that a code corrects (t, s)-bursts exactly
when it corrects (s, t)-bursts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DivisibilityError
from .words import all_words, check_word, interleave, run_profile

__all__ = [
    "BurstSpec",
    "Ball",
    "apply_burst",
    "ball",
    "ball_size_formula",
    "refined_ball",
    "refined_ball_size",
    "sphere_packing_bound",
]


@dataclass(frozen=True)
class BurstSpec:
    """One concrete burst: sizes (t, s), 1-based start, and inserted word."""

    t: int
    s: int
    start: int
    inserted: str

    def __post_init__(self):
        if self.t < 0 or self.s < 0:
            raise ValueError("burst sizes must be >= 0")
        check_word(self.inserted, what="inserted word")
        if len(self.inserted) != self.s:
            raise ValueError(
                f"inserted word has length {len(self.inserted)}, expected s={self.s}"
            )


def apply_burst(x: str, spec: BurstSpec) -> str:
    """Delete t symbols of x starting at spec.start, splice in spec.inserted."""
    check_word(x)
    n = len(x)
    if not 1 <= spec.start <= n - spec.t + 1:
        raise ValueError(
            f"burst start {spec.start} out of range 1..{n - spec.t + 1} for n={n}, t={spec.t}"
        )
    i = spec.start - 1
    return x[:i] + spec.inserted + x[i + spec.t :]


@dataclass(frozen=True)
class Ball:
    """A sorted, deduplicated set of channel outputs around one center."""

    center: str
    t: int
    s: int
    members: tuple[str, ...]
    refined: bool = field(default=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset[str]:
        return frozenset(self.members)

    def to_dict(self, include_members: bool = True) -> dict:
        d = {"center": self.center, "t": self.t, "s": self.s, "size": self.size}
        if self.refined:
            d["refined"] = True
        if include_members:
            d["members"] = list(self.members)
        return d


def ball(x: str, t: int, s: int) -> Ball:
    """Every word reachable from x by one (t, s)-burst.

    Enumerates all starts and all 2^s inserted words, deduplicating.
    Requires n >= t so at least one start exists.
    """
    check_word(x)
    n = len(x)
    if t < 0 or s < 0:
        raise ValueError("burst sizes must be >= 0")
    if n < t:
        raise ValueError(f"word of length {n} cannot lose a burst of {t}")
    out = set()
    for start in range(1, n - t + 2):
        i = start - 1
        head, tail = x[:i], x[i + t :]
        for ins in all_words(s):
            out.add(head + ins + tail)
    return Ball(x, t, s, tuple(sorted(out)))


def ball_size_formula(n: int, t: int, s: int) -> int:
    """Closed-form |B_{t,s}| = (n - t + 2) * 2^(s-1); center-independent."""
    if s < 1:
        raise ValueError("closed form needs s >= 1")
    if t < 0:
        raise ValueError("t must be >= 0")
    if n < max(t, s):
        raise ValueError(f"need n >= max(t, s), got n={n}, t={t}, s={s}")
    return (n - t + 2) * 2 ** (s - 1)


def refined_ball(x: str, k: int, l: int) -> Ball:
    """Outputs of a (k, l)-burst whose inserted block disagrees with the
    deleted block at both ends: y_1 != x_i and y_l != x_{i+k-1}.

    For k = 0 or l = 0 there is no boundary to disagree with and this is
    the plain burst-insertion or burst-deletion ball.  Over all l (or all
    k) these refined balls partition the full ball.
    """
    check_word(x)
    n = len(x)
    if k < 0 or l < 0:
        raise ValueError("burst sizes must be >= 0")
    if n < k:
        raise ValueError(f"word of length {n} cannot lose a burst of {k}")
    out = set()
    if k == 0:
        for start in range(1, n + 2):
            i = start - 1
            for ins in all_words(l):
                out.add(x[:i] + ins + x[i:])
    else:
        for start in range(1, n - k + 2):
            i = start - 1
            head, tail = x[:i], x[i + k :]
            first, last = x[i], x[i + k - 1]
            for ins in all_words(l):
                if l >= 1 and (ins[0] == first or ins[-1] == last):
                    continue
                out.add(head + ins + tail)
    return Ball(x, k, l, tuple(sorted(out)), refined=True)


def refined_ball_size(x: str, k: int, l: int) -> int:
    """Closed-form size of refined_ball(x, k, l).

    The k >= 1 formulas with l <= 1 read run counts off the k-row (for
    l = 0) or (k-1)-row (for l = 1) interleaving of x, so they require
    that row count to divide n; otherwise DivisibilityError is raised
    and the caller can fall back to enumeration.
    """
    check_word(x)
    n = len(x)
    if k < 0 or l < 0:
        raise ValueError("burst sizes must be >= 0")
    if n < k:
        raise ValueError(f"word of length {n} cannot lose a burst of {k}")
    if k == 0:
        if l == 0:
            return 1
        return n * 2 ** (l - 1) + 2**l
    if l == 0:
        if n % k != 0:
            raise DivisibilityError(f"size formula for (k={k}, l=0) needs {k} | {n}")
        return 1 + sum(run_profile(row).count - 1 for row in interleave(x, k))
    if l == 1:
        if k == 1:
            return n  # Hamming sphere of radius exactly 1
        if n % (k - 1) != 0:
            raise DivisibilityError(f"size formula for (k={k}, l=1) needs {k - 1} | {n}")
        return n - sum(run_profile(row).count for row in interleave(x, k - 1))
    return (n - k + 1) * 2 ** (l - 2)


def sphere_packing_bound(n: int, t: int, s: int, *, raw: bool = False) -> int:
    """Largest possible size of a length-n code correcting every (t, s)-burst.

    Uses m = max(t, s) by default (correcting (t, s) and (s, t) bursts is
    the same property, so the stronger of the two ceilings applies);
    raw=True keeps m = t.
    """
    if t < 1 or s < 1:
        raise ValueError("bound needs t >= 1 and s >= 1")
    m = t if raw else max(t, s)
    if n < m:
        raise ValueError(f"need n >= {m}")
    return (1 << (n - m + 1)) // (n - m + 2)
