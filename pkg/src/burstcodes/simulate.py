"""Randomized burst trials with a self-contained PRNG.

Results must be byte-identical across machines and interpreter
versions, so the generator is pinned here rather than borrowed from
the random module: SplitMix64 (Steele, Lea, Flood 2014), 64-bit state,
one addition and two xor-multiply mixes per draw.  Unbiased bounded
draws use rejection sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .c31 import c31_decode, c31_param_search
from .channel import BurstSpec, apply_burst
from .codes import c21_decode, pigeonhole_search
from .cts import cts_decode, cts_param_search
from .errors import DecodingError

__all__ = ["SplitMix64", "SimulationResult", "simulate", "family_setup"]

_MASK = (1 << 64) - 1
_WITNESS_CAP = 10


class SplitMix64:
    """Deterministic 64-bit generator; same seed, same stream, anywhere."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) without modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            draw = self.next64()
            if draw < limit:
                return draw % bound

    def word(self, length: int) -> str:
        """Uniform word of the given length."""
        if length == 0:
            return ""
        return format(self.below(1 << length), f"0{length}b")


@dataclass
class SimulationResult:
    family: str
    n: int
    t: int
    s: int
    seed: int
    trials: int
    successes: int
    params: dict
    codebook_size: int
    witnesses: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return self.trials - self.successes

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "t": self.t,
            "s": self.s,
            "seed": self.seed,
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "params": self.params,
            "codebook_size": self.codebook_size,
            "witnesses": self.witnesses,
        }


def family_setup(family: str, n: int, t: int | None = None, s: int | None = None, guard: int | None = None):
    """Search the best codebook for a family and build its decoder.

    Returns (t, s, params_dict, codebook, decode) where decode maps a
    received word back to the codeword.  Families: c21, c31, cts (the
    last needs t and s).
    """
    kwargs = {} if guard is None else {"guard": guard}
    if family == "c21":
        params, book = pigeonhole_search("c21", n, **kwargs)
        a, b = params["a"], params["b"]
        return 2, 1, params, book, lambda y: c21_decode(y, a, b, n).word
    if family == "c31":
        params, book = c31_param_search(n, **kwargs)
        return 3, 1, params.to_dict(), book, lambda y: c31_decode(y, params)
    if family == "cts":
        if t is None or s is None:
            raise ValueError("cts simulation needs t and s")
        params, book = cts_param_search(n, t, s, **kwargs)
        return t, s, params.to_dict(), book, lambda y: cts_decode(y, params)
    raise ValueError(f"unknown family {family!r}")


def simulate(
    family: str,
    n: int,
    trials: int,
    seed: int,
    *,
    t: int | None = None,
    s: int | None = None,
    guard: int | None = None,
) -> SimulationResult:
    """Hit random codewords with random bursts and decode them back.

    Per trial the stream is consumed in a fixed order: codeword index,
    burst start, inserted word.  Up to 10 failing trials are kept as
    replayable witnesses.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    t, s, params, book, decode = family_setup(family, n, t, s, guard)
    rng = SplitMix64(seed)
    successes = 0
    witnesses: list[dict] = []
    for _ in range(trials):
        x = book.members[rng.below(book.size)]
        start = 1 + rng.below(n - t + 1)
        ins = rng.word(s)
        y = apply_burst(x, BurstSpec(t, s, start, ins))
        try:
            got = decode(y)
        except DecodingError as exc:
            got = f"{type(exc).__name__}: {exc}"
        if got == x:
            successes += 1
        elif len(witnesses) < _WITNESS_CAP:
            witnesses.append(
                {"codeword": x, "start": start, "inserted": ins, "decoded": got}
            )
    return SimulationResult(
        family=family,
        n=n,
        t=t,
        s=s,
        seed=seed,
        trials=trials,
        successes=successes,
        params=params,
        codebook_size=book.size,
        witnesses=witnesses,
    )
