"""Exhaustive verification with machine-readable reports.

Every check returns a VerificationReport: a verdict, the exact counts
behind it, and on failure a concrete witness that can be replayed by
hand.  Reports serialize to single JSON lines (schema_version 1) so
runs can be diffed and archived.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .channel import ball, ball_size_formula, refined_ball, refined_ball_size, sphere_packing_bound
from .errors import DecodingError, DivisibilityError
from .words import all_words

__all__ = [
    "VerificationReport",
    "verify_disjoint",
    "verify_roundtrip",
    "verify_equivalence",
    "verify_ball_laws",
    "bound_report",
    "BALL_LAW_GUARD",
]

SCHEMA_VERSION = 1
BALL_LAW_GUARD = 14


@dataclass
class VerificationReport:
    check: str
    params: dict
    verdict: bool
    counts: dict = field(default_factory=dict)
    witness: dict | None = None
    elapsed_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "check": self.check,
            "params": self.params,
            "verdict": "pass" if self.verdict else "fail",
            "counts": self.counts,
            "witness": self.witness,
            "elapsed_s": round(self.elapsed_s, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_disjoint(members, t: int, s: int) -> VerificationReport:
    """Check that no channel output is reachable from two codewords.

    Hashes every ball member back to its center; the first collision
    becomes the witness.
    """
    start = time.perf_counter()
    owner: dict[str, str] = {}
    outputs = 0
    witness = None
    members = tuple(members)
    for x in members:
        if witness:
            break
        for y in ball(x, t, s).members:
            outputs += 1
            prev = owner.get(y)
            if prev is not None and prev != x:
                witness = {"center_a": prev, "center_b": x, "shared": y}
                break
            owner[y] = x
    return VerificationReport(
        check="disjoint",
        params={"t": t, "s": s, "codewords": len(members)},
        verdict=witness is None,
        counts={"codewords": len(members), "outputs_checked": outputs},
        witness=witness,
        elapsed_s=time.perf_counter() - start,
    )


def verify_roundtrip(members, t: int, s: int, decode) -> VerificationReport:
    """Apply every (t, s)-burst to every codeword and decode it back.

    decode is a callable from received word to codeword; raising a
    DecodingError counts as a failure with the exception recorded.
    """
    from .channel import BurstSpec, apply_burst

    start = time.perf_counter()
    members = tuple(members)
    corruptions = failures = 0
    witness = None
    for x in members:
        n = len(x)
        for pos in range(1, n - t + 2):
            for ins in all_words(s):
                corruptions += 1
                y = apply_burst(x, BurstSpec(t, s, pos, ins))
                try:
                    got = decode(y)
                except DecodingError as exc:
                    failures += 1
                    witness = witness or {
                        "codeword": x,
                        "start": pos,
                        "inserted": ins,
                        "error": f"{type(exc).__name__}: {exc}",
                    }
                    continue
                if got != x:
                    failures += 1
                    witness = witness or {
                        "codeword": x,
                        "start": pos,
                        "inserted": ins,
                        "decoded": got,
                    }
    return VerificationReport(
        check="roundtrip",
        params={"t": t, "s": s, "codewords": len(members)},
        verdict=failures == 0,
        counts={
            "codewords": len(members),
            "corruptions": corruptions,
            "failures": failures,
        },
        witness=witness,
        elapsed_s=time.perf_counter() - start,
    )


def verify_equivalence(members, t: int, s: int) -> VerificationReport:
    """Disjointness under (t, s) and under (s, t) must agree.

    Correcting one channel is the same property as correcting the
    other, so a codebook passing one and failing the other would break
    the equivalence; the report carries both verdicts.
    """
    start = time.perf_counter()
    fwd = verify_disjoint(members, t, s)
    rev = verify_disjoint(members, s, t)
    agree = fwd.verdict == rev.verdict
    witness = None
    if not agree:
        witness = {
            "forward": {"t": t, "s": s, "verdict": fwd.verdict, "witness": fwd.witness},
            "swapped": {"t": s, "s": t, "verdict": rev.verdict, "witness": rev.witness},
        }
    return VerificationReport(
        check="equivalence",
        params={"t": t, "s": s, "codewords": len(tuple(members))},
        verdict=agree,
        counts={
            "forward_pass": int(fwd.verdict),
            "swapped_pass": int(rev.verdict),
        },
        witness=witness,
        elapsed_s=time.perf_counter() - start,
    )


def _refined_parts(t: int, s: int):
    """The (k, l) pairs whose refined balls partition the (t, s)-ball."""
    if t >= s:
        return [(t - s + l, l) for l in range(s + 1)]
    return [(k, s - t + k) for k in range(t + 1)]


def verify_ball_laws(
    n_values, t_max: int = 4, s_max: int = 4, *, guard: int = BALL_LAW_GUARD
) -> dict[str, VerificationReport]:
    """One sweep over all words and burst sizes, three laws checked.

    * size: |ball| equals the closed form for every center
    * partition: the refined balls tile the full ball without overlap
    * refined-size: each closed-form refined size (where its
      divisibility precondition holds) matches enumeration

    Returns reports keyed 'size', 'partition', 'refined-size'.
    """
    n_values = sorted(set(n_values))
    if n_values and n_values[-1] > guard:
        from .errors import GuardLimit

        raise GuardLimit(f"ball-law sweep at n={n_values[-1]} exceeds guard {guard}")
    start = time.perf_counter()
    fails = {"size": 0, "partition": 0, "refined-size": 0}
    wit: dict[str, dict | None] = {"size": None, "partition": None, "refined-size": None}
    words = 0
    combos = 0
    formula_checks = 0
    for n in n_values:
        pairs = [
            (t, s)
            for t in range(1, t_max + 1)
            for s in range(1, s_max + 1)
            if max(t, s) <= n
        ]
        for x in all_words(n):
            words += 1
            for t, s in pairs:
                combos += 1
                full = ball(x, t, s)
                if full.size != ball_size_formula(n, t, s):
                    fails["size"] += 1
                    wit["size"] = wit["size"] or {
                        "x": x, "t": t, "s": s,
                        "enumerated": full.size,
                        "formula": ball_size_formula(n, t, s),
                    }
                seen: set[str] = set()
                union_ok = True
                total = 0
                for k, l in _refined_parts(t, s):
                    part = refined_ball(x, k, l)
                    total += part.size
                    if seen & part.member_set():
                        union_ok = False
                    seen |= part.member_set()
                    try:
                        predicted = refined_ball_size(x, k, l)
                    except DivisibilityError:
                        predicted = None
                    if predicted is not None:
                        formula_checks += 1
                        if predicted != part.size:
                            fails["refined-size"] += 1
                            wit["refined-size"] = wit["refined-size"] or {
                                "x": x, "k": k, "l": l,
                                "enumerated": part.size,
                                "formula": predicted,
                            }
                if not union_ok or seen != full.member_set() or total != len(seen):
                    fails["partition"] += 1
                    wit["partition"] = wit["partition"] or {
                        "x": x, "t": t, "s": s,
                        "parts_total": total,
                        "union": len(seen),
                        "ball": full.size,
                    }
    elapsed = time.perf_counter() - start
    base_params = {
        "n_values": list(n_values),
        "t_max": t_max,
        "s_max": s_max,
    }
    base_counts = {"words": words, "burst_combinations": combos}
    return {
        "size": VerificationReport(
            "ball-size-law", base_params, fails["size"] == 0,
            base_counts | {"failures": fails["size"]}, wit["size"], elapsed,
        ),
        "partition": VerificationReport(
            "refined-partition", base_params, fails["partition"] == 0,
            base_counts | {"failures": fails["partition"]}, wit["partition"], elapsed,
        ),
        "refined-size": VerificationReport(
            "refined-size-formulas", base_params, fails["refined-size"] == 0,
            base_counts | {"formula_checks": formula_checks, "failures": fails["refined-size"]},
            wit["refined-size"], elapsed,
        ),
    }


def bound_report(members, n: int, t: int, s: int) -> VerificationReport:
    """Compare a codebook's size against the packing ceiling."""
    import math

    start = time.perf_counter()
    members = tuple(members)
    size = len(members)
    cap = sphere_packing_bound(n, t, s)
    raw = sphere_packing_bound(n, t, s, raw=True)
    counts = {
        "size": size,
        "bound": cap,
        "bound_raw_t": raw,
        "redundancy": round(n - math.log2(size), 4) if size else None,
    }
    return VerificationReport(
        check="bound",
        params={"n": n, "t": t, "s": s},
        verdict=size <= cap,
        counts=counts,
        witness=None if size <= cap else {"size": size, "bound": cap},
        elapsed_s=time.perf_counter() - start,
    )
