"""Command line front door.

Subcommands: ball, member, decode, search, verify, bounds, simulate.
Words are ASCII bitstrings, given positionally or via --file (one per
line); coordinates in output are 1-based.  Exit codes: 0 success,
1 negative verdict or decode failure (witness on stderr), 2 usage or
domain error, 3 enumeration-guard refusal.

Output is deterministic: identical invocations print identical bytes,
so report lines carry no timings and all sets are sorted.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .c31 import C31Params, c31_decode, c31_member, c31_param_search
from .channel import ball, ball_size_formula, refined_ball, refined_ball_size, sphere_packing_bound
from .codes import (
    Codebook,
    c21_decode,
    c21_member,
    c21rll_member,
    lev2_decode,
    lev2_member,
    pigeonhole_search,
    rll_max_run,
    svt21_decode,
    svt21_member,
    vt_decode,
    vt_member,
)
from .cts import CtsParams, cts_decode, cts_member, cts_param_search, window_capacity
from .errors import DecodingError, DivisibilityError, GuardLimit
from .simulate import family_setup, simulate
from .verify import (
    bound_report,
    verify_ball_laws,
    verify_disjoint,
    verify_equivalence,
    verify_roundtrip,
)
from .words import check_word

__all__ = ["main"]

MEMBER_FAMILIES = ("vt", "lev2", "c21", "c21rll", "svt21", "cts", "c31")
DECODE_FAMILIES = ("vt", "lev2", "c21", "svt21", "cts", "c31")
SEARCH_FAMILIES = ("vt", "lev2", "c21", "c21rll", "svt21", "cts", "c31")
SIM_FAMILIES = ("c21", "cts", "c31")
VERIFY_BOOK_FAMILIES = ("c21", "cts", "c31")


def _parse_params(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"--params must be comma-separated integers, got {text!r}")


def _parse_window(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--window must be lo,hi, got {text!r}")
    return int(parts[0]), int(parts[1])


def _parse_n_range(text: str) -> list[int]:
    """'12' or '8..16', inclusive."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _gather_words(args) -> list[str]:
    words = list(args.words)
    if getattr(args, "file", None):
        with open(args.file) as fh:
            words.extend(line.strip() for line in fh if line.strip())
    if not words:
        raise ValueError("no input words (give them positionally or via --file)")
    for w in words:
        check_word(w)
    return words


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ValueError(f"--{name} is required here")


def _take_params(args, count: int, names: str) -> list[int]:
    vals = _parse_params(args.params)
    if len(vals) != count:
        raise ValueError(f"--params needs {count} values ({names}), got {len(vals)}")
    return vals


def _cts_params(args) -> CtsParams:
    _need(args, "n", "t", "s", "params")
    vals = _parse_params(args.params)
    k = args.t - args.s
    want = 2 + 2 * max(k - 1, 0)
    if len(vals) != want:
        raise ValueError(
            f"cts at t={args.t} s={args.s} needs {want} params "
            f"(a,b then c,d per extra row), got {len(vals)}"
        )
    rows = tuple((vals[i], vals[i + 1]) for i in range(2, len(vals), 2))
    return CtsParams.derive(args.n, args.t, args.s, vals[0], vals[1], rows)


def _emit(obj, as_json: bool, lines: list[str]):
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------- ball


def cmd_ball(args) -> int:
    words = _gather_words(args)
    for x in words:
        if args.refined is not None:
            k, l = args.refined
            b = refined_ball(x, k, l)
            try:
                formula = refined_ball_size(x, k, l)
            except DivisibilityError:
                formula = None
            payload = {
                "center": x,
                "k": k,
                "l": l,
                "size": b.size,
                "formula": formula,
                "members": list(b.members),
            }
            head = (
                f"refined ball k={k} l={l}: size {b.size}, "
                + ("formula n/a" if formula is None else f"formula {formula}, "
                   + ("match" if formula == b.size else "MISMATCH"))
            )
        else:
            _need(args, "t", "s")
            b = ball(x, args.t, args.s)
            formula = ball_size_formula(len(x), args.t, args.s)
            payload = {
                "center": x,
                "t": args.t,
                "s": args.s,
                "size": b.size,
                "formula": formula,
                "members": list(b.members),
            }
            head = (
                f"ball t={args.t} s={args.s}: size {b.size}, formula {formula}, "
                + ("match" if formula == b.size else "MISMATCH")
            )
        _emit(payload, args.json, [f"center {x} n={len(x)}", head, *b.members])
    return 0


# -------------------------------------------------------------- member


def _membership(args, x: str) -> bool:
    fam = args.family
    n = len(x)
    if args.n is not None and args.n != n:
        raise ValueError(f"word length {n} does not match --n {args.n}")
    if fam == "vt":
        (a,) = _take_params(args, 1, "a")
        return vt_member(x, a, n)
    if fam == "lev2":
        (a,) = _take_params(args, 1, "a")
        return lev2_member(x, a, n)
    if fam == "c21":
        a, b = _take_params(args, 2, "a,b")
        return c21_member(x, a, b, n)
    if fam == "c21rll":
        a, b = _take_params(args, 2, "a,b")
        return c21rll_member(x, a, b, n, args.f)
    if fam == "svt21":
        _need(args, "P")
        c, d = _take_params(args, 2, "c,d")
        return svt21_member(x, c, d, args.P)
    if fam == "cts":
        return cts_member(x, _cts_params(args))
    if fam == "c31":
        a, b, c, d = _take_params(args, 4, "a,b,c,d")
        return c31_member(x, C31Params(n, a, b, c, d))
    raise ValueError(f"unknown family {fam!r}")


def cmd_member(args) -> int:
    words = _gather_words(args)
    all_in = True
    for x in words:
        ok = _membership(args, x)
        all_in &= ok
        _emit(
            {"word": x, "family": args.family, "member": ok},
            args.json,
            [f"{x}: {'member' if ok else 'not a member'}"],
        )
    return 0 if all_in else 1


# -------------------------------------------------------------- decode


def _decode_one(args, y: str) -> tuple[dict, list[str]]:
    fam = args.family
    if fam in ("vt", "lev2"):
        _need(args, "n")
        (a,) = _take_params(args, 1, "a")
        word = vt_decode(y, a, args.n) if fam == "vt" else lev2_decode(y, a, args.n)
        return {"decoded": word}, [f"decoded {word}"]
    if fam == "c21":
        _need(args, "n")
        a, b = _take_params(args, 2, "a,b")
        out = c21_decode(y, a, b, args.n)
        payload = {
            "decoded": out.word,
            "classification": out.classification,
            "window": list(out.window),
        }
        return payload, [
            f"decoded {out.word}",
            f"classification {out.classification}",
            f"window [{out.window[0]}, {out.window[1]}]",
        ]
    if fam == "svt21":
        _need(args, "n", "P", "window")
        c, d = _take_params(args, 2, "c,d")
        word = svt21_decode(y, c, d, args.P, args.window, args.n)
        return {"decoded": word}, [f"decoded {word}"]
    if fam == "cts":
        params = _cts_params(args)
        word, trace = cts_decode(y, params, trace=True)
        payload = {
            "decoded": word,
            "row1": {
                "decoded": trace.row1.word,
                "classification": trace.row1.classification,
                "window": list(trace.row1.window),
            },
            "column_window": list(trace.column_window) if trace.column_window else None,
            "rows": list(trace.rows),
        }
        lines = [f"decoded {word}"]
        if args.verbose:
            lines.append(
                f"row 1: {trace.row1.word}  {trace.row1.classification}  "
                f"window [{trace.row1.window[0]}, {trace.row1.window[1]}]"
            )
            if trace.column_window:
                lines.append(
                    f"column window [{trace.column_window[0]}, {trace.column_window[1]}]"
                )
            for i, row in enumerate(trace.rows[1:], start=2):
                lines.append(f"row {i}: {row}")
        return payload, lines
    if fam == "c31":
        _need(args, "n")
        a, b, c, d = _take_params(args, 4, "a,b,c,d")
        word, trace = c31_decode(y, C31Params(args.n, a, b, c, d), trace=True)
        payload = {"decoded": word, "classification": trace.classification}
        lines = [f"decoded {word}", f"classification {trace.classification}"]
        if args.verbose:
            payload["trace"] = {
                "d_odd": trace.d_odd,
                "d_even": trace.d_even,
                "d_run": trace.d_run,
                "candidates": trace.candidates,
                "survivors": trace.survivors,
                "run_filter_decisive": trace.run_filter_decisive,
            }
            lines.append(
                f"deltas odd={trace.d_odd} even={trace.d_even} run={trace.d_run}"
            )
            lines.append(
                f"candidates {trace.candidates}, survivors {trace.survivors}, "
                f"run filter {'decisive' if trace.run_filter_decisive else 'idle'}"
            )
        return payload, lines
    raise ValueError(f"unknown family {fam!r}")


def cmd_decode(args) -> int:
    words = _gather_words(args)
    for y in words:
        payload, lines = _decode_one(args, y)
        _emit(payload, args.json, lines)
    return 0


# -------------------------------------------------------------- search


def cmd_search(args) -> int:
    fam = args.family
    _need(args, "n")
    if fam == "cts":
        _need(args, "t", "s")
        params, book = cts_param_search(args.n, args.t, args.s)
    elif fam == "c31":
        _, book = c31_param_search(args.n)
    elif fam == "svt21":
        _need(args, "P")
        _, book = pigeonhole_search("svt21", args.n, P=args.P)
    elif fam in ("vt", "lev2", "c21", "c21rll"):
        _, book = pigeonhole_search(fam, args.n, f=args.f)
    else:
        raise ValueError(f"unknown family {fam!r}")
    print(json.dumps(book.to_dict(include_members=args.members), sort_keys=True))
    return 0


# -------------------------------------------------------------- verify


def _print_report(rep) -> bool:
    d = rep.to_dict()
    d.pop("elapsed_s", None)  # keeps identical runs byte-identical
    print(json.dumps(d, sort_keys=True))
    if not rep.verdict and rep.witness is not None:
        print(f"witness: {json.dumps(rep.witness, sort_keys=True)}", file=sys.stderr)
    return rep.verdict


def _verify_book(args):
    fam = args.family
    _need(args, "n")
    if fam == "cts":
        _need(args, "t", "s")
    t, s, _, book, decode = family_setup(fam, args.n, args.t, args.s)
    return t, s, book, decode


def cmd_verify(args) -> int:
    if args.check == "ball-laws":
        ns = list(range(2, args.n_max + 1))
        reports = verify_ball_laws(ns, args.t_max, args.s_max)
        ok = True
        for key in ("size", "partition", "refined-size"):
            ok &= _print_report(reports[key])
        return 0 if ok else 1
    if args.family is None:
        raise ValueError(f"verify {args.check} needs a family")
    t, s, book, decode = _verify_book(args)
    if args.check == "disjoint":
        rep = verify_disjoint(book.members, t, s)
    elif args.check == "roundtrip":
        rep = verify_roundtrip(book.members, t, s, decode)
    elif args.check == "equivalence":
        rep = verify_equivalence(book.members, t, s)
    elif args.check == "bound":
        rep = bound_report(book.members, args.n, t, s)
    else:
        raise ValueError(f"unknown check {args.check!r}")
    return 0 if _print_report(rep) else 1


# -------------------------------------------------------------- bounds


def _construction_buckets(n: int, t: int, s: int) -> int | None:
    """Syndrome-bucket count of the best construction at (n, t, s)."""
    if (t, s) == (3, 1):
        return 320 * n
    if (t, s) == (2, 1):
        return 4 * (2 * n - 1)
    if s >= 1 and t >= 2 * s:
        k = t - s
        if n % k:
            return None
        m = n // k
        if m < 2:
            return None
        P = window_capacity(m, s)
        if k == 1:
            return 4 * (2 * m - 1)
        return 4 * (2 * m - 1) * (4 * (2 * P - 1)) ** (k - 1)
    return None


def cmd_bounds(args) -> int:
    _need(args, "t", "s", "n")
    ns = _parse_n_range(args.n)
    rows = []
    for n in ns:
        if n < max(args.t, args.s):
            continue
        cap = sphere_packing_bound(n, args.t, args.s)
        buckets = _construction_buckets(n, args.t, args.s)
        guarantee = None if buckets is None else -(-(1 << n) // buckets)
        rows.append(
            {
                "n": n,
                "bound": cap,
                "log2_bound": round(math.log2(cap), 4) if cap else None,
                "guaranteed_size": guarantee,
                "max_redundancy": None if buckets is None else round(math.log2(buckets), 4),
            }
        )
    if args.json:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
        return 0
    print(f"bounds t={args.t} s={args.s}")
    print(f"{'n':>4}  {'bound':>14}  {'log2':>9}  {'guarantee':>10}  {'max_red':>8}")
    for r in rows:
        guar = "-" if r["guaranteed_size"] is None else str(r["guaranteed_size"])
        red = "-" if r["max_redundancy"] is None else f"{r['max_redundancy']:.4f}"
        print(
            f"{r['n']:>4}  {r['bound']:>14}  {r['log2_bound']:>9.4f}  "
            f"{guar:>10}  {red:>8}"
        )
    return 0


# ------------------------------------------------------------ simulate


def cmd_simulate(args) -> int:
    _need(args, "n")
    if args.family == "cts":
        _need(args, "t", "s")
    res = simulate(
        args.family, args.n, args.trials, args.seed, t=args.t, s=args.s
    )
    if args.json:
        print(json.dumps(res.to_dict(), sort_keys=True))
    else:
        print(f"simulate {res.family} n={res.n} t={res.t} s={res.s} seed={res.seed}")
        print(
            f"codebook size {res.codebook_size} params "
            + json.dumps(res.params, sort_keys=True)
        )
        print(f"success {res.successes}/{res.trials}")
    if res.failures:
        for w in res.witnesses:
            print(f"witness: {json.dumps(w, sort_keys=True)}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- main


def _add_word_args(p):
    p.add_argument("words", nargs="*", help="ASCII bitstrings")
    p.add_argument("--file", help="read words from a file, one per line")


def _add_common(p, *, t=False, s=False, n=False, params=False, P=False,
                window=False, f=False, json_flag=True, verbose=False):
    if t:
        p.add_argument("--t", type=int, default=None)
    if s:
        p.add_argument("--s", type=int, default=None)
    if n:
        p.add_argument("--n", type=int, default=None)
    if params:
        p.add_argument("--params", default=None, help="comma-separated integers")
    if P:
        p.add_argument("--P", type=int, default=None)
    if window:
        p.add_argument("--window", type=_parse_window, default=None, help="lo,hi")
    if f:
        p.add_argument("--f", type=int, default=None, help="run cap override")
    if json_flag:
        p.add_argument("--json", action="store_true")
    if verbose:
        p.add_argument("--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="burstcodes",
        description="burst-error codes: balls, membership, decoding, search, verification",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="enumerate a burst ball around a word")
    _add_word_args(p)
    _add_common(p, t=True, s=True)
    p.add_argument("--refined", nargs=2, type=int, metavar=("K", "L"), default=None)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("member", help="test codebook membership")
    p.add_argument("family", choices=MEMBER_FAMILIES)
    _add_word_args(p)
    _add_common(p, t=True, s=True, n=True, params=True, P=True, f=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("family", choices=DECODE_FAMILIES)
    _add_word_args(p)
    _add_common(p, t=True, s=True, n=True, params=True, P=True, window=True, verbose=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("search", help="find the best parameters by pigeonhole")
    p.add_argument("family", choices=SEARCH_FAMILIES)
    _add_common(p, t=True, s=True, n=True, P=True, f=True, json_flag=False)
    p.add_argument("--members", action="store_true", help="include the codeword list")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="exhaustive checks, JSON report per line")
    p.add_argument("check", choices=("ball-laws", "disjoint", "roundtrip", "equivalence", "bound"))
    p.add_argument("family", nargs="?", choices=VERIFY_BOOK_FAMILIES, default=None)
    _add_common(p, t=True, s=True, n=True, json_flag=False)
    p.add_argument("--n-max", type=int, default=8, dest="n_max")
    p.add_argument("--t-max", type=int, default=4, dest="t_max")
    p.add_argument("--s-max", type=int, default=4, dest="s_max")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="packing bounds and construction guarantees")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", required=True, help="single value or inclusive range a..b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("simulate", help="seeded random bursts through a decoder")
    p.add_argument("family", choices=SIM_FAMILIES)
    _add_common(p, t=True, s=True, n=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        # words may trail the flags, which a greedy * positional would
        # otherwise miss; fold the leftovers back in
        args, extra = parser.parse_known_args(argv)
        if extra:
            stray = [e for e in extra if not set(e) <= {"0", "1"}]
            if stray or not hasattr(args, "words"):
                parser.error(f"unrecognized arguments: {' '.join(extra)}")
            args.words = list(args.words) + extra
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GuardLimit as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return 3
    except DecodingError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, DivisibilityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
