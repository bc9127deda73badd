"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (inadmissible pinnacle set,
mismatched pinnacle sets, rejected trace, internal invariant failure), 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from . import textio
from .core import Permutation, canonical, pinnacle_set
from .errors import FormatError, InvariantError, PermutationError, PreconditionError, ReversalError
from .fastseq import BACKENDS
from .reversal import classify
from .sorter import Phase, balanced_sort, balanced_transform, sort_bound, transform_bound, verify_trace

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(path, args) -> Permutation:
    return textio.parse_permutation(_read(path), args.with_sentinels, args.backend)


def _out(p: Permutation, args) -> str:
    return textio.format_permutation(p, args.with_sentinels)


# -- commands -------------------------------------------------------------


def cmd_analyze(args):
    print(textio.describe(_load(args.file, args)), end="")


def cmd_canonical(args):
    S = textio.parse_set(args.S)
    try:
        p = canonical(S, args.n, args.backend)
    except PreconditionError as exc:
        raise DomainError(str(exc)) from None
    if list(pinnacle_set(p)) != sorted(set(S)):
        raise DomainError(f"S={{{textio.format_set(sorted(set(S)))}}} is not admissible for n={args.n}")
    print(_out(p, args))


def _emit_trace(trace, args, bound):
    if len(trace) > bound:
        raise InvariantError(f"{len(trace)} reversals exceed the bound {bound}")
    if args.trace:
        _write(args.trace, textio.format_trace(trace))
    if args.json:
        _write(args.json, textio.trace_to_json(trace))
    counts = " ".join(f"{ph}={c}" for ph, c in trace.counts().items() if c)
    print(f"steps={len(trace)} bound={bound} {counts}".rstrip(), file=sys.stderr)


def cmd_sort(args):
    p = _load(args.file, args)
    trace = balanced_sort(p)
    _emit_trace(trace, args, sort_bound(p.n, p.num_pinnacles))
    print(_out(trace.end, args))


def cmd_transform(args):
    p, q = _load(args.file, args), _load(args.target_file, args)
    try:
        trace = balanced_transform(p, q)
    except PreconditionError as exc:
        raise DomainError(str(exc)) from None
    _emit_trace(trace, args, transform_bound(p.n, p.num_pinnacles))
    print(_out(trace.end, args))


def cmd_classify(args):
    p = _load(args.file, args)
    t = classify(p, (args.w1, args.w2), literal=args.literal)
    print("NOT-BALANCED" if t is None else t)


def cmd_verify(args):
    p = _load(args.file, args)
    text = _read(args.trace_file)
    tf = textio.trace_from_json(text) if text.lstrip().startswith("{") else textio.parse_trace(text)
    if tf.n is not None and tf.n != p.n:
        raise DomainError(f"trace is for n={tf.n}, permutation has n={p.n}")
    if tf.S is not None and sorted(tf.S) != list(pinnacle_set(p)):
        raise DomainError(f"trace header S={textio.format_set(tf.S)} differs from the start's pinnacle set")
    target = _load(args.target, args) if args.target else None
    report = verify_trace(p, tf.steps, target)
    for k, (st, tag) in enumerate(zip(tf.steps, report.tags), 1):
        r = st.reversal
        note = "" if r.tag is None or r.tag == tag else f" (file says {r.tag})"
        print(f"{k} R {r.w1} {r.w2} {tag}{note}")
    print(report.summary())
    if not report.accepted:
        return EXIT_DOMAIN


def cmd_bench(args):
    rng = random.Random(args.seed)
    perms = []
    for _ in range(args.reps):
        perm = list(range(1, args.n + 1))
        rng.shuffle(perm)
        perms.append(perm)
    names = args.backend.split(",") if args.backend != "auto" else sorted(BACKENDS)
    for name in names:
        if name not in BACKENDS:
            raise FormatError(f"unknown backend {name!r}")
    print(f"{'backend':<8} {'n':>8} {'reps':>5} {'mean_s':>9} {'min_s':>9} {'steps':>9} {'touches/rev':>12}")
    for name in names:
        times, steps, touches = [], 0, 0
        for perm in perms:
            p = Permutation.from_interior(perm, name)
            t0 = time.perf_counter()
            trace = balanced_sort(p)
            times.append(time.perf_counter() - t0)
            steps += len(trace)
            touches += trace.end.backend.counters().get("node_touches", 0)
        per = f"{touches / steps:.1f}" if touches and steps else "-"
        print(f"{name:<8} {args.n:>8} {args.reps:>5} {sum(times) / len(times):>9.4f} {min(times):>9.4f} "
              f"{steps // len(perms):>9} {per:>12}")


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pinnsort", description="Sort permutations by balanced reversals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", default="auto", help="naive, fast or auto (default)")
    common.add_argument("--with-sentinels", action="store_true",
                        help="permutation files include the n+1 / n+2 sentinels")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("analyze", parents=[common], help="print n, pinnacle set, shape and runs")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("canonical", parents=[common], help="print the canonical permutation Id_S")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-S", default="", help="comma-separated pinnacle set, e.g. 7,10")
    s.set_defaults(func=cmd_canonical)

    for name, helptext in (("sort", "sort to Id_S"), ("transform", "transform FILE into TARGET_FILE")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        if name == "transform":
            s.add_argument("target_file")
        s.add_argument("--trace", metavar="OUT", help="write the trace file here ('-' for stdout)")
        s.add_argument("--json", metavar="OUT", help="write the trace as JSON here")
        s.set_defaults(func=cmd_sort if name == "sort" else cmd_transform)

    s = sub.add_parser("classify", parents=[common], help="type of the reversal between w1 and w2")
    s.add_argument("file")
    s.add_argument("w1", type=int)
    s.add_argument("w2", type=int)
    s.add_argument("--literal", action="store_true", help="use the older rows without the A2/A2s/C1/C1s/AA/DD fixes")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[common], help="replay a trace and check every step")
    s.add_argument("file")
    s.add_argument("trace_file")
    s.add_argument("--target", metavar="FILE2", help="expected end permutation")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", help="time sorts of random permutations per backend")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--reps", type=int, default=3)
    s.add_argument("--backend", default="naive,fast", help="comma-separated backends")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "backend", None) not in (None, "auto") and args.command != "bench":
        if args.backend not in BACKENDS:
            print(f"pinnsort: unknown backend {args.backend!r}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args) or EXIT_OK
    except (FormatError, PermutationError) as exc:
        print(f"pinnsort: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ReversalError, PreconditionError, InvariantError) as exc:
        print(f"pinnsort: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
