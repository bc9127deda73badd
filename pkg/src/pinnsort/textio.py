"""Text formats: permutations, shape dumps, reversal lines and trace files.

A permutation file holds whitespace-separated integers, interior form unless
sentinels are requested.  A trace file starts with ``n=<n> S=<a,b,...>`` and
has one ``R w1 w2 [type [phase]]`` line per step.  Blank lines and ``#``
comments are ignored everywhere.
"""

from __future__ import annotations

import json
from typing import NamedTuple

from .core import Permutation, pinnacle_set, runs, shape
from .errors import FormatError
from .reversal import BalancedType, Reversal
from .sorter import Phase, Trace

_TYPES = {t.value: t for t in BalancedType}
_PHASES = {ph.value: ph for ph in Phase}


def _tokens(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        out += line.split("#", 1)[0].split()
    return out


def parse_ints(text: str) -> list[int]:
    vals = []
    for k, tok in enumerate(_tokens(text)):
        try:
            vals.append(int(tok))
        except ValueError:
            raise FormatError(f"token {k} is not an integer: {tok!r}") from None
    return vals


def parse_permutation(text: str, with_sentinels: bool = False, backend="auto") -> Permutation:
    vals = parse_ints(text)
    if with_sentinels:
        return Permutation.from_sequence(vals, backend)
    return Permutation.from_interior(vals, backend)


def format_permutation(p: Permutation, with_sentinels: bool = False) -> str:
    return " ".join(map(str, p.seq if with_sentinels else p.interior))


def parse_set(text: str) -> list[int]:
    """``"3,5,8"`` (spaces allowed, empty string for the empty set)."""
    text = text.strip().strip("{}")
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise FormatError(f"not a comma-separated list of integers: {text!r}") from None


def format_set(values) -> str:
    return ",".join(map(str, values))


def describe(p: Permutation) -> str:
    """Key-value dump of size, pinnacle set, shape and runs (one run per line)."""
    sh = shape(p)
    lines = [
        f"n={p.n}",
        f"S={format_set(pinnacle_set(p))}",
        f"p={len(sh.pinnacles)}",
        f"pinnacles={format_set(sh.pinnacles)}",
        f"dells={format_set(sh.dells)}",
        f"shape={format_set(sh.sequence)}",
    ]
    for r in runs(p):
        lines.append(f"run={r.label} kind={r.kind} members={format_set(r.members)}")
    return "\n".join(lines) + "\n"


# -- reversals and traces -------------------------------------------------


class TraceLine(NamedTuple):
    """One parsed step; ``reversal.tag`` and ``phase`` are None when absent."""

    reversal: Reversal
    phase: Phase | None = None


def parse_reversal(line: str) -> TraceLine:
    parts = line.split()
    if len(parts) < 3 or parts[0] != "R" or len(parts) > 5:
        raise FormatError(f"expected 'R w1 w2 [type [phase]]', got {line!r}")
    try:
        w1, w2 = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"reversal endpoints must be integers: {line!r}") from None
    tag = phase = None
    if len(parts) >= 4:
        if parts[3] not in _TYPES:
            raise FormatError(f"unknown reversal type {parts[3]!r}")
        tag = _TYPES[parts[3]]
    if len(parts) == 5:
        if parts[4] not in _PHASES:
            raise FormatError(f"unknown phase {parts[4]!r}")
        phase = _PHASES[parts[4]]
    return TraceLine(Reversal(w1, w2, tag), phase)


class TraceFile(NamedTuple):
    n: int | None
    S: list[int] | None
    steps: list[TraceLine]


def parse_trace(text: str) -> TraceFile:
    """Read a trace file; the header line is optional."""
    n = S = None
    steps = []
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if n is not None or steps:
                raise FormatError(f"line {k}: header must come first and only once")
            fields = dict(f.split("=", 1) for f in line.split() if "=" in f)
            try:
                n = int(fields["n"])
            except (KeyError, ValueError):
                raise FormatError(f"line {k}: bad header {line!r}") from None
            S = parse_set(fields.get("S", ""))
            continue
        try:
            steps.append(parse_reversal(line))
        except FormatError as exc:
            raise FormatError(f"line {k}: {exc}") from None
    return TraceFile(n, S, steps)


def format_trace(trace: Trace) -> str:
    lines = [f"n={trace.start.n} S={format_set(pinnacle_set(trace.start))}"]
    lines += [str(s) for s in trace.steps]
    return "\n".join(lines) + "\n"


def trace_to_dict(trace: Trace) -> dict:
    return {
        "n": trace.start.n,
        "S": list(pinnacle_set(trace.start)),
        "start": list(trace.start.interior),
        "end": list(trace.end.interior),
        "steps": [
            {"w1": s.reversal.w1, "w2": s.reversal.w2, "type": s.type.value, "phase": s.phase.value}
            for s in trace.steps
        ],
    }


def trace_to_json(trace: Trace) -> str:
    return json.dumps(trace_to_dict(trace), indent=1) + "\n"


def trace_from_json(text: str) -> TraceFile:
    try:
        d = json.loads(text)
        steps = [
            TraceLine(Reversal(int(s["w1"]), int(s["w2"]), _TYPES[s["type"]]), _PHASES[s["phase"]])
            for s in d["steps"]
        ]
        return TraceFile(int(d["n"]), [int(x) for x in d["S"]], steps)
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"malformed trace record: {exc}") from None
