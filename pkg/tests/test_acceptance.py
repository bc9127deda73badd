"""Acceptance suite.

Each test checks one criterion and prints a single ``criterion k: PASS|FAIL``
line; the lines are repeated in the terminal summary. The checks lean on
oracles written here from the definitions (list replay, a direct pinnacle
scan, the canonical layout, the step bounds) rather than on package code.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import functools
import itertools
import math
import random
import time

from pinnsort import Permutation, balanced_sort, balanced_transform, classify, verify_trace
from pinnsort.fastseq import FastBackend
from pinnsort.sorter import Phase

from conftest import WORKED_END, WORKED_REVERSALS, WORKED_S, WORKED_START
from test_fastseq import random_history

RESULTS: dict[int, str] = {}


def criterion(k, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failure with a reason, not a missing line
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]"
            RESULTS[k] = line
            print(line)
            assert ok, line
        return run
    return wrap


# -- oracles ------------------------------------------------------------------


def framed(values):
    n = len(values)
    return [n + 1, *values, n + 2]


def pinnacles_of(seq):
    return frozenset(seq[i] for i in range(1, len(seq) - 1) if seq[i - 1] < seq[i] > seq[i + 1])


def reverse_between(seq, w1, w2):
    i, j = seq.index(w1), seq.index(w2)
    if not 0 < i <= j < len(seq) - 1:
        raise ValueError(f"bad endpoints {w1} {w2}")
    seq[i:j + 1] = seq[i:j + 1][::-1]


def replay(values, pairs, S):
    """Apply ``pairs`` to a plain list; return (final interior, first step whose result loses S)."""
    seq = framed(list(values))
    for k, (w1, w2) in enumerate(pairs, 1):
        reverse_between(seq, w1, w2)
        if pinnacles_of(seq) != S:
            return seq[1:-1], k
    return seq[1:-1], None


def id_s(S, n):
    rest = sorted(set(range(1, n + 1)) - set(S))
    out = []
    for k, y in enumerate(sorted(S)):
        out += [rest[k], y]
    return tuple(out + rest[len(S):])


def sort_limit(n, p):
    return 2 * n - min(p, 3) if p >= 1 else 2 * n - 1


def transform_limit(n, p):
    return 4 * n - 2 * min(p, 3) if p >= 1 else 4 * n - 2


def step_limits(n, p):
    s1 = 2 * p - 4 if p >= 3 else (1 if p == 2 else 0)
    return {Phase.STEP1: s1, Phase.STEP2: 2 * p + 2, Phase.STEP3: 2 * (n - 2 * p) - 1}


def pairs_of(trace):
    return [(s.reversal.w1, s.reversal.w2) for s in trace.steps]


# -- criteria -------------------------------------------------------------------


@criterion(1, "worked example sorts to Id_S within 35 steps, S kept, < 10 ms")
def test_criterion_1_worked_example():
    S = frozenset(WORKED_S)
    p = Permutation.from_interior(list(WORKED_START))
    balanced_sort(p)  # warm-up
    times = []
    for _ in range(5):
        t0 = time.perf_counter()
        tr = balanced_sort(p)
        times.append(time.perf_counter() - t0)
    ms = sorted(times)[2] * 1e3
    end, bad = replay(WORKED_START, pairs_of(tr), S)
    ok = (
        tr.end.interior == WORKED_END
        and tuple(end) == WORKED_END
        and len(tr) <= 35
        and bad is None
        and ms < 10
    )
    return ok, f"steps={len(tr)} first_bad_step={bad} median_ms={ms:.2f}"


@criterion(2, "15 reference reversals are each balanced and reach Id_S; verify accepts")
def test_criterion_2_reference_rows():
    S = frozenset(WORKED_S)
    end, bad = replay(WORKED_START, WORKED_REVERSALS, S)
    start = Permutation.from_interior(list(WORKED_START))
    target = Permutation.from_interior(list(WORKED_END))
    rep = verify_trace(start, WORKED_REVERSALS, target)
    ok = (
        len(WORKED_REVERSALS) == 15
        and bad is None
        and tuple(end) == WORKED_END == id_s(S, 19)
        and rep.accepted
        and rep.steps_checked == 15
    )
    return ok, f"first_bad_step={bad} verify={rep.summary()}"


@criterion(3, "classify agrees with the pinnacle-set oracle on all of S_4..S_7")
def test_criterion_3_exhaustive_classify():
    t0 = time.perf_counter()
    checked = disagreements = 0
    first = None
    for n in range(4, 8):
        for values in itertools.permutations(range(1, n + 1)):
            seq = framed(list(values))
            S = pinnacles_of(seq)
            p = Permutation.from_interior(list(values), "naive")
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    q = seq[:i] + seq[i:j + 1][::-1] + seq[j + 1:]
                    balanced = pinnacles_of(q) == S
                    got = classify(p, (seq[i], seq[j])) is not None
                    checked += 1
                    if got != balanced:
                        disagreements += 1
                        first = first or (values, seq[i], seq[j])
    secs = time.perf_counter() - t0
    ok = disagreements == 0 and secs < 60
    return ok, f"pairs={checked} disagreements={disagreements} first={first} secs={secs:.1f}"


@functools.cache
def fuzz_corpus():
    """1000 seeded random permutations per size, sorted once and shared by criteria 4 and 5."""
    rng = random.Random(8128)
    out = []
    for n in (8, 16, 32, 64, 128):
        for _ in range(1000):
            values = list(range(1, n + 1))
            rng.shuffle(values)
            out.append((values, balanced_sort(Permutation.from_interior(values))))
    return out


@criterion(4, "1000 random sorts per n in {8..128}: Id_S reached, total bound, S kept")
def test_criterion_4_total_bound():
    violations = []
    worst = 0.0
    for values, tr in fuzz_corpus():
        n = len(values)
        S = pinnacles_of(framed(values))
        end, bad = replay(values, pairs_of(tr), S)
        limit = sort_limit(n, len(S))
        worst = max(worst, len(tr) / limit)
        if tuple(end) != id_s(S, n) or tr.end.interior != tuple(end) or len(tr) > limit or bad:
            violations.append(values)
    ok = not violations
    return ok, f"sorts={len(fuzz_corpus())} violations={len(violations)} worst_len/bound={worst:.3f}"


@criterion(5, "per-phase bounds hold on the same corpus")
def test_criterion_5_phase_bounds():
    violations = {ph: 0 for ph in (Phase.STEP1, Phase.STEP2, Phase.STEP3)}
    for values, tr in fuzz_corpus():
        n = len(values)
        p = len(pinnacles_of(framed(values)))
        counts = tr.counts()
        for ph, limit in step_limits(n, p).items():
            if counts.get(ph, 0) > limit:
                violations[ph] += 1
        if sum(counts.values()) != len(tr):
            violations[Phase.STEP3] += 1
    ok = not any(violations.values())
    return ok, " ".join(f"{ph}={v}" for ph, v in violations.items())


def random_balanced_walk(values, steps, rng):
    seq = framed(list(values))
    S = pinnacles_of(seq)
    n = len(values)
    done = 0
    while done < steps:
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        q = seq[:i] + seq[i:j + 1][::-1] + seq[j + 1:]
        if pinnacles_of(q) == S:
            seq = q
            done += 1
    return seq[1:-1]


@criterion(6, "200 same-pinnacle-set pairs: transform reaches the target within 4n bound")
def test_criterion_6_transform():
    rng = random.Random(4242)
    violations = 0
    worst = 0.0
    for k in range(200):
        n = (8, 16, 32, 64)[k % 4]
        base = list(range(1, n + 1))
        rng.shuffle(base)
        src = random_balanced_walk(base, rng.randint(0, 3 * n), rng)
        dst = random_balanced_walk(base, rng.randint(1, 3 * n), rng)
        S = pinnacles_of(framed(src))
        tr = balanced_transform(Permutation.from_interior(src), Permutation.from_interior(dst))
        end, bad = replay(src, pairs_of(tr), S)
        limit = transform_limit(n, len(S))
        worst = max(worst, len(tr) / limit)
        if end != dst or tr.end.interior != tuple(dst) or len(tr) > limit or bad:
            violations += 1
    return violations == 0, f"pairs=200 violations={violations} worst_len/bound={worst:.3f}"


@criterion(7, "fast and naive backends agree on 10^4-op histories and on sort traces")
def test_criterion_7_backend_equivalence():
    rng = random.Random(77)
    diverged = []
    for n in (100, 1000, 10000):
        try:
            random_history(n, 10_000, seed=n)
        except AssertionError:
            diverged.append(f"history n={n}")
        for _ in range({100: 20, 1000: 3, 10000: 1}[n]):
            values = list(range(1, n + 1))
            rng.shuffle(values)
            a = balanced_sort(Permutation.from_interior(values, "naive"))
            b = balanced_sort(Permutation.from_interior(values, "fast"))
            if list(a) != list(b) or a.end != b.end:
                diverged.append(f"trace n={n}")
    return not diverged, f"divergences={len(diverged)} {diverged}"


MEAN_C = 28
MAX_C = 48


@criterion(8, f"fast backend: touches per reversal <= {MAX_C}*log2 n (mean <= {MEAN_C}), n=1e5 sort < 5 s")
def test_criterion_8_performance():
    rng = random.Random(2024)
    parts, ok = [], True
    for n in (10**3, 10**4, 10**5):
        values = list(range(1, n + 1))
        rng.shuffle(values)
        b = FastBackend(framed(values), seed=n)
        per = []
        for _ in range(5000):
            i, j = sorted(rng.sample(range(1, n + 1), 2))
            w1, w2 = b.at(i), b.at(j)
            b.reset_counters()
            b.reverse(w1, w2)
            per.append(b.touches)
        lg = math.log2(n)
        mean_c, max_c = sum(per) / len(per) / lg, max(per) / lg
        ok &= mean_c <= MEAN_C and max_c <= MAX_C
        parts.append(f"n={n} mean/log2n={mean_c:.1f} max/log2n={max_c:.1f}")
    balanced_sort(Permutation.from_interior([3, 1, 2, 5, 4], "fast"))  # compile outside the timing
    values = list(range(1, 10**5 + 1))
    rng.shuffle(values)
    p = Permutation.from_interior(values, "fast")
    t0 = time.perf_counter()
    tr = balanced_sort(p)
    secs = time.perf_counter() - t0
    ok &= secs < 5
    parts.append(f"sort n=1e5 steps={len(tr)} secs={secs:.2f}")
    return ok, "; ".join(parts)


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
