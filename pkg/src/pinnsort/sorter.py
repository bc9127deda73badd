"""Sorting a permutation to its canonical form with balanced reversals only.

The pipeline has three phases: put the pinnacles in increasing order, install
the canonical dells, then sweep every remaining element behind the last dell
and back into place.  Every reversal is classified before it is applied; a
reversal that fails the taxonomy aborts the run with :class:`InvariantError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple

from .core import Permutation, canonical, pinnacle_set
from .errors import InvariantError, PreconditionError, ReversalError
from .fastseq import DELL, PINNACLE, RUN
from .reversal import BalancedType, Reversal, classify


class Phase(Enum):
    STEP1 = "Step1"
    STEP2 = "Step2"
    STEP3 = "Step3"
    TRANSFORM_BACK = "TransformBack"

    def __str__(self):
        return self.value


class TraceStep(NamedTuple):
    reversal: Reversal
    type: BalancedType
    phase: Phase

    def __str__(self):
        r = self.reversal
        return f"R {r.w1} {r.w2} {self.type} {self.phase}"


@dataclass
class Trace:
    """Start, the certified steps, and the permutation they lead to."""

    start: Permutation
    steps: list[TraceStep] = field(default_factory=list)
    end: Permutation | None = None

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def reversals(self) -> list[Reversal]:
        return [s.reversal for s in self.steps]

    def counts(self) -> dict[Phase, int]:
        out = {ph: 0 for ph in Phase}
        for s in self.steps:
            out[s.phase] += 1
        return out

    def replay(self, backend=None) -> Permutation:
        """Apply the steps to a fresh copy of ``start`` and return the result."""
        q = self.start.copy(backend)
        for s in self.steps:
            q.reverse(s.reversal.w1, s.reversal.w2)
        return q


# -- bounds -------------------------------------------------------------


def step1_bound(p: int) -> int:
    if p <= 1:
        return 0
    return 1 if p == 2 else 2 * p - 4


def step2_bound(p: int) -> int:
    return 2 * p + 2


def step3_bound(n: int, p: int) -> int:
    return 2 * (n - 2 * p) - 1


def sort_bound(n: int, p: int) -> int:
    return 2 * n - min(p, 3) if p >= 1 else 2 * n - 1


def transform_bound(n: int, p: int) -> int:
    return 4 * n - 2 * min(p, 3) if p >= 1 else 4 * n - 2


# -- the engine -----------------------------------------------------------


class _Sorter:
    """Mutable state shared by the phases: the working permutation and the trace."""

    def __init__(self, p: Permutation, phase: Phase = Phase.STEP1):
        self.p = p
        self.b = p.backend
        self.steps: list[TraceStep] = []
        self.phase = phase

    def emit(self, w1, w2):
        p = self.p
        try:
            t = classify(p, (w1, w2))
        except ReversalError as exc:
            raise InvariantError(f"{self.phase}: invalid reversal R {w1} {w2} on {p!r}: {exc}") from exc
        if t is None:
            raise InvariantError(f"{self.phase}: R {w1} {w2} is not balanced on {p!r}")
        if w1 != w2:
            self.b.reverse(w1, w2)
        self.steps.append(TraceStep(Reversal(w1, w2, t), t, self.phase))

    # queries in element values
    def nxt(self, x):
        return self.b.neighbor(x, 1)

    def prv(self, x):
        return self.b.neighbor(x, -1)

    def dell(self, i):
        return self.b.shape_at(2 * i - 1)

    def pinnacle(self, i):
        return self.b.shape_at(2 * i)

    def index(self, x):
        r = self.b.shape_rank(x)
        return (r + 1) // 2 if self.b.kind(x) == DELL else r // 2

    def npin(self):
        return (self.b.shape_size() - 3) // 2

    def cut_a(self, z, v, y):
        b = self.b
        return b.last_below(b.locate(v), b.locate(y) - 1, z)

    def cut_d(self, z, y, v):
        b = self.b
        return b.first_below(b.locate(y) + 1, b.locate(v), z)

    # -- two-reversal moves ------------------------------------------

    def lemma3(self, vi, vq):
        """Move Prec(vi) into A(vq, yq), or right after vq as the new dell."""
        u = self.prv(vi)
        if u > vq:
            e = self.cut_a(u, vq, self.pinnacle(self.index(vq)))
            self.emit(u, e)
            self.emit(e, vi)
        else:
            self.emit(vi, vq)
            self.emit(u, vi)

    def lemma4(self, vi, vq):
        """Move Next(vi) into D(y_{q-1}, vq), or right before vq as the new dell."""
        u = self.nxt(vi)
        t = self.nxt(u)
        if u > vq:
            e = self.cut_d(u, self.pinnacle(self.index(vq) - 1), vq)
            f = self.prv(e)
        else:
            f = self.prv(vq)
        self.emit(u, f)
        self.emit(f, t)

    # -- phases --------------------------------------------------------

    def step1(self):
        self.phase = Phase.STEP1
        start = len(self.steps)
        np_ = self.npin()
        if np_ <= 1:
            return
        S = sorted(self.pinnacle(i) for i in range(1, np_ + 1))
        b = self.b
        x = S[0]
        if self.index(x) != 1 and x < self.dell(1):
            if b.first_pinnacle_after(x, self.dell(1)) == 0:
                self.emit(self.dell(1), self.dell(np_ + 1))  # Case 1
        last_h = None
        while self.index(x) != 1:
            v1 = self.dell(1)
            if x < v1:
                yh = b.first_pinnacle_after(x, v1)
                if yh == 0:
                    raise InvariantError(f"Case 2 found no pinnacle above {v1} right of {x}")
                h = self.index(yh)
                if last_h is not None and h >= last_h:
                    raise InvariantError(f"Case 2 indices must decrease, got {h} after {last_h}")
                last_h = h
                self.emit(v1, self.dell(h))
            else:
                e = self.cut_a(x, v1, self.pinnacle(1))  # Case 3
                self.emit(self.nxt(e), x)
        if np_ >= 3 and len(self.steps) - start == np_ - 1 and self.pinnacle(np_) != S[-1]:
            raise InvariantError(
                f"{np_ - 1} reversals placed the lowest pinnacle but the rightmost one is not the highest")
        for k in range(1, np_ - 1):
            x = S[k]
            t = self.index(x)
            if t != k + 1:
                e = self.cut_a(x, self.dell(k + 1), self.pinnacle(k + 1))
                self.emit(self.nxt(e), x)
        self._check_bound(start, step1_bound(np_))

    def step2(self):
        self.phase = Phase.STEP2
        start = len(self.steps)
        b = self.b
        np_ = self.npin()
        for k, w in enumerate(_wished_dells(self.p.n, self._pinnacles(), np_ + 1)):
            kind = b.kind(w)
            if kind == DELL:
                j = self.index(w)
                if j == k + 1:
                    continue
                vk, yk = self.dell(k + 1), self.pinnacle(k + 1)
                yj, yj1 = self.pinnacle(j), self.pinnacle(j - 1)
                self.emit(vk, self.cut_a(vk, w, yj))
                if k + 1 != j - 1:
                    self.emit(self.nxt(self.cut_a(yk, w, yj1)), yk)
            elif b.kind(self.nxt(w)) == DELL:
                self.lemma3(self.nxt(w), self.dell(k + 1))
            elif b.kind(self.prv(w)) == DELL:
                self.lemma4(self.prv(w), self.dell(k + 1))
            else:
                raise InvariantError(f"wished dell {w} is neither a dell nor next to one")
        self._check_bound(start, step2_bound(np_))

    def step3(self):
        self.phase = Phase.STEP3
        start = len(self.steps)
        np_ = self.npin()
        vl = self.dell(np_ + 1)
        yp = self.pinnacle(np_)
        # a) pull the small head of the last ascending run into D(y_p, v_{p+1})
        while (u := self.nxt(vl)) < yp:
            e = self.cut_d(u, yp, vl)
            self.emit(e, u)
            self.emit(vl, e)
        # b) empty every A(v_i, y_i)
        for i in range(1, np_ + 1):
            vi, yi = self.dell(i), self.pinnacle(i)
            while self.nxt(vi) != yi:
                self.lemma4(vi, vl)
        # c) join D(y_p, v_{p+1}) onto the last run
        if (u := self.nxt(yp)) != vl:
            self.emit(u, vl)
        # d) empty every D(y_{i-1}, v_i)
        for i in range(1, np_ + 1):
            vi, yi = self.dell(i), self.pinnacle(i - 1)
            while self.prv(vi) != yi:
                self.lemma3(vi, vl)
        self._check_bound(start, step3_bound(self.p.n, np_))

    def _pinnacles(self):
        return [self.pinnacle(i) for i in range(1, self.npin() + 1)]

    def _check_bound(self, start, bound):
        used = len(self.steps) - start
        if used > bound:
            raise InvariantError(f"{self.phase} used {used} reversals, bound is {bound}")


def _wished_dells(n, pinnacles, count):
    """The ``count`` smallest values of 1..n that are not pinnacles."""
    S = set(pinnacles)
    out = []
    x = 1
    while len(out) < count:
        if x not in S:
            out.append(x)
        x += 1
    return out


# -- public phase entry points -----------------------------------------


def _pinnacles_increasing(p: Permutation) -> bool:
    b = p.backend
    ys = [b.shape_at(2 * i) for i in range(1, p.num_pinnacles + 1)]
    return all(a < c for a, c in zip(ys, ys[1:]))


def step1_sort_pinnacles(p: Permutation) -> tuple[Permutation, list[TraceStep]]:
    """Order the pinnacles increasingly from left to right."""
    s = _Sorter(p.copy())
    s.step1()
    return s.p, s.steps


def step2_place_dells(p: Permutation) -> tuple[Permutation, list[TraceStep]]:
    """Make the dells the p+1 smallest non-pinnacle values, increasing."""
    if not _pinnacles_increasing(p):
        raise PreconditionError("the pinnacles are not in increasing order")
    s = _Sorter(p.copy(), Phase.STEP2)
    s.step2()
    return s.p, s.steps


def step3_finalize(p: Permutation) -> tuple[Permutation, list[TraceStep]]:
    """Finish the sort once pinnacles and dells are in their canonical order."""
    if not _pinnacles_increasing(p):
        raise PreconditionError("the pinnacles are not in increasing order")
    np_ = p.num_pinnacles
    dells = [p.dell(i) for i in range(1, np_ + 2)]
    if dells != _wished_dells(p.n, [p.pinnacle(i) for i in range(1, np_ + 1)], np_ + 1):
        raise PreconditionError(f"dells {dells} are not the canonical dells in order")
    s = _Sorter(p.copy(), Phase.STEP3)
    s.step3()
    return s.p, s.steps


def _check_lemma_args(p, vi, vq):
    for v in (vi, vq):
        if not 1 <= v <= p.n or p.backend.kind(v) != DELL:
            raise PreconditionError(f"{v} is not a dell")
    if vi > vq or p.index(vi) > p.index(vq):
        raise PreconditionError(f"need {vi} <= {vq} and {vi} at or left of {vq} among the dells")


def apply_lemma3(p: Permutation, vi: int, vq: int) -> tuple[Permutation, list[TraceStep]]:
    """Displace ``Prec(vi)`` with two balanced reversals.

    It lands in A(vq, yq) right after its cutpoint when it exceeds ``vq``,
    otherwise right after ``vq``, where it becomes the new dell.
    """
    _check_lemma_args(p, vi, vq)
    u = p.prec(vi)
    if u == p.n + 1 or p.backend.kind(u) == PINNACLE:
        raise PreconditionError(f"Prec({vi}) = {u} is a pinnacle or the front sentinel")
    if not u < p.pinnacle(p.index(vq)):
        raise PreconditionError(f"Prec({vi}) = {u} is not below the pinnacle after {vq}")
    s = _Sorter(p.copy(), Phase.STEP2)
    s.lemma3(vi, vq)
    return s.p, s.steps


def apply_lemma4(p: Permutation, vi: int, vq: int) -> tuple[Permutation, list[TraceStep]]:
    """Displace ``Next(vi)`` with two balanced reversals.

    It lands in D(y_{q-1}, vq) right before its cutpoint when it exceeds
    ``vq``, otherwise right before ``vq``, where it becomes the new dell.
    """
    _check_lemma_args(p, vi, vq)
    q = p.index(vq)
    if p.index(vi) == q:
        raise PreconditionError(f"Next({vi}) lies right of {vq}; the move needs {vi} strictly left of {vq}")
    u = p.next(vi)
    if p.backend.kind(u) != RUN:
        raise PreconditionError(f"Next({vi}) = {u} is a pinnacle or the back sentinel")
    if not u < p.pinnacle(q - 1):
        raise PreconditionError(f"Next({vi}) = {u} is not below the pinnacle before {vq}")
    s = _Sorter(p.copy(), Phase.STEP2)
    s.lemma4(vi, vq)
    return s.p, s.steps


# -- end to end -----------------------------------------------------------


def balanced_sort(p: Permutation, backend=None) -> Trace:
    """Sort ``p`` to ``canonical(pinnacle_set(p), n)`` through balanced reversals.

    ``backend`` selects the store used for the work copy (default: same as ``p``).
    """
    s = _Sorter(p.copy(backend))
    np_ = s.npin()
    s.step1()
    s.step2()
    s.step3()
    if len(s.steps) > sort_bound(p.n, np_):
        raise InvariantError(f"sort used {len(s.steps)} reversals, bound is {sort_bound(p.n, np_)}")
    return Trace(p.copy(), s.steps, s.p)


def balanced_transform(p: Permutation, q: Permutation, backend=None) -> Trace:
    """Balanced reversals from ``p`` to ``q``: sort ``p``, then undo the sort of ``q``."""
    if p.n != q.n:
        raise PreconditionError(f"sizes differ: {p.n} vs {q.n}")
    if pinnacle_set(p) != pinnacle_set(q):
        raise PreconditionError(f"pinnacle sets differ: {pinnacle_set(p)} vs {pinnacle_set(q)}")
    forward = balanced_sort(p, backend)
    back = balanced_sort(q, backend)
    s = _Sorter(forward.end, Phase.TRANSFORM_BACK)
    s.steps = list(forward.steps)
    for r in reversed(back.steps):
        s.emit(r.reversal.w2, r.reversal.w1)
    np_ = p.num_pinnacles
    if len(s.steps) > transform_bound(p.n, np_):
        raise InvariantError(f"transform used {len(s.steps)} reversals, bound is {transform_bound(p.n, np_)}")
    return Trace(p.copy(), s.steps, s.p)


# -- verification ---------------------------------------------------------


@dataclass
class VerifyReport:
    """Outcome of replaying a list of reversals.

    ``failed_step`` is 1-based; ``tags`` holds the taxonomy type of each
    accepted step and ``phase_counts`` counts steps per phase label, when the
    steps carry one.
    """

    accepted: bool
    steps_checked: int
    end: Permutation
    failed_step: int | None = None
    reason: str | None = None
    target_match: bool | None = None
    tags: list[BalancedType] = field(default_factory=list)
    phase_counts: dict[str, int] = field(default_factory=dict)

    def summary(self) -> str:
        if self.failed_step is not None:
            return f"REJECT at step {self.failed_step}: {self.reason}"
        if self.target_match is False:
            return f"REJECT: end state differs from target after {self.steps_checked} steps"
        counts = " ".join(f"{k}={v}" for k, v in self.phase_counts.items())
        return f"ACCEPT {self.steps_checked} steps" + (f" ({counts})" if counts else "")


def _pinnacle_flags(b, xs):
    return [b.kind(x) == PINNACLE for x in xs]


def verify_trace(start: Permutation, steps: Iterable, target: Permutation | None = None) -> VerifyReport:
    """Replay ``steps`` from ``start`` and check that each one keeps the pinnacle set.

    Each step is a :class:`Reversal`, a ``(w1, w2)`` pair, or a record
    with ``reversal`` and ``phase`` fields such as :class:`TraceStep`.  Balance is decided directly from the definition: only the two
    endpoints and their outer neighbors change neighborhoods, so the
    pinnacle set survives iff none of those four changes pinnacle status.
    """
    p = start.copy()
    b = p.backend
    tags: list[BalancedType] = []
    counts: dict[str, int] = {}
    k = 0
    for k, st in enumerate(steps, 1):
        phase = getattr(st, "phase", None)
        r = getattr(st, "reversal", st)
        w1, w2 = r[0], r[1]
        try:
            tag = classify(p, (w1, w2))
        except ReversalError as exc:
            return VerifyReport(False, k - 1, p, k, str(exc), tags=tags, phase_counts=counts)
        if w1 != w2:
            around = [b.neighbor(w1, -1), w1, w2, b.neighbor(w2, 1)]
            before = _pinnacle_flags(b, around)
            b.reverse(w1, w2)
            if _pinnacle_flags(b, around) != before:
                return VerifyReport(False, k - 1, p, k, f"R {w1} {w2} changes the pinnacle set",
                                    tags=tags, phase_counts=counts)
        tags.append(tag)
        if phase is not None:
            counts[str(phase)] = counts.get(str(phase), 0) + 1
    match = None if target is None else p == target
    return VerifyReport(match is not False, k, p, target_match=match, tags=tags, phase_counts=counts)


def sort_target(p: Permutation) -> Permutation:
    """``canonical(pinnacle_set(p), n)``, the end state of :func:`balanced_sort`."""
    return canonical(pinnacle_set(p), p.n, backend="naive" if p.n <= 1024 else "fast")
