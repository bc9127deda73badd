"""Flat-list reference backend.

Reversals cost O(block length); cutpoint queries scan the run.  The sorted
list of shape positions keeps shape queries cheap enough for the small and
medium sizes this backend is meant for.
"""

from __future__ import annotations

from bisect import bisect_left, insort

from .base import BOUND, PINNACLE, RUN, SequenceBackend, role_of


class NaiveBackend(SequenceBackend):
    name = "naive"

    def __init__(self, seq):
        seq = list(seq)
        super().__init__(len(seq) - 2)
        self._seq = seq
        self._pos = [0] * (len(seq) + 1)
        for i, x in enumerate(seq):
            self._pos[x] = i
        last = len(seq) - 1
        kind = [RUN] * (len(seq) + 1)
        kind[seq[0]] = kind[seq[last]] = BOUND
        for i in range(1, last):
            kind[seq[i]] = role_of(seq[i], seq[i - 1], seq[i + 1])
        self._kind = kind
        self._shape = [i for i, x in enumerate(seq) if kind[x] != RUN]
        self._moves = 0
        self._reversals = 0

    def locate(self, x):
        return self._pos[x]

    def at(self, i):
        return self._seq[i]

    def neighbor(self, x, side):
        i = self._pos[x] + side
        if i < 0 or i >= len(self._seq):
            raise IndexError(f"element {x} has no neighbor on side {side:+d}")
        return self._seq[i]

    def kind(self, x):
        return self._kind[x]

    def shape_rank(self, x):
        return bisect_left(self._shape, self._pos[x])

    def shape_at(self, r):
        return self._seq[self._shape[r]]

    def shape_size(self):
        return len(self._shape)

    def reverse(self, w1, w2):
        a, b = self._pos[w1], self._pos[w2]
        if a >= b:
            return
        seq, pos = self._seq, self._pos
        seq[a:b + 1] = seq[a:b + 1][::-1]
        for k in range(a, b + 1):
            pos[seq[k]] = k
        self._moves += b - a + 1
        self._reversals += 1

        shape = self._shape
        lo = bisect_left(shape, a)
        hi = bisect_left(shape, b + 1)
        shape[lo:hi] = [a + b - s for s in reversed(shape[lo:hi])]
        for i in (a - 1, a, b, b + 1):
            self._refresh(i)

    def _refresh(self, i):
        seq = self._seq
        if i <= 0 or i >= len(seq) - 1:
            return
        x = seq[i]
        new = role_of(x, seq[i - 1], seq[i + 1])
        old = self._kind[x]
        if new == old:
            return
        self._kind[x] = new
        if old == RUN:
            insort(self._shape, i)
        elif new == RUN:
            del self._shape[bisect_left(self._shape, i)]

    def last_below(self, lo, hi, z):
        seq = self._seq
        for i in range(hi, lo - 1, -1):
            if seq[i] < z:
                return seq[i]
        return 0

    def first_below(self, lo, hi, z):
        seq = self._seq
        for i in range(lo, hi + 1):
            if seq[i] < z:
                return seq[i]
        return 0

    def first_pinnacle_after(self, x, threshold):
        seq, kind, shape = self._seq, self._kind, self._shape
        for r in range(bisect_left(shape, self._pos[x] + 1), len(shape)):
            y = seq[shape[r]]
            if kind[y] == PINNACLE and y > threshold:
                return y
        return 0

    def to_list(self):
        return list(self._seq)

    def copy(self):
        other = NaiveBackend.__new__(NaiveBackend)
        other.n = self.n
        other._seq = list(self._seq)
        other._pos = list(self._pos)
        other._kind = list(self._kind)
        other._shape = list(self._shape)
        other._moves = 0
        other._reversals = 0
        return other

    def counters(self):
        return {"reversals": self._reversals, "element_moves": self._moves}

    def reset_counters(self):
        self._moves = 0
        self._reversals = 0

