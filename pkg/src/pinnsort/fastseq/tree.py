"""Logarithmic-time backend on top of the treap kernels."""

from __future__ import annotations

import numpy as np

from . import _treap as K
from .base import SequenceBackend


class FastBackend(SequenceBackend):
    """Implicit treap with lazy reversal; every query and reversal is O(log n) expected.

    ``seed`` fixes the treap priorities, so a given seed gives a reproducible
    tree shape and reproducible touch counts.
    """

    name = "fast"

    def __init__(self, seq, seed: int = 0):
        arr = np.asarray(seq, dtype=np.int64)
        super().__init__(len(arr) - 2)
        pri = np.random.default_rng(seed).permutation(len(arr)).astype(np.int64) + 1
        self._T = K.build(arr, pri)
        self._reversals = 0

    def locate(self, x):
        return K.locate(self._T, x)

    def at(self, i):
        return K.kth(self._T, i)

    def neighbor(self, x, side):
        y = K.neighbor(self._T, x, side)
        if y == 0:
            raise IndexError(f"element {x} has no neighbor on side {side:+d}")
        return int(y)

    def kind(self, x):
        return int(self._T[x, K.KIND])

    def shape_rank(self, x):
        return K.shape_rank(self._T, x)

    def shape_at(self, r):
        return K.shape_at(self._T, r)

    def shape_size(self):
        T = self._T
        return int(T[T[-1, K.ROOT], K.SC])

    def context(self, w1, w2):
        return K.context(self._T, w1, w2)

    def reverse(self, w1, w2):
        K.reverse(self._T, w1, w2)
        self._reversals += 1

    def last_below(self, lo, hi, z):
        return K.last_below(self._T, lo, hi, z)

    def first_below(self, lo, hi, z):
        return K.first_below(self._T, lo, hi, z)

    def first_pinnacle_after(self, x, threshold):
        return K.first_pinnacle_after(self._T, x, threshold)

    def to_list(self):
        return K.to_array(self._T).tolist()

    def copy(self):
        other = FastBackend.__new__(FastBackend)
        other.n = self.n
        other._T = self._T.copy()
        other._T[-1, K.TOUCH] = 0
        other._reversals = 0
        return other

    @property
    def touches(self) -> int:
        """Tree nodes visited so far (pushes, path steps and aggregate pulls)."""
        return int(self._T[-1, K.TOUCH])

    def counters(self):
        return {"reversals": self._reversals, "node_touches": self.touches}

    def reset_counters(self):
        self._T[-1, K.TOUCH] = 0
        self._reversals = 0
