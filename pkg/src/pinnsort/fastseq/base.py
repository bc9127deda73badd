"""Backend interface shared by the naive and the tree-based sequence stores.

A backend owns the framed sequence ``(n+1, x_1, ..., x_n, n+2)`` and answers
position, neighbor, shape and cutpoint queries on it.  Elements are addressed
by value; positions are 0-based with the front sentinel at 0.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

# Element roles, shared with the numba kernels (plain ints on purpose).
RUN = 0
DELL = 1
PINNACLE = 2
BOUND = 3


def role_of(value: int, left: int, right: int) -> int:
    """Role of an interior element given the values around it."""
    if value < left and value < right:
        return DELL
    if value > left and value > right:
        return PINNACLE
    return RUN


class SequenceBackend(ABC):
    """Abstract store for a framed permutation.

    Shape elements are the dells, pinnacles and both sentinels; the *shape
    rank* of an element is the number of shape elements strictly to its left.
    """

    name = "abstract"

    def __init__(self, n: int):
        self.n = n

    @property
    def size(self) -> int:
        return self.n + 2

    @abstractmethod
    def locate(self, x: int) -> int:
        """Current position of element ``x``."""

    @abstractmethod
    def at(self, i: int) -> int:
        """Element at position ``i``."""

    def neighbor(self, x: int, side: int) -> int:
        i = self.locate(x) + side
        if i < 0 or i > self.n + 1:
            raise IndexError(f"element {x} has no neighbor on side {side:+d}")
        return self.at(i)

    @abstractmethod
    def kind(self, x: int) -> int:
        """Role code (RUN, DELL, PINNACLE, BOUND) of ``x``."""

    @abstractmethod
    def shape_rank(self, x: int) -> int: ...

    @abstractmethod
    def shape_at(self, r: int) -> int:
        """Shape element of rank ``r`` (0 is the front sentinel)."""

    @abstractmethod
    def shape_size(self) -> int: ...

    def context(self, w1: int, w2: int) -> tuple[int, ...]:
        """Facts about a pair of elements needed to classify the reversal between them.

        Returns ``(pos1, pos2, kind1, kind2, s1, kind_s1, s2, kind_s2, prec1, next2)``
        where ``s1`` is the nearest shape element left of ``w1``, ``s2`` the
        nearest one right of ``w2`` (or ``w2``'s own run end when ``w2`` is a
        run member), and ``prec1`` / ``next2`` are the outer neighbors (0 at
        the ends).  ``w1`` must not be the front sentinel.
        """
        pos1, pos2 = self.locate(w1), self.locate(w2)
        k1, k2 = self.kind(w1), self.kind(w2)
        s1 = self.shape_at(self.shape_rank(w1) - 1)
        r2 = self.shape_rank(w2)
        s2 = self.shape_at(r2 + 1 if k2 != RUN else r2)
        pr = self.at(pos1 - 1) if pos1 > 0 else 0
        nx = self.at(pos2 + 1) if pos2 <= self.n else 0
        return pos1, pos2, k1, k2, s1, self.kind(s1), s2, self.kind(s2), pr, nx

    @abstractmethod
    def reverse(self, w1: int, w2: int) -> None:
        """Reverse the block between ``w1`` and ``w2``; no validation."""

    @abstractmethod
    def last_below(self, lo: int, hi: int, z: int) -> int:
        """Rightmost element with value < z among positions lo..hi, or 0."""

    @abstractmethod
    def first_below(self, lo: int, hi: int, z: int) -> int:
        """Leftmost element with value < z among positions lo..hi, or 0."""

    @abstractmethod
    def first_pinnacle_after(self, x: int, threshold: int) -> int:
        """Leftmost pinnacle right of ``x`` whose value exceeds ``threshold``, or 0."""

    @abstractmethod
    def to_list(self) -> list[int]: ...

    @abstractmethod
    def copy(self) -> "SequenceBackend": ...

    @abstractmethod
    def counters(self) -> dict[str, int]: ...

    @abstractmethod
    def reset_counters(self) -> None: ...
