"""Framed permutations, their shape, runs and cutpoints, and canonical forms.

A permutation of 1..n is stored with two sentinels: ``n+1`` in front and
``n+2`` at the back.  Every argument that names an element is an element
*value*, never a position.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

from .errors import PermutationError, PreconditionError, ReversalError
from .fastseq import BOUND, DELL, PINNACLE, RUN, SequenceBackend, make_backend


class Role(IntEnum):
    RUN = RUN
    DELL = DELL
    PINNACLE = PINNACLE
    BOUND = BOUND


class Permutation:
    """A permutation of 1..n framed by the sentinels n+1 and n+2.

    Mutable only through :meth:`reverse`; use :meth:`copy` for snapshots.
    """

    __slots__ = ("n", "_b")

    def __init__(self, backend: SequenceBackend):
        self.n = backend.n
        self._b = backend

    @classmethod
    def from_interior(cls, values: Sequence[int], backend="auto") -> "Permutation":
        values = list(values)
        _validate(values, len(values))
        n = len(values)
        return cls(make_backend([n + 1, *values, n + 2], backend))

    @classmethod
    def from_sequence(cls, seq: Sequence[int], backend="auto") -> "Permutation":
        """Build from the framed form; the sentinels are checked, then stripped."""
        seq = list(seq)
        if len(seq) < 2:
            raise PermutationError("a framed permutation has at least the two sentinels", 0)
        n = len(seq) - 2
        if seq[0] != n + 1:
            raise PermutationError(f"front sentinel must be {n + 1}, got {seq[0]}", 0)
        if seq[-1] != n + 2:
            raise PermutationError(f"back sentinel must be {n + 2}, got {seq[-1]}", n + 1)
        return cls.from_interior(seq[1:-1], backend)

    # -- views ---------------------------------------------------------
    @property
    def backend(self) -> SequenceBackend:
        return self._b

    @property
    def seq(self) -> tuple[int, ...]:
        return tuple(self._b.to_list())

    @property
    def interior(self) -> tuple[int, ...]:
        return tuple(self._b.to_list()[1:-1])

    def copy(self, backend=None) -> "Permutation":
        if backend is None:
            return Permutation(self._b.copy())
        return Permutation(make_backend(self._b.to_list(), backend))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.n == other.n and self._b.to_list() == other._b.to_list()

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return f"Permutation({' '.join(map(str, self.interior))})"

    # -- element queries -----------------------------------------------
    def _check_element(self, x):
        if not 1 <= x <= self.n + 2:
            raise PreconditionError(f"{x} is not an element of this permutation (1..{self.n + 2})")

    def position(self, x: int) -> int:
        self._check_element(x)
        return self._b.locate(x)

    def at(self, i: int) -> int:
        if not 0 <= i <= self.n + 1:
            raise IndexError(f"position {i} outside 0..{self.n + 1}")
        return self._b.at(i)

    def prec(self, x: int) -> int:
        """Left neighbor of ``x``; undefined for the front sentinel."""
        if x == self.n + 1:
            raise PreconditionError("the front sentinel has no predecessor")
        self._check_element(x)
        return self._b.neighbor(x, -1)

    def next(self, x: int) -> int:
        """Right neighbor of ``x``; undefined for the back sentinel."""
        if x == self.n + 2:
            raise PreconditionError("the back sentinel has no successor")
        self._check_element(x)
        return self._b.neighbor(x, 1)

    def role(self, x: int) -> Role:
        self._check_element(x)
        return Role(self._b.kind(x))

    # -- shape indexing ------------------------------------------------
    @property
    def num_pinnacles(self) -> int:
        return (self._b.shape_size() - 3) // 2

    def pinnacle(self, i: int) -> int:
        """``y_i``; ``y_0`` and ``y_{p+1}`` are the sentinels."""
        return self._b.shape_at(2 * i)

    def dell(self, i: int) -> int:
        """``v_i`` for 1 <= i <= p+1."""
        return self._b.shape_at(2 * i - 1)

    def index(self, x: int) -> int:
        """Index ``i`` of a dell ``v_i``, pinnacle ``y_i`` or bound."""
        k = self._b.kind(x)
        if k == RUN:
            raise PreconditionError(f"{x} is neither a dell, a pinnacle nor a bound")
        r = self._b.shape_rank(x)
        return (r + 1) // 2 if k == DELL else r // 2

    def run_of(self, x: int) -> tuple[str, int]:
        """``("A", i)`` when ``x`` is in A(v_i, y_i), ``("D", i)`` when in D(y_i, v_{i+1})."""
        k = self._b.kind(x)
        if k != RUN:
            raise PreconditionError(f"{x} is a {Role(k).name.lower()}, not a run member")
        r = self._b.shape_rank(x)
        return ("A", r // 2) if r % 2 == 0 else ("D", (r - 1) // 2)

    # -- mutation ------------------------------------------------------
    def reverse(self, w1: int, w2: int) -> None:
        """Reverse the block from ``w1`` to ``w2`` in place."""
        b = self._b
        n = self.n
        if not (1 <= w1 <= n and 1 <= w2 <= n):
            bad = w1 if not 1 <= w1 <= n else w2
            raise ReversalError(f"reversal endpoint {bad} is a sentinel or not an element (interior is 1..{n})")
        if w1 != w2:
            if b.locate(w1) > b.locate(w2):
                raise ReversalError(f"reversal endpoint {w1} lies right of {w2}")
            b.reverse(w1, w2)

    # -- unchecked cutpoints used on hot paths -------------------------
    def _cut_a(self, z, v, y):
        b = self._b
        return b.last_below(b.locate(v), b.locate(y) - 1, z)

    def _cut_d(self, z, y, v):
        b = self._b
        return b.first_below(b.locate(y) + 1, b.locate(v), z)


def _validate(values, n):
    if len(values) != n:
        raise PermutationError(f"expected {n} values, got {len(values)}", min(len(values), n))
    seen = [False] * (n + 1)
    for i, x in enumerate(values):
        if not isinstance(x, int) or isinstance(x, bool):
            raise PermutationError(f"entry {i} is not an integer: {x!r}", i)
        if not 1 <= x <= n:
            raise PermutationError(f"entry {i} is out of range 1..{n}: {x}", i)
        if seen[x]:
            raise PermutationError(f"entry {i} duplicates value {x}", i)
        seen[x] = True


def from_interior(values: Sequence[int], n: int | None = None, backend="auto") -> Permutation:
    """Attach sentinels to ``values``, which must be a permutation of 1..n."""
    values = list(values)
    if n is not None and len(values) != n:
        raise PermutationError(f"expected {n} values, got {len(values)}", min(len(values), n))
    return Permutation.from_interior(values, backend)


@dataclass(frozen=True)
class PinnacleSet:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"pinnacle set values must be strictly increasing: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, values: Iterable[int]) -> "PinnacleSet":
        return cls(tuple(sorted(set(values))))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, x):
        return x in self.values

    def __str__(self):
        return "{" + ",".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class Shape:
    pinnacles: tuple[int, ...]
    dells: tuple[int, ...]
    front: int
    back: int

    @property
    def sequence(self) -> tuple[int, ...]:
        """``(y_0, v_1, y_1, ..., v_{p+1}, y_{p+1})``."""
        out = [self.front]
        for v, y in zip(self.dells, self.pinnacles):
            out += [v, y]
        out += [self.dells[-1], self.back]
        return tuple(out)


@dataclass(frozen=True)
class Run:
    kind: str  # "ascending" or "descending"
    left: int
    right: int
    members: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{'A' if self.kind == 'ascending' else 'D'}({self.left},{self.right})"


def pinnacle_set(p: Permutation) -> PinnacleSet:
    """Interior elements larger than both neighbors, read straight off the sequence."""
    s = p.seq
    return PinnacleSet.of(s[i] for i in range(1, len(s) - 1) if s[i - 1] < s[i] > s[i + 1])


def _shape_positions(s):
    return [0] + [i for i in range(1, len(s) - 1)
                  if s[i - 1] < s[i] > s[i + 1] or s[i - 1] > s[i] < s[i + 1]] + [len(s) - 1]


def shape(p: Permutation) -> Shape:
    s = p.seq
    pos = _shape_positions(s)
    inner = [s[i] for i in pos[1:-1]]
    return Shape(pinnacles=tuple(inner[1::2]), dells=tuple(inner[0::2]), front=s[0], back=s[-1])


def runs(p: Permutation) -> list[Run]:
    """The 2p+2 runs from D(y_0, v_1) to A(v_{p+1}, y_{p+1}).

    The front sentinel is a member of the first run and the back sentinel of
    the last one.
    """
    s = p.seq
    pos = _shape_positions(s)
    out = []
    for k, (i, j) in enumerate(zip(pos, pos[1:])):
        kind = "descending" if k % 2 == 0 else "ascending"
        lo = i if k == 0 else i + 1
        hi = j + 1 if k == len(pos) - 2 else j
        out.append(Run(kind, s[i], s[j], tuple(s[lo:hi])))
    return out


def _run_bounds(p, left, right, ascending):
    b = p.backend
    lo_kind, hi_kind = (DELL, PINNACLE) if ascending else (PINNACLE, DELL)
    name = "A" if ascending else "D"
    kl, kr = b.kind(left), b.kind(right)
    ok_left = kl == lo_kind or (not ascending and left == p.n + 1)
    ok_right = kr == hi_kind or (ascending and right == p.n + 2)
    if not (ok_left and ok_right):
        raise PreconditionError(f"({left},{right}) do not delimit a run {name}(.,.)")
    if b.shape_rank(right) != b.shape_rank(left) + 1:
        raise PreconditionError(f"{left} and {right} are not consecutive in the shape")
    return b.locate(left), b.locate(right)


def cut_a(p: Permutation, z: int, v: int, y: int) -> int:
    """Largest element of A(v, y) plus ``v`` that is below ``z``."""
    if not 1 <= z <= p.n + 2:
        raise PreconditionError(f"{z} is not an element")
    lo, hi = _run_bounds(p, v, y, ascending=True)
    if not v < z < y:
        raise PreconditionError(f"cut_a needs v < z < y, got v={v}, z={z}, y={y}")
    if lo < p.backend.locate(z) < hi:
        raise PreconditionError(f"z={z} lies inside A({v},{y})")
    return p.backend.last_below(lo, hi - 1, z)


def cut_d(p: Permutation, z: int, y: int, v: int) -> int:
    """Largest element of D(y, v) plus ``v`` that is below ``z``."""
    if not 1 <= z <= p.n + 2:
        raise PreconditionError(f"{z} is not an element")
    lo, hi = _run_bounds(p, y, v, ascending=False)
    if not v < z < y:
        raise PreconditionError(f"cut_d needs v < z < y, got v={v}, z={z}, y={y}")
    if lo < p.backend.locate(z) < hi:
        raise PreconditionError(f"z={z} lies inside D({y},{v})")
    return p.backend.first_below(lo + 1, hi, z)


def _canonical_interior(values, n):
    d = len(values)
    rest = iter(sorted(set(range(1, n + 1)) - set(values)))
    out = []
    for k in range(d):
        out += [next(rest), values[k]]
    out += list(rest)
    return out


def canonical(S: Iterable[int], n: int, backend="auto") -> Permutation:
    """``Id_S``: the elements of S on positions 2, 4, ..., the others increasing around them."""
    values = sorted(set(S))
    if n <= 2 * len(values):
        raise PreconditionError(f"n={n} must exceed 2|S|={2 * len(values)}")
    if values and (values[0] < 1 or values[-1] > n):
        raise PreconditionError(f"S={values} is not a subset of 1..{n}")
    return Permutation.from_interior(_canonical_interior(values, n), backend)


def is_admissible(S: Iterable[int], n: int) -> bool:
    """Whether S is the pinnacle set of some permutation of 1..n.

    Decided by building ``Id_S`` and reading its pinnacles back.
    """
    values = sorted(set(S))
    if n <= 2 * len(values) or (values and (values[0] < 1 or values[-1] > n)):
        return False
    return list(pinnacle_set(canonical(values, n, backend="naive"))) == values
