"""Sequence backends: a flat reference store and a treap with lazy reversal."""

from __future__ import annotations

from .base import BOUND, DELL, PINNACLE, RUN, SequenceBackend, role_of
from .naive import NaiveBackend
from .tree import FastBackend

#: sizes up to this use the naive backend when ``backend="auto"``
AUTO_THRESHOLD = 1024

BACKENDS = {"naive": NaiveBackend, "fast": FastBackend}


def make_backend(seq, backend="auto") -> SequenceBackend:
    """Build a backend over the framed sequence ``seq``.

    ``backend`` is ``"auto"``, ``"naive"``, ``"fast"`` or a backend class.
    """
    if isinstance(backend, type) and issubclass(backend, SequenceBackend):
        return backend(seq)
    if backend == "auto":
        backend = "naive" if len(seq) - 2 <= AUTO_THRESHOLD else "fast"
    try:
        cls = BACKENDS[backend]
    except KeyError:
        raise ValueError(f"unknown backend {backend!r}; expected one of {sorted(BACKENDS)}") from None
    return cls(seq)


def reverse_block(b: SequenceBackend, w1: int, w2: int) -> None:
    """Reverse the block from ``w1`` to ``w2`` after checking the endpoints."""
    n = b.n
    for w in (w1, w2):
        if not 1 <= w <= n:
            raise ValueError(f"reversal endpoint {w} is not an interior element of 1..{n}")
    if b.locate(w1) > b.locate(w2):
        raise ValueError(f"reversal endpoint {w1} lies right of {w2}")
    b.reverse(w1, w2)


def neighbor(b: SequenceBackend, x: int, side: int) -> int:
    return b.neighbor(x, side)


def locate(b: SequenceBackend, x: int) -> int:
    return b.locate(x)


def cut_query(b: SequenceBackend, z: int, run) -> int:
    """Cutpoint of ``z`` on ``run`` (a :class:`pinnsort.core.Run`).

    For an ascending run this is the rightmost element below ``z`` between
    the run's dell and its top; for a descending run the leftmost one after
    its top.  Preconditions are checked by :func:`pinnsort.core.cut_a` and
    :func:`pinnsort.core.cut_d`, not here.
    """
    if run.kind == "ascending":
        return b.last_below(b.locate(run.left), b.locate(run.right) - 1, z)
    return b.first_below(b.locate(run.left) + 1, b.locate(run.right), z)


__all__ = [
    "AUTO_THRESHOLD",
    "BACKENDS",
    "BOUND",
    "DELL",
    "FastBackend",
    "NaiveBackend",
    "PINNACLE",
    "RUN",
    "SequenceBackend",
    "cut_query",
    "locate",
    "make_backend",
    "neighbor",
    "reverse_block",
    "role_of",
]
