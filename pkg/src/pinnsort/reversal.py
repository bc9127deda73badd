"""Block reversals, the pinnacle-set oracle, and the balanced-reversal taxonomy."""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .core import Permutation, pinnacle_set
from .errors import ReversalError
from .fastseq import DELL, PINNACLE, RUN


class BalancedType(Enum):
    A1 = "A1"
    A2 = "A2"
    A2s = "A2s"
    A3 = "A3"
    A3s = "A3s"
    B1 = "B1"
    B2 = "B2"
    B2s = "B2s"
    B3 = "B3"
    B3s = "B3s"
    C1 = "C1"
    C1s = "C1s"
    C2 = "C2"
    C3 = "C3"
    AA = "AA"
    DD = "DD"
    TRIVIAL = "Trivial"

    def __str__(self):
        return self.value


class Reversal(NamedTuple):
    """``rho(w1, w2)``: reverse the block from element ``w1`` to element ``w2``."""

    w1: int
    w2: int
    tag: BalancedType | None = None

    def __str__(self):
        s = f"R {self.w1} {self.w2}"
        return f"{s} {self.tag}" if self.tag is not None else s

    def undo(self) -> "Reversal":
        """The reversal restoring the previous permutation (endpoints swap sides)."""
        return Reversal(self.w2, self.w1)


def _endpoints(p: Permutation, r) -> tuple[int, int]:
    w1, w2 = r[0], r[1]
    n = p.n
    for w in (w1, w2):
        if not 1 <= w <= n:
            raise ReversalError(f"reversal endpoint {w} is a sentinel or not an element (interior is 1..{n})")
    if w1 != w2 and p.backend.locate(w1) > p.backend.locate(w2):
        raise ReversalError(f"reversal endpoint {w1} lies right of {w2}")
    return w1, w2


def apply(p: Permutation, r) -> Permutation:
    """Return a new permutation with the block of ``r`` reversed."""
    q = p.copy()
    apply_inplace(q, r)
    return q


def apply_inplace(p: Permutation, r) -> None:
    w1, w2 = _endpoints(p, r)
    if w1 != w2:
        p.backend.reverse(w1, w2)


def is_balanced(p: Permutation, r) -> bool:
    """True iff reversing ``r`` leaves the pinnacle set unchanged (full recomputation)."""
    _endpoints(p, r)
    return pinnacle_set(p) == pinnacle_set(apply(p, r))


def classify(p: Permutation, r, *, literal: bool = False) -> BalancedType | None:
    """Balanced type of ``r`` on ``p``, or None when no row of the taxonomy matches.

    Each endpoint is a run member (ascending or descending), a dell or a
    pinnacle; the pair of roles selects the row and the row's side
    conditions decide.  Guarded clauses ("if X then Y") hold vacuously when
    the guard fails.

    The default taxonomy is exact: it returns a type iff the reversal keeps
    the pinnacle set.  ``literal=True`` switches to the older rows: A2 and A2s
    lose their second guarded clause, C1 and C1s compare without a guard,
    and there are no AA / DD rows for two ascending (two descending)
    endpoints.  It exists to audit the difference.
    """
    w1, w2 = r[0], r[1]
    n = p.n
    if not (1 <= w1 <= n and 1 <= w2 <= n):
        _endpoints(p, r)
    if w1 == w2:
        return BalancedType.TRIVIAL
    pos1, pos2, k1, k2, s1, ks1, s2, ks2, pr, nx = p.backend.context(w1, w2)
    if pos1 > pos2:
        raise ReversalError(f"reversal endpoint {w1} lies right of {w2}")
    y0 = n + 1
    yend = n + 2
    if k1 == RUN:
        k1 = "A" if ks1 == DELL else "D"
    else:
        k1 = "v" if k1 == DELL else "y"
    if k2 == RUN:
        k2 = "A" if ks2 == PINNACLE or s2 == yend else "D"
    else:
        k2 = "v" if k2 == DELL else "y"

    # Prec(w1) is the shape element before w1 (v_i or y_{i-1}), not a run member
    pr_adj = pr == s1
    nx_adj = nx == s2
    # Prec(w1) = y_{i-1} != y_0, and Next(w2) = y_{j+1} != y_{p+1}
    pr_pin = pr_adj and s1 != y0
    nx_pin = nx_adj and s2 != yend
    # "if Prec(w1) != v_i then w2 > Prec(w1)" and its mirror image
    low_pr = pr_adj or w2 > pr
    low_nx = nx_adj or w1 > nx

    match (k1, k2):
        case ("A", "D"):
            ok = low_nx and low_pr
            t = BalancedType.A1
        case ("y", "D"):
            ok = w1 > nx and (literal or low_pr)
            t = BalancedType.A2
        case ("A", "y"):
            ok = w2 > pr and (literal or low_nx)
            t = BalancedType.A2s
        case ("v", "D"):
            ok = low_nx and (not pr_pin or w2 < pr)
            t = BalancedType.A3
        case ("A", "v"):
            ok = low_pr and (not nx_pin or w1 < nx)
            t = BalancedType.A3s
        case ("D", "A"):
            ok = w1 < nx and w2 < pr
            t = BalancedType.B1
        case ("y", "A"):
            ok = pr_adj and w2 < pr and not nx_adj and nx < w1
            t = BalancedType.B2
        case ("D", "y"):
            ok = not pr_adj and pr < w2 and nx_adj and w1 < nx
            t = BalancedType.B2s
        case ("v", "A"):
            ok = w2 < pr and (not nx_pin or w1 < nx)
            t = BalancedType.B3
        case ("D", "v"):
            ok = w1 < nx and (not pr_pin or w2 < pr)
            t = BalancedType.B3s
        case ("v", "y"):
            ok = not pr_adj and w2 > pr and (w1 > nx if literal else low_nx)
            t = BalancedType.C1
        case ("y", "v"):
            ok = not nx_adj and w1 > nx and (w2 > pr if literal else low_pr)
            t = BalancedType.C1s
        case ("v", "v"):
            ok = (not pr_pin or w2 < pr) and (not nx_pin or w1 < nx)
            t = BalancedType.C2
        case ("y", "y"):
            ok = w1 > nx and w2 > pr
            t = BalancedType.C3
        case ("A", "A"):
            ok = not literal and pr_adj and w2 < pr and (not nx_pin or w1 < nx)
            t = BalancedType.AA
        case ("D", "D"):
            ok = not literal and nx_adj and w1 < nx and (not pr_pin or w2 < pr)
            t = BalancedType.DD
    return t if ok else None
