"""Numba kernels for an implicit treap with lazy block reversal.

The whole tree lives in one int64 table ``T`` with one row per element value
(row 0 is the null node, the last row holds the root and the touch counter).
Subtree aggregates are the size, the number of shape elements, the minimum
value and the maximum pinnacle value; none of them depends on orientation,
so a pending reversal flag never invalidates them.  A flipped flag is the
ascending/descending role swap for every run inside the reversed block.
"""

import numpy as np
from numba import njit

# columns
L = 0
R = 1
P = 2
SZ = 3
REV = 4
KIND = 5
SC = 6
MN = 7
MXP = 8
PRI = 9
STK = 10
NCOL = 11

# meta row columns
ROOT = 0
TOUCH = 1

RUN = 0
DELL = 1
PINNACLE = 2
BOUND = 3

BIG = np.int64(1) << 60


@njit(cache=True)
def _meta(T):
    return T.shape[0] - 1


@njit(cache=True)
def _pull(T, x):
    l = T[x, L]
    r = T[x, R]
    T[x, SZ] = T[l, SZ] + T[r, SZ] + 1
    k = T[x, KIND]
    T[x, SC] = T[l, SC] + T[r, SC] + (1 if k != RUN else 0)
    mn = x
    if T[l, MN] < mn:
        mn = T[l, MN]
    if T[r, MN] < mn:
        mn = T[r, MN]
    T[x, MN] = mn
    mx = x if k == PINNACLE else 0
    if T[l, MXP] > mx:
        mx = T[l, MXP]
    if T[r, MXP] > mx:
        mx = T[r, MXP]
    T[x, MXP] = mx


@njit(cache=True)
def _push(T, x):
    T[_meta(T), TOUCH] += 1
    if T[x, REV] != 0:
        l = T[x, L]
        r = T[x, R]
        T[x, L] = r
        T[x, R] = l
        if l != 0:
            T[l, REV] ^= 1
        if r != 0:
            T[r, REV] ^= 1
        T[x, REV] = 0


@njit(cache=True)
def _pull_up(T, x):
    m = _meta(T)
    while x != 0:
        T[m, TOUCH] += 1
        _pull(T, x)
        x = T[x, P]


@njit(cache=True)
def _split(T, t, k):
    """Split subtree ``t`` into its first ``k`` nodes and the rest."""
    a = 0
    b = 0
    la = 0
    rb = 0
    while t != 0:
        _push(T, t)
        ls = T[T[t, L], SZ]
        if ls < k:
            if la == 0:
                a = t
                T[t, P] = 0
            else:
                T[la, R] = t
                T[t, P] = la
            la = t
            k -= ls + 1
            t = T[t, R]
        else:
            if rb == 0:
                b = t
                T[t, P] = 0
            else:
                T[rb, L] = t
                T[t, P] = rb
            rb = t
            t = T[t, L]
    if la != 0:
        T[la, R] = 0
    if rb != 0:
        T[rb, L] = 0
    _pull_up(T, la)
    _pull_up(T, rb)
    return a, b


@njit(cache=True)
def _merge(T, a, b):
    if a == 0:
        return b
    if b == 0:
        return a
    root = 0
    par = 0
    right = False
    while a != 0 and b != 0:
        if T[a, PRI] > T[b, PRI]:
            _push(T, a)
            x = a
            a = T[a, R]
            nxt_right = True
        else:
            _push(T, b)
            x = b
            b = T[b, L]
            nxt_right = False
        if par == 0:
            root = x
        elif right:
            T[par, R] = x
        else:
            T[par, L] = x
        T[x, P] = par
        par = x
        right = nxt_right
    rest = a if a != 0 else b
    if right:
        T[par, R] = rest
    else:
        T[par, L] = rest
    if rest != 0:
        T[rest, P] = par
    _pull_up(T, par)
    return root


@njit(cache=True)
def _locate_rank(T, x):
    """Position and shape rank of ``x``, after pushing all pending flags above it."""
    m = _meta(T)
    d = 0
    y = x
    while y != 0:
        T[d, STK] = y
        d += 1
        y = T[y, P]
    for i in range(d - 1, -1, -1):
        _push(T, T[i, STK])
    pos = T[T[x, L], SZ]
    rank = T[T[x, L], SC]
    y = x
    while T[y, P] != 0:
        p = T[y, P]
        T[m, TOUCH] += 1
        if T[p, R] == y:
            l = T[p, L]
            pos += T[l, SZ] + 1
            rank += T[l, SC] + (1 if T[p, KIND] != RUN else 0)
        y = p
    return pos, rank


@njit(cache=True)
def locate(T, x):
    return _locate_rank(T, x)[0]


@njit(cache=True)
def shape_rank(T, x):
    return _locate_rank(T, x)[1]


@njit(cache=True)
def kth(T, k):
    t = T[_meta(T), ROOT]
    while True:
        _push(T, t)
        ls = T[T[t, L], SZ]
        if k < ls:
            t = T[t, L]
        elif k == ls:
            return t
        else:
            k -= ls + 1
            t = T[t, R]


@njit(cache=True)
def neighbor(T, x, side):
    i = locate(T, x) + side
    if i < 0 or i >= T[T[_meta(T), ROOT], SZ]:
        return 0
    return kth(T, i)


@njit(cache=True)
def shape_at(T, r):
    t = T[_meta(T), ROOT]
    while True:
        _push(T, t)
        lc = T[T[t, L], SC]
        own = 1 if T[t, KIND] != RUN else 0
        if r < lc:
            t = T[t, L]
        elif r == lc and own == 1:
            return t
        else:
            r -= lc + own
            t = T[t, R]


@njit(cache=True)
def context(T, w1, w2):
    """Everything the reversal taxonomy reads about the endpoints, in one pass."""
    n = T[_meta(T), ROOT]
    last = T[n, SZ] - 1
    pos1, r1 = _locate_rank(T, w1)
    pos2, r2 = _locate_rank(T, w2)
    k1 = T[w1, KIND]
    k2 = T[w2, KIND]
    s1 = shape_at(T, r1 - 1)
    s2 = shape_at(T, r2 + 1 if k2 != RUN else r2)
    pr = kth(T, pos1 - 1) if pos1 > 0 else 0
    nx = kth(T, pos2 + 1) if pos2 < last else 0
    return pos1, pos2, k1, k2, s1, T[s1, KIND], s2, T[s2, KIND], pr, nx


@njit(cache=True)
def _role(v, left, right):
    if v < left and v < right:
        return DELL
    if v > left and v > right:
        return PINNACLE
    return RUN


@njit(cache=True)
def _set_kind(T, x, k):
    if T[x, KIND] != k:
        T[x, KIND] = k
        _pull_up(T, x)


@njit(cache=True)
def reverse(T, w1, w2):
    m = _meta(T)
    a = locate(T, w1)
    b = locate(T, w2)
    if a >= b:
        return
    last = T[T[m, ROOT], SZ] - 1
    # old values around both cuts; the new neighborhoods are read off them
    am2 = kth(T, a - 2) if a >= 2 else 0
    am1 = kth(T, a - 1)
    ap1 = kth(T, a + 1)
    bm1 = kth(T, b - 1)
    bp1 = kth(T, b + 1)
    bp2 = kth(T, b + 2) if b + 2 <= last else 0

    left, rest = _split(T, T[m, ROOT], a)
    mid, right = _split(T, rest, b - a + 1)
    T[mid, REV] ^= 1
    root = _merge(T, _merge(T, left, mid), right)
    T[root, P] = 0
    T[m, ROOT] = root

    if a - 1 > 0:
        _set_kind(T, am1, _role(am1, am2, w2))
    _set_kind(T, w2, _role(w2, am1, bm1))
    _set_kind(T, w1, _role(w1, ap1, bp1))
    if b + 1 < last:
        _set_kind(T, bp1, _role(bp1, w1, bp2))


@njit(cache=True)
def last_below(T, lo, hi, z):
    m = _meta(T)
    left, rest = _split(T, T[m, ROOT], lo)
    mid, right = _split(T, rest, hi - lo + 1)
    res = 0
    t = mid
    if T[mid, MN] < z:
        while True:
            _push(T, t)
            r = T[t, R]
            if T[r, MN] < z:
                t = r
            elif t < z:
                res = t
                break
            else:
                t = T[t, L]
    root = _merge(T, _merge(T, left, mid), right)
    T[root, P] = 0
    T[m, ROOT] = root
    return res


@njit(cache=True)
def first_below(T, lo, hi, z):
    m = _meta(T)
    left, rest = _split(T, T[m, ROOT], lo)
    mid, right = _split(T, rest, hi - lo + 1)
    res = 0
    t = mid
    if T[mid, MN] < z:
        while True:
            _push(T, t)
            l = T[t, L]
            if T[l, MN] < z:
                t = l
            elif t < z:
                res = t
                break
            else:
                t = T[t, R]
    root = _merge(T, _merge(T, left, mid), right)
    T[root, P] = 0
    T[m, ROOT] = root
    return res


@njit(cache=True)
def first_pinnacle_after(T, x, threshold):
    m = _meta(T)
    pos = locate(T, x)
    left, right = _split(T, T[m, ROOT], pos + 1)
    res = 0
    t = right
    if T[right, MXP] > threshold:
        while True:
            _push(T, t)
            l = T[t, L]
            if T[l, MXP] > threshold:
                t = l
            elif T[t, KIND] == PINNACLE and t > threshold:
                res = t
                break
            else:
                t = T[t, R]
    root = _merge(T, left, right)
    T[root, P] = 0
    T[m, ROOT] = root
    return res


@njit(cache=True)
def to_array(T):
    m = _meta(T)
    root = T[m, ROOT]
    out = np.empty(T[root, SZ], dtype=np.int64)
    # iterative in-order walk; STK doubles as the explicit stack
    d = 0
    t = root
    i = 0
    while d > 0 or t != 0:
        while t != 0:
            _push(T, t)
            T[d, STK] = t
            d += 1
            t = T[t, L]
        d -= 1
        t = T[d, STK]
        out[i] = t
        i += 1
        t = T[t, R]
    return out


@njit(cache=True)
def build(seq, pri):
    """Treap over ``seq`` (framed, values 1..len(seq)) with heap priorities ``pri``."""
    size = seq.shape[0]
    T = np.zeros((size + 2, NCOL), dtype=np.int64)
    m = size + 1
    T[0, MN] = BIG
    last = size - 1
    for i in range(size):
        x = seq[i]
        T[x, PRI] = pri[i]
        if i == 0 or i == last:
            T[x, KIND] = BOUND
        else:
            T[x, KIND] = _role(x, seq[i - 1], seq[i + 1])
    # Cartesian tree by the right-spine stack
    d = 0
    for i in range(size):
        x = seq[i]
        prev = 0
        while d > 0 and T[T[d - 1, STK], PRI] < T[x, PRI]:
            d -= 1
            prev = T[d, STK]
        T[x, L] = prev
        if prev != 0:
            T[prev, P] = x
        if d > 0:
            top = T[d - 1, STK]
            T[top, R] = x
            T[x, P] = top
        T[d, STK] = x
        d += 1
    root = T[0, STK]
    T[root, P] = 0
    T[m, ROOT] = root
    # children carry lower priorities, so increasing priority is a valid pull order
    order = np.argsort(pri)
    for j in range(size):
        _pull(T, seq[order[j]])
    return T
