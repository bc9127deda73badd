"""Compare the list backend with the treap backend as n grows.

Sorting time and tree-node touches per reversal; the touch column divided by
log2(n) should stay roughly flat.
"""

import math
import random
import time

from pinnsort import Permutation, balanced_sort

SIZES = (10**3, 3 * 10**3, 10**4, 3 * 10**4, 10**5)
NAIVE_LIMIT = 10**4


def timed_sort(values, backend):
    p = Permutation.from_interior(values, backend)
    t0 = time.perf_counter()
    tr = balanced_sort(p)
    return time.perf_counter() - t0, tr, tr.end.backend.counters()


def main():
    rng = random.Random(1)
    balanced_sort(Permutation.from_interior([2, 1, 3], "fast"))  # jit warm-up
    print(f"{'n':>7} {'steps':>7} {'naive_s':>8} {'fast_s':>7} {'touch/rev/log2n':>16}")
    for n in SIZES:
        values = list(range(1, n + 1))
        rng.shuffle(values)
        fast_s, tr, c = timed_sort(values, "fast")
        naive = f"{timed_sort(values, 'naive')[0]:8.2f}" if n <= NAIVE_LIMIT else f"{'-':>8}"
        # touches include the cutpoint and neighbour queries issued between reversals
        per = c["node_touches"] / max(c["reversals"], 1) / math.log2(n)
        print(f"{n:>7} {len(tr):>7} {naive} {fast_s:7.2f} {per:16.1f}")


if __name__ == "__main__":
    main()
