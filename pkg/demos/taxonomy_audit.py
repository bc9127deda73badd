"""Audit the balanced-reversal taxonomy against brute force.

For every permutation of size 2..7 and every endpoint pair, compare the
classifier (repaired rows and the literal rows) with the direct test: reverse
and compare pinnacle sets. Disagreements are tallied per row.
"""

import itertools
from collections import Counter

from pinnsort import Permutation, classify, is_balanced


def audit(max_n=7):
    tally = {"repaired": Counter(), "literal": Counter()}
    seen = Counter()
    for n in range(2, max_n + 1):
        for values in itertools.permutations(range(1, n + 1)):
            p = Permutation.from_interior(values, backend="naive")
            seq = p.seq
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    r = (seq[i], seq[j])
                    truth = is_balanced(p, r)
                    for mode in tally:
                        got = classify(p, r, literal=mode == "literal")
                        seen[mode, got.value if got else "none"] += 1
                        if (got is not None) != truth:
                            key = got.value if got else "missed"
                            tally[mode][key] += 1
    return tally, seen


def main():
    tally, seen = audit()
    for mode, bad in tally.items():
        total = sum(bad.values())
        print(f"{mode:9s} disagreements: {total}")
        for key, count in sorted(bad.items()):
            print(f"    {key:8s} {count}")
    print()
    print("reversals per type (repaired rows):")
    rows = sorted((k[1], v) for k, v in seen.items() if k[0] == "repaired")
    for name, count in rows:
        print(f"    {name:8s} {count}")


if __name__ == "__main__":
    main()
