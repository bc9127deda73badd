"""Walk the 19-element running example through the three sorting phases.

Prints the shape of the start, every reversal with its type, the state after
each phase, and finally checks the trace with the independent verifier.
"""

from pinnsort import Permutation, balanced_sort, shape, sort_bound, verify_trace
from pinnsort.sorter import Phase
from pinnsort.textio import describe, format_permutation

START = [16, 10, 11, 6, 17, 18, 7, 8, 1, 3, 2, 5, 4, 13, 12, 9, 15, 14, 19]


def main():
    p = Permutation.from_interior(START)
    print(describe(p))
    print()

    tr = balanced_sort(p)
    state = tr.start.copy()
    phase = None
    for k, step in enumerate(tr, 1):
        if step.phase is not phase:
            if phase is not None:
                print(f"   after {phase}: {format_permutation(state)}")
            phase = step.phase
            print(f"-- {phase}")
        state.reverse(step.reversal.w1, step.reversal.w2)
        print(f"{k:3d}  rho({step.reversal.w1}, {step.reversal.w2})  {step.type.value}")
    print(f"   after {phase}: {format_permutation(state)}")

    counts = tr.counts()
    n, np_ = p.n, p.num_pinnacles
    print()
    print(f"reversals: {len(tr)}  (bound {sort_bound(n, np_)})")
    print("per phase:", ", ".join(f"{ph}={counts[ph]}" for ph in (Phase.STEP1, Phase.STEP2, Phase.STEP3)))
    print("pinnacles at the end:", shape(tr.end).pinnacles)
    print(verify_trace(tr.start, tr.steps, tr.end).summary())


if __name__ == "__main__":
    main()
