"""Sorting permutations by balanced reversals."""

from .core import (
    PinnacleSet,
    Permutation,
    Role,
    Run,
    Shape,
    canonical,
    cut_a,
    cut_d,
    from_interior,
    is_admissible,
    pinnacle_set,
    runs,
    shape,
)
from .errors import FormatError, InvariantError, PermutationError, PreconditionError, ReversalError
from .reversal import BalancedType, Reversal, apply, apply_inplace, classify, is_balanced
from .sorter import (
    Phase,
    Trace,
    TraceStep,
    VerifyReport,
    apply_lemma3,
    apply_lemma4,
    balanced_sort,
    balanced_transform,
    sort_bound,
    step1_sort_pinnacles,
    step2_place_dells,
    step3_finalize,
    transform_bound,
    verify_trace,
)

__version__ = "0.1.0"
