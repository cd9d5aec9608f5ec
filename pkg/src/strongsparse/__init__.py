"""Strong sparsification for monotone and non-monotone 1-in-3-SAT.

Sound variable merging driven by linear algebra over F2, with brute-force
oracles for certification and the additive-combinatorics checks behind the
sparsification bound.
"""

from .addcomb import (
    VectorFamily,
    check_condition_i,
    check_condition_ii,
    doubling,
    e3,
    e4,
    e_k,
    family_from_instance,
    sumset,
    total_size,
)
from .f2 import BitVec, F2Matrix, Rref, in_span, reduce_mod, rref, solve
from .generators import gen_planted, gen_random, gen_random_nonmonotone, gen_subset_family, gen_xor
from .instance import (
    EquivRel,
    FormatError,
    Instance,
    LiteralInstance,
    Semantics,
    clause_matrix,
    complement,
    neighbours,
    parse,
    quotient,
    serialize,
)
from .locolor import brute_lo2, check_lo, lift_colouring
from .oracle import count_solutions, enumerate_solutions, pair_uniqueness, verify_merges, verify_succ_semantics
from .reduction import Status, clause_bound_check, sparsify_nonmonotone, to_monotone
from .sparsifier import (
    SparsifyStats,
    baseline_pair_merge,
    compute_alpha,
    find_cycles,
    find_twins,
    sparsify,
    succ_relation,
    succ_space,
)

__version__ = "0.1.0"
