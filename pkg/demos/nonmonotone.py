"""
Non-monotone instances
======================

Negated literals become fresh variables, the monotone sparsifier runs on
the result, and a 2-colouring of the conflict graph decides which original
variables merge.  An odd cycle proves the instance unsatisfiable.
"""

from strongsparse.generators import gen_random_nonmonotone
from strongsparse.instance import LiteralInstance
from strongsparse.oracle import literal_solution_masks, verify_literal_merges
from strongsparse.reduction import clause_bound_check, literal_quotient, sparsify_nonmonotone, to_monotone

li = LiteralInstance(4, [(1, 2, -3), (1, -3, 4), (-1, -2, -3), (-1, -3, -4), (-2, -3, 4)])
mono, _ = to_monotone(li)
print("monotone form:", mono.clauses)

res = sparsify_nonmonotone(li)
print("monotone classes:", res.eq_y.classes())
print("status", res.status.value, "classes", res.eq.classes())
print("sound:", verify_literal_merges(li, res.eq) is None)
print("quotient:", literal_quotient(li, res.eq).clauses)

# x3 and not-x3 end up in one class
bad = LiteralInstance(3, [(1, 2, 3), (1, 2, -3)])
print("contradiction:", sparsify_nonmonotone(bad).status.value,
      "solutions", literal_solution_masks(bad).size)

unsat = ok = 0
for s in range(100):
    li = gen_random_nonmonotone(10, 12, s)
    res = sparsify_nonmonotone(li)
    unsat += res.status.value == "unsat_detected"
    ok += clause_bound_check(li, res.eq, res.eq_y) is None
print(f"100 random instances: {unsat} unsat detected, clause bound held {ok} times")
