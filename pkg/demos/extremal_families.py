"""
Vector families and additive energy
===================================

The subset lattice meets both structural conditions with total size 3^d,
and the energy inequalities behind the sparsification bound can be checked
exactly in integers.
"""

from strongsparse.addcomb import (
    check_condition_i,
    check_condition_ii,
    doubling,
    e3,
    e4,
    family_from_instance,
    sumset,
    total_size,
)
from strongsparse.generators import gen_planted, gen_subset_family
from strongsparse.sparsifier import sparsify

for d in range(1, 8):
    f = gen_subset_family(d)
    E3, E4 = e3(f.V), e4(f.V)
    print(f"d={d} n={f.n} sum|N|={total_size(f)} (3^d={3 ** d}) "
          f"cond(i)={not check_condition_i(f)} cond(ii)={not check_condition_ii(f)} "
          f"E3={E3} nE4>=E3^2: {f.n * E4 >= E3 * E3}")

A = {0b001, 0b010, 0b100}
print("A+A =", sorted(sumset(A)), "doubling", doubling(A))

# families from sparsified instances, in dominance order
_, out, _ = sparsify(gen_planted(18, 12, seed=11))
f = family_from_instance(out)
print("extracted family:", f.n, "vectors in dimension", f.d, "sum|N| =", total_size(f),
      "E3 =", e3(f.V))
