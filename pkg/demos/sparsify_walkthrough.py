"""
Sparsifying a monotone 1-in-3 instance
======================================

Two clauses sharing a pair force their third variables equal.  The full
sparsifier finds such merges through the quotient map alpha and the
dominance digraph, so it also handles instances where no two clauses
share a pair.
"""

from strongsparse.generators import gen_planted, gen_xor
from strongsparse.instance import Instance, as_two_in_three
from strongsparse.oracle import count_solutions, enumerate_solutions, verify_merges
from strongsparse.sparsifier import baseline_pair_merge, compute_alpha, find_twins, sparsify, succ_relation

inst = Instance(4, [(1, 2, 3), (1, 2, 4)])
print("solutions:", enumerate_solutions(inst))

alpha = compute_alpha(as_two_in_three(inst))
print("alpha images:", [v.to_str() for v in alpha.images])
print("twins:", find_twins(alpha))

eq, out, stats = sparsify(inst)
print("classes:", eq.classes(), "->", out.clauses)

# a small instance where dominance does the work
six = as_two_in_three(Instance(6, [(1, 2, 3), (1, 4, 5), (2, 4, 6)]))
g = succ_relation(six, compute_alpha(six))
print("dominance edges:", g.edge_list())

# XOR instances: every pair of variables sits in exactly one clause
for k in range(2, 6):
    x = gen_xor(k)
    _, base = baseline_pair_merge(x)
    _, full, st = sparsify(x)
    print(f"k={k} n={x.n} m_in={x.m} baseline={base.m} full={full.m} rounds={st.rounds}")

# every merge is certified by enumeration on a planted instance
p = gen_planted(16, 24, seed=3)
eq, out, st = sparsify(p)
print("planted:", st.to_dict())
print("merges certified:", verify_merges(p, eq) is None,
      "counts", count_solutions(p), count_solutions(out))
