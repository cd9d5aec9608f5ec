"""
LO colourings through a sparsifier
==================================

An LO 2-colouring of a 3-uniform hypergraph is a 1-in-3 solution.  Colour
the sparsified hypergraph, then give every vertex the colour of its class.
"""

from strongsparse.generators import gen_planted
from strongsparse.instance import Instance
from strongsparse.locolor import brute_lo2, check_lo, lift_colouring
from strongsparse.sparsifier import sparsify

h = Instance(4, [(1, 2, 3), (1, 2, 4)])
eq, small, _ = sparsify(h)
c = brute_lo2(small)
lifted = lift_colouring(eq, c)
print("quotient colouring", c, "lifted", lifted, "valid:", check_lo(h, lifted) is None)

h = gen_planted(20, 30, seed=5)
eq, small, st = sparsify(h)
c = brute_lo2(small)
lifted = lift_colouring(eq, c)
print(f"n={h.n} -> {small.n} vertices; lifted colouring valid: {check_lo(h, lifted) is None}")

# a colouring with a repeated top colour is rejected
print("bad edge:", check_lo(Instance(3, [(1, 2, 3)]), {1: 2, 2: 2, 3: 1}))
