"""
Linear algebra over F2
======================

Row reduction, coset representatives and linear solves on bit vectors.
Column 0 is the leftmost character of each string.
"""

from strongsparse.f2 import BitVec, F2Matrix, in_span, reduce_mod, rref, solve

m = F2Matrix.from_strs(["110", "011", "101"])
r = rref(m)
print("rank", r.rank, "pivots", r.pivots)
for row in r.matrix.rows:
    print("  ", row.to_str())

# the third row was the sum of the first two, so the span is 4 vectors
print("101 in span:", in_span(r, BitVec.from_str("101")))
print("100 in span:", in_span(r, BitVec.from_str("100")))

# canonical coset representative: zero on every pivot column
r1 = rref(F2Matrix.from_strs(["111"]))
print("100 mod <111> =", reduce_mod(r1, BitVec.from_str("100")).to_str())

x = solve(F2Matrix.from_strs(["110", "011"]), BitVec.from_bits([1, 1]))
print("solution of [110; 011] x = 11:", x.to_str())
print("inconsistent system:", solve(F2Matrix.from_strs(["111", "111"]), BitVec.from_bits([0, 1])))
