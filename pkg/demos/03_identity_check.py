"""Checking the multiple-sum generating function against the product and against brute force.

Run with ``python demos/03_identity_check.py``.
"""
from kregular.genfun import lemma_sum_series, lhs_series, rhs_series, verify_identity
from kregular.partitions import oracle_series

# both sides of the k=2 identity agree through x^10 q^36
print(verify_identity(2, 10, 36).to_dict(timing=False))

# the two right-hand constructions and the product coincide
A, B = 8, 30
print("lemma sum == product:", lemma_sum_series(A, B) == lhs_series(2, A, B))
print("multiple sum == product:", rhs_series(2, A, B) == lhs_series(2, A, B))

# every coefficient is a count of partitions by number of parts and weight
s = lhs_series(2, 8, 12)
print("x^4 q^6 ->", s[4, 6], "  (only 1 1 2 2)")
print("q^6 total ->", sum(s[L, 6] for L in range(9)))
print("matches enumeration:", s == oracle_series(2, 8, 12))

# k = 1 is Euler's distinct-parts identity; larger k use the general recurrence
for k, A, B in [(1, 12, 40), (3, 9, 30), (4, 7, 20), (5, 7, 20)]:
    rep = verify_identity(k, A, B)
    print(f"k={k} x^{A} q^{B}: {rep.status} in {rep.elapsed_ms:.0f} ms")

# enumeration on the left and the direct lemma sum on the right
print(verify_identity(2, 6, 18, "enumeration", "lemma-direct").status)
