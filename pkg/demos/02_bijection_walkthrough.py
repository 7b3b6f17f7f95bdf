"""Walking a 2-regular partition down to its base partition and back up.

Run with ``python demos/02_bijection_walkthrough.py``.
"""
from kregular.bijection import (
    ReducedPair,
    build,
    forbidden_sizes,
    forbidden_sizes_empirical,
    format_trace,
    reduce,
)
from kregular.partitions import Partition, iter_k_regular

p = Partition.parse("3 6 10 10 15 19 19")
print("partition:", p, "  weight", p.weight)
for line in format_trace(p, 2):
    print("  " + line)

red = reduce(p, 2)
print("base weight", red.base_weight(), "+ lambda weight", red.lam.weight, "=", p.weight)

# forward direction recovers the original
print("rebuilt:", build(red))

# sizes 1 and 4 are missing from lambda for every partition of this shape
print("forbidden (formula):  ", sorted(forbidden_sizes(2, 3, (3, 5))))
print("forbidden (observed): ", sorted(forbidden_sizes_empirical(2, red.word, 60)))

# lambda may not contain a forbidden size
try:
    build(ReducedPair(2, red.word, Partition.parse("4")))
except ValueError as exc:
    print("rejected:", exc)

# the same steps work for any k
for k in (1, 3, 4):
    total = sum(1 for w in range(15) for q in iter_k_regular(w, k) if build(reduce(q, k)) == q)
    print(f"k={k}: {total} partitions of weight <= 14 round-trip")

# for k = 3 the empty spots in lambda are recorded, not derived
print("k=3, word (1, 3): never used", sorted(forbidden_sizes_empirical(3, (1, 3), 40)))
