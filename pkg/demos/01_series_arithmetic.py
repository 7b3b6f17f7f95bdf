"""Exact series arithmetic: q-integers, q-Pochhammer products, reciprocals.

Run with ``python demos/01_series_arithmetic.py``.
"""
from kregular.partitions import count_k_regular
from kregular.qalg import IntPoly, QSeries, poch_finite, q_factorial, q_int, series_from_poly, series_recip

# q-integers and q-factorials are plain integer polynomials
print("[4]_q   =", q_int(4))
print("[3]_q!  =", q_factorial(3))
print("(q;q)_3 =", poch_finite(3))

# 1/(q;q)_n counts partitions into parts of size at most n
inv = series_recip(series_from_poly(poch_finite(3), 12))
print("1/(q;q)_3 =", inv)

# 1/(q;q)_20 through q^20 is the partition function
p = series_recip(series_from_poly(poch_finite(20), 20))
print("p(0..20) =", list(p))
print("agrees with brute-force counts:", all(p[n] == count_k_regular(n) for n in range(21)))

# coefficients are Python ints, so nothing overflows
big = IntPoly((1, 1)) ** 300
print("C(300, 150) has", len(str(big[150])), "digits")

# truncation orders combine to the smaller one
print((QSeries((1, 1, 1, 1, 1), 4) * QSeries((1, 2), 2)).trunc)
