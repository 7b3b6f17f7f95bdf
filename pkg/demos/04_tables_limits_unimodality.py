"""The a- and b-polynomials, their values at q = 1, and the unimodality scan.

Run with ``python demos/04_tables_limits_unimodality.py``.
"""
from kregular.analysis import (
    bessel_coeff,
    is_unimodal,
    limit_q1,
    q_bessel_analog,
    q_bessel_mismatch,
    scan_unimodality,
)
from kregular.genfun import a_closed_n0, a_direct, a_recur, b_poly, b_poly_k
from kregular.qalg import qpoch

print("b(m, n), rows indexed by m:")
for m in range(5):
    for n in range(5 - m):
        print(f"  b({m},{n}) = {b_poly(m, n)}")

print("a(2, 2) direct   :", a_direct(2, 2))
print("a(2, 2) recurrence:", a_recur(2, 2))

# the (q;q^2) form matches; the (-q;q^2) form does not
print("a(3, 0)             =", a_recur(3, 0))
print("q^6 (q;q^2)_3       =", a_closed_n0(3))
print("q^6 (-q;q^2)_3      =", qpoch(3, step=2, sign=-1).shift(6))

# at q = 1 the b-polynomials become Bessel coefficients (2m+n)!/(m! n! 2^m)
for m, n in [(1, 1), (2, 2), (3, 1), (4, 0)]:
    print(f"  b({m},{n})(1) = {limit_q1(b_poly(m, n))}   bessel = {bessel_coeff(m, n)}")

# the Gaussian-binomial q-analog is a different family
print("b(1,1) =", b_poly(1, 1), "  q-analog =", q_bessel_analog(1, 1))
print("differing pairs up to 4:", q_bessel_mismatch(4))

# three-index case
print("b(1,1,1) =", b_poly_k(3, (1, 1, 1)))

for k, bound in [(2, 12), (3, 9), (4, 6)]:
    rep = scan_unimodality(k, bound)
    print(f"k={k}, index sum <= {bound}: {rep.checked} polynomials, {len(rep.counterexamples)} not unimodal")

print(is_unimodal(b_poly(3, 1)))
