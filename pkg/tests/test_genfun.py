from itertools import combinations
from math import comb

import pytest

from conftest import P
from golden import A_TABLE, B_TABLE
from kregular.genfun import (
    a_closed_n0,
    a_direct,
    a_recur,
    ab_relation_check,
    b_degree,
    b_poly,
    b_poly_k,
    base_exponent,
    iter_indices,
    iter_indices_by_sum,
    lemma_sum_series,
    lhs_series,
    rhs_series,
    rhs_term,
    term_gen_pairs,
    verify_identity,
)
from kregular.partitions import oracle_series
from kregular.qalg import (
    IntPoly,
    QSeries,
    XQSeries,
    poch_finite,
    qpoch,
    recip_poch,
    series_from_poly,
    xq_mul,
)


@pytest.mark.parametrize("mn", sorted(A_TABLE))
def test_a_table(mn):
    assert a_direct(*mn) == P(A_TABLE[mn])
    assert a_recur(*mn) == P(A_TABLE[mn])


@pytest.mark.parametrize("mn", sorted(B_TABLE))
def test_b_table(mn):
    assert b_poly(*mn) == P(B_TABLE[mn])


def test_table_orientation():
    # transposing the table would put q - q^2 at a(0, 1), contradicting a(0, n) = 1
    assert a_recur(0, 1) == P("1")
    assert a_recur(1, 0) == P("q - q^2")


def test_a_zero_row():
    assert all(a_direct(0, n) == P("1") for n in range(8))


@pytest.mark.parametrize("m", range(7))
def test_a_closed_form_n0(m):
    assert a_recur(m, 0) == a_closed_n0(m) == qpoch(m, step=2).shift(comb(m + 1, 2))


def test_plus_sign_closed_form_disagrees():
    plus = qpoch(2, step=2, sign=-1).shift(3)
    assert plus == P("q^3 + q^4 + q^6 + q^7")
    assert plus != a_direct(2, 0)


def test_a_direct_equals_a_recur():
    for m in range(9):
        for n in range(9 - m):
            assert a_direct(m, n) == a_recur(m, n)


def test_ab_relation():
    assert ab_relation_check(8)
    assert (P("1 - q") ** 2 * b_poly(2, 0)).shift(3) == P("q^3 - q^4 - q^6 + q^7")


def test_b_poly_k_agrees_with_two_index_version():
    for m in range(9):
        for n in range(9 - m):
            assert b_poly_k(2, (m, n)) == b_poly(m, n)


def test_b_poly_k_small():
    assert all(b_poly_k(1, (n,)) == P("1") for n in range(10))
    assert all(b_poly_k(3, (0, 0, n)) == P("1") for n in range(8))
    assert b_poly_k(3, (1, 0, 0)) == P("1 + q")
    assert b_poly_k(3, (-1, 0, 2)) == IntPoly()


def _b3_literal(l, m, n, memo={}):
    # the three-index recurrence written out term by term
    if min(l, m, n) < 0:
        return IntPoly()
    if (l, m, n) == (0, 0, 0):
        return P("1")
    if (l, m, n) not in memo:
        N = 3 * l + 2 * m + n
        br = lambda top: IntPoly((1,) * (top + 1)) if top >= 0 else IntPoly()  # noqa: E731
        memo[l, m, n] = (
            br(N - 2) * br(N - 3) * _b3_literal(l - 1, m, n)
            + (br(N - 2) * _b3_literal(l, m - 1, n)).shift(l)
            + _b3_literal(l, m, n - 1).shift(2 * l + m)
        )
    return memo[l, m, n]


def test_b_poly_k3_matches_literal_recurrence():
    for idx in iter_indices_by_sum(3, 6):
        assert b_poly_k(3, idx) == _b3_literal(*idx)


def test_b_structure():
    for k in (2, 3, 4):
        for idx in iter_indices_by_sum(k, 5):
            b = b_poly_k(k, idx)
            assert b[0] == 1
            assert all(c >= 0 for c in b.coeffs)
    for m in range(8):
        for n in range(8 - m):
            assert b_poly(m, n).degree == b_degree(m, n)


def test_iter_indices():
    idx = list(iter_indices(2, 4))
    assert len(idx) == len(set(idx)) == 9
    assert all(2 * m + n <= 4 for m, n in idx)
    assert sum(1 for _ in iter_indices_by_sum(3, 4)) == comb(7, 3)


def test_base_exponent():
    assert base_exponent((2, 3)) == comb(6, 2) + comb(3, 2)
    assert base_exponent((1, 1, 1)) == comb(4, 2) + comb(3, 2) + comb(2, 2)


def test_rhs_euler_case():
    s = rhs_series(1, 12, 40)
    for n in range(13):
        expected = series_from_poly(IntPoly.monomial(comb(n + 1, 2)), 40) * recip_poch(n, 40)
        assert s.coeff(n) == expected


def test_rhs_simple_coefficients():
    s = rhs_series(2, 6, 12)
    assert s[4, 6] == 1
    assert s[0, 0] == 1
    assert rhs_series(4, 3, 5)[0, 0] == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_rhs_fast_path_agrees(k):
    assert rhs_series(k, 7, 22, fast=True) == rhs_series(k, 7, 22)
    for idx in iter_indices(k, 5):
        assert rhs_term(k, idx, 18, fast=True) == rhs_term(k, idx, 18)


def test_lhs_simple_coefficients():
    s = lhs_series(2, 5, 12)
    assert s[2, 2] == 1
    assert all(s[1, w] == 1 for w in range(1, 13))


def test_lhs_k1_is_product_of_distinct_parts():
    # (-xq; q)_inf truncated: multiply (1 + x q^j) one factor at a time
    A, B = 6, 20
    acc = XQSeries.one(A, B)
    for j in range(1, B + 1):
        factor = XQSeries({0: QSeries.one(B), 1: series_from_poly(IntPoly.monomial(j), B)}, A, B)
        acc = xq_mul(acc, factor)
    assert lhs_series(1, A, B) == acc


def test_lhs_generic_product_agrees():
    A, B, k = 5, 15, 3
    acc = XQSeries.one(A, B)
    for j in range(1, B + 1):
        factor = XQSeries({t: series_from_poly(IntPoly.monomial(t * j), B) for t in range(k + 1)}, A, B)
        acc = acc * factor
    assert lhs_series(k, A, B) == acc


def test_lhs_dropping_factors_is_exact():
    # retained coefficients do not change when more factors are included
    small = lhs_series(3, 6, 20)
    big = lhs_series(3, 6, 25)
    for d in range(7):
        assert big.coeff(d).truncate(20) == small.coeff(d)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_lhs_matches_enumeration(k):
    assert lhs_series(k, 6, 16) == oracle_series(k, 6, 16)


def test_triple_equality_k2():
    lhs = lhs_series(2, 8, 30)
    assert lemma_sum_series(8, 30) == lhs
    assert rhs_series(2, 8, 30) == lhs


def test_lemma_summand_example():
    # m=1, n=0, i_1=1: q^2 (1 - q) / (q;q)_2 = q^2 / (1 - q^2), i.e. the partitions "c c"
    s = term_gen_pairs(1, 0, (1,), 10)
    assert s.coeffs == (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1)


def test_lemma_summands_nonnegative():
    for m in range(5):
        for n in range(5 - m):
            for reps in combinations(range(1, m + n + 1), m):
                assert min(term_gen_pairs(m, n, reps, 20)) >= 0


def test_verify_identity_reports():
    rep = verify_identity(2, 6, 16)
    assert rep.status == "verified" and rep.mismatches == []
    d = rep.to_dict()
    assert set(d) == {"k", "xmax", "qmax", "status", "methods", "mismatches", "elapsed_ms"}
    assert verify_identity(2, 6, 16, "enumeration", "lemma-direct").ok
    assert verify_identity(3, 5, 14, workers=2).ok


def test_verify_identity_detects_mismatch(monkeypatch):
    import kregular.genfun as gf

    real = gf.rhs_series

    def broken(k, xmax, qmax, **kw):
        s = real(k, xmax, qmax, **kw)
        terms = dict(s.terms)
        terms[3] = terms[3] + QSeries((0,) * 9 + (1,), qmax)
        return XQSeries(terms, xmax, qmax)

    monkeypatch.setattr(gf, "rhs_series", broken)
    rep = gf.verify_identity(2, 5, 12)
    assert rep.status == "mismatch"
    assert rep.mismatches == [(3, 9, rep.mismatches[0][2], rep.mismatches[0][2] + 1)]
    assert rep.to_dict()["mismatches"][0]["x"] == 3


def test_verify_identity_bad_method():
    with pytest.raises(ValueError):
        verify_identity(3, 4, 10, right_method="lemma-direct")
    with pytest.raises(ValueError):
        verify_identity(2, 4, 10, left_method="magic")


def test_poch_denominator_cancellation():
    # (1-q)^e / (q;q)_N should equal 1 / ((1-q)^(N-e) [N]_q!)
    from kregular.qalg import q_factorial

    for N in range(6):
        assert poch_finite(N) == P("1 - q") ** N * q_factorial(N)
