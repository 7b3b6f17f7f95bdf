"""The a- and b-polynomials and the series on both sides of the k-regular identity.

Three independent routes to the bivariate generating function

    sum_{L, W} #{k-regular partitions of W with L parts} x^L q^W

are provided:

* :func:`lhs_series` -- the product ``prod_j (1 + x q^j + ... + x^k q^{kj})``;
* :func:`rhs_series` -- the multiple sum driven by the b-recurrence;
* :func:`lemma_sum_series` (k = 2) -- the sum over base partitions indexed
  by the positions of repeated sizes.

:func:`verify_identity` compares any left route against any right route
coefficient by coefficient.

Value tables are laid out with rows indexed by the first argument ``m``;
the recurrences force this orientation since ``a(0, n) = 1``.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator

from .partitions import oracle_series
from .qalg import (
    ONE,
    ZERO,
    IntPoly,
    QSeries,
    XQSeries,
    q_factorial,
    q_int,
    qpoch,
    recip_poch,
    series_from_poly,
    series_recip,
)

ONE_MINUS_Q = IntPoly((1, -1))


def _one_minus_q_pow(e: int) -> IntPoly:
    return ONE_MINUS_Q ** e


def a_direct(m: int, n: int) -> IntPoly:
    """``a(m, n)`` summed over all repeat positions ``1 <= i_1 < ... < i_m <= m + n``."""
    if m < 0 or n < 0:
        return ZERO
    total = ZERO
    big = 2 * m + n + 1
    for idx in combinations(range(1, m + n + 1), m):
        term = IntPoly.monomial(sum(idx))
        for j, i in enumerate(idx, start=1):
            term = term * (ONE - IntPoly.monomial(big - i - j))
        total = total + term
    return total


@lru_cache(maxsize=None)
def a_recur(m: int, n: int) -> IntPoly:
    """``a(m, n) = q^m (1 - q^{2m+n-1}) a(m-1, n) + q^m a(m, n-1)``, ``a(0, 0) = 1``."""
    if m < 0 or n < 0:
        return ZERO
    if m == 0 and n == 0:
        return ONE
    out = a_recur(m, n - 1).shift(m) if n else ZERO
    if m:
        out = out + (a_recur(m - 1, n) * (ONE - IntPoly.monomial(2 * m + n - 1))).shift(m)
    return out


def a_closed_n0(m: int) -> IntPoly:
    """``a(m, 0) = q^{C(m+1,2)} (q; q^2)_m``."""
    return qpoch(m, step=2).shift(comb(m + 1, 2))


@lru_cache(maxsize=None)
def b_poly(m: int, n: int) -> IntPoly:
    """``b(m, n) = [2m+n-1]_q b(m-1, n) + q^m b(m, n-1)``, ``b(0, 0) = 1``."""
    if m < 0 or n < 0:
        return ZERO
    if m == 0 and n == 0:
        return ONE
    out = b_poly(m, n - 1).shift(m) if n else ZERO
    if m:
        out = out + q_int(2 * m + n - 1) * b_poly(m - 1, n)
    return out


def parts_count(index: tuple[int, ...]) -> int:
    """``N = k n_k + ... + 2 n_2 + n_1`` for an index tuple written ``(n_k, ..., n_1)``."""
    k = len(index)
    return sum((k - pos) * v for pos, v in enumerate(index))


@lru_cache(maxsize=None)
def b_poly_k(k: int, index: tuple[int, ...]) -> IntPoly:
    """General-k b-polynomial; ``index`` is ``(n_k, ..., n_1)``.

    With ``N = sum j n_j`` the recurrence is

        b = sum_{j=1..k} [N-1]_q ... [N-j+1]_q * q^{sum_{i>j} (i-j) n_i} * b(n_j - 1)
    """
    index = tuple(index)
    if len(index) != k or k < 1:
        raise ValueError(f"index must have length k={k}: {index}")
    if any(v < 0 for v in index):
        return ZERO
    if not any(index):
        return ONE
    n = {k - pos: v for pos, v in enumerate(index)}  # n[j] = n_j
    N = sum(j * v for j, v in n.items())
    out = ZERO
    for j in range(1, k + 1):
        if n[j] == 0:
            continue
        lowered = tuple(v - 1 if k - pos == j else v for pos, v in enumerate(index))
        prev = b_poly_k(k, lowered)
        if prev.is_zero():
            continue
        factor = ONE
        for i in range(2, j + 1):
            factor = factor * q_int(N - i + 1)
        shift = sum((i - j) * n[i] for i in range(j + 1, k + 1))
        out = out + (factor * prev).shift(shift)
    return out


def iter_indices(k: int, xmax: int) -> Iterator[tuple[int, ...]]:
    """All ``(n_k, ..., n_1)`` with ``sum j n_j <= xmax``, in lexicographic order."""

    def rec(j, budget):
        if j == 0:
            yield ()
            return
        for v in range(budget // j + 1):
            for tail in rec(j - 1, budget - j * v):
                yield (v,) + tail

    yield from rec(k, xmax)


def iter_indices_by_sum(k: int, sum_bound: int) -> Iterator[tuple[int, ...]]:
    """All ``(n_k, ..., n_1)`` with non-negative entries summing to at most ``sum_bound``, graded by the sum."""

    def rec(slots, total):
        if slots == 1:
            yield (total,)
            return
        for v in range(total, -1, -1):
            for tail in rec(slots - 1, total - v):
                yield (v,) + tail

    for s in range(sum_bound + 1):
        yield from rec(k, s)


def base_exponent(index: tuple[int, ...]) -> int:
    """``sum_j C(s_j + 1, 2)`` with ``s_j = n_k + ... + n_j``: the weight of the smallest partition of this shape."""
    total = 0
    s = 0
    for v in index:
        s += v
        total += comb(s + 1, 2)
    return total


def one_minus_q_exponent(index: tuple[int, ...]) -> int:
    k = len(index)
    return sum((k - pos - 1) * v for pos, v in enumerate(index))


def rhs_term(k: int, index: tuple[int, ...], qmax: int, *, fast: bool = False) -> QSeries:
    """The summand of the right-hand side belonging to ``index`` (its x-degree is :func:`parts_count`)."""
    N = parts_count(index)
    E = base_exponent(index)
    e = one_minus_q_exponent(index)
    b = b_poly_k(k, index)
    if fast:
        # (1-q)^e / (q;q)_N == 1 / ((1-q)^(N-e) [N]_q!)
        den = _one_minus_q_pow(N - e) * q_factorial(N)
        return series_from_poly(b.shift(E), qmax) * series_recip(series_from_poly(den, qmax))
    num = (_one_minus_q_pow(e) * b).shift(E)
    return series_from_poly(num, qmax) * recip_poch(N, qmax)


def rhs_series(k: int, xmax: int, qmax: int, *, fast: bool = False) -> XQSeries:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    acc: dict[int, QSeries] = {}
    for index in iter_indices(k, xmax):
        if base_exponent(index) > qmax:
            continue
        N = parts_count(index)
        term = rhs_term(k, index, qmax, fast=fast)
        acc[N] = acc[N] + term if N in acc else term
    return XQSeries(acc, xmax, qmax)


def lhs_series(k: int, xmax: int, qmax: int) -> XQSeries:
    """``prod_{j=1..qmax} (1 + x q^j + ... + x^k q^{kj})`` cut at ``x^xmax q^qmax``.

    Factors with ``j > qmax`` only touch ``q``-degrees above ``qmax``.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    rows = [[0] * (qmax + 1) for _ in range(xmax + 1)]
    rows[0][0] = 1
    for j in range(1, qmax + 1):
        new = [row[:] for row in rows]
        for t in range(1, k + 1):
            sh = t * j
            if sh > qmax:
                break
            for L in range(t, xmax + 1):
                src = rows[L - t]
                dst = new[L]
                for w in range(qmax - sh + 1):
                    c = src[w]
                    if c:
                        dst[w + sh] += c
        rows = new
    return XQSeries({L: QSeries(r, qmax) for L, r in enumerate(rows)}, xmax, qmax)


def term_gen_pairs(m: int, n: int, repeats, qmax: int) -> QSeries:
    """Series counting (base, auxiliary) pairs for one 2-regular repeat pattern.

    ``q^{C(m+n+1,2) + sum i_j} prod_j (1 - q^{2m+n+1-i_j-j}) / (q; q)_{2m+n}``
    """
    repeats = tuple(repeats)
    num = IntPoly.monomial(comb(m + n + 1, 2) + sum(repeats))
    for j, i in enumerate(repeats, start=1):
        num = num * (ONE - IntPoly.monomial(2 * m + n + 1 - i - j))
    return series_from_poly(num, qmax) * recip_poch(2 * m + n, qmax)


def lemma_sum_series(xmax: int, qmax: int) -> XQSeries:
    """The k = 2 sum over ``(m, n)`` and repeat positions, evaluated term by term."""
    acc: dict[int, QSeries] = {}
    for m in range(xmax // 2 + 1):
        for n in range(xmax - 2 * m + 1):
            if comb(m + n + 1, 2) + comb(m + 1, 2) > qmax:
                continue
            N = 2 * m + n
            for repeats in combinations(range(1, m + n + 1), m):
                term = term_gen_pairs(m, n, repeats, qmax)
                acc[N] = acc[N] + term if N in acc else term
    return XQSeries(acc, xmax, qmax)


@dataclass
class VerificationReport:
    k: int
    xmax: int
    qmax: int
    left_method: str
    right_method: str
    mismatches: list[tuple[int, int, int, int]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        return "verified" if not self.mismatches else "mismatch"

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "k": self.k,
            "xmax": self.xmax,
            "qmax": self.qmax,
            "status": self.status,
            "methods": {"left": self.left_method, "right": self.right_method},
            "mismatches": [
                {"x": x, "q": q, "lhs": str(lc), "rhs": str(rc)} for x, q, lc, rc in self.mismatches
            ],
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


LEFT_METHODS = ("product", "enumeration")
RIGHT_METHODS = ("recurrence", "lemma-direct")


def _left(k, xmax, qmax, method):
    if method == "product":
        return lhs_series(k, xmax, qmax)
    if method == "enumeration":
        return oracle_series(k, xmax, qmax)
    raise ValueError(f"unknown left method {method!r}; choose from {LEFT_METHODS}")


def _right(k, xmax, qmax, method):
    if method == "recurrence":
        return rhs_series(k, xmax, qmax)
    if method == "lemma-direct":
        if k != 2:
            raise ValueError("the lemma-direct sum exists for k = 2 only")
        return lemma_sum_series(xmax, qmax)
    raise ValueError(f"unknown right method {method!r}; choose from {RIGHT_METHODS}")


def compare(left: XQSeries, right: XQSeries) -> list[tuple[int, int, int, int]]:
    """Every ``(x, q, left, right)`` where the two series disagree."""
    if (left.xmax, left.qmax) != (right.xmax, right.qmax):
        raise ValueError("series truncated differently")
    out = []
    for d in range(left.xmax + 1):
        lc, rc = left.coeff(d), right.coeff(d)
        for e in range(left.qmax + 1):
            if lc[e] != rc[e]:
                out.append((d, e, lc[e], rc[e]))
    return out


def verify_identity(
    k: int,
    xmax: int,
    qmax: int,
    left_method: str = "product",
    right_method: str = "recurrence",
    workers: int = 1,
) -> VerificationReport:
    if xmax < 0 or qmax < 0:
        raise ValueError("bounds must be >= 0")
    if left_method not in LEFT_METHODS:
        raise ValueError(f"unknown left method {left_method!r}")
    if right_method not in RIGHT_METHODS:
        raise ValueError(f"unknown right method {right_method!r}")
    t0 = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=2) as pool:
            lf = pool.submit(_left, k, xmax, qmax, left_method)
            rf = pool.submit(_right, k, xmax, qmax, right_method)
            left, right = lf.result(), rf.result()
    else:
        left = _left(k, xmax, qmax, left_method)
        right = _right(k, xmax, qmax, right_method)
    report = VerificationReport(k, xmax, qmax, left_method, right_method, compare(left, right))
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def ab_relation_check(bound: int) -> bool:
    """``a(m, n) == q^{C(m+1,2)} (1-q)^m b(m, n)`` for all ``m + n <= bound``, with both a-routes."""
    for m in range(bound + 1):
        for n in range(bound - m + 1):
            via_b = (_one_minus_q_pow(m) * b_poly(m, n)).shift(comb(m + 1, 2))
            if not (a_direct(m, n) == a_recur(m, n) == via_b):
                return False
    return True


def b_degree(m: int, n: int) -> int:
    """Degree of ``b(m, n)`` from ``D(m,n) = max(2m+n-2 + D(m-1,n), m + D(m,n-1))``."""
    if m == 0:
        return 0
    cands = [2 * m + n - 2 + b_degree(m - 1, n)]
    if n:
        cands.append(m + b_degree(m, n - 1))
    return max(cands)
