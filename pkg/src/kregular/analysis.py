"""Unimodality scans and q -> 1 limits of the b-polynomials.

At ``q = 1`` the two-index polynomial ``b(m, n)`` collapses to the Bessel
coefficient ``(2m+n)! / (m! n! 2^m)``. Note the ``n!`` in the denominator:
the form with ``(m+n)!`` is not even an integer at ``(2, 2)``, while
``b(2, 2)(1) = 45``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from .genfun import b_poly, b_poly_k, iter_indices_by_sum
from .qalg import IntPoly, q_binomial


def is_unimodal(p: IntPoly) -> bool:
    """Coefficients ``c_0..c_deg`` weakly rise then weakly fall; internal zeros count."""
    c = p.coeffs
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


@dataclass
class ScanReport:
    k: int
    sum_bound: int
    checked: int = 0
    counterexamples: list[tuple[tuple[int, ...], IntPoly]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def expected_count(self) -> int:
        """Tuples of ``k`` non-negative integers with sum at most ``sum_bound``."""
        return comb(self.sum_bound + self.k, self.k)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "k": self.k,
            "sum_bound": self.sum_bound,
            "checked": self.checked,
            "expected": self.expected_count,
            "status": "unimodal" if self.holds else "counterexample",
            "counterexamples": [
                {"index": list(idx), "poly": poly.to_json()} for idx, poly in self.counterexamples
            ],
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def scan_unimodality(
    k: int,
    sum_bound: int,
    b_func: Callable[[tuple[int, ...]], IntPoly] | None = None,
) -> ScanReport:
    """Check unimodality of every ``b(n_k, ..., n_1)`` whose indices sum to at most ``sum_bound``.

    ``b_func`` replaces the polynomial source (used to exercise the
    counterexample path). Counterexamples are collected, never raised.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if b_func is None:
        b_func = lambda idx: b_poly_k(k, idx)  # noqa: E731
    t0 = time.perf_counter()
    report = ScanReport(k, sum_bound)
    for idx in iter_indices_by_sum(k, sum_bound):
        poly = b_func(idx)
        report.checked += 1
        if not is_unimodal(poly):
            report.counterexamples.append((idx, poly))
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def limit_q1(p: IntPoly) -> int:
    return sum(p.coeffs)


def bessel_coeff(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("indices must be >= 0")
    return factorial(2 * m + n) // (factorial(m) * factorial(n) * 2 ** m)


def bessel_limit_check(bound: int) -> bool:
    return all(
        limit_q1(b_poly(m, n)) == bessel_coeff(m, n)
        for m in range(bound + 1)
        for n in range(bound - m + 1)
    )


def q_bessel_analog(m: int, n: int) -> IntPoly:
    """``[n'+k']_q! / ([n']_q! [k']_q!)`` with ``n' = m + n`` and ``k' = m``."""
    return q_binomial(2 * m + n, m)


def q_bessel_mismatch(bound: int) -> list[tuple[int, int]]:
    """Index pairs with ``m >= 1`` and ``m + n <= bound`` where ``b(m, n)`` differs from the q-analog."""
    return [
        (m, n)
        for m in range(1, bound + 1)
        for n in range(bound - m + 1)
        if b_poly(m, n) != q_bessel_analog(m, n)
    ]
