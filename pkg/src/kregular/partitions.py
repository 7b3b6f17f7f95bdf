"""Partitions, k-regularity, and brute-force enumeration.

Parts are stored weakly increasing. The enumerators here are deliberately
naive; they serve as ground truth for the generating-function code.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .qalg import QSeries, XQSeries


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read the space-separated form, e.g. ``"3 6 10 10 15 19 19"``."""
        return cls(tuple(int(tok) for tok in text.split()))

    @classmethod
    def from_parts(cls, parts) -> Partition:
        return cls(tuple(sorted(parts)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return " ".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({str(self)!r})"

    def max_multiplicity(self) -> int:
        return max(Counter(self.parts).values(), default=0)


EMPTY = Partition()


@dataclass(frozen=True)
class MultiplicityProfile:
    """Distinct part sizes in increasing order and how often each occurs."""

    sizes: tuple[int, ...]
    mults: tuple[int, ...]

    def is_k_regular(self, k: int) -> bool:
        return all(c <= k for c in self.mults)

    @property
    def pairs(self) -> int:
        """Number of sizes occurring exactly twice (``m`` in the 2-regular setting)."""
        return sum(1 for c in self.mults if c == 2)

    @property
    def singletons(self) -> int:
        return sum(1 for c in self.mults if c == 1)

    @property
    def repeat_positions(self) -> tuple[int, ...]:
        """1-based indices of the repeated sizes among the distinct sizes."""
        return tuple(i + 1 for i, c in enumerate(self.mults) if c > 1)


def profile(p: Partition) -> MultiplicityProfile:
    counts = Counter(p.parts)
    sizes = tuple(sorted(counts))
    return MultiplicityProfile(sizes, tuple(counts[s] for s in sizes))


def is_k_regular(p: Partition, k: int) -> bool:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return p.max_multiplicity() <= k


def _gen(n: int, smallest: int, k: int | None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for part in range(smallest, n + 1):
        cap = n // part if k is None else min(k, n // part)
        for c in range(cap, 0, -1):
            rest = n - c * part
            if rest and rest < part + 1:
                continue
            for tail in _gen(rest, part + 1, k):
                yield (part,) * c + tail


def iter_k_regular(n: int, k: int | None = None) -> Iterator[Partition]:
    """Yield partitions of ``n`` with every multiplicity at most ``k``, lexicographically.

    ``k=None`` means no bound on multiplicities.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k is not None and k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    for parts in _gen(n, 1, k):
        yield Partition(parts)


def enumerate_k_regular(n: int, k: int | None = None) -> list[Partition]:
    return list(iter_k_regular(n, k))


@lru_cache(maxsize=None)
def _count(n: int, smallest: int, k: int | None, length: int | None) -> int:
    if n == 0:
        return 1 if length in (None, 0) else 0
    if length is not None and length <= 0:
        return 0
    total = 0
    for part in range(smallest, n + 1):
        cap = n // part if k is None else min(k, n // part)
        for c in range(1, cap + 1):
            total += _count(n - c * part, part + 1, k, None if length is None else length - c)
    return total


def count_k_regular(n: int, k: int | None = None, length: int | None = None) -> int:
    """Number of partitions of ``n`` with multiplicities at most ``k`` (and ``length`` parts, if given)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _count(n, 1, k, length)


def oracle_series(k: int | None, xmax: int, qmax: int) -> XQSeries:
    """Bivariate generating function of k-regular partitions, built by listing them.

    Coefficient of ``x**L q**W`` is the number of k-regular partitions of
    ``W`` with ``L`` parts.
    """
    table = [[0] * (qmax + 1) for _ in range(xmax + 1)]
    for w in range(qmax + 1):
        for p in iter_k_regular(w, k):
            if p.length <= xmax:
                table[p.length][w] += 1
    return XQSeries({d: QSeries(row, qmax) for d, row in enumerate(table)}, xmax, qmax)
