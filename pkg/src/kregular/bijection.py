"""Reduction of a k-regular partition to a base partition plus an auxiliary partition.

The backward direction (:func:`reduce`) walks the distinct part sizes
``mu_1 < mu_2 < ... < mu_s`` in order.  At step ``j`` it subtracts
``mu_j - j`` from every part ``>= mu_j`` and records that many copies of
``r`` (the number of such parts) in the auxiliary partition ``lam``.  What
remains is the base partition: sizes ``1..s`` carrying the original
multiplicities.

The forward direction (:func:`build`) starts from the base and, for each
``r = 1..N``, raises the largest ``r`` parts by one as many times as ``r``
occurs in ``lam``.  A value of ``r`` that would raise only some copies of
a repeated size is rejected; for k = 2 those values are exactly
:func:`forbidden_sizes`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .partitions import Partition, profile


class BijectionError(ValueError):
    """Invalid input to :func:`reduce` or :func:`build`."""


class ForbiddenSizeError(BijectionError):
    def __init__(self, size: int, index: int, reason: str):
        self.size = size
        self.index = index
        super().__init__(f"lambda part {size} (index {index}): {reason}")


@dataclass(frozen=True)
class ReducedPair:
    """Base multiplicity word plus auxiliary partition.

    ``word[i]`` is how many times size ``i + 1`` appears in the base
    partition.
    """

    k: int
    word: tuple[int, ...]
    lam: Partition

    @property
    def base(self) -> Partition:
        return base_partition(self.word)

    @property
    def total_parts(self) -> int:
        return sum(self.word)

    @property
    def pairs(self) -> int:
        return sum(1 for c in self.word if c == 2)

    @property
    def singletons(self) -> int:
        return sum(1 for c in self.word if c == 1)

    @property
    def repeat_positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.word) if c > 1)

    def base_weight(self) -> int:
        return sum((i + 1) * c for i, c in enumerate(self.word))

    @classmethod
    def from_base(cls, base: Partition, lam: Partition, k: int) -> ReducedPair:
        return cls(k, base_word(base), lam)


def base_partition(word) -> Partition:
    parts: list[int] = []
    for i, c in enumerate(word):
        parts.extend([i + 1] * c)
    return Partition(tuple(parts))


def base_word(base: Partition) -> tuple[int, ...]:
    """Multiplicity word of a base partition; raises if sizes are not ``1..s``."""
    prof = profile(base)
    if prof.sizes != tuple(range(1, len(prof.sizes) + 1)):
        raise BijectionError(f"not a base partition (sizes must be 1..s): {base}")
    return prof.mults


def reduce_trace(p: Partition, k: int) -> list[tuple[Partition, Partition]]:
    """Every intermediate ``(partition, lambda so far)``, one per distinct part size."""
    if k < 1:
        raise BijectionError(f"k must be >= 1, got {k}")
    if p.max_multiplicity() > k:
        raise BijectionError(f"{p} is not {k}-regular")
    mu = list(p.parts)
    lam: list[int] = []
    states = []
    for j in range(1, len(set(mu)) + 1):
        # current j-th smallest distinct size; earlier steps already shifted it
        current = sorted(set(mu))[j - 1]
        d = current - j
        r = sum(1 for v in mu if v >= current)
        mu = [v - d if v >= current else v for v in mu]
        lam.extend([r] * d)
        states.append((Partition(tuple(mu)), Partition.from_parts(lam)))
    return states


def reduce(p: Partition, k: int) -> ReducedPair:
    states = reduce_trace(p, k)
    if not states:
        return ReducedPair(k, (), Partition())
    base, lam = states[-1]
    return ReducedPair(k, profile(base).mults, lam)


def block_split_sizes(word) -> set[int]:
    """Values of ``r`` for which the largest ``r`` base parts cut through a run of equal sizes."""
    out: set[int] = set()
    above = 0
    for c in reversed(word):
        out.update(range(above + 1, above + c))
        above += c
    return out


def build(r: ReducedPair) -> Partition:
    if any(c < 1 for c in r.word):
        raise BijectionError(f"multiplicity word must be positive: {r.word}")
    if any(c > r.k for c in r.word):
        raise BijectionError(f"base word {r.word} is not {r.k}-regular")
    mu = list(base_partition(r.word).parts)
    n_parts = len(mu)
    lam = r.lam.parts
    for idx, size in enumerate(lam):
        if size > n_parts:
            raise ForbiddenSizeError(size, idx, f"exceeds the number of parts {n_parts}")
    freq = Counter(lam)
    for size in range(1, n_parts + 1):
        f = freq.get(size, 0)
        if not f:
            continue
        cut = n_parts - size
        if cut > 0 and mu[cut - 1] == mu[cut]:
            raise ForbiddenSizeError(size, lam.index(size), "splits a run of repeated parts")
        for i in range(cut, n_parts):
            mu[i] += f
        assert all(a <= b for a, b in zip(mu, mu[1:])), mu
    return Partition(tuple(mu))


def forbidden_sizes(m: int, n: int, repeats) -> set[int]:
    """Auxiliary part sizes that cannot occur for a 2-regular base with ``m`` pairs and ``n`` singletons."""
    repeats = tuple(repeats)
    if m < 0 or n < 0 or len(repeats) != m:
        raise ValueError(f"need exactly m={m} repeat positions, got {repeats}")
    if any(not 1 <= i <= m + n for i in repeats) or any(a >= b for a, b in zip(repeats, repeats[1:])):
        raise ValueError(f"repeat positions must satisfy 1 <= i_1 < ... < i_m <= {m + n}: {repeats}")
    return {2 * m + n + 1 - i - j for j, i in enumerate(repeats, start=1)}


def word_from_repeats(m: int, n: int, repeats) -> tuple[int, ...]:
    rep = set(repeats)
    return tuple(2 if i in rep else 1 for i in range(1, m + n + 1))


def partitions_with_word(word, weight_bound: int):
    """Every partition whose multiplicity word is ``word`` and whose weight is at most ``weight_bound``."""
    word = tuple(word)
    s = len(word)

    def rec(i, prev, budget, acc):
        if i == s:
            yield Partition(tuple(acc))
            return
        size = prev + 1
        # remaining sizes are at least size, size+1, ...
        while sum(word[t] * (size + t - i) for t in range(i, s)) <= budget:
            yield from rec(i + 1, size, budget - word[i] * size, acc + [size] * word[i])
            size += 1

    yield from rec(0, 0, weight_bound, [])


def forbidden_sizes_empirical(k: int, word, weight_bound: int) -> set[int]:
    """Sizes ``1..N`` never seen in ``lam`` over all k-regular partitions with this base word."""
    word = tuple(word)
    if any(c > k for c in word):
        raise ValueError(f"word {word} is not {k}-regular")
    seen: set[int] = set()
    for p in partitions_with_word(word, weight_bound):
        seen.update(reduce(p, k).lam.parts)
    return set(range(1, sum(word) + 1)) - seen


def format_trace(p: Partition, k: int) -> list[str]:
    lines = [
        f"step {i}: partition={part} lambda={lam}"
        for i, (part, lam) in enumerate(reduce_trace(p, k), start=1)
    ]
    red = reduce(p, k)
    word = " ".join(map(str, red.word))
    tail = f"base={red.base} word={word}"
    if k == 2:
        forb = forbidden_sizes(red.pairs, red.singletons, red.repeat_positions)
        tail += " forbidden=" + " ".join(map(str, sorted(forb)))
    lines.append(tail)
    return lines

