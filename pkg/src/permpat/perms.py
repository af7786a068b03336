"""Permutations in one-line notation and exact 321-occurrence counting.

Conventions used throughout the package:

- A permutation of length n is a rearrangement of the values 1..n, written
  in one-line notation: the tuple (p(1), ..., p(n)). Values and positions
  are both 1-based.
- The text form of any value sequence is the values space-separated on a
  single line, e.g. "3 2 1 4".
- An occurrence of a pattern of length k in p is an increasing position
  tuple i_1 < ... < i_k whose values are order-isomorphic to the pattern.
  "Contains 321" therefore means some i < j < k has p_i > p_j > p_k.

All counts are exact Python integers, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MultipleOccurrences, NoOccurrence, NotAPermutation


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> Permutation((3, 1, 2)).n
    3
    >>> str(Permutation((3, 1, 2)))
    '3 1 2'
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        seen = [False] * (n + 1)
        for v in self.values:
            if not isinstance(v, int) or v < 1 or v > n or seen[v]:
                raise NotAPermutation(
                    f"{list(self.values)} is not a permutation of 1..{n}"
                )
            seen[v] = True

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


@dataclass(frozen=True)
class ValueSequence:
    """A sequence of distinct positive integers over an arbitrary value set.

    Unlike Permutation, the support need not be 1..n; it can be any set of
    distinct positive values (e.g. a rearrangement of {b..n}).
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        seen = set()
        for v in self.values:
            if not isinstance(v, int) or v < 1 or v in seen:
                raise NotAPermutation(
                    f"{list(self.values)} is not a sequence of distinct positive integers"
                )
            seen.add(v)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


@dataclass(frozen=True)
class Occurrence321:
    """Positions (i, j, k) and values (c, b, a) of one 321 occurrence.

    Positions are 1-based and strictly increasing; values satisfy c > b > a.
    """

    positions: tuple[int, int, int]
    values: tuple[int, int, int]

    def __post_init__(self) -> None:
        i, j, k = self.positions
        c, b, a = self.values
        if not (1 <= i < j < k):
            raise ValueError(f"positions {self.positions} not strictly increasing")
        if not (c > b > a >= 1):
            raise ValueError(f"values {self.values} not strictly decreasing")


def from_one_line(raw: Iterable[int]) -> Permutation:
    """Validate raw integers as a permutation of 1..n.

    >>> from_one_line([3, 2, 1]).values
    (3, 2, 1)
    """
    return Permutation(tuple(raw))


def parse_one_line(text: str) -> Permutation:
    """Parse the space-separated text form, e.g. "3 2 1 4"."""
    return from_one_line(_parse_ints(text))


def parse_value_sequence(text: str) -> ValueSequence:
    return ValueSequence(tuple(_parse_ints(text)))


def _parse_ints(text: str) -> list[int]:
    out = []
    for tok in text.split():
        try:
            out.append(int(tok))
        except ValueError:
            raise NotAPermutation(f"not an integer: {tok!r}") from None
    return out


def standardize(values: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct values.

    >>> standardize((5, 9, 7)).values
    (1, 3, 2)
    """
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[v] for v in values))


def count_occurrences(values: Sequence[int], pattern: Sequence[int]) -> int:
    """Exact number of occurrences of `pattern` among subsequences of `values`.

    Both arguments are plain sequences of distinct integers. Counting is a
    depth-first extension of partial matches; a branch is abandoned as soon
    as the remaining positions cannot complete the pattern or the next value
    falls outside the interval forced by the values already matched.
    """
    n, k = len(values), len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    # For each pattern slot t, the slots (earlier in the pattern) holding the
    # closest value below resp. above pattern[t]; they bound the candidates.
    low_slot: list[int | None] = []
    high_slot: list[int | None] = []
    for t in range(k):
        below = [s for s in range(t) if pattern[s] < pattern[t]]
        above = [s for s in range(t) if pattern[s] > pattern[t]]
        low_slot.append(max(below, key=lambda s: pattern[s]) if below else None)
        high_slot.append(min(above, key=lambda s: pattern[s]) if above else None)

    chosen = [0] * k
    neg_inf, pos_inf = float("-inf"), float("inf")

    def extend(t: int, start: int) -> int:
        lo = chosen[low_slot[t]] if low_slot[t] is not None else neg_inf
        hi = chosen[high_slot[t]] if high_slot[t] is not None else pos_inf
        last = n - (k - t)
        total = 0
        if t == k - 1:
            for pos in range(start, last + 1):
                if lo < values[pos] < hi:
                    total += 1
            return total
        for pos in range(start, last + 1):
            v = values[pos]
            if lo < v < hi:
                chosen[t] = v
                total += extend(t + 1, pos + 1)
        return total

    return extend(0, 0)


def count_pattern(perm: Permutation, pattern: Permutation) -> int:
    """Exact number of occurrences of `pattern` in `perm`.

    >>> count_pattern(from_one_line([4, 3, 2, 1]), from_one_line([3, 2, 1]))
    4
    """
    return count_occurrences(perm.values, pattern.values)


PATTERN_321 = Permutation((3, 2, 1))


def count_321(perm: Permutation) -> int:
    """Number of 321 occurrences, as a sum over the middle position.

    For each j the contribution is (#i < j with p_i > p_j) times
    (#k > j with p_k < p_j). Quadratic time, exact.

    >>> count_321(from_one_line([3, 2, 1, 4]))
    1
    """
    v = perm.values
    n = len(v)
    total = 0
    for j in range(n):
        vj = v[j]
        left = 0
        for i in range(j):
            if v[i] > vj:
                left += 1
        if left == 0:
            continue
        right = 0
        for k in range(j + 1, n):
            if v[k] < vj:
                right += 1
        total += left * right
    return total


class _Fenwick:
    """Prefix-count accumulator over the value range 1..size."""

    def __init__(self, size: int) -> None:
        self.size = size
        self.tree = [0] * (size + 1)

    def add(self, index: int) -> None:
        while index <= self.size:
            self.tree[index] += 1
            index += index & -index

    def prefix(self, index: int) -> int:
        total = 0
        while index > 0:
            total += self.tree[index]
            index -= index & -index
        return total


def count_321_fenwick(perm: Permutation) -> int:
    """Same count as count_321 in O(n log n) via prefix-count accumulators."""
    v = perm.values
    n = len(v)
    greater_before = [0] * n
    tree = _Fenwick(n)
    for j in range(n):
        greater_before[j] = j - tree.prefix(v[j])
        tree.add(v[j])
    total = 0
    tree = _Fenwick(n)
    for j in range(n - 1, -1, -1):
        total += greater_before[j] * tree.prefix(v[j] - 1)
        tree.add(v[j])
    return total


def find_unique_321(perm: Permutation) -> Occurrence321:
    """The unique 321 occurrence of `perm`, as positions and values.

    Plain triple scan; stops as soon as a second occurrence shows up.
    Raises NoOccurrence when the count is 0 and MultipleOccurrences when
    it is at least 2.

    >>> find_unique_321(from_one_line([3, 2, 1, 4]))
    Occurrence321(positions=(1, 2, 3), values=(3, 2, 1))
    """
    v = perm.values
    n = len(v)
    found: Occurrence321 | None = None
    for i in range(n):
        for j in range(i + 1, n):
            if v[j] >= v[i]:
                continue
            for k in range(j + 1, n):
                if v[k] < v[j]:
                    if found is not None:
                        raise MultipleOccurrences(
                            f"{perm} contains more than one 321 occurrence"
                        )
                    found = Occurrence321((i + 1, j + 1, k + 1), (v[i], v[j], v[k]))
    if found is None:
        raise NoOccurrence(f"{perm} contains no 321 occurrence")
    return found
