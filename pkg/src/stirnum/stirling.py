"""Stirling and r-Stirling numbers of both kinds.

Values come from memoized triangular tables grown by the usual recurrences.
The alternating-sum and Broder forms are kept as independent routes for
verification, and the exhaustive counters at the bottom are the
combinatorial ground truth for small ``n``.
"""
from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import binomial, power

SECOND = "second"
FIRST = "first-unsigned"

PARTITION_ENUM_MAX_N = 12
PERMUTATION_ENUM_MAX_N = 9


class StirlingTable:
    """Triangular table of non-negative integers for one ``(kind, r)`` pair.

    ``rows[n][k]`` holds the value at ``(n, k)`` for ``0 <= k <= n``; entries
    with ``n < r`` or ``k < r`` are zero and ``rows[r][r] == 1``. Signs for
    the first kind are applied by the readers, never stored.

    Growth is serialized by a lock; a row is published only once complete,
    so concurrent readers see either the old or the extended table.
    """

    def __init__(self, kind: str, r: int = 0):
        if kind not in (SECOND, FIRST):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        if r < 0:
            raise ValueError(f"r must be non-negative, got {r}")
        self.kind = kind
        self.r = r
        self.rows: list[list[int]] = []
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"StirlingTable(kind={self.kind!r}, r={self.r}, rows={len(self.rows)})"

    def _next_row(self, n: int) -> list[int]:
        r = self.r
        if n < r:
            return [0] * (n + 1)
        if n == r:
            row = [0] * (n + 1)
            row[r] = 1
            return row
        prev = self.rows[n - 1]
        row = [0] * (n + 1)
        for k in range(r, n + 1):
            stay = prev[k] if k < n else 0
            left = prev[k - 1] if k >= 1 else 0
            # second kind: new element joins one of k blocks or opens its own;
            # first kind: it is inserted after any of n-1 elements or is a fixed point
            weight = k if self.kind == SECOND else n - 1
            row[k] = weight * stay + left
        return row

    def ensure(self, n: int) -> None:
        if n < len(self.rows):
            return
        with self._lock:
            while len(self.rows) <= n:
                self.rows.append(self._next_row(len(self.rows)))

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.ensure(n)
        return self.rows[n][k]


_tables: dict[tuple[str, int], StirlingTable] = {}
_tables_lock = threading.Lock()


def get_table(kind: str, r: int = 0) -> StirlingTable:
    """Process-wide memo table for ``(kind, r)``."""
    key = (kind, r)
    table = _tables.get(key)
    if table is None:
        with _tables_lock:
            table = _tables.get(key)
            if table is None:
                table = StirlingTable(kind, r)
                _tables[key] = table
    return table


def clear_tables() -> None:
    with _tables_lock:
        _tables.clear()


def stirling2(n: int, k: int) -> int:
    """S(n, k): partitions of an n-set into k nonempty blocks."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return get_table(SECOND, 0).get(n, k)


def stirling2_explicit(n: int, k: int) -> int:
    """S(n, k) from ``((-1)**k / k!) * sum_j C(k, j) (-1)**j j**n``."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    total = sum(binomial(k, j) * (-1) ** j * power(j, n) for j in range(k + 1))
    q, rem = divmod((-1) ** k * total, factorial(k))
    if rem:
        raise ArithmeticError(f"alternating sum for S({n},{k}) not divisible by {k}!")
    return q


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned first kind: permutations of n elements with k cycles."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return get_table(FIRST, 0).get(n, k)


def stirling1_signed(n: int, k: int) -> int:
    """s(n, k), the coefficient of ``x**k`` in the falling factorial."""
    return (-1) ** ((n - k) & 1) * stirling1_unsigned(n, k)


def rstirling2(r: int, n: int, k: int) -> int:
    """S_r(n, k): partitions of {1..n} into k blocks with 1..r in distinct blocks."""
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    if n < 0:
        return 0
    return get_table(SECOND, r).get(n, k)


def rstirling2_via_broder(r: int, n: int, k: int) -> int:
    """S_r(n + r, k + r) as ``sum_p C(n, p) S(p, k) r**(n - p)``.

    Note the shifted indexing: the arguments are ``n`` and ``k``, the value
    is the r-Stirling number at ``(n + r, k + r)``.
    """
    if min(r, n, k) < 0:
        raise ValueError("r, n, k must be non-negative")
    return sum(binomial(n, p) * stirling2(p, k) * power(r, n - p) for p in range(n + 1))


def rstirling1_unsigned(r: int, n: int, k: int) -> int:
    """Unsigned r-Stirling first kind: permutations with 1..r in distinct cycles."""
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    if n < 0:
        return 0
    return get_table(FIRST, r).get(n, k)


def rstirling1_signed(r: int, n: int, k: int) -> int:
    return (-1) ** ((n - k) & 1) * rstirling1_unsigned(r, n, k)


def rstirling2_sum_form(r: int, n: int, k: int) -> Fraction:
    """``sum_j C(k, j) (-1)**j (r + j)**n``, the alternating sum matched
    against ``(-1)**k k! S_r(n + r, k + r)``."""
    return Fraction(sum(binomial(k, j) * (-1) ** j * power(r + j, n) for j in range(k + 1)))


# --- exhaustive oracles -------------------------------------------------------


@lru_cache(maxsize=None)
def _partition_tally(n: int) -> dict[tuple[int, int], int]:
    # Maps (blocks, s) -> count, where s is the largest r such that 1..r sit
    # in pairwise distinct blocks. Enumerates restricted growth strings.
    tally: dict[tuple[int, int], int] = {}
    if n == 0:
        tally[(0, 0)] = 1
        return tally
    a = [0] * n
    maxes = [0] * n
    while True:
        blocks = maxes[-1] + 1
        s = 0
        while s < n and a[s] == s:
            s += 1
        key = (blocks, s)
        tally[key] = tally.get(key, 0) + 1
        i = n - 1
        while i > 0 and a[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            break
        a[i] += 1
        maxes[i] = max(maxes[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            maxes[j] = maxes[i]
    return tally


def brute_partitions(n: int, k: int, r: int = 0) -> int:
    """Count set partitions of {1..n} into k blocks with 1..r separated, exhaustively."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > PARTITION_ENUM_MAX_N:
        raise ValueError(f"partition enumeration is capped at n={PARTITION_ENUM_MAX_N}")
    r_eff = min(r, n)
    if r > n:
        return 0
    return sum(c for (blocks, s), c in _partition_tally(n).items() if blocks == k and s >= r_eff)


def brute_bell(n: int) -> int:
    if n > PARTITION_ENUM_MAX_N:
        raise ValueError(f"partition enumeration is capped at n={PARTITION_ENUM_MAX_N}")
    return sum(_partition_tally(n).values())


def _cycle_labels(perm: tuple[int, ...]) -> list[int]:
    label = [-1] * len(perm)
    c = 0
    for start in range(len(perm)):
        if label[start] >= 0:
            continue
        j = start
        while label[j] < 0:
            label[j] = c
            j = perm[j]
        c += 1
    return label


@lru_cache(maxsize=None)
def _permutation_tally(n: int) -> dict[tuple[int, int], int]:
    tally: dict[tuple[int, int], int] = {}
    for perm in itertools.permutations(range(n)):
        label = _cycle_labels(perm)
        cycles = max(label) + 1 if n else 0
        s = 0
        seen: set[int] = set()
        while s < n and label[s] not in seen:
            seen.add(label[s])
            s += 1
        key = (cycles, s)
        tally[key] = tally.get(key, 0) + 1
    return tally


def brute_cycle_permutations(n: int, k: int, r: int = 0) -> int:
    """Count permutations of {1..n} with k cycles and 1..r in distinct cycles."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > PERMUTATION_ENUM_MAX_N:
        raise ValueError(f"permutation enumeration is capped at n={PERMUTATION_ENUM_MAX_N}")
    if r > n:
        return 0
    return sum(c for (cycles, s), c in _permutation_tally(n).items() if cycles == k and s >= r)
