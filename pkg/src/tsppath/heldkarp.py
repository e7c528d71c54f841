"""Exact solver: Held-Karp dynamic programming over interior-city subsets.

For a nonempty set S of interior cities (labels 2..n-1) and an endpoint
i in S, let best(S, i) be the length of the shortest path that starts at
city 1, visits every city of S - {i}, and ends at i.  Then

    best({i}, i) = dist(1, i)
    best(S, i)   = min over j in S - {i} of  best(S - {i}, j) + dist(j, i)

and the optimal 1-to-n path length is the root aggregation

    min over j in 2..n-1 of  best({2..n-1}, j) + dist(j, n)

(for n = 2 the answer is dist(1, 2) directly).  The table is filled
bottom-up in increasing numeric mask order; clearing a bit always yields
a smaller mask, so every dependency is ready when needed.  Each (S, i)
pair is computed exactly once and counted, which makes the reported state
count a machine-independent check: it depends on n only, never on the
distances.

Subset masks cover interior cities only: bit k set means city k + 2 is in
S.  City n never appears in a mask, which halves the table and makes the
state count exactly (n-2) * 2^(n-3) interior states plus one root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from numba import njit

from .errors import DomainError, SizeError
from .instance import Instance

#: Largest n solved without an explicit override.  The table holds
#: (n-2) * 2^(n-2) int64 entries, about 0.7 GB at n = 24.
DEFAULT_SIZE_CAP = 24

_U64_MAX = 2**64 - 1

# Cells that were never computed keep this marker.  Real lengths are >= 1,
# so a sentinel leaking into a result is loudly wrong instead of silently
# absorbed the way an "infinity" initializer would be.
_UNFILLED = -1


@dataclass(frozen=True)
class Solution:
    """Result of an exact solve: optimum, one optimal path, and work done.

    ``states_computed`` counts distinct memoized (subset, endpoint) states
    for the dynamic program, or evaluated orderings for the brute-force
    reference.
    """

    length: int
    path: tuple[int, ...]
    states_computed: int


class StateTable:
    """Memoized best(S, i) values for one instance.

    States are addressed by (interior subset mask, endpoint city label);
    an entry exists only when the endpoint is a member of the subset.
    ``filled_count`` is the number of interior states computed, which the
    solver reports as ``states_computed`` after adding 1 for the root.
    """

    def __init__(self, n: int, values: np.ndarray, filled_count: int):
        self.n = n
        self.filled_count = filled_count
        self._values = values

    @property
    def interior_bits(self) -> int:
        """Width of the subset masks (number of interior cities)."""
        return self.n - 2

    def value(self, mask: int, city: int) -> int:
        """Stored best(S, i) for subset ``mask`` ending at ``city``.

        Raises KeyError when the state does not exist (city outside the
        subset or outside 2..n-1).
        """
        m = self.n - 2
        if not 2 <= city <= self.n - 1:
            raise KeyError(f"city {city} is not interior (2..{self.n - 1})")
        bit = city - 2
        if not 0 < mask < (1 << m):
            raise KeyError(f"mask {mask:#x} is not a nonempty {m}-bit subset")
        if not (mask >> bit) & 1:
            raise KeyError(f"city {city} is not in subset mask {mask:#x}")
        v = int(self._values[mask * m + bit])
        if v == _UNFILLED:
            raise RuntimeError(f"state (mask={mask:#x}, city={city}) was never filled")
        return v


def interior_mask(cities: Iterable[int], n: int) -> int:
    """Subset mask for a set of interior city labels (bit k is city k + 2)."""
    mask = 0
    for c in cities:
        if not 2 <= c <= n - 1:
            raise DomainError(f"city {c} is not interior for n={n}")
        mask |= 1 << (c - 2)
    return mask


@njit(cache=True)
def _fill_kernel(m, dist, dp):
    """Fill best(S, i) for every nonempty mask in increasing numeric order.

    dp is flat with layout dp[mask * m + bit]; returns the number of
    states written.  Only members of the predecessor subset enter the min.
    """
    filled = 0
    for mask in range(1, 1 << m):
        base = mask * m
        for b in range(m):
            if not (mask >> b) & 1:
                continue
            prev = mask ^ (1 << b)
            if prev == 0:
                dp[base + b] = dist[0, b + 1]
                filled += 1
                continue
            pbase = prev * m
            best = np.int64(0)
            first = True
            for j in range(m):
                if not (prev >> j) & 1:
                    continue
                v = dp[pbase + j] + dist[j + 1, b + 1]
                if first or v < best:
                    best = v
                    first = False
            dp[base + b] = best
            filled += 1
    return filled


def compute_table(inst: Instance, size_cap: int | None = DEFAULT_SIZE_CAP) -> StateTable:
    """Run the dynamic program and return the filled state table.

    ``size_cap`` bounds the accepted n (pass None to lift it; the table
    grows as 2^n, so overriding is an explicit opt-in to the memory cost).
    """
    n = inst.n
    if size_cap is not None and n > size_cap:
        raise SizeError(
            f"n={n} exceeds the size cap {size_cap}; "
            f"override the cap to accept the exponential table"
        )
    m = n - 2
    dist = np.array(inst.dist, dtype=np.int64)
    dp = np.full(m << m, _UNFILLED, dtype=np.int64)
    filled = int(_fill_kernel(m, dist, dp)) if m > 0 else 0
    return StateTable(n, dp, filled)


def reconstruct_path(table: StateTable, inst: Instance) -> tuple[int, ...]:
    """Recover an optimal path by walking the table backward from the root.

    At each step the predecessor minimizing best(S - {i}, j) + dist(j, i)
    is chosen.  Ties go to the largest city label, so fully tied stretches
    come out in ascending order, matching the brute-force reference's
    first-in-lexicographic-order winner on uniform instances.

    Predecessor argmins are recomputed here in O(n^2) total instead of
    being stored during the fill, trading negligible time for half the
    table memory.
    """
    n = inst.n
    if n == 2:
        return (1, 2)
    m = n - 2
    d = inst.dist
    vals = table._values
    full = (1 << m) - 1

    best_v = -1
    cur = -1
    for b in range(m):
        v = int(vals[full * m + b]) + d[b + 1][n - 1]
        if cur < 0 or v <= best_v:
            best_v = v
            cur = b
    rev = [cur]
    mask = full
    while mask != 1 << cur:
        prev = mask ^ (1 << cur)
        best_v = -1
        nxt = -1
        for j in range(m):
            if not (prev >> j) & 1:
                continue
            v = int(vals[prev * m + j]) + d[j + 1][cur + 1]
            if nxt < 0 or v <= best_v:
                best_v = v
                nxt = j
        rev.append(nxt)
        mask = prev
        cur = nxt
    return (1, *(b + 2 for b in reversed(rev)), n)


def solve(inst: Instance, size_cap: int | None = DEFAULT_SIZE_CAP) -> Solution:
    """Exact optimum for the 1-to-n path visiting every city once.

    Pure function of the instance; concurrent solves are safe.  The
    reported ``states_computed`` is the interior state count plus one for
    the root aggregation.
    """
    table = compute_table(inst, size_cap)
    n = inst.n
    if n == 2:
        length = inst.dist[0][1]
    else:
        m = n - 2
        full = (1 << m) - 1
        vals = table._values
        d = inst.dist
        length = min(int(vals[full * m + b]) + d[b + 1][n - 1] for b in range(m))
    path = reconstruct_path(table, inst)
    return Solution(length=length, path=path, states_computed=table.filled_count + 1)


def expected_state_count(n: int) -> int:
    """Number of states the solver computes for any instance of size n.

    Summing the endpoint choices over all nonempty interior subsets gives
    sum over k of k * C(n-2, k) = (n-2) * 2^(n-3) interior states, plus
    one root state; for n = 2 only the root exists.  Raises OverflowError
    once the count no longer fits in 64 unsigned bits (first at n = 62).
    """
    if n < 2:
        raise DomainError(f"need at least 2 cities, got n={n}")
    if n == 2:
        return 1
    m = n - 2
    count = m * (1 << (m - 1)) + 1
    if count > _U64_MAX:
        raise OverflowError(f"state count for n={n} exceeds 64 bits")
    return count
