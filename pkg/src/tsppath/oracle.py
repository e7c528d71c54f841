"""Brute-force ground truth plus the path-length evaluator shared by tests.

The enumerator tries every ordering of the interior cities and is kept
deliberately free of shortcuts so it stays obviously correct.  It exists
to cross-check the dynamic-programming solver on small instances.
"""

from __future__ import annotations

from itertools import permutations

from .errors import InvalidPathError, SizeError
from .heldkarp import Solution
from .instance import Instance

#: (n-2)! orderings; 13 keeps the worst case around a minute of desk time.
BRUTE_FORCE_MAX_N = 13


def path_length(inst: Instance, path) -> int:
    """Total length of a path, validated first.

    A valid path visits every city exactly once, starts at city 1, and
    ends at city n.  Raises InvalidPathError otherwise.
    """
    p = tuple(path)
    n = inst.n
    if len(p) != n or sorted(p) != list(range(1, n + 1)):
        raise InvalidPathError(f"path must visit each of 1..{n} exactly once: {p}")
    if p[0] != 1 or p[-1] != n:
        raise InvalidPathError(f"path must run from city 1 to city {n}: {p}")
    d = inst.dist
    return sum(d[a - 1][b - 1] for a, b in zip(p, p[1:]))


def solve_brute_force(inst: Instance) -> Solution:
    """Exhaustive minimum over all (n-2)! interior orderings.

    Orderings are tried in lexicographic order and the first one attaining
    the minimum wins, so ties resolve deterministically.  The returned
    states_computed is the number of orderings evaluated.
    """
    n = inst.n
    if n > BRUTE_FORCE_MAX_N:
        raise SizeError(f"n={n} exceeds the brute-force cap {BRUTE_FORCE_MAX_N}")
    d = inst.dist
    best = -1
    best_order: tuple[int, ...] = ()
    count = 0
    for order in permutations(range(2, n)):
        count += 1
        total = 0
        prev = 0
        for c in order:
            total += d[prev][c - 1]
            prev = c - 1
        total += d[prev][n - 1]
        if best < 0 or total < best:
            best = total
            best_order = order
    return Solution(length=best, path=(1, *best_order, n), states_computed=count)
