"""Shared construction helpers for the test suite."""

from hypothesis import strategies as st

from tsppath import Instance


def from_upper(n, entries):
    """Instance from strict upper-triangle entries in row-major order."""
    it = iter(entries)
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = next(it)
    return Instance(n, rows)


def uniform_instance(n, d=1):
    return Instance(n, [[0 if i == j else d for j in range(n)] for i in range(n)])


def shifted(inst, c):
    """Copy of ``inst`` with ``c`` added to every off-diagonal distance."""
    n = inst.n
    return Instance(
        n,
        [[0 if i == j else inst.dist[i][j] + c for j in range(n)] for i in range(n)],
    )


def instance_a():
    """The four-city hand-trace fixture; optimum 14 via path 1,3,2,4."""
    return Instance(4, [[0, 1, 2, 9], [1, 0, 4, 8], [2, 4, 0, 16], [9, 8, 16, 0]])


def violates_triangle(inst):
    n = inst.n
    d = inst.distance
    return any(
        d(i, k) > d(i, j) + d(j, k)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        for k in range(1, n + 1)
        if len({i, j, k}) == 3
    )


def triangle_violators():
    """Five hand-built instances that each break the triangle inequality."""
    # upper triangles row-major: (1,2), (1,3), ..., (n-1,n)
    v1 = from_upper(4, [1, 1, 2, 100, 3, 4])
    v2 = from_upper(5, [3, 2, 9, 4, 1, 500, 6, 1, 7, 5])
    # chain: unit steps between neighbors, every shortcut enormous
    v3 = Instance(
        6,
        [
            [0 if i == j else (1 if abs(i - j) == 1 else 1000) for j in range(6)]
            for i in range(6)
        ],
    )
    # hub: city 1 close to everyone, everyone else far apart
    v4 = Instance(
        7,
        [
            [0 if i == j else (1 if 0 in (i, j) else 1000) for j in range(7)]
            for i in range(7)
        ],
    )
    rows = [[0] * 8 for _ in range(8)]
    for i in range(8):
        for j in range(i + 1, 8):
            rows[i][j] = rows[j][i] = (7 * i + 13 * j + 3) % 50 + 1
    rows[1][4] = rows[4][1] = 3000
    v5 = Instance(8, rows)
    return [v1, v2, v3, v4, v5]


@st.composite
def instances(draw, min_n=2, max_n=7, max_dist=50):
    """Random symmetric positive-integer instances for property tests."""
    n = draw(st.integers(min_n, max_n))
    k = n * (n - 1) // 2
    entries = draw(st.lists(st.integers(1, max_dist), min_size=k, max_size=k))
    return from_upper(n, entries)
