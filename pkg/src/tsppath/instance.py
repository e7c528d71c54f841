"""Problem instances: data model, text format, seeded generation, relabeling.

An instance is a complete graph on cities labeled 1..n with symmetric
positive integer distances.  Instances are immutable after construction,
so they can be shared freely across threads.

The on-disk representation ("tspd") is plain text:

* lines whose first character is ``#`` are comments and may appear anywhere;
* the first data line holds the city count n;
* the next n data lines each hold n whitespace-separated integers forming
  the full symmetric distance matrix with a zero diagonal.

Blank lines are skipped like comments.  The serializer emits the canonical
form: no comments, single spaces, a newline after every row.
"""

from __future__ import annotations

import operator
import random
import re
from dataclasses import dataclass

from .errors import AsymmetryError, DomainError, ParseError

#: Largest allowed distance.  With 64-bit path-length accumulation the sum
#: of n - 1 edges then cannot overflow for any solvable n (n <= 57).
MAX_DISTANCE = 2**32 - 1

_INT_TOKEN = re.compile(r"-?[0-9]+")

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Bit-exact SplitMix64 stream.

    Golden fixtures depend on this exact sequence, so the constants and
    update order must not change.  Seeds are reduced modulo 2**64.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64


def _as_int(value, what: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise DomainError(f"{what} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class Instance:
    """Complete graph on cities 1..n with symmetric positive integer distances.

    ``dist`` is stored 0-based: ``dist[i - 1][j - 1]`` is the distance
    between cities i and j.  The diagonal is 0 by convention and is never
    read by the solvers.
    """

    n: int
    dist: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = _as_int(self.n, "n")
        if n < 2:
            raise DomainError(f"need at least 2 cities, got n={n}")
        rows = tuple(
            tuple(_as_int(v, f"dist({i + 1},{j + 1})") for j, v in enumerate(row))
            for i, row in enumerate(self.dist)
        )
        if len(rows) != n or any(len(row) != n for row in rows):
            raise DomainError(f"distance matrix must be {n}x{n}")
        for i in range(n):
            if rows[i][i] != 0:
                raise DomainError(f"dist({i + 1},{i + 1}) must be 0, got {rows[i][i]}")
            for j in range(n):
                v = rows[i][j]
                if i != j and v < 1:
                    raise DomainError(f"dist({i + 1},{j + 1}) must be >= 1, got {v}")
                if v > MAX_DISTANCE:
                    raise DomainError(
                        f"dist({i + 1},{j + 1})={v} exceeds the cap {MAX_DISTANCE}"
                    )
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetryError(
                        f"dist({i + 1},{j + 1})={rows[i][j]} != "
                        f"dist({j + 1},{i + 1})={rows[j][i]}"
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "dist", rows)

    def distance(self, i: int, j: int) -> int:
        """Distance between cities ``i`` and ``j`` (1-based labels)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise DomainError(f"city labels must be in 1..{self.n}, got ({i},{j})")
        return self.dist[i - 1][j - 1]


def parse_instance(text: str) -> Instance:
    """Parse tspd text into a validated :class:`Instance`.

    Raises :class:`ParseError` for structural problems (bad tokens, wrong
    row or column counts), :class:`DomainError` for out-of-domain values,
    and :class:`AsymmetryError` for asymmetric matrices.
    """
    lines = [
        line
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]
    if not lines:
        raise ParseError("no data lines found")

    header = lines[0].split()
    if len(header) != 1 or not _INT_TOKEN.fullmatch(header[0]):
        raise ParseError(f"first data line must be a single integer, got {lines[0]!r}")
    n = int(header[0])
    if n < 2:
        raise DomainError(f"need at least 2 cities, got n={n}")

    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(body)}")

    rows = []
    for i, line in enumerate(body):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"row {i + 1} has {len(tokens)} entries, expected {n}")
        for tok in tokens:
            if not _INT_TOKEN.fullmatch(tok):
                raise ParseError(f"row {i + 1} has non-integer entry {tok!r}")
        rows.append([int(tok) for tok in tokens])
    return Instance(n, rows)


def serialize_instance(inst: Instance) -> str:
    """Render an instance in canonical tspd form (round-trips exactly)."""
    lines = [str(inst.n)]
    lines.extend(" ".join(str(v) for v in row) for row in inst.dist)
    return "\n".join(lines) + "\n"


def generate_random(n: int, max_dist: int, seed: int) -> Instance:
    """Deterministic random instance from a SplitMix64 stream.

    The strict upper triangle is filled in row-major order (i from 1 to
    n - 1, j from i + 1 to n) with ``1 + next_u64() % max_dist`` and
    mirrored.  A pure function of (n, max_dist, seed): the layout is part
    of the fixture contract and must stay bit-identical across versions.
    """
    n = _as_int(n, "n")
    max_dist = _as_int(max_dist, "max_dist")
    if n < 2:
        raise DomainError(f"need at least 2 cities, got n={n}")
    if not 1 <= max_dist <= MAX_DISTANCE:
        raise DomainError(f"max_dist must be in 1..{MAX_DISTANCE}, got {max_dist}")
    rng = SplitMix64(_as_int(seed, "seed"))
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        for j in range(i + 1, n):
            v = 1 + rng.next_u64() % max_dist
            rows[i][j] = rows[j][i] = v
    return Instance(n, rows)


@dataclass(frozen=True)
class Permutation:
    """Bijection on city labels 1..n that fixes the endpoints 1 and n.

    ``mapping[i - 1]`` is the image of city i.  Only interior cities
    (2..n-1) may move, which is what keeps relabeled instances comparable:
    the optimal 1-to-n path length is invariant under these permutations.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(_as_int(v, "mapping entry") for v in self.mapping)
        n = len(mapping)
        if n < 2:
            raise DomainError("permutation needs at least 2 cities")
        if sorted(mapping) != list(range(1, n + 1)):
            raise DomainError(f"mapping is not a bijection on 1..{n}: {mapping}")
        if mapping[0] != 1 or mapping[-1] != n:
            raise DomainError(f"permutation must fix cities 1 and {n}: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, city: int) -> int:
        if not 1 <= city <= self.n:
            raise DomainError(f"city label must be in 1..{self.n}, got {city}")
        return self.mapping[city - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.mapping):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def shuffled(cls, n: int, rng: random.Random) -> "Permutation":
        """Random interior permutation drawn from ``rng``."""
        interior = list(range(2, n))
        rng.shuffle(interior)
        return cls((1, *interior, n))


def relabel(inst: Instance, perm: Permutation) -> Instance:
    """Apply an interior relabeling: dist'(perm(i), perm(j)) = dist(i, j)."""
    if perm.n != inst.n:
        raise DomainError(f"permutation is over {perm.n} cities, instance has {inst.n}")
    n = inst.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        pi = perm.mapping[i] - 1
        for j in range(n):
            rows[pi][perm.mapping[j] - 1] = inst.dist[i][j]
    return Instance(n, rows)
