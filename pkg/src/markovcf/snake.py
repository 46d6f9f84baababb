"""Christoffel lattice paths and the snake graphs lying on them.

Coordinates are kept in half-units internally (every value doubled) so that
tiles of side 1/2 have integer corners.  ``SnakeGraph.tiles`` holds the
doubled south-west corners; :meth:`SnakeGraph.tile_coords` gives the real
ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cf_core import ContinuedFraction, Marker, StructureError, numerator

__all__ = [
    "RationalIndex",
    "SnakeGraph",
    "SizeLimitError",
    "BRUTE_FORCE_TILE_LIMIT",
    "christoffel_word",
    "build_snake",
    "cf_from_snake",
    "markov_number",
    "count_matchings_bruteforce",
    "replaceable_entries",
    "lattice_points_between",
    "snake_from_moves",
]

BRUTE_FORCE_TILE_LIMIT = 25


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True)
class RationalIndex:
    p: int
    q: int

    def __post_init__(self):
        if not 1 <= self.p < self.q:
            raise ValueError(f"need 1 <= p < q, got p={self.p}, q={self.q}")

    @property
    def g(self) -> int:
        return gcd(self.p, self.q)

    @property
    def coprime(self) -> bool:
        return self.g == 1

    def __str__(self):
        return f"{self.p}/{self.q}"


def _index(idx, q=None) -> RationalIndex:
    if isinstance(idx, RationalIndex):
        return idx
    if q is not None:
        return RationalIndex(idx, q)
    return RationalIndex(*idx)


def christoffel_word(idx, q=None) -> str:
    """Lower Christoffel word of ``p/q`` over ``R`` (east) and ``U`` (north).

    Non-reduced indices give the reduced word repeated ``gcd(p, q)`` times.
    """
    idx = _index(idx, q)
    g = idx.g
    p, q = idx.p // g, idx.q // g
    n = p + q
    # letter i is U exactly when floor(i*p/n) steps up
    word = "".join("U" if (i * p) // n > ((i - 1) * p) // n else "R" for i in range(1, n + 1))
    return word * g


def lattice_points_between(word: str, p: int, q: int) -> list[tuple[int, int]]:
    """Lattice points between the path and the diagonal ``y = p x / q``.

    A diagonal lattice point the path does not pass through counts as
    between; this is what makes the path unique when ``gcd(p, q) > 1``.
    Path vertices strictly above the diagonal are reported too.
    """
    heights = {}  # column x -> highest path y reached in that column
    x = y = 0
    heights[0] = 0
    bad = []
    for c in word:
        if c == "R":
            x += 1
        else:
            y += 1
        heights[x] = max(heights.get(x, 0), y)
        if y * q > p * x:
            bad.append((x, y))
    for cx in range(q + 1):
        for cy in range(p + 1):
            # on or below the diagonal, strictly above the path in that column
            if cy * q <= p * cx and cy > heights[cx]:
                bad.append((cx, cy))
    return bad


@dataclass(frozen=True)
class SnakeGraph:
    """Chain of half-unit tiles; ``moves[i]`` goes from tile ``i`` to ``i+1``."""

    tiles: tuple[tuple[int, int], ...]
    moves: str
    shaded: tuple[bool, ...]
    index: RationalIndex | None = None

    def __len__(self):
        return len(self.tiles)

    def tile_coords(self) -> list[tuple[Fraction, Fraction]]:
        return [(Fraction(x, 2), Fraction(y, 2)) for x, y in self.tiles]

    def shaded_positions(self) -> list[int]:
        """1-based positions of shaded tiles."""
        return [i + 1 for i, s in enumerate(self.shaded) if s]

    def gaps(self) -> list[int]:
        """Numbers of unshaded tiles between consecutive shaded tiles."""
        pos = self.shaded_positions()
        return [b - a - 1 for a, b in zip(pos, pos[1:])]


def _shading(moves: str) -> tuple[bool, ...]:
    n = len(moves) + 1
    return tuple(
        i == 0 or i == n - 1 or moves[i - 1] != moves[i]
        for i in range(n)
    )


def snake_from_moves(moves: str, start: tuple[int, int] = (1, 0), index=None) -> SnakeGraph:
    """Snake graph with the given move word; ``start`` is in half-units."""
    x, y = start
    tiles = [(x, y)]
    for m in moves:
        if m == "R":
            x += 1
        elif m == "U":
            y += 1
        else:
            raise ValueError(f"bad move {m!r}")
        tiles.append((x, y))
    return SnakeGraph(tuple(tiles), moves, _shading(moves), index)


def build_snake(idx, q=None) -> SnakeGraph:
    """Snake graph of half-unit tiles on the lattice path of ``p/q``.

    Every interior letter of the Christoffel word contributes two moves.
    The first tile's south-west corner is ``(1/2, 0)``.
    """
    idx = _index(idx, q)
    word = christoffel_word(idx)
    moves = "".join(c * 2 for c in word[1:-1])
    return snake_from_moves(moves, (1, 0), idx)


def cf_from_snake(g: SnakeGraph) -> ContinuedFraction:
    """Read the continued fraction: shaded tile -> 2, each interior edge
    between two unshaded tiles -> 1."""
    entries = []
    gap = 0
    for i, s in enumerate(g.shaded):
        if s:
            if i:
                entries.extend([1] * (gap - 1))
            entries.append(2)
            gap = 0
        else:
            gap += 1
    return ContinuedFraction(tuple(entries))


@lru_cache(maxsize=None)
def _markov_number(p: int, q: int) -> int:
    return numerator(cf_from_snake(build_snake(RationalIndex(p, q))))


def markov_number(idx, q=None) -> int:
    """``m_{p/q}`` as the numerator of the snake graph's continued fraction.

    For non-reduced ``p/q`` this is the lattice-path value.
    """
    idx = _index(idx, q)
    return _markov_number(idx.p, idx.q)


def _graph(g: SnakeGraph):
    vertices = set()
    edges = set()
    for x, y in g.tiles:
        c = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
        vertices.update(c)
        for a, b in zip(c, c[1:] + c[:1]):
            edges.add((min(a, b), max(a, b)))
    return sorted(vertices), edges


def count_matchings_bruteforce(g: SnakeGraph, limit: int = BRUTE_FORCE_TILE_LIMIT) -> int:
    """Count perfect matchings of the snake graph by exhaustive search.

    Vertices are tile corners and edges tile sides.  Branches on the first
    unmatched vertex; subresults are memoised on the matched-vertex mask.
    """
    if len(g.tiles) > limit:
        raise SizeLimitError(f"{len(g.tiles)} tiles exceeds brute-force limit {limit}")
    vertices, edges = _graph(g)
    pos = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    if n % 2:
        return 0
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[pos[a]].append(pos[b])
        adj[pos[b]].append(pos[a])
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if mask == full:
            return 1
        v = (~mask & (mask + 1)).bit_length() - 1  # lowest unmatched vertex
        total = 0
        for w in adj[v]:
            if not mask >> w & 1:
                total += count(mask | 1 << v | 1 << w)
        return total

    return count(0)


def replaceable_entries(cf) -> list[Marker]:
    """Split entries in {1, 2} into markers, pairing 1s greedily left to right."""
    entries = list(cf.entries if isinstance(cf, ContinuedFraction) else cf)
    out = []
    i = 0
    while i < len(entries):
        a = entries[i]
        if a == 2:
            out.append(Marker.TWO)
            i += 1
        elif a == 1 and i + 1 < len(entries) and entries[i + 1] == 1:
            out.append(Marker.ONEONE)
            i += 2
        elif a == 1:
            raise StructureError(f"unpaired 1 at position {i + 1} in {entries}")
        else:
            raise StructureError(f"entry {a} is not 1 or 2")
    return out
