"""Integer geometry for coins on the triangular (penny-packing) lattice.

Coordinates are axial: a coin at (a, b) sits at a*(1, 0) + b*(1/2, sqrt3/2)
in the plane, so two coins of diameter 1 touch exactly when their squared
distance a*a + a*b + b*b equals 1. Everything here is exact integer
arithmetic; the float embedding exists only for drawing.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable, NamedTuple, Optional


class Coord(NamedTuple):
    a: int
    b: int


CoinSet = frozenset  # frozenset[Coord]

#: Offsets of the six unit-distance neighbors.
NEIGHBOR_OFFSETS = (
    Coord(1, 0),
    Coord(-1, 0),
    Coord(0, 1),
    Coord(0, -1),
    Coord(1, -1),
    Coord(-1, 1),
)

SQRT3 = math.sqrt(3.0)


def rotate180(c) -> Coord:
    """Point reflection through the origin."""
    a, b = c
    return Coord(-a, -b)


def mirror_horizontal(c) -> Coord:
    """Reflect across the vertical axis: embedded x negated, y kept."""
    a, b = c
    return Coord(-a - b, b)


def mirror_vertical(c) -> Coord:
    """Reflect across the horizontal axis: embedded y negated, x kept."""
    a, b = c
    return Coord(a + b, -b)


class FlipKind(Enum):
    """Orientation change the puzzle asks for. Values are the CLI names."""

    ROTATE_180 = "rot180"
    MIRROR_HORIZONTAL = "mirror-h"
    MIRROR_VERTICAL = "mirror-v"

    def apply(self, c) -> Coord:
        return _FLIP_FUNCS[self](c)


_FLIP_FUNCS = {
    FlipKind.ROTATE_180: rotate180,
    FlipKind.MIRROR_HORIZONTAL: mirror_horizontal,
    FlipKind.MIRROR_VERTICAL: mirror_vertical,
}


def flip_set(coins, flip: FlipKind) -> CoinSet:
    f = _FLIP_FUNCS[flip]
    return frozenset(f(c) for c in coins)


def translate(coins, shift) -> CoinSet:
    da, db = shift
    return frozenset(Coord(a + da, b + db) for a, b in coins)


def neighbors(c) -> frozenset:
    """The six lattice points at embedded distance exactly 1."""
    a, b = c
    return frozenset(Coord(a + da, b + db) for da, db in NEIGHBOR_OFFSETS)


def distance_sq(c, d) -> int:
    """Exact squared Euclidean distance between two embedded lattice points."""
    da, db = c[0] - d[0], c[1] - d[1]
    return da * da + da * db + db * db


def embed(c) -> tuple[float, float]:
    """Planar position of a coin center (for rendering only)."""
    a, b = c
    return (a + b / 2.0, b * (SQRT3 / 2.0))


def connected_components(coins) -> list[CoinSet]:
    """Partition into maximal touching clusters.

    Components come back ordered by their lexicographically smallest
    member, so reports are deterministic.
    """
    remaining = set(coins)
    components = []
    while remaining:
        seed = min(remaining)
        remaining.discard(seed)
        component = {seed}
        stack = [seed]
        while stack:
            a, b = stack.pop()
            for da, db in NEIGHBOR_OFFSETS:
                q = Coord(a + da, b + db)
                if q in remaining:
                    remaining.discard(q)
                    component.add(q)
                    stack.append(q)
        components.append(frozenset(component))
    components.sort(key=min)
    return components


def triangle_number_index(count: int) -> Optional[int]:
    """k with k(k+1)/2 == count, or None if count is not triangular."""
    if count < 0:
        return None
    k = (math.isqrt(8 * count + 1) - 1) // 2
    return k if k * (k + 1) // 2 == count else None


def classify_triangle(component) -> Optional[tuple[str, int]]:
    """Recognize a coin triangle.

    Returns ("up", k) if the component is a translate of the k-row
    upward triangle {(a, b): a >= 0, b >= 0, a + b <= k - 1}, ("down", k)
    for a translate of its 180-degree image, else None. A single coin is
    both; it reports as ("up", 1).
    """
    coins = frozenset(Coord(a, b) for a, b in component)
    if not coins:
        raise ValueError("cannot classify an empty component")
    k = triangle_number_index(len(coins))
    if k is None:
        return None
    a0 = min(a for a, _ in coins)
    b0 = min(b for _, b in coins)
    up = frozenset(
        Coord(a0 + i, b0 + j) for j in range(k) for i in range(k - j)
    )
    if coins == up:
        return ("up", k)
    a1 = max(a for a, _ in coins)
    b1 = max(b for _, b in coins)
    down = frozenset(
        Coord(a1 - i, b1 - j) for j in range(k) for i in range(k - j)
    )
    if coins == down:
        return ("down", k)
    return None
