"""Brute-force superimposition oracle.

Flip a shape, slide the image over the original through every lattice
translation that can overlap, and keep the placements with maximum
overlap. The coins outside the overlap are exactly the ones that must
move, so min_moves = total - max_overlap is the exact puzzle answer, not
an estimate.

The translation scan is the hot loop. A compiled kernel
(coinflip._scan_cy, built from Cython at install time) is used when it
imported cleanly and coordinates fit its 2**30 range; otherwise the
pure-Python reference kernel runs. Set COINFLIP_PURE=1 to force the pure
kernel. Both produce identical results; benchmarks/bench_scan.py compares
them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple, Optional

from coinflip import _scan as _pure
from coinflip.lattice import (
    Coord,
    FlipKind,
    classify_triangle,
    connected_components,
    flip_set,
    translate,
)

if os.environ.get("COINFLIP_PURE") == "1":
    _kernel = None
else:
    try:
        from coinflip import _scan_cy as _kernel  # type: ignore[attr-defined]
    except ImportError:
        _kernel = None

_KERNEL_COORD_LIMIT = 1 << 30


def backend() -> str:
    """Which scan kernel solve() dispatches to: "compiled" or "pure"."""
    return "compiled" if _kernel is not None else "pure"


class Placement(NamedTuple):
    """One candidate superimposition: flip the shape, then shift it."""

    flip: FlipKind
    shift: tuple[int, int]


@dataclass(frozen=True)
class OverlapResult:
    total_coins: int
    max_overlap: int
    min_moves: int
    optimal_placements: tuple[Placement, ...]


@dataclass(frozen=True)
class Component:
    """A connected protrusion and its triangle classification (or None)."""

    coins: frozenset
    size: int
    triangle: Optional[tuple[str, int]]


@dataclass(frozen=True)
class ProtrusionReport:
    placement: Placement
    source_components: tuple[Component, ...]
    target_components: tuple[Component, ...]
    size_multiset: tuple[int, ...]


@dataclass(frozen=True)
class MovePlan:
    """Coins to move, paired lexicographically with their destinations."""

    moves: tuple[tuple[Coord, Coord], ...]

    def apply(self, start) -> frozenset:
        froms = frozenset(m[0] for m in self.moves)
        tos = frozenset(m[1] for m in self.moves)
        if not froms <= frozenset(start):
            raise ValueError("plan does not apply: missing source coins")
        return (frozenset(start) - froms) | tos


def target_set(start, placement: Placement) -> frozenset:
    """The flipped-and-shifted image the placement superimposes on start."""
    return translate(flip_set(start, placement.flip), placement.shift)


def _scan(start_pts, flipped_pts):
    if _kernel is not None and all(
        -_KERNEL_COORD_LIMIT < v < _KERNEL_COORD_LIMIT
        for p in (start_pts, flipped_pts)
        for c in p
        for v in c
    ):
        return _kernel.scan_pairs(start_pts, flipped_pts)
    return _pure.scan_pairs(start_pts, flipped_pts)


def solve(start, flip: FlipKind) -> OverlapResult:
    """Exhaustive search for the minimum number of moves.

    Every translation achieving any overlap at all is evaluated, so the
    reported maximum is exact and optimal_placements lists all maximizing
    shifts in ascending (da, db) order.
    """
    start = frozenset(Coord(a, b) for a, b in start)
    if not start:
        raise ValueError("cannot solve an empty coin set")
    start_pts = sorted(start)
    flipped_pts = sorted(flip.apply(c) for c in start_pts)
    best, shifts = _scan(start_pts, flipped_pts)
    placements = tuple(Placement(flip, (da, db)) for da, db in shifts)
    return OverlapResult(
        total_coins=len(start),
        max_overlap=best,
        min_moves=len(start) - best,
        optimal_placements=placements,
    )


def _require_optimal(start, placement, result):
    if result is None:
        result = solve(start, placement.flip)
    if placement not in result.optimal_placements:
        raise ValueError(
            f"placement {placement} is not optimal; optimal shifts are "
            f"{[p.shift for p in result.optimal_placements]}"
        )
    return result


def _as_components(coins) -> tuple[Component, ...]:
    return tuple(
        Component(coins=c, size=len(c), triangle=classify_triangle(c))
        for c in connected_components(coins)
    )


def protrusions(
    start,
    placement: Placement,
    expected_parts: Optional[int] = None,
    result: Optional[OverlapResult] = None,
) -> ProtrusionReport:
    """Decompose an optimal placement into the coin clusters that move.

    Source components are the start coins outside the overlap; target
    components are the uncovered image coins they move into. The size
    multiset is sorted descending and zero-padded to expected_parts
    (3 for triangles, 2 for rhombi; pass None to keep the raw count).

    Pass the OverlapResult from solve() to skip re-solving; the placement
    is rejected if it is not one of the optimal ones.
    """
    start = frozenset(Coord(a, b) for a, b in start)
    _require_optimal(start, placement, result)
    target = target_set(start, placement)
    source_components = _as_components(start - target)
    target_components = _as_components(target - start)
    sizes = sorted((c.size for c in source_components), reverse=True)
    if expected_parts is not None:
        if len(sizes) > expected_parts:
            raise ValueError(
                f"{len(sizes)} protrusions exceed the expected {expected_parts}"
            )
        sizes += [0] * (expected_parts - len(sizes))
    return ProtrusionReport(
        placement=placement,
        source_components=source_components,
        target_components=target_components,
        size_multiset=tuple(sizes),
    )


def move_plan(
    start,
    placement: Placement,
    result: Optional[OverlapResult] = None,
) -> MovePlan:
    """Explicit coin moves realizing an optimal placement.

    Sources and destinations are paired in lexicographic order; any
    pairing costs the same number of moves, this one is just canonical.
    """
    start = frozenset(Coord(a, b) for a, b in start)
    _require_optimal(start, placement, result)
    target = target_set(start, placement)
    froms = sorted(start - target)
    tos = sorted(target - start)
    return MovePlan(moves=tuple(zip(froms, tos)))


def count_optimal_placements(start, flip: FlipKind) -> int:
    return len(solve(start, flip).optimal_placements)
