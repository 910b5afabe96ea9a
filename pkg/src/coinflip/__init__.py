"""coinflip: exact solver and verifier for coin-flipping puzzles.

Flip a triangle of pennies upside down, or mirror a rhombus of coins,
moving as few coins as possible. This package generates the shapes,
finds the exact minimum by exhaustive superimposition search, and checks
the closed-form move-count formulas against that oracle.
"""

from coinflip.formulas import (
    DivisionWitness,
    RhombusDecomposition,
    TriangleDecomposition,
    rhombus_moves_new,
    rhombus_moves_old,
    rhombus_moves_polynomial,
    triangle_move_increment,
    triangle_moves_new,
    triangle_moves_old,
    triangle_moves_polynomial,
    triangular,
)
from coinflip.lattice import (
    Coord,
    FlipKind,
    classify_triangle,
    connected_components,
    distance_sq,
    flip_set,
    mirror_horizontal,
    mirror_vertical,
    neighbors,
    rotate180,
    translate,
)
from coinflip.oracle import (
    MovePlan,
    OverlapResult,
    Placement,
    ProtrusionReport,
    backend,
    count_optimal_placements,
    move_plan,
    protrusions,
    solve,
    target_set,
)
from coinflip.shapes import (
    ShapeFormatError,
    ShapeSpec,
    hexagon,
    load_custom,
    rhombus,
    serialize,
    triangle_up,
)

__version__ = "0.1.0"

__all__ = [
    "Coord",
    "DivisionWitness",
    "FlipKind",
    "MovePlan",
    "OverlapResult",
    "Placement",
    "ProtrusionReport",
    "RhombusDecomposition",
    "ShapeFormatError",
    "ShapeSpec",
    "TriangleDecomposition",
    "backend",
    "classify_triangle",
    "connected_components",
    "count_optimal_placements",
    "distance_sq",
    "flip_set",
    "hexagon",
    "load_custom",
    "mirror_horizontal",
    "mirror_vertical",
    "move_plan",
    "neighbors",
    "protrusions",
    "rhombus",
    "rhombus_moves_new",
    "rhombus_moves_old",
    "rhombus_moves_polynomial",
    "rotate180",
    "serialize",
    "solve",
    "target_set",
    "translate",
    "triangle_move_increment",
    "triangle_moves_new",
    "triangle_moves_old",
    "triangle_moves_polynomial",
    "triangle_up",
    "triangular",
]
