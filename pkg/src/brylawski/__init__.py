"""Integer partition lattices under dominance order, built from grain moves."""

from .infinite import InfPartition, build_l_leq, chi, inf_join, inf_leq, inf_meet, pi_embed
from .lattice import LatticeDiagram, build, build_incremental, build_naive, join, meet, verify_lattice
from .partition_core import (
    ColumnShape,
    Partition,
    ShapeKind,
    Transition,
    classify_at,
    dominance_leq,
    moves,
    parse_partition,
    render_ferrers,
    transitions,
)
from .tree import children, count_length_exact, level, parent, partition_count

__all__ = [
    "Partition",
    "ShapeKind",
    "ColumnShape",
    "Transition",
    "parse_partition",
    "classify_at",
    "moves",
    "transitions",
    "dominance_leq",
    "render_ferrers",
    "LatticeDiagram",
    "build",
    "build_naive",
    "build_incremental",
    "meet",
    "join",
    "verify_lattice",
    "InfPartition",
    "inf_leq",
    "inf_meet",
    "inf_join",
    "pi_embed",
    "chi",
    "build_l_leq",
    "children",
    "parent",
    "level",
    "partition_count",
    "count_length_exact",
]
