"""Partitions as sand-pile configurations and the two grain moves.

A partition is stored as a nonincreasing tuple of positive parts.  Column
indices are 1-based everywhere in this package, and reading a column past
the end of the partition yields 0.

Plateau and step lengths count the columns of the equal-height run: the run
``(1, 1)`` followed by the empty column is a slippery plateau of length 2,
and a slip from a slippery step of length ``ell`` at column ``i`` moves the
grain to column ``i + ell``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "Partition",
    "ShapeKind",
    "ColumnShape",
    "Transition",
    "LENGTH_CONVENTION",
    "make_partition",
    "parse_partition",
    "is_partition",
    "height_diff",
    "leading_plateau",
    "classify_at",
    "transitions",
    "moves",
    "add_grain",
    "remove_grain",
    "dominance_leq",
    "render_ferrers",
]

LENGTH_CONVENTION = "ell = number of equal-height columns in the run (a run of one column has ell = 1)"


class Partition(tuple):
    """An integer partition in canonical form (nonincreasing, no zero parts).

    ``Partition`` is a tuple, so it hashes, compares and sorts like one.
    Python indexing stays 0-based; use :meth:`part` for 1-based column reads.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        values = list(parts)
        while values and values[-1] == 0:
            values.pop()
        prev = None
        for v in values:
            if not isinstance(v, int) or v <= 0:
                raise ValueError(f"parts must be positive integers, got {values!r}")
            if prev is not None and v > prev:
                raise ValueError(f"not nonincreasing: {values!r}")
            prev = v
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # caller guarantees canonical form
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Height of column ``i`` (1-based); 0 beyond the last column."""
        if i < 1:
            raise IndexError(f"column index must be >= 1, got {i}")
        return self[i - 1] if i <= len(self) else 0

    def add(self, i: int) -> "Partition":
        """``self`` with one grain added on column ``i``; raises if invalid."""
        raw = add_grain(self, i)
        if not is_partition(raw):
            raise ValueError(f"adding a grain to column {i} of {self} breaks monotonicity")
        return Partition._trusted(raw)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class ShapeKind(enum.Enum):
    CLIFF = "cliff"
    SLIPPERY_PLATEAU = "slippery plateau"
    NON_SLIPPERY_PLATEAU = "non-slippery plateau"
    SLIPPERY_STEP = "slippery step"
    NON_SLIPPERY_STEP = "non-slippery step"
    NONE = "none"


@dataclass(frozen=True)
class ColumnShape:
    kind: ShapeKind
    ell: Optional[int] = None

    def __str__(self) -> str:
        if self.ell is None:
            return self.kind.value
        return f"{self.kind.value} (length {self.ell})"


@dataclass(frozen=True, order=True)
class Transition:
    """A labeled cover edge ``source -(label)-> target``."""

    source: Partition
    label: int
    target: Partition

    def __str__(self) -> str:
        return f"{self.source} -{self.label}-> {self.target}"


def make_partition(values: Sequence[int]) -> Partition:
    return Partition(values)


def parse_partition(text: str) -> Partition:
    """Parse the comma form ``4,2,1`` (``0`` or empty text is the empty partition)."""
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition()
    try:
        values = [int(x) for x in text.strip("()").split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(values)


def is_partition(values: Sequence[int]) -> bool:
    """True if ``values`` is nonincreasing and nonnegative (trailing zeros allowed)."""
    prev = None
    for v in values:
        if v < 0 or (prev is not None and v > prev):
            return False
        prev = v
    return True


def _get(s: Sequence[int], i: int) -> int:
    return s[i - 1] if 1 <= i <= len(s) else 0


def height_diff(s: Sequence[int], i: int) -> int:
    if i < 1:
        raise IndexError(f"column index must be >= 1, got {i}")
    return _get(s, i) - _get(s, i + 1)


def _run_from(s: Sequence[int], i: int) -> int:
    """Number of columns j >= i with s_j == s_i (s_i > 0 assumed)."""
    h = s[i - 1]
    j = i
    n = len(s)
    while j < n and s[j] == h:
        j += 1
    return j - i + 1


def _plateau_at(s: Sequence[int], i: int) -> ColumnShape:
    h = _get(s, i)
    if h == 0:
        return ColumnShape(ShapeKind.NONE)
    m = _run_from(s, i)
    if _get(s, i + m) == h - 1:
        return ColumnShape(ShapeKind.SLIPPERY_PLATEAU, m)
    return ColumnShape(ShapeKind.NON_SLIPPERY_PLATEAU, m)


def leading_plateau(s: Sequence[int]) -> ColumnShape:
    """Shape of the maximal equal-height run starting at column 1.

    Returns a slippery plateau when the run is followed by a unit drop and a
    non-slippery one otherwise; the empty partition gives ``NONE``.
    """
    return _plateau_at(s, 1)


def _step_at(s: Sequence[int], i: int) -> Optional[ColumnShape]:
    # s minus one grain at i is a partition with a run of length >= 2 at i
    # exactly when d_i(s) == 1 and s_{i+1} > 0
    nxt = _get(s, i + 1)
    if _get(s, i) - nxt != 1 or nxt == 0:
        return None
    m = 1 + _run_from(s, i + 1)
    if nxt - _get(s, i + m) == 1:
        return ColumnShape(ShapeKind.SLIPPERY_STEP, m)
    return ColumnShape(ShapeKind.NON_SLIPPERY_STEP, m)


def classify_at(s: Sequence[int], i: int) -> ColumnShape:
    """Classify column ``i`` of ``s`` as exactly one shape.

    Priority: a height difference of 2 or more is a cliff; a unit difference
    over a nonempty column is a step (the one-grain-removed partition has a
    run of at least two columns there); otherwise the column starts a plateau.
    """
    if not 1 <= i <= len(s):
        raise IndexError(f"column {i} out of range for partition of length {len(s)}")
    if height_diff(s, i) >= 2:
        return ColumnShape(ShapeKind.CLIFF)
    step = _step_at(s, i)
    if step is not None:
        return step
    return _plateau_at(s, i)


def moves(s: Sequence[int]) -> list:
    """Raw ``(label, target_tuple)`` pairs for every fall and slip of ``s``.

    Fast path used by the diagram builders; :func:`transitions` wraps it.
    """
    out = []
    k = len(s)
    for i in range(1, k + 1):
        h = s[i - 1]
        nxt = s[i] if i < k else 0
        d = h - nxt
        if d >= 2:
            t = list(s)
            t[i - 1] -= 1
            if i < k:
                t[i] += 1
            else:
                t.append(1)
            out.append((i, tuple(t)))
        elif d == 1 and nxt > 0:
            step = _step_at(s, i)
            if step.kind is ShapeKind.SLIPPERY_STEP:
                j = i + step.ell
                t = list(s)
                t[i - 1] -= 1
                if j <= k:
                    t[j - 1] += 1
                else:
                    t.append(1)
                out.append((i, tuple(t)))
    return out


def transitions(s: Partition) -> set:
    """All transitions out of ``s``: falls from cliffs and slips from slippery steps."""
    s = Partition(s)
    return {Transition(s, label, Partition._trusted(t)) for label, t in moves(s)}


def add_grain(s: Sequence[int], i: int) -> tuple:
    """The raw tuple obtained by adding one grain on column ``i``.

    The result may fail to be a partition; check it with :func:`is_partition`.
    """
    if not 1 <= i <= len(s) + 1:
        raise IndexError(f"column {i} out of range 1..{len(s) + 1}")
    t = list(s)
    if i == len(s) + 1:
        t.append(1)
    else:
        t[i - 1] += 1
    return tuple(t)


def remove_grain(s: Sequence[int], i: int) -> tuple:
    """Inverse of :func:`add_grain`; trailing zeros are stripped."""
    if not 1 <= i <= len(s):
        raise IndexError(f"column {i} out of range 1..{len(s)}")
    t = list(s)
    t[i - 1] -= 1
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


def dominance_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    """``s <= t`` in dominance order: every prefix sum of s is at most t's."""
    ws, wt = sum(s), sum(t)
    if ws != wt:
        raise ValueError(f"weights differ: {ws} != {wt}")
    a = b = 0
    for j in range(max(len(s), len(t))):
        a += s[j] if j < len(s) else 0
        b += t[j] if j < len(t) else 0
        if a > b:
            return False
    return True


def render_ferrers(s: Sequence[int], glyph: str = "#") -> str:
    """ASCII Ferrers diagram: column i is a pile of s_i grains, bottom-aligned."""
    if not s:
        return ""
    height = s[0]
    rows = []
    for level in range(height, 0, -1):
        rows.append("".join(glyph if h >= level else " " for h in s).rstrip())
    return "\n".join(rows)
