"""The infinite lattice L_B(∞) and its finite filters L_B(≤n).

An element ``(∞, s_2, s_3, ...)`` is represented by its tail ``(s_2, ...)``;
the infinite first column is never materialized.  Note that the order is
reversed with respect to grain count: more grains in the tail means lower.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple

from .lattice import LatticeDiagram, grow, lb0
from .partition_core import Partition, moves, parse_partition

__all__ = [
    "InfPartition",
    "parse_inf",
    "inf_leq",
    "inf_meet",
    "inf_join",
    "inf_transitions",
    "pi_embed",
    "chi",
    "chi_inverse",
    "tails_up_to",
    "build_l_leq",
    "order_meet",
    "order_join",
]


@dataclass(frozen=True, order=True)
class InfPartition:
    tail: Partition

    def __post_init__(self):
        if not isinstance(self.tail, Partition):
            object.__setattr__(self, "tail", Partition(self.tail))

    @property
    def grains(self) -> int:
        """Number of grains outside the infinite column."""
        return sum(self.tail)

    def __str__(self) -> str:
        return f"inf:{self.tail}"


def parse_inf(text: str) -> InfPartition:
    text = text.strip()
    if text.startswith("inf:"):
        text = text[4:]
    return InfPartition(parse_partition(text))


def _suffix_sums(tail, length: int) -> List[int]:
    out = [0] * (length + 1)
    for k in range(length - 1, -1, -1):
        out[k] = out[k + 1] + (tail[k] if k < len(tail) else 0)
    return out


def inf_leq(s: InfPartition, t: InfPartition) -> bool:
    """``s <= t`` in L_B(∞): every suffix sum of t's tail is at most s's."""
    m = max(len(s.tail), len(t.tail))
    a, b = _suffix_sums(s.tail, m), _suffix_sums(t.tail, m)
    return all(y <= x for x, y in zip(a, b))


def inf_meet(s: InfPartition, t: InfPartition) -> InfPartition:
    """Suffix sums of the meet are the pointwise maxima of the inputs'."""
    m = max(len(s.tail), len(t.tail))
    a, b = _suffix_sums(s.tail, m), _suffix_sums(t.tail, m)
    top = [max(x, y) for x, y in zip(a, b)]
    return InfPartition(Partition([top[k] - top[k + 1] for k in range(m)]))


def tails_up_to(w: int) -> Iterator[Partition]:
    """Every partition of weight at most ``w``, by increasing weight."""

    def rec(rest, cap, acc):
        if rest == 0:
            yield Partition._trusted(tuple(acc))
            return
        for first in range(min(rest, cap), 0, -1):
            acc.append(first)
            yield from rec(rest - first, first, acc)
            acc.pop()

    for weight in range(w + 1):
        yield from rec(weight, weight, [])


def _suffix_score(x: InfPartition) -> int:
    return sum(_suffix_sums(x.tail, len(x.tail)))


def inf_join(s: InfPartition, t: InfPartition) -> InfPartition:
    """Least common upper bound, by exhaustive search.

    An upper bound u satisfies the suffix condition at column 2, so its tail
    weighs no more than either input's; only those tails are scanned.
    """
    bound = min(s.grains, t.grains)
    upper = [u for u in map(InfPartition, tails_up_to(bound)) if inf_leq(s, u) and inf_leq(t, u)]
    # the least element has the largest suffix sums
    pick = max(upper, key=_suffix_score)
    for u in upper:
        if not inf_leq(pick, u):
            raise AssertionError(f"no least upper bound for {s} and {t}: {pick} vs {u}")
    return pick


def inf_transitions(x: InfPartition) -> Set[Tuple[int, InfPartition]]:
    """Labeled moves out of ``x``, read off a finite representative.

    The infinite column is replaced by a column high enough to be a cliff;
    label 1 is then the fall out of the infinite column.
    """
    tail = tuple(x.tail)
    rep = ((tail[0] if tail else 0) + 2,) + tail
    return {(label, InfPartition(Partition._trusted(t[1:]))) for label, t in moves(rep)}


def pi_embed(s) -> InfPartition:
    """Drop the first column: L_B(n) -> L_B(∞)."""
    s = Partition(s)
    if not s:
        raise ValueError("the empty partition has no first column to drop")
    return InfPartition(Partition._trusted(s[1:]))


def chi(s) -> InfPartition:
    """Put an infinite column in front: ⊔ L_B(n) -> L_B(∞)."""
    return InfPartition(Partition(s))


def chi_inverse(x: InfPartition) -> Partition:
    return x.tail


def build_l_leq(n: int) -> LatticeDiagram:
    """Diagram of L_B(0) ⊔ ... ⊔ L_B(n) with the 0-labeled links s -> s↓1.

    Levels are produced by growing one L_B(k) diagram; its tails carry over
    unchanged, so the 0-link from a node of level k-1 goes to the node of
    level k with the same tail.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = LatticeDiagram(n, cumulative=True)
    level = lb0()
    for k in range(n + 1):
        if k:
            grow(level)
        deficit = n - k
        handles = [out._add_tail(level._tails[h], level._tailsum[h], deficit) for h in range(level.num_nodes)]
        for s, lab, t in level.edge_triples():
            out.add_edge(handles[s], lab, handles[t])
        if k:
            below = out._index[deficit]
            for tail, h in out._index[deficit + 1].items():
                out.add_edge(h, 0, below[tail])
    return out


def _up_sets(d: LatticeDiagram, p) -> Set[Partition]:
    target = d.handle(p)
    preds = {}
    for s, _, t in d.edge_triples():
        preds.setdefault(t, []).append(s)
    seen = {target}
    stack = [target]
    while stack:
        h = stack.pop()
        for s in preds.get(h, ()):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return {d.partition(h) for h in seen}


def order_meet(d: LatticeDiagram, a, b) -> Partition:
    """Greatest common lower bound in the reachability order of ``d``."""
    lower = d.down_set(a) & d.down_set(b)
    for g in lower:
        if lower <= d.down_set(g):
            return g
    raise AssertionError(f"no meet of {a} and {b} in {d!r}")


def order_join(d: LatticeDiagram, a, b) -> Partition:
    """Least common upper bound in the reachability order of ``d``."""
    upper = _up_sets(d, a) & _up_sets(d, b)
    for g in upper:
        if upper <= _up_sets(d, g):
            return g
    raise AssertionError(f"no join of {a} and {b} in {d!r}")
