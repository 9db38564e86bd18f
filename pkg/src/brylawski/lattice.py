"""Labeled cover diagrams of L_B(n), built naively or incrementally.

Storage note: a node is stored by its tail ``(s_2, s_3, ...)`` together with
its weight deficit ``weight_n - weight``.  The first part is derived, so
adding a grain to column 1 of every node of L_B(n) is just ``weight_n += 1``.
That is what lets :func:`grow` run in time proportional to what it adds.
Edges live in flat arrays with per-node singly linked out-lists; removed
edges are tombstoned so edge ids and node handles never move.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

from . import oracle
from .partition_core import (
    Partition,
    ShapeKind,
    Transition,
    classify_at,
    moves,
)

__all__ = [
    "DiagramError",
    "LatticeDiagram",
    "FrontierSets",
    "GrowthStats",
    "build_naive",
    "build_incremental",
    "build",
    "grow",
    "lb0",
    "find_frontier_sets",
    "frontier_seeds",
    "meet",
    "join",
    "Check",
    "LatticeReport",
    "verify_lattice",
]


class DiagramError(ValueError):
    """A diagram is malformed for the requested operation."""


class LatticeDiagram:
    """Nodes, labeled cover edges and a partition -> handle index.

    ``cumulative=True`` marks an L_B(<=n) diagram whose nodes may have any
    weight up to ``weight_n``.
    """

    def __init__(self, weight_n: int, cumulative: bool = False):
        if weight_n < 0:
            raise ValueError("weight must be nonnegative")
        self.weight_n = weight_n
        self.cumulative = cumulative
        self.frontier_handles: Optional[List[int]] = None
        self._tails: List[tuple] = []
        self._tailsum = array("q")
        self._deficit = array("q")
        self._index: Dict[int, Dict[tuple, int]] = {}
        self._head = array("q")
        self._esrc = array("q")
        self._elab = array("q")
        self._edst = array("q")
        self._enext = array("q")
        self._alive = bytearray()
        self._num_alive = 0

    # -- nodes -----------------------------------------------------------

    def _add_tail(self, tail: tuple, tailsum: int, deficit: int = 0) -> int:
        h = len(self._tails)
        self._tails.append(tail)
        self._tailsum.append(tailsum)
        self._deficit.append(deficit)
        self._head.append(-1)
        bucket = self._index.get(deficit)
        if bucket is None:
            bucket = self._index[deficit] = {}
        bucket[tail] = h
        return h

    def add_node(self, p) -> int:
        p = Partition(p)
        w = p.weight
        if w > self.weight_n or (not self.cumulative and w != self.weight_n):
            raise DiagramError(f"{p} has weight {w}, diagram holds weight {self.weight_n}")
        deficit = self.weight_n - w
        tail = tuple(p[1:])
        found = self._index.get(deficit, {}).get(tail)
        if found is not None:
            return found
        return self._add_tail(tail, sum(tail), deficit)

    def handle(self, p) -> int:
        """Node handle of partition ``p``; raises KeyError if absent."""
        p = Partition(p)
        deficit = self.weight_n - sum(p)
        try:
            return self._index[deficit][tuple(p[1:])]
        except KeyError:
            raise KeyError(str(p)) from None

    def __contains__(self, p) -> bool:
        try:
            self.handle(p)
        except (KeyError, ValueError):
            return False
        return True

    def partition(self, h: int) -> Partition:
        tail = self._tails[h]
        first = self.weight_n - self._deficit[h] - self._tailsum[h]
        if first == 0:
            return Partition._trusted(())
        return Partition._trusted((first,) + tail)

    def _parts(self, h: int) -> tuple:
        first = self.weight_n - self._deficit[h] - self._tailsum[h]
        return (first,) + self._tails[h] if first else ()

    def _tail_handle(self, tail: tuple, deficit: int = 0) -> int:
        return self._index[deficit][tail]

    @property
    def num_nodes(self) -> int:
        return len(self._tails)

    @property
    def num_edges(self) -> int:
        return self._num_alive

    @property
    def nodes(self) -> frozenset:
        return frozenset(self.partition(h) for h in range(len(self._tails)))

    def sorted_nodes(self) -> List[Partition]:
        return sorted(self.partition(h) for h in range(len(self._tails)))

    # -- edges -----------------------------------------------------------

    def add_edge(self, src: int, label: int, dst: int) -> bool:
        """Add ``src -(label)-> dst``; False if that pair is already linked.

        Edges are identified by (source, target).  Re-adding a pair under a
        different label is an error, never a second edge.
        """
        e = self._head[src]
        while e != -1:
            if self._alive[e] and self._edst[e] == dst:
                if self._elab[e] != label:
                    raise DiagramError(
                        f"{self.partition(src)} -> {self.partition(dst)} already has label "
                        f"{self._elab[e]}, not {label}"
                    )
                return False
            e = self._enext[e]
        eid = len(self._esrc)
        self._esrc.append(src)
        self._elab.append(label)
        self._edst.append(dst)
        self._enext.append(self._head[src])
        self._alive.append(1)
        self._head[src] = eid
        self._num_alive += 1
        return True

    def remove_edge(self, src: int, dst: int) -> bool:
        """Tombstone the edge ``src -> dst``; False if there was none."""
        e = self._head[src]
        while e != -1:
            if self._alive[e] and self._edst[e] == dst:
                self._alive[e] = 0
                self._num_alive -= 1
                return True
            e = self._enext[e]
        return False

    def _out(self, h: int, limit: Optional[int] = None) -> Iterator[Tuple[int, int, int]]:
        e = self._head[h]
        alive, lab, dst, nxt = self._alive, self._elab, self._edst, self._enext
        while e != -1:
            if alive[e] and (limit is None or e < limit):
                yield e, lab[e], dst[e]
            e = nxt[e]

    def _target(self, h: int, label: int, limit: Optional[int] = None) -> int:
        for _, lab, dst in self._out(h, limit):
            if lab == label:
                return dst
        raise DiagramError(f"{self.partition(h)} has no edge labeled {label}")

    def successors(self, p) -> List[Tuple[int, Partition]]:
        h = self.handle(p)
        return sorted((lab, self.partition(dst)) for _, lab, dst in self._out(h))

    def edge_triples(self) -> Iterator[Tuple[int, int, int]]:
        """Alive edges as (src_handle, label, dst_handle)."""
        for e in range(len(self._esrc)):
            if self._alive[e]:
                yield self._esrc[e], self._elab[e], self._edst[e]

    @property
    def edges(self) -> frozenset:
        part = self.partition
        return frozenset(Transition(part(s), lab, part(t)) for s, lab, t in self.edge_triples())

    def sorted_edges(self) -> List[Transition]:
        return sorted(self.edges)

    def tops(self) -> List[Partition]:
        indeg = bytearray(self.num_nodes)
        for _, _, t in self.edge_triples():
            indeg[t] = 1
        return sorted(self.partition(h) for h in range(self.num_nodes) if not indeg[h])

    def bottoms(self) -> List[Partition]:
        return sorted(
            self.partition(h) for h in range(self.num_nodes) if next(self._out(h), None) is None
        )

    def down_set(self, p) -> Set[Partition]:
        """Everything reachable from ``p`` along edges, ``p`` included."""
        start = self.handle(p)
        seen = {start}
        queue = deque([start])
        while queue:
            h = queue.popleft()
            for _, _, t in self._out(h):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return {self.partition(h) for h in seen}

    def copy(self) -> "LatticeDiagram":
        other = LatticeDiagram(self.weight_n, self.cumulative)
        other.frontier_handles = None if self.frontier_handles is None else list(self.frontier_handles)
        other._tails = list(self._tails)
        other._tailsum = array("q", self._tailsum)
        other._deficit = array("q", self._deficit)
        other._index = {k: dict(v) for k, v in self._index.items()}
        other._head = array("q", self._head)
        other._esrc = array("q", self._esrc)
        other._elab = array("q", self._elab)
        other._edst = array("q", self._edst)
        other._enext = array("q", self._enext)
        other._alive = bytearray(self._alive)
        other._num_alive = self._num_alive
        return other

    def __repr__(self) -> str:
        kind = "L_B(<=%d)" if self.cumulative else "L_B(%d)"
        return f"<LatticeDiagram {kind % self.weight_n}: {self.num_nodes} nodes, {self.num_edges} edges>"


# -- construction ----------------------------------------------------------


def build_naive(n: int) -> LatticeDiagram:
    """Breadth-first closure of the grain moves starting from ``(n)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = LatticeDiagram(n)
    top = (n,) if n else ()
    start = d.add_node(top)
    queue = deque([(top, start)])
    while queue:
        s, h = queue.popleft()
        for label, t in moves(s):
            tail = t[1:]
            hit = d._index[0].get(tail)
            if hit is None:
                hit = d._add_tail(tail, sum(tail))
                queue.append((t, hit))
            d.add_edge(h, label, hit)
    return d


def lb0() -> LatticeDiagram:
    """L_B(0) with (empty) frontier handles, the start of the iterated path."""
    d = LatticeDiagram(0)
    d.add_node(())
    d.frontier_handles = []
    return d


@dataclass
class FrontierSets:
    """Partitions of n by the shape of column 1.

    ``S``: slippery step at 1; ``T``: non-slippery step at 1;
    ``U[ell]``: slippery plateau of length ell at 1.
    """

    S: Set[Partition] = field(default_factory=set)
    T: Set[Partition] = field(default_factory=set)
    U: Dict[int, Set[Partition]] = field(default_factory=dict)


def _frontier_kind(s: tuple):
    """'S', 'T', an int ell (U_ell) or None, by the shape at column 1."""
    if not s:
        return None
    c = classify_at(s, 1)
    if c.kind is ShapeKind.SLIPPERY_STEP:
        return "S"
    if c.kind is ShapeKind.NON_SLIPPERY_STEP:
        return "T"
    if c.kind is ShapeKind.SLIPPERY_PLATEAU:
        return c.ell
    return None


def frontier_seeds(n: int) -> List[tuple]:
    """The dominance-greatest frontier element for each first part and run.

    For every p: ``(p+1, p, ..., p, r)`` with r < p heads the S and T elements
    with first part p+1, and ``(p^ell, p-1, ..., p-1, r)`` with r < p-1 heads
    U_ell among those with first part p.
    """
    seeds = []
    for p in range(1, n + 1):
        rest = n - (p + 1)
        if rest >= p:
            m, r = divmod(rest, p)
            seeds.append((p + 1,) + (p,) * m + ((r,) if r else ()))
        if p == 1:
            seeds.append((1,) * n)
            continue
        ell = 1
        while n - ell * p >= p - 1:
            rest = n - ell * p
            if p == 2:
                seeds.append((2,) * ell + (1,) * rest)
            else:
                j, r = divmod(rest, p - 1)
                seeds.append((p,) * ell + (p - 1,) * j + ((r,) if r else ()))
            ell += 1
    return seeds


def _seed_handles(d: LatticeDiagram) -> List[int]:
    bucket = d._index[0]
    return [bucket[s[1:]] for s in frontier_seeds(d.weight_n)]


def _frontier_handles(d: LatticeDiagram):
    """(S, T, U) as handle sets.

    Uses a depth-first search inside the frontier region from the retained
    seed handles when available, otherwise a scan of every node.
    """
    S: Set[int] = set()
    T: Set[int] = set()
    U: Dict[int, Set[int]] = {}

    def place(h, kind):
        if kind == "S":
            S.add(h)
        elif kind == "T":
            T.add(h)
        else:
            U.setdefault(kind, set()).add(h)

    if d.frontier_handles is None:
        for h in range(d.num_nodes):
            kind = _frontier_kind(d._parts(h))
            if kind is not None:
                place(h, kind)
        return S, T, U

    seen: Set[int] = set()
    stack = []
    for h in d.frontier_handles:
        if h in seen:
            continue
        kind = _frontier_kind(d._parts(h))
        if kind is not None:
            seen.add(h)
            place(h, kind)
            stack.append(h)
    while stack:
        h = stack.pop()
        for _, _, t in d._out(h):
            if t in seen:
                continue
            kind = _frontier_kind(d._parts(t))
            if kind is not None:
                seen.add(t)
                place(t, kind)
                stack.append(t)
    return S, T, U


def find_frontier_sets(d: LatticeDiagram) -> FrontierSets:
    if d.cumulative:
        raise DiagramError("frontier sets are defined for single-level diagrams")
    S, T, U = _frontier_handles(d)
    part = d.partition
    return FrontierSets(
        S={part(h) for h in S},
        T={part(h) for h in T},
        U={ell: {part(h) for h in hs} for ell, hs in U.items()},
    )


@dataclass
class GrowthStats:
    weight: int
    added_nodes: int = 0
    added_edges: int = 0
    removed_edges: int = 0

    @property
    def added_items(self) -> int:
        return self.added_nodes + self.added_edges


def _check_growable(d: LatticeDiagram) -> None:
    if d.cumulative:
        raise DiagramError("cannot grow an L_B(<=n) diagram")
    if d.num_nodes == 0:
        raise DiagramError("empty diagram")
    top = (d.weight_n,) if d.weight_n else ()
    if top[1:] not in d._index.get(0, {}):
        raise DiagramError(f"diagram has no top node {Partition(top)}")


def grow(d: LatticeDiagram) -> GrowthStats:
    """Turn the L_B(n) diagram ``d`` into L_B(n+1), in place.

    Every old node implicitly receives a grain on column 1; then the
    elements S↓2, T↓2 and U_ell↓(ell+1) are added along with the edges
    among them copied from L_B(n), and the edges around them are patched.
    """
    _check_growable(d)
    n = d.weight_n
    S, T, U = _frontier_handles(d)
    limit = len(d._esrc)  # edge ids below this belong to L_B(n)
    stats = GrowthStats(weight=n + 1)

    d.weight_n = n + 1
    tails, tailsum = d._tails, d._tailsum
    bucket = d._index[0]

    def bumped(h, col):
        # tail of partition h with a grain added on column col >= 2
        tail = tails[h]
        k = col - 2
        if k == len(tail):
            return tail + (1,)
        return tail[:k] + (tail[k] + 1,) + tail[k + 1 :]

    def node_after(h, col):
        if col == 1:
            return h
        return bucket[bumped(h, col)]

    new: Dict[int, int] = {}
    ST = S | T
    for h in ST:
        new[h] = d._add_tail(bumped(h, 2), tailsum[h] + 1)
    for ell, hs in U.items():
        for h in hs:
            new[h] = d._add_tail(bumped(h, ell + 1), tailsum[h] + 1)
    stats.added_nodes = len(new)

    added = 0
    add = d.add_edge

    # edges inside each block, shifted along with it
    for h in ST:
        nh = new[h]
        for _, lab, t in d._out(h, limit):
            if t in ST:
                added += add(nh, lab, new[t])
    for hs in U.values():
        for h in hs:
            nh = new[h]
            for _, lab, t in d._out(h, limit):
                if t in hs:
                    added += add(nh, lab, new[t])

    removals = []
    for h in S:
        t = d._target(h, 1, limit)
        removals.append((h, t))
        added += add(h, 1, new[h])
        added += add(new[h], 2, t)
    for h in T:
        added += add(h, 1, new[h])
    for h in ST:
        # S and T elements begin with a length-1 slippery plateau, so the
        # cliff-at-column-2 clause of the U rule applies to them as well
        s = d._parts(h)
        if len(s) >= 2 and s[1] - (s[2] if len(s) > 2 else 0) >= 2:
            t = d._target(h, 2, limit)
            added += add(new[h], 2, node_after(t, 2))
    for ell, hs in U.items():
        for h in hs:
            nh = new[h]
            added += add(h, 1, nh)
            s = d._parts(h)
            below = s[ell] if ell < len(s) else 0
            after = s[ell + 1] if ell + 1 < len(s) else 0
            if below - after >= 2:
                t = d._target(h, ell + 1, limit)
                added += add(nh, ell + 1, node_after(t, ell + 1))
            if ell >= 2 and classify_at(s, ell).kind is ShapeKind.SLIPPERY_STEP:
                t = d._target(h, ell, limit)
                added += add(nh, ell + 1, node_after(t, ell))

    for h, t in removals:
        d.remove_edge(h, t)
    stats.removed_edges = len(removals)
    stats.added_edges = added
    d.frontier_handles = _seed_handles(d)
    return stats


def build_incremental(d: LatticeDiagram) -> LatticeDiagram:
    """L_B(n+1) from L_B(n); the input diagram is left untouched."""
    out = d.copy()
    grow(out)
    return out


def build(n: int, method: str = "incremental") -> LatticeDiagram:
    """L_B(n) by iterating :func:`grow` from L_B(0), or by :func:`build_naive`."""
    if method == "naive":
        return build_naive(n)
    if method != "incremental":
        raise ValueError(f"unknown method {method!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = lb0()
    for _ in range(n):
        grow(d)
    return d


# -- meet and join ---------------------------------------------------------


def _prefix(s, length):
    out = [0]
    for j in range(length):
        out.append(out[-1] + (s[j] if j < len(s) else 0))
    return out


def _from_prefix(prefix) -> Partition:
    return Partition([prefix[j] - prefix[j - 1] for j in range(1, len(prefix))])


def _same_weight(s, t):
    if sum(s) != sum(t):
        raise ValueError(f"weights differ: {sum(s)} != {sum(t)}")


def meet(s, t) -> Partition:
    """Greatest lower bound in dominance order: prefix sums are pointwise minima."""
    _same_weight(s, t)
    m = max(len(s), len(t))
    a, b = _prefix(s, m), _prefix(t, m)
    return _from_prefix([min(x, y) for x, y in zip(a, b)])


def join(s, t) -> Partition:
    """Least upper bound in dominance order.

    Start from the pointwise maximum of the prefix sums and raise entries
    until the profile is concave (nonincreasing increments).  Every raise is
    forced on any concave integer majorant, so the fixpoint is the least one.
    """
    _same_weight(s, t)
    m = max(len(s), len(t))
    a, b = _prefix(s, m), _prefix(t, m)
    g = [max(x, y) for x, y in zip(a, b)]
    todo = deque(range(1, m))
    queued = set(todo)
    while todo:
        j = todo.popleft()
        queued.discard(j)
        need = -(-(g[j - 1] + g[j + 1]) // 2)
        if g[j] < need:
            g[j] = need
            for k in (j - 1, j + 1):
                if 1 <= k < m and k not in queued:
                    todo.append(k)
                    queued.add(k)
    return _from_prefix(g)


# -- verification ----------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class LatticeReport:
    weight_n: int
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self) -> str:
        return "\n".join(f"[n={self.weight_n}] {c}" for c in self.checks)


def verify_lattice(d: LatticeDiagram, relation=None, meet_join_limit: int = 15) -> LatticeReport:
    """Compare ``d`` with the brute-force oracle for its weight."""
    if d.cumulative:
        raise DiagramError("verify_lattice checks single-level diagrams")
    n = d.weight_n
    report = LatticeReport(n)
    add = report.checks.append
    rel = relation or oracle.OrderRelation(n, check=False)
    expected_nodes = set(rel.elements)
    nodes = d.nodes

    count = oracle.partition_count_dp(n)
    add(Check("node count", d.num_nodes == count and nodes == expected_nodes,
              f"{d.num_nodes} nodes, oracle p({n}) = {count}"))

    top = Partition((n,) if n else ())
    bottom = Partition((1,) * n)
    tops, bottoms = d.tops(), d.bottoms()
    add(Check("unique top and bottom", tops == [top] and bottoms == [bottom],
              f"tops {list(map(str, tops))}, bottoms {list(map(str, bottoms))}"))

    edges = d.edges
    pairs = {(e.source, e.target) for e in edges}
    covers = oracle.covers_bruteforce(n, rel)
    add(Check("cover exactness", pairs == covers,
              f"{len(pairs)} edges, {len(covers)} oracle covers, "
              f"{len(covers - pairs)} missing, {len(pairs - covers)} extra"))

    moves_set = {Transition(s, lab, Partition._trusted(t)) for s in nodes for lab, t in moves(s)}
    add(Check("edge labels match grain moves", edges == moves_set and len(pairs) == len(edges),
              f"{len(edges ^ moves_set)} differing labeled edges"))

    if n <= meet_join_limit:
        els = rel.elements
        bad = 0
        for i, s in enumerate(els):
            for t in els[i:]:
                m_, j_ = meet(s, t), join(s, t)
                if (m_ != oracle.meet_bruteforce(s, t, rel) or j_ != oracle.join_bruteforce(s, t, rel)
                        or m_ not in nodes or j_ not in nodes):
                    bad += 1
        add(Check("meet/join closure", bad == 0, f"{bad} bad pairs of {len(els) * (len(els) + 1) // 2}"))
    return report
