"""The tree of all partitions, where s↓i is a son of s, and path counting.

Every node has a left son s↓1; it has a right son s↓(ell+1) when it begins
with a slippery plateau of length ell.  Level n of the tree is exactly the
set of partitions of n.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .partition_core import Partition, ShapeKind, add_grain, leading_plateau

__all__ = [
    "TreeNode",
    "children",
    "parent",
    "level",
    "subtree",
    "xk_subtree",
    "is_xk_root",
    "ChainReport",
    "xk_chain_decomposition",
    "CountTable",
    "count_paths",
    "partition_count",
    "count_length_exact",
    "tree_edges",
    "tree_dot",
]


@dataclass(frozen=True)
class TreeNode:
    partition: Partition
    parent_label: Optional[int] = None

    @property
    def depth(self) -> int:
        return self.partition.weight


def children(s) -> List[Tuple[int, Partition]]:
    s = Partition(s)
    out = [(1, Partition._trusted(add_grain(s, 1)))]
    shape = leading_plateau(s)
    if shape.kind is ShapeKind.SLIPPERY_PLATEAU:
        out.append((shape.ell + 1, Partition._trusted(add_grain(s, shape.ell + 1))))
    return out


def parent(s) -> Tuple[int, Partition]:
    """The unique (label, father) with ``s`` among the father's sons."""
    s = Partition(s)
    if not s:
        raise ValueError("the root has no parent")
    m = 1
    while m < len(s) and s[m] == s[0]:
        m += 1
    col = 1 if m == 1 else m
    t = list(s)
    t[col - 1] -= 1
    return col, Partition(t)


def level(n: int, check: bool = False) -> Set[Partition]:
    """All nodes at depth ``n``; with ``check`` assert no node is reached twice."""
    if n < 0:
        raise ValueError("depth must be nonnegative")
    current = [Partition()]
    for _ in range(n):
        current = [c for s in current for _, c in children(s)]
    out = set(current)
    if check and len(out) != len(current):
        raise AssertionError(f"level {n}: {len(current) - len(out)} duplicate nodes")
    return out


def subtree(s, depth: int) -> Set[Partition]:
    """Nodes of the full subtree under ``s`` at relative depth <= ``depth``."""
    s = Partition(s)
    out = {s}
    frontier = [s]
    for _ in range(depth):
        frontier = [c for x in frontier for _, c in children(x)]
        out.update(frontier)
    return out


def xk_subtree(s, depth: int) -> Set[Partition]:
    """The X_k subtree rooted at ``s``: the whole subtree if ``s`` has one son,
    otherwise ``s`` with its left subtree."""
    sons = children(s)
    if len(sons) == 1:
        return subtree(s, depth)
    out = {Partition(s)}
    if depth > 0:
        out |= subtree(sons[0][1], depth - 1)
    return out


def is_xk_root(s, k: int) -> bool:
    """True if ``s`` starts with exactly k equal columns followed by a lower one."""
    s = Partition(s)
    if k < 1 or len(s) < k:
        return False
    h = s[0]
    if any(x != h for x in s[:k]):
        return False
    return s.part(k + 1) <= h - 1


@dataclass
class ChainReport:
    root: Partition
    k: int
    depth_bound: int
    chain: List[Partition] = field(default_factory=list)
    labels: List[int] = field(default_factory=list)
    hung: List[Tuple[int, Partition]] = field(default_factory=list)
    level_counts: List[int] = field(default_factory=list)
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def xk_chain_decomposition(s, k: int, depth_bound: int) -> ChainReport:
    """Check that the X_k subtree at ``s`` is a chain of k+1 nodes with edge
    labels 1..k whose i-th node roots an X_{i-1} subtree, down to
    ``depth_bound`` levels below ``s``.
    """
    s = Partition(s)
    if not is_xk_root(s, k):
        raise ValueError(f"{s} is not the root of an X_{k} subtree")
    rep = ChainReport(s, k, depth_bound, chain=[s])

    node = s
    for i in range(1, k + 1):
        sons = children(node)
        pick = sons[0] if i == 1 else (sons[1] if len(sons) == 2 else None)
        if pick is None or pick[0] != i:
            rep.counterexample = f"chain node {node} has no son labeled {i}"
            return rep
        node = pick[1]
        rep.chain.append(node)
        rep.labels.append(i)

    rep.hung.append((0, s))
    for i, c in enumerate(rep.chain[1:], start=2):
        if not is_xk_root(c, i - 1):
            rep.counterexample = f"chain node {c} is not the root of an X_{i - 1} subtree"
            return rep
        rep.hung.append((i - 1, c))

    whole = xk_subtree(s, depth_bound)
    parts = [{s}]
    for i, c in enumerate(rep.chain[1:], start=2):
        if depth_bound - (i - 1) >= 0:
            parts.append(xk_subtree(c, depth_bound - (i - 1)))
    union = set().union(*parts)
    if sum(map(len, parts)) != len(union):
        rep.counterexample = "the hung subtrees overlap"
    elif union != whole:
        extra = sorted(union ^ whole)[:3]
        rep.counterexample = f"decomposition differs from the X_{k} subtree at {list(map(str, extra))}"
    weight = s.weight
    rep.level_counts = [sum(1 for x in whole if x.weight == weight + l) for l in range(depth_bound + 1)]
    return rep


class CountTable:
    """Memo of c(l, k), the number of length-l root paths in an X_k subtree.

    c(l, k) = 1 if l == 0 or k == 1, else the sum of c(l - i, i) for
    i = 1..min(l, k).  Filling is serialized by a lock; reads of filled
    entries are safe from any thread.
    """

    def __init__(self):
        self.memo: Dict[Tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def value(self, l: int, k: int) -> int:
        if l < 0 or k < 0:
            raise ValueError("l and k must be nonnegative")
        if k == 0 and l > 0:
            raise ValueError("c(l, 0) is undefined for l > 0")
        key = (l, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        with self._lock:
            return self._fill(key)

    def _fill(self, key):
        memo = self.memo
        stack = [key]
        while stack:
            l, k = stack[-1]
            if (l, k) in memo:
                stack.pop()
                continue
            if l == 0 or k == 1:
                memo[(l, k)] = 1
                stack.pop()
                continue
            deps = [(l - i, i) for i in range(1, min(l, k) + 1)]
            missing = [dep for dep in deps if dep not in memo]
            if missing:
                stack.extend(missing)
            else:
                memo[(l, k)] = sum(memo[dep] for dep in deps)
                stack.pop()
        return memo[key]

    def to_csv(self) -> str:
        rows = ["l,k,c"] + [f"{l},{k},{c}" for (l, k), c in sorted(self.memo.items())]
        return "\n".join(rows) + "\n"


_default_table = CountTable()


def count_paths(l: int, k: int, table: Optional[CountTable] = None) -> int:
    return (table or _default_table).value(l, k)


def partition_count(n: int, table: Optional[CountTable] = None) -> int:
    """|L_B(n)| = c(n, n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return count_paths(n, n, table)


def count_length_exact(n: int, k: int, table: Optional[CountTable] = None) -> int:
    """Number of partitions of n with exactly k parts, c(n - k, k)."""
    if k == 0:
        if n == 0:
            return 1
        raise ValueError("k = 0 is only valid for n = 0")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    return count_paths(n - k, k, table)


def tree_edges(depth: int) -> List[Tuple[Partition, int, Partition]]:
    """All (father, label, son) edges down to ``depth``, sorted."""
    out = []
    current = [Partition()]
    for _ in range(depth):
        nxt = []
        for s in current:
            for lab, c in children(s):
                out.append((s, lab, c))
                nxt.append(c)
        current = nxt
    return sorted(out)


def tree_dot(depth: int) -> str:
    nodes = sorted(set().union(*(level(d) for d in range(depth + 1))))
    lines = [f'digraph "T_B(depth<={depth})" {{']
    lines += [f'  "{p}";' for p in nodes]
    lines += [f'  "{s}" -> "{c}" [label={lab}];' for s, lab, c in tree_edges(depth)]
    lines.append("}")
    return "\n".join(lines) + "\n"
