"""Cross-module invariant suites, run by ``brylawski verify``.

Each suite yields :class:`~brylawski.lattice.Check` records instead of
raising, so one failure does not hide the others.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterator

from . import oracle
from .export import to_edges
from .infinite import chi, inf_join, inf_meet, inf_transitions, pi_embed
from .lattice import Check, LatticeDiagram, _frontier_handles, build, build_naive, join, meet, verify_lattice
from .partition_core import LENGTH_CONVENTION, Partition, moves
from .tree import children, count_length_exact, level, parent, partition_count

__all__ = [
    "cover_exactness",
    "incremental_matches_naive",
    "frontier_traversal_matches_scan",
    "tree_levels",
    "counting",
    "embedding_laws",
    "run_all",
]


def cover_exactness(n: int, relation=None) -> Check:
    rel = relation or oracle.OrderRelation(n, check=False)
    got = {(s, Partition._trusted(t)) for s in rel.elements for _, t in moves(s)}
    want = oracle.covers_bruteforce(n, rel)
    return Check(f"cover exactness n={n}", got == want, f"{len(got)} moves, {len(want)} oracle covers")


def incremental_matches_naive(n: int) -> Check:
    a, b = to_edges(build(n, "incremental")), to_edges(build_naive(n))
    return Check(f"incremental == naive n={n}", a == b, f"{a.count(chr(10)) - 1} edge lines")


def frontier_traversal_matches_scan(d: LatticeDiagram) -> Check:
    seeded = _frontier_handles(d)
    saved, d.frontier_handles = d.frontier_handles, None
    try:
        scanned = _frontier_handles(d)
    finally:
        d.frontier_handles = saved
    return Check(f"frontier traversal == scan n={d.weight_n}", seeded == scanned)


def tree_levels(n: int) -> Check:
    want = set(oracle.enumerate_partitions(n))
    got = level(n, check=True)
    bad_parent = 0
    if n:
        for s in got:
            lab, f = parent(s)
            if (lab, s) not in children(f):
                bad_parent += 1
    return Check(f"tree level n={n}", got == want and bad_parent == 0,
                 f"{len(got)} nodes, {bad_parent} parent mismatches")


def counting(n: int) -> Check:
    els = oracle.enumerate_partitions(n)
    ok = partition_count(n) == oracle.partition_count_dp(n) == len(els)
    for k in range(1, n + 1):
        ok = ok and count_length_exact(n, k) == sum(1 for p in els if len(p) == k)
    return Check(f"counting n={n}", ok, f"c({n},{n}) = {partition_count(n)}")


def embedding_laws(n: int) -> Check:
    """pi preserves meet and join on L_B(n); chi shifts move labels by one."""
    els = oracle.enumerate_partitions(n)
    bad = 0
    if n:
        for a, b in combinations_with_replacement(els, 2):
            if pi_embed(meet(a, b)) != inf_meet(pi_embed(a), pi_embed(b)):
                bad += 1
            if pi_embed(join(a, b)) != inf_join(pi_embed(a), pi_embed(b)):
                bad += 1
    for s in els:
        want = {(lab + 1, chi(Partition._trusted(t))) for lab, t in moves(s)}
        want.add((1, chi(s.add(1))))
        if inf_transitions(chi(s)) != want:
            bad += 1
    return Check(f"embedding laws n={n}", bad == 0, f"{bad} violations")


def run_all(n: int) -> Iterator[Check]:
    yield Check("plateau length convention", True, LENGTH_CONVENTION)
    for m in range(n + 1):
        rel = oracle.OrderRelation(m)
        yield cover_exactness(m, rel)
        yield incremental_matches_naive(m)
        yield from verify_lattice(build(m), rel).checks
        yield frontier_traversal_matches_scan(build(m))
        yield tree_levels(m)
        yield counting(m)
        if m <= 8:
            yield embedding_laws(m)
