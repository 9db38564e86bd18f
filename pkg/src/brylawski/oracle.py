"""Brute-force reference implementations.

Nothing here uses the grain rules, the diagram builders or the counting
recurrence; only the ``Partition`` container is shared.  The prefix-sum
code is duplicated on purpose.
"""

from __future__ import annotations

from .partition_core import Partition

__all__ = [
    "OracleError",
    "enumerate_partitions",
    "prefix_sums",
    "dominates",
    "OrderRelation",
    "covers_bruteforce",
    "meet_bruteforce",
    "join_bruteforce",
    "partition_count_dp",
]


class OracleError(AssertionError):
    """The brute-force search found a structural violation (e.g. no unique extremum)."""


def enumerate_partitions(n, max_part=None):
    """All partitions of ``n``, in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(Partition(acc))
            return
        for first in range(min(rest, cap), 0, -1):
            acc.append(first)
            rec(rest - first, first, acc)
            acc.pop()

    rec(n, max_part, [])
    return out


def prefix_sums(s, length):
    out = []
    total = 0
    for j in range(length):
        total += s[j] if j < len(s) else 0
        out.append(total)
    return out


def dominates(s, t):
    """True if t <= s in dominance order (equal weights assumed)."""
    m = max(len(s), len(t))
    return all(a >= b for a, b in zip(prefix_sums(s, m), prefix_sums(t, m)))


class OrderRelation:
    """The full dominance relation on the partitions of ``n``.

    ``leq[(s, t)]`` is True iff s <= t.  The order axioms are checked on
    construction unless ``check=False``.
    """

    def __init__(self, n, check=True):
        self.weight_n = n
        self.elements = enumerate_partitions(n)
        self.leq = {(s, t): dominates(t, s) for s in self.elements for t in self.elements}
        if check:
            self.check_axioms()

    def __call__(self, s, t):
        return self.leq[(s, t)]

    def check_axioms(self):
        els = self.elements
        leq = self.leq
        for s in els:
            if not leq[(s, s)]:
                raise OracleError(f"not reflexive at {s}")
        for s in els:
            for t in els:
                if s != t and leq[(s, t)] and leq[(t, s)]:
                    raise OracleError(f"not antisymmetric at {s}, {t}")
        for s in els:
            ups = [t for t in els if leq[(s, t)]]
            for t in ups:
                for u in els:
                    if leq[(t, u)] and not leq[(s, u)]:
                        raise OracleError(f"not transitive at {s} <= {t} <= {u}")


def covers_bruteforce(n, relation=None):
    """All pairs (s, t) with s > t and nothing strictly between (triple scan)."""
    rel = relation or OrderRelation(n, check=False)
    els = rel.elements
    leq = rel.leq
    out = set()
    for s in els:
        for t in els:
            if s == t or not leq[(t, s)]:
                continue
            between = False
            for u in els:
                if u != s and u != t and leq[(t, u)] and leq[(u, s)]:
                    between = True
                    break
            if not between:
                out.add((s, t))
    return out


def _weight_check(s, t):
    if sum(s) != sum(t):
        raise ValueError(f"weights differ: {sum(s)} != {sum(t)}")


def _score(p):
    # strictly monotone in dominance order: sum of the first n prefix sums
    return sum(prefix_sums(p, sum(p)))


def _extremum(candidates, leq, greatest, what):
    if not candidates:
        raise OracleError(f"no {what} found")
    pick = max(candidates, key=_score) if greatest else min(candidates, key=_score)
    for u in candidates:
        ok = leq[(u, pick)] if greatest else leq[(pick, u)]
        if not ok:
            raise OracleError(f"{what} is not unique: {pick} vs {u}")
    return pick


def meet_bruteforce(s, t, relation=None):
    """Greatest common lower bound, by scanning every partition of the weight."""
    _weight_check(s, t)
    s, t = Partition(s), Partition(t)
    rel = relation or OrderRelation(sum(s), check=False)
    lower = [u for u in rel.elements if rel.leq[(u, s)] and rel.leq[(u, t)]]
    return _extremum(lower, rel.leq, True, f"meet of {s} and {t}")


def join_bruteforce(s, t, relation=None):
    """Least common upper bound, by scanning every partition of the weight."""
    _weight_check(s, t)
    s, t = Partition(s), Partition(t)
    rel = relation or OrderRelation(sum(s), check=False)
    upper = [u for u in rel.elements if rel.leq[(s, u)] and rel.leq[(t, u)]]
    return _extremum(upper, rel.leq, False, f"join of {s} and {t}")


def partition_count_dp(n):
    """p(n) by the bounded-part coin-change table."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]
