"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its measured detail,
so ``pytest tests/test_acceptance.py`` (or running this file directly)
gives a one-line-per-criterion report.
"""

import time
from itertools import combinations_with_replacement

import pytest

from brylawski import oracle
from brylawski.bench import benchmark, spread
from brylawski.export import to_edges
from brylawski.infinite import build_l_leq, chi, inf_join, inf_meet, inf_transitions, pi_embed
from brylawski.lattice import build, build_naive, join, meet
from brylawski.partition_core import Partition, moves
from brylawski.tree import children, count_length_exact, level, parent, partition_count, xk_subtree


def _report(number, title, ok, detail, seconds, budget):
    ok = ok and seconds < budget
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} ({detail}; {seconds:.1f}s of {budget}s)"
    return ok, line


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for n in range(13):
        rel = oracle.OrderRelation(n, check=False)
        got = {(s, Partition(t)) for s in rel.elements for _, t in moves(s)}
        if got != oracle.covers_bruteforce(n, rel):
            bad.append(n)
    return _report(1, "cover exactness n<=12", not bad, f"mismatches at {bad}", time.perf_counter() - t0, 60)


def criterion_2():
    t0 = time.perf_counter()
    bad = [n for n in range(13) if to_edges(build(n, "incremental")) != to_edges(build_naive(n))]
    return _report(2, "incremental == naive n<=12", not bad, f"mismatches at {bad}", time.perf_counter() - t0, 30)


def criterion_3():
    t0 = time.perf_counter()
    pairs = bad = 0
    for n in range(11):
        rel = oracle.OrderRelation(n, check=False)
        for s, t in combinations_with_replacement(rel.elements, 2):
            pairs += 1
            if meet(s, t) != oracle.meet_bruteforce(s, t, rel) or join(s, t) != oracle.join_bruteforce(s, t, rel):
                bad += 1
    d = build_l_leq(8)
    els = sorted(d.nodes)
    downs = {p: d.down_set(p) for p in els}
    inf_bad = 0
    for a, b in combinations_with_replacement(els, 2):
        lower = downs[a] & downs[b]
        greatest = [g for g in lower if lower <= downs[g]]
        if len(greatest) != 1 or chi(greatest[0]) != inf_meet(chi(a), chi(b)):
            inf_bad += 1
    detail = f"{pairs} finite pairs, {bad} bad; {len(els)} elements of L_B(<=8), {inf_bad} bad infima"
    return _report(3, "meet/join formulas", bad == 0 and inf_bad == 0, detail, time.perf_counter() - t0, 120)


def criterion_4():
    t0 = time.perf_counter()
    bad = checked = 0
    for n in range(1, 9):
        els = oracle.enumerate_partitions(n)
        for a, b in combinations_with_replacement(els, 2):
            checked += 1
            if pi_embed(meet(a, b)) != inf_meet(pi_embed(a), pi_embed(b)):
                bad += 1
            if pi_embed(join(a, b)) != inf_join(pi_embed(a), pi_embed(b)):
                bad += 1
    for n in range(9):
        for s in oracle.enumerate_partitions(n):
            want = {(lab + 1, chi(Partition(t))) for lab, t in moves(s)}
            want.add((1, chi(s.add(1))))
            if inf_transitions(chi(s)) != want:
                bad += 1
    return _report(4, "embedding and label shift n<=8", bad == 0, f"{checked} pairs, {bad} violations",
                   time.perf_counter() - t0, 60)


def criterion_5():
    t0 = time.perf_counter()
    bad = []
    for n in range(16):
        lv = level(n, check=True)
        if lv != set(oracle.enumerate_partitions(n)):
            bad.append(n)
            continue
        if n and any((lab, s) not in children(f) for s in lv for lab, f in [parent(s)]):
            bad.append(n)
    return _report(5, "tree levels and unique parent n<=15", not bad, f"failures at {bad}",
                   time.perf_counter() - t0, 30)


def criterion_6():
    t0 = time.perf_counter()
    bad = [n for n in range(41) if partition_count(n) != oracle.partition_count_dp(n)]
    for n in range(1, 31):
        by_len = {}
        for p in oracle.enumerate_partitions(n):
            by_len[len(p)] = by_len.get(len(p), 0) + 1
        if any(count_length_exact(n, k) != by_len.get(k, 0) for k in range(1, n + 1)):
            bad.append(n)
    return _report(6, "c(n,n) n<=40 and c(n-k,k) n<=30", not bad, f"failures at {bad}",
                   time.perf_counter() - t0, 10)


def criterion_7():
    t0 = time.perf_counter()
    n_max = 20
    by_len = {}
    for n in range(n_max + 1):
        for p in oracle.enumerate_partitions(n):
            by_len.setdefault(len(p), set()).add(p)
    bad = [k for k in range(1, 7) if xk_subtree((1,) * k, n_max - k) != by_len[k]]
    return _report(7, "length-k subtrees k<=6, N<=20", not bad, f"failures at k in {bad}",
                   time.perf_counter() - t0, 30)


def criterion_8():
    t0 = time.perf_counter()
    rows = benchmark(30, 60)
    ratio = spread(rows)
    per = [r.per_item * 1e6 for r in rows]
    detail = f"max/min time per item {ratio:.2f} (limit 5), {min(per):.2f}..{max(per):.2f} us"
    return _report(8, "linear-time step n in [30,60)", ratio <= 5, detail, time.perf_counter() - t0, 600)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(criterion, capsys):
    ok, line = criterion()
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [c() for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
