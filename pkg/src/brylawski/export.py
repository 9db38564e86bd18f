"""Text, edge-list, DOT and JSON forms of a diagram.

Output is deterministic: nodes are sorted by their part sequence and edges
by (source, label).  The edge-list and JSON readers rebuild a diagram
without frontier handles, so growing a loaded diagram scans all nodes.
"""

from __future__ import annotations

import json

from .lattice import DiagramError, LatticeDiagram
from .partition_core import parse_partition

__all__ = ["FORMATS", "to_edges", "to_dot", "to_json", "to_text", "dump", "from_edges", "from_json"]

FORMATS = ("edges", "dot", "json", "text")


def _header(d: LatticeDiagram) -> str:
    return f"n<={d.weight_n}" if d.cumulative else f"n={d.weight_n}"


def to_edges(d: LatticeDiagram) -> str:
    lines = [_header(d)]
    lines += [f"{e.source}\t{e.label}\t{e.target}" for e in d.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_dot(d: LatticeDiagram, name: str = None) -> str:
    if name is None:
        name = f"L_B(<={d.weight_n})" if d.cumulative else f"L_B({d.weight_n})"
    lines = [f'digraph "{name}" {{']
    lines += [f'  "{p}";' for p in d.sorted_nodes()]
    lines += [f'  "{e.source}" -> "{e.target}" [label={e.label}];' for e in d.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(d: LatticeDiagram) -> str:
    obj = {"n": d.weight_n}
    if d.cumulative:
        obj["cumulative"] = True
    obj["nodes"] = [str(p) for p in d.sorted_nodes()]
    obj["edges"] = [[str(e.source), e.label, str(e.target)] for e in d.sorted_edges()]
    return json.dumps(obj) + "\n"


def to_text(d: LatticeDiagram) -> str:
    """One line per node: the node, then its labeled successors."""
    lines = [_header(d)]
    for p in d.sorted_nodes():
        succ = " ".join(f"-{lab}-> {t}" for lab, t in d.successors(p))
        lines.append(f"{p}: {succ}" if succ else f"{p}:")
    return "\n".join(lines) + "\n"


def dump(d: LatticeDiagram, fmt: str) -> str:
    try:
        writer = {"edges": to_edges, "dot": to_dot, "json": to_json, "text": to_text}[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}") from None
    return writer(d)


def _parse_header(line: str):
    line = line.strip()
    if line.startswith("n<="):
        return int(line[3:]), True
    if line.startswith("n="):
        return int(line[2:]), False
    raise DiagramError(f"bad header line {line!r}")


def _assemble(n, cumulative, nodes, edges) -> LatticeDiagram:
    d = LatticeDiagram(n, cumulative)
    for p in nodes:
        d.add_node(p)
    for s, label, t in edges:
        d.add_edge(d.add_node(s), label, d.add_node(t))
    if d.num_nodes == 0:
        d.add_node((n,) if n else ())
    return d


def from_edges(text: str) -> LatticeDiagram:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DiagramError("empty edge list")
    n, cumulative = _parse_header(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split("\t")
        if len(parts) != 3:
            raise DiagramError(f"bad edge line {ln!r}")
        edges.append((parse_partition(parts[0]), int(parts[1]), parse_partition(parts[2])))
    return _assemble(n, cumulative, [], edges)


def from_json(text: str) -> LatticeDiagram:
    obj = json.loads(text)
    nodes = [parse_partition(p) for p in obj["nodes"]]
    edges = [(parse_partition(s), int(lab), parse_partition(t)) for s, lab, t in obj["edges"]]
    return _assemble(int(obj["n"]), bool(obj.get("cumulative", False)), nodes, edges)
