import json
import re

import pytest

from brylawski.export import FORMATS, dump, from_edges, from_json, to_dot, to_edges, to_json, to_text
from brylawski.infinite import build_l_leq
from brylawski.lattice import DiagramError, build, build_naive, grow
from brylawski.partition_core import parse_partition

_ID = r'"(?:[^"\\]|\\.)*"|[A-Za-z_][A-Za-z_0-9]*|-?\d+(?:\.\d+)?'
_TOKEN = re.compile(rf"\s*(->|--|[{{}};\[\]=,]|{_ID})")


def parse_dot(text):
    """A minimal parser for the DOT subset: digraph, node and edge statements with attributes."""
    toks, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad DOT near {text[pos:pos + 20]!r}")
        toks.append(m.group(1))
        pos = m.end()
    unq = lambda t: t[1:-1] if t.startswith('"') else t
    it = iter(toks)
    assert next(it) == "digraph"
    name = next(it)
    assert next(it) == "{"
    nodes, edges = set(), []
    tok = next(it)
    while tok != "}":
        src = unq(tok)
        tok = next(it)
        attrs = {}
        if tok == "->":
            dst = unq(next(it))
            tok = next(it)
        else:
            dst = None
        if tok == "[":
            tok = next(it)
            while tok != "]":
                key = tok
                assert next(it) == "="
                attrs[key] = unq(next(it))
                tok = next(it)
                if tok == ",":
                    tok = next(it)
            tok = next(it)
        assert tok == ";", tok
        if dst is None:
            nodes.add(src)
        else:
            edges.append((src, int(attrs["label"]), dst))
        tok = next(it)
    assert next(it, None) is None
    return unq(name), nodes, edges


@pytest.mark.parametrize("n", [0, 1, 3, 6, 9])
def test_dot_round_trip(n):
    d = build(n)
    name, nodes, edges = parse_dot(to_dot(d))
    assert name == f"L_B({n})"
    assert {parse_partition(p) for p in nodes} == d.nodes
    assert {(parse_partition(s), lab, parse_partition(t)) for s, lab, t in edges} == {
        (e.source, e.label, e.target) for e in d.edges
    }


def test_dot_cumulative_parses():
    name, nodes, edges = parse_dot(to_dot(build_l_leq(3)))
    assert name == "L_B(<=3)" and len(nodes) == 7 and sum(1 for e in edges if e[1] == 0) == 4


@pytest.mark.parametrize("n", [0, 2, 5, 10])
def test_edges_round_trip(n):
    d = build(n)
    text = to_edges(d)
    back = from_edges(text)
    assert to_edges(back) == text and back.nodes == d.nodes


@pytest.mark.parametrize("n", [0, 4, 8])
def test_json_round_trip(n):
    d = build(n)
    text = to_json(d)
    obj = json.loads(text)
    assert obj["n"] == n and len(obj["nodes"]) == d.num_nodes
    assert to_json(from_json(text)) == text


def test_json_cumulative_flag():
    text = to_json(build_l_leq(3))
    assert json.loads(text)["cumulative"] is True
    assert to_json(from_json(text)) == text


def test_loaded_diagram_can_grow():
    d = from_edges(to_edges(build(7)))
    grow(d)
    assert to_edges(d) == to_edges(build_naive(8))


def test_edges_header_and_count():
    lines = to_edges(build_naive(3)).splitlines()
    assert lines[0] == "n=3" and len(lines) == 3


def test_text_form():
    lines = to_text(build(3)).splitlines()
    assert lines == ["n=3", "1,1,1:", "2,1: -1-> 1,1,1", "3: -1-> 2,1"]


@pytest.mark.parametrize("fmt", FORMATS)
def test_deterministic(fmt):
    assert dump(build(9), fmt) == dump(build(9), fmt) == dump(build_naive(9), fmt)


def test_bad_inputs():
    with pytest.raises(ValueError):
        dump(build(2), "svg")
    with pytest.raises(DiagramError):
        from_edges("")
    with pytest.raises(DiagramError):
        from_edges("m=3\n")
    with pytest.raises(DiagramError):
        from_edges("n=3\n3 1\n")
