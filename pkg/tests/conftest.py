from hypothesis import settings
from hypothesis import strategies as st

from brylawski.partition_core import Partition

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, max_weight=14):
    n = draw(st.integers(0, max_weight))
    parts = []
    rest, cap = n, n
    while rest:
        p = draw(st.integers(1, min(rest, cap)))
        parts.append(p)
        rest -= p
        cap = p
    return Partition(parts)


@st.composite
def partition_pairs(draw, max_weight=14):
    s = draw(partitions(max_weight))
    n = s.weight
    parts = []
    rest, cap = n, n
    while rest:
        p = draw(st.integers(1, min(rest, cap)))
        parts.append(p)
        rest -= p
        cap = p
    return s, Partition(parts)
