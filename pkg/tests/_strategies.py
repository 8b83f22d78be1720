"""Hypothesis strategies shared across the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from lmss.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if not pairs:
        return from_edge_list(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return from_edge_list(n, chosen)


def nonempty_graphs(max_n: int = 8):
    return graphs(min_n=1, max_n=max_n)


def graph_lists(count_min: int = 2, count_max: int = 3, max_n: int = 4):
    return st.lists(nonempty_graphs(max_n=max_n), min_size=count_min, max_size=count_max)
