from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from tokengraphs.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graphs_with_permutation(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    images = draw(st.permutations(list(range(g.n))))
    return g, list(images)


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


@pytest.fixture
def c4() -> Graph:
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def p3() -> Graph:
    return from_edge_list(3, [(0, 1), (1, 2)])
