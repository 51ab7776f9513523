from __future__ import annotations

import pytest

from tokengraphs.errors import ParameterError
from tokengraphs.families import (
    FamilySpec,
    complete_bipartite,
    cycle_with_bicliques,
    diamond,
    generate,
    kneser,
    star,
)


@pytest.mark.parametrize(
    "family, params, n, edges",
    [
        ("path", (1,), 1, 0),
        ("path", (5,), 5, 4),
        ("cycle", (7,), 7, 7),
        ("complete", (5,), 5, 10),
        ("complete_bipartite", (2, 3), 5, 6),
        ("star", (4,), 5, 4),
        ("diamond", (), 4, 5),
        ("kneser", (5, 2), 10, 15),
        ("cycle_with_bicliques", (3, 2), 6, 7),
        ("cycle_with_bicliques", (4, 1, 2), 9, 10),
    ],
)
def test_sizes(family, params, n, edges):
    g = generate(FamilySpec(family, params))
    assert g.n == n
    assert g.edge_count == edges


def test_petersen_is_cubic():
    assert kneser(5, 2).degrees() == [3] * 10


def test_complete_bipartite_sides():
    g = complete_bipartite(2, 3)
    assert g.neighbors(0) == [2, 3, 4]
    assert g.neighbors(4) == [0, 1]
    assert not g.has_edge(0, 1)


def test_star_centre_is_zero():
    assert star(3).degrees() == [3, 1, 1, 1]


def test_diamond_missing_edge():
    g = diamond()
    assert not g.has_edge(2, 3)
    assert g.degrees() == [3, 3, 2, 2]


def test_cycle_with_bicliques_layout():
    g = cycle_with_bicliques(3, 2)
    # cycle 0..2, fresh 3 and 4, apex 5
    assert g.degrees() == [4, 2, 2, 2, 2, 2]
    assert g.neighbors(5) == [3, 4]
    assert g.neighbors(0) == [1, 2, 3, 4]


def test_generate_is_deterministic():
    spec = FamilySpec("kneser", (6, 2))
    assert generate(spec) == generate(spec)


def test_label():
    assert FamilySpec("complete_bipartite", (2, 3)).label() == "complete_bipartite(2,3)"


@pytest.mark.parametrize(
    "family, params, match",
    [
        ("cycle", (2,), "cycle length"),
        ("path", (2, 3), "takes 1 parameter"),
        ("path", (0,), r"params\[0\]"),
        ("kneser", (3, 2), "n >= 2k"),
        ("cycle_with_bicliques", (3, 1, 1, 1, 1), "exceed cycle length"),
        ("wheel", (5,), "unknown family"),
    ],
)
def test_invalid_specs(family, params, match):
    with pytest.raises(ParameterError, match=match):
        FamilySpec(family, params)
