from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import stirling

from ceswb.chords import ChordDiagram, enumerate_diagrams, good_labelings
from ceswb.ncpart import (
    NCPartition,
    chain_of_labeled_diagram,
    count_maximal_nc_chains,
    diagram_leaf_distribution,
    enumerate_nc_chains,
    is_noncrossing,
    labeled_diagram_of_chain,
    merged_blocks,
    noncrossing_partitions,
    tree_leaf_distribution,
    validate_chain,
)


def trees_with_leaves(m, r):
    """Labeled trees on m vertices with exactly r leaves: m!/r! * S(m-2, m-r)."""
    return factorial(m) // factorial(r) * int(stirling(m - 2, m - r))


@st.composite
def good_labeled(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    d = draw(st.sampled_from(enumerate_diagrams(n, k)))
    return draw(st.sampled_from(good_labelings(d)))


def test_partition_is_canonical():
    assert NCPartition((5, 5, 2)) == NCPartition((0, 0, 1))
    assert NCPartition.from_blocks([[3], [1, 2]]).blocks() == [[1, 2], [3]]
    assert str(NCPartition.from_blocks([[1, 3], [2]])) == "{{1,3}, {2}}"


def test_from_blocks_validates():
    with pytest.raises(ValueError):
        NCPartition.from_blocks([[1], [3]])


def test_crossing_detection():
    assert not is_noncrossing(NCPartition.from_blocks([[1, 3], [2, 4]]))
    assert is_noncrossing(NCPartition.from_blocks([[1, 4], [2, 3]]))


@pytest.mark.parametrize("m", range(1, 8))
def test_nc_count_is_catalan(m):
    assert len(noncrossing_partitions(m)) == comb(2 * m, m) // (m + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_maximal_chain_count(n):
    assert count_maximal_nc_chains(n) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_chain_counts_match_labelings(n):
    for k in range(n + 1):
        expected = sum(len(good_labelings(d)) for d in enumerate_diagrams(n, k))
        assert len(enumerate_nc_chains(n, k)) == expected


def test_small_chain_values():
    assert [len(enumerate_nc_chains(4, k)) for k in (1, 2, 3)] == [10, 50, 125]


@given(good_labeled())
def test_round_trip_from_diagram(d):
    chain = chain_of_labeled_diagram(d)
    assert len(chain) == d.k + 1
    assert labeled_diagram_of_chain(chain) == d


@pytest.mark.parametrize("n", range(1, 5))
def test_round_trip_from_chain(n):
    for k in range(n + 1):
        for chain in enumerate_nc_chains(n, k):
            assert chain_of_labeled_diagram(labeled_diagram_of_chain(chain)) == chain


def test_chain_of_path():
    d = ChordDiagram.from_pairs(2, [(0, 1), (1, 2)], labels=(1, 2))
    assert [p.blocks() for p in chain_of_labeled_diagram(d)] == [[[1], [2], [3]], [[1, 2], [3]], [[1, 2, 3]]]


def test_chain_rejects_bad_labels():
    d = ChordDiagram.from_pairs(2, [(0, 1), (1, 2)], labels=(2, 1))
    with pytest.raises(ValueError):
        chain_of_labeled_diagram(d)


def test_validate_chain_errors():
    s = NCPartition.singletons(4)
    with pytest.raises(ValueError):
        validate_chain([NCPartition.from_blocks([[1, 2], [3], [4]])])
    with pytest.raises(ValueError):
        validate_chain([s, NCPartition.from_blocks([[1, 3], [2, 4]])])
    with pytest.raises(ValueError):
        merged_blocks(s, NCPartition.from_blocks([[1, 2, 3], [4]]))


@pytest.mark.parametrize("n", range(1, 6))
def test_tree_distribution_matches_formula(n):
    m = n + 1
    expected = {r: trees_with_leaves(m, r) for r in range(2, m + 1) if trees_with_leaves(m, r)}
    assert tree_leaf_distribution(n) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_diagram_distribution_matches_trees(n):
    assert diagram_leaf_distribution(n) == tree_leaf_distribution(n)


def test_four_vertex_trees():
    assert tree_leaf_distribution(3) == {2: 12, 3: 4}
