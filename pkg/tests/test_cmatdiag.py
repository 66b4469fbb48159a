import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ceswb.chords import Chord, ChordDiagram, enumerate_diagrams
from ceswb.cmatdiag import (
    SignedChord,
    all_orientations,
    bfs_diagrams,
    classified_diagrams,
    cmatrix_of_diagram,
    diagram_of_cmatrix,
    is_cmatrix_diagram,
    is_weakly_separated,
    mutate_diagram,
    mutate_diagram_traced,
    pair_admissible,
    st_witness,
    unreachable_cecs,
)
from ceswb.exchange import CMatrix, c_matrix_of, framed_matrix, mutate, mutate_sequence
from ceswb.reptheory import hom_dim, is_exceptional_sequence, rep_from_dim

seq_strategy = st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), max_size=10)))


def sc(tail, head):
    return SignedChord.from_arrow(tail, head)


def test_initial_diagram_is_positive_path():
    d = diagram_of_cmatrix(c_matrix_of(framed_matrix(3)))
    assert d.arrows() == ((0, 1), (1, 2), (2, 3))
    assert d.labels == (1, 2, 3)


@given(seq_strategy)
def test_cmatrix_diagram_round_trip(case):
    n, seq = case
    C = c_matrix_of(mutate_sequence(framed_matrix(n), seq))
    assert cmatrix_of_diagram(diagram_of_cmatrix(C)) == C


@given(seq_strategy, st.data())
def test_commuting_square_random(case, data):
    n, seq = case
    B = mutate_sequence(framed_matrix(n), seq)
    k = data.draw(st.integers(0, n - 1))
    d = diagram_of_cmatrix(c_matrix_of(B))
    assert mutate_diagram(d, B, k) == diagram_of_cmatrix(c_matrix_of(mutate(B, k)))


def test_commuting_square_exhaustive(seeds_by_n):
    for n, seeds in seeds_by_n.items():
        for s in seeds:
            d = diagram_of_cmatrix(c_matrix_of(s.matrix))
            for k in range(n):
                assert mutate_diagram(d, s.matrix, k) == diagram_of_cmatrix(c_matrix_of(mutate(s.matrix, k)))


def test_rewrite_cases_seen_on_reachable_seeds(seeds_by_n):
    # under the sign condition the shared endpoint is always head-to-tail,
    # so only the c and d rewrites are ever triggered
    seen = set()
    for n, seeds in seeds_by_n.items():
        for s in seeds:
            d = diagram_of_cmatrix(c_matrix_of(s.matrix))
            for k in range(n):
                seen.update(case for _, case in mutate_diagram_traced(d, s.matrix, k)[1])
    assert seen == {"c", "d", "ii"}


def test_a3_trace():
    B = framed_matrix(3)
    d = diagram_of_cmatrix(c_matrix_of(B))
    d1, trace = mutate_diagram_traced(d, B, 0)
    assert trace == [(1, "c"), (0, "ii")]
    assert d1.arrows() == ((1, 0), (0, 2), (2, 3))
    d2, trace = mutate_diagram_traced(d1, mutate(B, 0), 2)
    assert trace == [(2, "ii")]
    assert d2.arrows() == ((1, 0), (0, 2), (3, 2))


def test_mutation_rejects_mismatched_diagram():
    B = framed_matrix(2)
    wrong = ChordDiagram.oriented(2, [(1, 0), (1, 2)], labels=(1, 2))
    with pytest.raises(ValueError):
        mutate_diagram(wrong, B, 0)


def test_same_sign_hom_vanishing(seeds_by_n):
    for seeds in seeds_by_n.values():
        for s in seeds:
            C = c_matrix_of(s.matrix)
            reps = [rep_from_dim(tuple(abs(x) for x in r)) for r in C.rows]
            for a, b in itertools.permutations(range(C.n), 2):
                if C.row_sign(a) == C.row_sign(b):
                    assert hom_dim(reps[a], reps[b]) == 0


def test_weak_separation():
    # neighbours 0,2,3 of point 1 with incoming from 0 and 3 only: not contiguous
    d = ChordDiagram.oriented(3, [(0, 1), (1, 2), (3, 1)])
    assert not is_weakly_separated(d, 1)
    d = ChordDiagram.oriented(3, [(0, 1), (2, 1), (1, 3)])
    assert is_weakly_separated(d, 1)


@pytest.mark.parametrize(
    "x,y,ok",
    [
        # shared low endpoint: short negative, long positive
        (sc(1, 0), sc(0, 2), True),
        (sc(0, 1), sc(0, 2), False),
        (sc(1, 0), sc(2, 0), False),
        (sc(0, 1), sc(2, 0), False),
        # shared high endpoint: outer (smaller low end) negative, inner positive
        (sc(2, 0), sc(1, 2), True),
        (sc(0, 2), sc(1, 2), False),
        (sc(2, 0), sc(2, 1), False),
        # middle point: not both leaving it
        (sc(1, 0), sc(1, 2), False),
        (sc(0, 1), sc(1, 2), True),
        (sc(1, 0), sc(2, 1), True),
        # disjoint
        (sc(0, 1), sc(2, 3), True),
    ],
)
def test_pair_table(x, y, ok):
    assert pair_admissible(x, y) is ok
    assert pair_admissible(y, x) is ok


def test_pair_rejects_crossing():
    with pytest.raises(ValueError):
        pair_admissible(sc(0, 2), sc(1, 3))


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42)])
def test_classification_equals_bfs(n, count):
    classified = classified_diagrams(n)
    assert len(classified) == len(set(classified)) == count
    assert set(classified) == bfs_diagrams(n)


def test_classification_needs_orientation_and_span():
    with pytest.raises(ValueError):
        is_cmatrix_diagram(ChordDiagram.from_pairs(2, [(0, 1), (1, 2)]))
    with pytest.raises(ValueError):
        is_cmatrix_diagram(ChordDiagram.oriented(2, [(0, 1)]))


def test_unreachable_collections():
    assert unreachable_cecs(2) == []
    bad = unreachable_cecs(3)
    assert len(bad) == 3
    assert len(unreachable_cecs(4)) == 27
    for d in bad:
        assert not any(is_cmatrix_diagram(o) for o in all_orientations(d))


def test_all_orientations_count():
    d = enumerate_diagrams(3)[0]
    assert len(list(all_orientations(d))) == 8


def test_witness_on_examples():
    C = c_matrix_of(mutate_sequence(framed_matrix(4), [1, 2]))
    assert [str(V) for V in st_witness(C)] == ["X(1,3)", "X(2,3)", "X(1,4)", "X(0,1)"]
    C2 = CMatrix(((1, 0), (0, 1)))
    assert [str(V) for V in st_witness(C2)] == ["X(1,2)", "X(0,1)"]


def test_witness_negatives_first(seeds_by_n):
    for n, seeds in seeds_by_n.items():
        for s in seeds:
            C = c_matrix_of(s.matrix)
            seq = st_witness(C)
            assert len(seq) == n and is_exceptional_sequence(seq)
            d = diagram_of_cmatrix(C)
            positive = {c: h == c.b for c, h in zip(d.chords, d.heads)}
            signs = [positive[Chord(V.i, V.j)] for V in seq]
            assert signs == sorted(signs)


def test_witness_rejects_non_cmatrix():
    C = CMatrix(((1, 1), (0, 1)))
    with pytest.raises(ValueError):
        st_witness(C)
