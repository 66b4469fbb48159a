"""Oriented chord diagrams of c-matrices.

A c-vector ``+dim X(i,j)`` becomes the chord ``i -> j`` and ``-dim X(i,j)``
the chord ``j -> i``.  Row ``r`` (0-based) of the c-matrix is carried as
chord label ``r + 1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chords import (
    Chord,
    ChordDiagram,
    angular_rank,
    chords_cross,
    enumerate_diagrams,
    labeled_to_seq,
)
from .exchange import CMatrix, c_matrix_of, exchange_graph
from .reptheory import IntervalRep, dim_vector, rep_from_dim


@dataclass(frozen=True)
class SignedChord:
    chord: Chord
    positive: bool

    @property
    def tail(self):
        return self.chord.a if self.positive else self.chord.b

    @property
    def head(self):
        return self.chord.b if self.positive else self.chord.a

    @classmethod
    def from_arrow(cls, tail, head):
        return cls(Chord(tail, head), tail < head)


def diagram_of_cmatrix(C):
    """Oriented, row-labeled diagram of a sign-coherent c-matrix with interval rows."""
    arrows = []
    for r, row in enumerate(C.rows):
        sign = C.row_sign(r)
        V = rep_from_dim(tuple(abs(x) for x in row))
        arrows.append((V.i, V.j) if sign > 0 else (V.j, V.i))
    return ChordDiagram.oriented(C.n, arrows, labels=tuple(range(1, C.n + 1)))


def cmatrix_of_diagram(d):
    """Inverse of ``diagram_of_cmatrix``: label ``l`` gives row ``l - 1``."""
    if d.heads is None:
        raise ValueError("diagram is not oriented")
    labels = d.labels if d.labels is not None else tuple(range(1, d.k + 1))
    rows = [None] * d.k
    for c, label, h in zip(d.chords, labels, d.heads):
        vec = dim_vector(IntervalRep(d.n, c.a, c.b))
        sign = 1 if h == c.b else -1
        rows[label - 1] = tuple(sign * x for x in vec)
    return CMatrix(tuple(rows))


def signed_chords(d):
    return [SignedChord(c, h == c.b) for c, h in zip(d.chords, d.heads)]


def _arrow_by_row(d):
    """row index -> [tail, head] for a row-labeled oriented diagram."""
    out = {}
    for c, label, h in zip(d.chords, d.labels, d.heads):
        out[label - 1] = [c.other(h), h]
    return out


def mutate_diagram_traced(d, B, k):
    """Diagram mutation at ``k`` together with the list of rewrites applied.

    The trace holds ``(j, case)`` for every chord rewritten by step i
    (case one of ``"a"``-``"d"``) and ``(k, "ii")`` for the reversal.
    """
    C = c_matrix_of(B)
    if d != diagram_of_cmatrix(C):
        raise ValueError("diagram does not match the c-matrix of B")
    n = B.n_mutable
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range")
    arrows = _arrow_by_row(d)
    tk, hk = arrows[k]
    sign_k = C.row_sign(k)
    trace = []
    new = {r: list(a) for r, a in arrows.items()}
    for j in range(n):
        bkj = B[k, j]
        if j == k or bkj == 0 or (bkj > 0) == (sign_k > 0):
            continue
        tj, hj = arrows[j]
        if tk == tj:
            new[j] = [hk, hj]
            case = "a"
        elif hk == hj:
            new[j] = [tj, tk]
            case = "b"
        elif hk == tj:
            new[j] = [tk, hj]
            case = "c"
        elif tk == hj:
            new[j] = [tj, hk]
            case = "d"
        else:
            raise ValueError(f"chords of rows {k} and {j} share no endpoint although b[{k}][{j}] != 0")
        trace.append((j, case))
    new[k] = [hk, tk]
    trace.append((k, "ii"))
    out = ChordDiagram.oriented(d.n, [tuple(new[r]) for r in range(n)], labels=tuple(range(1, n + 1)))
    return out, trace


def mutate_diagram(d, B, k):
    return mutate_diagram_traced(d, B, k)[0]


def is_weakly_separated(d, p):
    """The in-neighbours of ``p`` form a contiguous block of its sorted neighbours."""
    nbrs = sorted(c.other(p) for c in d.chords_at(p))
    incoming = [d.head_of(Chord(p, q)) == p for q in nbrs]
    idx = [t for t, flag in enumerate(incoming) if flag]
    if not idx or len(idx) == len(nbrs):
        return True
    return idx[-1] - idx[0] + 1 == len(idx)


def pair_admissible(x, y):
    """False iff two signed chords form a forbidden configuration.

    With shared point ``p``: if ``p`` is the low end of both, the shorter
    chord must be negative and the longer positive; if ``p`` is the high end
    of both, the chord with the smaller low end must be negative and the
    other positive; if ``p`` is the high end of one and the low end of the
    other, the two chords may not both leave ``p``.
    """
    if chords_cross(x.chord, y.chord):
        raise ValueError("crossing chords")
    shared = {x.chord.a, x.chord.b} & {y.chord.a, y.chord.b}
    if not shared:
        return True
    (p,) = shared
    if x.chord.a == p and y.chord.a == p:
        short, long_ = sorted((x, y), key=lambda s: s.chord.b)
        return not short.positive and long_.positive
    if x.chord.b == p and y.chord.b == p:
        outer, inner = sorted((x, y), key=lambda s: s.chord.a)
        return not outer.positive and inner.positive
    return not (x.tail == p and y.tail == p)


def is_cmatrix_diagram(d):
    if d.heads is None:
        raise ValueError("diagram is not oriented")
    if not d.is_spanning:
        raise ValueError("classification applies to spanning diagrams only")
    if not all(is_weakly_separated(d, p) for p in range(d.n_points)):
        return False
    return all(pair_admissible(x, y) for x, y in itertools.combinations(signed_chords(d), 2))


def all_orientations(d):
    for heads in itertools.product(*((c.a, c.b) for c in d.chords)):
        yield d.with_heads(heads)


def classified_diagrams(n, bound=None):
    """All oriented spanning diagrams passing ``is_cmatrix_diagram`` (unlabeled)."""
    out = []
    for d in enumerate_diagrams(n, n, bound):
        out.extend(o for o in all_orientations(d) if is_cmatrix_diagram(o))
    return out


def bfs_diagrams(n, bound=None):
    """Unlabeled oriented diagrams of every c-matrix in the exchange graph."""
    out = set()
    for seed in exchange_graph(n, bound):
        d = diagram_of_cmatrix(c_matrix_of(seed.matrix))
        out.add(ChordDiagram(d.n, d.chords, None, d.heads))
    return out


def unreachable_cecs(n, bound=None):
    """Spanning diagrams for which no orientation passes the classification."""
    return [
        d for d in enumerate_diagrams(n, n, bound) if not any(is_cmatrix_diagram(o) for o in all_orientations(d))
    ]


def st_witness(C):
    """A complete exceptional sequence on the rows of ``C`` with negative rows first.

    Positive chords are labelled 1, 2, ... by repeatedly taking a positive
    chord that is counterclockwise-most among the still unlabelled chords at
    both of its endpoints (ties: smallest tail, then smallest head); the
    negative chords are then labelled the same way.  Large labels come first
    in the resulting sequence.
    """
    d = diagram_of_cmatrix(C)
    if not is_cmatrix_diagram(d):
        raise ValueError("matrix does not pass the c-matrix classification")
    m = d.n_points
    signed = {s.chord: s for s in signed_chords(d)}
    remaining = set(d.chords)
    labels = {}

    def extremal(c):
        for p in (c.a, c.b):
            r = angular_rank(p, c.other(p), m)
            if any(angular_rank(p, e.other(p), m) > r for e in remaining if e != c and p in e):
                return False
        return True

    for want_positive in (True, False):
        while True:
            pool = [c for c in remaining if signed[c].positive == want_positive]
            if not pool:
                break
            eligible = [c for c in pool if extremal(c)]
            if not eligible:
                raise ValueError("no extremal chord available; diagram is not a c-matrix diagram")
            pick = min(eligible, key=lambda c: (signed[c].tail, signed[c].head))
            labels[pick] = len(labels) + 1
            remaining.discard(pick)
    return labeled_to_seq(d.unlabeled().with_labels(labels))
