"""Chord diagrams on the marked points 0..n of a disk.

Points are numbered counterclockwise from the top.  "Clockwise" is never
computed geometrically: at a pivot ``p`` the chord to ``e`` is clockwise
from the chord to ``e'`` iff ``angular_rank(p, e) < angular_rank(p, e')``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from ._bounds import check_bound
from .reptheory import IntervalRep, is_exceptional_sequence


@dataclass(frozen=True, order=True)
class Chord:
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("a chord needs two distinct endpoints")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def other(self, p):
        if p == self.a:
            return self.b
        if p == self.b:
            return self.a
        raise ValueError(f"{p} is not an endpoint of {self}")

    def __contains__(self, p):
        return p == self.a or p == self.b

    def __str__(self):
        return f"c({self.a},{self.b})"


def chords_cross(x, y):
    return x.a < y.a < x.b < y.b or y.a < x.a < y.b < x.b


def angular_rank(p, e, n_points):
    if e == p:
        raise ValueError("angular rank needs e != p")
    return (e - p) % n_points


@dataclass(frozen=True)
class ChordDiagram:
    """A noncrossing forest on ``n + 1`` marked points.

    ``labels`` and ``heads`` are optional and aligned with the sorted
    ``chords`` tuple; ``heads[t]`` is the endpoint chord ``t`` points to.
    """

    n: int
    chords: tuple
    labels: tuple | None = None
    heads: tuple | None = None

    def __post_init__(self):
        chords = tuple(self.chords)
        labels = None if self.labels is None else tuple(self.labels)
        heads = None if self.heads is None else tuple(self.heads)
        for extra, name in ((labels, "labels"), (heads, "heads")):
            if extra is not None and len(extra) != len(chords):
                raise ValueError(f"{name} must align with chords")
        if not chords:
            # nothing to label or orient
            labels = heads = None
        order = sorted(range(len(chords)), key=lambda t: chords[t])
        chords = tuple(chords[t] for t in order)
        if labels is not None:
            labels = tuple(labels[t] for t in order)
        if heads is not None:
            heads = tuple(heads[t] for t in order)
        object.__setattr__(self, "chords", chords)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "heads", heads)
        self._validate()

    def _validate(self):
        if self.n < 1:
            raise ValueError("need at least two marked points")
        if len(set(self.chords)) != len(self.chords):
            raise ValueError("duplicate chord")
        for c in self.chords:
            if not 0 <= c.a < c.b <= self.n:
                raise ValueError(f"{c} has an endpoint outside 0..{self.n}")
        for x, y in itertools.combinations(self.chords, 2):
            if chords_cross(x, y):
                raise ValueError(f"{x} and {y} cross")
        g = nx.Graph()
        g.add_nodes_from(range(self.n + 1))
        g.add_edges_from((c.a, c.b) for c in self.chords)
        if not nx.is_forest(g):
            raise ValueError("chords contain a cycle")
        if self.labels is not None and sorted(self.labels) != list(range(1, len(self.chords) + 1)):
            raise ValueError("labels must be a bijection onto 1..k")
        if self.heads is not None:
            for c, h in zip(self.chords, self.heads):
                if h not in c:
                    raise ValueError(f"head {h} is not an endpoint of {c}")

    @classmethod
    def from_pairs(cls, n, pairs, labels=None):
        return cls(n, tuple(Chord(a, b) for a, b in pairs), labels)

    @classmethod
    def oriented(cls, n, arrows, labels=None):
        """Build from ``(tail, head)`` pairs."""
        arrows = list(arrows)
        return cls(n, tuple(Chord(t, h) for t, h in arrows), labels, tuple(h for _, h in arrows))

    @property
    def n_points(self):
        return self.n + 1

    @property
    def k(self):
        return len(self.chords)

    @property
    def is_spanning(self):
        return self.k == self.n

    def unlabeled(self):
        return ChordDiagram(self.n, self.chords)

    def underlying(self):
        """Forget labels and orientation."""
        return ChordDiagram(self.n, self.chords)

    def with_labels(self, labels):
        if isinstance(labels, dict):
            labels = tuple(labels[c] for c in self.chords)
        return ChordDiagram(self.n, self.chords, tuple(labels), self.heads)

    def with_heads(self, heads):
        if isinstance(heads, dict):
            heads = tuple(heads[c] for c in self.chords)
        return ChordDiagram(self.n, self.chords, self.labels, tuple(heads))

    def label_of(self, chord):
        return self.labels[self.chords.index(chord)]

    def head_of(self, chord):
        return self.heads[self.chords.index(chord)]

    def tail_of(self, chord):
        return chord.other(self.head_of(chord))

    def arrows(self):
        """``(tail, head)`` per chord, in chord order."""
        return tuple((c.other(h), h) for c, h in zip(self.chords, self.heads))

    def is_positive(self, chord):
        """An oriented chord is positive when it points from its low to its high endpoint."""
        return self.head_of(chord) == chord.b

    def chords_at(self, p):
        return [c for c in self.chords if p in c]

    def chords_at_clockwise(self, p):
        """Chords at ``p`` listed so later entries are clockwise from earlier ones."""
        return sorted(self.chords_at(p), key=lambda c: -angular_rank(p, c.other(p), self.n_points))

    def rotate(self, shift):
        """Rotate every chord counterclockwise by ``shift`` points (tau^-shift)."""
        m = self.n_points
        chords = tuple(Chord((c.a + shift) % m, (c.b + shift) % m) for c in self.chords)
        heads = None if self.heads is None else tuple((h + shift) % m for h in self.heads)
        return ChordDiagram(self.n, chords, self.labels, heads)

    def __str__(self):
        parts = []
        for t, c in enumerate(self.chords):
            if self.heads is not None:
                s = f"{c.other(self.heads[t])}->{self.heads[t]}"
            else:
                s = str(c)
            if self.labels is not None:
                s += f":{self.labels[t]}"
            parts.append(s)
        return "{" + ", ".join(parts) + "}"


def is_good_labeling(d):
    """Labels strictly increase clockwise around every marked point."""
    if d.labels is None:
        if not d.chords:
            return True
        raise ValueError("diagram carries no labels")
    label = dict(zip(d.chords, d.labels))
    for p in range(d.n_points):
        seq = [label[c] for c in d.chords_at_clockwise(p)]
        if any(x >= y for x, y in zip(seq, seq[1:])):
            return False
    return True


def araya_map(collection):
    """Complete exceptional collection -> unlabeled diagram, X(i,j) -> c(i,j).

    Raises ValueError when the image has crossings or cycles (the input was
    not an exceptional collection).
    """
    reps = list(collection)
    if not reps:
        raise ValueError("empty collection")
    n = reps[0].n
    return ChordDiagram(n, tuple(Chord(V.i, V.j) for V in reps))


def seq_to_labeled(seq):
    """Exceptional sequence of length k -> good labeled diagram; position l gets label k+1-l."""
    seq = list(seq)
    if not seq or not is_exceptional_sequence(seq):
        raise ValueError("not an exceptional sequence")
    k = len(seq)
    return ChordDiagram(seq[0].n, tuple(Chord(V.i, V.j) for V in seq), tuple(k - pos for pos in range(k)))


def labeled_to_seq(d):
    """Good labeled diagram -> exceptional sequence; label l goes to position k+1-l."""
    if (d.labels is None and d.chords) or not is_good_labeling(d):
        raise ValueError("diagram is not good-labeled")
    by_label = sorted(zip(d.labels, d.chords), reverse=True)
    return tuple(IntervalRep(d.n, c.a, c.b) for _, c in by_label)


def _prufer_trees(n_nodes):
    if n_nodes == 2:
        yield ((0, 1),)
        return
    for seq in itertools.product(range(n_nodes), repeat=n_nodes - 2):
        yield tuple(nx.from_prufer_sequence(list(seq)).edges())


@lru_cache(maxsize=None)
def _spanning_chord_sets(n):
    out = set()
    for edges in _prufer_trees(n + 1):
        chords = [Chord(a, b) for a, b in edges]
        if any(chords_cross(x, y) for x, y in itertools.combinations(chords, 2)):
            continue
        out.add(tuple(sorted(chords)))
    return sorted(out)


def enumerate_diagrams(n, k=None, bound=None):
    """All noncrossing forests with ``k`` chords on ``n + 1`` points, sorted.

    Spanning trees come from Pruefer sequences filtered for crossings; a
    noncrossing forest is a ``k``-subset of the chords of some noncrossing
    spanning tree, so forests are collected from those subsets.
    """
    k = n if k is None else k
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    check_bound(n, bound)
    trees = _spanning_chord_sets(n)
    if k == n:
        return [ChordDiagram(n, t) for t in trees]
    subsets = {sub for t in trees for sub in itertools.combinations(t, k)}
    return [ChordDiagram(n, s) for s in sorted(subsets)]


def good_labelings(d):
    """All good labelings of ``d``, sorted by label tuple.

    Backtracking over chords in sorted order, trying every unused label and
    pruning as soon as the labels placed so far fail to increase clockwise
    at some point.  Uses the definition only, not the diagram poset.
    """
    k = d.k
    around = [d.chords_at_clockwise(p) for p in range(d.n_points)]
    index = {c: t for t, c in enumerate(d.chords)}
    around = [[index[c] for c in cs] for cs in around]
    touching = [[cs for cs in around if t in cs] for t in range(k)]
    labels = [0] * k
    used = [False] * (k + 1)
    out = []

    def consistent(t):
        for cs in touching[t]:
            placed = [labels[u] for u in cs if labels[u]]
            if any(x >= y for x, y in zip(placed, placed[1:])):
                return False
        return True

    def walk(t):
        if t == k:
            out.append(d.with_labels(tuple(labels)))
            return
        for v in range(1, k + 1):
            if used[v]:
                continue
            labels[t] = v
            used[v] = True
            if consistent(t):
                walk(t + 1)
            used[v] = False
            labels[t] = 0

    walk(0)
    return out


def good_labelings_bruteforce(d):
    """Filter all ``k!`` labelings; reference for small diagrams."""
    out = []
    for perm in itertools.permutations(range(1, d.k + 1)):
        cand = d.with_labels(perm)
        if is_good_labeling(cand):
            out.append(cand)
    return out


def short_chord_count(d):
    """Number of points i with c(i, i+1 mod n+1) in d."""
    m = d.n_points
    present = set(d.chords)
    return sum(1 for i in range(m) if Chord(i, (i + 1) % m) in present)
