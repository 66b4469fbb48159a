"""Posets of chord diagrams and their linear extensions.

At each marked point the chords are read from counterclockwise-most to
clockwise-most; consecutive chords in that list form cover relations, the
clockwise one on top.  The sweep never passes the pivot, so good labelings
of a diagram are exactly the linear extensions of its poset.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .chords import Chord, ChordDiagram, labeled_to_seq
from .cmatdiag import diagram_of_cmatrix, is_cmatrix_diagram
from .reptheory import rep_from_dim

MAX_DP_SIZE = 24


@dataclass(frozen=True)
class Poset:
    """A finite poset given by its elements and Hasse covers ``(lower, upper)``."""

    elements: tuple
    covers: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "covers", frozenset(tuple(c) for c in self.covers))
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise ValueError("duplicate poset element")
        for lo, hi in self.covers:
            if lo not in elems or hi not in elems:
                raise ValueError(f"cover {lo} < {hi} uses an unknown element")
        if not nx.is_directed_acyclic_graph(self.hasse()):
            raise ValueError("cover relation has a directed cycle")

    @classmethod
    def from_relations(cls, elements, relations):
        """Build from any generating set of strict relations; keeps only the covers."""
        g = nx.DiGraph()
        g.add_nodes_from(elements)
        g.add_edges_from(relations)
        if not nx.is_directed_acyclic_graph(g):
            raise ValueError("relations contain a cycle")
        return cls(tuple(elements), frozenset(nx.transitive_reduction(g).edges()))

    def hasse(self):
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.covers)
        return g

    def __len__(self):
        return len(self.elements)

    def upper_covers(self, x):
        return [hi for lo, hi in self.covers if lo == x]

    def lower_covers(self, x):
        return [lo for lo, hi in self.covers if hi == x]

    def leq(self, x, y):
        return x == y or nx.has_path(self.hasse(), x, y)

    def maximal_elements(self):
        return [x for x in self.elements if not self.upper_covers(x)]

    def restrict(self, subset):
        keep = [x for x in self.elements if x in subset]
        kept = set(keep)
        return Poset(tuple(keep), frozenset((lo, hi) for lo, hi in self.covers if lo in kept and hi in kept))

    def to_json(self):
        index = {x: t for t, x in enumerate(self.elements)}
        return {
            "elements": [str(x) for x in self.elements],
            "covers": sorted([index[lo], index[hi]] for lo, hi in self.covers),
        }


def poset_of_diagram(d):
    d = d.underlying()
    covers = set()
    for p in range(d.n_points):
        chain = d.chords_at_clockwise(p)
        covers.update(zip(chain, chain[1:]))
    return Poset(d.chords, frozenset(covers))


def _masks(P):
    index = {x: t for t, x in enumerate(P.elements)}
    below = [0] * len(P)
    for lo, hi in P.covers:
        below[index[hi]] |= 1 << index[lo]
    return below


def count_linear_extensions(P):
    """Number of linear extensions by dynamic programming over down-sets."""
    m = len(P)
    if m > MAX_DP_SIZE:
        raise ValueError(f"poset of size {m} exceeds the DP limit {MAX_DP_SIZE}")
    below = _masks(P)

    @lru_cache(maxsize=None)
    def ways(down):
        if down == (1 << m) - 1:
            return 1
        total = 0
        for t in range(m):
            bit = 1 << t
            if not down & bit and below[t] & down == below[t]:
                total += ways(down | bit)
        return total

    return ways(0)


def count_linear_extensions_naive(P):
    """Filter all ``m!`` orderings; reference for small posets."""
    if len(P) > 9:
        raise ValueError("naive count is limited to 9 elements")
    count = 0
    for order in itertools.permutations(P.elements):
        pos = {x: t for t, x in enumerate(order)}
        if all(pos[lo] < pos[hi] for lo, hi in P.covers):
            count += 1
    return count


def linear_extensions(P):
    """All linear extensions as dicts element -> label in 1..m.

    Sorted lexicographically by the label sequence read in element order.
    """
    m = len(P)
    below = _masks(P)
    out = []

    def walk(down, order):
        if len(order) == m:
            f = {P.elements[t]: pos + 1 for pos, t in enumerate(order)}
            out.append(f)
            return
        for t in range(m):
            bit = 1 << t
            if not down & bit and below[t] & down == below[t]:
                walk(down | bit, order + [t])

    walk(0, [])
    out.sort(key=lambda f: tuple(f[x] for x in P.elements))
    return out


def ces_set_of_collection(collection):
    """All complete exceptional sequences on a complete exceptional collection.

    Each linear extension of the diagram poset, read as a chord labeling,
    is turned into a sequence.
    """
    reps = list(collection)
    if not reps:
        raise ValueError("empty collection")
    n = reps[0].n
    if len(reps) != n:
        raise ValueError("a complete exceptional collection has n members")
    d = ChordDiagram(n, tuple(Chord(V.i, V.j) for V in reps))
    P = poset_of_diagram(d)
    return [labeled_to_seq(d.with_labels(f)) for f in linear_extensions(P)]


def permutations_of_cmatrix(C):
    """Permutations ``sigma`` (one-line, 1-based tuples) making ``(V_sigma(n), ..., V_sigma(1))`` a CES.

    Row ``l`` of ``C`` gives chord ``c_l``; a linear extension ``f`` gives
    ``varsigma(l) = f(c_l)`` and ``sigma`` is its inverse.
    """
    if not C.is_sign_coherent() or not C.has_interval_rows():
        raise ValueError("rows must be sign-coherent signed interval dimension vectors")
    d = diagram_of_cmatrix(C)
    if not is_cmatrix_diagram(d):
        raise ValueError("matrix does not pass the c-matrix classification")
    row_chords = [Chord(V.i, V.j) for V in row_representations(C)]
    P = poset_of_diagram(d)
    out = []
    for f in linear_extensions(P):
        varsigma = [f[c] for c in row_chords]
        sigma = [0] * C.n
        for ell, image in enumerate(varsigma, start=1):
            sigma[image - 1] = ell
        out.append(tuple(sigma))
    return out


def row_representations(C):
    return [rep_from_dim(tuple(abs(x) for x in row)) for row in C.rows]


def sequence_of_permutation(C, sigma):
    """``(V_sigma(n), ..., V_sigma(1))`` for a 1-based one-line permutation."""
    reps = row_representations(C)
    return tuple(reps[sigma[t] - 1] for t in reversed(range(len(sigma))))


def cycle_notation(sigma):
    """Disjoint cycles of a 1-based one-line permutation, smallest entry first; "()" for identity."""
    seen = set()
    parts = []
    for start in range(1, len(sigma) + 1):
        if start in seen or sigma[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = sigma[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = sigma[nxt - 1]
        sep = "" if len(sigma) < 10 else " "
        parts.append("(" + sep.join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def parse_cycles(text, size):
    """Inverse of ``cycle_notation`` for single-digit entries, e.g. ``"(12)(43)"``."""
    sigma = list(range(1, size + 1))
    for group in text.replace(" ", "").strip("()").split(")("):
        if not group:
            continue
        cyc = [int(ch) for ch in group]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            sigma[a - 1] = b
    return tuple(sigma)


def satisfies_poset_conditions(P):
    """At most two upper and two lower covers per element; Hasse diagram a tree."""
    for x in P.elements:
        if len(P.upper_covers(x)) > 2 or len(P.lower_covers(x)) > 2:
            return False
    und = P.hasse().to_undirected()
    if und.number_of_nodes() == 0:
        return False
    return nx.is_forest(und) and nx.is_connected(und)


def is_isomorphic(P, Q):
    return len(P) == len(Q) and len(P.covers) == len(Q.covers) and DiGraphMatcher(P.hasse(), Q.hasse()).is_isomorphic()


def _clockwise_most_endpoint(d, chord):
    """An endpoint at which ``chord`` is the clockwise-most chord, or None."""
    for p in (chord.a, chord.b):
        if d.chords_at_clockwise(p)[-1] == chord:
            return p
    return None


def realize_poset(P):
    """A spanning diagram whose poset is isomorphic to ``P``.

    Induction on size: remove a maximal element ``x``.  If that disconnects
    the Hasse diagram, realize both parts, rotate each so the element covered
    by ``x`` is clockwise-most at its last point, place them side by side and
    join the two last points by a new chord.  Otherwise realize the rest and
    attach a new leaf chord right after an endpoint where the element covered
    by ``x`` is clockwise-most.

    Returns ``(diagram, mapping)`` where ``mapping`` sends each element of
    ``P`` to its chord.
    """
    if not satisfies_poset_conditions(P):
        raise ValueError("poset violates the cover / tree conditions")
    return _realize(P)


def _realize(P):
    if len(P) == 1:
        (x,) = P.elements
        c = Chord(0, 1)
        return ChordDiagram(1, (c,)), {x: c}
    x = P.maximal_elements()[0]
    rest = P.restrict(set(P.elements) - {x})
    lower = P.lower_covers(x)
    if len(lower) == 2:
        comps = list(nx.connected_components(rest.hasse().to_undirected()))
        if len(comps) != 2:
            raise ValueError("unexpected component structure")
        parts = []
        for y in lower:
            comp = next(cc for cc in comps if y in cc)
            d, mp = _realize(rest.restrict(comp))
            p = _clockwise_most_endpoint(d, mp[y])
            if p is None:
                raise ValueError("covered element is not clockwise-most at any endpoint")
            shift = (d.n - p) % d.n_points
            d_rot = d.rotate(shift)
            mp = {e: Chord((c.a + shift) % d.n_points, (c.b + shift) % d.n_points) for e, c in mp.items()}
            parts.append((d_rot, mp))
        (d1, m1), (d2, m2) = parts
        k1, k2 = d1.n, d2.n
        n = k1 + k2 + 1
        off = k1 + 1
        chords = list(d1.chords) + [Chord(c.a + off, c.b + off) for c in d2.chords]
        new = Chord(k1, n)
        chords.append(new)
        mapping = dict(m1)
        mapping.update({e: Chord(c.a + off, c.b + off) for e, c in m2.items()})
        mapping[x] = new
        return ChordDiagram(n, tuple(chords)), mapping
    (y,) = lower
    d, mp = _realize(rest)
    p = _clockwise_most_endpoint(d, mp[y])
    if p is None:
        raise ValueError("covered element is not clockwise-most at any endpoint")

    def shift(q):
        return q + 1 if q > p else q

    remap = {c: Chord(shift(c.a), shift(c.b)) for c in d.chords}
    new = Chord(p, p + 1)
    mapping = {e: remap[c] for e, c in mp.items()}
    mapping[x] = new
    return ChordDiagram(d.n + 1, tuple(remap.values()) + (new,)), mapping


def realize_poset_diagram(P):
    return realize_poset(P)[0]
