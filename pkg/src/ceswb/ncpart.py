"""Noncrossing partitions of [n+1] and chains built from labeled chord diagrams.

Chord endpoint ``i`` corresponds to ground element ``i + 1``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from ._bounds import check_bound
from .chords import Chord, ChordDiagram, enumerate_diagrams, is_good_labeling, short_chord_count
from .posets import count_linear_extensions, poset_of_diagram


@dataclass(frozen=True)
class NCPartition:
    """Set partition of {1..size} stored as element -> block id.

    Block ids are assigned in order of each block's minimum element, so
    equal partitions have equal ``block_of`` tuples.
    """

    block_of: tuple

    def __post_init__(self):
        relabel = {}
        canon = []
        for b in self.block_of:
            if b not in relabel:
                relabel[b] = len(relabel)
            canon.append(relabel[b])
        object.__setattr__(self, "block_of", tuple(canon))

    @classmethod
    def singletons(cls, size):
        return cls(tuple(range(size)))

    @classmethod
    def from_blocks(cls, blocks, size=None):
        blocks = [sorted(b) for b in blocks]
        elems = sorted(x for b in blocks for x in b)
        size = size if size is not None else len(elems)
        if elems != list(range(1, size + 1)):
            raise ValueError("blocks must partition 1..size")
        block_of = [0] * size
        for t, b in enumerate(blocks):
            for x in b:
                block_of[x - 1] = t
        return cls(tuple(block_of))

    @property
    def size(self):
        return len(self.block_of)

    def blocks(self):
        out = {}
        for x, b in enumerate(self.block_of, start=1):
            out.setdefault(b, []).append(x)
        return [out[b] for b in sorted(out)]

    def block_containing(self, x):
        b = self.block_of[x - 1]
        return [y for y, bb in enumerate(self.block_of, start=1) if bb == b]

    def merge(self, x, y):
        bx, by = self.block_of[x - 1], self.block_of[y - 1]
        if bx == by:
            raise ValueError(f"{x} and {y} already share a block")
        return NCPartition(tuple(bx if b == by else b for b in self.block_of))

    def to_json(self):
        return self.blocks()

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks()) + "}"


def is_noncrossing(p):
    bo = p.block_of
    for i, j, k, l in itertools.combinations(range(p.size), 4):
        if bo[i] == bo[k] and bo[j] == bo[l] and bo[i] != bo[j]:
            return False
    return True


def merged_blocks(before, after):
    """The two blocks of ``before`` joined in ``after``; ValueError unless ``after`` covers ``before``."""
    old = {tuple(b) for b in before.blocks()}
    new = {tuple(b) for b in after.blocks()}
    gone = sorted(old - new)
    born = sorted(new - old)
    if len(gone) != 2 or len(born) != 1 or sorted(gone[0] + gone[1]) != list(born[0]):
        raise ValueError(f"{after} is not obtained from {before} by merging two blocks")
    return list(gone[0]), list(gone[1])


def validate_chain(chain):
    chain = list(chain)
    if not chain or chain[0] != NCPartition.singletons(chain[0].size):
        raise ValueError("chain must start at the all-singletons partition")
    for p in chain:
        if not is_noncrossing(p):
            raise ValueError(f"{p} is crossing")
    for a, b in zip(chain, chain[1:]):
        merged_blocks(a, b)
    return chain


def chain_of_labeled_diagram(d):
    """Merge the blocks of ``i+1`` and ``j+1`` for each chord ``c(i,j)`` in label order."""
    if (d.labels is None and d.chords) or not is_good_labeling(d):
        raise ValueError("diagram is not good-labeled")
    p = NCPartition.singletons(d.n + 1)
    chain = [p]
    for _, c in sorted(zip(d.labels or (), d.chords)):
        p = p.merge(c.a + 1, c.b + 1)
        if not is_noncrossing(p):
            raise AssertionError(f"merge along {c} produced crossing partition {p}")
        chain.append(p)
    return tuple(chain)


def _interface_element(mine, other, size):
    """Element of ``mine`` whose cyclic successor within mine + other lies in ``other``."""
    union = sorted(mine + other)
    other_set = set(other)
    for t, x in enumerate(union):
        if x in other_set:
            continue
        if union[(t + 1) % len(union)] in other_set:
            return x
    raise ValueError("blocks do not interleave as a merge interface")


def labeled_diagram_of_chain(chain):
    """Inverse of ``chain_of_labeled_diagram``.

    Merging blocks B1 and B2 gives the chord from the last element of B1
    before B2 (going counterclockwise) to the last element of B2 before B1,
    both shifted down by one.
    """
    chain = validate_chain(chain)
    size = chain[0].size
    chords = []
    for before, after in zip(chain, chain[1:]):
        b1, b2 = merged_blocks(before, after)
        s = _interface_element(b1, b2, size)
        t = _interface_element(b2, b1, size)
        chords.append(Chord(s - 1, t - 1))
    k = len(chords)
    d = ChordDiagram(size - 1, tuple(chords), tuple(range(1, k + 1)))
    if not is_good_labeling(d):
        raise AssertionError(f"reconstructed labeling of {d} is not good")
    return d


@lru_cache(maxsize=None)
def noncrossing_partitions(size):
    out = []
    for blocks in _set_partitions(list(range(1, size + 1))):
        p = NCPartition.from_blocks(blocks, size)
        if is_noncrossing(p):
            out.append(p)
    return tuple(out)


def _set_partitions(elems):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in _set_partitions(rest):
        for t in range(len(part)):
            yield part[:t] + [[first] + part[t]] + part[t + 1 :]
        yield [[first]] + part


def _nc_covers(p):
    """All noncrossing partitions obtained from ``p`` by merging two blocks."""
    blocks = p.blocks()
    for b1, b2 in itertools.combinations(blocks, 2):
        q = p.merge(b1[0], b2[0])
        if is_noncrossing(q):
            yield q


def count_maximal_nc_chains(n, bound=None):
    """Maximal chains of NC(n+1), counted by walking the lattice upwards."""
    check_bound(n, bound)

    @lru_cache(maxsize=None)
    def up(p):
        if len(set(p.block_of)) == 1:
            return 1
        return sum(up(q) for q in _nc_covers(p))

    return up(NCPartition.singletons(n + 1))


def enumerate_nc_chains(n, k=None, bound=None):
    """All chains of ``k`` noncrossing merges starting at the singletons, in lexicographic order."""
    check_bound(n, bound)
    k = n if k is None else k
    out = []

    def walk(chain):
        if len(chain) == k + 1:
            out.append(tuple(chain))
            return
        for q in _nc_covers(chain[-1]):
            walk(chain + [q])

    walk([NCPartition.singletons(n + 1)])
    out.sort(key=lambda ch: [p.block_of for p in ch])
    return out


def tree_leaf_distribution(n, bound=None):
    """Leaf count -> number of labeled trees on n+1 vertices (via Pruefer sequences)."""
    check_bound(n, bound)
    size = n + 1
    counts = Counter()
    if size == 2:
        counts[2] += 1
        return dict(counts)
    for seq in itertools.product(range(size), repeat=size - 2):
        tree = nx.from_prufer_sequence(list(seq))
        counts[sum(1 for _, deg in tree.degree() if deg == 1)] += 1
    return dict(sorted(counts.items()))


def diagram_leaf_distribution(n, bound=None):
    """Short-chord count r -> sum of linear-extension counts over spanning diagrams with r short chords."""
    counts = Counter()
    for d in enumerate_diagrams(n, n, bound):
        counts[short_chord_count(d)] += count_linear_extensions(poset_of_diagram(d))
    return dict(sorted(counts.items()))
