"""Labeled diagrams, noncrossing partition chains and leaf counts of trees.

Run: python demos/05_partitions_and_trees.py
"""
from ceswb.chords import ChordDiagram
from ceswb.ncpart import (
    chain_of_labeled_diagram,
    count_maximal_nc_chains,
    diagram_leaf_distribution,
    labeled_diagram_of_chain,
    tree_leaf_distribution,
)

# A good labeling is an order in which to merge blocks: chord c(i, j) merges
# the blocks holding i+1 and j+1.
d = ChordDiagram.from_pairs(3, [(0, 1), (1, 3), (2, 3)], labels=(1, 3, 2))
chain = chain_of_labeled_diagram(d)
print("labeled diagram:", d)
for p in chain:
    print("  ", p)
assert labeled_diagram_of_chain(chain) == d

print("\nmaximal chains in NC(n+1):", [count_maximal_nc_chains(n) for n in range(1, 6)])

# Trees on n+1 labeled vertices by number of leaves, against spanning
# diagrams weighted by linear extensions and grouped by short chords.
for n in range(2, 6):
    print(f"n={n}: trees {tree_leaf_distribution(n)}  diagrams {diagram_leaf_distribution(n)}")
