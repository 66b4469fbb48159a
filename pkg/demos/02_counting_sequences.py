"""Three ways to count complete exceptional sequences of the linear quiver.

Run: python demos/02_counting_sequences.py
"""
from ceswb.chords import enumerate_diagrams, good_labelings
from ceswb.posets import count_linear_extensions, poset_of_diagram
from ceswb.reptheory import enumerate_exceptional_sequences

print(" n  brute  labelings  extensions  (n+1)^(n-1)")
for n in range(1, 7):
    brute = len(enumerate_exceptional_sequences(n)) if n <= 3 else None
    diagrams = enumerate_diagrams(n)
    labelings = sum(len(good_labelings(d)) for d in diagrams)
    extensions = sum(count_linear_extensions(poset_of_diagram(d)) for d in diagrams)
    print(f"{n:2d}  {brute if brute is not None else '-':>5}  {labelings:9d}  {extensions:10d}  {(n + 1) ** (n - 1):11d}")

# The brute-force column filters ordered tuples of interval modules by the
# Hom/Ext conditions; the other two walk noncrossing spanning trees.
