"""Mutating the framed A_3 quiver and watching its oriented chord diagram.

Run: python demos/01_mutation_walkthrough.py
"""
from ceswb.cmatdiag import diagram_of_cmatrix, mutate_diagram_traced
from ceswb.exchange import c_matrix_of, framed_matrix, mutate

# Start from the framed quiver of 1 <- 2 <- 3.  Its c-matrix is the identity,
# so every chord points from its low end to its high end.
B = framed_matrix(3)
d = diagram_of_cmatrix(c_matrix_of(B))
print("framed exchange matrix:")
print(B)
print("diagram:", d)

# Mutate at vertex 1, then vertex 3 (0-based: 0, then 2).  The traced version
# of diagram mutation reports which chords were rewritten and how.
for k in (0, 2):
    d, trace = mutate_diagram_traced(d, B, k)
    B = mutate(B, k)
    print(f"\nafter mutating at {k + 1}:")
    print(c_matrix_of(B))
    print("diagram:", d)
    for row, case in trace:
        what = "reversed" if case == "ii" else f"rewritten (case {case})"
        print(f"  chord of row {row + 1} {what}")
    # the diagram computed by local rewrites agrees with the c-matrix
    assert d == diagram_of_cmatrix(c_matrix_of(B))
