"""Every ordering of a c-matrix's rows that is a CES, read off a poset.

Run: python demos/04_permutations_from_posets.py
"""
from ceswb.cmatdiag import diagram_of_cmatrix, st_witness
from ceswb.exchange import c_matrix_of, framed_matrix, mutate_sequence
from ceswb.posets import (
    cycle_notation,
    linear_extensions,
    permutations_of_cmatrix,
    poset_of_diagram,
    sequence_of_permutation,
)
from ceswb.reptheory import format_sequence

C = c_matrix_of(mutate_sequence(framed_matrix(4), [1, 2]))
print("c-matrix after mutating at 2 then 3:")
print(C)

d = diagram_of_cmatrix(C)
P = poset_of_diagram(d)
print("\ndiagram:", d)
print("covers:", ", ".join(f"{lo} < {hi}" for lo, hi in sorted(P.covers)))
print("linear extensions:", len(linear_extensions(P)))

for sigma in permutations_of_cmatrix(C):
    print(f"  sigma = {cycle_notation(sigma):10s} {format_sequence(sequence_of_permutation(C, sigma))}")

print("\nnegatives-first witness:", format_sequence(st_witness(C)))
