"""Which oriented chord diagrams come from c-matrices?

Run: python demos/03_classifying_cmatrices.py
"""
from ceswb.cmatdiag import all_orientations, bfs_diagrams, classified_diagrams, is_cmatrix_diagram, unreachable_cecs

for n in (2, 3, 4):
    by_rule = set(classified_diagrams(n))
    by_search = bfs_diagrams(n)
    print(f"n={n}: {len(by_rule)} diagrams pass the local rules, {len(by_search)} reached by mutation,"
          f" equal: {by_rule == by_search}")

# Some exceptional collections admit no orientation that passes the rules,
# so no c-matrix realises them.
print("\nA_3 collections with no c-matrix:")
for d in unreachable_cecs(3):
    tried = sum(1 for _ in all_orientations(d))
    assert not any(is_cmatrix_diagram(o) for o in all_orientations(d))
    print(f"  {d}  ({tried} orientations rejected)")
