"""Walk through the four-column example matrix end to end.

D = [[0, 1, 1, 3],
     [4, 2, 3, 1]]

Column 1 has b = 0, so it has no classic term and goes through its
coefficient table.  The other three columns each give one scalar partition.
"""

from doublepart import AugmentedMatrix, GeneratorMatrix, count, vpf_bruteforce
from doublepart.coeffs import coeff_table_direct
from doublepart.decomposer import column_reduction
from doublepart.reduction import affine_term

D = GeneratorMatrix.from_rows((0, 1, 1, 3), (4, 2, 3, 1))

print("symbolic classic terms (second row eliminated):")
for i in range(1, D.m):
    print(f"  column {i + 1}: {affine_term(D, i)}")

table = coeff_table_direct(D, 0)
print(f"\ncoefficient table of column 1 (beta = {table.modulus}):")
print("  j_x range", table.n_minus, "..", table.n_plus)
for j_y in range(table.modulus):
    print(f"  j_y={j_y}: {table.row(j_y)}  sum={sum(table.row(j_y))}")

for target in [(10, 10), (12, 8), (30, 30)]:
    aug = AugmentedMatrix.of(target, D)
    red = column_reduction(aug)
    print(f"\ntarget {target}: {len(red.terms)} terms")
    for t in red.terms[:6]:
        w, arg, gens = t.normalized()
        print(f"  {w:+d} * W({arg}, {gens})  [{t.method.value}, column {t.source_column + 1}]")
    if len(red.terms) > 6:
        print(f"  ... {len(red.terms) - 6} more")
    print(f"  count = {count(aug)}, brute force = {vpf_bruteforce(aug)}")
