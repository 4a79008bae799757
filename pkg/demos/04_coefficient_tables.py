"""The coefficient table of a column, built two independent ways.

The direct route enumerates the box k in [0, beta-1]^(m-1).  The second
route recovers each coefficient by inclusion-exclusion over double
partitions of shifted targets.  The tables must agree and carry total mass
beta^(m-1).
"""

import random

from doublepart import GeneratorMatrix
from doublepart.coeffs import coeff_table_appendixA, coeff_table_direct

rng = random.Random(3)
for _ in range(4):
    m = rng.randint(2, 4)
    cols = []
    while len(cols) < m:
        c = (rng.randint(0, 4), rng.randint(1, 4))
        cols.append(c)
    D = GeneratorMatrix(tuple(cols))
    i = rng.randrange(m)
    direct = coeff_table_direct(D, i)
    incl = coeff_table_appendixA(D, i)
    print(f"\ncolumns {cols}, column {i + 1}, beta = {direct.modulus}")
    for j_y in range(direct.modulus):
        print(f"  j_y={j_y}: {dict(direct.row_items(j_y))}")
    print(f"  mass {direct.mass} = {direct.modulus}^{m - 1}; routes agree: {direct == incl}")
