"""Zero entries, shared factors and parallel columns.

Parallel columns are folded into a convolution over multiples of their common
direction; zero columns in the eliminated row drop out or get a row swap;
non-coprime columns go through coefficient tables.
"""

from doublepart import AugmentedMatrix, GeneratorMatrix, count, vpf_bruteforce
from doublepart.decomposer import collinear_classes, count_detailed

cases = {
    "shared factor": ((2, 1, 3), (2, 2, 1)),
    "b = 0 column": ((0, 1, 2), (3, 1, 1)),
    "beta = 0 column": ((2, 1, 1), (0, 3, 1)),
    "parallel pair": ((1, 2, 3), (2, 4, 1)),
    "zeros in both rows": ((0, 0, 2, 3, 1), (1, 3, 0, 0, 1)),
}

for name, rows in cases.items():
    D = GeneratorMatrix.from_rows(*rows)
    classes = [c for c in collinear_classes(D) if len(c.members) > 1]
    print(f"\n{name}: columns {[tuple(c) for c in D]}")
    for cls in classes:
        print(f"  parallel class along {tuple(cls.direction)}, multipliers {cls.multipliers}")
    for target in [(9, 8), (17, 21)]:
        aug = AugmentedMatrix.of(target, D)
        res = count_detailed(aug)
        print(f"  {target}: count={res.value} ({res.terms_evaluated} terms), "
              f"brute force={vpf_bruteforce(aug)}")
