"""Two routes for the same column, and when the classic one is allowed.

A coprime column with beta < rho + 2 may use the single classic term.  The
bar route always works, at the cost of a coefficient table.  Both must give
the same total.
"""

from doublepart import AugmentedMatrix, GeneratorMatrix, Strategy, count, vpf_bruteforce
from doublepart.reduction import classic_reduction, evaluate, Row

D = GeneratorMatrix.from_rows((1, 2, 5), (3, 1, 2))
print("matrix columns:", [tuple(c) for c in D])

for target in [(6, 6), (15, 9), (20, 20)]:
    aug = AugmentedMatrix.of(target, D)
    truth = vpf_bruteforce(aug)
    auto = count(aug)
    general = count(aug, Strategy("general"))
    second = evaluate(classic_reduction(aug, Row.SECOND))
    first = evaluate(classic_reduction(aug, Row.FIRST))
    print(f"\ntarget {target}")
    print(f"  brute force          {truth}")
    print(f"  auto dispatcher      {auto}")
    print(f"  bar terms only       {general}")
    print(f"  classic, row 2 out   {second}")
    print(f"  classic, row 1 out   {first}")

# the size test refuses the classic term when beta is too large
small = AugmentedMatrix.of((5, 1), D)
try:
    classic_reduction(small)
except Exception as exc:
    print(f"\nrho = 1: {type(exc).__name__}: {exc}")
print("forced anyway:", evaluate(classic_reduction(small, override_rho_condition=True)),
      "vs brute force", vpf_bruteforce(small))
