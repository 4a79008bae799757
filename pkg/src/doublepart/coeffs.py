"""Expansion coefficients for the weighted (bar) column contribution.

For column ``i`` with ``beta_i >= 1`` the coefficient ``a[j_x, j_y]`` counts the
vectors ``k`` in ``[0, beta_i - 1]**(m-1)`` with

    j_x = k . b' - b_i * floor(k . beta' / beta_i)
    j_y = (k . beta') mod beta_i

where ``b'``, ``beta'`` are the rows of the matrix with column ``i`` removed.
Two independent routes compute the same table: direct enumeration of all
``k``, and an inclusion-exclusion over the box constraints that turns each
coefficient into a signed sum of smaller 2-row counting problems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .core import (
    AugmentedMatrix,
    BudgetExceeded,
    DoublePartitionError,
    GeneratorMatrix,
    Target,
    validate_matrix,
)

DEFAULT_ENUMERATION_CAP = 10_000_000

InnerSolver = Callable[[AugmentedMatrix], int]


class InnerSolverFailure(DoublePartitionError):
    def __init__(self, subproblem: AugmentedMatrix, cause: Exception):
        super().__init__(f"inner solver failed on {subproblem}: {cause!r}")
        self.subproblem = subproblem
        self.cause = cause


@dataclass(frozen=True)
class CoeffTable:
    column: int
    modulus: int
    b_prime: tuple[int, ...]
    beta_prime: tuple[int, ...]
    n_minus: int
    n_plus: int
    entries: dict[tuple[int, int], int] = field(compare=True, hash=False)

    def __post_init__(self):
        beta = self.modulus
        for (jx, jy), a in self.entries.items():
            if not 0 <= jy < beta:
                raise ValueError(f"j_y={jy} outside [0, {beta - 1}]")
            if not self.n_minus <= jx <= self.n_plus:
                raise ValueError(f"j_x={jx} outside [{self.n_minus}, {self.n_plus}]")
            if a <= 0:
                raise ValueError(f"stored coefficient at {(jx, jy)} must be positive, got {a}")
        if self.n_plus != (beta - 1) * sum(self.b_prime):
            raise ValueError("n_plus does not match (beta - 1) * sum(b')")
        if self.mass != beta ** len(self.b_prime):
            raise ValueError(
                f"coefficient mass {self.mass} != beta**(m-1) = {beta ** len(self.b_prime)}"
            )

    @property
    def mass(self) -> int:
        return sum(self.entries.values())

    def get(self, j_x: int, j_y: int) -> int:
        return self.entries.get((j_x, j_y), 0)

    def row(self, j_y: int) -> list[int]:
        """Coefficients for one ``j_y``, dense over ``j_x = n_minus .. n_plus``."""
        return [self.get(jx, j_y) for jx in range(self.n_minus, self.n_plus + 1)]

    def row_items(self, j_y: int) -> Iterator[tuple[int, int]]:
        for (jx, jy), a in sorted(self.entries.items()):
            if jy == j_y:
                yield jx, a

    def matches(self, matrix: GeneratorMatrix, i: int) -> bool:
        b_prime, beta_prime = _primed(matrix, i)
        return (
            self.column == i
            and self.modulus == matrix[i].beta
            and self.b_prime == b_prime
            and self.beta_prime == beta_prime
        )


def _primed(D: GeneratorMatrix, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rest = [c for j, c in enumerate(D) if j != i]
    return tuple(c.b for c in rest), tuple(c.beta for c in rest)


def _check_column(D: GeneratorMatrix, i: int) -> None:
    validate_matrix(D)
    if not 0 <= i < D.m:
        raise IndexError(f"column index {i} out of range for m={D.m}")
    if D[i].beta < 1:
        raise ValueError(f"column {i} has beta = 0; no coefficient table exists")


def t_max(B: int, beta: int, j_y: int) -> int:
    """Largest ``t`` with ``j_y + beta*t <= B``; -1 when there is none."""
    return (B - j_y) // beta if B >= j_y else -1


def coeff_bounds(D: GeneratorMatrix, i: int) -> tuple[int, int, int]:
    """Return ``(N_minus, N_plus, B)`` for column `i`.

    ``N_minus`` is found by enumerating the box, like the table itself.
    """
    _check_column(D, i)
    beta = D[i].beta
    b_prime, beta_prime = _primed(D, i)
    n_plus = (beta - 1) * sum(b_prime)
    B = (beta - 1) * sum(beta_prime)
    if D[i].b == 0:
        return 0, n_plus, B
    n_minus = min(jx for jx, _ in _enumerate_box(D[i].b, beta, b_prime, beta_prime))
    return n_minus, n_plus, B


def _enumerate_box(b_i, beta, b_prime, beta_prime) -> Iterator[tuple[int, int]]:
    for k in itertools.product(range(beta), repeat=len(b_prime)):
        kb = sum(x * y for x, y in zip(k, b_prime))
        kbeta = sum(x * y for x, y in zip(k, beta_prime))
        t, j_y = divmod(kbeta, beta)
        yield kb - b_i * t, j_y


def coeff_table_direct(
    D: GeneratorMatrix, i: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> CoeffTable:
    """Tally ``(j_x, j_y)`` over all ``beta_i**(m-1)`` box vectors."""
    _check_column(D, i)
    return _direct_cached(D, i, cap)


@lru_cache(maxsize=256)
def _direct_cached(D: GeneratorMatrix, i: int, cap: int) -> CoeffTable:
    b_i, beta = D[i]
    b_prime, beta_prime = _primed(D, i)
    if beta ** len(b_prime) > cap:
        raise BudgetExceeded(f"coefficient enumeration ({beta}**{len(b_prime)} vectors)", cap)
    entries: dict[tuple[int, int], int] = {}
    for key in _enumerate_box(b_i, beta, b_prime, beta_prime):
        entries[key] = entries.get(key, 0) + 1
    return CoeffTable(
        column=i,
        modulus=beta,
        b_prime=b_prime,
        beta_prime=beta_prime,
        n_minus=min(jx for jx, _ in entries),
        n_plus=(beta - 1) * sum(b_prime),
        entries=entries,
    )


def appendix_a_subproblems(
    D: GeneratorMatrix, i: int, j_x: int, j_y: int, t: int
) -> list[tuple[str, int, Target]]:
    """Signed 2-row targets whose counts sum to the ``t``-slice of ``a[j_x, j_y]``.

    Each box constraint ``k_j <= beta_i - 1`` is removed by inclusion-exclusion:
    a binary vector selects the constraints assumed violated, and the target
    is shifted by ``beta_i`` times the selected columns.  The binary label
    ``i_1 .. i_{m-1}`` pairs ``i_k`` with the k-th remaining column counted from
    the end.  Returns ``(label, sign, target)`` triples over the generator
    matrix of remaining columns; targets may be negative.
    """
    b_i, beta = D[i]
    rest = [c for j, c in enumerate(D) if j != i]
    n = len(rest)
    base = Target(j_x + b_i * t, j_y + beta * t)
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        sb = sum(rest[n - 1 - k].b for k, on in enumerate(bits) if on)
        sbeta = sum(rest[n - 1 - k].beta for k, on in enumerate(bits) if on)
        label = "".join(map(str, bits))
        sign = -1 if sum(bits) % 2 else 1
        out.append((label, sign, Target(base.r - beta * sb, base.rho - beta * sbeta)))
    return out


def coeff_table_appendixA(
    D: GeneratorMatrix, i: int, inner: InnerSolver | None = None
) -> CoeffTable:
    """Build the table from signed sums of smaller 2-row counts.

    ``inner`` counts solutions of an AugmentedMatrix over the remaining
    columns; it defaults to brute force.  Subproblems with a negative target
    contribute 0 and are never passed to `inner`.
    """
    _check_column(D, i)
    if inner is None:
        from .oracle import vpf_bruteforce as inner
    b_i, beta = D[i]
    b_prime, beta_prime = _primed(D, i)
    sub_matrix = D.without([i])
    n_plus = (beta - 1) * sum(b_prime)
    B = (beta - 1) * sum(beta_prime)
    # t <= B // beta and k . b' >= 0 bound j_x from below
    lo = -b_i * (B // beta)

    memo: dict[Target, int] = {}

    def solve(target: Target) -> int:
        if not target.nonnegative:
            return 0
        if target not in memo:
            sub = AugmentedMatrix(target, sub_matrix)
            try:
                memo[target] = inner(sub)
            except Exception as exc:
                raise InnerSolverFailure(sub, exc) from exc
        return memo[target]

    entries: dict[tuple[int, int], int] = {}
    for j_y in range(beta):
        t_hi = t_max(B, beta, j_y)
        for j_x in range(lo, n_plus + 1):
            a = 0
            for t in range(t_hi + 1):
                for _, sign, target in appendix_a_subproblems(D, i, j_x, j_y, t):
                    a += sign * solve(target)
            if a < 0:
                raise InnerSolverFailure(
                    AugmentedMatrix(Target(j_x, j_y), sub_matrix),
                    ValueError(f"negative coefficient {a}"),
                )
            if a:
                entries[(j_x, j_y)] = a
    return CoeffTable(
        column=i,
        modulus=beta,
        b_prime=b_prime,
        beta_prime=beta_prime,
        n_minus=min(jx for jx, _ in entries),
        n_plus=n_plus,
        entries=entries,
    )
