"""Brute-force enumeration oracles.

Nothing here is clever on purpose: these counts are the ground truth that every
reduction in the package is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

from .core import (
    AugmentedMatrix,
    BudgetExceeded,
    DoublePartitionError,
    GeneratorMatrix,
    Target,
    validate,
    validate_matrix,
)

DEFAULT_NODE_BUDGET = 50_000_000


def vpf_bruteforce(aug: AugmentedMatrix, budget: int | None = DEFAULT_NODE_BUDGET) -> int:
    """Count ``x >= 0`` with ``D @ x = s`` by depth-first enumeration."""
    validate(aug)
    cols = sorted(aug.matrix.columns, key=lambda c: max(c.b, c.beta), reverse=True)
    m = len(cols)
    nodes = 0

    def walk(k: int, r: int, rho: int) -> int:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded("brute-force enumeration", budget)
        if k == m:
            return int(r == 0 and rho == 0)
        b, beta = cols[k]
        if k == m - 1:
            # last variable is forced: x = r/b (or rho/beta) if that fits both rows
            x = r // b if b else rho // beta
            return int(x >= 0 and x * b == r and x * beta == rho)
        # every column has a positive entry, so this bound is finite
        top = min(r // b if b else rho // beta, rho // beta if beta else r // b)
        total = 0
        for x in range(top + 1):
            total += walk(k + 1, r - x * b, rho - x * beta)
        return total

    return walk(0, aug.target.r, aug.target.rho)


def spf_bruteforce(s: int, d: Sequence[int]) -> int:
    """Count ``x >= 0`` with ``x . d = s`` by nested enumeration."""
    if any(g < 1 for g in d):
        raise ValueError("generators must be positive")
    if s < 0:
        return 0
    if not d:
        return int(s == 0)
    # largest parts in the outer loops; the smallest part is solved for
    d = sorted(d, reverse=True)
    last = len(d) - 1

    def walk(k: int, rest: int) -> int:
        if k == last:
            return int(rest % d[k] == 0)
        return sum(walk(k + 1, rest - x * d[k]) for x in range(rest // d[k] + 1))

    return walk(0, s)


@dataclass(frozen=True)
class Mismatch:
    target: Target
    expected: int
    got: int | None
    method: str
    error: str | None = None


@dataclass
class GridReport:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


Method = Union[str, Callable[[AugmentedMatrix], int]]


def _resolve(method) -> tuple[str, Callable[[AugmentedMatrix], int]]:
    if callable(method):
        return getattr(method, "__name__", "custom"), method
    from .decomposer import Strategy, count

    strategy = method if isinstance(method, Strategy) else Strategy(mode=method)
    return strategy.mode, lambda aug: count(aug, strategy)


def verify_grid(
    D: GeneratorMatrix,
    r_max: int,
    rho_max: int,
    method: Method = "auto",
    budget: int | None = DEFAULT_NODE_BUDGET,
) -> GridReport:
    """Compare `method` against brute force on every target in ``[0, r_max] x [0, rho_max]``.

    `method` is a strategy mode name (``"auto"``, ``"classic"``, ``"general"``,
    ``"oracle"``), a Strategy, or any callable taking an AugmentedMatrix.
    Errors raised by the method are recorded per target, not propagated.
    """
    validate_matrix(D)
    name, fn = _resolve(method)
    report = GridReport()
    for r in range(r_max + 1):
        for rho in range(rho_max + 1):
            aug = AugmentedMatrix(Target(r, rho), D)
            expected = vpf_bruteforce(aug, budget)
            report.checked += 1
            try:
                got = fn(aug)
            except DoublePartitionError as exc:
                report.mismatches.append(Mismatch(aug.target, expected, None, name, repr(exc)))
                continue
            if got != expected:
                report.mismatches.append(Mismatch(aug.target, expected, got, name))
    return report
