"""Exact double-partition counts by routing each column to a reduction.

Parallel columns are folded into a convolution of a scalar partition with a
smaller double partition.  What remains is pairwise non-parallel, and each
column contributes either a classic single term or a weighted bar sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coeffs import DEFAULT_ENUMERATION_CAP, coeff_table_direct
from .core import (
    AugmentedMatrix,
    CollinearColumns,
    Column,
    DoublePartitionError,
    GeneratorMatrix,
    Target,
    validate,
    validate_matrix,
)
from .oracle import DEFAULT_NODE_BUDGET, vpf_bruteforce
from .reduction import Reduction, ReductionTerm, Row, bar_terms, classic_term
from .spf import spf

MODES = ("auto", "classic", "general", "oracle")


class InternalNegative(DoublePartitionError):
    """A full reduction summed to a negative number, which is a bug."""


@dataclass(frozen=True)
class Strategy:
    mode: str = "auto"
    classic_override_rho_condition: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown strategy mode {self.mode!r}; expected one of {MODES}")


@dataclass(frozen=True)
class CollinearClass:
    direction: Column
    members: tuple[tuple[int, int], ...]  # (column index, multiplier)

    @property
    def indices(self) -> list[int]:
        return [k for k, _ in self.members]

    @property
    def multipliers(self) -> list[int]:
        return [u for _, u in self.members]


@dataclass(frozen=True)
class CountResult:
    value: int
    method: str
    terms_evaluated: int


@dataclass(frozen=True)
class Chamber:
    column: int
    line: tuple[int, int]  # (beta_i, -b_i): the wall r*beta_i - b_i*rho = 0


def collinear_classes(D: GeneratorMatrix) -> list[CollinearClass]:
    """Group columns by primitive direction, in order of first appearance."""
    validate_matrix(D)
    groups: dict[Column, list[tuple[int, int]]] = {}
    for k, c in enumerate(D):
        direction, u = c.primitive()
        groups.setdefault(direction, []).append((k, u))
    return [CollinearClass(d, tuple(ms)) for d, ms in groups.items()]


def chambers(D: GeneratorMatrix) -> list[Chamber]:
    validate_matrix(D)
    for cls in collinear_classes(D):
        if len(cls.members) > 1:
            raise CollinearColumns(*cls.indices[:2])
    return [Chamber(k, (c.beta, -c.b)) for k, c in enumerate(D)]


def _l_max(target: Target, direction: Column) -> int:
    # a zero component of the direction puts no bound on l
    bounds = [v // d for v, d in zip(target, direction) if d]
    return min(bounds)


def convolution_count(
    aug: AugmentedMatrix,
    cls: CollinearClass,
    strategy: Strategy | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """``sum_l W(l, u) * W(s - l*c, D_rest)`` over the parallel class `cls`."""
    validate(aug)
    return _convolve(aug, cls, strategy or Strategy(), cap, [0])


def _convolve(aug, cls, strategy, cap, nterms) -> int:
    rest = AugmentedMatrix(aug.target, aug.matrix.without(cls.indices))
    d = cls.direction
    total = 0
    for l in range(_l_max(aug.target, d) + 1):
        w = spf(l, cls.multipliers)
        if w:
            shifted = rest.with_target(aug.target - Column(l * d.b, l * d.beta))
            total += w * _count(shifted, strategy, cap, nterms)
    return total


def _single_column(target: Target, c: Column) -> int:
    if c.b:
        k, rem = divmod(target.r, c.b)
    else:
        k, rem = divmod(target.rho, c.beta)
    return int(rem == 0 and k * c.b == target.r and k * c.beta == target.rho)


def _use_classic(c: Column, rho: int, strategy: Strategy) -> bool:
    if strategy.mode == "classic":
        return True
    if strategy.mode == "general":
        return False
    return c.gcd == 1 and (c.beta < rho + 2 or strategy.classic_override_rho_condition)


def column_reduction(
    aug: AugmentedMatrix,
    strategy: Strategy | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Reduction:
    """Second-row reduction of a pairwise non-parallel matrix, one route per column.

    Columns with ``beta = 0`` contribute nothing.  Classic mode forces
    classic terms (and fails where they do not apply), general mode forces
    bar terms, auto picks classic for coprime columns whose ``beta`` passes
    the size test and bar terms for everything else.
    """
    strategy = strategy or Strategy()
    rho = aug.target.rho
    terms: list[ReductionTerm] = []
    for i, c in enumerate(aug.matrix):
        if c.beta == 0:
            continue
        if _use_classic(c, rho, strategy):
            override = strategy.classic_override_rho_condition or strategy.mode == "classic"
            terms.append(classic_term(aug, i, override_rho_condition=override))
        else:
            terms.extend(bar_terms(aug, i, coeff_table_direct(aug.matrix, i, cap)))
    return Reduction(tuple(terms), Row.SECOND, aug.m)


def _choose_row(aug: AugmentedMatrix) -> AugmentedMatrix:
    zeros_second = sum(c.beta == 0 for c in aug.matrix)
    zeros_first = sum(c.b == 0 for c in aug.matrix)
    if zeros_second >= 2 and zeros_first <= 1:
        return aug.swap_rows()
    return aug


def _count(aug: AugmentedMatrix, strategy: Strategy, cap: int, nterms: list[int]) -> int:
    if not aug.target.nonnegative:
        return 0
    m = aug.m
    if m == 0:
        return int(aug.target.r == 0 and aug.target.rho == 0)
    if m == 1:
        return _single_column(aug.target, aug.matrix[0])
    for cls in collinear_classes(aug.matrix):
        if len(cls.members) > 1:
            return _convolve(aug, cls, strategy, cap, nterms)
    red = column_reduction(_choose_row(aug), strategy, cap)
    nterms[0] += len(red.terms)
    return sum(t.value() for t in red.terms)


def count_detailed(
    aug: AugmentedMatrix,
    strategy: Strategy | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    budget: int | None = DEFAULT_NODE_BUDGET,
) -> CountResult:
    strategy = strategy or Strategy()
    validate(aug)
    if strategy.mode == "oracle":
        return CountResult(vpf_bruteforce(aug, budget), "oracle", 0)
    nterms = [0]
    value = _count(aug, strategy, cap, nterms)
    if value < 0:
        raise InternalNegative(f"reduction of {aug} summed to {value}")
    return CountResult(value, strategy.mode, nterms[0])


def count(
    aug: AugmentedMatrix,
    strategy: Strategy | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    budget: int | None = DEFAULT_NODE_BUDGET,
) -> int:
    """Exact number of ``x >= 0`` with ``D @ x = s``."""
    return count_detailed(aug, strategy, cap, budget).value


def count_matrix(target: Sequence[int], columns, strategy: Strategy | None = None) -> int:
    """Convenience wrapper: ``count_matrix((r, rho), [(b, beta), ...])``."""
    return count(AugmentedMatrix.of(target, columns), strategy)
