"""Per-column reduction of a double partition to scalar partitions.

Eliminating the second row turns ``W(s, D)`` into a sum of per-column
contributions.  A column contributes either one signed scalar partition
(the classic term) or a weighted sum of them driven by a coefficient table
(the bar term).  Eliminating the first row instead negates every argument
and generator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coeffs import CoeffTable
from .core import (
    AugmentedMatrix,
    CollinearColumns,
    DoublePartitionError,
    GeneratorMatrix,
    det2,
    eliminate,
)
from .spf import SignedSPFQuery, spf_scaled, spf_signed


class Method(str, enum.Enum):
    CLASSIC = "classic"
    BAR = "bar"
    ZERO_COLUMN = "zero_column"
    CONVOLUTION = "convolution"


class Row(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"


class ReductionError(DoublePartitionError):
    def __init__(self, message: str, column: int | None = None):
        super().__init__(message if column is None else f"column {column}: {message}")
        self.message = message
        self.column = column

    def render(self, offset: int = 0) -> str:
        if self.column is None:
            return self.message
        return f"column {self.column + offset}: {self.message}"


class NotCoprime(ReductionError):
    pass


class BetaTooLarge(ReductionError):
    pass


class BetaZero(ReductionError):
    """The column's entry in the eliminated row is 0, so its term vanishes."""


class EmptyEliminationSet(ReductionError):
    pass


class TableMismatch(ReductionError):
    pass


class PreconditionFailed(ReductionError):
    pass


@dataclass(frozen=True)
class ReductionTerm:
    """``weight * W(query.argument / scale, query.generators)``.

    With ``scale > 1`` the term vanishes unless `scale` divides the
    (normalized) argument.
    """

    weight: int
    query: SignedSPFQuery
    source_column: int
    method: Method
    scale: int = 1

    def __post_init__(self):
        if self.weight == 0:
            raise ValueError("reduction term weight must be nonzero")
        if self.scale < 1:
            raise ValueError("reduction term scale must be >= 1")

    def normalized(self) -> tuple[int, int, tuple[int, ...]]:
        """``(signed weight, argument, positive generators)`` after the sign rewrite."""
        sign, arg, gens = self.query.normalized()
        return sign * self.weight, arg, gens

    def value(self) -> int:
        if self.scale == 1:
            return self.weight * spf_signed(self.query)
        w, arg, gens = self.normalized()
        return w * spf_scaled(arg, self.scale, gens)


@dataclass(frozen=True)
class Reduction:
    terms: tuple[ReductionTerm, ...] = ()
    eliminated_row: Row = Row.SECOND
    m: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.m is not None:
            for t in self.terms:
                if not 0 <= t.source_column < self.m:
                    raise ValueError(f"term source column {t.source_column} out of range")


def _oriented(aug: AugmentedMatrix, row: Row) -> AugmentedMatrix:
    # first-row elimination is second-row elimination of the row-swapped system
    return aug.swap_rows() if Row(row) is Row.FIRST else aug


def classic_term(
    aug: AugmentedMatrix,
    i: int,
    override_rho_condition: bool = False,
    row: Row = Row.SECOND,
) -> ReductionTerm:
    """Single-term contribution ``W(L_i, d_i)`` of column `i`.

    ``L_i = r*beta_i - b_i*rho`` and ``d_ij = b_j*beta_i - b_i*beta_j``; for
    ``row=FIRST`` both are negated.  Requires column `i` coprime, not parallel
    to any other column, with a nonzero entry in the eliminated row, and that
    entry below ``(other target entry) + 2`` unless `override_rho_condition`.
    """
    work = _oriented(aug, row)
    c = work.matrix[i]
    if c.beta == 0:
        raise BetaZero("entry in eliminated row is 0; the term vanishes", i)
    if c.gcd != 1:
        raise NotCoprime(f"gcd{tuple(c)} = {c.gcd}", i)
    if not override_rho_condition and c.beta >= work.target.rho + 2:
        raise BetaTooLarge(f"{c.beta} >= {work.target.rho} + 2", i)
    query = eliminate(work, i)
    return ReductionTerm(1, query, i, Method.CLASSIC)


def classic_reduction(
    aug: AugmentedMatrix,
    eliminate_row: Row = Row.SECOND,
    override_rho_condition: bool = False,
) -> Reduction:
    """Classic terms for every column, skipping columns that are 0 in the eliminated row."""
    row = Row(eliminate_row)
    if aug.m <= 1:
        raise EmptyEliminationSet("classic reduction needs at least two columns")
    terms = []
    for i, c in enumerate(aug.matrix):
        if (c.beta if row is Row.SECOND else c.b) == 0:
            continue
        terms.append(classic_term(aug, i, override_rho_condition, row))
    return Reduction(tuple(terms), row, aug.m)


def bar_terms(aug: AugmentedMatrix, i: int, table: CoeffTable) -> list[ReductionTerm]:
    """Expand the weighted contribution of column `i` into individual terms.

    Only coefficients with ``j_y = rho mod beta_i`` take part.  For a column
    with ``b_i = 0`` the generators are ``beta_i * b'`` and only
    ``j_x = r (mod beta_i)`` survives, so terms carry ``scale = beta_i``.
    """
    D = aug.matrix
    if not table.matches(D, i):
        raise TableMismatch("coefficient table was built for another column or matrix", i)
    b_i, beta = D[i]
    r, rho = aug.target
    j_y = rho % beta
    shift = (rho - j_y) // beta * b_i
    terms = []
    if b_i == 0:
        gens = table.b_prime
        if any(g == 0 for g in gens):
            j = next(k for k, c in enumerate(D) if k != i and c.b == 0)
            raise CollinearColumns(i, j)
        for j_x, a in table.row_items(j_y):
            if (r - j_x) % beta:
                continue
            terms.append(
                ReductionTerm(a, SignedSPFQuery(r - j_x, gens), i, Method.ZERO_COLUMN, scale=beta)
            )
        return terms
    gens = eliminate(aug, i).generators
    for j_x, a in table.row_items(j_y):
        terms.append(ReductionTerm(a, SignedSPFQuery(r - j_x - shift, gens), i, Method.BAR))
    return terms


def bar_term(aug: AugmentedMatrix, i: int, table: CoeffTable) -> int:
    """Evaluated weighted contribution of column `i`."""
    if aug.matrix[i].beta < 1:
        raise BetaZero("bar term needs beta >= 1", i)
    return sum(t.value() for t in bar_terms(aug, i, table))


def alt_zero_term(aug: AugmentedMatrix, i: int | None = None) -> int:
    """Contribution of the ``b = 0`` column as a difference of two classic sums.

    Uses ``sum_{j != i} [W(-L_j, -d_j) - W(L_j, d_j)]``: the first-row
    reduction has no term for column `i`, the second-row reduction does.
    """
    D = aug.matrix
    zeros = [k for k, c in enumerate(D) if c.b == 0]
    if i is None:
        if len(zeros) != 1:
            raise PreconditionFailed(f"need exactly one column with b = 0, found {len(zeros)}")
        i = zeros[0]
    if D[i].b != 0 or D[i].beta <= 1:
        raise PreconditionFailed("column must have b = 0 and beta > 1", i)
    if zeros != [i]:
        raise PreconditionFailed("another column also has b = 0", i)
    for j, c in enumerate(D):
        if j == i:
            continue
        if c.beta == 0:
            raise PreconditionFailed("beta = 0; first/second row terms undefined", j)
        if c.gcd != 1:
            raise PreconditionFailed(f"gcd{tuple(c)} = {c.gcd}", j)
    total = 0
    for j in range(D.m):
        if j == i:
            continue
        q = eliminate(aug, j)
        total += spf_signed(q.negated()) - spf_signed(q)
    return total


def evaluate(red: Reduction, extra: Iterable[int] = ()) -> int:
    return sum(t.value() for t in red.terms) + sum(extra)


@dataclass(frozen=True)
class AffineTerm:
    """A classic term written over symbolic ``(r, rho)``:
    ``sign * W(coef_r*r + coef_rho*rho + shift, generators)``."""

    source_column: int
    sign: int
    coef_r: int
    coef_rho: int
    shift: int
    generators: tuple[int, ...]

    def argument(self, r: int, rho: int) -> int:
        return self.coef_r * r + self.coef_rho * rho + self.shift

    def argument_str(self, names: Sequence[str] = ("r", "rho")) -> str:
        parts = []
        for coef, name in ((self.coef_r, names[0]), (self.coef_rho, names[1])):
            if coef == 0:
                continue
            mag = "" if abs(coef) == 1 else f"{abs(coef)}*"
            parts.append(("-" if coef < 0 else "+") + mag + name)
        if self.shift or not parts:
            parts.append(f"{'-' if self.shift < 0 else '+'}{abs(self.shift)}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __str__(self) -> str:
        gens = ",".join(map(str, self.generators))
        return f"{'+' if self.sign > 0 else '-'}W({self.argument_str()}, {{{gens}}})"


def affine_term(D: GeneratorMatrix, i: int, row: Row = Row.SECOND) -> AffineTerm:
    """Target-independent form of the classic term of column `i`."""
    c = D[i]
    gens = []
    for j, cj in enumerate(D):
        if j == i:
            continue
        d = det2(cj, c)
        if d == 0:
            raise CollinearColumns(i, j)
        gens.append(d)
    coef_r, coef_rho = c.beta, -c.b
    if Row(row) is Row.FIRST:
        coef_r, coef_rho, gens = -coef_r, -coef_rho, [-g for g in gens]
    neg = [g for g in gens if g < 0]
    return AffineTerm(
        source_column=i,
        sign=-1 if len(neg) % 2 else 1,
        coef_r=coef_r,
        coef_rho=coef_rho,
        shift=sum(neg),
        generators=tuple(abs(g) for g in gens),
    )
