"""Domain types for 2-row Diophantine systems and the 2x2 determinant primitives.

A system is ``D @ x = s`` with ``D`` a 2 x m matrix of nonnegative integer
columns ``(b, beta)`` and ``s = (r, rho)``.  Columns are indexed from 0 in the
Python API; original indices are kept in every derived result.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class DoublePartitionError(Exception):
    """Base class for every error raised by this package."""

    def render(self, offset: int = 0) -> str:
        """Message with column indices shifted by `offset` (1 for user-facing text)."""
        return str(self)


class ValidationError(DoublePartitionError, ValueError):
    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class _ColumnEntryError(ValidationError):
    def __init__(self, template: str, column: int):
        super().__init__(template.format(column), field=f"matrix[{column}]")
        self.template = template
        self.column = column

    def render(self, offset: int = 0) -> str:
        return self.template.format(self.column + offset)


class ZeroColumn(ValidationError):
    pass


class NegativeEntry(ValidationError):
    pass


class ZeroColumnAt(_ColumnEntryError, ZeroColumn):
    def __init__(self, column: int):
        super().__init__("column {} is zero", column)


class NegativeEntryAt(_ColumnEntryError, NegativeEntry):
    def __init__(self, column: int):
        super().__init__("negative entry in column {}", column)


class CollinearColumns(DoublePartitionError):
    """Two columns are parallel, so a 2x2 determinant between them vanishes."""

    def __init__(self, i: int, j: int):
        super().__init__(f"columns {i} and {j} are collinear")
        self.pair = (i, j)

    def render(self, offset: int = 0) -> str:
        i, j = self.pair
        return f"columns {i + offset} and {j + offset} are collinear"


class BudgetExceeded(DoublePartitionError):
    def __init__(self, what: str, budget: int):
        super().__init__(f"{what} exceeded the work budget of {budget}")
        self.budget = budget


@dataclass(frozen=True)
class Column:
    b: int
    beta: int

    @property
    def gcd(self) -> int:
        return gcd(self.b, self.beta)

    def primitive(self) -> tuple[Column, int]:
        """Split into a primitive direction and its positive multiplier."""
        g = self.gcd
        if g == 0:
            raise ZeroColumn("zero column has no direction")
        return Column(self.b // g, self.beta // g), g

    def __iter__(self):
        yield self.b
        yield self.beta

    def __str__(self) -> str:
        return f"{{{self.b},{self.beta}}}"


@dataclass(frozen=True)
class Target:
    r: int
    rho: int

    def as_column(self) -> Column:
        return Column(self.r, self.rho)

    def __sub__(self, other: Column | Target) -> Target:
        a, b = other
        return Target(self.r - a, self.rho - b)

    def __iter__(self):
        yield self.r
        yield self.rho

    @property
    def nonnegative(self) -> bool:
        return self.r >= 0 and self.rho >= 0


@dataclass(frozen=True)
class GeneratorMatrix:
    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        # accept any iterable of Column or (b, beta) pairs
        cols = tuple(c if isinstance(c, Column) else Column(*c) for c in self.columns)
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_rows(cls, first: Sequence[int], second: Sequence[int]) -> GeneratorMatrix:
        if len(first) != len(second):
            raise ValidationError("matrix rows have different lengths", field="matrix")
        return cls(tuple(Column(int(b), int(be)) for b, be in zip(first, second)))

    @property
    def m(self) -> int:
        return len(self.columns)

    def rows(self) -> tuple[list[int], list[int]]:
        return [c.b for c in self.columns], [c.beta for c in self.columns]

    def without(self, indices: Iterable[int]) -> GeneratorMatrix:
        drop = set(indices)
        return GeneratorMatrix(tuple(c for k, c in enumerate(self.columns) if k not in drop))

    def swap_rows(self) -> GeneratorMatrix:
        return GeneratorMatrix(tuple(Column(c.beta, c.b) for c in self.columns))

    def __len__(self) -> int:
        return len(self.columns)

    def __getitem__(self, i: int) -> Column:
        return self.columns[i]

    def __iter__(self):
        return iter(self.columns)


@dataclass(frozen=True)
class AugmentedMatrix:
    target: Target
    matrix: GeneratorMatrix

    @classmethod
    def of(cls, target: Sequence[int], columns: Iterable) -> AugmentedMatrix:
        """Shorthand: ``AugmentedMatrix.of((r, rho), [(b1, beta1), ...])``."""
        r, rho = target
        return cls(Target(r, rho), GeneratorMatrix(tuple(columns)))

    @property
    def m(self) -> int:
        return self.matrix.m

    def with_target(self, target: Target) -> AugmentedMatrix:
        return AugmentedMatrix(target, self.matrix)

    def swap_rows(self) -> AugmentedMatrix:
        return AugmentedMatrix(Target(self.target.rho, self.target.r), self.matrix.swap_rows())


def validate_matrix(matrix: GeneratorMatrix) -> GeneratorMatrix:
    for k, c in enumerate(matrix):
        if c.b < 0 or c.beta < 0:
            raise NegativeEntryAt(k)
        if c.b == 0 and c.beta == 0:
            raise ZeroColumnAt(k)
    return matrix


def validate(aug: AugmentedMatrix) -> AugmentedMatrix:
    """Return `aug` unchanged if it is a well-posed counting problem.

    Raises NegativeEntry for any negative entry (target included) and
    ZeroColumn for a ``{0, 0}`` column, reporting the first offender.
    """
    if aug.target.r < 0 or aug.target.rho < 0:
        raise NegativeEntry("negative target entry", field="target")
    validate_matrix(aug.matrix)
    return aug


def det2(a: Column | Target, b: Column | Target) -> int:
    """Determinant of the 2x2 matrix with columns `a` and `b`."""
    a0, a1 = a
    b0, b1 = b
    return a0 * b1 - b0 * a1


def collinear(a: Column, b: Column) -> bool:
    return det2(a, b) == 0


def eliminate(aug: AugmentedMatrix, i: int):
    """Apply the column-`i` elimination: ``L = det(s, c_i)``, ``d_j = det(c_j, c_i)``.

    Returns a :class:`~doublepart.spf.SignedSPFQuery`.  A zero generator means
    some column is parallel to column `i`; that raises CollinearColumns.
    """
    from .spf import SignedSPFQuery

    cols = aug.matrix.columns
    if not 0 <= i < len(cols):
        raise IndexError(f"column index {i} out of range for m={len(cols)}")
    ci = cols[i]
    gens = []
    for j, cj in enumerate(cols):
        if j == i:
            continue
        d = det2(cj, ci)
        if d == 0:
            raise CollinearColumns(i, j)
        gens.append(d)
    return SignedSPFQuery(det2(aug.target, ci), tuple(gens))
