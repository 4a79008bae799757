"""Scalar (restricted) partition function W(s, d).

``W(s, d)`` is the number of nonnegative integer vectors ``x`` with
``x . d = s``, i.e. the coefficient of ``t**s`` in ``prod 1/(1 - t**d_i)``.
Repeated generators count as distinct parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

__all__ = ["SignedSPFQuery", "spf", "spf_signed", "spf_scaled"]


@dataclass(frozen=True)
class SignedSPFQuery:
    """``W(argument, generators)`` where generators may be negative (never zero)."""

    argument: int
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        if any(g == 0 for g in gens):
            raise ValueError("SPF generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    def normalized(self) -> tuple[int, int, tuple[int, ...]]:
        """Rewrite with positive generators: ``(sign, shifted_argument, |generators|)``.

        Each negative generator ``-a`` uses ``1/(1 - t**-a) = -t**a / (1 - t**a)``,
        flipping the sign and shifting the argument by ``-a``.
        """
        neg = [g for g in self.generators if g < 0]
        sign = -1 if len(neg) % 2 else 1
        return sign, self.argument + sum(neg), tuple(abs(g) for g in self.generators)

    def negated(self) -> SignedSPFQuery:
        return SignedSPFQuery(-self.argument, tuple(-g for g in self.generators))


@lru_cache(maxsize=4096)
def _table(gens: tuple[int, ...], size: int) -> tuple[int, ...]:
    t = [0] * size
    t[0] = 1
    for g in gens:
        for k in range(g, size):
            t[k] += t[k - g]
    return tuple(t)


def spf(s: int, d: Sequence[int]) -> int:
    """Number of ways to write `s` as a nonnegative combination of `d`.

    >>> spf(5, (1, 2))
    3
    >>> spf(-1, (1,))
    0
    """
    if s < 0:
        return 0
    gens = tuple(sorted(int(g) for g in d))
    if gens and gens[0] < 1:
        raise ValueError("spf generators must be positive")
    if not gens:
        return int(s == 0)
    if s == 0:
        return 1
    # power-of-two sizes keep the table cache small across nearby arguments
    size = 1 << (s.bit_length())
    return _table(gens, size)[s]


def spf_signed(q: SignedSPFQuery) -> int:
    """Evaluate a query with signed generators via the sign/shift rewrite."""
    sign, arg, gens = q.normalized()
    return sign * spf(arg, gens)


def spf_scaled(s: int, g: int, d: Sequence[int]) -> int:
    """``W(s, g*d)``: zero unless ``g`` divides ``s``, else ``W(s/g, d)``."""
    if g < 1:
        raise ValueError("scale must be a positive integer")
    q, rem = divmod(s, g)
    if rem:
        return 0
    return spf(q, d)
