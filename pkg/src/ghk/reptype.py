"""Multiplicities from finite representation type.

For a ring with finitely many indecomposable maximal Cohen-Macaulay
modules, the generalized Hilbert-Kunz multiplicity of a module is a
bilinear expression: decompose the module and the structural limit
weights over the indecomposables and pair them through the table of
Tor lengths.  For the type A hypersurface singularity of index r the
indecomposables are r - 1 cokernels with Tor table
min(i, j, r - i, r - j) and equal limit weights 1 / r.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .errors import AsymmetricTable, BadParameters, DimensionMismatch


@dataclass(frozen=True)
class TorTable:
    """A symmetric table of nonnegative pairing lengths, 1-indexed."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise BadParameters("a pairing table needs at least one row")
        if any(len(row) != n for row in self.entries):
            raise BadParameters("pairing table must be square")
        if any(v < 0 for row in self.entries for v in row):
            raise BadParameters("pairing lengths must be nonnegative")
        for i in range(n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise AsymmetricTable(
                        f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ"
                    )

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]


def a_tor_table(r: int) -> TorTable:
    """Tor table of the type A singularity of index r: min(i, j, r - i, r - j)."""
    if r < 2:
        raise BadParameters("index r must be at least 2")
    return TorTable(
        tuple(
            tuple(min(i, j, r - i, r - j) for j in range(1, r))
            for i in range(1, r)
        )
    )


def eghk_from_type(
    multiplicities: Sequence[int],
    weights: Sequence[Rational],
    table: TorTable,
) -> Fraction:
    """Pair module multiplicities with limit weights through a Tor table.

    Returns sum over i, j of multiplicities[i] * weights[j] * table(i, j)
    as an exact rational.
    """
    u = list(multiplicities)
    v = [Fraction(w) for w in weights]
    if len(u) != table.dim or len(v) != table.dim:
        raise DimensionMismatch(
            f"table is {table.dim}x{table.dim} but got {len(u)} multiplicities "
            f"and {len(v)} weights"
        )
    if any(x < 0 for x in u):
        raise BadParameters("module multiplicities must be nonnegative")
    if any(w < 0 for w in v):
        raise BadParameters("limit weights must be nonnegative")
    total = Fraction(0)
    for i, ui in enumerate(u, start=1):
        if ui == 0:
            continue
        for j, vj in enumerate(v, start=1):
            total += ui * vj * table.entry(i, j)
    return total


def eghk_a(r: int, multiplicities: Sequence[int]) -> Fraction:
    """Type A multiplicity with the canonical equal weights 1 / r."""
    table = a_tor_table(r)
    weights = [Fraction(1, r)] * table.dim
    return eghk_from_type(multiplicities, weights, table)
