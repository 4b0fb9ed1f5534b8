"""Monomial ideals in the semigroup ring of a plane cone.

An ideal is stored by its minimal monomial generators, lattice points
of the ambient Z^2 lying inside the cone.  In facet coordinates the
generators become staircase corners, and the ideal's lattice region is
exactly the set of points whose corners dominate that staircase (the
ring is normal, so corner domination and monomial divisibility agree).

Saturation with respect to the interior works threshold by threshold:
the saturation region of an ideal is the full quadrant above the
componentwise minima of its generator corners.  A point with corners
weakly above both minima stays above the staircase after adding any
deep enough semigroup element, while a point below one of the minima
admits a whole ray of translates outside the ideal region, so only the
two facet thresholds matter.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple, Optional

from .errors import (
    BadParameters,
    ContractViolation,
    EmptyInput,
    GeneratorOutsideCone,
    NotSaturated,
    NotTorsionWithin,
)
from .geometry import (
    Cone2,
    Corner,
    Point,
    Staircase,
    count_lattice_complement,
    pareto_minimal,
)


class Thresholds(NamedTuple):
    """Componentwise minima of generator corners: the saturation thresholds."""

    c1: int
    c2: int


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by minimal generators inside a fixed cone.

    gens are lattice points sorted by their s corner coordinate, one per
    staircase corner; stair holds their corners.  Use new_ideal to build
    instances, it performs the Pareto reduction and the cone check.
    """

    cone: Cone2
    gens: tuple[Point, ...]
    stair: Staircase

    def __post_init__(self) -> None:
        corners = tuple(self.cone.corner(g) for g in self.gens)
        if corners != self.stair.corners:
            raise ValueError("generators and staircase disagree")

    @property
    def thresholds(self) -> Thresholds:
        return Thresholds(self.stair.min_s, self.stair.min_t)

    def contains(self, p: Point) -> bool:
        return self.stair.dominates(self.cone.corner(p))


def new_ideal(cone: Cone2, gens: Iterable[Point]) -> MonomialIdeal:
    """Build an ideal from any finite generating set.

    Duplicates and non-minimal generators are dropped.  Raises
    GeneratorOutsideCone if some generator is not in the cone and
    EmptyInput if no generators are given.
    """
    pts = set(tuple(g) for g in gens)
    if not pts:
        raise EmptyInput("an ideal needs at least one generator")
    by_corner: dict[Corner, Point] = {}
    for p in pts:
        c = cone.corner(p)
        if c.s < 0 or c.t < 0:
            raise GeneratorOutsideCone(f"generator {p} lies outside the cone")
        by_corner[c] = p
    stair = pareto_minimal(by_corner)
    kept = tuple(by_corner[c] for c in stair.corners)
    return MonomialIdeal(cone, kept, stair)


def frobenius_power(ideal: MonomialIdeal, q: int) -> MonomialIdeal:
    """The bracket power generated by the q-th multiples of the generators."""
    if q < 1:
        raise BadParameters("frobenius exponent must be a positive integer")
    gens = tuple((q * x, q * y) for x, y in ideal.gens)
    return MonomialIdeal(ideal.cone, gens, ideal.stair.scale(q))


def ordinary_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """The n-th ordinary power, generated by all n-fold sums of generators.

    Enumerates the C(n + s - 1, s - 1) multisets of the s generators and
    Pareto-reduces the sums.  Fine at desk scale (s <= 8, n <= 40); the
    count grows polynomially in n of degree s - 1.
    """
    if n < 1:
        raise BadParameters("power exponent must be a positive integer")
    sums = set()
    for combo in combinations_with_replacement(ideal.gens, n):
        sums.add((sum(p[0] for p in combo), sum(p[1] for p in combo)))
    return new_ideal(ideal.cone, sums)


def saturation_thresholds(ideal: MonomialIdeal) -> Thresholds:
    """Facet thresholds of the saturation: minima of the generator corners."""
    return ideal.thresholds


def is_saturated(ideal: MonomialIdeal) -> bool:
    """True when the ideal already contains every lattice point above its thresholds."""
    c1, c2 = ideal.thresholds
    return count_lattice_complement(ideal.cone, Corner(c1, c2), ideal.stair) == 0


def saturation(ideal: MonomialIdeal) -> MonomialIdeal:
    """The saturated ideal of all lattice points above the thresholds.

    Minimal generators live in the det_abs columns starting at the s
    threshold, one per column (the least admissible t value), so this
    costs O(det_abs) before the Pareto reduction.
    """
    cone = ideal.cone
    c1, c2 = ideal.thresholds
    _, tau = cone.column_data()
    step = cone.det_abs
    pts = []
    for s in range(c1, c1 + step):
        t = c2 + (tau * s - c2) % step
        p = cone.preimage(Corner(s, t))
        if p is None:
            raise ContractViolation("column representative has no preimage")
        pts.append(p)
    return new_ideal(cone, pts)


class TorsionFactorization(NamedTuple):
    """A saturated ideal written as a lattice shift of a finite-colength ideal.

    order is the least r such that the r-th power is a shift, shift the
    lattice point moved to the origin, primary the shifted r-th power
    (its thresholds are (0, 0)).
    """

    order: int
    shift: Point
    primary: MonomialIdeal


def torsion_factorization(
    ideal: MonomialIdeal, max_order: Optional[int] = None
) -> TorsionFactorization:
    """Factor a saturated ideal through the divisor class group.

    Searches for the least r >= 1 such that r times the threshold corner
    is the corner of an actual lattice point u; then the r-th ordinary
    power equals u plus a finite-colength ideal.  The class of the ideal
    region in the class group has order dividing det_abs, so the default
    search bound max_order = det_abs always suffices; a smaller explicit
    bound may fail with NotTorsionWithin.  Raises NotSaturated when the
    input is not saturated.
    """
    if not is_saturated(ideal):
        raise NotSaturated("torsion factorization needs a saturated ideal")
    cone = ideal.cone
    bound = cone.det_abs if max_order is None else max_order
    if bound < 1:
        raise BadParameters("max_order must be a positive integer")
    c1, c2 = ideal.thresholds
    for r in range(1, bound + 1):
        u = cone.preimage(Corner(r * c1, r * c2))
        if u is None:
            continue
        power = ordinary_power(ideal, r)
        shifted = tuple((x - u[0], y - u[1]) for x, y in power.gens)
        primary = new_ideal(cone, shifted)
        if primary.thresholds != (0, 0):
            raise ContractViolation("shifted power does not have zero thresholds")
        return TorsionFactorization(r, u, primary)
    raise NotTorsionWithin(f"no torsion order up to {bound} works")
