"""Exact plane geometry for lattice cones and monomial staircases.

A strongly convex rational cone in the plane has two primitive inward
facet normals.  Pairing a lattice point against the two normals gives
its facet coordinates, here called a Corner.  The cone itself maps onto
the first quadrant, any translate of the cone maps onto an axis-aligned
quadrant, and the exponent region of a monomial ideal maps onto the set
of points weakly above a finite staircase.  That reduction is what lets
every area and every lattice count below be evaluated in closed form.

Facet coordinates of lattice points fill a sublattice of index det_abs
in Z^2.  Along a fixed column s = const the attainable t values form a
single arithmetic progression with step det_abs, so counting lattice
points under a staircase costs O(1) per column of the bounding box.

All arithmetic is exact (Python ints and fractions.Fraction; Fraction
values are always in lowest terms with positive denominator).  Floating
point is never used.  Every function is pure: concurrent use is safe
and results do not depend on evaluation order.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Optional

from .errors import CollinearRays, EmptyInput, UnboundedRegion

Point = tuple[int, int]


class Corner(NamedTuple):
    """Facet coordinates of a lattice point: s along facet 1, t along facet 2."""

    s: int
    t: int


def dot(a: Point, b: Point) -> int:
    return a[0] * b[0] + a[1] * b[1]


def _primitive(v: Point) -> Point:
    g = gcd(v[0], v[1])
    if g == 0:
        raise CollinearRays("zero vector cannot span a cone")
    return (v[0] // g, v[1] // g)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class Cone2:
    """A strongly convex rational cone in the plane.

    ray1 and ray2 are primitive generators, normal1 and normal2 the
    primitive inward facet normals with <normal1, ray1> = 0 and
    <normal2, ray2> = 0.  det_abs is |det| of the normal matrix, the
    index of the facet-coordinate image of Z^2.

    Both mixed pairings <normal1, ray2> and <normal2, ray1> equal
    det_abs: each ray is a rotation of its normal, and the inward
    orientation fixes the sign.  __post_init__ checks these identities,
    so hand-built instances cannot silently break the counting code.
    """

    ray1: Point
    ray2: Point
    normal1: Point
    normal2: Point
    det_abs: int

    def __post_init__(self) -> None:
        n1, n2 = self.normal1, self.normal2
        det = n1[0] * n2[1] - n1[1] * n2[0]
        ok = (
            abs(det) == self.det_abs
            and self.det_abs > 0
            and gcd(*self.ray1) == 1
            and gcd(*self.ray2) == 1
            and gcd(*n1) == 1
            and gcd(*n2) == 1
            and dot(n1, self.ray1) == 0
            and dot(n2, self.ray2) == 0
            and dot(n1, self.ray2) == self.det_abs
            and dot(n2, self.ray1) == self.det_abs
        )
        if not ok:
            raise ValueError("inconsistent cone data")

    @classmethod
    def from_rays(cls, ray1: Point, ray2: Point) -> "Cone2":
        """Build the cone spanned by two rays (any nonzero integer vectors).

        Rays are reduced to primitive vectors.  Raises CollinearRays if
        they do not span the plane.
        """
        r1 = _primitive(tuple(ray1))
        r2 = _primitive(tuple(ray2))
        if r1[0] * r2[1] - r1[1] * r2[0] == 0:
            raise CollinearRays(f"rays {r1} and {r2} are collinear")

        def inward_normal(own: Point, other: Point) -> Point:
            n = (-own[1], own[0])
            if dot(n, other) < 0:
                n = (own[1], -own[0])
            return n

        n1 = inward_normal(r1, r2)
        n2 = inward_normal(r2, r1)
        return cls(r1, r2, n1, n2, abs(n1[0] * n2[1] - n1[1] * n2[0]))

    def corner(self, p: Point) -> Corner:
        return Corner(dot(self.normal1, p), dot(self.normal2, p))

    def contains(self, p: Point) -> bool:
        c = self.corner(p)
        return c.s >= 0 and c.t >= 0

    def column_data(self) -> tuple[Point, int]:
        """Return (u, tau) describing the facet-coordinate image lattice.

        u is a lattice point with <normal1, u> = 1, and tau = <normal2, u>.
        A pair (s, t) is the corner of a lattice point exactly when
        t == tau * s (mod det_abs), and then the point is
        s * u + k * ray1 with k = (t - tau * s) / det_abs.
        """
        g, a, b = _ext_gcd(self.normal1[0], self.normal1[1])
        u = (a, b)
        return u, dot(self.normal2, u)

    def preimage(self, c: Corner) -> Optional[Point]:
        """The lattice point with the given corner, or None if there is none."""
        u, tau = self.column_data()
        rem = c.t - tau * c.s
        if rem % self.det_abs != 0:
            return None
        k = rem // self.det_abs
        return (c.s * u[0] + k * self.ray1[0], c.s * u[1] + k * self.ray1[1])


@dataclass(frozen=True)
class Staircase:
    """A finite antichain of corners, sorted with s increasing and t decreasing.

    The staircase describes the region of corners that dominate (are
    componentwise >=) at least one of its members.
    """

    corners: tuple[Corner, ...]

    def __post_init__(self) -> None:
        if not self.corners:
            raise EmptyInput("a staircase needs at least one corner")
        for prev, cur in zip(self.corners, self.corners[1:]):
            if not (prev.s < cur.s and prev.t > cur.t):
                raise ValueError("staircase corners must be a sorted antichain")

    @property
    def min_s(self) -> int:
        return self.corners[0].s

    @property
    def min_t(self) -> int:
        return self.corners[-1].t

    @property
    def max_s(self) -> int:
        return self.corners[-1].s

    @property
    def max_t(self) -> int:
        return self.corners[0].t

    def height(self, s: int) -> Optional[int]:
        """Least t such that (s, t) dominates the staircase, or None."""
        idx = bisect_right(self.corners, s, key=lambda c: c.s)
        if idx == 0:
            return None
        return self.corners[idx - 1].t

    def dominates(self, c: Corner) -> bool:
        h = self.height(c.s)
        return h is not None and c.t >= h

    def scale(self, k: int) -> "Staircase":
        return Staircase(tuple(Corner(k * c.s, k * c.t) for c in self.corners))


def pareto_minimal(corners: Iterable[Corner]) -> Staircase:
    """Reduce a finite set of corners to its antichain of minimal elements.

    Raises EmptyInput on an empty collection.
    """
    seen = sorted(set(Corner(*c) for c in corners))
    if not seen:
        raise EmptyInput("no corners given")
    kept: list[Corner] = []
    best_t: Optional[int] = None
    for c in seen:
        if best_t is None or c.t < best_t:
            kept.append(c)
            best_t = c.t
    return Staircase(tuple(kept))


def _require_bounded(threshold: Corner, stair: Staircase) -> None:
    # the region between threshold quadrant and staircase is bounded exactly
    # when the staircase touches both threshold lines
    if stair.min_s != threshold.s or stair.min_t != threshold.t:
        raise UnboundedRegion(
            f"staircase minima {(stair.min_s, stair.min_t)} do not meet "
            f"threshold {tuple(threshold)}; the complement has infinite area"
        )


def staircase_complement_area(cone: Cone2, threshold: Corner, stair: Staircase) -> Fraction:
    """Area of the threshold quadrant minus the staircase region.

    Measured in the ambient plane, so the corner-space cell area is
    divided by det_abs.  The staircase minima must equal the threshold
    componentwise; otherwise the complement is an infinite strip and
    UnboundedRegion is raised.
    """
    _require_bounded(threshold, stair)
    cells = 0
    cs = stair.corners
    for prev, cur in zip(cs, cs[1:]):
        cells += (cur.s - prev.s) * (prev.t - threshold.t)
    return Fraction(cells, cone.det_abs)


def _progression_count(lo: int, hi: int, residue: int, step: int) -> int:
    """Number of integers t in [lo, hi) with t == residue (mod step)."""
    if hi <= lo:
        return 0
    first = lo + (residue - lo) % step
    if first >= hi:
        return 0
    return (hi - 1 - first) // step + 1


def count_lattice_complement(cone: Cone2, threshold: Corner, stair: Staircase) -> int:
    """Number of lattice points in the threshold quadrant not dominating stair.

    Same boundedness precondition as staircase_complement_area.  Counts
    actual points of Z^2 via their corners: column s contributes the
    t values with threshold.t <= t < height(s) lying on the arithmetic
    progression t == tau * s (mod det_abs).
    """
    _require_bounded(threshold, stair)
    _, tau = cone.column_data()
    step = cone.det_abs
    total = 0
    cs = stair.corners
    for prev, cur in zip(cs, cs[1:]):
        for s in range(prev.s, cur.s):
            total += _progression_count(threshold.t, prev.t, (tau * s) % step, step)
    return total


def count_lattice_band(
    cone: Cone2, threshold: Corner, fine: Staircase, coarse: Staircase
) -> int:
    """Lattice points in the threshold quadrant dominating fine but not coarse.

    fine must describe a region containing the coarse one within the
    quadrant; both staircases must meet the threshold lines.
    """
    _require_bounded(threshold, fine)
    _require_bounded(threshold, coarse)
    _, tau = cone.column_data()
    step = cone.det_abs
    total = 0
    for s in range(threshold.s, coarse.max_s):
        hi = coarse.height(s)
        lo = fine.height(s)
        if hi is None or lo is None:
            continue
        lo = max(lo, threshold.t)
        total += _progression_count(lo, hi, (tau * s) % step, step)
    return total
