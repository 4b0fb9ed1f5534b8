"""Shared test helpers: brute-force oracles and random input generators.

The oracles recompute areas and lattice counts along completely
different routes than the library (bounding-box scans in the ambient
plane and shoelace sums over explicit polygons), so agreement is a real
two-sided check and not an arithmetic identity.
"""

import random
from fractions import Fraction
from math import ceil, floor

from ghk.errors import CollinearRays, EmptyInput
from ghk.geometry import Cone2, Corner, Staircase, pareto_minimal
from ghk.ideals import MonomialIdeal, new_ideal


def xspace_bbox(cone: Cone2, s_lo: int, s_hi: int, t_lo: int, t_hi: int):
    """Integer bounding box of the preimage of a corner-space box."""
    n1, n2 = cone.normal1, cone.normal2
    det = n1[0] * n2[1] - n1[1] * n2[0]
    xs, ys = [], []
    for s in (s_lo, s_hi):
        for t in (t_lo, t_hi):
            xs.append(Fraction(n2[1] * s - n1[1] * t, det))
            ys.append(Fraction(-n2[0] * s + n1[0] * t, det))
    return floor(min(xs)), ceil(max(xs)), floor(min(ys)), ceil(max(ys))


def brute_count_complement(cone: Cone2, threshold: Corner, stair: Staircase) -> int:
    """Count lattice points above the threshold but below the staircase.

    Scans every lattice point of the bounding box and tests domination
    by direct comparison against each staircase corner.
    """
    s_hi, t_hi = stair.max_s, stair.max_t
    x_lo, x_hi, y_lo, y_hi = xspace_bbox(cone, threshold.s, s_hi, threshold.t, t_hi)
    count = 0
    corners = stair.corners
    for x in range(x_lo, x_hi + 1):
        for y in range(y_lo, y_hi + 1):
            c = cone.corner((x, y))
            if c.s < threshold.s or c.t < threshold.t:
                continue
            if any(c.s >= w.s and c.t >= w.t for w in corners):
                continue
            count += 1
    return count


def shoelace_complement_area(
    cone: Cone2, threshold: Corner, stair: Staircase
) -> Fraction:
    """Area oracle: shoelace sum over the explicit complement polygon."""
    poly = [threshold, stair.corners[0]]
    for prev, cur in zip(stair.corners, stair.corners[1:]):
        poly.append(Corner(cur.s, prev.t))
        poly.append(cur)
    twice = 0
    for a, b in zip(poly, poly[1:] + poly[:1]):
        twice += a.s * b.t - b.s * a.t
    return Fraction(abs(twice), 2 * cone.det_abs)


def random_cone(rng: random.Random, bound: int = 6) -> Cone2:
    while True:
        r1 = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        r2 = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        try:
            return Cone2.from_rays(r1, r2)
        except CollinearRays:
            continue


def cone_points(cone: Cone2, spread: int) -> list:
    """Semigroup points with both corners in [0, spread], by box scan."""
    x_lo, x_hi, y_lo, y_hi = xspace_bbox(cone, 0, spread, 0, spread)
    pts = []
    for x in range(x_lo, x_hi + 1):
        for y in range(y_lo, y_hi + 1):
            c = cone.corner((x, y))
            if 0 <= c.s <= spread and 0 <= c.t <= spread:
                pts.append((x, y))
    return pts


def random_ideal(
    rng: random.Random, cone: Cone2 = None, n_gens: int = 4, spread: int = 9,
    ray_bound: int = 6,
) -> MonomialIdeal:
    if cone is None:
        cone = random_cone(rng, ray_bound)
    pool = cone_points(cone, spread)
    k = min(len(pool), rng.randint(1, n_gens))
    return new_ideal(cone, rng.sample(pool, k))


def random_staircase(rng: random.Random, max_corners: int = 5, spread: int = 10):
    corners = [
        Corner(rng.randint(0, spread), rng.randint(0, spread))
        for _ in range(rng.randint(1, max_corners))
    ]
    return pareto_minimal(corners)


def grounded(stair: Staircase) -> tuple[Corner, Staircase]:
    """A threshold meeting the staircase, for bounded-region tests."""
    return Corner(stair.min_s, stair.min_t), stair
