"""Build one ideal from raw lattice data and walk through its invariants.

Prints the Frobenius-power colength sequence, the normalized values against
the limit, the q = 3 gap split, and writes an SVG of the region between the
limit quadrant and the staircase.
"""

from fractions import Fraction

from ghk import (
    Cone2,
    convergence_constant,
    eghk,
    frobenius_gap_split,
    ghk_function,
    is_saturated,
    new_ideal,
    render_region_svg,
    saturation,
)

# cone spanned by (0,1) and (3,-1); its coordinate ring is the A_2 hypersurface
cone = Cone2.from_rays((0, 1), (3, -1))
print("cone rays:", cone.ray1, cone.ray2)
print("facet normals:", cone.normal1, cone.normal2, "lattice index:", cone.det_abs)

ideal = new_ideal(cone, [(3, -1), (1, 0)])
print("generator corners:", list(ideal.stair.corners))
print("thresholds:", ideal.thresholds)
print("saturated:", is_saturated(ideal))

limit = eghk(ideal)
print("multiplicity:", limit)

p = 2
values = ghk_function(ideal, p, 6)
bound_scale = convergence_constant(ideal)
print(f"colengths along q = {p}^n:", values)
for n, value in enumerate(values):
    q = p**n
    gap = abs(Fraction(value, q * q) - limit)
    # the documented rate: |F(q)/q^2 - limit| <= perimeter constant / q
    assert gap <= Fraction(bound_scale, q)
    print(f"  n={n} q={q:>2} value/q^2 = {str(Fraction(value, q*q)):>8}  off by {str(gap):>8}")

split = frobenius_gap_split(ideal, 3)
print("q=3 gap split:", split.total_gap, "=", split.sym_vs_ord, "+", split.ord_vs_frob)

# an ideal touching both facets is primary for the maximal ideal; it is
# never saturated, and saturating it collapses to the unit ideal
rough = new_ideal(cone, [(0, 1), (3, -1)])
print("two-facet ideal: saturated:", is_saturated(rough), "multiplicity:", eghk(rough))
print("  saturation corners:", list(saturation(rough).stair.corners))

svg = render_region_svg(ideal, q_mark=3)
with open("staircase_regions.svg", "w") as handle:
    handle.write(svg)
print("wrote staircase_regions.svg,", len(svg), "bytes")
