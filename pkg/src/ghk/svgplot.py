"""Deterministic SVG pictures of cone, ideal region, and gap region.

The picture lives in the ambient plane scaled by det_abs times the
drawn power, which makes every coordinate an exact integer: corner
coordinates map to the plane through the adjugate of the normal matrix,
so no rounding ever happens and rendering the same input twice gives
byte-identical output.

Drawn layers, back to front: the ideal region of the shown bracket
power (gray, class region-w), the part of the threshold quadrant
missing from the ordinary power (red, class region-red), the strip the
ordinary power covers beyond the bracket power (green rectangles, class
region-green), the two cone edges, circles at the generator corners
(class gen-dot) and at the lattice points counted by the gap function
(class gap-dot).
"""

from fractions import Fraction
from typing import Callable, Optional

from .errors import BadParameters
from .fmt import exact_decimal
from .geometry import Corner, Staircase
from .ideals import MonomialIdeal, ordinary_power

_STYLE = {
    "region-w": "#d9d9d9",
    "region-red": "#d94545",
    "region-green": "#3fa34d",
}


def _corner_to_svg(cone) -> Callable[[int, int], tuple[int, int]]:
    n1, n2 = cone.normal1, cone.normal2
    det = n1[0] * n2[1] - n1[1] * n2[0]
    sign = 1 if det > 0 else -1

    def to_svg(s: int, t: int) -> tuple[int, int]:
        px = sign * (n2[1] * s - n1[1] * t)
        py = sign * (-n2[0] * s + n1[0] * t)
        return px, -py

    return to_svg


def _polygon(points: list[tuple[int, int]], cls: str) -> str:
    coords = " ".join(f"{x},{y}" for x, y in points)
    return f'<polygon class="{cls}" fill="{_STYLE[cls]}" points="{coords}"/>'


def _staircase_boundary(stair: Staircase) -> list[Corner]:
    pts = [stair.corners[0]]
    for prev, cur in zip(stair.corners, stair.corners[1:]):
        pts.append(Corner(cur.s, prev.t))
        pts.append(cur)
    return pts


def render_region_svg(ideal: MonomialIdeal, q_mark: Optional[int] = None) -> str:
    """Render the region picture, optionally at the q-th bracket power.

    With q_mark the whole figure is the q-scaled one: gray shows the
    bracket power's region, red the points of the threshold quadrant
    outside the q-th ordinary power, green the band between the two
    staircases, and the dots mark the exact lattice points behind the
    gap count.  Without q_mark it is the base picture (q = 1).
    """
    if q_mark is not None and q_mark < 1:
        raise BadParameters("q_mark must be a positive integer")
    q = q_mark or 1
    cone = ideal.cone
    step = cone.det_abs
    to_svg = _corner_to_svg(cone)

    coarse = ideal.stair.scale(q)
    fine = ordinary_power(ideal, q).stair if q > 1 else ideal.stair
    ts, tt = ideal.thresholds
    threshold = Corner(q * ts, q * tt)

    pad = 2 * q + step
    s_end = coarse.max_s + pad
    t_end = coarse.max_t + pad

    parts: list[str] = []

    w_points = [Corner(coarse.min_s, t_end)]
    w_points += _staircase_boundary(coarse)
    w_points += [Corner(s_end, coarse.min_t), Corner(s_end, t_end)]
    parts.append(_polygon([to_svg(*c) for c in w_points], "region-w"))

    if len(fine.corners) > 1 or fine.corners[0] != threshold:
        red_points = [threshold] + _staircase_boundary(fine)
        parts.append(_polygon([to_svg(*c) for c in red_points], "region-red"))

    breaks = sorted({c.s for c in fine.corners} | {c.s for c in coarse.corners})
    breaks.append(coarse.max_s)
    for a, b in zip(breaks, breaks[1:]):
        high = coarse.height(a)
        low = fine.height(a)
        if low is not None and high is not None and low < high:
            rect = [Corner(a, low), Corner(b, low), Corner(b, high), Corner(a, high)]
            parts.append(_polygon([to_svg(*c) for c in rect], "region-green"))

    stroke = exact_decimal(Fraction(step * q, 6))
    for corner_end in (Corner(0, t_end), Corner(s_end, 0)):
        x, y = to_svg(*corner_end)
        parts.append(
            f'<line class="ray-line" x1="0" y1="0" x2="{x}" y2="{y}" '
            f'stroke="#202020" stroke-width="{stroke}"/>'
        )

    radius = exact_decimal(Fraction(step * q, 4))
    for c in coarse.corners:
        x, y = to_svg(*c)
        parts.append(
            f'<circle class="gen-dot" cx="{x}" cy="{y}" r="{radius}" '
            f'fill="none" stroke="#1d4ed8" stroke-width="{stroke}"/>'
        )

    _, tau = cone.column_data()
    for s in range(threshold.s, coarse.max_s):
        high = coarse.height(s)
        t = threshold.t + (tau * s - threshold.t) % step
        while t < high:
            x, y = to_svg(s, t)
            parts.append(
                f'<circle class="gap-dot" cx="{x}" cy="{y}" r="{radius}" fill="#111111"/>'
            )
            t += step

    span_pts = [to_svg(0, 0), to_svg(s_end, 0), to_svg(0, t_end), to_svg(s_end, t_end)]
    margin = 2 * step * q
    min_x = min(p[0] for p in span_pts) - margin
    max_x = max(p[0] for p in span_pts) + margin
    min_y = min(p[1] for p in span_pts) - margin
    max_y = max(p[1] for p in span_pts) + margin
    vb_w = max_x - min_x
    vb_h = max_y - min_y
    width = 560
    height = max(1, (vb_h * width + vb_w // 2) // vb_w)

    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{min_x} {min_y} {vb_w} {vb_h}" '
        f'width="{width}" height="{height}" '
        f'data-lattice-scale="{step}" data-power-scale="{q}">'
    )
    return head + "".join(parts) + "</svg>"
