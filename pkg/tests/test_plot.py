import json
import re
from fractions import Fraction

from ghk.cli import run_command
from ghk.families import a_singularity, parse_family, veronese
from ghk.svgplot import render_region_svg

POLYGON = re.compile(r'<polygon class="([a-z-]+)"[^>]*points="([^"]+)"')
CIRCLE = re.compile(r'<circle class="([a-z-]+)"')


def polygons(svg):
    found = {}
    for cls, raw in POLYGON.findall(svg):
        pts = [tuple(int(v) for v in pair.split(",")) for pair in raw.split()]
        found.setdefault(cls, []).append(pts)
    return found


def circles(svg):
    counts = {}
    for cls in CIRCLE.findall(svg):
        counts[cls] = counts.get(cls, 0) + 1
    return counts


def shoelace2(pts):
    total = 0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total)


class TestRenderedRegions:
    def test_veronese_band_areas(self):
        inst = veronese(3, 1)
        svg = render_region_svg(inst.ideal, q_mark=2)
        polys = polygons(svg)
        det = inst.cone.det_abs
        # x-space areas reappear scaled by 2 * det^2 under the integer transform
        red = sum(shoelace2(p) for p in polys["region-red"])
        green = sum(shoelace2(p) for p in polys["region-green"])
        # red tracks the ordinary-power gap, green the band up to the scaled stair
        assert Fraction(red, 2 * det**2) == Fraction(1, 4) * 4
        assert Fraction(green, 2 * det**2) == Fraction(1, 12) * 4
        dots = circles(svg)
        assert dots["gap-dot"] == 1
        assert dots["gen-dot"] == 2

    def test_a_family_unscaled(self):
        inst = a_singularity(3, 1)
        svg = render_region_svg(inst.ideal)
        polys = polygons(svg)
        det = inst.cone.det_abs
        red = sum(shoelace2(p) for p in polys["region-red"])
        assert Fraction(red, 2 * det**2) == Fraction(2, 3)
        assert circles(svg).get("gap-dot", 0) == 0

    def test_principal_ideal_has_no_gap_region(self):
        inst = parse_family("quadrant:(2,3)")
        svg = render_region_svg(inst.ideal)
        polys = polygons(svg)
        assert "region-red" not in polys
        assert "region-green" not in polys
        assert "region-w" in polys
        dots = circles(svg)
        assert dots.get("gap-dot", 0) == 0
        assert dots["gen-dot"] == 1

    def test_deterministic_output(self):
        inst = a_singularity(5, 2)
        first = render_region_svg(inst.ideal, q_mark=3)
        second = render_region_svg(inst.ideal, q_mark=3)
        assert first == second
        assert first.startswith("<svg")
        assert 'data-power-scale="3"' in first


class TestPlotCommand:
    def test_writes_file_and_reports_areas(self, capsys, tmp_path):
        out = tmp_path / "region.svg"
        code = run_command(
            ["plot", "--family", "veronese:3,1", "--q-mark", "2", "--out", str(out)]
        )
        captured = capsys.readouterr()
        assert code == 0
        report = json.loads(captured.out)
        results = report["results"]
        assert results["out"] == str(out)
        assert results["power_scale"] == 2
        areas = results["areas"]
        assert areas["total_gap"]["rational"] == "1/3"
        assert areas["ordinary_gap"]["rational"] == "1/4"
        assert areas["band"]["rational"] == "1/12"
        svg = out.read_text()
        assert svg == render_region_svg(veronese(3, 1).ideal, q_mark=2)

    def test_same_bytes_across_invocations(self, capsys, tmp_path):
        first = tmp_path / "one.svg"
        second = tmp_path / "two.svg"
        for out in (first, second):
            assert run_command(["plot", "--family", "a:4,1", "--out", str(out)]) == 0
        capsys.readouterr()
        assert first.read_bytes() == second.read_bytes()
