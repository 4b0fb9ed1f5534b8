"""Numerical invariants of monomial ideals: multiplicities, gap counts, fits.

The central quantity is the generalized Hilbert-Kunz multiplicity of
the quotient by a monomial ideal.  For a plane cone it is the area of
the region between the saturation quadrant and the ideal staircase, an
explicit rational number.  The finite counts that converge to it (gap
points of bracket powers, local cohomology lengths of ordinary powers)
are computed exactly as lattice counts and compared against the area
through a perimeter-based error constant.
"""

from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    BadParameters,
    ContractViolation,
    NoStabilization,
    NotMPrimary,
    NotSaturated,
)
from .geometry import (
    Corner,
    Staircase,
    count_lattice_band,
    count_lattice_complement,
    staircase_complement_area,
)
from .ideals import MonomialIdeal, frobenius_power, is_saturated, ordinary_power


def eghk(ideal: MonomialIdeal) -> Fraction:
    """Generalized Hilbert-Kunz multiplicity of the quotient by the ideal.

    Exact rational: the plane area between the threshold quadrant and
    the ideal staircase, measured in the ambient lattice normalization.
    Zero exactly when the saturation is principal.
    """
    c1, c2 = ideal.thresholds
    return staircase_complement_area(ideal.cone, Corner(c1, c2), ideal.stair)


def _gap_count(ideal: MonomialIdeal, scale: int, stair: Staircase) -> int:
    c1, c2 = ideal.thresholds
    return count_lattice_complement(ideal.cone, Corner(scale * c1, scale * c2), stair)


def ghk_function(ideal: MonomialIdeal, p: int, n_max: int) -> list[int]:
    """Values of the generalized Hilbert-Kunz function at q = p^0 .. p^n_max.

    Entry n is the number of lattice points above the scaled thresholds
    that are missing from the q-th bracket power, q = p^n.  p must be
    prime and n_max nonnegative.
    """
    if n_max < 0:
        raise BadParameters("n_max must be nonnegative")
    if p < 2 or any(p % d == 0 for d in range(2, p) if d * d <= p):
        raise BadParameters(f"characteristic {p} is not prime")
    values = []
    for n in range(n_max + 1):
        q = p**n
        values.append(_gap_count(ideal, q, frobenius_power(ideal, q).stair))
    return values


class GapSplit(NamedTuple):
    """Gap count of a bracket power split along the ordinary power.

    total_gap counts threshold-quadrant points missing from the bracket
    power; sym_vs_ord counts those missing from the ordinary power too,
    ord_vs_frob those in the ordinary power but not the bracket power.
    The three counts are enumerated independently, yet total_gap always
    equals sym_vs_ord + ord_vs_frob.
    """

    total_gap: int
    sym_vs_ord: int
    ord_vs_frob: int


def frobenius_gap_split(ideal: MonomialIdeal, q: int) -> GapSplit:
    """Split the q-th bracket-power gap count along the q-th ordinary power.

    Requires a saturated ideal, so that points above the scaled
    thresholds are exactly the points of the scaled saturation region.
    """
    if not is_saturated(ideal):
        raise NotSaturated("gap split needs a saturated ideal")
    if q < 1:
        raise BadParameters("q must be a positive integer")
    c1, c2 = ideal.thresholds
    threshold = Corner(q * c1, q * c2)
    frob_stair = ideal.stair.scale(q)
    ord_stair = ordinary_power(ideal, q).stair if q > 1 else ideal.stair
    total = count_lattice_complement(ideal.cone, threshold, frob_stair)
    sym = count_lattice_complement(ideal.cone, threshold, ord_stair)
    band = count_lattice_band(ideal.cone, threshold, ord_stair, frob_stair)
    return GapSplit(total, sym, band)


def _h0_at(ideal: MonomialIdeal, n: int) -> int:
    stair = ordinary_power(ideal, n).stair if n > 1 else ideal.stair
    return _gap_count(ideal, n, stair)


def h0_powers(ideal: MonomialIdeal, n_max: int) -> list[int]:
    """Local cohomology lengths of the quotients by ordinary powers, n = 1 .. n_max.

    Entry n - 1 counts lattice points above n times the thresholds that
    the n-th ordinary power misses.
    """
    if n_max < 1:
        raise BadParameters("n_max must be a positive integer")
    return [_h0_at(ideal, n) for n in range(1, n_max + 1)]


class ClassFit(NamedTuple):
    """Exact quadratic fitted to one residue class of a sequence."""

    residue: int
    coeffs: tuple[Fraction, Fraction, Fraction]
    onset: int

    def evaluate(self, n: int) -> Fraction:
        a2, a1, a0 = self.coeffs
        return a2 * n * n + a1 * n + a0


class QuasiPolynomial(NamedTuple):
    """Per-residue-class quadratics describing the tail of a sequence."""

    period: int
    classes: tuple[ClassFit, ...]

    def evaluate(self, n: int) -> Fraction:
        return self.classes[n % self.period].evaluate(n)

    @property
    def onset(self) -> int:
        return max(c.onset for c in self.classes)

    def leading(self, residue: int) -> Fraction:
        return self.classes[residue].coeffs[0]


def _quadratic_through(pts: list[tuple[int, int]]) -> tuple[Fraction, Fraction, Fraction]:
    (n1, v1), (n2, v2), (n3, v3) = pts
    d1 = Fraction(v2 - v1, n2 - n1)
    d2 = Fraction(v3 - v2, n3 - n2)
    a2 = (d2 - d1) / (n3 - n1)
    # expand the Newton form v1 + d1 (n - n1) + a2 (n - n1)(n - n2)
    a1 = d1 - a2 * (n1 + n2)
    a0 = v1 - d1 * n1 + a2 * n1 * n2
    return a2, a1, a0


def fit_quasi_polynomial(
    seq: Sequence[int], period: int, verify_window: int = 5
) -> QuasiPolynomial:
    """Fit an exact quadratic to each residue class of seq and verify it.

    seq[i] is the value at n = i, matching the sequences produced by
    h0_powers and ghk_function.  For each residue class modulo period,
    a quadratic is interpolated through the last three entries and must
    reproduce the last verify_window entries of the class; otherwise
    NoStabilization reports the failing class.  The per-class onset is
    the least n from which the fit reproduces every entry.  Requires
    len(seq) >= 7 * period so each class has enough entries.
    """
    if period < 1:
        raise BadParameters("period must be a positive integer")
    if verify_window < 3:
        raise BadParameters("verify window must be at least 3")
    if len(seq) < 7 * period:
        raise BadParameters(
            f"need at least {7 * period} entries to fit period {period}"
        )
    classes = []
    for residue in range(period):
        pts = [(n, seq[n]) for n in range(len(seq)) if n % period == residue]
        coeffs = _quadratic_through(pts[-3:])
        fit = ClassFit(residue, coeffs, pts[0][0])
        window = pts[-verify_window:]
        if any(fit.evaluate(n) != v for n, v in window):
            raise NoStabilization(
                f"residue class {residue} does not match its quadratic "
                f"on the last {verify_window} entries"
            )
        onset = pts[-1][0]
        for n, v in reversed(pts):
            if fit.evaluate(n) != v:
                break
            onset = n
        classes.append(ClassFit(residue, coeffs, onset))
    return QuasiPolynomial(period, tuple(classes))


def newton_multiplicity(ideal: MonomialIdeal) -> int:
    """Multiplicity of a finite-colength ideal from its Newton region.

    Twice the plane area between the cone and the convex hull of the
    ideal region.  The ideal must have thresholds (0, 0); the result is
    always an integer and ContractViolation flags a non-integer area.
    """
    if ideal.thresholds != (0, 0):
        raise NotMPrimary(
            f"thresholds {tuple(ideal.thresholds)} are not (0, 0); "
            "the quotient is not finite length"
        )

    def cross(o: Corner, a: Corner, b: Corner) -> int:
        return (a.s - o.s) * (b.t - o.t) - (a.t - o.t) * (b.s - o.s)

    hull: list[Corner] = []
    for c in ideal.stair.corners:
        while len(hull) >= 2 and cross(hull[-2], hull[-1], c) <= 0:
            hull.pop()
        hull.append(c)
    polygon = [Corner(0, 0)] + hull
    twice = 0
    for a, b in zip(polygon, polygon[1:] + polygon[:1]):
        twice += a.s * b.t - b.s * a.t
    twice = abs(twice)
    if twice % ideal.cone.det_abs != 0:
        raise ContractViolation("Newton area is not an integer multiple of the index")
    return twice // ideal.cone.det_abs


def epsilon_estimate(ideal: MonomialIdeal, n_max: int) -> Fraction:
    """Finite-stage estimate of the epsilon multiplicity.

    The local cohomology length of the n_max-th ordinary power divided
    by n_max squared.  Converges from below up to a perimeter term, and
    the generalized Hilbert-Kunz multiplicity always dominates the true
    limit.  Requires n_max >= 10 so the estimate is meaningful.
    """
    if n_max < 10:
        raise BadParameters("n_max must be at least 10")
    return Fraction(_h0_at(ideal, n_max), n_max * n_max)


def convergence_constant(ideal: MonomialIdeal) -> int:
    """Perimeter constant bounding the Hilbert-Kunz normalization error.

    C = 4 (W + H) where W and H are the corner-space width and height of
    the ideal's gap box at q = 1.  For every prime power q the scaled
    gap count satisfies |count / q^2 - area| <= C / q; the factor 4
    leaves room for the boundary columns on both sides.
    """
    stair = ideal.stair
    width = stair.max_s - stair.min_s
    height = stair.max_t - stair.min_t
    return 4 * (width + height)
