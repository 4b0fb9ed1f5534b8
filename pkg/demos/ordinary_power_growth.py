"""Quasi-polynomial growth of ordinary-power colengths.

For a saturated ideal the colength sequence h0(n) eventually agrees with a
quadratic on each residue class mod the torsion order r, and the shared
leading coefficient equals e(primary part) / (2 r^2).  This script shows the
whole chain on one instance.
"""

from fractions import Fraction

from ghk import (
    a_singularity,
    eghk,
    epsilon_estimate,
    fit_quasi_polynomial,
    h0_powers,
    newton_multiplicity,
    torsion_factorization,
)

inst = a_singularity(5, 2)
ideal = inst.ideal
print("instance:", inst.label)

torsion = torsion_factorization(ideal)
print("torsion order:", torsion.order, "shift:", torsion.shift)
print("primary part corners:", list(torsion.primary.stair.corners))

e_primary = newton_multiplicity(torsion.primary)
predicted = Fraction(e_primary, 2 * torsion.order**2)
print("newton multiplicity of primary part:", e_primary, "-> predicted leading", predicted)

# period-5 fitting wants a longer run than the default estimate window
values = h0_powers(ideal, 40)
print("h0 sequence:", values[:12], "...")

fit = fit_quasi_polynomial(values, torsion.order)
print("stabilizes from n =", fit.onset)
for cls in fit.classes:
    print(f"  class n = {cls.residue} mod {fit.period}: coeffs {[str(c) for c in cls.coeffs]} from n >= {cls.onset}")
    assert cls.coeffs[0] == predicted

# every fitted class must reproduce the tail exactly
for n in range(fit.onset, len(values)):
    assert fit.evaluate(n) == values[n]

estimate = epsilon_estimate(ideal, 30)
print("normalized growth estimate h0(30)/900 =", estimate, "<= multiplicity", eghk(ideal))
assert eghk(ideal) >= estimate - Fraction(2, 30)
