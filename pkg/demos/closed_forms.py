"""Sweep the two built-in families and compare against their closed forms.

Every value is an exact Fraction; the table would show a mismatch as a
literal != line, not a tolerance failure.
"""

from fractions import Fraction

from ghk import a_singularity, eghk, eghk_a, veronese


def sweep(r_max=8):
    rows = []
    for r in range(2, r_max + 1):
        for m in range(1, r):
            ver = veronese(r, m)
            asing = a_singularity(r, m)
            got_v = eghk(ver.ideal)
            got_a = eghk(asing.ideal)
            unit = [0] * (r - 1)
            unit[m - 1] = 1
            structural = eghk_a(r, unit)
            rows.append((r, m, got_v, ver.closed_form, got_a, asing.closed_form, structural))
    return rows


if __name__ == "__main__":
    print(f"{'r':>3} {'m':>3} {'veronese':>10} {'expected':>10} {'a-type':>10} {'expected':>10} {'structural':>10}")
    mismatches = 0
    for r, m, gv, ev, ga, ea, gs in sweep():
        mark = ""
        if gv != ev or ga != ea or gs != ga:
            mark = "  <- MISMATCH"
            mismatches += 1
        print(f"{r:>3} {m:>3} {str(gv):>10} {str(ev):>10} {str(ga):>10} {str(ea):>10} {str(gs):>10}{mark}")
    print()
    # the a-type values are symmetric in m <-> r-m, the veronese ones are not
    print("symmetry spot check, r=7:", [str(eghk(a_singularity(7, m).ideal)) for m in range(1, 7)])
    print("mismatches:", mismatches)
    assert mismatches == 0
