"""The R_α family on H4, and why the trivial R does not work there."""

from fractions import Fraction

from hopfq import catalog, qtyd
from hopfq.exactlin import tensor

H = catalog.taft4()
for alpha in catalog.DEFAULT_ALPHAS:
    qt = catalog.r_alpha(alpha, H)
    print(f"R_{alpha}: {len(qt.reports)} quasitriangular laws pass")

try:
    qtyd.make_quasitriangular(H, catalog.r_alpha_literal_map(H, Fraction(1)))
except qtyd.NotQuasitriangular as exc:
    print("unflipped nilpotent part at α = 1 fails:", exc.report.law)

try:
    qtyd.make_quasitriangular(H, tensor(H.unit, H.unit))
except qtyd.NotQuasitriangular as exc:
    print("R = 1⊗1 fails", exc.report.law, "at", exc.report.witness["input"])
