"""Strong projection A⋈H4 -> H4, its Yetter-Drinfeld splitting and the biproduct."""

from fractions import Fraction

from hopfq import catalog, laws, pairing, qtyd
from hopfq.exactlin import compose, identity

A, H = catalog.ms32_algebra(), catalog.taft4()
p = pairing.make_skew_pairing(A, H, catalog.tau_sign_map(A, H))
B = pairing.bowtie(p, check_deformation=False)
proj = qtyd.projection_from_pairing(p, catalog.r_alpha(Fraction(1), H), B)
print(f"projection strong: {proj.strong}; image of q has dim {proj.Z.dim}")

sp = qtyd.split_to_yd(proj)
for key in ("yd-module", "braided-hqg", "closed-forms"):
    print(f"{key}: {laws.all_pass(sp.reports[key])}")
print("split product is μ_A:", laws.all_pass(sp.reports["product-comparison"]))

DH = qtyd.biproduct(sp.D, H, sp.module)
iso = qtyd.iso_w(proj, DH)
w, winv = iso.forward.map, iso.inverse.map
print(f"D⋊H4 has dim {DH.dim}, classes {sorted(DH.verified)}")
print("w∘w⁻¹ = id:", compose(w, winv) == identity(B.space), "w⁻¹∘w = id:", compose(winv, w) == identity(DH.space))
