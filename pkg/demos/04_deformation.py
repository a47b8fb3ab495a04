"""Deforming A⊗H4 by ω gives the skew-pairing product A⋈H4."""

from hopfq import catalog, deform, laws, pairing

A, H = catalog.ms32_algebra(), catalog.taft4()
p = pairing.make_skew_pairing(A, H, catalog.tau_sign_map(A, H))
T = pairing.tensor_hqg(A, H)
omega = pairing.pairing_to_cocycle(p, T)
D = deform.deform(T, omega, strict=False)
print("deformed classes:", sorted(D.verified))
print("product changed:", D.mul != T.mul, "first differing entry:", D.mul.first_difference(T.mul))

B = pairing.bowtie(p, deformed=D)
print("bowtie product equals the deformation:", B.mul == D.mul)
print("A⋈H4 is associative:", laws.check_law("associativity", B).passed)
