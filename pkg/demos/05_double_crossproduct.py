"""Actions induced by τ, the matched-pair conditions and the double crossproduct."""

from hopfq import catalog, laws, pairing

A, H = catalog.ms32_algebra(), catalog.taft4()
p = pairing.make_skew_pairing(A, H, catalog.tau_sign_map(A, H))
acts = pairing.actions_from_pairing(p)
for name, reps in acts.reports.items():
    print(f"{name}: {laws.all_pass(reps)}")

D, majid = pairing.double_cross_product(A, H, acts, pairing=p)
print(f"Majid conditions: {sum(r.passed for r in majid.all)}/{len(majid.all)} pass")
print("double crossproduct equals A⋈H4:", D.provenance["equals_bowtie"])
