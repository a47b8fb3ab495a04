"""A skew pairing between M(S3,2) and H4, and the cocycle it induces on A⊗H4."""

import time

from hopfq import catalog, laws, pairing

A, H = catalog.ms32_algebra(), catalog.taft4()
p = pairing.make_skew_pairing(A, H, catalog.tau_sign_map(A, H))
print(f"τ passes {len(p.reports)} pairing laws; τ⁻¹ == τ: {p.tau_inv == p.tau}")
print("consequences pass:", laws.all_pass(pairing.pairing_consequences(p)))

start = time.perf_counter()
omega = pairing.pairing_to_cocycle(p)
print(f"ω on 48 dims is a normal cocycle with ω⁻¹ == ω: {omega.sigma_inv == omega.sigma} "
      f"({time.perf_counter() - start:.1f} s)")
