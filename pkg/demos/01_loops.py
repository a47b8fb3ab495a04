"""Loops and their algebras: a nonassociative Moufang loop of order 12."""

from hopfq import laws, loops

S3 = loops.symmetric3()
M = loops.chein_double(S3)
c = loops.classify_loop(M)
print(f"M(S3,2) has order {M.order}; group={c.group} moufang={c.moufang} ip={c.ip}")
print("associativity fails at", c.witnesses["group"])

A = loops.loop_algebra(M)
reps = laws.verify_suite(A, "hqg")
print(f"loop algebra: {sum(r.passed for r in reps)}/{len(reps)} hqg laws pass; classes {sorted(A.verified)}")
print("as a Hopf algebra it fails:", [r.law for r in laws.verify_suite(A, "hopf-algebra") if not r.passed])
