"""The four-dimensional Taft algebra: divisions derived from structure constants alone."""

from hopfq import catalog, core, laws
from hopfq.exactlin import compose

H = catalog.taft4()
print("H4 classes:", sorted(H.verified))

bare = H.with_(ldiv=None, rdiv=None, lantipode=None, rantipode=None)
rep = core.antipode_from_division(bare, "left")
print("left antipode recovered from h⁻¹ matches:", rep.antipode == H.lantipode)

lam2 = compose(H.lantipode, H.lantipode)
print("λ²(y) =", {H.space.labels[k]: str(v) for k, v in lam2.col(2).items()})
print("commutative:", laws.check_law("commutativity", H).passed,
      "cocommutative:", laws.check_law("cocommutativity", H).passed)
