"""
Skew pairings τ: A⊗H -> K, the cocycle ω they induce on A⊗H, the product
A⋈_τH, the actions φ_A, φ_H, and double crossproducts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import core, deform, laws
from .core import AlgebraicStructure, LawFails
from .exactlin import LinMap, NotInvertible, compose, identity, invert, tensor


class NotSkewPairing(LawFails):
    def __init__(self, report, context="", failures=()):
        super().__init__(report, context)
        self.failures = list(failures) or [report]


class InverseMismatch(ValueError):
    pass


class AntipodeNotInvertible(ValueError):
    pass


class ModuleLawFails(LawFails):
    pass


_PAIRING_LAWS = ("pairing-mult-left", "skew-mult-right", "pairing-unit-right", "pairing-unit-left")


@dataclass(eq=False)
class SkewPairing:
    A: AlgebraicStructure
    H: AlgebraicStructure
    tau: LinMap
    tau_inv: LinMap
    reports: list = field(default_factory=list)

    @property
    def roles(self) -> dict:
        return {"A": self.A, "H": self.H}

    @property
    def slots(self) -> dict:
        return {"tau": self.tau, "tau_inv": self.tau_inv}


def pairing_laws(A, H, tau) -> list[laws.LawReport]:
    tau = tau.retyped((A.space, H.space), ()).materialize()
    return [laws.check_law(i, {"A": A, "H": H}, {"tau": tau}) for i in _PAIRING_LAWS]


def make_skew_pairing(A: AlgebraicStructure, H: AlgebraicStructure, tau: LinMap) -> SkewPairing:
    """Validate τ, derive τ⁻¹ = τ∘(λ_A⊗H) and cross-check it against every other route."""
    tau = tau.retyped((A.space, H.space), ()).materialize()
    reps = pairing_laws(A, H, tau)
    bad = [r for r in reps if not r.passed]
    if bad:
        raise NotSkewPairing(bad[0], "skew pairing", bad)
    routes = {}
    if A.lantipode is not None:
        routes["left antipode"] = compose(tau, tensor(A.lantipode, H.id())).materialize()
    if A.rantipode is not None:
        routes["right antipode"] = compose(tau, tensor(A.rantipode, H.id())).materialize()
    try:
        routes["linear solve"] = core.convolution_inverse(tau, [A, H], None).retyped(tau.domain, ())
    except (core.NotConvInvertible, core.OneSidedOnly) as exc:
        raise InverseMismatch(f"τ has no two-sided convolution inverse: {exc}") from None
    names = list(routes)
    first = routes[names[0]]
    for other in names[1:]:
        if routes[other] != first:
            raise InverseMismatch(f"τ⁻¹ via {names[0]} differs from τ⁻¹ via {other}")
    sp = SkewPairing(A, H, tau, first.materialize())
    sp.reports = laws.verify_suite(sp.roles, "skew-pairing", sp.slots)
    bad = [r for r in sp.reports if not r.passed]
    if bad:
        raise NotSkewPairing(bad[0], "skew pairing inverse", bad)
    return sp


def trivial_pairing(A: AlgebraicStructure, H: AlgebraicStructure) -> SkewPairing:
    return make_skew_pairing(A, H, tensor(A.counit, H.counit))


def pairing_consequences(p: SkewPairing) -> list[laws.LawReport]:
    ids = ["tau-inv-mult-left", "tau-right-antipode"]
    if p.A.lantipode is not None and p.H.lantipode is not None:
        ids[1:1] = ["tau-antipodes", "tau-inv-antipodes"]
    if p.A.lantipode is not None:
        ids.append("tau-inverse-by-antipode")
    if p.A.rantipode is not None:
        ids.append("tau-inverse-by-right-antipode")
    return [laws.check_law(i, p.roles, p.slots) for i in ids]


# ---------------------------------------------------------------------------
# A⊗H, ω and A⋈_τH


def tensor_hqg(A: AlgebraicStructure, H: AlgebraicStructure) -> AlgebraicStructure:
    T = core.tensor_structure(A, H)
    core.classify(T)
    return T


def pairing_to_cocycle(p: SkewPairing, base: AlgebraicStructure | None = None) -> deform.TwoCocycle:
    """ω = ε_A⊗(τ∘c_{H,A})⊗ε_H with ω⁻¹ = ε_A⊗(τ⁻¹∘c_{H,A})⊗ε_H."""
    base = base or tensor_hqg(p.A, p.H)
    P = base.space
    omega = laws.build("eps_A @ (tau * c(H,A)) @ eps_H", p.roles, p.slots).retyped((P, P), ())
    omega_inv = laws.build("eps_A @ (tau_inv * c(H,A)) @ eps_H", p.roles, p.slots).retyped((P, P), ())
    return deform.make_cocycle(base, omega, sigma_inv=omega_inv)


BOWTIE_PRODUCT = (
    "(mu_A @ mu_H) * (A @ tau @ A @ H @ tau_inv @ H) * (A @ deltaAH @ A @ H @ H)"
    " * (A @ deltaAH @ H) * (A @ c(H,A) @ H)"
)
BOWTIE_ANTIPODE = "(tau_inv @ lam_A @ lam_H @ tau) * (A @ H @ deltaAH) * deltaAH"
BOWTIE_RANTIPODE = "(tau_inv @ rlam_A @ rlam_H @ tau) * (A @ H @ deltaAH) * deltaAH"
_DELTA_AH = (("deltaAH", "(A @ c(A,H) @ H) * (delta_A @ delta_H)"),)


def bowtie(
    p: SkewPairing,
    name: str = "A⋈H",
    check_deformation: bool = True,
    deformed: AlgebraicStructure | None = None,
) -> AlgebraicStructure:
    """A⋈_τH from its closed-form product; asserted equal to (A⊗H)^ω.

    Pass an already computed ``deformed`` = (A⊗H)^ω to skip rebuilding it.
    """
    T = tensor_hqg(p.A, p.H) if deformed is None else deformed
    P = T.space
    mul = laws.build(BOWTIE_PRODUCT, p.roles, p.slots, _DELTA_AH).retyped((P, P), (P,))
    opts = {}
    if p.A.lantipode is not None and p.H.lantipode is not None:
        opts["lantipode"] = laws.build(BOWTIE_ANTIPODE, p.roles, p.slots, _DELTA_AH).retyped((P,), (P,))
    if p.A.rantipode is not None and p.H.rantipode is not None:
        opts["rantipode"] = laws.build(BOWTIE_RANTIPODE, p.roles, p.slots, _DELTA_AH).retyped((P,), (P,))
    B = T.with_(name=name, mul=mul, **{"ldiv": None, "rdiv": None, "lantipode": None, "rantipode": None, **opts})
    B.provenance = {"construction": "bowtie", "factors": [p.A.name, p.H.name]}
    if check_deformation:
        D = deformed if deformed is not None else deform.deform(T, pairing_to_cocycle(p, T), strict=False)
        if D.mul != B.mul:
            i, j = D.mul.first_difference(B.mul)
            raise AssertionError(f"bowtie product differs from the ω-deformation at input {i}, output {j}")
        for attr in ("lantipode", "rantipode"):
            mine, theirs = getattr(B, attr), getattr(D, attr)
            if mine is not None and theirs is not None and mine != theirs:
                raise AssertionError(f"bowtie {attr} differs from the ω-deformation")
        B = B.with_(ldiv=D.ldiv, rdiv=D.rdiv)
        B.provenance = {"construction": "bowtie", "factors": [p.A.name, p.H.name], "equals": "ω-deformation"}
    else:
        if B.lantipode is not None:
            B = B.with_(ldiv=compose(B.mul, tensor(B.lantipode, B.id())))
        if B.rantipode is not None:
            B = B.with_(rdiv=compose(B.mul, tensor(B.id(), B.rantipode)))
    core.classify(B)
    return B


# ---------------------------------------------------------------------------
# actions and double crossproducts

PHI_A = "(tau @ A @ tau_inv) * (A @ H @ delta_A @ H) * deltaAH * c(H,A)"
PHI_H = "(tau @ H @ tau_inv) * (A @ H @ c(A,H) @ H) * (A @ H @ A @ delta_H) * deltaAH * c(H,A)"


@dataclass(eq=False)
class ActionPair:
    phiA: LinMap
    phiH: LinMap
    reports: dict = field(default_factory=dict)

    @property
    def slots(self) -> dict:
        return {"phiA": self.phiA, "phiH": self.phiH}


def action_reports(A, H, acts: ActionPair) -> dict[str, list[laws.LawReport]]:
    return {
        "left-module-comonoid": laws.verify_suite({"H": H, "M": A}, "left-module-comonoid", {"phi": acts.phiA}),
        "right-module-comonoid": laws.verify_suite({"M": H, "A": A}, "right-module-comonoid", {"phi": acts.phiH}),
    }


def actions_from_pairing(p: SkewPairing) -> ActionPair:
    A, H = p.A, p.H
    if "hqg" not in H.verified:
        if H.lantipode is None:
            raise AntipodeNotInvertible(f"{H.name} has no left antipode")
        try:
            invert(H.lantipode)
        except NotInvertible:
            raise AntipodeNotInvertible(f"the left antipode of {H.name} is not invertible") from None
    phiA = laws.build(PHI_A, p.roles, p.slots, _DELTA_AH).retyped((H.space, A.space), (A.space,))
    phiH = laws.build(PHI_H, p.roles, p.slots, _DELTA_AH).retyped((H.space, A.space), (H.space,))
    acts = ActionPair(phiA.materialize(), phiH.materialize())
    acts.reports = action_reports(A, H, acts)
    for reps in acts.reports.values():
        core.require(reps, "pairing actions")
    return acts


DCP_PRODUCT = "(mu_A @ mu_H) * (A @ phiA @ phiH @ H) * (A @ deltaHA @ H)"
DCP_ANTIPODE = "(phiA @ phiH) * deltaHA * (lam_H @ lam_A) * c(A,H)"
DCP_RANTIPODE = "(phiA @ phiH) * deltaHA * (rlam_H @ rlam_A) * c(A,H)"
_DELTA_HA = (("deltaHA", "(H @ c(H,A) @ A) * (delta_H @ delta_A)"),)


@dataclass
class MajidReport:
    left: list
    right: list
    left_equivalence: bool
    right_equivalence: bool

    @property
    def all(self) -> list:
        seen = {r.law for r in self.left}
        return self.left + [r for r in self.right if r.law not in seen]


def majid_conditions(A, H, acts: ActionPair) -> tuple[list, list]:
    roles = {"A": A, "H": H}
    return laws.verify_suite(roles, "majid-left", acts.slots), laws.verify_suite(roles, "majid-right", acts.slots)


def double_cross_product(
    A: AlgebraicStructure,
    H: AlgebraicStructure,
    acts: ActionPair,
    name: str = "A⋈H",
    pairing: SkewPairing | None = None,
) -> tuple[AlgebraicStructure, MajidReport]:
    """A⊗H with the product twisted by the two actions, plus the Majid condition audit."""
    for reps in action_reports(A, H, acts).values():
        core.require(reps, "double crossproduct", ModuleLawFails)
    roles = {"A": A, "H": H}
    T = core.tensor_structure(A, H)
    P = T.space
    mul = laws.build(DCP_PRODUCT, roles, acts.slots, _DELTA_HA).retyped((P, P), (P,))
    opts = {}
    if A.lantipode is not None and H.lantipode is not None:
        lam = laws.build(DCP_ANTIPODE, roles, acts.slots, _DELTA_HA).retyped((P,), (P,))
        opts["lantipode"] = lam
        opts["ldiv"] = compose(mul, tensor(lam, identity(P, A.field)))
    if A.rantipode is not None and H.rantipode is not None:
        rlam = laws.build(DCP_RANTIPODE, roles, acts.slots, _DELTA_HA).retyped((P,), (P,))
        opts["rantipode"] = rlam
        opts["rdiv"] = compose(mul, tensor(identity(P, A.field), rlam))
    D = T.with_(name=name, mul=mul, ldiv=None, rdiv=None, lantipode=None, rantipode=None)
    D = D.with_(**opts)
    D.provenance = {"construction": "double-crossproduct", "factors": [A.name, H.name]}
    core.classify(D)
    left, right = majid_conditions(A, H, acts)
    lhqg = "left-hqg" in D.verified
    rhqg = "right-hqg" in D.verified
    report = MajidReport(left, right, laws.all_pass(left) == lhqg, laws.all_pass(right) == rhqg)
    if pairing is not None:
        B = bowtie(pairing, check_deformation=False)
        D.provenance["equals_bowtie"] = B.mul == D.mul
    return D, report

