"""
Quasitriangular structures, Hopf quasigroup projections and their splitting
into a Yetter-Drinfeld Hopf quasigroup, biproducts, and the comparison
isomorphism back to the projection.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import core, laws
from .core import AlgebraicStructure, LawFails, Morphism
from .exactlin import (
    BasedSpace,
    LinMap,
    NotInvertible,
    compose,
    identity,
    invert,
    split_idempotent,
    swap,
    tensor,
)


class NotQuasitriangular(LawFails):
    pass


class RTConditionFails(LawFails):
    pass


class NotStrong(LawFails):
    pass


class NotIso(LawFails):
    pass


@dataclass(eq=False)
class QuasiTri:
    H: AlgebraicStructure
    R: LinMap
    S: LinMap
    T: LinMap
    reports: list = field(default_factory=list)


def make_quasitriangular(H: AlgebraicStructure, R: LinMap) -> QuasiTri:
    X = H.space
    R = R.retyped((), (X, X)).materialize()
    reps = core.require(laws.verify_suite(H, "quasitriangular", {"R": R}), "quasitriangular", NotQuasitriangular)
    S = laws.build("(lam @ H) * R", H, {"R": R})
    T = laws.build("(lam @ lam) * R", H, {"R": R})
    return QuasiTri(H, R, S, T, reps)


# ---------------------------------------------------------------------------
# projections


@dataclass(eq=False)
class Projection:
    B: AlgebraicStructure
    H: AlgebraicStructure
    f: Morphism
    g: Morphism
    q: LinMap
    p: LinMap
    i: LinMap
    Z: BasedSpace
    reports: dict = field(default_factory=dict)
    pairing: object = None
    qt: QuasiTri | None = None

    @property
    def slots(self) -> dict:
        return {"f": self.f.map, "g": self.g.map, "q": self.q, "p": self.p, "i": self.i, "Z": self.Z}

    @property
    def roles(self) -> dict:
        return {"B": self.B, "H": self.H}

    @property
    def strong(self) -> bool:
        return laws.all_pass(self.reports.get("strong-projection", [False]))


def idempotent_of(B: AlgebraicStructure, H: AlgebraicStructure, f: LinMap, g: LinMap) -> LinMap:
    """q = id_B ∗ (f∘λ_H∘g)."""
    return laws.build("q", {"B": B, "H": H}, {"f": f, "g": g}, laws.LAWS["proj-q-idempotent"].where)


def _morphism_reports(src, tgt, m, name) -> list[laws.LawReport]:
    reps = laws.verify_suite({"X": src, "Y": tgt}, "unital-magma-morphism", {"m": m})
    reps += laws.verify_suite({"X": src, "Y": tgt}, "comonoid-morphism", {"m": m})
    return [laws.LawReport(f"{name}:{r.law}", r.passed, r.witness) for r in reps]


def make_projection(
    B: AlgebraicStructure,
    H: AlgebraicStructure,
    f: LinMap,
    g: LinMap,
    split: tuple[LinMap, LinMap, BasedSpace] | None = None,
    require_strong: bool = True,
) -> Projection:
    """A projection (B, f, g); without an explicit ``split`` the idempotent is split generically."""
    f = f.retyped((H.space,), (B.space,)).materialize()
    g = g.retyped((B.space,), (H.space,)).materialize()
    reps = {"f-morphism": _morphism_reports(H, B, f, "f"), "g-morphism": _morphism_reports(B, H, g, "g")}
    for key in ("f-morphism", "g-morphism"):
        core.require(reps[key], "projection")
    q = idempotent_of(B, H, f, g).retyped((B.space,), (B.space,))
    if split is None:
        p, i, Z = split_idempotent(q, name=f"{B.name}_H")
    else:
        p, i, Z = split
        p = p.retyped((B.space,), (Z,)).materialize()
        i = i.retyped((Z,), (B.space,)).materialize()
    proj = Projection(B, H, Morphism(H, B, f), Morphism(B, H, g), q.materialize(), p, i, Z, reps)
    strong = laws.verify_suite(proj.roles, "strong-projection", proj.slots)
    proj.reports["strong-projection"] = strong
    if require_strong:
        core.require(strong, "strong projection", NotStrong)
    return proj


def projection_from_pairing(pairing, qt: QuasiTri, B: AlgebraicStructure | None = None) -> Projection:
    """The strong projection A⋈_τH -> H given by f = η_A⊗H and g = (τ⊗μ_H)∘(A⊗R⊗H)."""
    from . import pairing as pairing_mod

    A, H = pairing.A, pairing.H
    if qt.H is not H and qt.H.space != H.space:
        raise ValueError("R lives on a different structure than the pairing")
    B = B or pairing_mod.bowtie(pairing)
    roles = {"A": A, "H": H}
    slots = {"tau": pairing.tau, "tau_inv": pairing.tau_inv, "R": qt.R}
    rt = core.require([laws.check_law(i, roles, slots) for i in ("rt-left", "rt-right")], "projection", RTConditionFails)
    P = B.space
    f = tensor(A.unit, H.id()).retyped((H.space,), (P,))
    g = laws.build("(tau @ mu_H) * (A @ R @ H)", roles, slots).retyped((P,), (H.space,))
    p = tensor(A.id(), H.counit).retyped((P,), (A.space,))
    i = laws.build("(A @ tau @ lam_H) * (delta_A @ R)", roles, slots).retyped((A.space,), (P,))
    proj = make_projection(B, H, f, g, split=(p, i, A.space))
    proj.pairing, proj.qt = pairing, qt
    proj.reports["rt"] = rt
    proj.reports["retraction"] = [laws.check_law("proj-retraction", proj.roles, proj.slots)]
    core.require(proj.reports["retraction"], "projection")
    closed = [laws.check_law(k, roles, {**slots, "q": proj.q, "i": proj.i, "gB": g}) for k in ("proj-q-closed", "proj-i-closed", "proj-g-closed")]
    proj.reports["closed-forms"] = core.require(closed, "projection closed forms")
    proj.reports["generic-split"] = [_compare_with_generic_split(proj)]
    return proj


def _compare_with_generic_split(proj: Projection) -> laws.LawReport:
    """The explicit (p, i) and split_idempotent's (p', i') differ by an invertible change of basis."""
    p2, i2, Z2 = split_idempotent(proj.q, name="generic")
    M = compose(p2, proj.i).materialize()
    try:
        Minv = invert(M)
    except NotInvertible:
        return laws.LawReport("generic-split", False, {"reason": "change of basis is singular"})
    ok = compose(i2, M) == proj.i and compose(M, proj.p) == p2 and compose(proj.p, i2) == Minv
    return laws.LawReport("generic-split", ok, None if ok else {"reason": "split bases are not related by p'∘i"})


# ---------------------------------------------------------------------------
# the Yetter-Drinfeld Hopf quasigroup carried by a strong projection


@dataclass(eq=False)
class YDModule:
    H: AlgebraicStructure
    M: BasedSpace
    phi: LinMap
    rho: LinMap
    reports: list = field(default_factory=list)

    def braiding(self, other: "YDModule | None" = None) -> LinMap:
        """t_{M,N} = (φ_N⊗M)∘(H⊗c_{M,N})∘(ρ_M⊗N)."""
        other = other or self
        fld = self.phi.field
        return compose(
            tensor(other.phi, identity(self.M, fld)),
            tensor(identity(self.H.space, fld), swap(self.M, other.M, fld)),
            tensor(self.rho, identity(other.M, fld)),
        ).materialize()


@dataclass(eq=False)
class YDSplit:
    module: YDModule
    D: AlgebraicStructure
    reports: dict = field(default_factory=dict)


def split_to_yd(proj: Projection, require: bool = True) -> YDSplit:
    B, H, Z = proj.B, proj.H, proj.Z
    roles = {"B": B, "H": H}
    s = proj.slots

    def mk(src):
        return laws.build(src, roles, s)

    u = mk("p * eta_B")
    m = mk("p * mu_B * (i @ i)")
    e = mk("eps_B * i")
    Delta = mk("(p @ p) * delta_B * i")
    phi = mk("p * mu_B * (f @ i)").retyped((H.space, Z), (Z,))
    rho = mk("(g @ p) * delta_B * i").retyped((Z,), (H.space, Z))
    anti = mk("p * mu_B * ((f * g) @ lam_B) * delta_B * i")
    D = AlgebraicStructure(f"{B.name}_H", Z, m, u, Delta, e, lantipode=anti, rantipode=anti)
    D.provenance = {"construction": "split", "projection": B.name}
    mod = YDModule(H, Z, phi.materialize(), rho.materialize())
    yd_slots = {"phi": mod.phi, "rho": mod.rho}
    reports = {
        "yd-module": laws.verify_suite({"H": H, "M": D}, "yd-module", yd_slots),
        "braided-hqg": laws.verify_suite({"H": H, "D": D}, "braided-hqg", yd_slots),
    }
    mod.reports = reports["yd-module"]
    if require:
        for key in ("yd-module", "braided-hqg"):
            core.require(reports[key], "split")
    if proj.pairing is not None:
        reports["closed-forms"], reports["product-comparison"] = _pairing_closed_forms(proj, D, mod)
        if require:
            core.require(reports["closed-forms"], "split closed forms")
    return YDSplit(mod, D, reports)


def _pairing_closed_forms(proj: Projection, D: AlgebraicStructure, mod: YDModule):
    from . import pairing as pairing_mod

    pr = proj.pairing
    A, H = pr.A, pr.H
    acts = pairing_mod.actions_from_pairing(pr)
    roles = {"A": A, "H": H}
    slots = {
        **pr.slots,
        "R": proj.qt.R,
        "i": proj.i,
        "phi": mod.phi,
        "phiA": acts.phiA,
        "rho": mod.rho,
        "s": D.lantipode,
        "m": D.mul,
    }
    closed = [laws.check_law(k, roles, slots) for k in ("yd-action-pairing", "yd-coaction-closed", "yd-antipode-closed", "yd-product-closed")]
    closed.append(laws.LawReport("split-unit", D.unit == A.unit, None if D.unit == A.unit else {"reason": "u differs from η_A"}))
    closed.append(laws.LawReport("split-counit", D.counit == A.counit, None if D.counit == A.counit else {"reason": "e differs from ε_A"}))
    closed.append(laws.LawReport("split-comult", D.comul == A.comul, None if D.comul == A.comul else {"reason": "Δ differs from δ_A"}))
    # reported, never assumed: does the split product coincide with μ_A?
    comparison = [laws.check_law("yd-product-original", roles, slots)]
    return closed, comparison


# ---------------------------------------------------------------------------
# biproduct and the comparison isomorphism


def biproduct(D: AlgebraicStructure, H: AlgebraicStructure, module: YDModule, name: str | None = None) -> AlgebraicStructure:
    """D⋊H with Γ = (μ_H⊗D)∘(H⊗c_{D,H})∘(ρ⊗H) and Ψ = (φ⊗H)∘(H⊗c_{H,D})∘(δ_H⊗D)."""
    roles = {"D": D, "H": H}
    slots = {"phi": module.phi, "rho": module.rho}
    where = (
        ("Gamma", "(mu_H @ D) * (H @ c(D,H)) * (rho @ H)"),
        ("Psi", "(phi @ H) * (H @ c(H,D)) * (delta_H @ D)"),
    )
    P = BasedSpace.product(D.space, H.space)
    mul = laws.build("(mu_D @ mu_H) * (D @ Psi @ H)", roles, slots, where).retyped((P, P), (P,))
    comul = laws.build("(D @ Gamma @ H) * (delta_D @ delta_H)", roles, slots, where).retyped((P,), (P, P))
    lam = laws.build("Psi * (lam_H @ lam_D) * Gamma", roles, slots, where).retyped((P,), (P,))
    unit = tensor(D.unit, H.unit).retyped((), (P,))
    counit = tensor(D.counit, H.counit).retyped((P,), ())
    idP = identity(P, D.field)
    X = AlgebraicStructure(
        name or f"{D.name}⋊{H.name}",
        P,
        mul,
        unit,
        comul,
        counit,
        ldiv=compose(mul, tensor(lam, idP)),
        rdiv=compose(mul, tensor(idP, lam)),
        lantipode=lam,
        rantipode=lam,
        provenance={"construction": "biproduct", "factors": [D.name, H.name]},
    )
    core.require(laws.verify_suite(X, "hqg"), "biproduct")
    core.classify(X)
    return X


@dataclass(eq=False)
class Isomorphism:
    forward: Morphism
    inverse: Morphism
    reports: list = field(default_factory=list)


def iso_w(proj: Projection, DH: AlgebraicStructure) -> Isomorphism:
    """w = μ_B∘(i⊗f): D⋊H -> B with inverse (p⊗g)∘δ_B."""
    roles = {"B": proj.B, "H": proj.H}
    s = proj.slots
    w = laws.build("mu_B * (i @ f)", roles, s).retyped((DH.space,), (proj.B.space,))
    winv = laws.build("(p @ g) * delta_B", roles, s).retyped((proj.B.space,), (DH.space,))
    slots = {"w": w, "winv": winv}
    reps = [laws.check_law("iso-right", {"B": proj.B}, slots), laws.check_law("iso-left", {"D": DH}, slots)]
    core.require(reps, "comparison map", NotIso)
    fwd = Morphism(DH, proj.B, w)
    reps += [laws.LawReport(f"w:{r.law}", r.passed, r.witness) for r in fwd.check("hqg-morphism")]
    if proj.pairing is not None:
        pr = proj.pairing
        reps.append(laws.check_law("iso-closed", {"A": pr.A, "H": pr.H}, {"w": w, "i": proj.i}))
    core.require(reps, "comparison map", NotIso)
    return Isomorphism(fwd, Morphism(proj.B, DH, winv), reps)
