"""
Two-cocycles on a bimonoid and the deformed product

    μ_σ = (σ⊗μ⊗σ⁻¹)∘(H⊗H⊗δ_{H⊗H})∘δ_{H⊗H},

together with the auxiliary functionals f, g and the deformed divisions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import core, laws
from .core import AlgebraicStructure, LawFails
from .exactlin import LinMap, compose, scale, tensor


class NotInvertible(core.NotConvInvertible):
    pass


class NotACocycle(LawFails):
    pass


class NotNormal(LawFails):
    pass


class PrecursorLawFails(LawFails):
    pass


@dataclass(eq=False)
class TwoCocycle:
    base: AlgebraicStructure
    sigma: LinMap
    sigma_inv: LinMap
    reports: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)

    @property
    def slots(self) -> dict:
        return {"sigma": self.sigma, "sigma_inv": self.sigma_inv}


def _as_functional(H: AlgebraicStructure, sigma: LinMap) -> LinMap:
    X = H.space
    return sigma.retyped((X, X), ()).materialize()


def _inverse(H: AlgebraicStructure, sigma: LinMap) -> LinMap:
    try:
        inv = core.convolution_inverse(sigma, [H, H], None)
    except (core.NotConvInvertible, core.OneSidedOnly) as exc:
        raise NotInvertible(f"σ is not convolution invertible: {exc}") from None
    return inv.retyped(sigma.domain, ()).materialize()


def make_cocycle(
    H: AlgebraicStructure,
    sigma: LinMap,
    auto_normalize: bool = False,
    sigma_inv: LinMap | None = None,
) -> TwoCocycle:
    """Validate σ; a non-normal σ is rescaled by σ⁻¹(1⊗1) when ``auto_normalize`` is set."""
    sigma = _as_functional(H, sigma)
    inv = _inverse(H, sigma) if sigma_inv is None else _as_functional(H, sigma_inv)
    prov: dict = {}
    slots = {"sigma": sigma, "sigma_inv": inv}
    reps = laws.verify_suite(H, "cocycle", slots)
    by_id = {r.law: r for r in reps}
    for i in ("sigma-inverse-right", "sigma-inverse-left"):
        if not by_id[i].passed:
            raise NotInvertible(f"given σ⁻¹ is not a convolution inverse: {by_id[i].witness}")
    core.require([by_id["cocycle"]], "two-cocycle", NotACocycle)
    normal = [by_id["normal-left"], by_id["normal-right"]]
    if not laws.all_pass(normal):
        if not auto_normalize:
            raise NotNormal(laws.first_failure(normal), "two-cocycle")
        # both sides of the cocycle identity are quadratic in σ, so rescaling keeps it
        unit2 = tensor(H.unit, H.unit)
        c_inv = compose(inv, unit2).col(0).get(0, 0)
        c = compose(sigma, unit2).col(0).get(0, 0)
        prov["original_sigma"] = sigma
        sigma, inv = scale(sigma, c_inv), scale(inv, c)
        slots = {"sigma": sigma, "sigma_inv": inv}
        redo = [laws.check_law(i, H, slots) for i in ("sigma-inverse-right", "sigma-inverse-left", "normal-left", "normal-right")]
        core.require(redo, "normalized two-cocycle", NotNormal)
        reps = [by_id["cocycle"]] + redo
    cyc = TwoCocycle(H, sigma, inv, reports=reps, provenance=prov)
    return cyc


def trivial_cocycle(H: AlgebraicStructure) -> TwoCocycle:
    e = tensor(H.counit, H.counit)
    return make_cocycle(H, e, sigma_inv=e)


def cocycle_consequences(cyc: TwoCocycle) -> list[laws.LawReport]:
    return laws.verify_suite(cyc.base, "cocycle-consequences", cyc.slots)


# ---------------------------------------------------------------------------
# deformation

_MU_SIGMA = "(sigma @ mu @ sigma_inv) * (H @ H @ delta2) * delta2"
_L_SIGMA = "mu_S * (f @ lam_H @ finv @ H) * (H @ delta_H @ H) * (delta_H @ H)"
_R_SIGMA = "mu_S * (H @ ginv @ rlam_H @ g) * (H @ delta_H @ H) * (H @ delta_H)"


def deformed_product(H: AlgebraicStructure, cyc: TwoCocycle) -> LinMap:
    return laws.build(_MU_SIGMA, H, cyc.slots)


def aux_functionals(H: AlgebraicStructure, cyc: TwoCocycle) -> dict[str, LinMap]:
    """f, f⁻¹ (needs λ) and g, g⁻¹ (needs ϱ), whichever are available."""
    out = {}
    if H.lantipode is not None:
        out["f"] = laws.build("sigma * (H @ lam) * delta", H, cyc.slots)
        out["finv"] = laws.build("sigma_inv * (lam @ H) * delta", H, cyc.slots)
    if H.rantipode is not None:
        out["g"] = laws.build("sigma_inv * (rlam @ H) * delta", H, cyc.slots)
        out["ginv"] = laws.build("sigma * (H @ rlam) * delta", H, cyc.slots)
    return out


def deform(H: AlgebraicStructure, cyc: TwoCocycle, name: str | None = None, strict: bool = True) -> AlgebraicStructure:
    """H^σ: same unit, counit and comultiplication with the twisted product.

    Divisions and antipodes are carried over through the deformed-division
    formulas when the precursor identity λ∗id = ε⊗η (resp. id∗ϱ = ε⊗η)
    holds; with ``strict`` a missing precursor on a present antipode raises.
    """
    if cyc.base is not H and cyc.base.space != H.space:
        raise ValueError("cocycle lives on a different structure")
    mu_s = deformed_product(H, cyc)
    S = H.with_(name=name or f"{H.name}^σ", mul=mu_s, ldiv=None, rdiv=None, lantipode=None, rantipode=None)
    S.provenance = {"construction": "deformation", "base": H.name}
    aux = aux_functionals(H, cyc)
    opts = {}
    for side, precursor, keys in (
        ("left", "lam-conv-id", ("f", "finv")),
        ("right", "id-conv-rlam", ("g", "ginv")),
    ):
        if keys[0] not in aux:
            continue
        rep = laws.check_law(precursor, H)
        if not rep.passed:
            if strict:
                raise PrecursorLawFails(rep, f"{side} deformed division")
            continue
        slots = dict(aux)
        if side == "left":
            ldiv = laws.build(_L_SIGMA, {"H": H, "S": S}, slots)
            opts["ldiv"] = ldiv
            opts["lantipode"] = compose(ldiv, tensor(H.id(), H.unit))
        else:
            rdiv = laws.build(_R_SIGMA, {"H": H, "S": S}, slots)
            opts["rdiv"] = rdiv
            opts["rantipode"] = compose(rdiv, tensor(H.unit, H.id()))
    out = S.with_(**opts)
    out.provenance = dict(S.provenance)
    out.provenance["aux"] = sorted(aux)
    core.classify(out)
    return out


def deformation_reports(H: AlgebraicStructure, S: AlgebraicStructure, cyc: TwoCocycle) -> list[laws.LawReport]:
    """Identities tying H, H^σ and the auxiliary functionals together."""
    aux = aux_functionals(H, cyc)
    roles = {"H": H, "S": S}
    ids = []
    if "f" in aux and S.ldiv is not None:
        ids += ["aux-f-inverse-right", "aux-f-inverse-left", "aux-f-unit", "aux-finv-unit",
                "deformed-ldiv-antipode", "deformed-ldiv-factor", "deformed-ldiv-shift"]
    if "g" in aux and S.rdiv is not None:
        ids += ["aux-g-inverse-right", "aux-g-inverse-left", "aux-g-unit", "aux-ginv-unit",
                "deformed-rdiv-antipode", "deformed-rdiv-factor", "deformed-rdiv-shift"]
    cocom = laws.check_law("cocommutativity", H).passed
    if cocom:
        ids += [i for i, k in (("deformed-ldiv-cocommutative", "f"), ("deformed-rdiv-cocommutative", "g")) if k in aux]
    reps = [laws.check_law(i, roles, aux) for i in ids]
    reps += [laws.check_law(i, S) for i in ("counit-mult", "comult-mult")]
    if S.ldiv is not None:
        reps += [laws.check_law(i, S) for i in ("ldiv-unit", "ldiv-anticomult")]
    if S.rdiv is not None:
        reps += [laws.check_law(i, S) for i in ("rdiv-unit", "rdiv-anticomult")]
    return reps
