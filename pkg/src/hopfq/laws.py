"""
The identity catalog and an exact checker.

Each law is a pair of string-diagram expressions over named slots:

* ``a * b`` is composition ``a∘b`` (right to left),
* ``a @ b`` is the tensor product (binds tighter than ``*``),
* ``c(X,Y)`` is the symmetry ``X⊗Y -> Y⊗X``,
* an object name such as ``H`` is its identity and ``K`` is ``id_K``.

A law names one or more *roles*.  Binding a role ``R`` to a structure
provides ``R`` (the object), ``mu_R``, ``eta_R``, ``delta_R``, ``eps_R``,
``l_R``, ``r_R``, ``lam_R`` and ``rlam_R`` (left/right division and
antipode) together with ``delta2_R``, ``mu2_R`` and ``delta3_R`` for the
tensor-square and tensor-cube structures.  Single-role laws may drop the
suffix.  Extra slots (cocycles, pairings, actions, ...) are passed by name.
"""

from __future__ import annotations

import re
from collections import ChainMap
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Mapping, Sequence

from .exactlin import (
    BasedSpace,
    LinMap,
    Q,
    ShapeMismatch,
    compose,
    identity,
    labels_of,
    permute,
    swap,
    tensor,
    unravel,
)


class MissingSlot(KeyError):
    pass


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# expression language

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(\S))")


def _tokenize(src: str) -> list[str]:
    out, pos = [], 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"cannot tokenize {src[pos:]!r}")
        out.append(m.group(1) or m.group(2))
        pos = m.end()
    return out


@lru_cache(maxsize=None)
def parse(src: str):
    toks = _tokenize(src)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(toks):
            raise ParseError(f"unexpected end of {src!r}")
        tok = toks[pos]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r} in {src!r}")
        pos += 1
        return tok

    def expr():
        parts = [term()]
        while peek() == "*":
            take()
            parts.append(term())
        return parts[0] if len(parts) == 1 else ("comp", tuple(parts))

    def term():
        parts = [atom()]
        while peek() == "@":
            take()
            parts.append(atom())
        return parts[0] if len(parts) == 1 else ("tens", tuple(parts))

    def atom():
        tok = take()
        if tok == "(":
            e = expr()
            take(")")
            return e
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", tok):
            raise ParseError(f"unexpected {tok!r} in {src!r}")
        if tok == "c" and peek() == "(":
            take("(")
            x = take()
            take(",")
            y = take()
            take(")")
            return ("swap", x, y)
        return ("name", tok)

    tree = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input {toks[pos:]} in {src!r}")
    return tree


def _lookup(ns: Mapping[str, Any], name: str):
    if name == "K" and "K" not in ns:
        return ()
    try:
        return ns[name]
    except KeyError:
        raise MissingSlot(name) from None


def _as_map(v, fld) -> LinMap:
    if isinstance(v, LinMap):
        return v
    if isinstance(v, BasedSpace):
        return identity(v, fld)
    if isinstance(v, (tuple, list)) and all(isinstance(s, BasedSpace) for s in v):
        return identity(tuple(v), fld)
    raise TypeError(f"slot value {v!r} is not a map or an object")


def _as_spaces(v) -> tuple[BasedSpace, ...]:
    if isinstance(v, BasedSpace):
        return (v,)
    if isinstance(v, (tuple, list)):
        return tuple(v)
    raise TypeError(f"{v!r} is not an object")


def evaluate(src: str, ns: Mapping[str, Any]) -> LinMap:
    """Elaborate an expression to a (lazy) LinMap."""
    fld = ns.get("__field__", Q)

    def ev(node):
        kind = node[0]
        if kind == "name":
            return _as_map(_lookup(ns, node[1]), fld)
        if kind == "swap":
            return swap(_as_spaces(_lookup(ns, node[1])), _as_spaces(_lookup(ns, node[2])), fld)
        if kind == "tens":
            return tensor(*(ev(n) for n in node[1]))
        return compose(*(ev(n) for n in node[1]))

    return ev(parse(src))


# ---------------------------------------------------------------------------
# binding structures to roles

_ATTRS = (
    ("mu", "mul"),
    ("eta", "unit"),
    ("delta", "comul"),
    ("eps", "counit"),
    ("l", "ldiv"),
    ("r", "rdiv"),
    ("lam", "lantipode"),
    ("rlam", "rantipode"),
)


def role_names(role: str, struct, plain: bool = False) -> dict[str, Any]:
    X = struct.space
    fld = struct.mul.field
    names: dict[str, Any] = {role: X}
    for short, attr in _ATTRS:
        v = getattr(struct, attr, None)
        if v is not None:
            names[f"{short}_{role}"] = v
    d, m = struct.comul, struct.mul
    mid = tensor(identity(X, fld), swap(X, X, fld), identity(X, fld))
    names[f"delta2_{role}"] = compose(mid, tensor(d, d))
    names[f"mu2_{role}"] = compose(tensor(m, m), mid)
    names[f"delta3_{role}"] = compose(permute((X,) * 6, (0, 2, 4, 1, 3, 5), fld), tensor(d, d, d))
    if plain:
        for k in list(names):
            if k.endswith("_" + role):
                names[k[: -len(role) - 1]] = names[k]
    return names


def namespace(roles: Mapping[str, Any], slots: Mapping[str, Any] | None = None) -> dict[str, Any]:
    ns: dict[str, Any] = {}
    plain = len(roles) == 1
    fld = Q
    for role, struct in roles.items():
        ns.update(role_names(role, struct, plain))
        fld = struct.mul.field
    ns["__field__"] = fld
    if slots:
        ns.update(slots)
    return ns


# ---------------------------------------------------------------------------
# laws and reports


@dataclass(frozen=True)
class Law:
    id: str
    lhs: str
    rhs: str
    roles: tuple[str, ...] = ("H",)
    where: tuple[tuple[str, str], ...] = ()
    doc: str = ""


@dataclass
class LawReport:
    law: str
    passed: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"law": self.law, "pass": self.passed, "witness": self.witness}

    def __bool__(self):
        return self.passed


def compare(law_id: str, lhs: LinMap, rhs: LinMap) -> LawReport:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return LawReport(law_id, True)
    i, j = diff
    fld = lhs.field
    return LawReport(
        law_id,
        False,
        {
            "input": labels_of(i, lhs.domain),
            "output": labels_of(j, lhs.codomain),
            "lhs": fld.format(lhs.col(i).get(j, fld.zero)),
            "rhs": fld.format(rhs.col(i).get(j, fld.zero)),
        },
    )


def elaborate(law: Law, ns: Mapping[str, Any]) -> tuple[LinMap, LinMap]:
    local = ChainMap({}, ns)
    for name, src in law.where:
        local[name] = evaluate(src, local)
    return evaluate(law.lhs, local), evaluate(law.rhs, local)


def check_law(
    law: Law | str,
    roles: Mapping[str, Any] | Any,
    slots: Mapping[str, Any] | None = None,
    rename: Mapping[str, str] | None = None,
) -> LawReport:
    """Evaluate one identity exactly.

    ``roles`` maps role names to structures (a bare structure binds the
    law's only role); ``rename`` maps the law's role and slot names to the
    keys used in ``roles``/``slots``.
    """
    law = LAWS[law] if isinstance(law, str) else law
    rename = dict(rename or {})
    if not isinstance(roles, Mapping):
        if len(law.roles) != 1:
            raise ValueError(f"{law.id} needs roles {law.roles}")
        roles = {rename.get(law.roles[0], law.roles[0]): roles}
    bound = {}
    for r in law.roles:
        key = rename.get(r, r)
        if key not in roles:
            raise MissingSlot(key)
        bound[r] = roles[key]
    slot_values = dict(slots or {})
    for k, v in rename.items():
        if k not in law.roles and v in slot_values:
            slot_values[k] = slot_values[v]
    ns = namespace(bound, slot_values)
    lhs, rhs = elaborate(law, ns)
    label = law.id if not rename or all(k == v for k, v in rename.items()) else (
        f"{law.id}[{','.join(f'{k}={v}' for k, v in sorted(rename.items()) if k != v)}]"
    )
    return compare(label, lhs, rhs)


# ---------------------------------------------------------------------------
# catalog

_CATALOG: list[Law] = []


def _law(id, lhs, rhs, roles=("H",), where=(), doc=""):
    _CATALOG.append(Law(id, lhs, rhs, tuple(roles), tuple(where), doc))


# unital magma and comonoid
_law("unit-left", "mu * (eta @ H)", "H")
_law("unit-right", "mu * (H @ eta)", "H")
_law("coassociativity", "(delta @ H) * delta", "(H @ delta) * delta")
_law("counit-left", "(eps @ H) * delta", "H")
_law("counit-right", "(H @ eps) * delta", "H")
# bimonoid compatibilities
_law("counit-unit", "eps * eta", "K")
_law("counit-mult", "eps * mu", "eps @ eps")
_law("comult-unit", "delta * eta", "eta @ eta")
_law("comult-mult", "delta * mu", "(mu @ mu) * delta2")
_law("associativity", "mu * (mu @ H)", "mu * (H @ mu)")
_law("cocommutativity", "c(H,H) * delta", "delta")
_law("commutativity", "mu * c(H,H)", "mu")

# divisions
_law("ldiv-cancel-outer", "l * (H @ mu) * (delta @ H)", "eps @ H")
_law("ldiv-cancel-inner", "mu * (H @ l) * (delta @ H)", "eps @ H")
_law("rdiv-cancel-outer", "r * (mu @ H) * (H @ delta)", "H @ eps")
_law("rdiv-cancel-inner", "mu * (r @ H) * (H @ delta)", "H @ eps")

# consequences of a division
_H_MAPS = (("h", "(H @ mu) * (delta @ H)"), ("hinv", "(H @ l) * (delta @ H)"))
_D_MAPS = (("d", "(mu @ H) * (H @ delta)"), ("dinv", "(r @ H) * (H @ delta)"))
_law("h-inverse-left", "hinv * h", "H @ H", where=_H_MAPS)
_law("h-inverse-right", "h * hinv", "H @ H", where=_H_MAPS)
_law("h-comult-intertwine", "(delta @ H) * hinv", "(H @ hinv) * (delta @ H)", where=_H_MAPS)
_law("hinv-comult", "hinv * delta", "H @ eta", where=_H_MAPS)
_law("hinv-mult", "mu * hinv", "eps @ H", where=_H_MAPS)
_law("d-inverse-left", "dinv * d", "H @ H", where=_D_MAPS)
_law("d-inverse-right", "d * dinv", "H @ H", where=_D_MAPS)
_law("dinv-comult", "dinv * delta", "eta @ H", where=_D_MAPS)
_law("dinv-mult", "mu * dinv", "H @ eps", where=_D_MAPS)
_law("ldiv-comult", "l * delta", "eps @ eta")
_law("rdiv-comult", "r * delta", "eps @ eta")
_law("id-conv-lam", "mu * (H @ lam) * delta", "eps @ eta")
_law("rlam-conv-id", "mu * (rlam @ H) * delta", "eps @ eta")
_law("ldiv-unit", "l * (eta @ H)", "H")
_law("rdiv-unit", "r * (H @ eta)", "H")
_law("counit-ldiv", "eps * l", "eps @ eps")
_law("counit-rdiv", "eps * r", "eps @ eps")
_law("counit-lam", "eps * lam", "eps")
_law("lam-unit", "lam * eta", "eta")
_law("counit-rlam", "eps * rlam", "eps")
_law("rlam-unit", "rlam * eta", "eta")
_law("ldiv-anticomult", "delta * l", "(l @ l) * (H @ c(H,H) @ H) * ((c(H,H) * delta) @ delta)")
_law("rdiv-anticomult", "delta * r", "(r @ r) * (H @ c(H,H) @ H) * (delta @ (c(H,H) * delta))")
_law("lam-anticomult", "delta * lam", "(lam @ lam) * c(H,H) * delta")
_law("rlam-anticomult", "delta * rlam", "(rlam @ rlam) * c(H,H) * delta")

# one-sided and two-sided Hopf quasigroups
_law("lhqg-outer", "mu * (lam @ mu) * (delta @ H)", "eps @ H")
_law("lhqg-inner", "mu * (H @ mu) * (H @ lam @ H) * (delta @ H)", "eps @ H")
_law("lam-conv-id", "mu * (lam @ H) * delta", "eps @ eta")
_law("ldiv-formula", "l", "mu * (lam @ H)")
_law("rhqg-inner", "mu * (mu @ H) * (H @ rlam @ H) * (H @ delta)", "H @ eps")
_law("rhqg-outer", "mu * (mu @ rlam) * (H @ delta)", "H @ eps")
_law("id-conv-rlam", "mu * (H @ rlam) * delta", "eps @ eta")
_law("rdiv-formula", "r", "mu * (H @ rlam)")
_law("antipodes-agree", "lam", "rlam")
_law("antipode-antimult", "lam * mu", "mu * (lam @ lam) * c(H,H)")

# morphisms X -> Y carried by the slot m
_XY = ("X", "Y")
_law("morphism-unit", "m * eta_X", "eta_Y", _XY)
_law("morphism-mult", "m * mu_X", "mu_Y * (m @ m)", _XY)
_law("morphism-counit", "eps_Y * m", "eps_X", _XY)
_law("morphism-comult", "delta_Y * m", "(m @ m) * delta_X", _XY)
_law("morphism-antipode", "lam_Y * m", "m * lam_X", _XY)

# two-cocycles sigma (with convolution inverse sigma_inv)
_law("sigma-inverse-right", "(sigma @ sigma_inv) * delta2", "eps @ eps")
_law("sigma-inverse-left", "(sigma_inv @ sigma) * delta2", "eps @ eps")
_law("cocycle", "((eps @ sigma) @ (sigma * (H @ mu))) * delta3", "((sigma @ eps) @ (sigma * (mu @ H))) * delta3")
_law("cocycle-nested", "sigma * (H @ ((sigma @ mu) * delta2))", "sigma * (((sigma @ mu) * delta2) @ H)")
_law(
    "cocycle-unit-slice-left",
    "((sigma * (eta @ H)) @ (sigma * (eta @ H))) * delta",
    "(sigma * (eta @ eta)) @ (sigma * (eta @ H))",
)
_law(
    "cocycle-unit-slice-right",
    "((sigma * (H @ eta)) @ (sigma * (H @ eta))) * delta",
    "(sigma * (H @ eta)) @ (sigma * (eta @ eta))",
)
_law("normal-left", "sigma * (eta @ H)", "eps")
_law("normal-right", "sigma * (H @ eta)", "eps")
_law(
    "cocycle-inverse-mixed-1",
    "((sigma * (H @ mu)) @ (sigma_inv * (mu @ H))) * delta3",
    "((eps @ sigma_inv) @ (sigma @ eps)) * delta3",
)
_law(
    "cocycle-inverse-mixed-2",
    "((sigma_inv @ eps) @ (eps @ sigma)) * delta3",
    "((sigma * (mu @ H)) @ (sigma_inv * (H @ mu))) * delta3",
)
_law(
    "cocycle-inverse",
    "((sigma_inv * (H @ mu)) @ (eps @ sigma_inv)) * delta3",
    "((sigma_inv * (mu @ H)) @ (sigma_inv @ eps)) * delta3",
)
_law(
    "cocycle-inverse-nested",
    "sigma_inv * (H @ ((mu @ sigma_inv) * delta2))",
    "sigma_inv * (((mu @ sigma_inv) * delta2) @ H)",
)

# deformation H -> S = H^sigma with auxiliary functionals f, finv (left) and g, ginv (right)
_HS = ("H", "S")
_law("aux-f-inverse-right", "(f @ finv) * delta_H", "eps_H", _HS)
_law("aux-f-inverse-left", "(finv @ f) * delta_H", "eps_H", _HS)
_law("aux-f-unit", "f * eta_H", "K", _HS)
_law("aux-finv-unit", "finv * eta_H", "K", _HS)
_law("aux-g-inverse-right", "(g @ ginv) * delta_H", "eps_H", _HS)
_law("aux-g-inverse-left", "(ginv @ g) * delta_H", "eps_H", _HS)
_law("aux-g-unit", "g * eta_H", "K", _HS)
_law("aux-ginv-unit", "ginv * eta_H", "K", _HS)
_law("deformed-ldiv-antipode", "l_S * (H @ eta_H)", "(f @ lam_H @ finv) * (delta_H @ H) * delta_H", _HS)
_law("deformed-ldiv-factor", "l_S", "mu_S * ((l_S * (S @ eta_S)) @ S)", _HS)
_law("deformed-ldiv-shift", "(finv @ l_S) * (delta_H @ H)", "mu_S * (((lam_H @ finv) * delta_H) @ H)", _HS)
_law("deformed-ldiv-cocommutative", "l_S * (H @ eta_H)", "lam_H", _HS)
_law("deformed-rdiv-antipode", "r_S * (eta_H @ H)", "(ginv @ rlam_H @ g) * (delta_H @ H) * delta_H", _HS)
_law("deformed-rdiv-factor", "r_S", "mu_S * (S @ (r_S * (eta_S @ S)))", _HS)
_law("deformed-rdiv-shift", "(r_S @ ginv) * (H @ delta_H)", "mu_S * (H @ ((ginv @ rlam_H) * delta_H))", _HS)
_law("deformed-rdiv-cocommutative", "r_S * (eta_H @ H)", "rlam_H", _HS)

# pairings tau: A⊗H -> K
_AH = ("A", "H")
_DAH = (("deltaAH", "(A @ c(A,H) @ H) * (delta_A @ delta_H)"),)
_law("pairing-mult-left", "tau * (mu_A @ H)", "(tau @ tau) * (A @ c(A,H) @ H) * (A @ A @ delta_H)", _AH)
_law("pairing-mult-right", "tau * (A @ mu_H)", "(tau @ tau) * (A @ c(A,H) @ H) * (delta_A @ H @ H)", _AH)
_law(
    "skew-mult-right",
    "tau * (A @ mu_H)",
    "(tau @ tau) * (A @ c(A,H) @ H) * ((c(A,A) * delta_A) @ H @ H)",
    _AH,
)
_law("skew-mult-right-swapped", "tau * (A @ mu_H)", "(tau @ tau) * (A @ c(A,H) @ H) * (delta_A @ c(H,H))", _AH)
_law("pairing-unit-right", "tau * (A @ eta_H)", "eps_A", _AH)
_law("pairing-unit-left", "tau * (eta_A @ H)", "eps_H", _AH)
_law("tau-inverse-right", "(tau @ tau_inv) * deltaAH", "eps_A @ eps_H", _AH, _DAH)
_law("tau-inverse-left", "(tau_inv @ tau) * deltaAH", "eps_A @ eps_H", _AH, _DAH)
_law("tau-inv-unit-left", "tau_inv * (eta_A @ H)", "eps_H", _AH)
_law("tau-inv-unit-right", "tau_inv * (A @ eta_H)", "eps_A", _AH)
_law("tau-inv-mult-right", "tau_inv * (A @ mu_H)", "(tau_inv @ tau_inv) * (A @ c(A,H) @ H) * (delta_A @ H @ H)", _AH)
_law(
    "tau-inv-mult-left",
    "tau_inv * (mu_A @ H)",
    "(tau_inv @ tau_inv) * (A @ c(A,H) @ H) * (A @ A @ (c(H,H) * delta_H))",
    _AH,
)
_law("tau-antipodes", "tau", "tau * (lam_A @ lam_H)", _AH)
_law("tau-inv-antipodes", "tau_inv", "tau_inv * (lam_A @ lam_H)", _AH)
_law("tau-right-antipode", "tau", "tau_inv * (A @ lam_H)", _AH)
_law("tau-inverse-by-antipode", "tau_inv", "tau * (lam_A @ H)", _AH)
_law("tau-inverse-by-right-antipode", "tau_inv", "tau * (rlam_A @ H)", _AH)

# left H-(quasi)modules (M, phi) and module magmas/comonoids
_HM = ("H", "M")
_law("action-unit", "phi * (eta_H @ M)", "M", _HM)
_law("quasimodule-inner", "phi * (H @ phi) * (((H @ lam_H) * delta_H) @ M)", "eps_H @ M", _HM)
_law("quasimodule-outer", "phi * (lam_H @ phi) * (delta_H @ M)", "eps_H @ M", _HM)
_law("module-assoc", "phi * (H @ phi)", "phi * (mu_H @ M)", _HM)
_law("module-magma-unit", "phi * (H @ eta_M)", "eps_H @ eta_M", _HM)
_law("module-magma-mult", "mu_M * (phi @ phi) * (H @ c(H,M) @ M) * (delta_H @ M @ M)", "phi * (H @ mu_M)", _HM)
_law("module-comonoid-counit", "eps_M * phi", "eps_H @ eps_M", _HM)
_law("module-comonoid-comult", "delta_M * phi", "(phi @ phi) * (H @ c(H,M) @ M) * (delta_H @ delta_M)", _HM)

# right A-modules (M, phi: M⊗A -> M)
_MA = ("M", "A")
_law("raction-unit", "phi * (M @ eta_A)", "M", _MA)
_law("rmodule-assoc", "phi * (phi @ A)", "phi * (M @ mu_A)", _MA)
_law("rmodule-comonoid-counit", "eps_M * phi", "eps_M @ eps_A", _MA)
_law("rmodule-comonoid-comult", "delta_M * phi", "(phi @ phi) * (M @ c(M,A) @ A) * (delta_M @ delta_A)", _MA)

# left H-comodules (M, rho: M -> H⊗M)
_law("coaction-counit", "(eps_H @ M) * rho", "M", _HM)
_law("coaction-coassoc", "(H @ rho) * rho", "(delta_H @ M) * rho", _HM)
_law("comodule-magma-unit", "rho * eta_M", "eta_H @ eta_M", _HM)
_law("comodule-magma-mult", "rho * mu_M", "(H @ mu_M) * (mu_H @ M @ M) * (H @ c(M,H) @ M) * (rho @ rho)", _HM)
_law("comodule-comonoid-counit", "(H @ eps_M) * rho", "eta_H @ eps_M", _HM)
_law(
    "comodule-comonoid-comult",
    "(H @ delta_M) * rho",
    "(mu_H @ M @ M) * (H @ c(M,H) @ M) * (rho @ rho) * delta_M",
    _HM,
)

# Yetter-Drinfeld compatibilities
_law(
    "yd-compat",
    "(mu_H @ M) * (H @ c(M,H)) * ((rho * phi) @ H) * (H @ c(H,M)) * (delta_H @ M)",
    "(mu_H @ phi) * (H @ c(H,H) @ M) * (delta_H @ rho)",
    _HM,
)
_law(
    "yd-assoc-right",
    "(mu_H @ M) * (H @ c(M,H)) * (rho @ mu_H)",
    "(mu_H @ M) * (mu_H @ c(M,H)) * (H @ c(M,H) @ H) * (rho @ H @ H)",
    _HM,
)
_law(
    "yd-assoc-middle",
    "(mu_H @ M) * (H @ mu_H @ M) * (H @ H @ c(M,H)) * (H @ rho @ H)",
    "(mu_H @ M) * (mu_H @ c(M,H)) * (H @ rho @ H)",
    _HM,
)
_law(
    "braided-comult-mult",
    "delta_M * mu_M",
    "(mu_M @ mu_M) * (M @ t @ M) * (delta_M @ delta_M)",
    _HM,
    (("t", "(phi @ M) * (H @ c(M,M)) * (rho @ M)"),),
)

# double crossproduct conditions for actions phiA: H⊗A -> A, phiH: H⊗A -> H
_DHA = (("deltaHA", "(H @ c(H,A) @ A) * (delta_H @ delta_A)"),)
_LAMB = _DHA + (("lamB", "(phiA @ phiH) * deltaHA * (lam_H @ lam_A) * c(A,H)"),)
_RLAMB = _DHA + (("rlamB", "(phiA @ phiH) * deltaHA * (rlam_H @ rlam_A) * c(A,H)"),)
_law("majid-unit-left", "phiA * (H @ eta_A)", "eps_H @ eta_A", _AH)
_law("majid-unit-right", "phiH * (eta_H @ A)", "eta_H @ eps_A", _AH)
_law("majid-compatible", "(phiH @ phiA) * deltaHA", "c(A,H) * (phiA @ phiH) * deltaHA", _AH, _DHA)
_law(
    "majid-mult",
    "phiA * (H @ mu_A) * (lam_H @ lam_A @ A)",
    "mu_A * (A @ phiA) * ((lamB * c(H,A)) @ A)",
    _AH,
    _LAMB,
)
_law(
    "majid-quasigroup-outer",
    "mu_H * (phiH @ mu_H) * (lam_H @ ((phiA @ phiH) * deltaHA) @ H) * (delta_H @ A @ H)",
    "eps_H @ eps_A @ H",
    _AH,
    _DHA,
)
_law(
    "majid-quasigroup-inner",
    "mu_H * (phiH @ mu_H) * (H @ ((phiA @ phiH) * deltaHA) @ H) * (((H @ lam_H) * delta_H) @ A @ H)",
    "eps_H @ eps_A @ H",
    _AH,
    _DHA,
)
_law(
    "majid-mult-r",
    "phiH * (mu_H @ A) * (H @ rlam_H @ rlam_A)",
    "mu_H * (phiH @ H) * (H @ (rlamB * c(H,A)))",
    _AH,
    _RLAMB,
)
_law(
    "majid-quasigroup-outer-r",
    "mu_A * (mu_A @ phiA) * (A @ ((phiA @ phiH) * deltaHA) @ rlam_A) * (A @ H @ delta_A)",
    "A @ eps_H @ eps_A",
    _AH,
    _DHA,
)
_law(
    "majid-quasigroup-inner-r",
    "mu_A * (mu_A @ phiA) * (A @ ((phiA @ phiH) * deltaHA) @ A) * (A @ H @ ((rlam_A @ A) * delta_A))",
    "A @ eps_H @ eps_A",
    _AH,
    _DHA,
)

# quasitriangular structures R: K -> H⊗H
_ST = (("S", "(lam @ H) * R"), ("T", "(lam @ lam) * R"))
_law("qt-comult-left", "(delta @ H) * R", "(H @ H @ mu) * (H @ c(H,H) @ H) * (R @ R)")
_law("qt-comult-right", "(H @ delta) * R", "(mu @ c(H,H)) * (H @ c(H,H) @ H) * (R @ R)")
_law("qt-twist", "mu2 * ((c(H,H) * delta) @ R)", "mu2 * (R @ delta)")
_law("qt-counit-left", "(eps @ H) * R", "eta")
_law("qt-counit-right", "(H @ eps) * R", "eta")
_law("qt-inverse-right", "mu2 * (R @ S)", "eta @ eta", where=_ST)
_law("qt-inverse-left", "mu2 * (S @ R)", "eta @ eta", where=_ST)
_law("qt-antipode-inverse-right", "mu2 * (S @ T)", "eta @ eta", where=_ST)
_law("qt-antipode-inverse-left", "mu2 * (T @ S)", "eta @ eta", where=_ST)
_law(
    "qt-hexagon",
    "(mu @ H @ (mu * c(H,H))) * (H @ H @ (c(H,H) * (H @ mu)) @ H) * (H @ c(H,H) @ c(H,H) @ H) * (R @ R @ R)",
    "(mu @ mu @ mu) * (H @ c(H,H) @ c(H,H) @ H) * (R @ R @ R)",
)

# projections (B, f: H -> B, g: B -> H) with splitting p: B -> Z, i: Z -> B
_BH = ("B", "H")
_Q = (("q", "mu_B * (B @ (f * lam_H * g)) * delta_B"),)
_law("proj-retraction", "g * f", "H", _BH)
_law("proj-q-idempotent", "q * q", "q", _BH, _Q)
_law("proj-q-mult", "q * mu_B * (B @ q)", "q * mu_B", _BH, _Q)
_law("proj-split", "i * p", "q", _BH, _Q)
_law("proj-split-retraction", "p * i", "Z", _BH)
for _k, _x in (("1", "i @ f @ i"), ("2", "f @ i @ i"), ("3", "f @ f @ i")):
    _law(f"strong-{_k}", f"p * mu_B * (B @ mu_B) * ({_x})", f"p * mu_B * (mu_B @ B) * ({_x})", _BH)
    _law(f"strong-{_k}-q", f"q * mu_B * (B @ mu_B) * ({_x})", f"q * mu_B * (mu_B @ B) * ({_x})", _BH, _Q)

# projections built from a pairing and a quasitriangular structure
_G = (("g", "(tau @ mu_H) * (A @ R @ H)"),)
_law("rt-left", "mu_H * (g @ H)", "g * (A @ mu_H)", _AH, _G)
_law("rt-right", "mu_H * (H @ g)", "mu_H * (mu_H @ H) * (H @ ((tau @ H) * (A @ R)) @ H)", _AH, _G)
_law("proj-g-closed", "gB", "(tau @ mu_H) * (A @ R @ H)", _AH)
_law("proj-q-closed", "q", "(A @ tau @ lam_H) * (delta_A @ R @ eps_H)", _AH)
_law("proj-i-closed", "i", "(A @ tau @ lam_H) * (delta_A @ R)", _AH)
_law(
    "yd-coaction-closed",
    "rho",
    "(tau @ c(A,H)) * (A @ c(A,H) @ mu_H) * (delta_A @ (R * tau) @ lam_H) * (delta_A @ R)",
    _AH,
)
_law("yd-action-pairing", "phi", "phiA", _AH)
_law("yd-antipode-closed", "s", "(tau @ phiA) * (A @ R @ lam_A) * delta_A", _AH)
_law("yd-product-closed", "m", "mu_A * (A @ phiA) * (i @ A)", _AH)
_law("yd-product-original", "m", "mu_A", _AH)
_law("iso-closed", "w", "(A @ mu_H) * (i @ H)", _AH)
_law("iso-right", "w * winv", "B", ("B",))
_law("iso-left", "winv * w", "D", ("D",))

LAWS: dict[str, Law] = {law.id: law for law in _CATALOG}
if len(LAWS) != len(_CATALOG):
    raise RuntimeError("duplicate law ids in catalog")


# ---------------------------------------------------------------------------
# suites

SuiteEntry = tuple[str, dict]


def _e(ids: str, **rename) -> list[SuiteEntry]:
    return [(i, dict(rename)) for i in ids.split()]


_BIMONOID = _e("unit-left unit-right coassociativity counit-left counit-right counit-unit counit-mult comult-unit comult-mult")
_LDIV = _e("ldiv-cancel-outer ldiv-cancel-inner")
_RDIV = _e("rdiv-cancel-outer rdiv-cancel-inner")
_LHQG = _e("lhqg-outer lhqg-inner lam-conv-id ldiv-formula")
_RHQG = _e("rhqg-inner rhqg-outer id-conv-rlam rdiv-formula")

SUITES: dict[str, list[SuiteEntry]] = {
    "bimonoid": _BIMONOID,
    "left-division": _BIMONOID + _LDIV,
    "right-division": _BIMONOID + _RDIV,
    "left-division-derived": _e(
        "h-inverse-left h-inverse-right h-comult-intertwine hinv-comult hinv-mult ldiv-comult id-conv-lam "
        "ldiv-unit counit-ldiv counit-lam lam-unit ldiv-anticomult lam-anticomult"
    ),
    "right-division-derived": _e(
        "d-inverse-left d-inverse-right dinv-comult dinv-mult rdiv-comult rlam-conv-id "
        "rdiv-unit counit-rdiv counit-rlam rlam-unit rdiv-anticomult rlam-anticomult"
    ),
    "left-hqg": _BIMONOID + _LDIV + _LHQG,
    "right-hqg": _BIMONOID + _RDIV + _RHQG,
    "hqg": _BIMONOID + _LDIV + _RDIV + _LHQG + _RHQG + _e("antipodes-agree antipode-antimult"),
    "hopf-algebra": _BIMONOID + _e("associativity lam-conv-id id-conv-lam"),
    "cocycle": _e(
        "sigma-inverse-right sigma-inverse-left cocycle normal-left normal-right"
    ),
    "cocycle-consequences": _e(
        "cocycle-nested cocycle-unit-slice-left cocycle-unit-slice-right cocycle-inverse-mixed-1 "
        "cocycle-inverse-mixed-2 cocycle-inverse cocycle-inverse-nested"
    ),
    "skew-pairing": _e(
        "pairing-mult-left skew-mult-right skew-mult-right-swapped pairing-unit-right pairing-unit-left "
        "tau-inverse-right tau-inverse-left tau-inv-unit-left tau-inv-unit-right tau-inv-mult-right"
    ),
    "skew-pairing-consequences": _e(
        "tau-inv-mult-left tau-antipodes tau-inv-antipodes tau-right-antipode tau-inverse-by-antipode"
    ),
    "quasitriangular": _e(
        "qt-comult-left qt-comult-right qt-twist qt-counit-left qt-counit-right qt-inverse-right "
        "qt-inverse-left qt-antipode-inverse-right qt-antipode-inverse-left qt-hexagon"
    ),
    "left-module-comonoid": _e("action-unit module-assoc module-comonoid-counit module-comonoid-comult"),
    "right-module-comonoid": _e("raction-unit rmodule-assoc rmodule-comonoid-counit rmodule-comonoid-comult"),
    "yd-module": _e(
        "action-unit quasimodule-inner quasimodule-outer module-assoc coaction-counit coaction-coassoc "
        "yd-compat yd-assoc-right yd-assoc-middle"
    ),
    "majid-left": _e(
        "majid-unit-left majid-unit-right majid-compatible majid-mult majid-quasigroup-outer majid-quasigroup-inner"
    ),
    "majid-right": _e(
        "majid-unit-left majid-unit-right majid-compatible majid-mult-r majid-quasigroup-outer-r "
        "majid-quasigroup-inner-r"
    ),
    "strong-projection": _e(
        "proj-retraction proj-q-idempotent proj-q-mult proj-split proj-split-retraction "
        "strong-1 strong-2 strong-3 strong-1-q strong-2-q strong-3-q"
    ),
    "unital-magma-morphism": _e("morphism-unit morphism-mult"),
    "comonoid-morphism": _e("morphism-counit morphism-comult"),
    "hqg-morphism": _e("morphism-unit morphism-mult morphism-counit morphism-comult morphism-antipode"),
}
SUITES["majid-conditions"] = SUITES["majid-left"] + [e for e in SUITES["majid-right"] if e not in SUITES["majid-left"]]
_D = {"H": "D"}
_MD = {"M": "D"}
SUITES["braided-hqg"] = (
    # YD module
    _e("action-unit quasimodule-inner quasimodule-outer module-assoc coaction-counit coaction-coassoc "
       "yd-compat yd-assoc-right yd-assoc-middle", **_MD)
    # unital magma in YD
    + _e("unit-left unit-right", **_D)
    + _e("module-magma-unit module-magma-mult comodule-magma-unit comodule-magma-mult", **_MD)
    # comonoid in YD
    + _e("coassociativity counit-left counit-right", **_D)
    + _e("module-comonoid-counit module-comonoid-comult comodule-comonoid-counit comodule-comonoid-comult", **_MD)
    # braided bimonoid
    + _e("counit-unit counit-mult comult-unit", **_D)
    + _e("braided-comult-mult", **_MD)
    # antipode
    + _e("lhqg-outer lhqg-inner rhqg-inner rhqg-outer", **_D)
)

# suites whose success is recorded on the structure they certify
CLASS_SUITES = {
    "bimonoid", "left-division", "right-division", "left-hqg", "right-hqg", "hqg", "hopf-algebra",
    "braided-hqg", "yd-module", "quasitriangular", "strong-projection",
}

PRIMARY_ROLE = {
    "majid-left": "A",
    "majid-right": "A",
    "majid-conditions": "A",
    "strong-projection": "B",
    "braided-hqg": "D",
    "yd-module": "M",
    "left-module-comonoid": "M",
    "right-module-comonoid": "M",
    "skew-pairing": "A",
    "skew-pairing-consequences": "A",
}


def suite_laws(suite: str) -> list[SuiteEntry]:
    try:
        return SUITES[suite]
    except KeyError:
        raise KeyError(f"unknown suite {suite!r}; known: {', '.join(sorted(SUITES))}") from None


def verify_suite(
    target: Any,
    suite: str,
    slots: Mapping[str, Any] | None = None,
    *,
    stop_on_failure: bool = False,
) -> list[LawReport]:
    """Run a named suite; on full success the suite name is recorded on the primary structure."""
    entries = suite_laws(suite)
    roles = target if isinstance(target, Mapping) else {"H": target}
    reports = []
    for law_id, rename in entries:
        law = LAWS[law_id]
        if not isinstance(target, Mapping) and len(law.roles) == 1:
            rep = check_law(law, {law.roles[0]: target}, slots)
        else:
            rep = check_law(law, roles, slots, rename)
        reports.append(rep)
        if stop_on_failure and not rep.passed:
            break
    if suite in CLASS_SUITES and reports and all(r.passed for r in reports):
        primary = roles.get(PRIMARY_ROLE.get(suite, "H")) if isinstance(roles, Mapping) else None
        if primary is not None and hasattr(primary, "verified"):
            primary.verified.add(suite)
    return reports


def all_pass(reports: Iterable[LawReport]) -> bool:
    return all(r.passed for r in reports)


def first_failure(reports: Iterable[LawReport]) -> LawReport | None:
    return next((r for r in reports if not r.passed), None)


def reports_json(reports: Iterable[LawReport]) -> list[dict]:
    return [r.to_json() for r in reports]


def build(src: str, roles: Mapping[str, Any] | Any, slots: Mapping[str, Any] | None = None, where=()) -> LinMap:
    """Evaluate an expression against bound structures and materialize it."""
    if not isinstance(roles, Mapping):
        roles = {"H": roles}
    local = ChainMap({}, namespace(roles, slots))
    for name, expr in where:
        local[name] = evaluate(expr, local)
    return evaluate(src, local).materialize()
