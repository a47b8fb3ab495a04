"""
Structure records, the convolution algebra, and divisions/antipodes derived
from a bimonoid by inverting ``h = (H⊗μ)∘(δ⊗H)`` or ``d = (μ⊗H)∘(H⊗δ)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

from . import laws
from .exactlin import (
    BasedSpace,
    LinMap,
    NoSolution,
    NotInvertible,
    Q,
    ShapeMismatch,
    atoms,
    compose,
    identity,
    invert,
    shape_str,
    size,
    solve_right,
    swap,
    tensor,
)


class NoDivision(ArithmeticError):
    pass


class NotConvInvertible(ArithmeticError):
    pass


class OneSidedOnly(ArithmeticError):
    def __init__(self, msg, partial_inverse: LinMap):
        super().__init__(msg)
        self.partial_inverse = partial_inverse


class LawFails(ValueError):
    """A required identity failed; ``report`` carries the witness."""

    def __init__(self, report: laws.LawReport, context: str = ""):
        head = f"{context}: " if context else ""
        super().__init__(f"{head}law {report.law} fails at {report.witness}")
        self.report = report


@dataclass(eq=False)
class AlgebraicStructure:
    name: str
    space: BasedSpace
    mul: LinMap
    unit: LinMap
    comul: LinMap
    counit: LinMap
    ldiv: LinMap | None = None
    rdiv: LinMap | None = None
    lantipode: LinMap | None = None
    rantipode: LinMap | None = None
    verified: set = field(default_factory=set)
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        X = self.space
        want = {
            "mul": ((X, X), (X,)),
            "unit": ((), (X,)),
            "comul": ((X,), (X, X)),
            "counit": ((X,), ()),
            "ldiv": ((X, X), (X,)),
            "rdiv": ((X, X), (X,)),
            "lantipode": ((X,), (X,)),
            "rantipode": ((X,), (X,)),
        }
        for attr, (dom, cod) in want.items():
            m = getattr(self, attr)
            if m is None:
                continue
            if atoms(m.domain) != atoms(dom) or atoms(m.codomain) != atoms(cod):
                raise ShapeMismatch(f"{self.name}.{attr} has shape {shape_str(m)}")
            if tuple(m.domain) != dom or tuple(m.codomain) != cod:
                m = m.retyped(dom, cod)
            setattr(self, attr, m.materialize())

    @property
    def field(self):
        return self.mul.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def declared(self) -> str | None:
        for cls in ("hopf-algebra", "hqg", "left-hqg", "right-hqg", "bimonoid"):
            if cls in self.verified:
                return cls
        return None

    def id(self) -> LinMap:
        return identity(self.space, self.field)

    def with_(self, **changes) -> "AlgebraicStructure":
        changes.setdefault("verified", set())
        changes.setdefault("provenance", dict(self.provenance))
        return replace(self, **changes)

    def __repr__(self):
        return f"<AlgebraicStructure {self.name} dim={self.dim} {sorted(self.verified)}>"


@dataclass(eq=False)
class Morphism:
    source: AlgebraicStructure
    target: AlgebraicStructure
    map: LinMap

    def __post_init__(self):
        if atoms(self.map.domain) != self.source.space.atoms:
            raise ShapeMismatch(f"morphism domain {shape_str(self.map)} vs {self.source.name}")
        if atoms(self.map.codomain) != self.target.space.atoms:
            raise ShapeMismatch(f"morphism codomain {shape_str(self.map)} vs {self.target.name}")
        self.map = self.map.retyped((self.source.space,), (self.target.space,)).materialize()

    def check(self, suite: str = "hqg-morphism") -> list[laws.LawReport]:
        return laws.verify_suite({"X": self.source, "Y": self.target}, suite, {"m": self.map})


def structure_from_maps(name, space, mul, unit, comul, counit, **optional) -> AlgebraicStructure:
    return AlgebraicStructure(name, space, mul, unit, comul, counit, **optional)


def tensor_structure(A: AlgebraicStructure, H: AlgebraicStructure, name: str | None = None) -> AlgebraicStructure:
    """Componentwise structure on ``A⊗H`` (divisions and antipodes too, when both sides have them)."""
    fld = A.field
    X, Y = A.space, H.space
    P = BasedSpace.product(X, Y)
    mid = tensor(identity(X, fld), swap(Y, X, fld), identity(Y, fld))
    cmid = tensor(identity(X, fld), swap(X, Y, fld), identity(Y, fld))

    def both(fa, fh, pre=None, post=None):
        m = tensor(fa, fh)
        if pre is not None:
            m = compose(m, pre)
        if post is not None:
            m = compose(post, m)
        return m

    opt = {}
    for attr in ("ldiv", "rdiv"):
        a, h = getattr(A, attr), getattr(H, attr)
        if a is not None and h is not None:
            opt[attr] = both(a, h, mid).retyped((P, P), (P,))
    for attr in ("lantipode", "rantipode"):
        a, h = getattr(A, attr), getattr(H, attr)
        if a is not None and h is not None:
            opt[attr] = tensor(a, h).retyped((P,), (P,))
    return AlgebraicStructure(
        name or f"{A.name}⊗{H.name}",
        P,
        both(A.mul, H.mul, mid).retyped((P, P), (P,)),
        tensor(A.unit, H.unit).retyped((), (P,)),
        both(A.comul, H.comul, post=cmid).retyped((P,), (P, P)),
        tensor(A.counit, H.counit).retyped((P,), ()),
        provenance={"construction": "tensor", "factors": [A.name, H.name]},
        **opt,
    )


# ---------------------------------------------------------------------------
# convolution


def _tensor2_of(S) -> tuple[LinMap, LinMap, list]:
    """(comul, counit, spaces) of a structure or of a list of structures tensored together."""
    if isinstance(S, AlgebraicStructure):
        return S.comul, S.counit, [S.space]
    parts = list(S)
    if len(parts) == 1:
        return _tensor2_of(parts[0])
    T = parts[0]
    for P in parts[1:]:
        T = tensor_structure(T, P)
    spaces = [p.space for p in parts]
    return (
        T.comul.retyped(tuple(spaces), tuple(spaces) * 2),
        T.counit.retyped(tuple(spaces), ()),
        spaces,
    )


def _coalgebra(B, fld=Q):
    if B is None:
        return identity((), fld), identity((), fld), []
    return _tensor2_of(B)


def _algebra(A, fld):
    if A is None:
        return identity((), fld), identity((), fld)
    return A.mul, A.unit


def convolution(f: LinMap, g: LinMap, B=None, A=None) -> LinMap:
    """``μ_A∘(f⊗g)∘δ_B``; None for A means the target is K (functionals)."""
    comul, _, _ = _coalgebra(B)
    mul, _ = _algebra(A, f.field)
    return compose(mul, tensor(f, g), comul.retyped(f.domain, tuple(f.domain) + tuple(g.domain))).materialize()


def conv_unit(B=None, A=None, field=Q) -> LinMap:
    _, counit, _ = _coalgebra(B)
    _, unit = _algebra(A, field)
    return compose(unit, counit).materialize()


def convolution_inverse(f: LinMap, B=None, A=None) -> LinMap:
    """Solve ``f∗x = η∘ε`` exactly, then re-check ``x∗f = η∘ε``."""
    fld = f.field
    comul, counit, _ = _coalgebra(B)
    mul, unit = _algebra(A, fld)
    cod = tuple(f.codomain)
    dom = tuple(f.domain)
    n_in, n_out = size(dom), size(cod)
    # x ↦ f∗x is linear in the n_in*n_out coefficients of x
    dd = comul.retyped(comul.domain, dom + dom).materialize()
    fcols = f.materialize()
    mcols = mul.materialize() if A is not None else None
    rows_of_unknown: dict[int, dict[int, Any]] = {}
    for b in range(n_in):
        for j, cj in dd.col(b).items():
            b1, b2 = divmod(j, n_in)
            for a1, fa in fcols.col(b1).items():
                for a2 in range(n_out):
                    unknown = b2 * n_out + a2
                    if mcols is None:
                        prod = {0: fld.one}
                    else:
                        prod = mcols.col(a1 * n_out + a2)
                    tgt = rows_of_unknown.setdefault(unknown, {})
                    for k, mv in prod.items():
                        key = b * n_out + k
                        tgt[key] = tgt.get(key, 0) + cj * fa * mv
    space_x = BasedSpace("unknowns", tuple(f"x{u}" for u in range(n_in * n_out)))
    space_y = BasedSpace("eqns", tuple(f"e{u}" for u in range(n_in * n_out)))
    system = LinMap((space_x,), (space_y,), rows_of_unknown, fld)
    e = compose(unit, counit).materialize()
    rhs_cols = {0: {b * n_out + k: v for b in range(n_in) for k, v in e.col(b).items()}}
    rhs = LinMap((), (space_y,), rhs_cols, fld)
    try:
        sol = solve_right(system, rhs)
    except NoSolution:
        raise NotConvInvertible(f"{shape_str(f)} has no convolution inverse") from None
    xcols: dict[int, dict[int, Any]] = {}
    for u, v in sol.col(0).items():
        b, a = divmod(u, n_out)
        xcols.setdefault(b, {})[a] = v
    x = LinMap(dom, cod, xcols, fld)
    if convolution(x, f, B, A) != e.retyped(dom, cod):
        raise OneSidedOnly("right inverse found but the left identity fails", x)
    return x


# ---------------------------------------------------------------------------
# divisions and antipodes


def _h_map(H: AlgebraicStructure, side: str) -> LinMap:
    X, fld = H.space, H.field
    idX = identity(X, fld)
    if side == "left":
        return compose(tensor(idX, H.mul), tensor(H.comul, idX)).materialize()
    if side == "right":
        return compose(tensor(H.mul, idX), tensor(idX, H.comul)).materialize()
    raise ValueError(f"side must be left or right, not {side!r}")


def division_from_structure(H: AlgebraicStructure, side: str = "left") -> LinMap:
    """The unique left (right) division, via the inverse of h (d)."""
    X, fld = H.space, H.field
    idX = identity(X, fld)
    h = _h_map(H, side)
    try:
        hinv = invert(h)
    except NotInvertible as exc:
        raise NoDivision(f"{side} division of {H.name} does not exist: {exc}") from None
    if side == "left":
        div = compose(tensor(H.counit, idX), hinv).materialize()
        reps = [laws.check_law(i, H.with_(ldiv=div)) for i in ("ldiv-cancel-outer", "ldiv-cancel-inner")]
    else:
        div = compose(tensor(idX, H.counit), hinv).materialize()
        reps = [laws.check_law(i, H.with_(rdiv=div)) for i in ("rdiv-cancel-outer", "rdiv-cancel-inner")]
    require(reps, "derived division")
    return div.retyped((X, X), (X,)).materialize()


@dataclass
class AntipodeReport:
    side: str
    antipode: LinMap
    formula: laws.LawReport
    quasigroup: bool
    reports: list = field(default_factory=list)


def antipode_from_division(H: AlgebraicStructure, side: str = "left") -> AntipodeReport:
    """λ = l∘(H⊗η) (or ϱ = r∘(η⊗H)) and whether l (r) factors through it."""
    X, fld = H.space, H.field
    idX = identity(X, fld)
    if side == "left":
        div = H.ldiv if H.ldiv is not None else division_from_structure(H, "left")
        anti = compose(div, tensor(idX, H.unit)).materialize()
        K = H.with_(ldiv=div, lantipode=anti)
        formula = laws.check_law("ldiv-formula", K)
        ids = ("lhqg-outer", "lhqg-inner", "lam-conv-id")
    elif side == "right":
        div = H.rdiv if H.rdiv is not None else division_from_structure(H, "right")
        anti = compose(div, tensor(H.unit, idX)).materialize()
        K = H.with_(rdiv=div, rantipode=anti)
        formula = laws.check_law("rdiv-formula", K)
        ids = ("rhqg-inner", "rhqg-outer", "id-conv-rlam")
    else:
        raise ValueError(f"side must be left or right, not {side!r}")
    reps = [formula] + [laws.check_law(i, K) for i in ids]
    return AntipodeReport(side, anti.retyped((X,), (X,)), formula, all(r.passed for r in reps), reps)


def complete(H: AlgebraicStructure, name: str | None = None) -> AlgebraicStructure:
    """Fill in whichever divisions/antipodes exist and record the suites that pass."""
    opts: dict[str, Any] = {}
    for side, dattr, aattr in (("left", "ldiv", "lantipode"), ("right", "rdiv", "rantipode")):
        try:
            div = division_from_structure(H, side)
        except NoDivision:
            continue
        opts[dattr] = div
        stub = H.with_(**{dattr: div})
        rep = antipode_from_division(stub, side)
        opts[aattr] = rep.antipode
    out = H.with_(name=name or H.name, **opts)
    classify(out)
    return out


def classify(H: AlgebraicStructure) -> str | None:
    """Run the class suites that are applicable; the passing ones are recorded in ``verified``."""
    if not laws.all_pass(laws.verify_suite(H, "bimonoid")):
        return None
    if H.ldiv is not None and H.lantipode is not None:
        laws.verify_suite(H, "left-hqg")
    if H.rdiv is not None and H.rantipode is not None:
        laws.verify_suite(H, "right-hqg")
    if {"left-hqg", "right-hqg"} <= H.verified:
        laws.verify_suite(H, "hqg")
    if H.lantipode is not None and laws.check_law("associativity", H).passed:
        laws.verify_suite(H, "hopf-algebra")
    return H.declared


def require(reports: list[laws.LawReport], context: str = "", exc=LawFails) -> list[laws.LawReport]:
    bad = laws.first_failure(reports)
    if bad is not None:
        raise exc(bad, context)
    return reports
