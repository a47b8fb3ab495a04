"""
JSON formats for structures, functionals, elements and projection bundles.

Coefficients are exact strings ("3", "-1/2").  Sparse entries list basis
indices (0-based) followed by the coefficient, sorted, so dumps are
deterministic.  Product spaces carry their ``factors`` so a reloaded
structure composes with maps built from the original factors.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .core import AlgebraicStructure
from .exactlin import BasedSpace, LinMap, Q, field_from_name, ravel


class FormatError(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# spaces and sparse maps


def space_to_json(X: BasedSpace) -> dict:
    out: dict = {"name": X.name, "basis": list(X.labels)}
    if X.factors:
        out["factors"] = [space_to_json(f) for f in X.factors]
    return out


def space_from_json(d: dict) -> BasedSpace:
    try:
        if d.get("factors"):
            X = BasedSpace.product(*(space_from_json(f) for f in d["factors"]))
            if list(X.labels) != list(d["basis"]) or X.name != d["name"]:
                raise FormatError("space factors disagree with its basis")
            return X
        return BasedSpace.make(d["name"], d["basis"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed space: {exc}") from None


def map_entries(m: LinMap) -> list[list]:
    """[*input indices, *output indices, coefficient] per nonzero entry."""
    fld = m.field
    return [[*c, *r, fld.format(v)] for (c, r), v in m.entries.items() if v != fld.zero]


def map_from_entries(rows, domain: Sequence[BasedSpace], codomain: Sequence[BasedSpace], fld) -> LinMap:
    k, l = len(domain), len(codomain)
    cols: dict[int, dict[int, Any]] = {}
    try:
        for e in rows:
            if len(e) != k + l + 1:
                raise FormatError(f"entry {e!r} should have {k + l} indices and a coefficient")
            dims = [s.dim for s in (*domain, *codomain)]
            if any(not isinstance(i, int) or not 0 <= i < n for i, n in zip(e, dims)):
                raise FormatError(f"entry {e!r} has an index out of range")
            c, r = ravel(e[:k], domain), ravel(e[k : k + l], codomain)
            v = fld.parse(str(e[-1]))
            col = cols.setdefault(c, {})
            if r in col:
                raise FormatError(f"duplicate entry {e[:-1]!r}")
            if v != fld.zero:
                col[r] = v
    except TypeError as exc:
        raise FormatError(f"malformed entries: {exc}") from None
    return LinMap(tuple(domain), tuple(codomain), cols, fld)


def _field(d: dict, override=None):
    if override is not None:
        return override
    return field_from_name(d.get("field", "q"))


# ---------------------------------------------------------------------------
# structures

_SHAPES = {
    "mul": (2, 1),
    "unit": (0, 1),
    "comul": (1, 2),
    "counit": (1, 0),
    "ldiv": (2, 1),
    "rdiv": (2, 1),
    "antipode": (1, 1),
    "rantipode": (1, 1),
}


def structure_to_json(H: AlgebraicStructure) -> dict:
    out: dict = {"name": H.name, "dim": H.dim, "basis": list(H.space.labels), "field": H.field.name}
    if H.space.factors or H.space.name != H.name:
        out["space"] = space_to_json(H.space)
    for key, attr in (("mul", "mul"), ("unit", "unit"), ("comul", "comul"), ("counit", "counit"),
                      ("ldiv", "ldiv"), ("rdiv", "rdiv"), ("antipode", "lantipode")):
        m = getattr(H, attr)
        if m is not None:
            out[key] = map_entries(m)
    if H.rantipode is not None and H.rantipode != H.lantipode:
        out["rantipode"] = map_entries(H.rantipode)
    return out


def structure_from_json(d: dict, field=None) -> AlgebraicStructure:
    if not isinstance(d, dict):
        raise FormatError("structure JSON must be an object")
    fld = _field(d, field)
    try:
        X = space_from_json(d["space"]) if "space" in d else BasedSpace.make(d["name"], d["basis"])
        if "dim" in d and d["dim"] != X.dim:
            raise FormatError(f"dim {d['dim']} but {X.dim} basis vectors")
        maps = {}
        for key, (k, l) in _SHAPES.items():
            if key in d:
                maps[key] = map_from_entries(d[key], (X,) * k, (X,) * l, fld)
        for req in ("mul", "unit", "comul", "counit"):
            if req not in maps:
                raise FormatError(f"structure is missing {req!r}")
    except KeyError as exc:
        raise FormatError(f"structure is missing {exc}") from None
    lam = maps.get("antipode")
    return AlgebraicStructure(
        d["name"],
        X,
        maps["mul"],
        maps["unit"],
        maps["comul"],
        maps["counit"],
        ldiv=maps.get("ldiv"),
        rdiv=maps.get("rdiv"),
        lantipode=lam,
        rantipode=maps.get("rantipode", lam),
        provenance={"source": "json"},
    )


# ---------------------------------------------------------------------------
# functionals on X⊗Y and elements of X⊗Y


def functional_to_json(f: LinMap, base: str) -> dict:
    return {"base": base, "field": f.field.name, "entries": map_entries(f)}


def functional_from_json(d: dict, X: BasedSpace, Y: BasedSpace, field=None) -> LinMap:
    try:
        return map_from_entries(d["entries"], (X, Y), (), _field(d, field))
    except KeyError:
        raise FormatError("functional JSON needs 'entries'") from None


def element_to_json(R: LinMap) -> dict:
    return {"field": R.field.name, "entries": map_entries(R)}


def element_from_json(d: dict, X: BasedSpace, Y: BasedSpace | None = None, field=None) -> LinMap:
    try:
        return map_from_entries(d["entries"], (), (X, Y or X), _field(d, field))
    except KeyError:
        raise FormatError("element JSON needs 'entries'") from None


# ---------------------------------------------------------------------------
# single linear maps between two spaces; used inside bundles


def linmap_to_json(m: LinMap) -> dict:
    fld = m.field
    return {"entries": [[ravel(c, m.domain), ravel(r, m.codomain), fld.format(v)] for (c, r), v in m.entries.items() if v != fld.zero]}


def linmap_from_json(d: dict, X: BasedSpace, Y: BasedSpace, fld=Q) -> LinMap:
    return map_from_entries(d["entries"], (X,), (Y,), fld)


def projection_to_json(proj, source: dict | None = None) -> dict:
    """Everything needed to split the projection again without recomputing it."""
    out = {
        "kind": "projection",
        "field": proj.B.field.name,
        "B": structure_to_json(proj.B),
        "H": structure_to_json(proj.H),
        "Z": space_to_json(proj.Z),
        "f": linmap_to_json(proj.f.map),
        "g": linmap_to_json(proj.g.map),
        "p": linmap_to_json(proj.p),
        "i": linmap_to_json(proj.i),
    }
    if source:
        out["source"] = source
    return out


def projection_from_json(d: dict, field=None, require_strong: bool = True):
    from . import core, qtyd

    if d.get("kind") != "projection":
        raise FormatError("not a projection bundle")
    fld = _field(d, field)
    try:
        B = structure_from_json(d["B"], fld)
        H = structure_from_json(d["H"], fld)
        Z = space_from_json(d["Z"])
        f = linmap_from_json(d["f"], H.space, B.space, fld)
        g = linmap_from_json(d["g"], B.space, H.space, fld)
        p = linmap_from_json(d["p"], B.space, Z, fld)
        i = linmap_from_json(d["i"], Z, B.space, fld)
    except KeyError as exc:
        raise FormatError(f"projection bundle is missing {exc}") from None
    core.classify(B)
    core.classify(H)
    return qtyd.make_projection(B, H, f, g, split=(p, i, Z), require_strong=require_strong)

