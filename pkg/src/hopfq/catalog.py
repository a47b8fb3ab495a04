"""
Builtin objects: the Taft algebra H4, the Moufang loop M(S3,2) and its loop
algebra, the sign pairing between them, and the family R_α on H4.
"""

from __future__ import annotations

from fractions import Fraction

from . import core, loops
from .exactlin import BasedSpace, LinMap, Q

TAFT_BASIS = ("1", "x", "y", "w")


def taft4(field=Q) -> core.AlgebraicStructure:
    """H4 with basis 1, x, y, w: x² = 1, y² = 0, xy = w = −yx."""
    if field.characteristic == 2:
        raise ValueError("Taft algebra needs characteristic ≠ 2")
    X = BasedSpace.make("H4", TAFT_BASIS)
    one, x, y, w = range(4)
    # (left factor, right factor) -> (coefficient, result)
    table = {
        (x, x): (1, one),
        (x, y): (1, w),
        (x, w): (1, y),
        (y, x): (-1, w),
        (w, x): (-1, y),
    }
    mul_cols = {}
    for a in range(4):
        for b in range(4):
            if a == one:
                mul_cols[a * 4 + b] = {b: field.one}
            elif b == one:
                mul_cols[a * 4 + b] = {a: field.one}
            elif (a, b) in table:
                c, r = table[(a, b)]
                mul_cols[a * 4 + b] = {r: field(c)}
    mul = LinMap((X, X), (X,), mul_cols, field)
    unit = LinMap((), (X,), {0: {one: field.one}}, field)
    comul = LinMap(
        (X,),
        (X, X),
        {
            one: {one * 4 + one: field.one},
            x: {x * 4 + x: field.one},
            y: {y * 4 + x: field.one, one * 4 + y: field.one},
            w: {w * 4 + one: field.one, x * 4 + w: field.one},
        },
        field,
    )
    counit = LinMap((X,), (), {one: {0: field.one}, x: {0: field.one}}, field)
    lam = LinMap((X,), (X,), {one: {one: field.one}, x: {x: field.one}, y: {w: field.one}, w: {y: field(-1)}}, field)
    H = core.AlgebraicStructure("H4", X, mul, unit, comul, counit, provenance={"builtin": "taft4"})
    H = core.complete(H, "H4")
    if H.lantipode != lam or "hopf-algebra" not in H.verified:
        raise AssertionError("Taft algebra failed its own checks")
    return H


def ms32() -> loops.Loop:
    """M(S3,2): basis order σ0..σ5, σ0u..σ5u."""
    return loops.chein_double(loops.symmetric3())


def ms32_algebra(field=Q) -> core.AlgebraicStructure:
    A = loops.loop_algebra(ms32(), field, name="FM(S3,2)")
    A.provenance["builtin"] = "ms32-algebra"
    if "hqg" not in A.verified:
        raise AssertionError("M(S3,2) loop algebra failed the hqg suite")
    return A


def tau_sign_map(A: core.AlgebraicStructure, H: core.AlgebraicStructure) -> LinMap:
    """τ(σ_i u^α ⊗ 1) = 1, τ(σ_i u^α ⊗ x) = (−1)^α, zero on y and w."""
    fld = A.field
    n = A.dim
    cols = {}
    for a in range(n):
        alpha = 1 if A.space.labels[a].endswith("u") else 0
        cols[a * 4 + 0] = {0: fld.one}
        cols[a * 4 + 1] = {0: fld(-1 if alpha else 1)}
    return LinMap((A.space, H.space), (), cols, fld)


def tau_sign(field=Q):
    from . import pairing

    A, H = ms32_algebra(field), taft4(field)
    return pairing.make_skew_pairing(A, H, tau_sign_map(A, H))


def _r_alpha_terms(alpha, fld, flip: bool) -> dict:
    half = fld(Fraction(1, 2))
    a2 = fld(alpha) * half
    one, x, y, w = range(4)
    group_part = {(one, one): half, (one, x): half, (x, one): half, (x, x): -half}
    nilpotent = {(y, y): a2, (y, w): -a2, (w, y): a2, (w, w): a2}
    if flip:
        nilpotent = {(j, i): v for (i, j), v in nilpotent.items()}
    return {**group_part, **nilpotent}


def _tensor_of(H: core.AlgebraicStructure, terms: dict) -> LinMap:
    return LinMap((), (H.space, H.space), {0: {i * 4 + j: v for (i, j), v in terms.items() if v}}, H.field)


def r_alpha_literal_map(H: core.AlgebraicStructure, alpha) -> LinMap:
    """½(1⊗1 + 1⊗x + x⊗1 − x⊗x) + α/2 (y⊗y − y⊗w + w⊗y + w⊗w), exactly as usually printed.

    With the coproduct Δ(y) = y⊗x + 1⊗y this violates (Δ⊗H)∘R = R₁₃R₂₃
    whenever α ≠ 0; see ``r_alpha_map``.
    """
    return _tensor_of(H, _r_alpha_terms(alpha, H.field, flip=False))


def r_alpha_map(H: core.AlgebraicStructure, alpha) -> LinMap:
    """R_α = ½(1⊗1 + 1⊗x + x⊗1 − x⊗x) + α/2 (y⊗y + y⊗w − w⊗y + w⊗w).

    The nilpotent part is the flip of the printed one; this is the family
    that is quasitriangular for the coproduct used by ``taft4``.
    """
    return _tensor_of(H, _r_alpha_terms(alpha, H.field, flip=True))


def r_alpha(alpha=0, H: core.AlgebraicStructure | None = None):
    from . import qtyd

    H = H or taft4()
    return qtyd.make_quasitriangular(H, r_alpha_map(H, alpha))


DEFAULT_ALPHAS = (Fraction(0), Fraction(1), Fraction(-2), Fraction(3, 5))

BUILTINS = ("taft4", "ms32", "ms32-algebra", "tau-sign", "r-alpha", "cyclic", "s3")


def builtin(key: str, alpha=0, n: int = 2):
    """Look up a builtin by key; ``r-alpha`` takes ``alpha`` and ``cyclic`` takes ``n``."""
    if key == "taft4":
        return taft4()
    if key == "ms32":
        return ms32()
    if key == "ms32-algebra":
        return ms32_algebra()
    if key == "tau-sign":
        return tau_sign()
    if key == "r-alpha":
        return r_alpha(alpha)
    if key == "cyclic":
        return loops.cyclic(n)
    if key == "s3":
        return loops.symmetric3()
    raise KeyError(f"unknown builtin {key!r}; known: {', '.join(BUILTINS)}")
