"""
Finite loops given by Cayley tables, their classification, the Chein
doubling M(G,2), and the loop algebra functor.

Tables are stored 0-based with the identity at index 0; the text format
and ``labels`` keep the user's 1-based view.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .exactlin import BasedSpace, LinMap, Q


class NotALoop(ValueError):
    pass


class NotAGroup(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Loop:
    mul: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    ldiv: tuple[tuple[int, ...], ...] = field(init=False)
    rdiv: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        n = len(self.mul)
        if n == 0 or any(len(row) != n for row in self.mul):
            raise NotALoop("table must be square and nonempty")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise NotALoop("need one distinct label per element")
        full = set(range(n))
        for u in range(n):
            if set(self.mul[u]) != full:
                raise NotALoop(f"row {self.labels[u]} is not a permutation")
            if {self.mul[v][u] for v in range(n)} != full:
                raise NotALoop(f"column {self.labels[u]} is not a permutation")
        if tuple(self.mul[0]) != tuple(range(n)) or tuple(r[0] for r in self.mul) != tuple(range(n)):
            raise NotALoop("element 0 must be a two-sided identity")
        # u·(u\v) = v and (u/v)·v = u
        ld = [[0] * n for _ in range(n)]
        rd = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                w = self.mul[u][v]
                ld[u][w] = v
                rd[w][v] = u
        object.__setattr__(self, "ldiv", tuple(map(tuple, ld)))
        object.__setattr__(self, "rdiv", tuple(map(tuple, rd)))

    @property
    def order(self) -> int:
        return len(self.mul)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, Loop) and self.mul == other.mul and self.labels == other.labels

    def __hash__(self):
        return hash((self.mul, self.labels))

    def m(self, u: int, v: int) -> int:
        return self.mul[u][v]

    def inverse(self, u: int) -> int:
        """Right inverse u\\e (equal to the left inverse in an IP loop)."""
        return self.ldiv[u][0]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"<Loop order={self.order}>"


def loop_from_table(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, one_based: bool = True) -> Loop:
    """Validate a table and re-index so that the identity comes first (other elements keep file order)."""
    n = len(table)
    off = 1 if one_based else 0
    t = [[x - off for x in row] for row in table]
    if any(len(row) != n for row in t) or any(not 0 <= x < n for row in t for x in row):
        raise NotALoop("entries must index the elements")
    labels = list(labels) if labels is not None else [str(k + 1) for k in range(n)]
    ids = [e for e in range(n) if t[e] == list(range(n)) and [row[e] for row in t] == list(range(n))]
    if not ids:
        raise NotALoop("no two-sided identity")
    e = ids[0]
    order = [e] + [k for k in range(n) if k != e]
    pos = {old: new for new, old in enumerate(order)}
    mul = tuple(tuple(pos[t[a][b]] for b in order) for a in order)
    return Loop(mul, tuple(labels[k] for k in order))


def parse_loop(text: str) -> Loop:
    """Line 1: n; then n rows of 1-based indices; optional ``label k name`` lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise NotALoop("empty loop file")
    try:
        n = int(lines[0])
        rows = [[int(x) for x in lines[1 + r].split()] for r in range(n)]
    except (ValueError, IndexError) as exc:
        raise NotALoop(f"malformed loop table: {exc}") from None
    labels = [str(k + 1) for k in range(n)]
    for ln in lines[1 + n :]:
        parts = ln.split(None, 2)
        if len(parts) != 3 or parts[0] != "label":
            raise NotALoop(f"unexpected line {ln!r}")
        labels[int(parts[1]) - 1] = parts[2]
    return loop_from_table(rows, labels)


def format_loop(L: Loop) -> str:
    out = [str(L.order)]
    out += [" ".join(str(x + 1) for x in row) for row in L.mul]
    out += [f"label {k + 1} {lab}" for k, lab in enumerate(L.labels)]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# classification


@dataclass
class LoopClassification:
    order: int
    group: bool
    ip: bool
    moufang: bool
    left_bol: bool
    right_bol: bool
    inverse_identity: bool
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("group", "ip", "moufang", "left_bol", "right_bol", "inverse_identity")

    def to_json(self) -> dict:
        out = {"order": self.order, "loop": True}
        out.update({k: getattr(self, k) for k in self.FLAGS})
        out["witnesses"] = self.witnesses
        return out


def _scan(L: Loop, arity: int, pred) -> tuple[int, ...] | None:
    for tup in product(range(L.order), repeat=arity):
        if not pred(*tup):
            return tup
    return None


def classify_loop(L: Loop) -> LoopClassification:
    m, n = L.m, L.order
    lab = L.labels

    def assoc(x, y, z):
        return m(m(x, y), z) == m(x, m(y, z))

    def right_bol(x, y, z):
        return m(m(m(x, y), z), y) == m(x, m(m(y, z), y))

    def left_bol(x, y, z):
        return m(y, m(z, m(y, x))) == m(m(y, m(z, y)), x)

    def two_sided_inverse(u):
        return L.rdiv[0][u] == L.ldiv[u][0]

    def ip_laws(u, v):
        inv = L.ldiv[u][0]
        return m(inv, m(u, v)) == v and m(m(v, u), inv) == v

    def inv_identity(a):
        return m(L.ldiv[a][0], a) == 0

    wit = {}
    checks = {
        "group": _scan(L, 3, assoc),
        "right_bol": _scan(L, 3, right_bol),
        "left_bol": _scan(L, 3, left_bol),
        "inverse_identity": _scan(L, 1, inv_identity),
    }
    ip_w = _scan(L, 1, two_sided_inverse)
    checks["ip"] = ip_w if ip_w is not None else _scan(L, 2, ip_laws)
    for k, w in checks.items():
        if w is not None:
            wit[k] = [lab[i] for i in w]
    mou = checks["right_bol"] is None and checks["left_bol"] is None
    if not mou:
        wit["moufang"] = wit.get("right_bol") or wit.get("left_bol")
    return LoopClassification(
        order=n,
        group=checks["group"] is None,
        ip=checks["ip"] is None,
        moufang=mou,
        left_bol=checks["left_bol"] is None,
        right_bol=checks["right_bol"] is None,
        inverse_identity=checks["inverse_identity"] is None,
        witnesses=wit,
    )


def is_group(L: Loop) -> bool:
    return _scan(L, 3, lambda x, y, z: L.m(L.m(x, y), z) == L.m(x, L.m(y, z))) is None


# ---------------------------------------------------------------------------
# constructions


def group_from_permutations(perms: Sequence[Sequence[int]], labels: Sequence[str]) -> Loop:
    """Group of permutations (tuples of images) under ``(p·q)(k) = p(q(k))``."""
    perms = [tuple(p) for p in perms]
    idx = {p: k for k, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            pq = tuple(p[q[k]] for k in range(len(q)))
            if pq not in idx:
                raise NotAGroup("permutations are not closed under composition")
            row.append(idx[pq])
        table.append(row)
    return loop_from_table(table, labels, one_based=False)


def cyclic(n: int) -> Loop:
    return loop_from_table([[(a + b) % n for b in range(n)] for a in range(n)], [f"g{k}" for k in range(n)], one_based=False)


def symmetric3() -> Loop:
    """S3 with σ0 = id, σ1 = (12), σ2 = (13), σ3 = (23), σ4 = (123), σ5 = (132)."""
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    return group_from_permutations(perms, [f"σ{k}" for k in range(6)])


def chein_double(G: Loop, must_be_group: bool = True) -> Loop:
    """M(G,2) on G ⊔ Gu with σ_i u^α · σ_j u^β = (σ_i^ν σ_j^μ)^ν u^{α+β}, ν = (−1)^β, μ = (−1)^{α+β}."""
    if must_be_group:
        c = classify_loop(G)
        if not c.group:
            raise NotAGroup(f"not associative at {c.witnesses['group']}")
    n = G.order
    inv = [G.ldiv[g][0] for g in range(n)]

    def pw(g, sign):
        return g if sign > 0 else inv[g]

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for a, i, b, j in product(range(2), range(n), range(2), range(n)):
        nu = -1 if b else 1
        mu = -1 if (a + b) % 2 else 1
        g = pw(G.m(pw(i, nu), pw(j, mu)), nu)
        table[a * n + i][b * n + j] = ((a + b) % 2) * n + g
    labels = list(G.labels) + [f"{lab}u" for lab in G.labels]
    return loop_from_table(table, labels, one_based=False)


def loop_algebra(L: Loop, field=Q, name: str | None = None):
    """The loop algebra K[L]: group-like basis, divisions from the tables, suites recorded."""
    from . import core

    X = BasedSpace.make(name or "K[L]", L.labels)
    n = L.order
    one = field.one

    def table_map(t):
        return LinMap((X, X), (X,), {u * n + v: {t[u][v]: one} for u in range(n) for v in range(n)}, field)

    mul = table_map(L.mul)
    unit = LinMap((), (X,), {0: {0: one}}, field)
    comul = LinMap((X,), (X, X), {u: {u * n + u: one} for u in range(n)}, field)
    counit = LinMap((X,), (), {u: {0: one} for u in range(n)}, field)
    lanti = LinMap((X,), (X,), {u: {L.ldiv[u][0]: one} for u in range(n)}, field)
    ranti = LinMap((X,), (X,), {u: {L.rdiv[0][u]: one} for u in range(n)}, field)
    H = core.AlgebraicStructure(
        name or "K[L]",
        X,
        mul,
        unit,
        comul,
        counit,
        ldiv=table_map(L.ldiv),
        rdiv=table_map(L.rdiv),
        lantipode=lanti,
        rantipode=ranti,
        provenance={"construction": "loop-algebra", "order": n},
    )
    core.classify(H)
    return H
