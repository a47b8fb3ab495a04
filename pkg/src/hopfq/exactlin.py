"""
Exact scalars and sparse linear maps between tensor powers of based spaces.

A LinMap is stored column by column: for every basis vector of the domain
(a mixed-radix index over the domain factors) it keeps the sparse image in
the codomain.  Composites and tensor products are lazy, so a chain such as
``(mu @ mu) * (H @ c @ H) * (delta @ delta)`` never materialises the large
identity factors; a column is computed by pushing one basis vector through.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import prod
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix


class ShapeMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    def __init__(self, rank: int, size: int):
        super().__init__(f"map is singular: rank {rank} < {size}")
        self.rank = rank
        self.size = size


class NotIdempotent(ValueError):
    pass


class NoSolution(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# fields


class Rationals:
    """The default ground field.  Elements are ``fractions.Fraction``."""

    name = "q"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, float):
            raise TypeError("floating point scalars are not allowed")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, s: str) -> Fraction:
        s = s.strip()
        if not s or any(ch in s for ch in ".eE"):
            raise ValueError(f"not an exact rational: {s!r}")
        return Fraction(s)

    def format(self, v) -> str:
        v = Fraction(v)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def to_domain(self, v):
        v = Fraction(v)
        return QQ(v.numerator, v.denominator)

    def from_domain(self, v) -> Fraction:
        return Fraction(int(v.numerator), int(v.denominator))

    domain = QQ

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """Residues modulo a prime p >= 5, backed by sympy's finite-field domain."""

    def __init__(self, p: int):
        if p < 5 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"need a prime p >= 5, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"p/{p}"
        self.domain = GF(p, symmetric=False)
        self.zero = self.domain(0)
        self.one = self.domain(1)

    def __call__(self, x):
        if isinstance(x, float):
            raise TypeError("floating point scalars are not allowed")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return self.domain(x.numerator) / self.domain(x.denominator)
        return self.domain(int(x))

    def parse(self, s: str):
        return self(Rationals().parse(s))

    def format(self, v) -> str:
        return str(int(v) % self.p)

    def to_domain(self, v):
        return self(v) if not isinstance(v, type(self.zero)) else v

    def from_domain(self, v):
        return self.domain(int(v))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("p", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


Q = Rationals()


def field_from_name(name: str):
    """``q`` for the rationals, ``p/<prime>`` for a prime field."""
    if name == "q":
        return Q
    if name.startswith("p/"):
        return PrimeField(int(name[2:]))
    raise ValueError(f"unknown field {name!r}")


# ---------------------------------------------------------------------------
# spaces


@dataclass(frozen=True)
class BasedSpace:
    """A finite-dimensional space with named basis vectors.

    A space built by :meth:`product` remembers its factors; maps may then be
    composed across ``[A⊗H]`` and ``[A, H]`` since both flatten to the same
    atoms and the same mixed-radix indexing.
    """

    name: str
    labels: tuple[str, ...]
    factors: tuple["BasedSpace", ...] = ()
    _atoms: tuple = dc_field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a based space needs dim >= 1")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate basis labels in {self.name}")
        atoms = tuple(a for f in self.factors for a in f.atoms) if self.factors else (self,)
        object.__setattr__(self, "_atoms", atoms)

    @classmethod
    def make(cls, name: str, labels: Iterable[str]) -> "BasedSpace":
        return cls(name, tuple(labels))

    @classmethod
    def product(cls, *spaces: "BasedSpace") -> "BasedSpace":
        labels = tuple("⊗".join(ls) for ls in product(*(s.labels for s in spaces)))
        return cls("⊗".join(s.name for s in spaces), labels, tuple(spaces))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def atoms(self) -> tuple["BasedSpace", ...]:
        return self._atoms

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __str__(self):
        return self.name


Factors = tuple[BasedSpace, ...]


def atoms(spaces: Sequence[BasedSpace]) -> tuple:
    return tuple(a for s in spaces for a in s.atoms)


def size(spaces: Sequence[BasedSpace]) -> int:
    return prod(s.dim for s in spaces)


def unravel(idx: int, spaces: Sequence[BasedSpace]) -> tuple[int, ...]:
    out = []
    for s in reversed(spaces):
        idx, r = divmod(idx, len(s.labels))
        out.append(r)
    return tuple(reversed(out))


def ravel(multi: Sequence[int], spaces: Sequence[BasedSpace]) -> int:
    idx = 0
    for i, s in zip(multi, spaces):
        if not 0 <= i < s.dim:
            raise IndexError(f"index {i} out of range for {s.name}")
        idx = idx * s.dim + i
    return idx


def labels_of(idx: int, spaces: Sequence[BasedSpace]) -> list[str]:
    return [s.labels[i] for s, i in zip(spaces, unravel(idx, spaces))]


# ---------------------------------------------------------------------------
# linear maps

Column = Mapping[int, object]
_EMPTY: dict = {}

# lazy composites cache their columns only up to this domain size
_CACHE_LIMIT = 1 << 18


class LinMap:
    """Sparse linear map ``⊗domain -> ⊗codomain`` over an exact field."""

    __slots__ = ("domain", "codomain", "field", "_colfn", "_cols", "_complete", "_cache")

    def __init__(
        self,
        domain: Sequence[BasedSpace],
        codomain: Sequence[BasedSpace],
        columns: Mapping[int, Mapping[int, object]] | None = None,
        field=Q,
        *,
        colfn: Callable[[int], Column] | None = None,
        cache: bool = True,
    ):
        self.domain: Factors = tuple(domain)
        self.codomain: Factors = tuple(codomain)
        self.field = field
        if colfn is None:
            ncol, nrow = size(self.domain), size(self.codomain)
            cols = {}
            for i, col in (columns or {}).items():
                if not 0 <= i < ncol:
                    raise IndexError(f"input index {i} out of range")
                kept = {}
                for j, v in col.items():
                    if not 0 <= j < nrow:
                        raise IndexError(f"output index {j} out of range")
                    if v:
                        kept[j] = v
                if kept:
                    cols[i] = kept
            self._cols = cols
            self._complete = True
            self._colfn = None
        else:
            self._cols = {}
            self._complete = False
            self._colfn = colfn
        self._cache = cache and size(self.domain) <= _CACHE_LIMIT

    # -- construction helpers --------------------------------------------

    @classmethod
    def from_entries(cls, domain, codomain, entries: Iterable, field=Q) -> "LinMap":
        """Build from ``((in multi-index), (out multi-index), coeff)`` triples; repeats add up."""
        domain, codomain = tuple(domain), tuple(codomain)
        cols: dict[int, dict[int, object]] = {}
        for ins, outs, v in entries:
            i, j = ravel(ins, domain), ravel(outs, codomain)
            col = cols.setdefault(i, {})
            col[j] = col.get(j, field.zero) + field(v)
        return cls(domain, codomain, cols, field)

    @classmethod
    def from_function(cls, domain, codomain, fn: Callable[[int], Column], field=Q) -> "LinMap":
        return cls(domain, codomain, field=field, colfn=fn)

    # -- access -----------------------------------------------------------

    @property
    def ncols(self) -> int:
        return size(self.domain)

    @property
    def nrows(self) -> int:
        return size(self.codomain)

    def col(self, i: int) -> Column:
        """Image of the ``i``-th domain basis vector; do not mutate."""
        c = self._cols.get(i)
        if c is not None or self._complete:
            return c if c is not None else _EMPTY
        c = self._colfn(i)
        if self._cache:
            self._cols[i] = c
        return c

    def materialize(self) -> "LinMap":
        if self._complete:
            return self
        cols = {}
        for i in range(self.ncols):
            c = self.col(i)
            if c:
                cols[i] = dict(c)
        out = LinMap(self.domain, self.codomain, field=self.field)
        out._cols = cols
        return out

    def columns(self) -> dict[int, Column]:
        return self.materialize()._cols

    @property
    def entries(self) -> dict[tuple[tuple[int, ...], tuple[int, ...]], object]:
        """Canonical sparse form: ``(input multi-index, output multi-index) -> coeff``."""
        cols = self.columns()
        out = {}
        for i in sorted(cols):
            mi = unravel(i, self.domain)
            for j in sorted(cols[i]):
                out[(mi, unravel(j, self.codomain))] = cols[i][j]
        return out

    def __getitem__(self, key) -> object:
        ins, outs = key
        return self.col(ravel(ins, self.domain)).get(ravel(outs, self.codomain), self.field.zero)

    def apply(self, vector: Mapping[int, object]) -> dict[int, object]:
        acc: dict[int, object] = {}
        for i, a in vector.items():
            for j, b in self.col(i).items():
                acc[j] = acc.get(j, 0) + a * b
        return {j: v for j, v in acc.items() if v}

    def to_dense(self) -> list[list]:
        rows = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for i, c in self.columns().items():
            for j, v in c.items():
                rows[j][i] = v
        return rows

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns().values())

    # -- comparison -------------------------------------------------------

    def same_shape(self, other: "LinMap") -> bool:
        return atoms(self.domain) == atoms(other.domain) and atoms(self.codomain) == atoms(other.codomain)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        if not self.same_shape(other):
            return False
        return self.columns() == other.columns()

    __hash__ = None

    def first_difference(self, other: "LinMap") -> tuple[int, int] | None:
        """Smallest (input, output) index where the two maps disagree."""
        if not self.same_shape(other):
            raise ShapeMismatch(f"{shape_str(self)} vs {shape_str(other)}")
        for i in range(self.ncols):
            a, b = self.col(i), other.col(i)
            if a != b:
                for j in sorted(set(a) | set(b)):
                    if a.get(j, 0) != b.get(j, 0):
                        return i, j
        return None

    def retyped(self, domain: Sequence[BasedSpace], codomain: Sequence[BasedSpace]) -> "LinMap":
        """Same matrix, regrouped factor lists (atoms must agree)."""
        if atoms(domain) != atoms(self.domain) or atoms(codomain) != atoms(self.codomain):
            raise ShapeMismatch("retyping must preserve the flattened factors")
        out = LinMap(domain, codomain, field=self.field, colfn=self.col, cache=False)
        if self._complete:
            out._cols, out._complete = self._cols, True
        return out

    def __repr__(self):
        state = "" if self._complete else " lazy"
        return f"<LinMap {shape_str(self)}{state}>"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "LinMap") -> "LinMap":
        return add(self, other)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return add(self, scale(other, -1))

    def __neg__(self) -> "LinMap":
        return scale(self, -1)

    def __rmul__(self, c) -> "LinMap":
        return scale(self, c)


def shape_str(f: LinMap) -> str:
    dom = "⊗".join(s.name for s in f.domain) or "K"
    cod = "⊗".join(s.name for s in f.codomain) or "K"
    return f"{dom} -> {cod}"


def _check_field(*maps: LinMap):
    fields = {m.field for m in maps}
    if len(fields) > 1:
        raise ShapeMismatch("maps live over different fields")
    return maps[0].field


def compose(*maps: LinMap) -> LinMap:
    """``compose(g, f) = g∘f``; more arguments compose right to left."""
    if not maps:
        raise ValueError("compose needs at least one map")
    return reduce(_compose2, maps)


def _compose2(g: LinMap, f: LinMap) -> LinMap:
    if atoms(f.codomain) != atoms(g.domain):
        raise ShapeMismatch(f"cannot compose {shape_str(g)} after {shape_str(f)}")
    fld = _check_field(g, f)
    gcol, fcol = g.col, f.col

    def column(i):
        fi = fcol(i)
        if not fi:
            return _EMPTY
        if len(fi) == 1:
            ((j, a),) = fi.items()
            if a == 1:
                return gcol(j)
            return {k: a * b for k, b in gcol(j).items()}
        acc: dict[int, object] = {}
        for j, a in fi.items():
            for k, b in gcol(j).items():
                acc[k] = acc.get(k, 0) + a * b
        return {k: v for k, v in acc.items() if v}

    return LinMap(f.domain, g.codomain, field=fld, colfn=column)


def tensor(*maps: LinMap, field=None) -> LinMap:
    """Kronecker product with factor lists concatenated; ``tensor()`` is id_K."""
    if not maps:
        return identity((), field or Q)
    return reduce(_tensor2, maps)


def _tensor2(f: LinMap, g: LinMap) -> LinMap:
    fld = _check_field(f, g)
    gin, gout = g.ncols, g.nrows
    fcol, gcol = f.col, g.col
    if gin == 1 and gout == 1:
        g0 = gcol(0).get(0, 0)
        if g0 == 1:
            return LinMap(f.domain + g.domain, f.codomain + g.codomain, field=fld, colfn=fcol, cache=False)
    if f.ncols == 1 and f.nrows == 1 and fcol(0).get(0, 0) == 1:
        return LinMap(f.domain + g.domain, f.codomain + g.codomain, field=fld, colfn=gcol, cache=False)

    def column(i):
        a, b = divmod(i, gin)
        ca = fcol(a)
        if not ca:
            return _EMPTY
        cb = gcol(b)
        if not cb:
            return _EMPTY
        if len(ca) == 1:
            ((ja, va),) = ca.items()
            base = ja * gout
            if va == 1:
                return {base + jb: vb for jb, vb in cb.items()}
            return {base + jb: va * vb for jb, vb in cb.items()}
        if len(cb) == 1:
            ((jb, vb),) = cb.items()
            if vb == 1:
                return {ja * gout + jb: va for ja, va in ca.items()}
        return {ja * gout + jb: va * vb for ja, va in ca.items() for jb, vb in cb.items()}

    return LinMap(f.domain + g.domain, f.codomain + g.codomain, field=fld, colfn=column, cache=False)


def identity(spaces: Sequence[BasedSpace] | BasedSpace, field=Q) -> LinMap:
    if isinstance(spaces, BasedSpace):
        spaces = (spaces,)
    one = field.one
    return LinMap(spaces, spaces, field=field, colfn=lambda i: {i: one}, cache=False)


def swap(X: BasedSpace | Sequence[BasedSpace], Y: BasedSpace | Sequence[BasedSpace], field=Q) -> LinMap:
    """The symmetry ``c_{X,Y}: X⊗Y -> Y⊗X``; either side may be K (an empty list)."""
    xs = (X,) if isinstance(X, BasedSpace) else tuple(X)
    ys = (Y,) if isinstance(Y, BasedSpace) else tuple(Y)
    dy = size(ys)
    dx = size(xs)
    one = field.one

    def column(i):
        a, b = divmod(i, dy)
        return {b * dx + a: one}

    return LinMap(xs + ys, ys + xs, field=field, colfn=column, cache=False)


def permute(spaces: Sequence[BasedSpace], order: Sequence[int], field=Q) -> LinMap:
    """Reorder tensor factors: output factor ``k`` is input factor ``order[k]``."""
    spaces = tuple(spaces)
    if sorted(order) != list(range(len(spaces))):
        raise ValueError(f"{order} is not a permutation")
    out_spaces = tuple(spaces[k] for k in order)
    one = field.one
    dims = [s.dim for s in spaces]
    out_dims = [s.dim for s in out_spaces]
    # output stride of each input factor
    ostride = [0] * len(spaces)
    acc = 1
    for pos in range(len(order) - 1, -1, -1):
        ostride[order[pos]] = acc
        acc *= out_dims[pos]
    steps = list(zip(reversed(dims), reversed(ostride)))

    def column(i):
        j = 0
        for d, st in steps:
            i, r = divmod(i, d)
            j += r * st
        return {j: one}

    return LinMap(spaces, out_spaces, field=field, colfn=column, cache=False)


def zero_map(domain, codomain, field=Q) -> LinMap:
    return LinMap(domain, codomain, {}, field)


def scale(f: LinMap, c) -> LinMap:
    c = f.field(c)
    if not c:
        return zero_map(f.domain, f.codomain, f.field)
    return LinMap(f.domain, f.codomain, {i: {j: c * v for j, v in col.items()} for i, col in f.columns().items()}, f.field)


def add(*maps: LinMap) -> LinMap:
    first = maps[0]
    fld = _check_field(*maps)
    for m in maps[1:]:
        if not m.same_shape(first):
            raise ShapeMismatch(f"cannot add {shape_str(first)} and {shape_str(m)}")
    cols: dict[int, dict[int, object]] = {}
    for m in maps:
        for i, col in m.columns().items():
            acc = cols.setdefault(i, {})
            for j, v in col.items():
                acc[j] = acc.get(j, 0) + v
    return LinMap(first.domain, first.codomain, cols, fld)


def basis_vector(spaces: Sequence[BasedSpace], labels: Sequence[str] | Sequence[int], field=Q) -> LinMap:
    """The element ``K -> ⊗spaces`` picking one basis tensor."""
    spaces = tuple(spaces)
    idx = [s.index(l) if isinstance(l, str) else l for s, l in zip(spaces, labels)]
    return LinMap((), spaces, {0: {ravel(idx, spaces): field.one}}, field)


# ---------------------------------------------------------------------------
# exact linear algebra (sympy DomainMatrix does the elimination)


def _to_dm(f: LinMap) -> DomainMatrix:
    fld = f.field
    rows: dict[int, dict[int, object]] = {}
    for i, col in f.columns().items():
        for j, v in col.items():
            rows.setdefault(j, {})[i] = fld.to_domain(v)
    return DomainMatrix(rows, (f.nrows, f.ncols), fld.domain)


def _rows_of(dm: DomainMatrix) -> dict[int, dict[int, object]]:
    return dm.to_sdm()


def rank(f: LinMap) -> int:
    return _to_dm(f).rank()


def invert(f: LinMap) -> LinMap:
    """Exact two-sided inverse; raises NotInvertible with the rank found."""
    n = f.ncols
    if n != f.nrows:
        raise ShapeMismatch(f"invert needs a square map, got {shape_str(f)}")
    fld = f.field
    dm = _to_dm(f)
    # Gauss-Jordan on [f | id]
    aug = dm.hstack(DomainMatrix.eye(n, fld.domain).to_sparse())
    R, pivots = aug.rref()
    r = sum(1 for p in pivots if p < n)
    if r < n:
        raise NotInvertible(r, n)
    cols: dict[int, dict[int, object]] = {}
    for row, entries in _rows_of(R).items():
        for c, v in entries.items():
            if c >= n and v:
                cols.setdefault(c - n, {})[row] = fld.from_domain(v)
    return LinMap(f.codomain, f.domain, cols, fld)


def solve_right(A: LinMap, b: LinMap) -> LinMap:
    """A particular ``x`` with ``A∘x = b`` (free unknowns set to zero)."""
    if atoms(A.codomain) != atoms(b.codomain):
        raise ShapeMismatch(f"solve_right: {shape_str(A)} against {shape_str(b)}")
    fld = _check_field(A, b)
    n = A.ncols
    aug = _to_dm(A).hstack(_to_dm(b))
    R, pivots = aug.rref()
    if any(p >= n for p in pivots):
        raise NoSolution("inconsistent linear system")
    cols: dict[int, dict[int, object]] = {}
    rows = _rows_of(R)
    for row, p in enumerate(pivots):
        for c, v in rows.get(row, {}).items():
            if c >= n and v:
                cols.setdefault(c - n, {})[p] = fld.from_domain(v)
    return LinMap(b.domain, A.domain, cols, fld)


def split_idempotent(q: LinMap, name: str | None = None) -> tuple[LinMap, LinMap, BasedSpace]:
    """Factor an idempotent as ``q = i∘p`` with ``p∘i = id_Z``.

    The image basis is the set of pivot columns of q (smallest indices
    first), so Z is spanned by ``q(e_k)`` for those k and ``p`` is the
    nonzero part of the reduced row echelon form of q.
    """
    if atoms(q.domain) != atoms(q.codomain):
        raise ShapeMismatch("an idempotent must be an endomorphism")
    if compose(q, q) != q:
        raise NotIdempotent("q∘q differs from q")
    fld = q.field
    R, pivots = _to_dm(q).rref()
    if not pivots:
        raise ValueError("the zero idempotent has no image to split onto")
    labels = [("⊗".join(labels_of(p, q.domain))) for p in pivots]
    Z = BasedSpace(name or f"im({'⊗'.join(s.name for s in q.domain)})", tuple(labels))
    qcols = q.columns()
    i_map = LinMap((Z,), q.codomain, {k: dict(qcols.get(p, {})) for k, p in enumerate(pivots)}, fld)
    rows = _rows_of(R)
    pcols: dict[int, dict[int, object]] = {}
    for k in range(len(pivots)):
        for c, v in rows.get(k, {}).items():
            if v:
                pcols.setdefault(c, {})[k] = fld.from_domain(v)
    p_map = LinMap(q.domain, (Z,), pcols, fld)
    return p_map, i_map, Z


def dense_matrix(f: LinMap) -> list[list]:
    return f.to_dense()


def iter_basis(spaces: Sequence[BasedSpace]) -> Iterator[tuple[int, tuple[int, ...]]]:
    for i in range(size(spaces)):
        yield i, unravel(i, spaces)
