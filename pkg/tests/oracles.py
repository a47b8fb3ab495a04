"""
Independent reference computations used to derive the frozen values in the
tests: plain-list dense matrices over Fraction and brute-force searches over
small Latin squares.  Nothing here imports the package's linear algebra.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    assert all(len(r) == k for r in a)
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


def kron(a, b):
    ra, ca, rb, cb = len(a), len(a[0]) if a else 0, len(b), len(b[0]) if b else 0
    return [[a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb)] for i in range(ra * rb)]


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def swap_matrix(dx, dy):
    """Matrix of x⊗y ↦ y⊗x with row-major tensor indexing."""
    m = [[Fraction(0)] * (dx * dy) for _ in range(dx * dy)]
    for a in range(dx):
        for b in range(dy):
            m[b * dx + a][a * dy + b] = Fraction(1)
    return m


def is_identity(m):
    return m == eye(len(m))


# ---------------------------------------------------------------------------
# loops


def loop_tables(n: int):
    """Every Cayley table on {0..n-1} with 0 as two-sided identity, in lexicographic order."""
    rows: list[list[tuple[int, ...]]] = []
    for r in range(1, n):
        rows.append([p for p in permutations(range(n)) if p[0] == r])

    def extend(prefix):
        k = len(prefix)
        if k == n - 1:
            yield [tuple(range(n))] + prefix
            return
        for p in rows[k]:
            if all(p[c] != q[c] for q in prefix for c in range(n)) and all(p[c] != c for c in range(1, n)):
                yield from extend(prefix + [p])

    yield from extend([])


def is_associative(t):
    n = len(t)
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in product(range(n), repeat=3))


def first_nonassoc(t):
    n = len(t)
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return (a, b, c)
    return None


def has_ip(t):
    """Two-sided inverses and u⁻¹(uv) = v = (vu)u⁻¹."""
    n = len(t)
    linv = [next(v for v in range(n) if t[v][u] == 0) for u in range(n)]
    rinv = [next(v for v in range(n) if t[u][v] == 0) for u in range(n)]
    if linv != rinv:
        return False
    return all(t[rinv[u]][t[u][v]] == v and t[t[v][u]][rinv[u]] == v for u in range(n) for v in range(n))


def first_non_ip_nonassoc_loop(n: int = 5):
    for t in loop_tables(n):
        if not is_associative(t) and not has_ip(t):
            return t
    return None


def ldiv_table(t):
    n = len(t)
    out = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            out[u][t[u][v]] = v
    return out


def first_ldiv_formula_failure(t):
    """First (u, v) with u\\v ≠ (u\\e)·v: the basis witness of l = μ∘(λ⊗H) failing."""
    n = len(t)
    ld = ldiv_table(t)
    for u, v in product(range(n), repeat=2):
        if ld[u][v] != t[ld[u][0]][v]:
            return (u, v)
    return None


if __name__ == "__main__":
    t = first_non_ip_nonassoc_loop(5)
    print(t)
    print("nonassoc", first_nonassoc(t), "ldiv-formula", first_ldiv_formula_failure(t))
    print("count loops of order 4:", sum(1 for _ in loop_tables(4)), "order 5:", sum(1 for _ in loop_tables(5)))
