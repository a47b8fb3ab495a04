from fractions import Fraction

import pytest

from hopfq.exactlin import (
    BasedSpace,
    LinMap,
    NoSolution,
    NotIdempotent,
    NotInvertible,
    PrimeField,
    Q,
    ShapeMismatch,
    compose,
    field_from_name,
    identity,
    invert,
    permute,
    rank,
    solve_right,
    split_idempotent,
    swap,
    tensor,
    zero_map,
)

from . import oracles

X2 = BasedSpace.make("X2", ["a", "b"])
X3 = BasedSpace.make("X3", ["p", "q", "r"])
X4 = BasedSpace.make("X4", ["e0", "e1", "e2", "e3"])


def dense_map(dom, cod, rows):
    """LinMap whose matrix (rows indexed by codomain) is ``rows``."""
    cols = {}
    for j, row in enumerate(rows):
        for i, v in enumerate(row):
            if v:
                cols.setdefault(i, {})[j] = Fraction(v)
    return LinMap(dom, cod, cols)


class TestFields:
    def test_rationals_reduce(self):
        assert Q("6/4") == Fraction(3, 2)
        assert Q.format(Fraction(-6, 4)) == "-3/2"
        assert Q.format(Fraction(5)) == "5"

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Q(0.5)
        with pytest.raises(ValueError):
            Q.parse("0.5")

    def test_prime_field(self):
        F = PrimeField(7)
        assert F.format(F(Fraction(1, 2))) == "4"
        assert F(3) * F(5) == F(1)
        assert field_from_name("p/7") == F
        with pytest.raises(ValueError):
            PrimeField(9)


class TestCompose:
    def test_identity_is_neutral(self):
        f = dense_map((X2,), (X3,), [[1, 2], [0, -1], [3, 0]])
        assert compose(identity(X3), f) == f
        assert compose(f, identity(X2)) == f

    def test_matches_dense_product(self):
        f = dense_map((X3,), (X3,), [[1, 0, 2], [0, Fraction(1, 3), 0], [-1, 1, 0]])
        g = dense_map((X3,), (X3,), [[0, 1, 0], [2, 0, 0], [0, 0, Fraction(-5, 2)]])
        assert compose(g, f).to_dense() == oracles.matmul(g.to_dense(), f.to_dense())

    def test_shape_mismatch(self):
        f = identity(X2)
        with pytest.raises(ShapeMismatch):
            compose(f, identity(X3))


class TestTensor:
    def test_empty_factor_neutral(self):
        f = dense_map((X2,), (X3,), [[1, 2], [0, -1], [3, 0]])
        assert tensor(identity(()), f) == f

    def test_kronecker(self):
        f = dense_map((X2,), (X2,), [[1, 2], [3, 4]])
        g = dense_map((X3,), (X3,), [[0, 1, 0], [1, 0, 1], [2, 0, 0]])
        assert tensor(f, g).to_dense() == oracles.kron(f.to_dense(), g.to_dense())

    def test_unit_tensor_unit(self):
        u = LinMap((), (X2,), {0: {0: Fraction(1)}})
        assert tensor(u, u).entries == {((), (0, 0)): 1}


class TestSwap:
    def test_swap_with_k_is_identity(self):
        assert swap((), X3) == identity(X3)
        assert swap(X3, ()) == identity(X3)

    def test_involution(self):
        assert compose(swap(X2, X2), swap(X2, X2)) == identity((X2, X2))

    def test_entry_count_and_dense(self):
        s = swap(X2, X3).materialize()
        assert s.nnz() == 6
        assert s.to_dense() == oracles.swap_matrix(2, 3)

    def test_permute_matches_swaps(self):
        # (x, y, z) -> (z, x, y)
        p = permute((X2, X3, X2), (2, 0, 1))
        via_swaps = compose(swap((X2, X3), X2))
        assert p == via_swaps


class TestInvert:
    def test_identity(self):
        assert invert(identity(X3)) == identity(X3)

    def test_rank_deficient(self):
        with pytest.raises(NotInvertible) as info:
            invert(zero_map((X2,), (X2,)))
        assert info.value.rank == 0

    def test_random_5x5_by_substitution(self):
        X5 = BasedSpace.make("X5", "abcde")
        rows = [[2, 1, 0, 0, 3], [0, 1, -1, 0, 0], [1, 0, 0, 4, 0], [0, 0, 1, 1, 1], [5, 0, 0, 0, Fraction(1, 2)]]
        f = dense_map((X5,), (X5,), rows)
        finv = invert(f)
        assert oracles.is_identity(oracles.matmul(f.to_dense(), finv.to_dense()))
        assert compose(finv, f) == identity(X5)


class TestSolve:
    def test_identity_system(self):
        b = LinMap((), (X3,), {0: {0: Fraction(2), 2: Fraction(-1)}})
        assert solve_right(identity(X3), b) == b

    def test_inconsistent(self):
        A = dense_map((X2,), (X2,), [[1, 1], [1, 1]])
        b = LinMap((), (X2,), {0: {0: Fraction(1)}})
        with pytest.raises(NoSolution):
            solve_right(A, b)


class TestSplitIdempotent:
    def test_identity(self):
        p, i, Z = split_idempotent(identity(X3))
        assert Z.dim == 3
        assert compose(p, i) == identity(Z)
        assert compose(i, p) == identity(X3)

    def test_rank_two_on_dim_four(self):
        # q = M∘N with N∘M = id₂
        M = [[1, 0], [0, 1], [1, 1], [2, -1]]
        N = [[1, 0, 0, 0], [0, 1, 0, 0]]
        assert oracles.is_identity(oracles.matmul(N, M))
        q = dense_map((X4,), (X4,), oracles.matmul(M, N))
        p, i, Z = split_idempotent(q)
        assert Z.dim == 2 == rank(q)
        assert compose(p, i) == identity(Z)
        assert compose(i, p) == q

    def test_not_idempotent(self):
        with pytest.raises(NotIdempotent):
            split_idempotent(dense_map((X2,), (X2,), [[2, 0], [0, 1]]))
