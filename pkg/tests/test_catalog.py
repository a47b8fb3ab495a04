from fractions import Fraction

import pytest

from hopfq import catalog, laws, loops
from hopfq.exactlin import PrimeField, compose, tensor


class TestTaft:
    def test_relations(self, H4):
        mul = H4.mul
        one, x, y, w = range(4)
        assert mul.col(y * 4 + x) == {w: -1}
        assert mul.col(x * 4 + y) == {w: 1}
        assert mul.col(y * 4 + y) == {}
        assert mul.col(x * 4 + x) == {one: 1}

    def test_antipode_order_four(self, H4):
        lam = H4.lantipode
        lam2 = compose(lam, lam)
        assert lam2.col(2) == {2: -1}
        assert compose(lam2, lam2) == H4.id()
        assert compose(H4.counit, lam) == H4.counit

    def test_noncommutative_noncocommutative(self, H4):
        assert not laws.check_law("commutativity", H4).passed
        assert not laws.check_law("cocommutativity", H4).passed

    def test_prime_field(self):
        H = catalog.taft4(PrimeField(5))
        assert "hopf-algebra" in H.verified
        assert H.lantipode.col(2) == {3: PrimeField(5).one}


class TestRAlpha:
    def test_r0_entries(self, H4):
        R = catalog.r_alpha_map(H4, 0)
        assert R.nnz() == 4
        assert R.col(0) == {0: Fraction(1, 2), 1: Fraction(1, 2), 4: Fraction(1, 2), 5: Fraction(-1, 2)}

    def test_nilpotent_part(self, H4):
        y, w = 2, 3
        R = catalog.r_alpha_map(H4, 2)
        col = R.col(0)
        assert col[y * 4 + y] == 1 and col[y * 4 + w] == 1
        assert col[w * 4 + y] == -1 and col[w * 4 + w] == 1

    def test_counit_slices(self, H4):
        # (ε⊗H)∘R = (H⊗ε)∘R = η
        for alpha in catalog.DEFAULT_ALPHAS:
            R = catalog.r_alpha_map(H4, alpha)
            assert compose(tensor(H4.counit, H4.id()), R) == H4.unit
            assert compose(tensor(H4.id(), H4.counit), R) == H4.unit


class TestBuiltins:
    def test_ms32_algebra(self, A):
        assert A.dim == 12 and catalog.ms32_algebra() is not A

    def test_lookup(self):
        assert catalog.builtin("cyclic", n=3).order == 3
        assert catalog.builtin("s3").order == 6
        assert loops.is_group(catalog.builtin("s3"))
        with pytest.raises(KeyError):
            catalog.builtin("nope")

    def test_every_key_builds(self):
        for key in catalog.BUILTINS:
            assert catalog.builtin(key) is not None
