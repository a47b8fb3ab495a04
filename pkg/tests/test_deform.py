from fractions import Fraction

import pytest

from hopfq import deform, laws, loops, pairing
from hopfq.exactlin import LinMap, Q, compose, scale, tensor

from . import oracles


def functional(H, values):
    """ε⊗ε plus the given {(i, j): v} overrides on basis pairs."""
    n = H.dim
    base = tensor(H.counit, H.counit).materialize()
    cols = {k: dict(v) for k, v in base.columns().items()}
    for (i, j), v in values.items():
        cols[i * n + j] = {0: Fraction(v)}
    return LinMap(base.domain, (), cols, Q)


class TestMakeCocycle:
    def test_trivial(self, H4):
        cyc = deform.trivial_cocycle(H4)
        assert cyc.sigma == cyc.sigma_inv == tensor(H4.counit, H4.counit)
        assert laws.all_pass(cyc.reports)

    def test_inverse_derived(self, H4):
        e = tensor(H4.counit, H4.counit)
        cyc = deform.make_cocycle(H4, e)
        assert cyc.sigma_inv == e

    def test_auto_normalize(self, H4):
        five = scale(tensor(H4.counit, H4.counit), Fraction(5))
        with pytest.raises(deform.NotNormal):
            deform.make_cocycle(H4, five)
        cyc = deform.make_cocycle(H4, five, auto_normalize=True)
        assert cyc.sigma == tensor(H4.counit, H4.counit)
        assert cyc.provenance["original_sigma"] == five.materialize()

    def test_zero_not_invertible(self, H4):
        with pytest.raises(deform.NotInvertible):
            deform.make_cocycle(H4, LinMap((H4.space, H4.space), (), {}, Q))

    def test_wrong_inverse(self, H4):
        e = tensor(H4.counit, H4.counit)
        with pytest.raises(deform.NotInvertible):
            deform.make_cocycle(H4, e, sigma_inv=scale(e, Fraction(2)))

    @pytest.mark.parametrize(
        "values, witness",
        [
            ({(2, 2): 1}, ["x", "y", "y"]),
            ({(1, 2): 1}, ["x", "x", "y"]),
            ({(2, 3): 1}, ["x", "y", "w"]),
        ],
    )
    def test_not_a_cocycle(self, H4, values, witness):
        with pytest.raises(deform.NotACocycle) as info:
            deform.make_cocycle(H4, functional(H4, values))
        assert info.value.report.witness["input"] == witness

    def test_consequences(self, H4):
        cyc = deform.make_cocycle(H4, functional(H4, {(1, 1): 2}))
        assert laws.all_pass(deform.cocycle_consequences(cyc))


class TestDeform:
    def test_trivial_is_identity(self, H4):
        S = deform.deform(H4, deform.trivial_cocycle(H4))
        assert S.mul == H4.mul
        assert S.lantipode == H4.lantipode and S.rantipode == H4.rantipode
        assert "hopf-algebra" in S.verified

    def test_group_like_cocycle_on_h4(self, H4):
        cyc = deform.make_cocycle(H4, functional(H4, {(1, 1): 2}))
        S = deform.deform(H4, cyc)
        assert "hopf-algebra" in S.verified and S.mul != H4.mul
        assert S.comul == H4.comul and S.counit == H4.counit
        assert laws.all_pass(deform.deformation_reports(H4, S, cyc))

    def test_sign_pairing_deformation(self, sign_pairing):
        T = pairing.tensor_hqg(sign_pairing.A, sign_pairing.H)
        omega = pairing.pairing_to_cocycle(sign_pairing, T)
        S = deform.deform(T, omega)
        assert T.dim == 8 and "hopf-algebra" in S.verified
        assert S.mul != T.mul
        assert laws.all_pass(deform.deformation_reports(T, S, omega))
        aux = deform.aux_functionals(T, omega)
        for k in ("f", "finv", "g", "ginv"):
            assert compose(aux[k], T.unit).col(0) == {0: 1}

    def test_strict_precursor(self):
        # the non-IP order-five loop has divisions but λ∗id ≠ ε⊗η
        t = oracles.first_non_ip_nonassoc_loop(5)
        H = loops.loop_algebra(loops.loop_from_table(t, one_based=False))
        assert not laws.check_law("lam-conv-id", H).passed
        cyc = deform.trivial_cocycle(H)
        with pytest.raises(deform.PrecursorLawFails):
            deform.deform(H, cyc)
        S = deform.deform(H, cyc, strict=False)
        assert S.ldiv is None and S.mul == H.mul

    def test_rejects_foreign_cocycle(self, H4, Z2):
        with pytest.raises(ValueError):
            deform.deform(Z2, deform.trivial_cocycle(H4))
