import json

import pytest

from hopfq import catalog, core, pairing, qtyd, serial
from hopfq.exactlin import PrimeField


def roundtrip(H, field=None):
    text = serial.dumps(serial.structure_to_json(H))
    return text, serial.structure_from_json(json.loads(text), field)


class TestStructures:
    @pytest.mark.parametrize("key", ["taft4", "ms32-algebra"])
    def test_roundtrip(self, key):
        H = catalog.builtin(key)
        text, K = roundtrip(H)
        for attr in ("mul", "unit", "comul", "counit", "ldiv", "rdiv", "lantipode", "rantipode"):
            assert getattr(K, attr) == getattr(H, attr), attr
        assert serial.dumps(serial.structure_to_json(K)) == text

    def test_product_space_roundtrip(self, Z2, H4):
        T = pairing.tensor_hqg(Z2, H4)
        _, K = roundtrip(T)
        assert K.space == T.space and K.space.factors
        assert K.mul == T.mul

    def test_field_recorded(self):
        H = catalog.taft4(PrimeField(7))
        text, K = roundtrip(H)
        assert json.loads(text)["field"] == "p/7"
        assert K.field == PrimeField(7) and K.mul == H.mul

    def test_loaded_is_unclassified(self, H4):
        _, K = roundtrip(H4)
        assert K.verified == set()
        assert core.classify(K) == "hopf-algebra" and "hopf-algebra" in K.verified

    def test_deterministic(self, A):
        one = serial.dumps(serial.structure_to_json(A))
        two = serial.dumps(serial.structure_to_json(catalog.ms32_algebra()))
        assert one == two and one.endswith("\n")


class TestErrors:
    def base(self, H4):
        return json.loads(serial.dumps(serial.structure_to_json(H4)))

    def test_missing_map(self, H4):
        d = self.base(H4)
        del d["mul"]
        with pytest.raises(serial.FormatError):
            serial.structure_from_json(d)

    def test_index_out_of_range(self, H4):
        d = self.base(H4)
        d["mul"].append([0, 9, 0, "1"])
        with pytest.raises(serial.FormatError):
            serial.structure_from_json(d)

    def test_duplicate_entry(self, H4):
        d = self.base(H4)
        d["mul"].append(list(d["mul"][0]))
        with pytest.raises(serial.FormatError):
            serial.structure_from_json(d)

    def test_dim_mismatch(self, H4):
        d = self.base(H4)
        d["dim"] = 5
        with pytest.raises(serial.FormatError):
            serial.structure_from_json(d)

    def test_float_coefficient(self, H4):
        d = self.base(H4)
        d["mul"][0][-1] = "0.5"
        with pytest.raises(ValueError):
            serial.structure_from_json(d)

    def test_not_a_bundle(self):
        with pytest.raises(serial.FormatError):
            serial.projection_from_json({"kind": "structure"})


def test_functional_and_element(tau_pairing, H4):
    d = serial.functional_to_json(tau_pairing.tau, "A⊗H")
    tau = serial.functional_from_json(json.loads(serial.dumps(d)), tau_pairing.A.space, H4.space)
    assert tau == tau_pairing.tau
    R = catalog.r_alpha_map(H4, "3/5")
    again = serial.element_from_json(json.loads(serial.dumps(serial.element_to_json(R))), H4.space)
    assert again == R


def test_projection_bundle(sign_pairing, H4):
    proj = qtyd.projection_from_pairing(sign_pairing, catalog.r_alpha(1, H4))
    d = json.loads(serial.dumps(serial.projection_to_json(proj)))
    again = serial.projection_from_json(d)
    assert again.strong
    assert again.q == proj.q and again.i == proj.i and again.Z == proj.Z
