import json

import pytest

from hopfq import deform, laws
from hopfq.exactlin import tensor

from . import oracles


class TestExpressions:
    def test_parse_precedence(self):
        # '@' binds tighter than '*'
        assert laws.parse("f * g @ h") == laws.parse("f * (g @ h)")

    def test_parse_error(self):
        with pytest.raises(laws.ParseError):
            laws.parse("mu * (H @")

    def test_missing_slot(self, H4):
        with pytest.raises(laws.MissingSlot):
            laws.build("sigma * delta", H4)

    def test_swap_and_unit_names(self, H4):
        m = laws.build("c(H,H) * c(H,H)", H4)
        assert m == laws.build("H @ H", H4)
        assert laws.build("K", H4).domain == ()

    def test_suffixed_names(self, A, H4):
        m = laws.build("eps_A @ eps_H", {"A": A, "H": H4})
        assert m == tensor(A.counit, H4.counit)


class TestCheckLaw:
    def test_comult_unit_taft(self, H4):
        assert laws.check_law("comult-unit", H4).passed

    def test_associativity_witness_matches_scan(self, A, ms32):
        rep = laws.check_law("associativity", A)
        assert not rep.passed
        t = ms32.mul
        a, b, c = oracles.first_nonassoc(t)
        lab = ms32.labels
        assert rep.witness["input"] == [lab[a], lab[b], lab[c]]
        outs = sorted({t[t[a][b]][c], t[a][t[b][c]]})
        assert rep.witness["output"] == [lab[outs[0]]]
        assert {rep.witness["lhs"], rep.witness["rhs"]} == {"0", "1"}

    def test_trivial_cocycle(self, H4):
        e = tensor(H4.counit, H4.counit)
        rep = laws.check_law("cocycle", H4, {"sigma": e, "sigma_inv": e})
        assert rep.passed and rep.witness is None

    def test_rename_labels_report(self, H4):
        rep = laws.check_law("unit-left", {"D": H4}, rename={"H": "D"})
        assert rep.passed and rep.law == "unit-left[H=D]"

    def test_unknown_law(self, H4):
        with pytest.raises(KeyError):
            laws.check_law("no-such-law", H4)

    def test_report_json(self, A):
        rep = laws.check_law("associativity", A)
        d = rep.to_json()
        assert set(d) == {"law", "pass", "witness"}
        assert set(d["witness"]) == {"input", "output", "lhs", "rhs"}
        json.dumps(d)


class TestSuites:
    def test_taft_hopf_algebra(self, H4):
        assert laws.all_pass(laws.verify_suite(H4, "hopf-algebra"))

    def test_ms32_hqg_but_not_hopf(self, A):
        assert laws.all_pass(laws.verify_suite(A, "hqg"))
        bad = [r.law for r in laws.verify_suite(A, "hopf-algebra") if not r.passed]
        assert bad == ["associativity"]

    def test_bowtie_hqg(self, bowtie_B):
        assert laws.all_pass(laws.verify_suite(bowtie_B, "hqg"))

    def test_stop_on_failure(self, A):
        reps = laws.verify_suite(A, "hopf-algebra", stop_on_failure=True)
        assert not reps[-1].passed
        assert len(reps) < len(laws.suite_laws("hopf-algebra"))

    def test_only_class_suites_recorded(self, H4):
        fresh = H4.with_()
        e = tensor(H4.counit, H4.counit)
        laws.verify_suite(fresh, "cocycle", {"sigma": e, "sigma_inv": e})
        assert fresh.verified == set()
        laws.verify_suite(fresh, "bimonoid")
        assert fresh.verified == {"bimonoid"}

    def test_unknown_suite(self, H4):
        with pytest.raises(KeyError):
            laws.verify_suite(H4, "nope")

    def test_every_suite_entry_exists(self):
        for name, entries in laws.SUITES.items():
            for law_id, _ in entries:
                assert law_id in laws.LAWS, (name, law_id)


def test_division_derived_suites(A):
    for s in ("left-division-derived", "right-division-derived"):
        assert laws.all_pass(laws.verify_suite(A, s))


def test_cocycle_helpers_agree(H4):
    cyc = deform.trivial_cocycle(H4)
    assert laws.all_pass(deform.cocycle_consequences(cyc))
