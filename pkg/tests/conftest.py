from fractions import Fraction

import pytest

from hopfq import catalog, loops, pairing, qtyd
from hopfq.exactlin import LinMap, Q

# criterion number -> (passed, one-line summary); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def H4():
    return catalog.taft4()


@pytest.fixture(scope="session")
def ms32():
    return catalog.ms32()


@pytest.fixture(scope="session")
def A():
    return catalog.ms32_algebra()


@pytest.fixture(scope="session")
def tau_pairing(A, H4):
    return pairing.make_skew_pairing(A, H4, catalog.tau_sign_map(A, H4))


@pytest.fixture(scope="session")
def bowtie_B(tau_pairing):
    return pairing.bowtie(tau_pairing, check_deformation=False)


@pytest.fixture(scope="session")
def Z2():
    return loops.loop_algebra(loops.cyclic(2))


@pytest.fixture(scope="session")
def sign_pairing(Z2, H4):
    """τ(g^a ⊗ x) = (−1)^a, τ(g^a ⊗ 1) = 1, zero on y and w."""
    cols = {}
    for a in range(2):
        cols[a * 4] = {0: Fraction(1)}
        cols[a * 4 + 1] = {0: Fraction(-1 if a else 1)}
    return pairing.make_skew_pairing(Z2, H4, LinMap((Z2.space, H4.space), (), cols, Q))


@pytest.fixture(scope="session")
def builtin_chain(tau_pairing, bowtie_B, H4):
    """Projection, split, biproduct and w for R_0 on the builtin pairing."""
    qt = catalog.r_alpha(0, H4)
    proj = qtyd.projection_from_pairing(tau_pairing, qt, bowtie_B)
    sp = qtyd.split_to_yd(proj)
    DH = qtyd.biproduct(sp.D, H4, sp.module)
    iso = qtyd.iso_w(proj, DH)
    return {"qt": qt, "proj": proj, "split": sp, "DH": DH, "iso": iso}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
