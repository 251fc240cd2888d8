import pytest

import garnier


def test_hamiltonian_text():
    h = garnier.hamiltonian(0)
    assert "t0" in h and "eta1" in h
    with pytest.raises(ValueError):
        garnier.hamiltonian(3)


def test_compatibility_pit():
    r = garnier.check_compatibility(0, 1, trials=5, seed=3)
    assert r["verdict"] == "pass"
    assert r["mode"] == "pit"
    assert r["failure_bound"] < 1e-12


def test_compatibility_precondition():
    with pytest.raises(ValueError):
        garnier.check_compatibility(1, 1)


def test_sigma_system_exact():
    r = garnier.verify_sigma_system()
    assert r["verdict"] == "pass" and r["details"]["equations"] == 9


def test_eta_at_unit_point():
    (r,) = garnier.verify_eta(random_points=0)
    assert r["verdict"] == "pass"
    assert float(r["details"]["max_residual"]) < 1e-40


def test_pullback_exact_rational_instance():
    exact, symbolic = garnier.verify_pullback(s=("1/9", 4, 4), branch="+-+")
    assert exact["verdict"] == "pass"
    assert exact["details"]["display_rescaled_by_s2_zero"] is True
    assert exact["details"]["display_literal_zero"] is False
    assert symbolic["verdict"] == "pass"


def test_pullback_irrational_roots_skipped():
    exact, _ = garnier.verify_pullback(s=(4, 1, 1))
    assert exact["verdict"] == "skipped"


def test_tau_sign():
    by_id = {r["check"]: r for r in garnier.tau()}
    assert by_id["tau.closed"]["verdict"] == "pass"
    coeff = by_id["tau.varpi-coefficients"]
    assert coeff["verdict"] == "fail" and "witness" in coeff
    assert coeff["details"]["matches_negated_display"] == [True, True, True]


def test_tau_exponent():
    # F(1,1,1) = 3/2 - 18
    assert abs(float(garnier.tau_exponent((1, 1, 1))) + 16.5) < 1e-12


def test_short_flow():
    r = garnier.flow(2, delta="0.01", tol="1e-16", digits=30)
    assert r["verdict"] == "pass"
    assert float(r["details"]["max_residual"]) < 1e-13


def test_kernel_properties():
    r = garnier.kernel_properties(seed=5)
    assert r["verdict"] == "pass" and r["details"]["failures"] == 0
