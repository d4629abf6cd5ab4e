import math

import numpy as np
import pytest

import ptweyl


def test_scarf_partners_are_conjugate():
    m = ptweyl.ScarfModel(1.0, 1.0)
    x = np.linspace(-5, 5, 101)
    np.testing.assert_allclose(m.v1(x), np.conj(m.v2(x)), atol=1e-14)
    assert m.v1(np.array([0.0]))[0] == pytest.approx(-1.0)


def test_closed_form_ground_state_matches_oracle():
    p = ptweyl.NUProblem(-1.0, -1j, 1.0)
    e = p.energy("k2", 0)
    assert e == pytest.approx(-0.25)
    assert p.normalizable_levels("k2") == 1
    numeric = ptweyl.bound_spectrum(lambda x: complex(p.potential(np.array([x]))[0]), l=15.0, n=1501)
    assert len(numeric) == 1
    assert abs(numeric[0] - e) < 5e-3


def test_real_limit():
    p = ptweyl.NUProblem(-1.0, 0.0)
    assert p.energy("k2", 0).real == pytest.approx(-((math.sqrt(5) - 1) / 2) ** 2)


def test_dirac_energy_flag():
    plus, minus = ptweyl.dirac_energy(-0.25, 1.0, True)
    assert abs(plus.imag) < 1e-12 and abs(abs(plus.real) - 0.5) < 1e-12
    plus, _ = ptweyl.dirac_energy(-0.25)
    assert plus == pytest.approx(0.5j)


def test_constraints():
    sols = ptweyl.solve_constraints(1.0, 1.0)
    assert [(s.b1.real, s.s.real) for s in sols] == [(0, -1), (1, 1), (-0.5, -0.5), (1.5, 0.5)]
    assert all(abs(s.residual_product) < 1e-12 and abs(s.residual_sum) < 1e-12 for s in sols)


def test_pdfv_simplified():
    x = np.linspace(-5, 5, 201)
    v = ptweyl.eff_potential("real", 1.0, 1.0, 1.0, 2, x, "simplified")
    np.testing.assert_allclose(v, np.tanh(x) / np.cosh(x), atol=1e-12)


def test_invalid_model_raises():
    with pytest.raises(ValueError):
        ptweyl.ScarfModel(1.0, 0.0)


def test_cli_in_process():
    code, out, err = ptweyl.cli(["constraints"])
    assert code == 0
    assert "equals_v1" in out
    code, _, _ = ptweyl.cli(["spectrum", "--nmax", "-1"])
    assert code == 2


def test_check_runner():
    r = ptweyl.run_check("factorization")
    assert r["pass"]
