import json
import math
import pathlib

import numpy as np
import pytest

import biortho_m as bm

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def scalar_params(h=10.0, c=0.5, upsilon=1, n=1):
    return bm.ParamSet(np.array([[h]], dtype=complex), np.array([[c]], dtype=complex), upsilon, n)


def test_first_family_degree_one():
    p = scalar_params()
    coeffs = bm.m_first(p, 1)
    assert len(coeffs) == 2
    assert coeffs[0][0, 0] == pytest.approx(-1.5)
    assert coeffs[1][0, 0] == pytest.approx(8.0)
    assert bm.eval(p, 1, 0.0)[0, 0] == pytest.approx(-1.5)


def test_eval_matches_coefficients_and_hypergeometric_form():
    p = bm.ParamSet.load(str(FIXTURES / "full_u2.json"))
    coeffs = bm.m_first(p, 3)
    u = 0.7
    horner = sum(a * u**k for k, a in enumerate(coeffs))
    np.testing.assert_allclose(bm.eval(p, 3, u), horner, rtol=1e-12, atol=1e-12 * np.abs(horner).max())
    hyp = bm.m_first_hypergeometric(p, 3, u)
    np.testing.assert_allclose(hyp, horner, rtol=1e-9, atol=1e-9 * np.abs(horner).max())


def test_scalar_norm_matches_gamma_formula():
    h, c, n = 10.0, 0.5, 1
    p = scalar_params(h, c, 1, 1)
    ref = math.exp(math.lgamma(n + 1) + math.lgamma(h - n) + math.lgamma(c + n + 1) - math.lgamma(h + c - n)) / (
        h - 2 * n - 1
    )
    assert bm.biorth_closed(p, 1)[0, 0].real == pytest.approx(ref, rel=1e-12)
    assert bm.biorth_numeric(p, 1, 1)[0, 0].real == pytest.approx(ref, rel=1e-10)
    assert abs(bm.biorth_numeric(p, 1, 0)[0, 0]) < 1e-10 * ref


def test_special_functions():
    s = np.diag([1.5, 2.25]).astype(complex)
    g = bm.gamma_matrix(s)
    assert g[0, 0].real == pytest.approx(math.gamma(1.5))
    np.testing.assert_allclose(bm.pochhammer(s, 3), s @ (s + np.eye(2)) @ (s + 2 * np.eye(2)))
    w = bm.weight_integral(np.array([[3.0]], dtype=complex), np.array([[0.0]], dtype=complex))
    assert w[0, 0].real == pytest.approx(0.5)
    f = bm.hypergeometric_pfq([np.array([[-1.0]])], [np.array([[2.0]])], 3.0)
    assert f[0, 0].real == pytest.approx(1 - 3.0 / 2.0)


def test_validation_error_carries_condition():
    with pytest.raises(bm.ValidationError) as info:
        scalar_params(h=3.0, n=4)
    assert info.value.condition == "spectrum_H"
    assert isinstance(info.value, ValueError)
    with pytest.raises(bm.DomainError):
        bm.m_first(scalar_params(), 3)


def test_run_suite_subset():
    p = bm.ParamSet.from_json((FIXTURES / "diag_u3.json").read_text())
    reports = bm.run_suite(p, identities=["biorth", "ode"], max_n=2)
    assert len(reports) == 9 + 3
    assert all(r["passed"] for r in reports)
    assert {r["identity_id"] for r in reports} == {"biorth", "ode"}
    assert reports[0]["params_digest"] == p.digest
    with pytest.raises(ValueError):
        bm.run_suite(p, identities=["nope"])


def test_identity_names():
    names = bm.identities()
    assert "rec4" in names and "integral_rep" in names
    assert json.dumps(names)
