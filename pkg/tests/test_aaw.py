import pytest

from qdissect import aaw
from qdissect.aaw import (
    ParamPair,
    compute_L,
    compute_params,
    phi,
    verify_L_identity,
    verify_param_identities,
)
from qdissect.dissect import get_record
from qdissect.eta import expand_expression
from qdissect.series import Series, ZZ


def test_phi_is_theta_series():
    assert phi(10).coeffs == (1, 2, 0, 0, 2, 0, 0, 0, 0, 2)
    assert phi(1).coeffs == (1,)


def test_params_leading_coefficients():
    pair = compute_params(6)
    assert pair.s.coeffs == (1, -2, 4, -2, 2, 0)
    assert pair.t.coeffs == (1, 1, -1, -3, -2, 3)


def test_params_defining_identities():
    n = 64
    pair = compute_params(n)
    ph = phi(n)
    ph3_series = aaw._phi_cubed_q(n)
    # s * phi(q) == phi(q^3)^3
    assert (pair.s * ph).coeffs == (ph3_series ** 3).coeffs
    # 4 q t phi(q^3)^2 == phi(q)^2 - phi(q^3)^2
    lhs = (4 * pair.t * (ph3_series ** 2)).mul_qpow(1).truncate(n)
    rhs = (ph ** 2 - ph3_series ** 2).truncate(n)
    assert lhs.coeffs == rhs.coeffs


def test_compute_params_requires_room():
    with pytest.raises(ValueError):
        compute_params(1)


def test_param_pair_rejects_wrong_leading_terms():
    good = compute_params(8)
    with pytest.raises(ValueError):
        ParamPair(s=good.s.mul_qpow(1).truncate(8), t=good.t)


def test_all_relations_pass():
    n = 64
    reports = verify_param_identities(compute_params(n), n)
    assert [r.name for r in reports] == [
        "f1-parameterization", "f2-parameterization", "f3-parameterization",
        "f4-parameterization", "f6-parameterization", "f12-parameterization",
    ]
    assert all(r.passed for r in reports)


def test_perturbed_t_breaks_first_relation():
    pair = compute_params(32)
    q = Series.zero(ZZ, 32) + Series.one(ZZ, 32).mul_qpow(1).truncate(32)
    bad = ParamPair(s=pair.s, t=pair.t + q)
    reports = verify_param_identities(bad, 32)
    f1_report = reports[0]
    assert not f1_report.passed
    assert f1_report.mismatch.degree == 1


def test_obstruction_series_divisible_by_16():
    L = compute_L(128)
    assert L[0] == 0
    assert all(c % 16 == 0 for c in L.coeffs)


def test_obstruction_matches_catalog_expression():
    n = 64
    rec = get_record("l-obstruction-mod16")
    catalog_form = expand_expression(rec.lhs, n, ZZ)
    assert compute_L(n).coeffs == catalog_form.coeffs


def test_product_identity():
    rep = verify_L_identity(64)
    assert rep.passed
    assert rep.name == "l-product-form"
