"""Skew-normal core: density, tail-stable cdf, quantile, sampler."""

import math

import numpy as np
import pytest

from betasn import (
    KS_COEFF_01,
    Normal,
    SkewNormal,
    chisq1_cdf,
    ks_statistic,
    norm_cdf,
    norm_logcdf,
    norm_pdf,
    norm_quantile,
    owen_t,
    sn_neg_closure_check,
)

GRID = np.linspace(-6.0, 6.0, 401)
LAM_LATTICE = (0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 10.0, -10.0)


def test_pdf_matches_defining_formula():
    for lam in (0.0, 1.5, -3.0):
        for xi, psi in ((0.0, 1.0), (-0.7, 2.5)):
            d = SkewNormal(xi, psi, lam)
            z = (GRID - xi) / psi
            direct = 2.0 / psi * norm_pdf(z) * norm_cdf(lam * z)
            assert np.max(np.abs(d.pdf(GRID) - direct)) < 1e-14


def test_cdf_is_phi_minus_two_owen():
    for lam in (0.7, -2.0, 5.0):
        d = SkewNormal(0.0, 1.0, lam)
        direct = norm_cdf(GRID) - 2.0 * owen_t(GRID, lam)
        assert np.max(np.abs(d.cdf(GRID) - direct)) < 1e-13


@pytest.mark.parametrize("lam", LAM_LATTICE)
def test_cdf_identities(lam):
    d = SkewNormal(0.0, 1.0, lam)
    neg = SkewNormal(0.0, 1.0, -lam)
    # survival through the negated shape
    assert np.max(np.abs(1.0 - d.cdf(-GRID) - neg.cdf(GRID))) < 1e-12
    # complement pair sums to twice the normal cdf
    assert np.max(np.abs(d.cdf(GRID) + neg.cdf(GRID) - 2.0 * norm_cdf(GRID))) < 1e-12


def test_cdf_squares_at_unit_shape():
    d = SkewNormal(0.0, 1.0, 1.0)
    assert np.max(np.abs(d.cdf(GRID) - norm_cdf(GRID) ** 2)) < 1e-12
    assert abs(d.cdf(0.0) - 0.25) < 1e-15


def test_negation_closure():
    for lam in (0.0, 0.5, 2.0, 10.0):
        assert sn_neg_closure_check(lam)


def test_normal_special_case():
    d = SkewNormal(0.3, 2.0, 0.0)
    n = Normal(0.3, 2.0)
    assert np.max(np.abs(d.pdf(GRID) - n.pdf(GRID))) < 1e-15
    assert np.max(np.abs(d.cdf(GRID) - n.cdf(GRID))) < 1e-14
    q = np.linspace(0.01, 0.99, 99)
    assert np.max(np.abs(d.quantile(q) - n.quantile(q))) < 1e-14


def test_tail_stability():
    d = SkewNormal(0.0, 1.0, 2.0)
    # plain cdf/sf underflow gracefully rather than losing the sign
    assert 0.0 <= d.cdf(-40.0) < 1e-300
    assert 0.0 < d.sf(12.0) < 1e-30
    # the log forms stay finite long after the plain values underflow;
    # the short tail decays like exp(-z^2 (1 + lam^2) / 2)
    assert np.isfinite(d.logcdf(-40.0))
    assert np.isfinite(d.logsf(40.0))
    assert -4020.0 < d.logcdf(-40.0) < -4000.0
    # lam = 0 deep tail must agree exactly with the plain normal
    flat = SkewNormal(0.0, 1.0, 0.0)
    assert abs(flat.logcdf(-40.0) - norm_logcdf(-40.0)) < 1e-12
    # lam < 0 deep tail saturates at twice the normal mass
    heavy = SkewNormal(0.0, 1.0, -2.0)
    assert abs(heavy.logcdf(-40.0) - (math.log(2.0) + norm_logcdf(-40.0))) < 1e-3
    # two routes to the same tail: log(sf) vs logsf where sf > 0
    assert abs(d.logsf(12.0) - math.log(d.sf(12.0))) < 1e-12
    # skew factor saturates on the right: 1 - F(z; lam>0) ~ 2 Phi(-z)
    assert abs(d.logsf(12.0) - (math.log(2.0) + math.log(norm_cdf(-12.0)))) < 1e-2


def test_quantile_roundtrip():
    q = np.linspace(0.001, 0.999, 999)
    for lam in (0.0, 1.0, -1.0, 4.0):
        d = SkewNormal(0.5, 1.5, lam)
        assert np.max(np.abs(d.cdf(d.quantile(q)) - q)) < 1e-10
    with pytest.raises(ValueError):
        SkewNormal(0.0, 1.0, 1.0).quantile(0.0)
    with pytest.raises(ValueError):
        SkewNormal(0.0, 1.0, 1.0).quantile(1.2)


def test_parameter_validation():
    with pytest.raises(ValueError):
        SkewNormal(0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        SkewNormal(0.0, -2.0, 1.0)
    with pytest.raises(ValueError):
        SkewNormal(np.inf, 1.0, 1.0)


def test_moments_against_closed_form():
    for lam in (0.0, 1.0, -2.0, 5.0):
        delta = lam / math.sqrt(1.0 + lam * lam)
        mean = delta * math.sqrt(2.0 / math.pi)
        sd = math.sqrt(1.0 - 2.0 * delta * delta / math.pi)
        m = SkewNormal(0.0, 1.0, lam).moments()
        assert abs(m.mean - mean) < 1e-9
        assert abs(m.sd - sd) < 1e-9


def test_sampler_ks():
    d = SkewNormal(0.0, 1.0, 2.0)
    values = d.sample(100_000, 7)
    assert ks_statistic(values, d.cdf) < KS_COEFF_01 / math.sqrt(100_000)


def test_squared_draws_are_chisq1():
    z = SkewNormal(0.0, 1.0, 3.0).sample(100_000, 11)
    assert ks_statistic(z * z, chisq1_cdf) < KS_COEFF_01 / math.sqrt(100_000)


def test_sampler_matches_conditioning_representation():
    d = SkewNormal(-0.5, 2.0, 1.5)
    got = d.sample(1000, 123)
    rng = np.random.default_rng(123)
    u = rng.standard_normal(1000)
    v = rng.standard_normal(1000)
    delta = 1.5 / math.sqrt(1.0 + 1.5**2)
    z = delta * np.abs(u) + math.sqrt(1.0 - delta * delta) * v
    assert np.array_equal(got, -0.5 + 2.0 * z)


def test_half_normal_limit():
    # for large shape the positive part approaches 2 phi(x)
    d = SkewNormal(0.0, 1.0, 200.0)
    x = np.linspace(0.05, 4.0, 100)
    assert np.max(np.abs(d.pdf(x) - 2.0 * norm_pdf(x))) < 1e-3
    assert d.cdf(0.0) < 2e-3
