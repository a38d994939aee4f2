"""Order statistics: analytic mappings, brute-force oracle, MC harness."""

import numpy as np
import pytest

from betasn import (
    GBSN,
    KS_COEFF_01,
    SNB,
    BetaSkewNormal,
    KsReport,
    Normal,
    OrderStatSpec,
    SkewNormal,
    UnsupportedMappingError,
    analytic_order_stat,
    ks_statistic,
    log_concavity_order_stat_check,
    mc_conditioning_ks,
    mc_order_stat_ks,
    order_stat_pdf,
)

GRID = np.linspace(-6.0, 6.0, 401)


def test_ks_coefficient():
    assert KS_COEFF_01 == 1.628


def test_sn_maximum_maps_to_bsn():
    d = analytic_order_stat(OrderStatSpec(SkewNormal(0.0, 1.0, 1.0), 5, 5))
    assert isinstance(d, BetaSkewNormal)
    assert (d.lam, d.a, d.b) == (1.0, 5.0, 1.0)


def test_sn_minimum_maps_to_bsn():
    d = analytic_order_stat(OrderStatSpec(SkewNormal(0.0, 1.0, -1.0), 4, 1))
    assert (d.lam, d.a, d.b) == (-1.0, 1.0, 4.0)


def test_sn_interior_rank_maps_to_bsn():
    d = analytic_order_stat(OrderStatSpec(SkewNormal(0.0, 1.0, 0.7), 7, 3))
    assert (d.lam, d.a, d.b) == (0.7, 3.0, 5.0)


def test_normal_maps_to_gbsn():
    d = analytic_order_stat(OrderStatSpec(Normal(0.0, 1.0), 5, 2))
    assert isinstance(d, GBSN)
    assert (d.lam, d.n, d.m) == (1.0, 1, 3)


def test_snb_extremes_stay_snb():
    d = analytic_order_stat(OrderStatSpec(SNB(1.0, 1), 3, 3))
    assert isinstance(d, SNB)
    assert (d.lam, d.n) == (1.0, 5)

    d = analytic_order_stat(OrderStatSpec(SNB(1.0, 2), 3, 3))
    assert (d.lam, d.n) == (1.0, 8)

    for m in (1, 2, 3):
        d = analytic_order_stat(OrderStatSpec(SNB(-1.0, m), 4, 1))
        assert (d.lam, d.n) == (-1.0, 4 * (m + 1) - 1)


def test_unsupported_mappings():
    with pytest.raises(UnsupportedMappingError, match="standardized"):
        analytic_order_stat(OrderStatSpec(SkewNormal(1.0, 2.0, 1.0), 5, 5))
    with pytest.raises(UnsupportedMappingError):
        analytic_order_stat(OrderStatSpec(Normal(0.0, 2.0), 5, 2))
    with pytest.raises(UnsupportedMappingError, match="rank"):
        analytic_order_stat(OrderStatSpec(SNB(1.0, 1), 3, 2))
    with pytest.raises(UnsupportedMappingError, match="lam"):
        analytic_order_stat(OrderStatSpec(SNB(0.5, 1), 3, 3))
    with pytest.raises(UnsupportedMappingError, match="unsupported base"):
        analytic_order_stat(OrderStatSpec(BetaSkewNormal(1.0, 2.0, 3.0), 3, 1))


def test_spec_validation():
    with pytest.raises(ValueError):
        OrderStatSpec(Normal(), 0, 1)
    with pytest.raises(ValueError):
        OrderStatSpec(Normal(), 3, 4)
    with pytest.raises(ValueError):
        OrderStatSpec(Normal(), 3, 0)


MAPPING_CASES = (
    OrderStatSpec(SkewNormal(0.0, 1.0, 1.0), 5, 5),
    OrderStatSpec(SkewNormal(0.0, 1.0, -1.0), 4, 1),
    OrderStatSpec(SkewNormal(0.0, 1.0, 0.7), 7, 3),
    OrderStatSpec(Normal(0.0, 1.0), 5, 2),
    OrderStatSpec(Normal(0.0, 1.0), 6, 6),
    OrderStatSpec(SNB(1.0, 1), 3, 3),
    OrderStatSpec(SNB(1.0, 2), 3, 3),
    OrderStatSpec(SNB(-1.0, 2), 4, 1),
)


@pytest.mark.parametrize("spec", MAPPING_CASES, ids=lambda s: f"{type(s.base).__name__}-{s.sample_size}-{s.rank}")
def test_brute_force_density_equivalence(spec):
    target = analytic_order_stat(spec)
    brute = order_stat_pdf(spec.base, spec.sample_size, spec.rank, GRID)
    assert np.max(np.abs(target.pdf(GRID) - brute)) < 1e-10


def test_order_stat_pdf_normalizes():
    # direct quadrature sanity on the brute-force density itself
    from betasn.quadrature import integrate_line

    total = integrate_line(lambda x: order_stat_pdf(Normal(), 5, 2, x), None)
    assert abs(total - 1.0) < 1e-10


def test_mc_order_stat_ks():
    with pytest.raises(ValueError):
        mc_order_stat_ks(OrderStatSpec(Normal(), 5, 2), 5000, 0)

    spec = OrderStatSpec(SkewNormal(0.0, 1.0, 1.0), 5, 3)
    rep = mc_order_stat_ks(spec, 20_000, 7)
    again = mc_order_stat_ks(spec, 20_000, 7)
    assert rep.statistic == again.statistic
    assert rep.passed
    assert rep.n_trials == 20_000
    assert rep.critical_value == pytest.approx(KS_COEFF_01 / np.sqrt(20_000))

    assert mc_order_stat_ks(OrderStatSpec(Normal(), 4, 4), 20_000, 8).passed
    assert mc_order_stat_ks(OrderStatSpec(SNB(-1.0, 1), 3, 1), 20_000, 9).passed


def test_mc_conditioning_below():
    rep = mc_conditioning_ks(1.0, 1.0, 1.0, 2, trials=20_000, seed=2005)
    assert rep.ks.passed
    assert rep.within_3se
    assert rep.expected_probability == pytest.approx(1.0 / 3.0)
    assert rep.n_accepted >= 20_000


def test_mc_conditioning_two_sided():
    rep = mc_conditioning_ks(1.0, 1.0, 0.0, 2, m=2, trials=20_000, seed=2006)
    assert rep.ks.passed
    assert rep.within_3se
    assert rep.expected_probability == pytest.approx(1.0 / 6.0)


def test_mc_conditioning_proposal_cap():
    with pytest.raises(RuntimeError, match="proposal cap"):
        mc_conditioning_ks(1.0, 1.0, 1.0, 2, trials=10_000, seed=0, max_proposals=5_000)


def test_mc_conditioning_validation():
    with pytest.raises(ValueError):
        mc_conditioning_ks(1.0, 1.0, 1.0, 2, trials=5_000)
    with pytest.raises(ValueError):
        mc_conditioning_ks(1.0, 1.0, 1.0, 0)
    with pytest.raises(ValueError):
        mc_conditioning_ks(1.0, 1.0, 1.0, 2, m=-1)


def test_log_concavity_order_stats():
    for j in range(1, 6):
        assert log_concavity_order_stat_check(1.0, 5, j)
    assert log_concavity_order_stat_check(0.0, 2, 1)
    assert log_concavity_order_stat_check(-3.0, 7, 4)
    with pytest.raises(ValueError):
        log_concavity_order_stat_check(1.0, 5, 6)


def test_ks_statistic_basics():
    # uniform grid points against the uniform cdf: stat = 1/(2n) shifted
    vals = (np.arange(100) + 0.5) / 100.0
    stat = ks_statistic(vals, lambda x: x)
    assert abs(stat - 0.005) < 1e-12


def test_ks_report_invariant():
    with pytest.raises(ValueError):
        KsReport(n_trials=100, statistic=0.5, critical_value=0.1, passed=True)
    rep = KsReport(n_trials=100, statistic=0.05, critical_value=0.1628, passed=True)
    assert rep.passed
