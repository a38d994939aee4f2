"""Adaptive Gauss-Kronrod engine: line and unit-interval integrals."""

import math

import numpy as np
import pytest
import scipy.integrate

from betasn import (
    DEFAULT_SPEC,
    IntegrationError,
    QuadratureSpec,
    integrate_line,
    integrate_unit,
    norm_pdf,
    norm_cdf,
    log_beta,
)


def test_line_examples():
    assert abs(integrate_line(norm_pdf, DEFAULT_SPEC) - 1.0) < 1e-12
    assert abs(integrate_line(lambda x: x * norm_pdf(x), DEFAULT_SPEC)) < 1e-12
    got = integrate_line(lambda x: 2.0 * norm_pdf(x) * norm_cdf(x) * x, DEFAULT_SPEC)
    assert abs(got - 1.0 / math.sqrt(math.pi)) < 1e-12


def test_unit_examples():
    assert abs(integrate_unit(lambda z: np.ones_like(z), DEFAULT_SPEC) - 1.0) < 1e-12
    got = integrate_unit(
        lambda z: 12.0 * z * (1.0 - z) ** 2, DEFAULT_SPEC, upper=0.3
    )
    assert abs(got - 0.3483) < 1e-12


@pytest.mark.parametrize("flag", [True, -0.5])
def test_unit_square_root_singularity(flag):
    # z^(-1/2) / B(1/2, 1): bare True keeps the classic square
    # substitution, the exponent form selects the matching power
    norm = math.exp(log_beta(0.5, 1.0))
    got = integrate_unit(
        lambda z: z ** (-0.5) / norm, DEFAULT_SPEC, singular_left=flag
    )
    assert abs(got - 1.0) < 1e-12


def test_unit_strong_left_singularity_needs_matched_power():
    # z^(-3/4) has exponent -0.75; the squared substitution leaves a
    # u^(-1/2) blow-up while the matched power integrates cleanly
    norm = math.exp(log_beta(0.25, 1.0))
    got = integrate_unit(
        lambda z: z ** (-0.75) / norm, DEFAULT_SPEC, singular_left=-0.75
    )
    assert abs(got - 1.0) < 1e-11


def test_unit_two_sided_beta_density():
    a, b = 0.25, 0.5
    norm = math.exp(log_beta(a, b))

    def dens(z):
        # open-interval convention: zero once an endpoint is no longer
        # representable, matching the distribution classes
        z = np.asarray(z, dtype=float)
        inside = (z > 0.0) & (z < 1.0)
        safe = np.where(inside, z, 0.5)
        out = safe ** (a - 1.0) * (1.0 - safe) ** (b - 1.0) / norm
        return np.where(inside, out, 0.0)

    got = integrate_unit(
        dens, DEFAULT_SPEC, singular_left=a - 1.0, singular_right=b - 1.0
    )
    # the ~4e-9 shortfall is the mass sitting within one ulp of z = 1,
    # where (1-z) is no longer representable; see the normalization budget
    assert abs(got - 1.0) < 5e-9


def test_subdivision_doubling_invariance():
    def dens(z):
        with np.errstate(divide="ignore"):
            return z ** (-0.5) * (1.0 - z) ** (-0.5) / math.pi

    base = integrate_unit(
        dens, DEFAULT_SPEC, singular_left=True, singular_right=True
    )
    doubled_spec = QuadratureSpec(
        abs_tol=DEFAULT_SPEC.abs_tol,
        rel_tol=DEFAULT_SPEC.rel_tol,
        truncation=DEFAULT_SPEC.truncation,
        max_subdivisions=2 * DEFAULT_SPEC.max_subdivisions,
    )
    doubled = integrate_unit(
        dens, doubled_spec, singular_left=True, singular_right=True
    )
    assert abs(base - doubled) < 1e-12
    assert abs(base - 1.0) < 5e-9


def test_cross_oracle_against_scipy():
    # same integrand through an unrelated engine; both claim ~1e-10
    f = lambda x: np.exp(-0.5 * x * x) * norm_cdf(2.0 * x) ** 3
    ours = integrate_line(f, DEFAULT_SPEC)
    ref, _ = scipy.integrate.quad(f, -16.0, 16.0, epsabs=1e-13, epsrel=1e-13)
    assert abs(ours - ref) < 1e-10


def test_integration_error_carries_estimate():
    # a needle the subdivision budget cannot resolve
    spec = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-14, max_subdivisions=10)
    needle = lambda x: np.exp(-1e8 * (x - 0.3) ** 2)
    with pytest.raises(IntegrationError) as info:
        integrate_unit(needle, spec)
    assert np.isfinite(info.value.estimate)
    assert info.value.error_estimate > 0.0


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=-1e-10)
    with pytest.raises(ValueError):
        QuadratureSpec(truncation=4.0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_subdivisions=5)


def test_spec_from_mapping():
    spec = QuadratureSpec.from_mapping(
        {"abs_tol": "1e-9", "max_subdivisions": "500"}
    )
    assert spec.abs_tol == 1e-9
    assert spec.max_subdivisions == 500
    assert spec.rel_tol == DEFAULT_SPEC.rel_tol
    with pytest.raises(ValueError):
        QuadratureSpec.from_mapping({"tolerance": "1e-9"})
    with pytest.raises(ValueError):
        QuadratureSpec.from_mapping({"abs_tol": "plenty"})


def test_truncation_window():
    # the line window is [-truncation, truncation]: at the minimum
    # window of 8 the standard normal still closes to within its own
    # tail mass, and widening the window must not move the answer
    narrow = QuadratureSpec(truncation=8.0)
    assert abs(integrate_line(norm_pdf, narrow) - 1.0) < 1e-12
    wide = QuadratureSpec(truncation=24.0)
    assert abs(integrate_line(norm_pdf, wide) - integrate_line(norm_pdf, DEFAULT_SPEC)) < 1e-13
