"""Beta, generalized beta, Kumaraswamy, and beta-generated distributions.

The beta-generated construction composes a base distribution function F
with a Beta(a, b) density: g(x) = F(x)^(a-1) (1-F(x))^(b-1) f(x) / B(a,b),
G(x) = I_F(x)(a, b).  Specializing the base gives the beta-normal and
the beta-half-normal used as the limit family of the beta skew-normal.

Densities with a, b below 1 are evaluated in log space so the endpoint
singularities do not poison intermediate products.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Distribution
from .special import (
    inv_reg_inc_beta,
    log_beta,
    norm_cdf,
    norm_logcdf,
    norm_logpdf,
    norm_quantile,
    reg_inc_beta,
)
from scipy.special import erf

__all__ = [
    "Beta",
    "GB1",
    "Kumaraswamy",
    "BetaNormal",
    "BetaHalfNormal",
    "beta_generated_pdf",
    "beta_generated_cdf",
]

_LOG2 = np.log(2.0)


def _xlogy(e, log_t):
    """e * log_t with the 0 * (-inf) = 0 convention for vanished exponents."""
    with np.errstate(invalid="ignore"):
        return np.where(e == 0.0, 0.0, e * log_t)


def _require_positive(**kwargs):
    for name, value in kwargs.items():
        if not (np.isfinite(value) and value > 0.0):
            raise ValueError(f"{name} must be positive and finite")


@dataclass(frozen=True)
class Beta(Distribution):
    """Beta distribution on (0, 1) with shape parameters a, b."""

    a: float
    b: float

    def __post_init__(self):
        _require_positive(a=self.a, b=self.b)

    support = (0.0, 1.0)
    location = 0.5
    scale = 0.25

    def _endpoint_singular(self):
        return (self.a - 1.0, self.b - 1.0)

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            inside = (x > 0.0) & (x < 1.0)
            body = (
                _xlogy(self.a - 1.0, np.log(np.where(inside, x, 0.5)))
                + _xlogy(self.b - 1.0, np.log1p(-np.where(inside, x, 0.5)))
                - log_beta(self.a, self.b)
            )
        return np.where(inside, body, -np.inf)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return reg_inc_beta(np.clip(x, 0.0, 1.0), self.a, self.b)

    def quantile(self, q):
        return inv_reg_inc_beta(q, self.a, self.b)


@dataclass(frozen=True)
class GB1(Distribution):
    """Generalized beta of the first kind.

    Density p x^(ap-1) (1 - (x/q)^p)^(b-1) / (q^(ap) B(a, b)) on (0, q).
    GB1(a, b, 1, 1) is Beta(a, b); GB1(1, b, p, 1) is Kumaraswamy(p, b).
    """

    a: float
    b: float
    p: float
    q: float

    def __post_init__(self):
        _require_positive(a=self.a, b=self.b, p=self.p, q=self.q)

    @property
    def support(self):
        return (0.0, self.q)

    @property
    def location(self):
        return 0.5 * self.q

    @property
    def scale(self):
        return 0.25 * self.q

    def _endpoint_singular(self):
        return (self.a * self.p - 1.0, self.b - 1.0)

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x > 0.0) & (x < self.q)
        xs = np.where(inside, x, 0.5 * self.q)
        u = (xs / self.q) ** self.p
        with np.errstate(divide="ignore", invalid="ignore"):
            body = (
                np.log(self.p)
                + _xlogy(self.a * self.p - 1.0, np.log(xs))
                - self.a * self.p * np.log(self.q)
                + _xlogy(self.b - 1.0, np.log1p(-u))
                - log_beta(self.a, self.b)
            )
        return np.where(inside, body, -np.inf)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        u = np.clip(x / self.q, 0.0, 1.0) ** self.p
        return reg_inc_beta(u, self.a, self.b)

    def quantile(self, q):
        w = inv_reg_inc_beta(q, self.a, self.b)
        return self.q * w ** (1.0 / self.p)


@dataclass(frozen=True)
class Kumaraswamy(Distribution):
    """Kumaraswamy distribution: cdf 1 - (1 - x^p)^b on (0, 1)."""

    p: float
    b: float

    def __post_init__(self):
        _require_positive(p=self.p, b=self.b)

    support = (0.0, 1.0)
    location = 0.5
    scale = 0.25

    def _endpoint_singular(self):
        return (self.p - 1.0, self.b - 1.0)

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x > 0.0) & (x < 1.0)
        xs = np.where(inside, x, 0.5)
        with np.errstate(divide="ignore", invalid="ignore"):
            body = (
                np.log(self.p)
                + np.log(self.b)
                + _xlogy(self.p - 1.0, np.log(xs))
                + _xlogy(self.b - 1.0, np.log1p(-(xs**self.p)))
            )
        return np.where(inside, body, -np.inf)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        xs = np.clip(x, 0.0, 1.0)
        # log1p(-1) = -inf at the right endpoint; expm1 maps it back to 1
        with np.errstate(divide="ignore"):
            return -np.expm1(self.b * np.log1p(-(xs**self.p)))

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        if np.any(q < 0.0) or np.any(q > 1.0):
            raise ValueError("quantile requires 0 <= q <= 1")
        return (-np.expm1(np.log1p(-q) / self.b)) ** (1.0 / self.p)


def beta_generated_pdf(base_cdf, base_pdf, a, b, x):
    """Generic beta-generated density F^(a-1) (1-F)^(b-1) f / B(a, b).

    A direct composition meant for cross-checks and one-off bases; the
    named family classes use numerically hardened log-space forms.
    """
    _require_positive(a=a, b=b)
    x = np.asarray(x, dtype=float)
    f = np.asarray(base_pdf(x), dtype=float)
    big_f = np.clip(np.asarray(base_cdf(x), dtype=float), 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_kernel = _xlogy(a - 1.0, np.log(big_f)) + _xlogy(b - 1.0, np.log1p(-big_f))
        out = np.exp(log_kernel - log_beta(a, b)) * f
    return np.where(f > 0.0, out, 0.0)


def beta_generated_cdf(base_cdf, a, b, x):
    """Generic beta-generated distribution function I_F(x)(a, b)."""
    _require_positive(a=a, b=b)
    big_f = np.clip(np.asarray(base_cdf(np.asarray(x, dtype=float)), dtype=float), 0.0, 1.0)
    return reg_inc_beta(big_f, a, b)


@dataclass(frozen=True)
class BetaNormal(Distribution):
    """Beta-generated distribution with a N(mu, sigma^2) base."""

    a: float
    b: float
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        _require_positive(a=self.a, b=self.b, sigma=self.sigma)
        if not np.isfinite(self.mu):
            raise ValueError("mu must be finite")

    @property
    def location(self):
        return self.mu

    @property
    def scale(self):
        return self.sigma

    def _z(self, x):
        return (np.asarray(x, dtype=float) - self.mu) / self.sigma

    def logpdf(self, x):
        z = self._z(x)
        return (
            _xlogy(self.a - 1.0, norm_logcdf(z))
            + _xlogy(self.b - 1.0, norm_logcdf(-z))
            + norm_logpdf(z)
            - log_beta(self.a, self.b)
            - np.log(self.sigma)
        )

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        return reg_inc_beta(norm_cdf(self._z(x)), self.a, self.b)

    def quantile(self, q):
        w = inv_reg_inc_beta(q, self.a, self.b)
        return self.mu + self.sigma * norm_quantile(w)


@dataclass(frozen=True)
class BetaHalfNormal(Distribution):
    """Beta-generated distribution with a standard half-normal base.

    Density 2^b / B(a, b) * (2 Phi(x) - 1)^(a-1) (1 - Phi(x))^(b-1) phi(x)
    for x > 0.  This is the lam -> +inf limit of the beta skew-normal.
    """

    a: float
    b: float

    def __post_init__(self):
        _require_positive(a=self.a, b=self.b)

    support = (0.0, np.inf)
    location = 0.0
    scale = 1.0

    def _endpoint_singular(self):
        return (self.a - 1.0, False)

    @staticmethod
    def _base_cdf(x):
        # 2 Phi(x) - 1 written as erf keeps full precision near 0
        return erf(np.asarray(x, dtype=float) / np.sqrt(2.0))

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        inside = x > 0.0
        xs = np.where(inside, x, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            body = (
                self.b * _LOG2
                - log_beta(self.a, self.b)
                + _xlogy(self.a - 1.0, np.log(self._base_cdf(xs)))
                + _xlogy(self.b - 1.0, norm_logcdf(-xs))
                + norm_logpdf(xs)
            )
        return np.where(inside, body, -np.inf)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return reg_inc_beta(np.clip(self._base_cdf(x), 0.0, 1.0), self.a, self.b)

    def quantile(self, q):
        w = inv_reg_inc_beta(q, self.a, self.b)
        return norm_quantile(0.5 * (1.0 + w))
