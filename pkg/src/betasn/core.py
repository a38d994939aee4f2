"""Common distribution surface and the generic moment engine.

Every family exposes vectorized pdf/logpdf/cdf/quantile.  The default
sampler is the quantile transform of a PCG64 uniform stream
(``numpy.random.default_rng``), so one seed policy drives every family
reproducibly; families with a cheaper exact representation override
``sample``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quadrature import DEFAULT_SPEC, integrate_line, integrate_unit

__all__ = ["Distribution", "SampleBatch", "MomentSummary", "moment_summary", "normalization_error"]


@dataclass(frozen=True)
class MomentSummary:
    """First four standardized moments; kurtosis is non-excess (normal = 3)."""

    mean: float
    sd: float
    skewness: float
    kurtosis: float


@dataclass(frozen=True, eq=False)
class SampleBatch:
    """Reproducible draws: the seed plus the values it produced."""

    seed: int
    values: np.ndarray

    @property
    def count(self):
        return int(self.values.shape[0])


class Distribution:
    """Base class for the distribution families in this package."""

    #: open support interval; infinities mark unbounded sides
    support = (-np.inf, np.inf)
    #: location/scale used to place the quadrature window for line families
    location = 0.0
    scale = 1.0

    def pdf(self, x):
        raise NotImplementedError

    def logpdf(self, x):
        with np.errstate(divide="ignore"):
            return np.log(self.pdf(x))

    def cdf(self, x):
        raise NotImplementedError

    def quantile(self, q):
        raise NotImplementedError

    def sample(self, n, seed):
        # rng.random lives in [0, 1); nudge an exact 0 into the open
        # interval the quantile functions require
        rng = np.random.default_rng(seed)
        u = np.clip(rng.random(int(n)), 1e-300, None)
        return self.quantile(u)

    def sample_batch(self, n, seed):
        return SampleBatch(seed=int(seed), values=self.sample(n, seed))

    # beta-type endpoint behavior (left, right): the exponent alpha of the
    # density's z^alpha blow-up at the endpoint, or False when regular;
    # the moment engine turns these into the matching substitutions
    def _endpoint_singular(self):
        return (False, False)

    def moments(self, spec=None):
        return moment_summary(self, spec)


def _raw_moments(dist, spec, orders):
    """Raw moments by quadrature, windowed by the family's support."""
    spec = DEFAULT_SPEC if spec is None else spec
    lo, hi = dist.support
    if np.isinf(lo) and np.isinf(hi):
        loc, scale = dist.location, dist.scale

        def make(k):
            return lambda z: (loc + scale * z) ** k * dist.pdf(loc + scale * z) * scale

        return [integrate_line(make(k), spec) for k in orders]

    # bounded or half-bounded: map onto the unit interval
    left = lo
    right = hi if np.isfinite(hi) else dist.location + dist.scale * spec.truncation
    width = right - left
    sing_l, sing_r = dist._endpoint_singular()

    def make(k):
        return lambda u: (left + width * u) ** k * dist.pdf(left + width * u) * width

    if not np.isfinite(hi):
        sing_r = False
    return [
        integrate_unit(make(k), spec, singular_left=sing_l, singular_right=sing_r)
        for k in orders
    ]


def moment_summary(dist, spec=None):
    """Mean, sd, skewness, and non-excess kurtosis by quadrature."""
    m1, m2, m3, m4 = _raw_moments(dist, spec, (1, 2, 3, 4))
    var = m2 - m1 * m1
    if not var > 0.0:
        raise ArithmeticError(f"computed variance {var!r} is not positive")
    sd = np.sqrt(var)
    mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1**3
    mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1**4
    return MomentSummary(
        mean=float(m1),
        sd=float(sd),
        skewness=float(mu3 / sd**3),
        kurtosis=float(mu4 / sd**4),
    )


def normalization_error(dist, spec=None):
    """Absolute deviation of the density's integral from 1."""
    (m0,) = _raw_moments(dist, spec, (0,))
    return abs(m0 - 1.0)
