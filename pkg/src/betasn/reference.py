"""Reference moment grid for the Beta skew-normal family.

Fifty published (a, b, lambda) parameter combinations with their
reported mean, standard deviation, skewness, and non-excess kurtosis,
plus the machinery to recompute every row by quadrature and compare.

The reported values are themselves numerical output and carry a
self-consistency check: reflecting (a, b, lambda) to (b, a, -lambda)
must flip the signs of the mean and skewness and preserve the sd and
kurtosis exactly.  Cells whose printed digits violate that symmetry by
more than MIRROR_TOL cannot all be right, so they are compared and
reported but not hard-asserted; every other cell is asserted at the
row tolerance (1e-3 when both shapes are >= 1, else 5e-3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bsn import BetaSkewNormal
from .quadrature import DEFAULT_SPEC

__all__ = [
    "ReferenceRow",
    "RowComparison",
    "REFERENCE_MOMENT_GRID",
    "MIRROR_TOL",
    "FIELDS",
    "row_tolerance",
    "mirror_of",
    "excluded_cells",
    "compare_row",
    "compare_grid",
]

FIELDS = ("mean", "sd", "skewness", "kurtosis")
MIRROR_TOL = 2e-3
# signs under (a,b,lam) -> (b,a,-lam): mean and skewness flip
_MIRROR_SIGN = {"mean": -1.0, "sd": 1.0, "skewness": -1.0, "kurtosis": 1.0}


@dataclass(frozen=True)
class ReferenceRow:
    a: float
    b: float
    lam: float
    mean: float
    sd: float
    skewness: float
    kurtosis: float


REFERENCE_MOMENT_GRID = (
    ReferenceRow(0.25, 0.25, -10.0, -1.1579, 1.4029, -1.1329, 3.7648),
    ReferenceRow(0.25, 0.25, -1.0, -0.6501, 1.9679, -0.2378, 2.7777),
    ReferenceRow(0.25, 0.25, 0.0, 0.0, 2.3382, -0.0004, 2.6217),
    ReferenceRow(0.25, 0.25, 1.0, 0.6484, 1.9649, 0.2306, 2.1362),
    ReferenceRow(0.25, 0.25, 10.0, 1.1580, 1.4027, 1.1329, 3.7632),
    ReferenceRow(0.25, 0.5, -10.0, -1.5906, 1.3469, -0.7185, 2.7580),
    ReferenceRow(0.25, 0.5, -1.0, -1.4424, 1.6716, -0.3284, 3.0202),
    ReferenceRow(0.25, 0.5, 0.0, -0.9631, 1.9061, -0.0849, 2.8029),
    ReferenceRow(0.25, 0.5, 1.0, -0.1772, 1.5265, 0.0938, 2.8543),
    ReferenceRow(0.25, 0.5, 10.0, 0.5446, 0.8728, 1.5054, 5.1988),
    ReferenceRow(0.5, 0.25, -10.0, -0.5447, 0.8727, -1.5061, 5.2003),
    ReferenceRow(0.5, 0.25, -1.0, 0.1773, 1.5265, -0.0938, 2.8541),
    ReferenceRow(0.5, 0.25, 0.0, 0.9625, 1.9051, 0.0819, 2.7927),
    ReferenceRow(0.5, 0.25, 1.0, 1.4411, 1.6694, 0.3203, 2.9849),
    ReferenceRow(0.5, 0.25, 10.0, 1.6339, 1.3974, 0.8434, 3.2655),
    ReferenceRow(0.5, 0.5, -10.0, -0.8979, 0.8874, -0.9703, 3.3176),
    ReferenceRow(0.5, 0.5, -1.0, -0.5882, 1.2659, -0.1811, 2.9514),
    ReferenceRow(0.5, 0.5, 0.0, 0.0, 1.5253, 0.0, 2.8615),
    ReferenceRow(0.5, 0.5, 1.0, 0.5882, 1.2659, 0.1811, 2.9514),
    ReferenceRow(0.5, 0.5, 10.0, 0.9179, 0.9153, 1.0703, 3.7747),
    ReferenceRow(0.5, 1.0, -10.0, -1.3018, 0.9148, -0.8262, 3.4815),
    ReferenceRow(0.5, 1.0, -1.0, -1.1664, 1.0704, -0.3085, 3.1159),
    ReferenceRow(0.5, 1.0, 0.0, -0.7043, 1.2479, -0.1372, 2.9831),
    ReferenceRow(0.5, 1.0, 1.0, 0.0, 0.9999, 0.0, 2.9999),
    ReferenceRow(0.5, 1.0, 10.0, 0.4873, 0.5778, 1.3199, 4.8561),
    ReferenceRow(0.5, 10.0, -10.0, -2.3678, 0.7314, -0.7505, 3.7967),
    ReferenceRow(0.5, 10.0, -1.0, -2.3617, 0.7389, -0.7188, 3.7849),
    ReferenceRow(0.5, 10.0, 0.0, -2.0809, 0.8033, -0.6173, 3.5736),
    ReferenceRow(0.5, 10.0, 1.0, -1.0893, 0.6117, -0.5642, 3.4799),
    ReferenceRow(0.5, 10.0, 10.0, -0.0182, 0.1429, 0.3706, 3.8635),
    ReferenceRow(1.0, 0.5, -10.0, -0.4873, 0.5777, -1.3200, 4.8570),
    ReferenceRow(1.0, 0.5, -1.0, 0.0, 1.0, 0.0, 3.0),
    ReferenceRow(1.0, 0.5, 0.0, 0.7043, 1.2479, 0.1372, 2.9831),
    ReferenceRow(1.0, 0.5, 1.0, 1.1664, 1.0704, 0.3086, 3.1161),
    ReferenceRow(1.0, 0.5, 10.0, 1.3018, 0.9148, 0.8262, 3.4814),
    ReferenceRow(1.0, 1.0, -10.0, -0.7939, 0.6080, -0.9556, 3.8232),
    ReferenceRow(1.0, 1.0, -1.0, -0.5642, 0.8256, -0.1369, 3.0617),
    ReferenceRow(1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 3.0),
    ReferenceRow(1.0, 1.0, 1.0, 0.5642, 0.8256, 0.1369, 3.0617),
    ReferenceRow(1.0, 1.0, 10.0, 0.7939, 0.6080, 0.9556, 3.8232),
    ReferenceRow(10.0, 1.0, -10.0, -0.0839, 0.1364, -0.7082, 4.2018),
    ReferenceRow(10.0, 1.0, -1.0, 0.6744, 0.4536, 0.3597, 3.2722),
    ReferenceRow(10.0, 1.0, 0.0, 1.5388, 0.5868, 0.4099, 3.3314),
    ReferenceRow(10.0, 1.0, 1.0, 1.8675, 0.5251, 0.5005, 3.4685),
    ReferenceRow(10.0, 1.0, 10.0, 1.8807, 0.5124, 0.5744, 3.5243),
    ReferenceRow(1.0, 10.0, -10.0, -1.8807, 0.5124, -0.5744, 3.5243),
    ReferenceRow(1.0, 10.0, -1.0, -1.8675, 0.5251, -0.5005, 3.4685),
    ReferenceRow(1.0, 10.0, 0.0, -1.5388, 0.5868, -0.4099, 3.3314),
    ReferenceRow(1.0, 10.0, 1.0, -0.6744, 0.4536, -0.3597, 3.2722),
    ReferenceRow(1.0, 10.0, 10.0, 0.0839, 0.1364, 0.7082, 4.2018),
)

_BY_KEY = {(r.a, r.b, r.lam): r for r in REFERENCE_MOMENT_GRID}


def row_tolerance(row):
    """Absolute per-cell tolerance: tighter when both shapes are >= 1."""
    return 1e-3 if (row.a >= 1.0 and row.b >= 1.0) else 5e-3


def mirror_of(row):
    """The (b, a, -lambda) partner row, or None when it is not in the grid."""
    return _BY_KEY.get((row.b, row.a, -row.lam))


def excluded_cells():
    """Cells whose printed digits contradict the reflection symmetry.

    Reflection forces mean/skewness to be opposite and sd/kurtosis equal
    between a row and its mirror; when the printed pair disagrees by
    more than MIRROR_TOL at least one of the two is wrong, so both cells
    are dropped from hard assertion (the self-mirrored lam=0 rows check
    2*|value| for the sign-flipping fields).
    """
    out = set()
    for row in REFERENCE_MOMENT_GRID:
        partner = mirror_of(row)
        if partner is None:
            continue
        for field in FIELDS:
            dev = abs(getattr(row, field) - _MIRROR_SIGN[field] * getattr(partner, field))
            if dev > MIRROR_TOL:
                out.add((row.a, row.b, row.lam, field))
                out.add((partner.a, partner.b, partner.lam, field))
    return frozenset(out)


@dataclass(frozen=True)
class RowComparison:
    row: ReferenceRow
    computed: object
    deviations: dict
    tolerance: float
    excluded: tuple
    passed: bool


def compare_row(row, spec=None, excluded=None):
    """Recompute one row by quadrature and compare cell by cell.

    `passed` covers only the non-excluded cells; excluded deviations are
    still reported.
    """
    spec = DEFAULT_SPEC if spec is None else spec
    excluded = excluded_cells() if excluded is None else excluded
    summary = BetaSkewNormal(row.lam, row.a, row.b).moments(spec)
    deviations = {f: abs(getattr(summary, f) - getattr(row, f)) for f in FIELDS}
    tol = row_tolerance(row)
    skip = tuple(f for f in FIELDS if (row.a, row.b, row.lam, f) in excluded)
    passed = all(deviations[f] <= tol for f in FIELDS if f not in skip)
    return RowComparison(
        row=row,
        computed=summary,
        deviations=deviations,
        tolerance=tol,
        excluded=skip,
        passed=passed,
    )


def compare_grid(spec=None):
    """Recompute and compare all fifty rows."""
    excl = excluded_cells()
    return [compare_row(row, spec=spec, excluded=excl) for row in REFERENCE_MOMENT_GRID]
