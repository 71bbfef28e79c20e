"""Bounds and classification of sampled maps.

The extremal eigenvalues of the frame and Gram operators decide every
class this package distinguishes: Bessel bound (largest frame
eigenvalue), frame bounds (both extremes), lower bound of the
synthesis operator (smallest Gram eigenvalue), upper-semiframe and
totality tests, and the aggregate classification record.

At a fixed finite dimension every map is Bessel with a Hilbert-norm
bound, so the boolean "bounded Bessel" flag is only meaningful through
its growth across a dimension family; :func:`bessel_certificate`
accepts a doubled-dimension companion map for exactly that test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg, moment, wmap
from .errors import CertificateUnstable, DimMismatch
from .gelfand import TripleSpec
from .wmap import SampledMap


@dataclass(frozen=True)
class FrameBounds:
    """Two-sided bounds ``lower ||f||^2 <= ||analysis f||^2 <= upper ||f||^2``."""

    lower: float
    upper: float

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.upper):
            raise ValueError(f"need 0 <= lower <= upper, got {self}")


@dataclass(frozen=True)
class BesselCertificate:
    """Seminorm order and minimal constant dominating the analysis norm."""

    order: int
    constant: float


@dataclass(frozen=True)
class Tolerances:
    """Thresholds used by classification; serialized with every report.

    ``rank_tol`` drives all rank/invertibility decisions,
    ``frame_tol`` the lower-frame-bound decision (relative to the
    upper bound), ``strict_total_tol`` the roundoff-scale totality
    used by the upper-semiframe test, ``residual_tol`` the moment
    solvability threshold, and ``certificate_growth`` the admissible
    constant growth across a dimension doubling.
    """

    rank_tol: float = 1e-10
    frame_tol: float = 1e-10
    strict_total_tol: float = 1e-14
    residual_tol: float = 1e-8
    certificate_growth: float = 1.05


@dataclass(frozen=True)
class Classification:
    """Aggregate classification of a sampled map.

    ``bessel`` is always true at finite dimension; its certificate
    order is only meaningful when a dimension family was supplied.
    ``row_norm_min``/``row_norm_max`` are the literal per-row
    diagnostics (weighted squared row norms): the best constants of
    the coordinatewise reading of the classical sequence
    characterizations, reported for transparency next to the
    quadratic-form bounds that this package treats as authoritative.
    """

    bessel: bool
    bessel_order: int
    bessel_constant: float
    bounded_bessel: bool
    bessel_bound: float
    upper_semiframe: bool
    riesz_fischer: bool
    rf_lower_bound: float
    frame: bool
    frame_bounds: FrameBounds
    total: bool
    mu_independent: bool
    row_norm_min: float
    row_norm_max: float
    tolerances: Tolerances = field(default_factory=Tolerances)


def _frame_spectrum(m: SampledMap) -> np.ndarray:
    return linalg.hermitian_eig(wmap.frame_matrix(m)).eigenvalues


def bessel_bound(m: SampledMap) -> float:
    """Smallest B with ``||analysis f||_mu^2 <= B ||f||^2``: the top frame eigenvalue."""
    return float(max(_frame_spectrum(m)[-1], 0.0))


def riesz_fischer_lower_bound(m: SampledMap) -> float:
    """Largest A in the lower bound over node coefficients: the smallest Gram eigenvalue."""
    lam = linalg.hermitian_eig(wmap.gram_matrix(m)).eigenvalues
    return float(max(lam[0], 0.0))


def frame_bounds(m: SampledMap) -> FrameBounds:
    """Extremal frame-operator eigenvalues as (lower, upper) bounds."""
    lam = _frame_spectrum(m)
    upper = float(max(lam[-1], 0.0))
    lower = float(min(max(lam[0], 0.0), upper))
    return FrameBounds(lower, upper)


def is_frame(m: SampledMap, tol: float = 1e-10) -> bool:
    """Frame decision: lower bound exceeds ``tol`` times the upper bound."""
    fb = frame_bounds(m)
    return bool(fb.upper > 0.0 and fb.lower > tol * fb.upper)


def upper_semiframe_check(
    m: SampledMap,
    tol: float = 1e-10,
    strict_total_tol: float = 1e-14,
) -> bool:
    """Total and Bessel-bounded, but the lower frame bound fails.

    Totality is judged at roundoff scale (``strict_total_tol``) while
    frame-ness is judged at the working tolerance ``tol``: a chain of
    directions reaching down to, say, 1e-13 of the top one is total in
    exact arithmetic yet has no usable lower frame bound.
    """
    if not wmap.is_total(m, strict_total_tol):
        return False
    fb = frame_bounds(m)
    return bool(fb.upper > 0.0 and fb.lower <= tol * fb.upper)


def bessel_constants(m: SampledMap, spec: TripleSpec | None = None) -> np.ndarray:
    """Minimal constants ``c_k`` with analysis norm <= c_k p_k, for k = 0..K.

    ``c_k`` is the top singular value of the weighted analysis matrix
    composed with the inverse order-k weight diagonal.
    """
    spec = spec or m.triple
    if spec != m.triple:
        raise DimMismatch("triple spec is not the one bound to the map")
    weighted = wmap.weighted_analysis_matrix(m)
    out = np.empty(spec.max_order + 1)
    for k in range(spec.max_order + 1):
        sigma = linalg.singular_values(weighted / spec.weights(k)[None, :])
        out[k] = sigma[0]
    return out


def bessel_certificate(
    m: SampledMap,
    spec: TripleSpec | None = None,
    companion: SampledMap | None = None,
    growth_factor: float = 1.05,
) -> BesselCertificate:
    """Smallest seminorm order whose constant is stable across a dimension doubling.

    Without a companion the certificate degenerates to order 0 with
    the square root of the Bessel bound. With a doubled-dimension
    companion, order k passes when the companion constant exceeds the
    base constant by at most ``growth_factor``; raises
    :class:`CertificateUnstable` when no order up to K passes.
    """
    spec = spec or m.triple
    base = bessel_constants(m, spec)
    if companion is None:
        return BesselCertificate(0, float(base[0]))
    if companion.triple.max_order < spec.max_order:
        raise DimMismatch("companion map carries fewer seminorm orders")
    other = bessel_constants(companion)
    for k in range(spec.max_order + 1):
        if other[k] <= growth_factor * base[k]:
            return BesselCertificate(k, float(base[k]))
    raise CertificateUnstable(
        f"no order k <= {spec.max_order} keeps the Bessel constant within "
        f"factor {growth_factor} across the dimension family"
    )


def row_norm_extremes(m: SampledMap) -> tuple[float, float]:
    """Smallest and largest weighted squared row norm (Gram diagonal).

    These are the best constants of the literal coordinatewise reading
    of the sequence characterizations; diagnostics only.
    """
    diag = np.real(np.diag(wmap.gram_matrix(m)))
    return float(diag.min()), float(diag.max())


def classify(
    m: SampledMap,
    spec: TripleSpec | None = None,
    tolerances: Tolerances | None = None,
    companion: SampledMap | None = None,
    probes: int = 100,
    seed: int = 0,
) -> Classification:
    """Run the full battery of tests and assemble one consistent record."""
    spec = spec or m.triple
    tols = tolerances or Tolerances()

    fb = frame_bounds(m)
    bound = fb.upper
    frame = bool(bound > 0.0 and fb.lower > tols.frame_tol * bound)
    total = wmap.is_total(m, tols.rank_tol)
    strict_total = wmap.is_total(m, tols.strict_total_tol)
    mu_indep = wmap.is_mu_independent(m, tols.rank_tol)
    upper_semi = bool(strict_total and bound > 0.0 and fb.lower <= tols.frame_tol * bound)

    cert = bessel_certificate(
        m, spec, companion=companion, growth_factor=tols.certificate_growth
    )
    rf = moment.rf_certificate(m, rank_tol=tols.rank_tol, probes=probes, seed=seed)
    lo, hi = row_norm_extremes(m)

    return Classification(
        bessel=True,
        bessel_order=cert.order,
        bessel_constant=cert.constant,
        bounded_bessel=True,
        bessel_bound=bound,
        upper_semiframe=upper_semi,
        riesz_fischer=rf.holds,
        rf_lower_bound=riesz_fischer_lower_bound(m),
        frame=frame,
        frame_bounds=fb,
        total=total,
        mu_independent=mu_indep,
        row_norm_min=lo,
        row_norm_max=hi,
        tolerances=tols,
    )
