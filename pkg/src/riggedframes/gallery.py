"""Built-in example systems covering every classification outcome.

Each constructor is deterministic given its parameters (randomness
only through an explicit seed), so gallery systems round-trip
bit-identically through files and reports.

* ``onb``             tight orthonormal system, bounds (1, 1)
* ``fourier``         continuous tight frame on a periodic grid
* ``delta_prime``     derivative-of-point-mass system in a smooth
                      orthonormal basis: Bessel only against a
                      higher-order seminorm, not the Hilbert norm
* ``perturbed_riesz`` identity plus a spectrally bounded perturbation
* ``non_total``       deficient system with a common annihilator
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import BadParams
from .gelfand import TripleSpec
from .measure import make_counting, make_uniform
from .wmap import SampledMap

#: Seminorm orders carried by gallery systems.
DEFAULT_MAX_ORDER = 2

GALLERY_NAMES = ("onb", "fourier", "delta_prime", "perturbed_riesz", "non_total")


@dataclass(frozen=True)
class GallerySpec:
    """Name plus parameters identifying one gallery system."""

    name: str
    params: dict = field(default_factory=dict)


def hermite_functions(x, count: int) -> np.ndarray:
    """First ``count`` orthonormal Hermite functions sampled at ``x``.

    Uses the function-normalized recurrence, stable for orders well
    past anything this package needs:
    ``h_{n+1}(x) = x sqrt(2/(n+1)) h_n(x) - sqrt(n/(n+1)) h_{n-1}(x)``
    with ``h_0(x) = pi^(-1/4) exp(-x^2/2)``.
    """
    x = np.asarray(x, dtype=float)
    if count < 1:
        raise BadParams("count must be positive")
    h = np.zeros((count, x.size))
    h[0] = np.pi ** -0.25 * np.exp(-(x**2) / 2.0)
    if count > 1:
        h[1] = np.sqrt(2.0) * x * h[0]
    for n in range(1, count - 1):
        h[n + 1] = x * np.sqrt(2.0 / (n + 1)) * h[n] - np.sqrt(n / (n + 1.0)) * h[n - 1]
    return h


def hermite_derivatives(x, count: int) -> np.ndarray:
    """Derivatives of the first ``count`` orthonormal Hermite functions.

    Ladder identity:
    ``h_n' = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}``.
    """
    x = np.asarray(x, dtype=float)
    h = hermite_functions(x, count + 1)
    d = np.zeros((count, x.size))
    for n in range(count):
        d[n] = -np.sqrt((n + 1) / 2.0) * h[n + 1]
        if n >= 1:
            d[n] += np.sqrt(n / 2.0) * h[n - 1]
    return d


def make_onb(d: int, max_order: int = DEFAULT_MAX_ORDER) -> SampledMap:
    """Orthonormal system: identity table over counting measure."""
    if d < 1:
        raise BadParams("dimension must be positive")
    return SampledMap(
        np.eye(d, dtype=complex), make_counting(d), TripleSpec(d, max_order)
    )


def make_fourier_continuous(
    d: int, n_nodes: int, max_order: int = DEFAULT_MAX_ORDER
) -> SampledMap:
    """Continuous tight frame of complex exponentials on a periodic grid.

    Coordinates n = 0..d-1 sample ``exp(i (n+1) x) / sqrt(2 pi)`` on
    [0, 2 pi); with at least ``2 d + 2`` nodes the periodic trapezoid
    rule is exact for every pairwise product, so the discretized frame
    operator is the identity up to roundoff.
    """
    if d < 1:
        raise BadParams("dimension must be positive")
    if n_nodes < 2 * d + 2:
        raise BadParams(f"need at least {2 * d + 2} nodes for dimension {d}")
    ms = make_uniform(0.0, 2.0 * np.pi, n_nodes, periodic=True)
    table = np.exp(1j * np.outer(ms.nodes, np.arange(1, d + 1))) / np.sqrt(2.0 * np.pi)
    return SampledMap(table, ms, TripleSpec(d, max_order))


def default_half_width(d: int) -> float:
    """Truncation half-width: classical turning point plus Gaussian tail margin."""
    return 6.0 + np.sqrt(2.0 * d)


def make_delta_prime_hermite(
    d: int,
    n_nodes: int = 129,
    half_width: float | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> SampledMap:
    """Derivative-of-point-mass system in Hermite coordinates.

    The pairing of a test vector with the distribution at node x is
    minus the derivative of the represented function there, so
    ``table[i, n] = -h_n'(x_i)`` over a Simpson grid on
    ``[-half_width, half_width]``. Bessel, but dominated only by the
    order-1 seminorm: the Hilbert-norm constant grows with dimension.
    """
    if d < 2:
        raise BadParams("dimension must be at least 2")
    if n_nodes < 16:
        raise BadParams("need at least 16 nodes")
    half_width = default_half_width(d) if half_width is None else float(half_width)
    if not half_width > 0:
        raise BadParams("half_width must be positive")
    ms = make_uniform(-half_width, half_width, n_nodes, periodic=False)
    table = -hermite_derivatives(ms.nodes, d).T.astype(complex)
    return SampledMap(table, ms, TripleSpec(d, max_order))


def make_perturbed_riesz(
    d: int, eps: float, seed: int = 0, max_order: int = DEFAULT_MAX_ORDER
) -> SampledMap:
    """Identity table plus a spectral-norm ``eps`` random perturbation.

    The perturbation has entries in the unit disk and is normalized to
    spectral norm 1, so ``eps`` directly bounds the deviation: for
    ``eps < 1`` the system stays total, independent, a frame, and
    moment-solvable, with lower bound at least ``(1 - eps)^2``.
    """
    if d < 1:
        raise BadParams("dimension must be positive")
    if not 0.0 <= eps < 1.0:
        raise BadParams("eps must lie in [0, 1)")
    table = np.eye(d, dtype=complex)
    if eps > 0.0:
        rng = np.random.default_rng(seed)
        radius = np.sqrt(rng.random((d, d)))
        angle = 2.0 * np.pi * rng.random((d, d))
        noise = radius * np.exp(1j * angle)
        noise /= linalg.singular_values(noise)[0]
        table = table + eps * noise
    return SampledMap(table, make_counting(d), TripleSpec(d, max_order))


def make_non_total(d: int, max_order: int = DEFAULT_MAX_ORDER) -> SampledMap:
    """First d-1 coordinate units only: the last unit annihilates every row."""
    if d < 2:
        raise BadParams("dimension must be at least 2")
    table = np.eye(d, dtype=complex)[: d - 1]
    return SampledMap(table, make_counting(d - 1), TripleSpec(d, max_order))


def make(spec: GallerySpec) -> SampledMap:
    """Materialize a gallery system from its name and parameters."""
    params = dict(spec.params)
    try:
        if spec.name == "onb":
            return make_onb(int(params.pop("d")), **_rest(params))
        if spec.name == "fourier":
            return make_fourier_continuous(
                int(params.pop("d")), int(params.pop("N")), **_rest(params)
            )
        if spec.name == "delta_prime":
            d = int(params.pop("d"))
            n_nodes = int(params.pop("N", 129))
            half_width = params.pop("L", None)
            half_width = None if half_width is None else float(half_width)
            return make_delta_prime_hermite(d, n_nodes, half_width, **_rest(params))
        if spec.name == "perturbed_riesz":
            return make_perturbed_riesz(
                int(params.pop("d")),
                float(params.pop("eps", 0.0)),
                int(params.pop("seed", 0)),
                **_rest(params),
            )
        if spec.name == "non_total":
            return make_non_total(int(params.pop("d")), **_rest(params))
    except KeyError as exc:
        raise BadParams(f"gallery {spec.name!r} is missing parameter {exc}") from None
    raise BadParams(f"unknown gallery name {spec.name!r}; choose from {GALLERY_NAMES}")


def _rest(params: dict) -> dict:
    out = {}
    if "max_order" in params:
        out["max_order"] = int(params.pop("max_order"))
    if params:
        raise BadParams(f"unknown gallery parameters {sorted(params)}")
    return out


def double_dimension(spec: GallerySpec) -> GallerySpec:
    """Companion at doubled dimension, for Bessel-certificate growth tests."""
    params = dict(spec.params)
    if "d" not in params:
        raise BadParams("gallery spec has no dimension parameter to double")
    params["d"] = int(params["d"]) * 2
    return GallerySpec(spec.name, params)
