"""Finite-dimensional frame theory for sampled distribution systems.

Builds analysis, synthesis, frame, and Gram operators from an
evaluation table over a weighted node set, classifies the system
(Bessel, bounded Bessel, upper semiframe, Riesz-Fischer, frame),
solves moment problems by minimum-norm least squares, and certifies
moment solvability through the lower bound of the synthesis operator.
"""

from .errors import (
    BadInterval,
    BadParams,
    CertificateUnstable,
    DimMismatch,
    NoConvergence,
    NotAFrame,
    NotHermitian,
    NotTotal,
    OrderOutOfRange,
    RiggedFrameError,
)
from .gelfand import BoundedSet, TripleSpec, decay_profile, dual_seminorm, pairing, seminorm
from .linalg import (
    HermitianEigenResult,
    SvdResult,
    dagger,
    hermitian_eig,
    pseudo_inverse,
    singular_values,
    svd,
)
from .measure import MeasureSpace, integrate, l2_inner, l2_norm, make_counting, make_uniform
from .moment import (
    MomentSolution,
    RFCertificate,
    canonical_dual,
    dual_reconstruct,
    rf_certificate,
    rf_equivalence_check,
    solve_moment,
    stability_constant,
)
from .spectra import (
    BesselCertificate,
    Classification,
    FrameBounds,
    Tolerances,
    bessel_bound,
    bessel_certificate,
    classify,
    frame_bounds,
    is_frame,
    riesz_fischer_lower_bound,
    upper_semiframe_check,
)
from .wmap import (
    SampledMap,
    analysis,
    analysis_matrix,
    frame_matrix,
    gram_matrix,
    is_mu_independent,
    is_total,
    synthesis,
    synthesis_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BadInterval",
    "BadParams",
    "BesselCertificate",
    "BoundedSet",
    "CertificateUnstable",
    "Classification",
    "DimMismatch",
    "FrameBounds",
    "HermitianEigenResult",
    "MeasureSpace",
    "MomentSolution",
    "NoConvergence",
    "NotAFrame",
    "NotHermitian",
    "NotTotal",
    "OrderOutOfRange",
    "RFCertificate",
    "RiggedFrameError",
    "SampledMap",
    "SvdResult",
    "Tolerances",
    "TripleSpec",
    "analysis",
    "analysis_matrix",
    "bessel_bound",
    "bessel_certificate",
    "canonical_dual",
    "classify",
    "dagger",
    "decay_profile",
    "dual_reconstruct",
    "dual_seminorm",
    "frame_bounds",
    "frame_matrix",
    "gram_matrix",
    "hermitian_eig",
    "integrate",
    "is_frame",
    "is_mu_independent",
    "is_total",
    "l2_inner",
    "l2_norm",
    "make_counting",
    "make_uniform",
    "pairing",
    "pseudo_inverse",
    "rf_certificate",
    "rf_equivalence_check",
    "riesz_fischer_lower_bound",
    "seminorm",
    "singular_values",
    "solve_moment",
    "stability_constant",
    "svd",
    "synthesis",
    "synthesis_matrix",
    "upper_semiframe_check",
    "__version__",
]
