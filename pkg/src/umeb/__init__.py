"""Unextendible maximally entangled bases as sets of unitary matrices.

A set of n < d^2 unitaries with pairwise trace inner products d*delta
corresponds, through |phi> = (I (x) U) sum_i |ii> / sqrt(d), to an orthonormal
family of maximally entangled states; it is unextendible when its
trace-orthogonal complement contains no unitary.  This package builds the
known families, lifts them to higher dimensions, verifies the axioms, searches
for extensions, certifies lifts structurally, and fingerprints sets by the
orders of their eigenvalues.
"""

from .linalg import (
    DEFAULT_TOLERANCES,
    DimensionMismatchError,
    RankDeficiencyError,
    Tolerances,
    gram_matrix,
    hs_inner,
    hs_norm,
    kron,
    orthonormal_complement,
    root_of_unity,
    seeded_random_matrix,
    unitarity_residual,
)
from .constructions import (
    BravyiSmolin3,
    External,
    Lift,
    UMEBCandidate,
    UMEBFormatError,
    Umeb6,
    WeylFamily,
    bravyi_smolin_3,
    bravyi_smolin_states,
    cyclic_shift,
    fourier_matrix,
    lift,
    lift_counts,
    load_umeb,
    provenance_from_str,
    provenance_to_str,
    rebuild_from_provenance,
    row_diag,
    save_umeb,
    umeb_6,
    weyl,
    weyl_family,
)
from .verification import (
    ExtendibilitySearchResult,
    MaxEntangledState,
    StructuralCertificate,
    VerificationReport,
    search_extension,
    structural_certify,
    to_state,
    verify_axioms,
)
from .spectral import (
    Finite,
    NoOrderUpTo,
    ProvablyInfinite,
    SpectralSignature,
    compare_signatures,
    eigenphases,
    niven_classify,
    order_up_to,
    sector_summaries,
    sector_table,
    signature,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOLERANCES",
    "DimensionMismatchError",
    "RankDeficiencyError",
    "Tolerances",
    "gram_matrix",
    "hs_inner",
    "hs_norm",
    "kron",
    "orthonormal_complement",
    "root_of_unity",
    "seeded_random_matrix",
    "unitarity_residual",
    "BravyiSmolin3",
    "External",
    "Lift",
    "UMEBCandidate",
    "UMEBFormatError",
    "Umeb6",
    "WeylFamily",
    "bravyi_smolin_3",
    "bravyi_smolin_states",
    "cyclic_shift",
    "fourier_matrix",
    "lift",
    "lift_counts",
    "load_umeb",
    "provenance_from_str",
    "provenance_to_str",
    "rebuild_from_provenance",
    "row_diag",
    "save_umeb",
    "umeb_6",
    "weyl",
    "weyl_family",
    "ExtendibilitySearchResult",
    "MaxEntangledState",
    "StructuralCertificate",
    "VerificationReport",
    "search_extension",
    "structural_certify",
    "to_state",
    "verify_axioms",
    "Finite",
    "NoOrderUpTo",
    "ProvablyInfinite",
    "SpectralSignature",
    "compare_signatures",
    "eigenphases",
    "niven_classify",
    "order_up_to",
    "sector_summaries",
    "sector_table",
    "signature",
    "__version__",
]
