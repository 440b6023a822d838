"""Dense complex linear algebra for small matrix-subspace work.

All matrices are square numpy arrays of complex128, at dimensions of a few
dozen at most.  Matrices are treated as vectors of a Hilbert space under the
trace inner product Tr(a^dag b), which is the geometry every orthogonality
statement in this package lives in.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DimensionMismatchError",
    "RankDeficiencyError",
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "as_matrix",
    "root_of_unity",
    "kron",
    "hs_inner",
    "hs_norm",
    "gram_matrix",
    "unitarity_residual",
    "singular_values",
    "eigenvalues",
    "orthonormal_complement",
    "seeded_random_matrix",
]

TWO_PI = 2.0 * np.pi


class DimensionMismatchError(ValueError):
    """Operands do not have the required (matching, square) shapes."""


class RankDeficiencyError(ValueError):
    """Input matrices are linearly dependent where independence is required."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared across verification and spectral checks."""

    unitarity_tol: float = 1e-10
    gram_tol: float = 1e-10
    phase_tol: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("unitarity_tol", "gram_tol", "phase_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOLERANCES = Tolerances()


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-d complex128 array, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def _square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    return m


def _same_square(a, b) -> tuple[np.ndarray, np.ndarray]:
    ma, mb = _square(a), _square(b)
    if ma.shape != mb.shape:
        raise DimensionMismatchError(f"dimension mismatch: {ma.shape} vs {mb.shape}")
    return ma, mb


# Single phase primitive: every root of unity in the package comes from here,
# so identical (k mod n)/n arguments produce bit-identical complex values.
# Quadrant angles are returned exactly.
_QUADRANT = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


def root_of_unity(k: int, n: int) -> complex:
    """e^(2*pi*i*k/n) with k reduced mod n; exact on quadrant angles."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    r = k % n
    if (4 * r) % n == 0:
        return _QUADRANT[(4 * r) // n]
    return complex(np.exp(2j * np.pi * (r / n)))


def kron(a, b) -> np.ndarray:
    """Kronecker product; dimensions multiply."""
    return np.kron(as_matrix(a), as_matrix(b))


def hs_inner(a, b) -> complex:
    """Trace inner product Tr(a^dag b) of two square matrices of equal size."""
    ma, mb = _same_square(a, b)
    return complex(np.vdot(ma, mb))


def hs_norm(a) -> float:
    """Frobenius norm, i.e. sqrt of the trace inner product of a with itself."""
    return float(np.linalg.norm(as_matrix(a)))


def gram_matrix(mats) -> np.ndarray:
    """Matrix of pairwise trace inner products of a list of square matrices.

    Entry (a, b) is Tr(m_a^dag m_b).  All inputs must be square and share one
    dimension.
    """
    mats = list(mats)
    if not mats:
        raise ValueError("gram_matrix needs at least one matrix")
    first = _square(mats[0])
    flat = np.empty((len(mats), first.size), dtype=np.complex128)
    flat[0] = first.ravel()
    for i, m in enumerate(mats[1:], start=1):
        mi = _square(m)
        if mi.shape != first.shape:
            raise DimensionMismatchError(
                f"dimension mismatch at element {i}: {mi.shape} vs {first.shape}"
            )
        flat[i] = mi.ravel()
    return flat.conj() @ flat.T


def unitarity_residual(a) -> float:
    """Max entry magnitude of a^dag a - I; zero exactly when a is unitary."""
    m = _square(a)
    eye = np.eye(m.shape[0], dtype=np.complex128)
    return float(np.max(np.abs(m.conj().T @ m - eye)))


def singular_values(a) -> np.ndarray:
    """Singular values of a square matrix, descending."""
    return np.linalg.svd(_square(a), compute_uv=False)


def eigenvalues(a) -> np.ndarray:
    """Eigenvalue multiset of a square matrix (callers pass normal matrices)."""
    return np.linalg.eigvals(_square(a))


def orthonormal_complement(mats, *, rank_tol: float = 1e-8) -> list[np.ndarray]:
    """Orthonormal basis of the trace-orthogonal complement of span(mats).

    The standard matrix units are projected onto the complement and
    orthonormalized greedily (largest residual first) with a
    re-orthogonalization pass.  This avoids forming a Gram system and keeps
    the output aligned with the matrix-unit structure whenever the complement
    happens to contain matrix units outright.

    Parameters
    ----------
    mats : sequence of square complex matrices, all of one dimension d,
        linearly independent.
    rank_tol : relative threshold below which an input is declared linearly
        dependent on its predecessors.

    Returns
    -------
    list of d x d arrays, pairwise orthonormal in the trace inner product and
    orthogonal to every input; its length is d^2 - len(mats).

    Raises
    ------
    RankDeficiencyError
        If the inputs are not linearly independent.
    DimensionMismatchError
        If the inputs are not square matrices of one common dimension.
    """
    mats = [_square(m) for m in mats]
    if not mats:
        raise ValueError("orthonormal_complement needs at least one matrix")
    d = mats[0].shape[0]
    for i, m in enumerate(mats):
        if m.shape[0] != d:
            raise DimensionMismatchError(
                f"dimension mismatch at element {i}: {m.shape} vs ({d}, {d})"
            )

    # Orthonormalize the input span first (modified Gram-Schmidt, two passes).
    span: list[np.ndarray] = []
    for m in mats:
        v = m.ravel().astype(np.complex128, copy=True)
        scale = np.linalg.norm(v)
        for _ in range(2):
            for q in span:
                v -= np.vdot(q, v) * q
        n = np.linalg.norm(v)
        if n < rank_tol * max(scale, 1.0):
            raise RankDeficiencyError(
                "input set is rank deficient; complement of a dependent set is ill-posed"
            )
        span.append(v / n)

    # Residuals of every matrix unit after projecting out the input span.
    dim2 = d * d
    residuals = []
    for idx in range(dim2):
        v = np.zeros(dim2, dtype=np.complex128)
        v[idx] = 1.0
        for _ in range(2):
            for q in span:
                v -= np.vdot(q, v) * q
        residuals.append(v)

    out: list[np.ndarray] = []
    for _ in range(dim2 - len(span)):
        norms = [np.linalg.norm(v) for v in residuals]
        j = int(np.argmax(norms))
        if norms[j] < 1e-8:
            raise np.linalg.LinAlgError("complement extraction lost rank")
        q = residuals[j] / norms[j]
        for p in out:
            q -= np.vdot(p, q) * p
        q /= np.linalg.norm(q)
        out.append(q)
        for i, v in enumerate(residuals):
            residuals[i] = v - np.vdot(q, v) * q
    return [v.reshape(d, d) for v in out]


def seeded_random_matrix(dim: int, seed: int) -> np.ndarray:
    """Deterministic random matrix with i.i.d. standard complex Gaussian entries.

    Each entry is (x + i y) / sqrt(2) with x, y drawn from N(0, 1) using
    numpy's default generator seeded with ``seed``; the real parts of all
    entries are drawn first, then the imaginary parts.  The Frobenius norm
    concentrates near ``dim``.
    """
    if dim < 1:
        raise ValueError("dim must be a positive integer")
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((dim, dim))
    y = rng.standard_normal((dim, dim))
    return (x + 1j * y) / np.sqrt(2.0)
