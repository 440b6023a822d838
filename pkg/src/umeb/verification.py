"""Axiom checks, extension search, and structural certification.

Three layers of scrutiny for a candidate set of d x d matrices:

* :func:`verify_axioms` checks the defining conditions exactly as stated:
  fewer than d^2 elements, all unitary, pairwise trace inner products d on
  the diagonal and 0 off it.
* :func:`search_extension` hunts for a unitary inside the trace-orthogonal
  complement by nuclear-norm ascent.  Finding one is rigorous (a constructive
  witness, re-verified); not finding one is evidence, not proof.
* :func:`structural_certify` replays the block-structure argument behind the
  tensor-product lift, giving a rigorous certificate conditional on the
  unextendibility of the base set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .constructions import (
    BravyiSmolin3,
    External,
    Lift,
    Provenance,
    UMEBCandidate,
    Umeb6,
    fourier_matrix,
    provenance_to_str,
    rebuild_from_provenance,
)
from .linalg import (
    DEFAULT_TOLERANCES,
    Tolerances,
    as_matrix,
    gram_matrix,
    orthonormal_complement,
    seeded_random_matrix,
    singular_values,
    unitarity_residual,
)

__all__ = [
    "MaxEntangledState",
    "VerificationReport",
    "ExtendibilitySearchResult",
    "CertificateCheck",
    "StructuralCertificate",
    "to_state",
    "verify_axioms",
    "search_extension",
    "structural_certify",
    "SUB_SEED_STRIDE",
]


# ---------------------------------------------------------------------------
# States
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MaxEntangledState:
    """Bipartite pure state on C^d (x) C^d in the computational product basis.

    ``amplitudes[i*d + j]`` is the coefficient of |i>|j>.  The state has unit
    norm exactly when the generating matrix has squared Frobenius norm d, and
    it is maximally entangled exactly when all Schmidt coefficients equal
    1/sqrt(d).
    """

    dim: int
    amplitudes: np.ndarray
    schmidt_coefficients: np.ndarray

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def overlap(self, other: "MaxEntangledState") -> complex:
        """Inner product <self|other>."""
        if self.dim != other.dim:
            raise ValueError("states live on different dimensions")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def is_maximally_entangled(self, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        target = 1.0 / np.sqrt(self.dim)
        return bool(np.max(np.abs(self.schmidt_coefficients - target)) < tol.phase_tol)


def to_state(u) -> MaxEntangledState:
    """State (I (x) u) sum_i |i>|i> / sqrt(d) associated with a square matrix.

    The amplitude of |i>|j> is u[j, i] / sqrt(d), so trace inner products of
    matrices turn into state overlaps divided by d.  Schmidt coefficients are
    the singular values of u over sqrt(d), descending.
    """
    m = as_matrix(u)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    d = m.shape[0]
    amps = m.T.ravel() / np.sqrt(d)
    return MaxEntangledState(d, amps, singular_values(m) / np.sqrt(d))


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    """Numeric residuals of the three defining conditions."""

    dim: int
    element_count: int
    max_unitarity_residual: float
    max_gram_offdiag: float
    max_gram_diag_error: float
    condition_i_ok: bool
    passed: bool

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "element_count": self.element_count,
            "max_unitarity_residual": self.max_unitarity_residual,
            "max_gram_offdiag": self.max_gram_offdiag,
            "max_gram_diag_error": self.max_gram_diag_error,
            "condition_i_ok": self.condition_i_ok,
            "passed": self.passed,
        }


def verify_axioms(c: UMEBCandidate, tol: Tolerances = DEFAULT_TOLERANCES) -> VerificationReport:
    """Check element count, unitarity, and pairwise trace orthogonality.

    ``passed`` requires every unitarity residual below ``tol.unitarity_tol``,
    every Gram residual (|Tr(U_a^dag U_b)| off-diagonal, |Tr(U_a^dag U_a) - d|
    on it) below ``tol.gram_tol``, and fewer than d^2 elements.  A complete
    orthogonal basis of the matrix space fails only the count condition.
    """
    if len(c.elements) == 0:
        raise ValueError("candidate has no elements")
    d = c.dim
    max_unit = max(unitarity_residual(u) for u in c.elements)
    g = gram_matrix(c.elements)
    off = g - np.diag(np.diag(g))
    max_off = float(np.max(np.abs(off))) if len(c.elements) > 1 else 0.0
    max_diag = float(np.max(np.abs(np.diag(g) - d)))
    condition_i = len(c.elements) < d * d
    passed = (
        max_unit < tol.unitarity_tol
        and max_off < tol.gram_tol
        and max_diag < tol.gram_tol
        and condition_i
    )
    return VerificationReport(
        dim=d,
        element_count=len(c.elements),
        max_unitarity_residual=float(max_unit),
        max_gram_offdiag=max_off,
        max_gram_diag_error=max_diag,
        condition_i_ok=condition_i,
        passed=passed,
    )


# ---------------------------------------------------------------------------
# Extension search (nuclear-norm ascent over the complement)
# ---------------------------------------------------------------------------

SUB_SEED_STRIDE = 1_000_003
# Restart r of a search with seed s draws from seeded_random_matrix with
# sub-seed s*SUB_SEED_STRIDE + r, so restarts are order-independent.


@dataclass(frozen=True)
class ExtendibilitySearchResult:
    """Outcome of the nuclear-norm ascent.

    ``witness`` is the best matrix found inside the complement, scaled to
    squared Frobenius norm d; its nuclear norm is ``best_nuclear_norm`` and
    ``gap = d - best_nuclear_norm``.  On ExtensionFound the witness is first
    refined to a unitary fixed point when one is nearby, and ``extension``
    holds its polar factor: an exactly unitary matrix re-verified to be
    trace-orthogonal to the whole candidate.  The verdicts are asymmetric:
    ExtensionFound is constructive, NoExtensionFound only reports that the
    ascent never got within ``extension_tol`` of a unitary.
    """

    verdict: str
    best_nuclear_norm: float
    gap: float
    witness: Optional[np.ndarray]
    restarts: int
    iters: int
    seed: int
    complement_dim: int
    extension: Optional[np.ndarray] = None
    extension_unitarity_residual: Optional[float] = None
    extension_max_gram_overlap: Optional[float] = None
    best_restart: int = 0
    objective_traces: tuple = ()
    notes: tuple = ()

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "best_nuclear_norm": self.best_nuclear_norm,
            "gap": self.gap,
            "restarts": self.restarts,
            "iters": self.iters,
            "seed": self.seed,
            "complement_dim": self.complement_dim,
            "best_restart": self.best_restart,
            "extension_unitarity_residual": self.extension_unitarity_residual,
            "extension_max_gram_overlap": self.extension_max_gram_overlap,
            "notes": list(self.notes),
        }


def _complement_projector(basis: list[np.ndarray], d: int):
    flat = np.array([b.ravel() for b in basis])

    def proj(m: np.ndarray) -> np.ndarray:
        coeffs = flat.conj() @ m.ravel()
        return (coeffs @ flat).reshape(d, d)

    return proj


def _refine_in_complement(
    witness: np.ndarray, flat: np.ndarray, d: int, steps: int = 80
) -> Optional[np.ndarray]:
    """Drive a near-unitary complement matrix to an exactly unitary one.

    The ascent meets the unitary manifold tangentially, so its gap closes
    only like 1/iterations^2; Gauss-Newton on the unitarity residual, run in
    complement coordinates (which keeps every iterate exactly inside the
    complement), contracts geometrically instead.  Returns the refined matrix
    or None when the residual will not drop below 1e-9 (no unitary nearby).
    """
    x = flat.conj() @ witness.ravel()
    eye = np.eye(d)
    best = None
    best_resid = np.inf
    for _ in range(steps):
        m = (x @ flat).reshape(d, d)
        err = m.conj().T @ m - eye
        resid = float(np.max(np.abs(err)))
        if resid < best_resid:
            best, best_resid = m, resid
        if resid < 1e-14:
            break
        f = np.concatenate([err.real.ravel(), err.imag.ravel()])
        cols = []
        for k in range(flat.shape[0]):
            bk = flat[k].reshape(d, d)
            for dk in (bk, 1j * bk):
                de = dk.conj().T @ m + m.conj().T @ dk
                cols.append(np.concatenate([de.real.ravel(), de.imag.ravel()]))
        jac = np.stack(cols, axis=1)
        delta, *_ = np.linalg.lstsq(jac, -f, rcond=None)
        x = x + delta[0::2] + 1j * delta[1::2]
    if best is None or best_resid > 1e-9:
        return None
    return best


def search_extension(
    c: UMEBCandidate,
    restarts: int = 100,
    iters: int = 500,
    seed: int = 0,
    extension_tol: float = 1e-6,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> ExtendibilitySearchResult:
    """Search the trace-orthogonal complement for a unitary matrix.

    Among complement matrices M with ||M||_F^2 = d, the nuclear norm
    sum sigma_i(M) is at most d, with equality exactly on unitaries.  Each
    restart seeds a random matrix, projects it into the complement, rescales,
    and then alternates: replace M by the projection of its polar factor,
    rescaled.  Every step maximizes the linear functional Re Tr(P^dag M) that
    touches the current objective from above, so the recorded objective is
    non-decreasing along each restart.

    ExtensionFound requires the best gap d - sum sigma_i below
    ``extension_tol``.  The winning witness is then refined inside the
    complement by Gauss-Newton on the unitarity residual (the ascent alone
    closes the last stretch only quadratically slowly), and its polar factor
    is re-verified (unitarity and all trace overlaps) and returned.

    A candidate whose span is the whole matrix space has nothing to search:
    the result is NoExtensionFound with gap d and an explanatory note.
    """
    if restarts < 1:
        raise ValueError("restarts must be a positive integer")
    if iters < 1:
        raise ValueError("iters must be a positive integer")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    if extension_tol <= 0:
        raise ValueError("extension_tol must be positive")

    report = verify_axioms(c, tol)
    if (
        report.max_unitarity_residual >= tol.unitarity_tol
        or report.max_gram_offdiag >= tol.gram_tol
        or report.max_gram_diag_error >= tol.gram_tol
    ):
        raise ValueError(
            "candidate fails the unitarity/orthogonality axioms; "
            "run verify_axioms for details"
        )

    d = c.dim
    basis = orthonormal_complement(c.elements)
    if not basis:
        return ExtendibilitySearchResult(
            verdict="NoExtensionFound",
            best_nuclear_norm=0.0,
            gap=float(d),
            witness=None,
            restarts=restarts,
            iters=iters,
            seed=seed,
            complement_dim=0,
            notes=("candidate spans the full matrix space; the complement is trivial",),
        )

    proj = _complement_projector(basis, d)
    sqrt_d = np.sqrt(d)

    best_norm = -np.inf
    best_restart = 0
    best_witness = None
    traces = []
    for r in range(restarts):
        m = proj(seeded_random_matrix(d, seed * SUB_SEED_STRIDE + r))
        m = sqrt_d * m / np.linalg.norm(m)
        trace = np.empty(iters)
        for t in range(iters):
            u, s, vh = np.linalg.svd(m)
            trace[t] = s.sum()
            if t == iters - 1:
                break
            p = proj(u @ vh)
            pn = np.linalg.norm(p)
            if pn < 1e-14:
                # Polar factor orthogonal to the complement; cannot happen for
                # nonzero m but guard the division anyway.
                trace = trace[: t + 1]
                break
            m = sqrt_d * p / pn
        traces.append(trace)
        if trace[-1] > best_norm:
            best_norm = float(trace[-1])
            best_restart = r
            best_witness = m

    gap = d - best_norm
    notes = []
    extension = None
    ext_unit = None
    ext_overlap = None
    if gap < extension_tol:
        verdict = "ExtensionFound"
        flat = np.array([b.ravel() for b in basis])
        refined = _refine_in_complement(best_witness, flat, d)
        if refined is not None:
            # Rescale back to the witness normalization; the refined matrix
            # stays exactly inside the complement by construction.
            best_witness = sqrt_d * refined / np.linalg.norm(refined)
            refined_norm = float(singular_values(best_witness).sum())
            notes.append(
                "winning witness refined to a unitary fixed point "
                f"(gap {gap:.3e} -> {d - refined_norm:.3e})"
            )
            best_norm = refined_norm
            gap = d - refined_norm
        u, _, vh = np.linalg.svd(best_witness)
        extension = u @ vh
        ext_unit = unitarity_residual(extension)
        ext_overlap = max(
            abs(complex(np.vdot(a, extension))) for a in c.elements
        )
        notes.append(
            "extension re-verified: unitarity residual "
            f"{ext_unit:.3e}, max trace overlap {ext_overlap:.3e}"
        )
    else:
        verdict = "NoExtensionFound"
        notes.append(
            "no unitary found in the complement; this is evidence, not proof"
        )

    return ExtendibilitySearchResult(
        verdict=verdict,
        best_nuclear_norm=best_norm,
        gap=float(gap),
        witness=best_witness,
        restarts=restarts,
        iters=iters,
        seed=seed,
        complement_dim=len(basis),
        extension=extension,
        extension_unitarity_residual=ext_unit,
        extension_max_gram_overlap=ext_overlap,
        best_restart=best_restart,
        objective_traces=tuple(tuple(map(float, t)) for t in traces),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Structural certification of lifted candidates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertificateCheck:
    name: str
    passed: bool
    detail: float

    def __post_init__(self):
        # numpy comparison results sneak in as np.bool_ / np.float64
        object.__setattr__(self, "passed", bool(self.passed))
        object.__setattr__(self, "detail", float(self.detail))

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class StructuralCertificate:
    """Replay of the block-structure proof for a lifted candidate.

    ``overall`` is CertifiedConditionalOnBase when every check passes and the
    provenance identifies a lift; the certificate is conditional because the
    base set's own unextendibility is either certified recursively or taken
    as an assumption recorded in the notes.
    """

    overall: str
    checks: tuple[CertificateCheck, ...] = ()
    notes: tuple[str, ...] = ()
    base_provenance: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "overall": self.overall,
            "checks": [ch.to_dict() for ch in self.checks],
            "notes": list(self.notes),
            "base_provenance": self.base_provenance,
        }


def _block_masses(m: np.ndarray, q: int, d: int) -> tuple[float, float]:
    """Max magnitudes on diagonal blocks and off-diagonal blocks of a qd x qd
    matrix viewed as a q x q grid of d x d blocks."""
    blocks = m.reshape(q, d, q, d)
    diag_mass = 0.0
    off_mass = 0.0
    for a in range(q):
        for b in range(q):
            mass = float(np.max(np.abs(blocks[a, :, b, :])))
            if a == b:
                diag_mass = max(diag_mass, mass)
            else:
                off_mass = max(off_mass, mass)
    return diag_mass, off_mass


def _lift_shape(p: Provenance) -> Optional[tuple[Provenance, int, int, int]]:
    """(base provenance, base dim, base count, q) when p describes a lift."""
    if isinstance(p, Lift):
        return p.base, p.base_dim, p.base_count, p.q
    if isinstance(p, Umeb6):
        # The explicit 30-member set is the q = 2 lift of the d = 3 base, in
        # the same element order, so the sector split carries over.
        return BravyiSmolin3(), 3, 6, 2
    return None


def structural_certify(c: UMEBCandidate, tol: Tolerances = DEFAULT_TOLERANCES) -> StructuralCertificate:
    """Certify unextendibility of a lifted candidate, conditional on its base.

    Applicable only when provenance identifies the candidate as a lift (the
    explicit 30-member set counts, being the q = 2 lift in the same order).
    The checks mirror the proof that any matrix trace-orthogonal to the whole
    set must be zero unless a base extension exists:

    1. weyl_sector_spans_offdiagonal_blocks: the first q(q-1)d^2 elements
       vanish on diagonal blocks and span that full off-diagonal-block space.
    2. complement_is_block_diagonal: the numerically computed complement of
       the Weyl sector consists of block-diagonal matrices.
    3. vandermonde_det_nonzero: the q x q root-of-unity matrix whose rows
       phase the blocks is invertible (|det| = q^(q/2) exactly).
    4. base_trace_system_reduces: that matrix is well-conditioned, so the
       homogeneous system forcing all block traces against the base to vanish
       has only the zero solution.
    5. base_case_verdict: the base is certified recursively when its own
       provenance is a lift, re-verified numerically when reconstructable,
       and otherwise recorded as an external assumption.
    """
    shape = _lift_shape(c.provenance)
    if shape is None:
        return StructuralCertificate(
            overall="NotApplicable",
            notes=(
                "structural certification applies only to lifted candidates; "
                f"provenance is {provenance_to_str(c.provenance)!r}",
            ),
        )
    base_prov, d, base_count, q = shape

    checks: list[CertificateCheck] = []
    notes: list[str] = []

    expected_total = q * (q - 1) * d * d + q * base_count
    weyl_count = q * (q - 1) * d * d
    if c.dim != q * d or len(c.elements) != expected_total:
        checks.append(CertificateCheck("weyl_sector_spans_offdiagonal_blocks", False, float("nan")))
        notes.append(
            f"candidate shape ({c.dim}, {len(c.elements)} elements) does not match "
            f"the declared lift (dim {q * d}, {expected_total} elements)"
        )
        return StructuralCertificate(
            overall="Failed",
            checks=tuple(checks),
            notes=tuple(notes),
            base_provenance=provenance_to_str(base_prov),
        )

    weyl_sector = c.elements[:weyl_count]
    qd = c.dim

    # Check 1: zero diagonal blocks and full off-diagonal span.
    diag_mass = 0.0
    for m in weyl_sector:
        dm, _ = _block_masses(m, q, d)
        diag_mass = max(diag_mass, dm)
    if weyl_count:
        flat = np.array([m.ravel() for m in weyl_sector])
        svals = np.linalg.svd(flat, compute_uv=False)
        rank = int(np.sum(svals > 1e-8 * svals[0]))
    else:
        rank = 0
    span_ok = diag_mass < 1e-10 and rank == weyl_count
    checks.append(CertificateCheck("weyl_sector_spans_offdiagonal_blocks", span_ok, diag_mass))
    if rank != weyl_count:
        notes.append(f"weyl sector rank {rank}, expected {weyl_count}")

    # Check 2: complement of the Weyl sector is block-diagonal of dim qd^2.
    if weyl_count:
        comp = orthonormal_complement(weyl_sector)
        off_mass = 0.0
        for b in comp:
            _, om = _block_masses(b, q, d)
            off_mass = max(off_mass, om)
        comp_ok = off_mass < 1e-10 and len(comp) == q * d * d
        if len(comp) != q * d * d:
            notes.append(f"complement dimension {len(comp)}, expected {q * d * d}")
    else:
        # q = 1: no off-diagonal blocks exist and the complement is everything.
        off_mass = 0.0
        comp_ok = True
    checks.append(CertificateCheck("complement_is_block_diagonal", comp_ok, off_mass))

    # Check 3: the root-of-unity Vandermonde matrix is invertible.
    w = fourier_matrix(q)
    det = abs(np.linalg.det(w))
    det_bound = 0.5 * q ** (q / 2.0)
    checks.append(CertificateCheck("vandermonde_det_nonzero", det >= det_bound, det))

    # Check 4: the block-trace system is solvable only by zero.
    cond = float(np.linalg.cond(w))
    checks.append(CertificateCheck("base_trace_system_reduces", cond < 1e8, cond))

    # Check 5: the base case.
    base = rebuild_from_provenance(base_prov)
    if base is None:
        base_ok = isinstance(base_prov, (BravyiSmolin3, External))
        base_detail = float("nan")
        if base_ok:
            notes.append(
                "base unextendibility assumed for external set "
                f"{provenance_to_str(base_prov)!r}; attach extension-search evidence"
            )
        else:
            notes.append("base provenance cannot be reconstructed or assumed")
    else:
        base_report = verify_axioms(base, tol)
        base_detail = max(
            base_report.max_unitarity_residual,
            base_report.max_gram_offdiag,
            base_report.max_gram_diag_error,
        )
        base_ok = base_report.passed
        if not base_report.passed:
            notes.append(
                "reconstructed base fails the axioms "
                f"(condition (i) ok: {base_report.condition_i_ok})"
            )
        elif _lift_shape(base_prov) is not None:
            inner = structural_certify(base, tol)
            base_ok = inner.overall == "CertifiedConditionalOnBase"
            notes.append(f"base certified recursively: {inner.overall}")
        elif isinstance(base_prov, BravyiSmolin3):
            notes.append(
                "base unextendibility for the six-member dimension-3 family "
                "is a standing assumption here; search_extension supplies the "
                "numerical evidence"
            )
        else:
            notes.append(
                "base re-verified numerically; unextendibility taken as assumption"
            )
    checks.append(CertificateCheck("base_case_verdict", base_ok, base_detail))

    overall = "CertifiedConditionalOnBase" if all(ch.passed for ch in checks) else "Failed"
    return StructuralCertificate(
        overall=overall,
        checks=tuple(checks),
        notes=tuple(notes),
        base_provenance=provenance_to_str(base_prov),
    )
