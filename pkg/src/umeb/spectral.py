"""Spectral signatures and eigenvalue-order classification.

Two unitary sets related by simultaneous conjugation and relabeling have the
same eigenvalue multisets, so any invariant built from eigenphases separates
inequivalent sets soundly.  This module computes such a signature: for every
element, the sorted eigenphases and the multiplicative order of each
eigenvalue.  Orders are reported as Finite(n), as the honest NoOrderUpTo
when a scan finds nothing, or as ProvablyInfinite when exact rational-cosine
metadata applies: a rational cosine whose square is outside
{0, 1/4, 1/2, 3/4, 1} belongs to an angle that is no rational multiple of pi,
and multiplying by any root of unity cannot repair that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .constructions import UMEBCandidate
from .linalg import (
    DEFAULT_TOLERANCES,
    TWO_PI,
    Tolerances,
    as_matrix,
    eigenvalues,
    unitarity_residual,
)
from .verification import _lift_shape

__all__ = [
    "Finite",
    "NoOrderUpTo",
    "ProvablyInfinite",
    "OrderClassification",
    "ElementSpectrum",
    "SignatureSummary",
    "SpectralSignature",
    "SectorRow",
    "PHASE_BUCKET",
    "eigenphases",
    "order_up_to",
    "niven_classify",
    "signature",
    "compare_signatures",
    "sector_summaries",
    "sector_table",
]


# Bucket width for canonical phase comparison; fixed so signatures computed on
# different platforms agree bit for bit.
PHASE_BUCKET = 1e-9
_FULL_TURN_TICKS = round(TWO_PI / PHASE_BUCKET)


# ---------------------------------------------------------------------------
# Order classifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Finite:
    """Least positive n with lambda^n = 1 (within phase tolerance)."""

    order: int


@dataclass(frozen=True)
class NoOrderUpTo:
    """No power up to the scan bound returned to 1; nothing is claimed beyond."""

    bound: int


@dataclass(frozen=True)
class ProvablyInfinite:
    """Order infinite by the rational-cosine criterion; reason is the exact cosine."""

    reason: Fraction


OrderClassification = Union[Finite, NoOrderUpTo, ProvablyInfinite]


def _cls_key(c: OrderClassification) -> tuple[int, int, int]:
    if isinstance(c, Finite):
        return (0, c.order, 1)
    if isinstance(c, NoOrderUpTo):
        return (1, c.bound, 1)
    return (2, c.reason.numerator, c.reason.denominator)


def _cls_dict(c: OrderClassification) -> dict:
    if isinstance(c, Finite):
        return {"kind": "Finite", "order": c.order}
    if isinstance(c, NoOrderUpTo):
        return {"kind": "NoOrderUpTo", "bound": c.bound}
    return {
        "kind": "ProvablyInfinite",
        "cos": [c.reason.numerator, c.reason.denominator],
    }


# ---------------------------------------------------------------------------
# Per-phase primitives
# ---------------------------------------------------------------------------

def eigenphases(u, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Eigenvalue phases of a unitary matrix, ascending in [0, 2*pi).

    Raises ValueError when the input is not unitary within
    ``tol.unitarity_tol``; eigenphases of non-unitary matrices would not lie
    on the circle and have no order to speak of.
    """
    m = as_matrix(u)
    res = unitarity_residual(m)
    if res >= tol.unitarity_tol:
        raise ValueError(f"matrix is not unitary (residual {res:.3e})")
    phases = np.mod(np.angle(eigenvalues(m)), TWO_PI)
    phases[phases >= TWO_PI] -= TWO_PI
    phases.sort()
    return phases


def order_up_to(phase: float, bound: int, tol: float = 1e-9) -> OrderClassification:
    """Smallest n <= bound with n*phase a multiple of 2*pi, within tol.

    Returns Finite(n) on success and NoOrderUpTo(bound) otherwise; an
    irrational-multiple-of-pi phase can never be confirmed infinite this way.
    """
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = np.arange(1, bound + 1)
    r = np.mod(n * float(phase), TWO_PI)
    dist = np.minimum(r, TWO_PI - r)
    hits = np.flatnonzero(dist < tol)
    if hits.size:
        return Finite(int(n[hits[0]]))
    return NoOrderUpTo(bound)


# Rational cosines whose angle is a rational multiple of pi, with the order
# of the corresponding eigenvalue e^(i*arccos).
_FINITE_COS_ORDERS = {
    Fraction(1): 1,
    Fraction(-1): 2,
    Fraction(1, 2): 6,
    Fraction(-1, 2): 3,
    Fraction(0): 4,
}


def niven_classify(cos_value) -> OrderClassification:
    """Classify the order of e^(i*theta) from an exact rational cos(theta).

    If cos^2 lies outside {0, 1/4, 1/2, 3/4, 1}, the angle is an irrational
    multiple of pi and the order is infinite; that conclusion survives
    multiplication by any root of unity.  The only rational cosines inside
    that set are 0, +/-1/2, +/-1, each with a known finite order.
    """
    c = Fraction(cos_value)
    if not -1 <= c <= 1:
        raise ValueError(f"cosine {c} outside [-1, 1]")
    if c in _FINITE_COS_ORDERS:
        return Finite(_FINITE_COS_ORDERS[c])
    return ProvablyInfinite(c)


# ---------------------------------------------------------------------------
# Whole-set signatures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ElementSpectrum:
    """Eigenphases of one element with their order classifications.

    Entries are sorted by (phase bucket, classification); ``phase_ticks`` are
    the bucketed phases used for canonical comparison, ``phases`` the raw
    floats kept for reporting only.
    """

    phases: tuple[float, ...]
    phase_ticks: tuple[int, ...]
    classifications: tuple[OrderClassification, ...]

    def canonical_key(self):
        return (self.phase_ticks, tuple(_cls_key(c) for c in self.classifications))

    def to_dict(self) -> dict:
        return {
            "phases": list(self.phases),
            "classifications": [_cls_dict(c) for c in self.classifications],
        }


@dataclass(frozen=True)
class SignatureSummary:
    min_finite_order: Optional[int]
    max_finite_order: Optional[int]
    provably_infinite_count: int
    no_order_count: int

    def to_dict(self) -> dict:
        return {
            "min_finite_order": self.min_finite_order,
            "max_finite_order": self.max_finite_order,
            "provably_infinite_count": self.provably_infinite_count,
            "no_order_count": self.no_order_count,
        }


@dataclass(frozen=True)
class SpectralSignature:
    """Canonically sorted per-element spectra; a multiset invariant.

    Invariant under simultaneous conjugation of every element by one unitary
    and under any permutation of the elements, because records are compared
    by bucketed phases and sorted.
    """

    dim: int
    element_count: int
    bound: int
    records: tuple[ElementSpectrum, ...]
    summary: SignatureSummary

    def canonical_key(self):
        return (
            self.dim,
            self.element_count,
            tuple(r.canonical_key() for r in self.records),
        )

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "element_count": self.element_count,
            "bound": self.bound,
            "summary": self.summary.to_dict(),
            "records": [r.to_dict() for r in self.records],
        }


def _bucket(phase: float) -> int:
    tick = int(round(phase / PHASE_BUCKET))
    return 0 if tick >= _FULL_TURN_TICKS else tick


def _classify_phase(
    phase: float,
    bound: int,
    phase_tol: float,
    exact_cos: Optional[Fraction],
) -> OrderClassification:
    cls = order_up_to(phase, bound, phase_tol)
    if isinstance(cls, Finite) or exact_cos is None:
        return cls
    if not isinstance(niven_classify(exact_cos), ProvablyInfinite):
        return cls
    # The phase resisted the finite scan.  If it equals +/-theta shifted by a
    # root of unity, with cos(theta) rational of irrational angle, the order
    # is infinite: a rational multiple of pi plus an irrational one stays
    # irrational.
    theta = float(np.arccos(float(exact_cos)))
    for shifted in ((phase - theta) % TWO_PI, (phase + theta) % TWO_PI):
        if isinstance(order_up_to(shifted, bound, phase_tol), Finite):
            return ProvablyInfinite(Fraction(exact_cos))
    return cls


def _element_spectrum(
    u: np.ndarray,
    bound: int,
    tol: Tolerances,
    exact_cos: Optional[Fraction],
) -> ElementSpectrum:
    phases = eigenphases(u, tol)
    entries = []
    for phase in phases:
        cls = _classify_phase(float(phase), bound, tol.phase_tol, exact_cos)
        entries.append((_bucket(float(phase)), cls, float(phase)))
    entries.sort(key=lambda e: (e[0], _cls_key(e[1])))
    return ElementSpectrum(
        phases=tuple(e[2] for e in entries),
        phase_ticks=tuple(e[0] for e in entries),
        classifications=tuple(e[1] for e in entries),
    )


def _summarize(records) -> SignatureSummary:
    finite = [c.order for r in records for c in r.classifications if isinstance(c, Finite)]
    infinite = sum(
        isinstance(c, ProvablyInfinite) for r in records for c in r.classifications
    )
    unresolved = sum(
        isinstance(c, NoOrderUpTo) for r in records for c in r.classifications
    )
    return SignatureSummary(
        min_finite_order=min(finite) if finite else None,
        max_finite_order=max(finite) if finite else None,
        provably_infinite_count=int(infinite),
        no_order_count=int(unresolved),
    )


def signature(
    c: UMEBCandidate, bound: int = 144, tol: Tolerances = DEFAULT_TOLERANCES
) -> SpectralSignature:
    """Spectral signature of a candidate: sorted spectra with order labels.

    Orders are scanned up to ``bound``; phases the scan cannot resolve are
    promoted to ProvablyInfinite only when the candidate carries exact
    rational-cosine metadata and the phase matches the exact angle up to a
    root of unity (the promotion is as trustworthy as the metadata).
    """
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    records = [
        _element_spectrum(u, bound, tol, c.exact_cos_theta) for u in c.elements
    ]
    records.sort(key=lambda r: r.canonical_key())
    return SpectralSignature(
        dim=c.dim,
        element_count=len(c.elements),
        bound=bound,
        records=tuple(records),
        summary=_summarize(records),
    )


def compare_signatures(a: SpectralSignature, b: SpectralSignature) -> str:
    """Distinguished when the canonical signatures differ.

    Sound but not complete: sets related by conjugation and relabeling are
    never Distinguished, while NotDistinguished leaves equivalence undecided.
    """
    if a.canonical_key() == b.canonical_key():
        return "NotDistinguished"
    return "Distinguished"


# ---------------------------------------------------------------------------
# Sector summaries (positional, for lifted candidates)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SectorRow:
    """Order statistics of one sector of a candidate, in element order."""

    name: str
    element_count: int
    min_finite_order: Optional[int]
    max_finite_order: Optional[int]
    provably_infinite_count: int
    no_order_count: int
    elements_with_infinite: int

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "element_count": self.element_count,
            "min_finite_order": self.min_finite_order,
            "max_finite_order": self.max_finite_order,
            "provably_infinite_count": self.provably_infinite_count,
            "no_order_count": self.no_order_count,
            "elements_with_infinite": self.elements_with_infinite,
        }


def sector_summaries(
    c: UMEBCandidate, bound: int = 144, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[SectorRow, ...]:
    """Per-sector order statistics, splitting lifted candidates positionally.

    A lifted candidate (by provenance) is split into its Weyl sector, the
    first q(q-1)d^2 elements, and the base sector holding the rest; anything
    else is summarized as a single sector.  Unlike :func:`signature`, this
    view depends on element order, which the lift fixes canonically.
    """
    records = [
        _element_spectrum(u, bound, tol, c.exact_cos_theta) for u in c.elements
    ]
    shape = _lift_shape(c.provenance)
    if shape is None:
        sectors = [("all", records)]
    else:
        _, d, _, q = shape
        cut = q * (q - 1) * d * d
        if len(records) < cut:
            sectors = [("all", records)]
        else:
            sectors = [("weyl", records[:cut]), ("base", records[cut:])]

    rows = []
    for name, recs in sectors:
        s = _summarize(recs)
        carriers = sum(
            any(isinstance(cl, ProvablyInfinite) for cl in r.classifications)
            for r in recs
        )
        rows.append(
            SectorRow(
                name=name,
                element_count=len(recs),
                min_finite_order=s.min_finite_order,
                max_finite_order=s.max_finite_order,
                provably_infinite_count=s.provably_infinite_count,
                no_order_count=s.no_order_count,
                elements_with_infinite=int(carriers),
            )
        )
    return tuple(rows)


def sector_table(rows: tuple[SectorRow, ...]) -> str:
    """Aligned text table of sector order statistics."""
    header = ("sector", "elements", "O_min", "O_max", "infinite phases", "unresolved")
    body = []
    for r in rows:
        body.append(
            (
                r.name,
                str(r.element_count),
                "-" if r.min_finite_order is None else str(r.min_finite_order),
                "-" if r.max_finite_order is None else str(r.max_finite_order),
                str(r.provably_infinite_count),
                str(r.no_order_count),
            )
        )
    widths = [
        max(len(header[i]), *(len(row[i]) for row in body)) if body else len(header[i])
        for i in range(len(header))
    ]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in body:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
