"""Acceptance gate: one test per shipped guarantee, run at stated tolerances.

Each test is self-contained and seconds-fast except the extendibility run,
which is bounded at ten seconds.  Frozen constants were computed once at
first implementation and guard against silent regressions.
"""

import json
import time
from fractions import Fraction

import numpy as np
from scipy.optimize import linear_sum_assignment

from umeb.cli import main
from umeb.constructions import (
    External,
    UMEBCandidate,
    bravyi_smolin_3,
    bravyi_smolin_states,
    lift,
    lift_counts,
    save_umeb,
    umeb_6,
    weyl_family,
)
from umeb.linalg import gram_matrix, hs_inner, unitarity_residual
from umeb.spectral import (
    ProvablyInfinite,
    compare_signatures,
    niven_classify,
    sector_summaries,
    signature,
)
from umeb.verification import (
    search_extension,
    structural_certify,
    to_state,
    verify_axioms,
)

# Best gap ever observed for the 6-element d=3 set is 3 - sqrt(6); the ascent
# approaches the supremum from below, so the reported gap stays above this.
FROZEN_MIN_GAP = 0.5505102572


def test_criterion_01_thirty_member_d6_basis(tmp_path, capsys):
    out = tmp_path / "u6.json"
    assert main(["construct", "umeb6", "-o", str(out)]) == 0
    capsys.readouterr()
    c = umeb_6()
    assert len(c) == 30 and c.dim == 6
    assert max(unitarity_residual(u) for u in c.elements) < 1e-10
    g = gram_matrix(c.elements)
    assert np.abs(g - 6.0 * np.eye(30)).max() < 1e-10


def test_criterion_02_lift_reproduces_d6_basis():
    a = lift(bravyi_smolin_3(), 2).elements
    b = umeb_6().elements
    dev = np.array([[np.abs(x - y).max() for y in b] for x in a])
    hits = dev < 1e-12
    # a perfect matching must pair every element of one set with one of the
    # other; here the match relation is itself a permutation
    assert hits.sum(axis=0).tolist() == [1] * 30
    assert hits.sum(axis=1).tolist() == [1] * 30
    rows, cols = linear_sum_assignment(dev)
    assert dev[rows, cols].max() < 1e-12


def test_criterion_03_count_law_and_flagged_closed_form(tmp_path, capsys):
    constructed = []
    closed = []
    for q in (2, 3, 4):
        built = lift(bravyi_smolin_3(), q)
        n_built, n_closed = lift_counts(3, 6, q)
        assert len(built) == n_built == q * (q - 1) * 9 + 6 * q == 3 * q * (3 * q - 1)
        assert n_closed == (q * 3) ** 2 - (9 - 6)
        constructed.append(n_built)
        closed.append(n_closed)
    assert constructed == [30, 72, 132]
    assert closed == [33, 78, 141]
    assert constructed != closed

    bs3_path = tmp_path / "bs3.json"
    save_umeb(bravyi_smolin_3(), bs3_path)
    assert main(["lift", str(bs3_path), "-q", "2", "-o",
                 str(tmp_path / "l2.json"), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert any("disagree" in n for n in payload["notes"])
    assert payload["count_constructed"] == 30
    assert payload["count_closed_form"] == 33


def test_criterion_04_exact_spectrum_and_overlaps():
    c = bravyi_smolin_3()
    for u in c.elements:
        vals = np.linalg.eigvals(u)
        order = np.argsort(np.abs(vals - 1.0))
        assert np.abs(vals[order[:2]] - 1.0).max() < 1e-12
        moved = vals[order[2]]
        assert abs(moved.real - (-7.0 / 8.0)) < 1e-12
        assert abs(abs(moved) - 1.0) < 1e-12
    states = bravyi_smolin_states()
    overlaps = [
        abs(np.vdot(states[i], states[j])) ** 2
        for i in range(6)
        for j in range(i + 1, 6)
    ]
    assert len(overlaps) == 15
    assert max(abs(o - 0.2) for o in overlaps) < 1e-12


def test_criterion_05_unextendibility_evidence():
    c = bravyi_smolin_3()
    start = time.perf_counter()
    res = search_extension(c, restarts=100, iters=500, seed=0)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    assert res.verdict == "NoExtensionFound"
    assert res.gap >= FROZEN_MIN_GAP

    for drop in range(6):
        kept = tuple(u for k, u in enumerate(c.elements) if k != drop)
        sub = UMEBCandidate(3, kept, External("five of six"),
                            exact_cos_theta=Fraction(-7, 8))
        found = search_extension(sub, restarts=8, iters=1500, seed=0)
        assert found.verdict == "ExtensionFound"
        assert found.extension is not None
        assert unitarity_residual(found.extension) < 1e-8
        worst = max(abs(hs_inner(u, found.extension)) for u in kept)
        assert worst < 1e-6


def test_criterion_06_structural_certificates(tmp_path, capsys):
    for c in (umeb_6(), lift(bravyi_smolin_3(), 2),
              lift(bravyi_smolin_3(), 3), lift(bravyi_smolin_3(), 4)):
        cert = structural_certify(c)
        assert cert.overall == "CertifiedConditionalOnBase"
        assert all(check.passed for check in cert.checks)
    path = tmp_path / "u6.json"
    save_umeb(umeb_6(), path)
    assert main(["certify", str(path)]) == 0
    capsys.readouterr()


def test_criterion_07_infinite_orders_distinguish(capsys):
    lifted = lift(bravyi_smolin_3(), 4)
    rows = {r.name: r for r in sector_summaries(lifted, bound=144)}
    weyl_row, base_row = rows["weyl"], rows["base"]

    assert weyl_row.element_count == 4 * 3 * 9
    assert weyl_row.provably_infinite_count == 0
    assert weyl_row.no_order_count == 0
    computed_o_max = weyl_row.max_finite_order
    note = "" if computed_o_max == 12 else f" (differs from the tabulated 12)"
    print(f"weyl sector O_max computed: {computed_o_max}{note}")

    assert base_row.element_count == 24
    assert base_row.elements_with_infinite == 24
    assert base_row.no_order_count == 0

    assert isinstance(niven_classify(Fraction(-7, 8)), ProvablyInfinite)

    all_finite = UMEBCandidate(
        12, weyl_family(12).elements[:132], External("all finite orders")
    )
    sig_f = signature(all_finite, bound=144)
    assert sig_f.summary.provably_infinite_count == 0
    assert sig_f.summary.no_order_count == 0
    assert compare_signatures(signature(lifted, bound=144), sig_f) == "Distinguished"


def test_criterion_08_property_suites():
    rng = np.random.default_rng(20260819)

    def haar(d):
        z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
        q, r = np.linalg.qr(z)
        return q * (np.diag(r) / np.abs(np.diag(r)))

    base = bravyi_smolin_3()
    sig0 = signature(base, bound=144)
    for _ in range(20):
        v = haar(3)
        perm = rng.permutation(6)
        moved = tuple(v @ base.elements[p] @ v.conj().T for p in perm)
        twin = UMEBCandidate(3, moved, External("conjugated relabeling"),
                             exact_cos_theta=Fraction(-7, 8))
        sig1 = signature(twin, bound=144)
        assert sig1.canonical_key() == sig0.canonical_key()
        assert compare_signatures(sig0, sig1) == "NotDistinguished"

    for _ in range(50):
        d = int(rng.integers(2, 6))
        a, b = haar(d), haar(d)
        bridge = hs_inner(a, b) / d - to_state(a).overlap(to_state(b))
        assert abs(bridge) < 1e-10

    res = search_extension(bravyi_smolin_3(), restarts=20, iters=100, seed=3)
    assert len(res.objective_traces) == 20
    for trace in res.objective_traces:
        diffs = np.diff(np.asarray(trace))
        assert diffs.min() > -1e-12


def test_criterion_09_complete_bases_are_not_extendible_targets():
    from umeb.linalg import orthonormal_complement

    for d in range(2, 7):
        fam = weyl_family(d)
        g = gram_matrix(fam.elements)
        assert np.abs(g - d * np.eye(d * d)).max() < 1e-10
        assert orthonormal_complement(fam.elements) == []
        report = verify_axioms(fam)
        assert report.max_unitarity_residual < 1e-10
        assert report.max_gram_offdiag < 1e-10
        assert not report.condition_i_ok
        assert not report.passed


def test_external_input_pipeline_end_to_end(tmp_path, capsys):
    """A user-supplied d=4 matrix file drives lift, spectral and compare."""
    stand_in = UMEBCandidate(
        4, weyl_family(4).elements[:12], External("user supplied d=4 set")
    )
    ext_path = tmp_path / "external4.json"
    save_umeb(stand_in, ext_path)

    lifted_path = tmp_path / "lift12.json"
    assert main(["lift", str(ext_path), "-q", "3", "-o", str(lifted_path)]) == 0
    capsys.readouterr()

    assert main(["verify", str(lifted_path)]) == 0
    capsys.readouterr()

    assert main(["certify", str(lifted_path)]) == 0
    capsys.readouterr()

    assert main(["spectral", str(lifted_path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["element_count"] == 132
    assert payload["dim"] == 12

    ours_path = tmp_path / "ours12.json"
    save_umeb(lift(bravyi_smolin_3(), 4), ours_path)
    code = main(["compare", str(ours_path), str(lifted_path)])
    out = capsys.readouterr().out
    assert code == 0
    assert "DISTINGUISHED" in out
