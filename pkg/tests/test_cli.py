import json

import numpy as np
import pytest

from umeb.cli import main
from umeb.constructions import (
    External,
    UMEBCandidate,
    bravyi_smolin_3,
    lift,
    load_umeb,
    save_umeb,
    umeb_6,
    weyl,
    weyl_family,
)
from umeb.linalg import hs_inner, unitarity_residual


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def test_construct_umeb6(tmp_path, capsys):
    out = tmp_path / "u6.json"
    code, stdout, _ = run(capsys, "construct", "umeb6", "-o", str(out))
    assert code == 0
    assert "30 elements" in stdout
    assert len(load_umeb(out)) == 30


def test_construct_weyl_requires_dim(tmp_path, capsys):
    code, _, stderr = run(capsys, "construct", "weyl", "-o", str(tmp_path / "w.json"))
    assert code == 1
    assert "dim" in stderr


def test_construct_weyl_with_dim(tmp_path, capsys):
    out = tmp_path / "w3.json"
    code, _, _ = run(capsys, "construct", "weyl", "-d", "3", "-o", str(out))
    assert code == 0
    assert len(load_umeb(out)) == 9


def test_construct_bs3_records_exact_cosine(tmp_path, capsys):
    out = tmp_path / "bs3.json"
    code, _, _ = run(capsys, "construct", "bs3", "-o", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["exact_cos_theta"] == [-7, 8]
    assert len(doc["elements"]) == 6


def test_construct_rejects_dim_for_fixed_kinds(tmp_path, capsys):
    code, _, stderr = run(
        capsys, "construct", "bs3", "-d", "3", "-o", str(tmp_path / "x.json")
    )
    assert code == 1


def test_construct_io_failure(capsys):
    code, _, stderr = run(capsys, "construct", "bs3", "-o", "/nonexistent-dir/x.json")
    assert code == 1


# ---------------------------------------------------------------------------
# lift
# ---------------------------------------------------------------------------

def test_lift_reports_both_count_formulas(tmp_path, capsys):
    bs3_path = tmp_path / "bs3.json"
    out = tmp_path / "l4.json"
    save_umeb(bravyi_smolin_3(), bs3_path)
    code, stdout, stderr = run(
        capsys, "lift", str(bs3_path), "-q", "4", "-o", str(out), "--json"
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["schema_version"] == 1
    assert payload["element_count"] == 132
    assert payload["count_constructed"] == 132
    assert payload["count_closed_form"] == 141
    assert any("disagree" in n for n in payload["notes"])
    assert "MISMATCH" in stderr  # human table moved to stderr under --json
    assert len(load_umeb(out)) == 132


def test_lift_of_complete_basis_warns_but_proceeds(tmp_path, capsys):
    w3_path = tmp_path / "w3.json"
    out = tmp_path / "lw.json"
    save_umeb(weyl_family(3), w3_path)
    code, _, stderr = run(capsys, "lift", str(w3_path), "-q", "2", "-o", str(out))
    assert code == 0
    assert "complete basis" in stderr
    assert len(load_umeb(out)) == 2 * 1 * 9 + 2 * 9


def test_lift_rejects_bad_q(tmp_path, capsys):
    bs3_path = tmp_path / "bs3.json"
    save_umeb(bravyi_smolin_3(), bs3_path)
    code, _, _ = run(capsys, "lift", str(bs3_path), "-q", "0", "-o", str(tmp_path / "x.json"))
    assert code == 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_passing_set(tmp_path, capsys):
    path = tmp_path / "u6.json"
    save_umeb(umeb_6(), path)
    code, stdout, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "PASS" in stdout


def test_verify_duplicate_elements_fails(tmp_path, capsys):
    path = tmp_path / "dup.json"
    save_umeb(UMEBCandidate(2, (np.eye(2), np.eye(2)), External("dup")), path)
    code, stdout, _ = run(capsys, "verify", str(path))
    assert code == 2
    assert "FAIL" in stdout


def test_verify_corrupt_file(tmp_path, capsys):
    path = tmp_path / "corrupt.json"
    path.write_text("not json {")
    code, _, stderr = run(capsys, "verify", str(path))
    assert code == 1
    assert "error" in stderr


def test_verify_json_payload(tmp_path, capsys):
    path = tmp_path / "u6.json"
    save_umeb(umeb_6(), path)
    code, stdout, _ = run(capsys, "verify", str(path), "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["schema_version"] == 1
    assert payload["command"] == "verify"
    assert payload["passed"] is True
    assert payload["element_count"] == 30


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def test_search_reports_and_is_reproducible(tmp_path, capsys):
    path = tmp_path / "bs3.json"
    save_umeb(bravyi_smolin_3(), path)
    args = ("search", str(path), "--restarts", "10", "--iters", "50",
            "--seed", "7", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    p1, p2 = json.loads(out1), json.loads(out2)
    assert p1["verdict"] == "NoExtensionFound"
    assert p1["gap"] == p2["gap"]
    assert p1["gap"] > 0
    assert p1["witness_path"] is None


def test_search_writes_witness_file(tmp_path, capsys):
    fam = weyl_family(2)
    short = UMEBCandidate(2, fam.elements[:3], External("one short"))
    path = tmp_path / "short.json"
    witness_path = tmp_path / "w.json"
    save_umeb(short, path)
    code, stdout, _ = run(
        capsys, "search", str(path), "--restarts", "5", "--iters", "200",
        "-w", str(witness_path), "--json",
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["verdict"] == "ExtensionFound"
    assert payload["witness_path"] == str(witness_path)
    witness = load_umeb(witness_path)
    assert len(witness) == 1
    w = witness.elements[0]
    assert unitarity_residual(w) < 1e-8
    for u in short.elements:
        assert abs(hs_inner(u, w)) < 1e-6


def test_search_default_witness_path(tmp_path, capsys):
    fam = weyl_family(2)
    short = UMEBCandidate(2, fam.elements[:3], External("one short"))
    path = tmp_path / "short.json"
    save_umeb(short, path)
    code, stdout, _ = run(
        capsys, "search", str(path), "--restarts", "5", "--iters", "200", "--json"
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["witness_path"] == str(tmp_path / "short.witness.json")
    assert (tmp_path / "short.witness.json").exists()


def test_search_usage_errors(tmp_path, capsys):
    path = tmp_path / "bs3.json"
    save_umeb(bravyi_smolin_3(), path)
    for bad in (("--restarts", "0"), ("--iters", "0"), ("--seed", "-1")):
        code, _, stderr = run(capsys, "search", str(path), *bad)
        assert code == 1
        assert "error" in stderr


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------

def test_certify_exit_codes(tmp_path, capsys):
    u6_path = tmp_path / "u6.json"
    save_umeb(umeb_6(), u6_path)
    assert run(capsys, "certify", str(u6_path))[0] == 0

    w3_path = tmp_path / "w3.json"
    save_umeb(weyl_family(3), w3_path)
    assert run(capsys, "certify", str(w3_path))[0] == 3

    tampered = list(lift(bravyi_smolin_3(), 2).elements)
    tampered[0] = np.kron(np.eye(2), weyl(3, 1, 1))
    bad = UMEBCandidate(6, tuple(tampered), lift(bravyi_smolin_3(), 2).provenance)
    bad_path = tmp_path / "bad.json"
    save_umeb(bad, bad_path)
    assert run(capsys, "certify", str(bad_path))[0] == 2


def test_certify_json_lists_checks(tmp_path, capsys):
    path = tmp_path / "l3.json"
    save_umeb(lift(bravyi_smolin_3(), 3), path)
    code, stdout, _ = run(capsys, "certify", str(path), "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["overall"] == "CertifiedConditionalOnBase"
    assert [c["name"] for c in payload["checks"]] == [
        "weyl_sector_spans_offdiagonal_blocks",
        "complement_is_block_diagonal",
        "vandermonde_det_nonzero",
        "base_trace_system_reduces",
        "base_case_verdict",
    ]


# ---------------------------------------------------------------------------
# spectral / compare
# ---------------------------------------------------------------------------

def test_spectral_prints_sector_table(tmp_path, capsys):
    path = tmp_path / "l4.json"
    save_umeb(lift(bravyi_smolin_3(), 4), path)
    code, stdout, _ = run(capsys, "spectral", str(path))
    assert code == 0
    assert "weyl" in stdout and "base" in stdout
    assert "O_min" in stdout and "O_max" in stdout


def test_spectral_json_payload(tmp_path, capsys):
    path = tmp_path / "bs3.json"
    save_umeb(bravyi_smolin_3(), path)
    code, stdout, _ = run(capsys, "spectral", str(path), "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["summary"]["provably_infinite_count"] == 6
    assert payload["bound"] == 144
    assert len(payload["records"]) == 6


def test_spectral_rejects_non_unitary(tmp_path, capsys):
    path = tmp_path / "bad.json"
    save_umeb(UMEBCandidate(2, (2.0 * np.eye(2),), External("x")), path)
    code, _, stderr = run(capsys, "spectral", str(path))
    assert code == 1


def test_compare_with_self_is_not_distinguished(tmp_path, capsys):
    path = tmp_path / "u6.json"
    save_umeb(umeb_6(), path)
    code, stdout, _ = run(capsys, "compare", str(path), str(path))
    assert code == 4
    assert "NOT DISTINGUISHED" in stdout


def test_compare_distinguishes_finite_from_infinite(tmp_path, capsys):
    a = tmp_path / "bs3.json"
    b = tmp_path / "wsub.json"
    save_umeb(bravyi_smolin_3(), a)
    save_umeb(
        UMEBCandidate(3, weyl_family(3).elements[:6], External("weyl subset")), b
    )
    code, stdout, _ = run(capsys, "compare", str(a), str(b))
    assert code == 0
    assert "DISTINGUISHED" in stdout


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, stderr = run(capsys, "frobnicate")
    assert code == 1
