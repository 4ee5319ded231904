"""Command-line interface: exit codes, report schema, stable reruns."""

import json
import subprocess
import sys

import pytest

from freudenthal.cli import dispatch


def run_cli(args, capsys):
    code = dispatch(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tables_json_schema(capsys):
    code, out, _ = run_cli(["tables", "--stable"], capsys)
    assert code == 0
    doc = json.loads(out)
    blocks = doc if isinstance(doc, list) else [doc]
    for block in blocks:
        assert {"suite", "params", "results", "elapsed_ms", "tool_version"} <= set(block)
        for row in block["results"]:
            assert {"name", "expected", "expected_provenance", "actual", "pass"} <= set(row)
            assert row["pass"] is True


def test_rho_exit_zero(capsys):
    for group, parab in [("C3", "siegel"), ("G2", "heisenberg"), ("F4", "amber")]:
        code, out, _ = run_cli(["rho", "--group", group, "--parabolic", parab, "--stable"], capsys)
        assert code == 0, (group, parab)
        doc = json.loads(out)
        block = doc if isinstance(doc, dict) else doc[0]
        assert all(r["pass"] for r in block["results"])


def test_rho_unknown_group_exit_two(capsys):
    code, _, err = run_cli(["rho", "--group", "Z9", "--parabolic", "siegel"], capsys)
    assert code == 2
    assert err.strip()


def test_doublecosets(capsys):
    code, out, _ = run_cli(
        ["doublecosets", "--group", "E7", "--levi", "E6", "--stable"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    block = doc if isinstance(doc, dict) else doc[0]
    assert all(r["pass"] for r in block["results"])


def test_census_pairs_q2(capsys):
    code, out, _ = run_cli(["census", "pairs", "--q", "2", "--stable"], capsys)
    assert code == 0
    doc = json.loads(out)
    block = doc if isinstance(doc, dict) else doc[0]
    names = {r["name"] for r in block["results"]}
    assert any("solutions" in n for n in names)


def test_census_too_large_exit_two(capsys):
    code, _, err = run_cli(["census", "pairs", "--q", "7"], capsys)
    assert code == 2
    assert err.strip()


def test_orbit_dim1(capsys):
    code, out, _ = run_cli(["orbit", "--dimd", "1", "--q", "5", "--stable"], capsys)
    assert code == 0
    doc = json.loads(out)
    block = doc if isinstance(doc, dict) else doc[0]
    rows = {r["name"]: r for r in block["results"]}
    size_row = next(r for n, r in rows.items() if "size" in n)
    assert size_row["pass"] and int(size_row["actual"]) == 78624


def test_lift_a2g2(capsys):
    code, out, _ = run_cli(
        ["lift", "a2g2", "--t1", "0@1/3", "--t2", "0@1/3", "--t3", "0@1/3", "--stable"],
        capsys,
    )
    assert code == 0
    json.loads(out)


def test_lift_bad_product_exit_two(capsys):
    code, _, err = run_cli(["lift", "a2g2", "--t1", "1", "--t2", "0", "--t3", "0"], capsys)
    assert code == 2


def test_check_field(capsys):
    code, out, _ = run_cli(["check", "field", "--stable"], capsys)
    assert code == 0
    doc = json.loads(out)
    block = doc if isinstance(doc, dict) else doc[0]
    assert all(r["pass"] for r in block["results"])


def test_usage_error_exit_two(capsys):
    assert dispatch(["frobnicate"]) == 2
    capsys.readouterr()
    assert dispatch([]) == 2
    capsys.readouterr()


def test_stable_reruns_byte_identical(capsys):
    _, out1, _ = run_cli(["tables", "--stable"], capsys)
    _, out2, _ = run_cli(["tables", "--stable"], capsys)
    assert out1 == out2


def test_tsv_format(capsys):
    code, out, _ = run_cli(["rho", "--group", "C3", "--parabolic", "siegel",
                            "--format", "tsv", "--stable"], capsys)
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.strip()]
    header = lines[0].split("\t")
    assert header[:2] == ["suite", "name"]
    assert len(lines) > 1
    for ln in lines[1:]:
        assert len(ln.split("\t")) == len(header)


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    code, _, _ = run_cli(
        ["rho", "--group", "G2", "--parabolic", "heisenberg", "--out", str(dest), "--stable"],
        capsys,
    )
    assert code == 0
    doc = json.loads(dest.read_text())
    block = doc if isinstance(doc, dict) else doc[0]
    assert all(r["pass"] for r in block["results"])


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freudenthal.cli", "rho", "--group", "C3",
         "--parabolic", "siegel", "--stable"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    json.loads(proc.stdout)
