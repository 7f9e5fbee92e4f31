"""Command line driver: exit codes, formats, determinism, self checks."""

import csv
import io
import json
from fractions import Fraction

import pytest

import catalankit.exact
from catalankit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalan_command(capsys):
    code, out, err = run_cli(capsys, "catalan", "--n", "7")
    assert code == 0
    assert err == ""
    assert out.count("429") == 5
    for name in ("factorial_quotient", "central_binomial", "gamma_ratio",
                 "terminating_2f1", "recurrence"):
        assert name in out


def test_c2_all_agrees(capsys):
    code, out, _ = run_cli(capsys, "c2", "--a", "1", "--b", "4", "--n", "2")
    assert code == 0
    assert "7/1728" in out
    assert "max_pairwise_rel_diff" in out


def test_c2_json_shape(capsys):
    code, out, _ = run_cli(
        capsys, "c2", "--a", "1", "--b", "4", "--n", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert list(data) == sorted(data)  # canonical: top-level keys sorted
    assert data["command"] == "c2"
    assert data["input"]["a"] == 1
    reps = [row["rep"] for row in data["results"]]
    assert reps == [
        "double_factorial", "hyp_closed", "jacobi", "quadrature",
        "gf_coefficient", "hyp_unbounded", "legendre_sec2",
    ]
    for row in data["results"]:
        assert list(row) == sorted(row)
    exact_rows = [r for r in data["results"] if r["exact"]]
    assert all(Fraction(r["value"]) == Fraction(7, 1728) for r in exact_rows)
    # floats in the document round-trip: the quadrature value re-rendered
    # at 17 significant digits must appear verbatim in the raw bytes
    quad = next(r for r in data["results"] if r["rep"] == "quadrature")
    assert format(quad["value"], ".17g") in out
    assert data["max_pairwise_rel_diff"] <= 1e-8


def test_c2_csv_parses(capsys):
    code, out, _ = run_cli(
        capsys, "c2", "--a", "1", "--b", "4", "--n", "3", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["rep", "value", "err", "exact", "terms", "note", "skipped"]
    assert len(rows) == 8
    by_rep = {r[0]: r for r in rows[1:]}
    assert by_rep["double_factorial"][1] == "29/41472"
    assert by_rep["hyp_unbounded"][6] == "true"  # out of domain at (1, 4)


def test_c2_paper_normalization(capsys):
    code, out, _ = run_cli(
        capsys, "c2", "--a", "1", "--b", "4", "--n", "2",
        "--normalization", "paper", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    gf = Fraction(7, 1728)
    closed = next(r for r in data["results"] if r["rep"] == "hyp_closed")
    assert closed["value"] == pytest.approx(float(gf) * 3.141592653589793, rel=1e-14)
    assert "pi" in closed["note"]
    assert data["notes"]  # explanatory note present


def test_c2_single_rep(capsys):
    code, out, _ = run_cli(
        capsys, "c2", "--a", "1/2", "--b", "1/4", "--n", "9", "--rep", "hyp_closed"
    )
    assert code == 0
    assert "4862" in out  # C_9


def test_byte_determinism(capsys):
    args = ("functional", "--a", "2", "--b", "1", "--p", "0.37", "--n", "3",
            "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_exit_2_on_bad_domain(capsys):
    code, _, err = run_cli(capsys, "c2", "--a", "-1", "--b", "4", "--n", "0")
    assert code == 2
    assert "error:" in err
    code, _, err = run_cli(capsys, "c2", "--a", "1", "--b", "4", "--n", "0",
                           "--rep", "jacobi")
    assert code == 2
    assert "n >= 1" in err
    code, _, err = run_cli(capsys, "functional", "--a", "1", "--b", "4",
                           "--p", "2", "--n", "0")
    assert code == 2
    code, _, err = run_cli(capsys, "q", "--n", "1", "--y", "2", "--rep", "series")
    assert code == 2


def test_exit_2_on_unparsable_number(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["c2", "--a", "abc", "--b", "4", "--n", "0"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_exit_1_on_tolerance_failure(capsys):
    # representations agree to ~1e-16 but not to 1e-30
    code, out, _ = run_cli(capsys, "q", "--n", "3", "--y", "1/2",
                           "--tol", "1e-30")
    assert code == 1
    assert "max_pairwise_rel_diff" in out


def test_functional_all_with_boundary_skip(capsys):
    code, out, _ = run_cli(
        capsys, "functional", "--a", "2", "--b", "4", "--p", "1/2", "--n", "1",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    series = next(r for r in data["results"] if r["rep"] == "series")
    assert series["skipped"] is True
    assert "cf_via_q" in series["note"]
    via_q = next(r for r in data["results"] if r["rep"] == "via_q")
    assert Fraction(via_q["value"]) == Fraction(1, 64)


def test_q_all_reports_hyp_without_comparing(capsys):
    code, out, _ = run_cli(capsys, "q", "--n", "1", "--y", "1/2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    hyp = next(r for r in data["results"] if r["rep"] == "hyp")
    true_value = Fraction(1, 2) * Fraction(1, 2) / Fraction(9, 4)
    assert hyp["value"] == pytest.approx(float(true_value) * 8.0, rel=1e-12)
    assert data["max_pairwise_rel_diff"] <= 1e-8  # hyp row not included


def test_q_defaults_p_half(capsys):
    code, out, _ = run_cli(capsys, "q", "--n", "1", "--y", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["input"]["p"] == "1/2"
    stirling = next(r for r in data["results"] if r["rep"] == "stirling")
    assert Fraction(stirling["value"]) == Fraction(1, 8)


def test_errata_confirms_findings(capsys):
    code, out, _ = run_cli(capsys, "errata")
    assert code == 0
    assert "NOT confirmed" not in out
    assert out.count("confirmed:") >= 20
    assert "table_pi" in out and "q_hyp_n2_ratio_spread" in out


def test_errata_fails_at_absurd_tolerance(capsys):
    code, out, _ = run_cli(capsys, "errata", "--tol", "1e-18")
    assert code == 1
    assert "NOT confirmed" in out


def test_selftest_all_passes(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert "10/10 suites passed" in out


def test_selftest_subset(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--suite", "stirling",
                           "--suite", "polylog")
    assert code == 0
    assert out.splitlines() == ["stirling: PASS", "polylog: PASS",
                                "2/2 suites passed"]


def test_selftest_detects_mutation(capsys, monkeypatch):
    # the suite must consult the library function, not a private copy:
    # breaking double_factorial has to break the suite
    monkeypatch.setattr(catalankit.exact, "double_factorial", lambda n: 42)
    code, out, _ = run_cli(capsys, "selftest", "--suite", "double_factorial")
    assert code == 1
    assert "double_factorial: FAIL" in out


def test_selftest_mutation_detected_even_near_truth(capsys, monkeypatch):
    # off-by-one stride: right at small n, wrong later
    real = catalankit.exact.double_factorial

    def skewed(n):
        return real(n) + (n > 10)

    monkeypatch.setattr(catalankit.exact, "double_factorial", skewed)
    code, out, _ = run_cli(capsys, "selftest", "--suite", "double_factorial")
    assert code == 1


def test_help_exits_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    capsys.readouterr()
