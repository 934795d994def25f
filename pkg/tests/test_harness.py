"""End-to-end tests of the verification harness and its CLI surface."""

import csv
import json

import pytest

from qsu11.harness import (
    _CSV_COLUMNS,
    SUITES,
    RunConfig,
    config_from_args,
    main,
    run_suite,
)


class TestRunConfig:
    def test_defaults_are_valid(self):
        cfg = RunConfig()
        assert cfg.problems() == []
        assert cfg.warnings() == []

    def test_problem_messages(self):
        msgs = RunConfig(q=2.0, tol=0.0, suites=("identities", "bogus"),
                         format="xml").problems()
        joined = "\n".join(msgs)
        assert "q must lie in (0, 1)" in joined
        assert "tol must be positive" in joined
        assert "bogus" in joined
        assert "format" in joined
        assert RunConfig(suites=()).problems() != []

    def test_extreme_q_warns(self):
        assert RunConfig(q=0.05).warnings() != []
        assert RunConfig(q=0.99).warnings() != []

    def test_series_tol_window(self):
        assert RunConfig(tol=1e-10).series_tol == 1e-12
        assert RunConfig(tol=1e-6).series_tol == 1e-12
        assert RunConfig(tol=1e-14).series_tol == 1e-15


class TestRunSuite:
    def test_identities_pass_and_schema(self, tmp_path):
        cfg = RunConfig(suites=("identities",), out_dir=str(tmp_path))
        assert run_suite(cfg) == 0
        with (tmp_path / "identities.csv").open(newline="") as fh:
            rows = list(csv.reader(fh))
        assert tuple(rows[0]) == _CSV_COLUMNS
        body = rows[1:]
        assert body, "suite produced no checks"
        assert all(r[-1] == "pass" for r in body)
        assert all(r[2] != "" for r in body)  # paper_anchor populated
        with (tmp_path / "summary.csv").open(newline="") as fh:
            summary = list(csv.reader(fh))
        assert summary[1][0] == "identities"
        assert summary[1][3] == "pass"

    def test_reports_are_byte_stable(self, tmp_path):
        out_a = tmp_path / "a"
        out_b = tmp_path / "b"
        for out in (out_a, out_b):
            cfg = RunConfig(suites=("identities",), out_dir=str(out),
                            format="both")
            assert run_suite(cfg) == 0
        for name in ("identities.csv", "identities.json", "summary.csv",
                     "summary.json"):
            assert (out_a / name).read_bytes() == (out_b / name).read_bytes()

    def test_json_header(self, tmp_path):
        cfg = RunConfig(suites=("identities",), out_dir=str(tmp_path),
                        format="json")
        assert run_suite(cfg) == 0
        doc = json.loads((tmp_path / "identities.json").read_text())
        header = doc["header"]
        assert set(header) == {"version", "backend", "q", "tolerances",
                               "max_exponent", "max_terms", "warnings"}
        assert header["q"] == 0.5
        assert header["tolerances"] == {"tol": 1e-10, "tol_quad": 1e-8}
        assert all(r["verdict"] == "pass" for r in doc["rows"])
        assert not (tmp_path / "identities.csv").exists()

    def test_impossible_tolerance_fails_with_reports(self, tmp_path):
        cfg = RunConfig(suites=("spherical",), tol=1e-300,
                        out_dir=str(tmp_path))
        assert run_suite(cfg) == 1
        with (tmp_path / "spherical.csv").open(newline="") as fh:
            rows = list(csv.reader(fh))[1:]
        assert any(r[-1] == "fail" for r in rows)

    def test_invalid_config_exits_2_without_reports(self, tmp_path, capsys):
        out = tmp_path / "nothing"
        cfg = RunConfig(q=2.0, out_dir=str(out))
        assert run_suite(cfg) == 2
        assert not out.exists()
        assert "config error" in capsys.readouterr().err

    def test_duplicate_suites_run_once(self, tmp_path, capsys):
        cfg = RunConfig(suites=("identities", "identities"),
                        out_dir=str(tmp_path))
        assert run_suite(cfg) == 0
        out = capsys.readouterr().out
        assert out.count("identities:") == 1


class TestCli:
    def test_defaults(self):
        cfg = config_from_args([])
        assert cfg == RunConfig()

    def test_flags(self):
        cfg = config_from_args([
            "--q", "0.3", "--tol", "1e-8", "--tol-quad", "1e-6",
            "--max-exponent", "12", "--max-terms", "50",
            "--suite", "identities", "--suite", "smoothing",
            "--out", "/tmp/x", "--format", "both",
        ])
        assert cfg.q == 0.3
        assert cfg.tol == 1e-8
        assert cfg.tol_quad == 1e-6
        assert cfg.max_exponent == 12
        assert cfg.max_terms == 50
        assert cfg.suites == ("identities", "smoothing")
        assert cfg.out_dir == "/tmp/x"
        assert cfg.format == "both"

    def test_unknown_suite_rejected_by_parser(self):
        with pytest.raises(SystemExit):
            config_from_args(["--suite", "bogus"])

    def test_main_exit_codes(self, tmp_path):
        assert main(["--q", "2.0", "--out", str(tmp_path / "x")]) == 2
        assert main(["--suite", "identities",
                     "--out", str(tmp_path / "ok")]) == 0

    def test_all_suites_listed(self):
        assert SUITES == ("identities", "spherical", "coamenability",
                          "smoothing", "approxid")
