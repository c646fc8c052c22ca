"""Command-line driver: exit codes, output formats, determinism, config."""

import json
import math

import numpy as np
import pytest

import cmgamma.cm_certify as cmc
import cmgamma.inequalities as iq_mod
from cmgamma.cli import main
from cmgamma.errors import ConvergenceError
from cmgamma.kernels import LogDerivResult

CSV_HEADER = "id,params,point,lhs_log,rhs_log,margin,holds"


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.fixture
def synthetic_violation(monkeypatch):
    """Register a deliberately false claim under the id SYN_BAD."""
    syn = iq_mod.InequalityCase(
        id="SYN_BAD", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="syn", source="0 >= 1 everywhere (test dummy)",
        _check_params=lambda split: None,
        _point_rules=(("z > 0", lambda split, cols: cols[0] > 0),),
        _sides_fn=lambda split, cols: (np.zeros_like(cols[0]),
                                       np.ones_like(cols[0])),
        _sampler_fn=lambda rng, split, n: rng.uniform(1.0, 2.0,
                                                      size=(n, 1)),
    )
    real = iq_mod.get_case
    monkeypatch.setattr(
        iq_mod, "get_case",
        lambda cid: syn if cid == "SYN_BAD" else real(cid))


class TestAuditGrid:
    ARGS = ("audit", "--id", "INQ1", "--params", "a=1,b=1",
            "--grid", "1.001:50:100", "--seed", "42", "--format", "csv")

    def test_deterministic_bytes(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        code1, _, _ = run(capsys, *self.ARGS, "--out", str(f1))
        code2, _, _ = run(capsys, *self.ARGS, "--out", str(f2))
        assert code1 == code2 == 0
        assert f1.read_bytes() == f2.read_bytes()
        lines = f1.read_text().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 101

    def test_stdout_and_summary_streams(self, capsys):
        code, out, err = run(capsys, *self.ARGS)
        assert code == 0
        assert out.splitlines()[0] == CSV_HEADER
        assert "all hold" in err

    def test_summary_on_stdout_with_out_file(self, capsys, tmp_path):
        code, out, err = run(capsys, *self.ARGS, "--out",
                             str(tmp_path / "r.csv"))
        assert code == 0
        assert "all hold" in out
        assert err == ""

    def test_json_payload_shape(self, capsys, tmp_path):
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--id", "INQ1", "--params",
                         "a=1,b=1", "--grid", "1.001:50:10", "--format",
                         "json", "--out", str(f))
        assert code == 0
        payload = json.loads(f.read_text())
        assert list(payload) == ["command", "id", "params", "tol", "seed",
                                 "records", "summary"]
        assert payload["command"] == "audit"
        rec = payload["records"][0]
        assert list(rec) == ["id", "params", "point", "lhs_log", "rhs_log",
                             "margin", "holds"]
        summ = payload["summary"]
        assert summ["points"] == 10
        assert summ["skipped"] == 0
        assert summ["all_hold"] is True
        assert summ["min_margin"] > 0

    def test_explicit_point(self, capsys, tmp_path):
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--id", "INQ1", "--params",
                         "a=1,b=1,z=2", "--format", "json", "--out", str(f))
        assert code == 0
        payload = json.loads(f.read_text())
        (rec,) = payload["records"]
        assert rec["point"] == [2.0]
        assert rec["margin"] == pytest.approx(math.log(2.0), abs=1e-12)

    def test_explicit_point_out_of_domain(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "INQ1", "--params",
                           "a=1,b=1,z=0.5")
        assert code == 1
        assert err.startswith("error:")
        assert "requires" in err

    def test_boundary_gridpoint_nudged(self, capsys, tmp_path):
        # linspace(1, 3, 5) starts exactly on the excluded boundary z = 1
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--id", "INQ1", "--params",
                         "a=1,b=1", "--grid", "1:3:5", "--format", "json",
                         "--out", str(f))
        assert code == 0
        summ = json.loads(f.read_text())["summary"]
        assert summ["nudged"] == 1
        assert summ["skipped"] == 0
        assert summ["points"] == 5

    def test_two_coordinate_grid_is_cartesian(self, capsys, tmp_path):
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--id", "INQ51", "--grid",
                         "0:2:3", "--format", "json", "--out", str(f))
        assert code == 0
        payload = json.loads(f.read_text())
        assert payload["summary"]["points"] == 9
        pts = [tuple(r["point"]) for r in payload["records"]]
        assert len(set(pts)) == 9

    def test_list_valued_params(self, capsys):
        code, out, _ = run(capsys, "audit", "--id", "MULTI_GE1", "--params",
                           "a=1;2;3", "--grid", "5.5:9:4")
        assert code == 0
        assert out.splitlines()[1].startswith("MULTI_GE1,1;2;3,")


class TestAuditErrors:
    def test_unknown_id(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "NOPE", "--grid",
                           "1:2:3")
        assert code == 1
        assert "unknown inequality id" in err

    def test_missing_point_source(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "INQ1", "--params",
                           "a=1,b=1")
        assert code == 1
        assert "--grid" in err

    def test_two_point_sources(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "INQ1", "--params",
                           "a=1,b=1", "--grid", "2:3:4", "--samples", "5")
        assert code == 1
        assert "exactly one" in err

    def test_malformed_grid(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "INQ1", "--params",
                           "a=1,b=1", "--grid", "1:2")
        assert code == 1
        assert "grid" in err

    def test_bad_param_value(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "INQ1", "--params",
                           "a=x,b=1", "--grid", "2:3:4")
        assert code == 1

    def test_missing_param(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "INQ1", "--params",
                           "a=1", "--grid", "2:3:4")
        assert code == 1
        assert "'b'" in err

    def test_inadmissible_param(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "BETA_UB_DRAGOMIR",
                           "--params", "a=2,b=2")
        assert code == 1
        assert "requires" in err

    def test_nonpositive_tolerance(self, capsys):
        code, _, err = run(capsys, "audit", "--id", "INQ1", "--params",
                           "a=1,b=1", "--grid", "2:3:4", "--tol", "-1")
        assert code == 1

    def test_violation_exits_two(self, capsys, synthetic_violation):
        code, out, err = run(capsys, "audit", "--id", "SYN_BAD", "--grid",
                             "1:2:5")
        assert code == 2
        assert "VIOLATION" in err
        rows = out.splitlines()[1:]
        assert len(rows) == 5
        assert all(row.endswith(",false") for row in rows)


class TestSeedResolution:
    SAMPLE_ARGS = ("audit", "--id", "INQ51", "--samples", "25", "--format",
                   "json")

    def _payload(self, capsys, tmp_path, *extra):
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, *self.SAMPLE_ARGS, "--out", str(f), *extra)
        assert code == 0
        return json.loads(f.read_text())

    def test_env_seed(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("CMGAMMA_SEED", "7")
        p1 = self._payload(capsys, tmp_path)
        p2 = self._payload(capsys, tmp_path)
        assert p1["seed"] == p2["seed"] == 7
        assert p1["records"] == p2["records"]

    def test_flag_beats_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("CMGAMMA_SEED", "7")
        assert self._payload(capsys, tmp_path, "--seed", "3")["seed"] == 3

    def test_config_beats_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("CMGAMMA_SEED", "7")
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"seed": 5}))
        assert self._payload(capsys, tmp_path, "--config",
                             str(cfg))["seed"] == 5

    def test_flag_beats_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"seed": 5}))
        assert self._payload(capsys, tmp_path, "--config", str(cfg),
                             "--seed", "9")["seed"] == 9

    def test_default_seed(self, capsys, tmp_path, monkeypatch):
        monkeypatch.delenv("CMGAMMA_SEED", raising=False)
        assert self._payload(capsys, tmp_path)["seed"] == 42

    def test_seeds_change_samples(self, capsys, tmp_path):
        p1 = self._payload(capsys, tmp_path, "--seed", "1")
        p2 = self._payload(capsys, tmp_path, "--seed", "2")
        assert p1["records"] != p2["records"]

    def test_bad_seed(self, capsys):
        code, _, err = run(capsys, *self.SAMPLE_ARGS, "--seed", "x")
        assert code == 1
        assert "seed" in err


class TestConfigFile:
    def test_config_drives_run(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "id": "INQ1", "params": {"a": 1, "b": 1},
            "grid": "1.001:50:10", "format": "json"}))
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--config", str(cfg), "--out",
                         str(f))
        assert code == 0
        assert json.loads(f.read_text())["summary"]["points"] == 10

    def test_flag_point_source_displaces_config_grid(self, capsys,
                                                     tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "id": "INQ1", "params": "a=1,b=1", "grid": "1.001:50:10",
            "format": "json"}))
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--config", str(cfg),
                         "--samples", "12", "--out", str(f))
        assert code == 0
        assert json.loads(f.read_text())["summary"]["points"] == 12

    def test_unreadable_config(self, capsys, tmp_path):
        code, _, err = run(capsys, "audit", "--config",
                           str(tmp_path / "missing.json"))
        assert code == 1
        assert "config" in err

    def test_non_object_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("[1, 2]")
        code, _, err = run(capsys, "audit", "--config", str(cfg))
        assert code == 1


class TestCertify:
    def test_trivial_family_certified(self, capsys, tmp_path):
        f = tmp_path / "r.json"
        code, out, _ = run(capsys, "certify", "--family", "symmetric",
                           "--params", "a=0", "--grid", "1:10:6", "--out",
                           str(f))
        assert code == 0
        payload = json.loads(f.read_text())
        assert payload["verdict"] == "certified"
        assert set(payload["routes"]) == {"log_cm", "finite_diff"}
        assert payload["family"]["kind"] == "symmetric"
        assert "certified" in out

    def test_majorized_refusal(self, capsys):
        code, _, err = run(capsys, "certify", "--family", "majorized",
                           "--params", "a=5;5,b=0;9", "--grid", "10:20:5")
        assert code == 1
        assert "not certifiable" in err

    def test_csv_format_rejected(self, capsys):
        code, _, err = run(capsys, "certify", "--family", "symmetric",
                           "--params", "a=0", "--grid", "1:10:6",
                           "--format", "csv")
        assert code == 1
        assert "JSON" in err

    def test_missing_grid(self, capsys):
        code, _, err = run(capsys, "certify", "--family", "symmetric",
                           "--params", "a=0")
        assert code == 1
        assert "--grid" in err

    def test_unknown_family_parameter(self, capsys):
        code, _, err = run(capsys, "certify", "--family", "symmetric",
                           "--params", "a=0,q=1", "--grid", "1:10:6")
        assert code == 1
        assert "'q'" in err

    def test_inconclusive_exits_three(self, capsys, monkeypatch):
        def broken(fam, z, n, opts=None):
            raise ConvergenceError("no convergence", value=math.nan,
                                   err_estimate=math.inf, evaluations=1)
        monkeypatch.setattr(cmc, "log_deriv_quadrature", broken)
        code, _, err = run(capsys, "certify", "--family", "two-param",
                           "--params", "a=0.5,b=0.7", "--grid", "1:5:4",
                           "--n-max", "2")
        assert code == 3
        assert "inconclusive" in err

    def test_violation_exits_two(self, capsys, monkeypatch):
        def neg(path):
            def fake(fam, z, n, *a, **kw):
                return LogDerivResult(order=n, z=float(z),
                                      signed_value=-1.0, path=path,
                                      err_estimate=0.0)
            return fake
        monkeypatch.setattr(cmc, "log_deriv_quadrature", neg("quadrature"))
        monkeypatch.setattr(cmc, "log_deriv_polygamma", neg("polygamma"))
        code, _, err = run(capsys, "certify", "--family", "two-param",
                           "--params", "a=0.5,b=0.7", "--grid", "1:5:4",
                           "--n-max", "2")
        assert code == 2
        assert "violated" in err


class TestBounds:
    def test_wallis_at_zero(self, capsys):
        code, out, _ = run(capsys, "bounds", "wallis", "--params", "z=0")
        assert code == 0
        assert "WALLIS_LB" in out and "WALLIS_UB" in out
        assert "1.4142135623730949" in out
        assert "1.7724538509055161" in out

    def test_beta_reference_out_of_domain(self, capsys):
        code, out, _ = run(capsys, "bounds", "beta", "--params", "a=2,b=3")
        assert code == 0
        assert "BETA_UB_DRAGOMIR" in out
        assert "out of domain" in out

    def test_json_values(self, capsys, tmp_path):
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "bounds", "inq58", "--params", "a=1,z=4",
                         "--format", "json", "--out", str(f))
        assert code == 0
        payload = json.loads(f.read_text())
        assert payload["true"] == pytest.approx(1.5, rel=1e-12)
        values = {b["id"]: b["value"] for b in payload["bounds"]}
        assert values["INQ58"] == pytest.approx(1.125, rel=1e-12)
        assert values["INQ58_BASE_RATIO"] == pytest.approx(1.25, rel=1e-12)
        assert values["INQ58_BASE_SHIFT"] == pytest.approx(1.5, rel=1e-12)

    def test_primary_out_of_domain(self, capsys):
        code, _, err = run(capsys, "bounds", "dup", "--params", "a=2")
        assert code == 1
        assert "requires" in err

    def test_unknown_target(self, capsys):
        code, _, err = run(capsys, "bounds", "nope", "--params", "z=1")
        assert code == 1
        assert "wallis" in err

    def test_missing_target(self, capsys):
        code, _, err = run(capsys, "bounds", "--params", "z=1")
        assert code == 1

    def test_missing_coordinate(self, capsys):
        code, _, err = run(capsys, "bounds", "sym", "--params", "a=0.5")
        assert code == 1
        assert "z" in err


class TestCompare:
    def test_explicit_point_csv(self, capsys):
        code, out, _ = run(capsys, "compare", "--id",
                           "INQ58,INQ58_BASE_RATIO,INQ58_BASE_SHIFT",
                           "--params", "a=1,z=4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == ("params,point,lhs,INQ58,INQ58_BASE_RATIO,"
                            "INQ58_BASE_SHIFT,tightest")
        assert len(lines) == 2
        assert lines[1].endswith(",INQ58_BASE_SHIFT")

    def test_grid_json(self, capsys, tmp_path):
        f = tmp_path / "r.json"
        code, _, _ = run(capsys, "compare", "--id",
                         "BETA_UB,BETA_UB_DRAGOMIR", "--grid", "0.1:0.9:4",
                         "--format", "json", "--out", str(f))
        assert code == 0
        payload = json.loads(f.read_text())
        assert len(payload["rows"]) == 16
        assert all(r["tightest"] in ("BETA_UB", "BETA_UB_DRAGOMIR")
                   for r in payload["rows"])

    def test_single_id_rejected(self, capsys):
        code, _, err = run(capsys, "compare", "--id", "BETA_UB",
                           "--params", "a=0.4,b=0.4")
        assert code == 1

    def test_incompatible_ids(self, capsys):
        code, _, err = run(capsys, "compare", "--id",
                           "INQ3_UB,SYM_SANDWICH_UB", "--params",
                           "a=0.5,z=2")
        assert code == 1
        assert "different expressions" in err
