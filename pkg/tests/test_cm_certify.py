"""Certification: fixtures, majorization precondition, verdict logic."""

import json
import math

import numpy as np
import pytest

import cmgamma.cm_certify as cmc
from cmgamma.cm_certify import (
    CertConfig,
    certify_cm_finite_diff,
    certify_log_cm,
    check_weak_submajorization,
    kernel_nonneg_scan,
    weak_submajorization_failure,
)
from cmgamma.errors import ConvergenceError, DomainError, UsageError
from cmgamma.kernels import (
    LogDerivResult,
    Majorized,
    MultiParam,
    Symmetric,
    TwoParam,
    domain_lower_bound,
)

from _samplers import _major_pair

FIXTURES = [
    (TwoParam(0.5, 0.7), 0.25, 10.2),
    (MultiParam((1.0, 2.0, 3.0)), 5.3, 20.0),
    (Majorized((3.0, 1.0), (2.0, 2.0)), 3.3, 18.0),
    (Symmetric(0.5), 0.8, 15.0),
]


def _config(lo, hi, **kw):
    kw.setdefault("n_max", 8)
    return CertConfig(z_grid=tuple(np.linspace(lo, hi, 30)), **kw)


class TestSubmajorization:
    def test_counterexample_rejected(self):
        fail = weak_submajorization_failure((5.0, 5.0), (0.0, 9.0))
        assert fail == (1, 9.0, 5.0)
        assert not check_weak_submajorization((5.0, 5.0), (0.0, 9.0))

    def test_good_pair_accepted(self):
        assert weak_submajorization_failure((3.0, 1.0), (2.0, 2.0)) is None
        assert check_weak_submajorization((3.0, 1.0), (2.0, 2.0))

    def test_order_independent(self):
        assert check_weak_submajorization((1.0, 3.0), (2.0, 2.0))
        assert not check_weak_submajorization((5.0, 5.0), (9.0, 0.0))

    def test_equal_vectors(self):
        assert check_weak_submajorization((2.0, 1.0), (1.0, 2.0))

    def test_length_mismatch(self):
        with pytest.raises(UsageError):
            weak_submajorization_failure((1.0, 2.0), (1.0,))

    def test_transfer_pairs_always_pass(self):
        rng = np.random.default_rng(20260818)
        for _ in range(1000):
            flat = _major_pair(rng)
            k = len(flat) // 2
            a, b = flat[:k], flat[k:]
            assert check_weak_submajorization(a, b), (a, b)

    def test_transfer_pairs_scan_nonnegative(self):
        rng = np.random.default_rng(77)
        for _ in range(1000):
            flat = _major_pair(rng)
            k = len(flat) // 2
            fam = Majorized(flat[:k], flat[k:])
            kmin, argmin = kernel_nonneg_scan(fam, t_points=120)
            scale = float(fam.kernel_scale(argmin))
            if not math.isfinite(scale):
                scale = abs(kmin)
            assert kmin >= -1e-12 * max(1.0, scale), (flat, kmin, argmin)


class TestKernelScan:
    def test_negative_for_counterexample(self):
        fam = Majorized((5.0, 5.0), (0.0, 9.0))
        kmin, argmin = kernel_nonneg_scan(fam)
        assert kmin < 0.0
        assert argmin > 0.0

    def test_nonnegative_for_fixtures(self):
        for fam, _, _ in FIXTURES:
            kmin, _ = kernel_nonneg_scan(fam)
            assert kmin >= -1e-12

    def test_point_count_validation(self):
        with pytest.raises(UsageError):
            kernel_nonneg_scan(TwoParam(0.5, 0.7), t_points=1)


class TestLogCmRoute:
    @pytest.mark.parametrize("fam,lo,hi", FIXTURES,
                             ids=lambda v: getattr(v, "kind", ""))
    def test_fixture_certified(self, fam, lo, hi):
        report = certify_log_cm(fam, _config(lo, hi))
        assert report.verdict == "certified"
        assert len(report.rows) == 30 * 8
        assert all(r.agrees for r in report.rows)
        assert report.worst[2] >= -1e-9

    def test_dual_path_allowance(self):
        fam, lo, hi = FIXTURES[0]
        report = certify_log_cm(fam, _config(lo, hi))
        for r in report.rows:
            assert abs(r.quadrature - r.polygamma) <= max(
                1e-8 * abs(r.polygamma), 1e-9)

    def test_trivial_family_is_exactly_zero(self):
        report = certify_log_cm(TwoParam(0.0, 0.0), _config(1.0, 5.0))
        assert report.verdict == "certified"
        assert report.worst[2] == 0.0
        assert all(r.quadrature == 0.0 and r.polygamma == 0.0
                   for r in report.rows)

    def test_counterexample_refused_with_sums(self):
        fam = Majorized((5.0, 5.0), (0.0, 9.0))
        with pytest.raises(UsageError, match=r"top-1 sum of b is 9\.0"):
            certify_log_cm(fam, _config(10.0, 20.0))

    def test_report_is_json_ready(self):
        fam, lo, hi = FIXTURES[3]
        report = certify_log_cm(fam, _config(lo, hi, n_max=2))
        text = json.dumps(report.to_dict())
        back = json.loads(text)
        assert back["verdict"] == "certified"
        assert back["method"] == "log-cm"
        assert back["kernel_scan"]["min"] >= 0.0

    def test_inconclusive_when_quadrature_fails(self, monkeypatch):
        def broken(fam, z, n, opts=None):
            raise ConvergenceError("no convergence", value=math.nan,
                                   err_estimate=math.inf, evaluations=1)
        monkeypatch.setattr(cmc, "log_deriv_quadrature", broken)
        report = certify_log_cm(TwoParam(0.5, 0.7), _config(1.0, 5.0,
                                                            n_max=2))
        assert report.verdict == "inconclusive"

    def test_violated_when_both_routes_agree_negative(self, monkeypatch):
        def neg(path):
            def fake(fam, z, n, *a, **kw):
                return LogDerivResult(order=n, z=float(z), signed_value=-1.0,
                                      path=path, err_estimate=0.0)
            return fake
        monkeypatch.setattr(cmc, "log_deriv_quadrature", neg("quadrature"))
        monkeypatch.setattr(cmc, "log_deriv_polygamma", neg("polygamma"))
        report = certify_log_cm(TwoParam(0.5, 0.7), _config(1.0, 5.0,
                                                            n_max=2))
        assert report.verdict == "violated"
        assert report.worst[2] == -1.0


class TestFiniteDiffRoute:
    @pytest.mark.parametrize("fam,lo,hi", FIXTURES,
                             ids=lambda v: getattr(v, "kind", ""))
    def test_fixture_certified(self, fam, lo, hi):
        report = certify_cm_finite_diff(fam, _config(lo, hi))
        assert report.verdict == "certified"
        assert report.fd_scale > 0.0
        assert len(report.fd_rows) == 30 * 8

    @pytest.mark.parametrize("h", [1e-3, 1e-2, 1e-1])
    def test_step_sizes_concur(self, h):
        fam, lo, hi = FIXTURES[0]
        report = certify_cm_finite_diff(fam, _config(lo, hi, fd_step=h))
        assert report.verdict == "certified"

    def test_trivial_family_margins_zero(self):
        report = certify_cm_finite_diff(TwoParam(0.0, 0.0),
                                        _config(1.0, 5.0))
        assert report.verdict == "certified"
        assert all(r.margin == 0.0 for r in report.fd_rows)

    def test_counterexample_refused(self):
        fam = Majorized((5.0, 5.0), (0.0, 9.0))
        with pytest.raises(UsageError, match="weak submajorization"):
            certify_cm_finite_diff(fam, _config(10.0, 20.0))

    def test_overflowing_stencil_rejected(self):
        fam = Majorized((1200.0, 0.0), (600.0, 600.0))
        cfg = CertConfig(z_grid=(1201.0, 1205.0), n_max=4)
        with pytest.raises(DomainError, match="overflows"):
            certify_cm_finite_diff(fam, cfg)

    def test_report_is_json_ready(self):
        fam, lo, hi = FIXTURES[1]
        report = certify_cm_finite_diff(fam, _config(lo, hi, n_max=3))
        back = json.loads(json.dumps(report.to_dict()))
        assert back["method"] == "finite-diff"
        assert back["fd_step"] == 1e-2


class TestConfigValidation:
    def test_grid_must_be_inside_domain(self):
        fam = TwoParam(0.5, 0.7)  # bound 0.2
        cfg = CertConfig(z_grid=(0.1, 1.0))
        with pytest.raises(UsageError):
            cfg.validate(fam)

    def test_grid_must_be_sorted(self):
        cfg = CertConfig(z_grid=(2.0, 1.0))
        with pytest.raises(UsageError):
            cfg.validate(TwoParam(0.5, 0.7))

    def test_grid_must_be_nonempty(self):
        with pytest.raises(UsageError):
            CertConfig(z_grid=()).validate(Symmetric(0.5))

    def test_n_max_positive(self):
        cfg = CertConfig(z_grid=(1.0, 2.0), n_max=0)
        with pytest.raises(UsageError):
            cfg.validate(TwoParam(0.5, 0.7))

    def test_bound_is_exposed(self):
        assert domain_lower_bound(TwoParam(0.5, 0.7)) == pytest.approx(0.2)
