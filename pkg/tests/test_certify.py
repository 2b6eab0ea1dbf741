import io
import math

import pytest
from mpmath import mp, mpf

from primeth import (
    CertGrid,
    DomainError,
    ThresholdViolatedError,
    certify_threshold,
    closed_form_floor,
    eval_L,
    eval_f,
    eval_g,
    eval_h,
)
from primeth import certify as certify_mod


def L_float(x):
    """Independent float-arithmetic evaluation of L, for cross-checking."""
    first = math.exp((x + 1) * (math.log(x) - math.log(x + 1)))
    second = math.exp((x + 1) * (math.log(math.log(x)) - math.log(math.log(x + 1))))
    return first * second


class TestEvalL:
    def test_at_4200_exceeds_threshold(self):
        value = eval_L(4200, prec=30)
        assert value > mpf("0.32627")
        assert abs(float(value) - L_float(4200)) < 1e-9

    def test_small_x(self):
        value = eval_L(2, prec=30)
        assert abs(float(value) - L_float(2)) < 1e-12
        assert float(value) < 0.08

    def test_large_x_above_boundary_value(self):
        assert eval_L(10**6, prec=40) > eval_L(4200, prec=40)

    def test_domain(self):
        with pytest.raises(DomainError):
            eval_L(1)

    def test_precision_robustness(self):
        a = eval_L(4200, prec=60)
        b = eval_L(4200, prec=120)
        assert abs(a - b) < mpf(10) ** -55


class TestAuxiliaryFunctions:
    def test_f_values(self):
        assert abs(float(eval_f(1)) + 2 * math.log(2)) < 1e-12
        assert abs(float(eval_f(4200)) + 1.000119) < 1e-5

    def test_f_negative_everywhere_sampled(self):
        for x in (0.5, 1, 7, 4200, 10**9):
            assert eval_f(x) < 0

    def test_f_is_log_of_first_factor(self):
        for x in (2, 100, 4200):
            with mp.workdps(50):
                first = (mpf(x) / (x + 1)) ** (x + 1)
                assert abs(mp.exp(eval_f(x, prec=50)) - first) < mpf(10) ** -40

    def test_g_values(self):
        assert eval_g(2) == mpf("0.25")
        assert abs(float(eval_g(3)) - (2 / 3) ** 3) < 1e-12
        assert eval_g(2) < eval_g(3)

    def test_h_value(self):
        expected = math.log(3) / (math.log(3) - math.log(2))
        assert abs(float(eval_h(2)) - expected) < 1e-12

    def test_h_cancellation_at_large_x(self):
        # denominator loses ~log10(x) digits; result must stay accurate
        x = 10**12
        value = eval_h(x, prec=30)
        expected = math.log(x + 1) / math.log1p(1 / x)
        assert abs(float(value) / expected - 1) < 1e-9

    def test_g_of_h_4200_in_unit_interval(self):
        value = eval_g(eval_h(4200))
        assert 0 < value < 1

    def test_domains(self):
        with pytest.raises(DomainError):
            eval_f(0)
        with pytest.raises(DomainError):
            eval_g(1)
        with pytest.raises(DomainError):
            eval_h(1)


class TestClosedFormFloor:
    def test_seven_digit_value(self):
        value = closed_form_floor(prec=30)
        assert mp.nstr(value, 7) == "0.3262768"
        assert value > mpf("0.32627")

    def test_below_actual_L(self):
        # the chain only enlarges the exponent of a factor below one
        assert closed_form_floor(prec=40) < eval_L(4200, prec=40)


class TestCertifyThreshold:
    def test_default_grid_passes(self):
        report = certify_threshold(CertGrid.default())
        assert report.all_pass
        assert report.f_increasing
        assert report.g_increasing
        assert report.h_increasing
        assert 0 < report.g_of_h_4200 < 1
        assert report.exp_threshold_ok  # e^(e/0.32627) <= 4200
        assert {4200, 4201} <= {x for x, *_ in report.rows}

    def test_out_of_hypothesis_points_report_without_raising(self):
        grid = CertGrid.default(x_min=2, x_max=10, count=5)
        report = certify_threshold(grid)
        assert not report.all_pass
        assert all(x < 4200 for x, *_ in report.rows)

    def test_in_hypothesis_violation_is_build_stopping(self, monkeypatch):
        monkeypatch.setattr(certify_mod, "THRESHOLD", mpf("0.5"))
        with pytest.raises(ThresholdViolatedError):
            certify_threshold(CertGrid.default(x_max=5000, count=3))

    def test_csv_and_text_forms(self):
        report = certify_threshold(CertGrid.default(x_max=10**4, count=4))
        buf = io.StringIO()
        report.to_csv(buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "x,L,margin,pass"
        assert all(line.endswith(",yes") for line in lines[1:])
        text = report.to_text()
        assert "verdict: pass" in text
        assert "0.3262768" in text

    def test_verdict_is_precision_invariant(self):
        lo = certify_threshold(CertGrid.default(x_max=10**4, count=4, prec=30))
        hi = certify_threshold(CertGrid.default(x_max=10**4, count=4, prec=100))
        assert lo.all_pass and hi.all_pass
