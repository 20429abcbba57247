import pytest

from app.benchmark import bench_crystals
from app.crystals import fast_rule
from app.qa import selftest
from app.types.errors import CalibrationError


def test_sl3_adjoint_check(sampler):
    result = selftest.check_sl3_adjoint(sampler)
    assert result.ok, result.detail
    assert result.to_dict()["nodes"] == 8


def test_column_bijection_check():
    result = selftest.check_column_bijection()
    assert result.ok
    assert result.detail["segments"] == [[4, 9], [3, 7], [2, 4]]


def test_small_checks(sampler):
    assert selftest.check_grassmannian(sampler, 3).ok
    assert selftest.check_projective_lines(sampler, (2, 3)).detail["counts"] == {2: 2, 3: 3}
    assert selftest.check_flag_chain(sampler, (2,), 2).ok
    assert selftest.check_kostka(4).ok
    assert selftest.check_stability_agreement(sampler, 50).ok


@pytest.mark.slow
def test_calibration_check(sampler, uncalibrated):
    result = selftest.check_calibration(sampler, (2, 4), 30, 5)
    assert result.ok, result.detail
    assert result.detail["convention"] == "right/asc/close-first"
    assert result.detail["spot_checks"] == 30


@pytest.mark.slow
def test_run_checks_at_acceptance_scale(sampler, uncalibrated):
    results = selftest.run_checks(sampler)
    assert [r.name for r in results if not r.ok] == []
    calibration = next(r for r in results if r.name == "calibration")
    assert calibration.detail["level"] == list(fast_rule.FULL_CALIBRATION)
    assert calibration.detail["spot_checks"] == fast_rule.SPOT_CHECKS
    assert fast_rule.calibrated_level() == (fast_rule.FULL_CALIBRATION[1], fast_rule.SPOT_CHECKS)


def test_bench_reports_milliseconds(capsys):
    avg = bench_crystals.bench("noop", lambda: None, runs=3)
    assert avg >= 0
    assert capsys.readouterr().out.startswith("noop")


@pytest.mark.slow
def test_bench_main(uncalibrated, capsys):
    timings = bench_crystals.main(runs=1)
    assert set(timings) == {"cold", "warm", "fast", "tableau"}


def test_calibration_failure_fails_only_that_check(sampler, uncalibrated, monkeypatch):
    def refuse(*args, **kwargs):
        raise CalibrationError("no convention")

    monkeypatch.setattr(fast_rule, "calibrate_fast_rule", refuse)
    results = selftest.run_checks(sampler, full=False)
    failed = {r.name: r.detail for r in results if not r.ok}
    assert list(failed) == ["calibration"]
    assert failed["calibration"]["error"] == "CalibrationError: no convention"
