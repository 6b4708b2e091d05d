import csv
import io
import json

import pytest

from srfr.experiments import (
    CSV_COLUMNS,
    ConfigError,
    ExperimentConfig,
    csv_text,
    emit_report,
    rank_bound_k,
    read_csv,
    replay,
    run_conjecture_fg,
    run_conjecture_fge,
    run_experiment,
    run_generic_degrees,
    run_rank_bound,
    run_uniqueness,
)


def small(kind, **kw):
    base = dict(kind=kind, p=101, n=2, trials=20, seed=3)
    base.update(kw)
    return ExperimentConfig(**base)


def test_empty_run_has_header_only(tmp_path):
    res = run_uniqueness(small("uniqueness", f=(3, 3), N=(2, 2), D=3, trials=0))
    assert res.records == [] and res.fraction is None
    emit_report(res, tmp_path / "r.csv", tmp_path / "r.json")
    assert (tmp_path / "r.csv").read_text() == ",".join(CSV_COLUMNS) + "\n"
    assert json.loads((tmp_path / "r.json").read_text())["trials"] == 0


def test_ten_trials_ten_rows(tmp_path):
    res = run_uniqueness(small("uniqueness", f=(3, 3), N=(2, 2), D=3, trials=10))
    emit_report(res, tmp_path / "r.csv", tmp_path / "r.json")
    rows = read_csv(tmp_path / "r.csv")
    assert [int(r["trial_id"]) for r in rows] == list(range(10))
    summary = json.loads((tmp_path / "r.json").read_text())
    assert summary["successes"] == sum(int(r["success"]) for r in rows)
    hist = {}
    for r in rows:
        hist[r["s"]] = hist.get(r["s"], 0) + 1
    assert summary["rank_histogram"] == hist


def test_random_f_respects_count():
    res = run_uniqueness(small("uniqueness", N=(2, 3), D=4, trials=30))
    for r in res.records:
        assert sum(r.f) == sum(r.N) + r.D - 1 and all(a >= b for a, b in zip(r.f, r.N))
    assert len({r.f for r in res.records}) > 1


def test_fg_recovers_fraction_when_unique():
    res = run_conjecture_fg(small("fg", f=(3, 3), N=(2, 2), D=3, p=10007))
    assert res.fraction == 1.0


def test_fg_small_field_shows_failures():
    res = run_conjecture_fg(small("fg", f=(3, 3), N=(2, 2), D=3, p=11, trials=300))
    assert 0 < res.successes < 300


@pytest.mark.parametrize("regime", ["threshold", "fractional", "radius"])
def test_fge_regimes_run(regime):
    res = run_conjecture_fge(small("fge", N=(3,), D=2, eps=2, regime=regime, p=10007))
    assert res.fraction >= 0.9
    assert all(r.eps == 2 for r in res.records)


def test_fge_eps_zero_collapses_to_count():
    cfg = small("fge", N=(3,), D=3, eps=0, regime="threshold", p=10007)
    assert cfg.regime_f == 3 + 1  # N + ceil((D - 1) / n)
    assert run_conjecture_fge(cfg).fraction == 1.0


def test_regime_formulas():
    assert small("fge", N=(4,), D=1, eps=3, n=3, regime="irs").regime_f == 4 + 3 + 1
    assert small("fge", N=(4,), D=3, eps=3, n=2, regime="fractional").regime_f == 4 + 2 + 3 + 2
    assert small("fge", N=(4,), D=3, eps=3, n=2, regime="radius").regime_f == 4 + 3 + 6 - 1


def test_generic_degrees_first_situation():
    res = run_generic_degrees(small("generic-degrees", f=(6, 1, 0), shift=(0, 2, 4), p=10007, trials=30))
    assert res.fraction == 1.0 and all(r.delta == (5, 2, 0) for r in res.records)
    one = run_generic_degrees(small("generic-degrees", f=(4,), shift=(0,), p=10007, trials=30))
    assert one.fraction == 1.0


def test_generic_degrees_binary_field_records_mismatches():
    res = run_generic_degrees(small("generic-degrees", f=(3, 3, 1), shift=(0, 2, 4), p=2, trials=50))
    failures = res.summary()["failures"]
    assert len(failures) == 50 - res.successes
    # failing instances can be replayed from their id and digest
    for fail in failures[:3]:
        rec = replay(res.config, fail["trial_id"])
        assert rec.digest == fail["digest"] and not rec.success


def test_rank_bound_k():
    assert rank_bound_k(5, 3, 1) == 1
    assert rank_bound_k(5, 3, 3) == 1
    assert rank_bound_k(5, 4, 3) == 2
    assert rank_bound_k(3, 2, 3) == 2
    with pytest.raises(ValueError):
        rank_bound_k(3, 3, 2)


def test_rank_bound_experiment():
    res = run_rank_bound(small("rank-bound", n=3, p=11, trials=100))
    assert res.fraction == 1.0
    assert max(r.s for r in res.records) >= 2


def test_determinism_and_worker_independence():
    cfg = small("fge", N=(2,), D=2, eps=1, p=10007, trials=12)
    a = csv_text(run_experiment(cfg).records)
    b = csv_text(run_experiment(cfg).records)
    from dataclasses import replace

    c = csv_text(run_experiment(replace(cfg, workers=2)).records)
    assert a == b == c
    digests = [r.digest for r in run_experiment(cfg).records]
    assert digests != [r.digest for r in run_experiment(replace(cfg, seed=4)).records]


def test_timing_off_writes_zero():
    res = run_uniqueness(small("uniqueness", f=(3, 3), N=(2, 2), D=3, trials=3))
    rows = list(csv.DictReader(io.StringIO(csv_text(res.records))))
    assert {r["micros"] for r in rows} == {"0"}


@pytest.mark.parametrize(
    "cfg",
    [
        ExperimentConfig("uniqueness", 101, 2, f=(3, 4), N=(2, 2), D=3),
        ExperimentConfig("uniqueness", 100, 2, f=(3, 3), N=(2, 2), D=3),
        ExperimentConfig("nonsense", 101),
        ExperimentConfig("fge", 101, 2, N=(3,), D=2, eps=1, regime="irs"),
        ExperimentConfig("fge", 7, 2, N=(5,), D=2, eps=2, regime="radius"),
        ExperimentConfig("generic-degrees", 101, f=(3, 3)),
        ExperimentConfig("generic-degrees", 101, f=(1, 3), shift=(0, 0)),
        ExperimentConfig("rank-bound", 101, 2, f=(3, 3), N=(3, 3), D=2),
        ExperimentConfig("uniqueness", 101, 2, f=(3, 3), N=(2, 2), D=3, trials=-1),
    ],
)
def test_invalid_configs(cfg):
    with pytest.raises(ConfigError):
        run_experiment(cfg)
