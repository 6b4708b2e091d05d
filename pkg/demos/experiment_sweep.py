"""Fraction of unique SRFR solutions as the field grows.

Writes a CSV per field size into the current directory.
Run: python3 demos/experiment_sweep.py
"""

from srfr import ExperimentConfig, run_experiment
from srfr.experiments import emit_report

for p in (11, 101, 1009, 10007):
    cfg = ExperimentConfig("uniqueness", p, n=2, f=(3, 3), N=(2, 2), D=3, trials=500, seed=1)
    result = run_experiment(cfg)
    emit_report(result, f"uniqueness_p{p}.csv")
    print(f"p = {p:>5}: {result.successes}/{len(result.records)} unique, ranks {result.summary()['rank_histogram']}")
