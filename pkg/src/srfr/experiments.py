"""Seeded Monte Carlo experiments and their CSV / JSON reports.

Each experiment draws independent trials, one PRNG stream per ``(seed, trial_id)``
(see :mod:`srfr.sampling`), so results do not depend on worker count or
scheduling.  Records are always sorted by trial id before reporting.

Columns of the CSV report: ``trial_id, p, n, f, N, D, eps, s, kdim, delta,
success, micros``.  Vectors are joined with ``;``; columns that do not apply to
an experiment are left empty.  ``micros`` is 0 unless timing is enabled, since
wall time would break byte-identical reruns.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field, replace
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import instance_io
from .codes import EvalParams, encode, inject_errors, random_error_pattern, srfrwe_solve
from .degrees import generic_pivot_degrees
from .field import PrimeField
from .poly import Polynomial, gcd, inverse_mod
from .reconstruct import SRFRInstance, srfr_solve
from .relation import ModuliSet, relation_basis
from .sampling import random_coprime, random_divisor_chain, random_monic, random_points, random_poly, trial_rng

KINDS = ("uniqueness", "fg", "fge", "generic-degrees", "rank-bound")
REGIMES = ("threshold", "fractional", "irs", "radius")
CSV_COLUMNS = ("trial_id", "p", "n", "f", "N", "D", "eps", "s", "kdim", "delta", "success", "micros")


class ConfigError(ValueError):
    """The experiment configuration violates a precondition of its regime."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one experiment.

    ``f`` empty in ``uniqueness``/``fg`` means: draw per trial a random ``f >= N``
    with ``sum f = sum N + D - 1``.  ``rank-bound`` with empty ``f`` draws the
    whole parameter set ``(f, N, D)`` per trial.  ``fge`` derives ``f`` from
    ``regime``.
    """

    kind: str
    p: int
    n: int = 2
    f: tuple[int, ...] = ()
    N: tuple[int, ...] = ()
    D: int = 1
    eps: int = 0
    trials: int = 1000
    seed: int = 0
    regime: str = "threshold"
    shift: tuple[int, ...] = ()
    moduli: str = "random"
    error_mode: str = "full"
    max_degree: int = 6
    timing: bool = False
    workers: int = 1

    def __post_init__(self):
        for name in ("f", "N", "shift"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ConfigError(f"unknown experiment {self.kind!r}; choose from {KINDS}")
        try:
            PrimeField(self.p)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.trials < 0:
            raise ConfigError("trials must be >= 0")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.moduli not in ("random", "monomial"):
            raise ConfigError("moduli must be 'random' or 'monomial'")
        getattr(self, f"_validate_{self.kind.replace('-', '_')}")()

    def _check_lengths(self, need_f: bool) -> None:
        if len(self.N) != self.n:
            raise ConfigError(f"N must have n={self.n} entries")
        if need_f and len(self.f) != self.n:
            raise ConfigError(f"f must have n={self.n} entries")
        if self.f and len(self.f) != self.n:
            raise ConfigError(f"f must have n={self.n} entries")

    def _validate_uniqueness(self) -> None:
        self._check_lengths(False)
        if any(x < 1 for x in self.N) or self.D < 1:
            raise ConfigError("need N_i >= 1 and D >= 1")
        if self.f:
            if sum(self.f) != sum(self.N) + self.D - 1:
                raise ConfigError("need sum f == sum N + D - 1")
            if any(a > b for a, b in zip(self.N, self.f)) or self.D > max(self.f):
                raise ConfigError("need N_i <= f_i and D <= max f")

    def _validate_fg(self) -> None:
        self._validate_uniqueness()

    def _validate_fge(self) -> None:
        if self.regime not in REGIMES:
            raise ConfigError(f"unknown regime {self.regime!r}; choose from {REGIMES}")
        if len(self.N) not in (1, self.n) or len(set(self.N)) != 1:
            raise ConfigError("fge needs a single N shared by all components")
        if self.regime == "irs" and self.D != 1:
            raise ConfigError("the irs regime needs D = 1")
        N, f = self.N[0], self.regime_f
        if not (0 < N < f and 0 < self.D < f and 0 <= self.eps < f):
            raise ConfigError(f"need 0 < N, D < f and 0 <= eps < f (f={f})")
        if f > self.p:
            raise ConfigError(f"f={f} evaluation points do not fit in F_{self.p}")

    def _validate_generic_degrees(self) -> None:
        if not self.f or not self.shift:
            raise ConfigError("generic-degrees needs f and shift")
        if len(self.shift) < len(self.f):
            raise ConfigError("need m = len(shift) >= n = len(f)")
        if any(x < 0 for x in self.f):
            raise ConfigError("f must be nonnegative")
        if list(self.f) != sorted(self.f, reverse=True):
            raise ConfigError("f must be non-increasing (invariant factor degrees)")

    def _validate_rank_bound(self) -> None:
        if not self.f:
            if self.max_degree < 2:
                raise ConfigError("max_degree must be >= 2")
            return
        self._check_lengths(True)
        if len(set(self.f)) != 1 or len(set(self.N)) != 1:
            raise ConfigError("rank-bound needs equal moduli degrees and equal N")
        if self.N[0] == self.f[0] and self.D > 1:
            raise ConfigError("no finite k when N = f and D > 1")
        if not (0 < self.N[0] <= self.f[0] and 0 < self.D <= self.f[0]):
            raise ConfigError("need 0 < N <= f and 0 < D <= f")

    @property
    def regime_f(self) -> int:
        """Number of evaluation points for the ``fge`` regime (ceilings applied).

        ``threshold``   N + eps + (D + eps - 1)/n, where unknowns first exceed equations
        ``fractional``  N + D - 1 + eps + eps/n
        ``irs``         N + eps + eps/n (needs D = 1)
        ``radius``      N + D + 2 eps - 1, the unique-decoding radius
        """
        N, D, e, n = self.N[0], self.D, self.eps, self.n
        if self.regime == "threshold":
            return N + e + math.ceil((D + e - 1) / n)
        if self.regime == "fractional":
            return N + D - 1 + e + math.ceil(e / n)
        if self.regime == "irs":
            return N + e + math.ceil(e / n)
        if self.regime == "radius":
            return N + D + 2 * e - 1
        raise ConfigError(f"unknown regime {self.regime!r}")


@dataclass
class TrialRecord:
    trial_id: int
    digest: str
    p: int
    n: int
    f: tuple[int, ...]
    N: tuple[int, ...] | None
    D: int | None
    eps: int | None
    s: int | None
    kdim: int | None
    delta: tuple[int, ...] | None
    success: bool
    micros: int = 0

    def csv_row(self) -> list[str]:
        def cell(x):
            if x is None:
                return ""
            if isinstance(x, bool):
                return str(int(x))
            if isinstance(x, tuple):
                return ";".join(str(v) for v in x)
            return str(x)

        return [cell(getattr(self, c)) for c in CSV_COLUMNS]


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list[TrialRecord] = dc_field(default_factory=list)

    @property
    def successes(self) -> int:
        return sum(r.success for r in self.records)

    @property
    def fraction(self) -> float | None:
        return self.successes / len(self.records) if self.records else None

    def summary(self) -> dict:
        return summarize(self.config, self.records)


def _digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def _coeffs(polys: Sequence[Polynomial]) -> list[list[int]]:
    return [list(q.coeffs) for q in polys]


def _random_split(rng: np.random.Generator, total: int, parts: int) -> list[int]:
    """Uniform composition of ``total`` into ``parts`` nonnegative integers."""
    cuts = sorted(int(c) for c in rng.integers(0, total + 1, size=parts - 1))
    bounds = [0] + cuts + [total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def _sample_f(cfg: ExperimentConfig, rng: np.random.Generator) -> tuple[int, ...]:
    if cfg.f:
        return cfg.f
    for _ in range(100):
        f = tuple(a + k for a, k in zip(cfg.N, _random_split(rng, cfg.D - 1, cfg.n)))
        if cfg.D <= max(f):
            return f
    # put all the slack on the largest bound; always satisfies D <= max f
    j = max(range(cfg.n), key=lambda i: cfg.N[i])
    return tuple(a + (cfg.D - 1 if i == j else 0) for i, a in enumerate(cfg.N))


def _sample_moduli(cfg: ExperimentConfig, rng: np.random.Generator, F: PrimeField, f) -> ModuliSet:
    if cfg.moduli == "monomial":
        return ModuliSet([Polynomial.monomial(F, fi) for fi in f])
    return ModuliSet([random_monic(rng, F, fi) for fi in f])


def _clock() -> int:
    return time.perf_counter_ns()


def _micros(cfg: ExperimentConfig, t0: int) -> int:
    return (_clock() - t0) // 1000 if cfg.timing else 0


def _trial_uniqueness(cfg: ExperimentConfig, tid: int) -> TrialRecord:
    F = PrimeField(cfg.p)
    rng = trial_rng(cfg.seed, tid)
    f = _sample_f(cfg, rng)
    mods = _sample_moduli(cfg, rng, F, f)
    u = [random_poly(rng, F, fi) for fi in f]
    inst = SRFRInstance(mods, u, cfg.N, cfg.D)
    t0 = _clock()
    space = srfr_solve(inst)
    micros = _micros(cfg, t0)
    return TrialRecord(
        tid, _digest(instance_io.dumps(inst)), cfg.p, cfg.n, f, cfg.N, cfg.D, None,
        space.rank, space.kdim, space.basis.pivot_degrees, space.rank == 1, micros,
    )


def _sample_fraction(rng, F, N, D, avoid: Sequence[Polynomial] = (), points: Sequence[int] = ()):
    """Reduced ``(v, d)`` with ``deg v_i < N_i``, ``deg d < D``, d coprime to ``avoid``
    and nonzero at ``points``."""
    for _ in range(1000):
        v = [random_poly(rng, F, Ni) for Ni in N]
        d = Polynomial.one(F) if D == 1 else random_coprime(rng, F, D, avoid)
        if any(d.evaluate(x) == 0 for x in points):
            continue
        if gcd(d, *v).degree == 0:
            return v, d
    raise RuntimeError("could not sample a reduced fraction")


def _trial_fg(cfg: ExperimentConfig, tid: int) -> TrialRecord:
    F = PrimeField(cfg.p)
    rng = trial_rng(cfg.seed, tid)
    f = _sample_f(cfg, rng)
    mods = _sample_moduli(cfg, rng, F, f)
    v, d = _sample_fraction(rng, F, cfg.N, cfg.D, avoid=mods.moduli)
    u = [(vi * inverse_mod(d, a)) % a for vi, a in zip(v, mods.moduli)]
    inst = SRFRInstance(mods, u, cfg.N, cfg.D)
    t0 = _clock()
    space = srfr_solve(inst)
    micros = _micros(cfg, t0)
    if not space.contains(tuple(v) + (d,)):
        raise RuntimeError(f"trial {tid}: sampled fraction missing from the solution space")
    return TrialRecord(
        tid, _digest(instance_io.dumps(inst)), cfg.p, cfg.n, f, cfg.N, cfg.D, None,
        space.rank, space.kdim, space.basis.pivot_degrees, space.rank == 1, micros,
    )


def _trial_fge(cfg: ExperimentConfig, tid: int) -> TrialRecord:
    F = PrimeField(cfg.p)
    rng = trial_rng(cfg.seed, tid)
    n, N, D, eps, f = cfg.n, cfg.N[0], cfg.D, cfg.eps, cfg.regime_f
    alphas = random_points(rng, F, f)
    v, d = _sample_fraction(rng, F, (N,) * n, D, points=alphas)
    pattern = random_error_pattern(rng, F, n, f, eps, mode=cfg.error_mode)
    word = inject_errors(encode(v, d, alphas), pattern)
    params = EvalParams(F, tuple(alphas), n, N, D, eps)
    t0 = _clock()
    res = srfrwe_solve(word, params)
    micros = _micros(cfg, t0)
    payload = {"p": cfg.p, "alphas": alphas, "word": [list(r) for r in word.rows], "N": N, "D": D, "eps": eps}
    return TrialRecord(
        tid, _digest(payload), cfg.p, n, (f,) * n, (N,) * n, D, eps,
        res.rank, res.kdim, None, res.matches(v, d), micros,
    )


def _trial_generic_degrees(cfg: ExperimentConfig, tid: int) -> TrialRecord:
    F = PrimeField(cfg.p)
    rng = trial_rng(cfg.seed, tid)
    f, shift = cfg.f, cfg.shift
    # the prediction is about invariant factors, so the moduli must divide each other
    if cfg.moduli == "monomial":
        mods = _sample_moduli(cfg, rng, F, f)
    else:
        mods = ModuliSet(random_divisor_chain(rng, F, f))
    M = [tuple(random_poly(rng, F, fj) for fj in f) for _ in shift]
    t0 = _clock()
    basis = relation_basis(M, mods, shift)
    micros = _micros(cfg, t0)
    predicted = generic_pivot_degrees(f, shift).pivot_degrees
    payload = {"p": cfg.p, "mods": _coeffs(mods.moduli), "M": [_coeffs(r) for r in M], "shift": list(shift)}
    return TrialRecord(
        tid, _digest(payload), cfg.p, len(f), f, None, None, None,
        None, None, basis.pivot_degrees, basis.pivot_degrees == predicted, micros,
    )


def rank_bound_k(f: int, N: int, D: int) -> int:
    """Smallest ``k >= 1`` with ``f >= N + (D - 1) / k``."""
    if D == 1:
        return 1
    if f <= N:
        raise ValueError("no finite k when f <= N and D > 1")
    return max(1, -(-(D - 1) // (f - N)))


def _trial_rank_bound(cfg: ExperimentConfig, tid: int) -> TrialRecord:
    F = PrimeField(cfg.p)
    rng = trial_rng(cfg.seed, tid)
    n = cfg.n
    if cfg.f:
        fa, N, D = cfg.f[0], cfg.N[0], cfg.D
    else:
        while True:
            fa = int(rng.integers(2, cfg.max_degree + 1))
            N = int(rng.integers(1, fa + 1))
            D = int(rng.integers(1, fa + 1))
            if D == 1 or N < fa:
                break
    a = random_monic(rng, F, fa) if cfg.moduli == "random" else Polynomial.monomial(F, fa)
    if tid % 2:
        # odd trials take u = v/d so that at least one solution exists
        v, d = _sample_fraction(rng, F, (N,) * n, D, avoid=(a,))
        u = [(vi * inverse_mod(d, a)) % a for vi in v]
    else:
        u = [random_poly(rng, F, fa) for _ in range(n)]
    inst = SRFRInstance(ModuliSet([a] * n), u, (N,) * n, D)
    t0 = _clock()
    space = srfr_solve(inst)
    micros = _micros(cfg, t0)
    k = rank_bound_k(fa, N, D)
    return TrialRecord(
        tid, _digest(instance_io.dumps(inst)), cfg.p, n, (fa,) * n, (N,) * n, D, None,
        space.rank, space.kdim, space.basis.pivot_degrees, space.rank <= k, micros,
    )


TRIALS: dict[str, Callable[[ExperimentConfig, int], TrialRecord]] = {
    "uniqueness": _trial_uniqueness,
    "fg": _trial_fg,
    "fge": _trial_fge,
    "generic-degrees": _trial_generic_degrees,
    "rank-bound": _trial_rank_bound,
}


def _run_chunk(cfg: ExperimentConfig, ids: Sequence[int]) -> list[TrialRecord]:
    trial = TRIALS[cfg.kind]
    return [trial(cfg, t) for t in ids]


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    cfg.validate()
    ids = list(range(cfg.trials))
    if cfg.workers == 1 or len(ids) < 2:
        records = _run_chunk(cfg, ids)
    else:
        chunks = [ids[i :: cfg.workers] for i in range(cfg.workers)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = [r for part in pool.map(_run_chunk, [cfg] * len(chunks), chunks) for r in part]
    records.sort(key=lambda r: r.trial_id)
    return ExperimentResult(cfg, records)


def run_uniqueness(cfg: ExperimentConfig) -> ExperimentResult:
    return run_experiment(replace(cfg, kind="uniqueness"))


def run_conjecture_fg(cfg: ExperimentConfig) -> ExperimentResult:
    return run_experiment(replace(cfg, kind="fg"))


def run_conjecture_fge(cfg: ExperimentConfig) -> ExperimentResult:
    return run_experiment(replace(cfg, kind="fge"))


def run_generic_degrees(cfg: ExperimentConfig) -> ExperimentResult:
    return run_experiment(replace(cfg, kind="generic-degrees"))


def run_rank_bound(cfg: ExperimentConfig) -> ExperimentResult:
    return run_experiment(replace(cfg, kind="rank-bound"))


def replay(cfg: ExperimentConfig, trial_id: int) -> TrialRecord:
    """Re-run a single trial; its digest equals the one in the original report."""
    cfg.validate()
    return TRIALS[cfg.kind](cfg, trial_id)


def summarize(cfg: ExperimentConfig, records: Sequence[TrialRecord]) -> dict:
    ranks = Counter(r.s for r in records if r.s is not None)
    successes = sum(r.success for r in records)
    return {
        "config": {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(cfg).items()},
        "trials": len(records),
        "successes": successes,
        "fraction": successes / len(records) if records else None,
        "rank_histogram": {str(k): ranks[k] for k in sorted(ranks)},
        "failures": [{"trial_id": r.trial_id, "digest": r.digest} for r in records if not r.success],
    }


def csv_text(records: Sequence[TrialRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in sorted(records, key=lambda r: r.trial_id):
        w.writerow(r.csv_row())
    return buf.getvalue()


def read_csv(path: str | Path) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def emit_report(result: ExperimentResult, csv_path: str | Path, json_path: str | Path | None = None) -> None:
    """Write the per-trial CSV and, optionally, the JSON summary."""
    Path(csv_path).write_text(csv_text(result.records))
    if json_path is not None:
        Path(json_path).write_text(json.dumps(result.summary(), indent=2, sort_keys=True) + "\n")
