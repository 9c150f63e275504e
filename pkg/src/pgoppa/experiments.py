"""Monte-Carlo harness for decoding-success statistics.

Each trial draws a fresh random code, an error pattern, and a random
codeword, corrupts, decodes, and counts success when the true codeword
appears among the candidates.  Trial i consumes only the stream derived
from (seed, i), so counts are reproducible bit-for-bit regardless of how
trials are scheduled across worker processes.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .decoder import decode
from .errors import ParamError
from .goppa import GoppaCode, build_code, sample_error
from .rng import trial_stream

WORKERS_ENV = "PGOPPA_MAX_WORKERS"


def success_prob_model(q: int, t: int, w: int) -> float:
    """Modeled probability 1 - q**-(t+1-w) that decoding w equal-magnitude
    errors in a fresh degree-t code succeeds."""
    return 1.0 - float(q) ** (-(t + 1 - w))


def binomial_sigma(p0: float, n: int) -> float:
    return (p0 * (1.0 - p0) / n) ** 0.5


@dataclass(frozen=True)
class TrialConfig:
    p: int
    m: int
    t: int
    w: int
    trials: int = 1000
    dist: object = "equal"
    seed: int = 0
    fresh_code_per_trial: bool = True
    n: int | None = None

    def validate(self) -> None:
        q = self.p**self.m
        if q - self.m * self.t <= 0:
            raise ParamError(f"p^m - m*t = {q - self.m * self.t}, need > 0")
        n = self.n if self.n is not None else q
        if not 0 <= self.w <= n:
            raise ParamError(f"weight {self.w} out of range for length {n}")
        if self.trials < 1:
            raise ParamError("trials must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.m


@dataclass
class TrialReport:
    config: TrialConfig
    successes: int
    observed: float
    predicted: float
    predicted_count: int
    ci_low: float
    ci_high: float
    wallclock: float

    def csv_row(self) -> str:
        c = self.config
        return (
            f"{c.p},{c.m},{c.t},{c.w},{c.trials},{self.successes},"
            f"{self.observed:.6f},{self.predicted:.6f},{self.ci_low:.6f},{self.ci_high:.6f}"
        )


CSV_HEADER = "p,m,t,w,trials,successes,observed,predicted,ci_low,ci_high"


def csv_report(reports: list[TrialReport], seed: int) -> str:
    from . import __version__

    lines = [CSV_HEADER]
    lines.extend(r.csv_row() for r in reports)
    lines.append(f"# seed={seed} version={__version__}")
    return "\n".join(lines) + "\n"


def resolve_workers(requested: int | None = None) -> int:
    """Worker count: the request (or cpu count), capped by PGOPPA_MAX_WORKERS."""
    base = requested if requested is not None else (os.cpu_count() or 1)
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        base = min(base, int(cap))
    return max(1, base)


def _single_trial(cfg: TrialConfig, index: int, code: GoppaCode | None) -> bool:
    rng = trial_stream(cfg.seed, index)
    if code is None:
        code = build_code(cfg.p, cfg.m, cfg.t, cfg.n, rng=rng)
    error = sample_error(code.n, cfg.w, cfg.dist, cfg.p, rng)
    codeword = code.random_codeword(rng)
    received = tuple((a + b) % cfg.p for a, b in zip(codeword, error.values))
    return codeword in decode(code, received).codewords()


def _shared_code(cfg: TrialConfig) -> GoppaCode | None:
    if cfg.fresh_code_per_trial:
        return None
    # dedicated stream outside the trial index range
    return build_code(cfg.p, cfg.m, cfg.t, cfg.n, rng=trial_stream(cfg.seed, cfg.trials))


def _count_chunk(args: tuple[TrialConfig, int, int, str | None]) -> int:
    cfg, lo, hi, code_text = args
    code = GoppaCode.from_text(code_text) if code_text is not None else None
    return sum(_single_trial(cfg, i, code) for i in range(lo, hi))


def run_trials(cfg: TrialConfig, workers: int | None = None) -> TrialReport:
    """Run the configured trials and report observed vs modeled success."""
    cfg.validate()
    nworkers = resolve_workers(workers)
    started = time.perf_counter()
    shared = _shared_code(cfg)
    if nworkers <= 1 or cfg.trials < 2 * nworkers:
        successes = sum(_single_trial(cfg, i, shared) for i in range(cfg.trials))
    else:
        code_text = shared.to_text() if shared is not None else None
        chunk = max(1, cfg.trials // (nworkers * 8))
        jobs = [
            (cfg, lo, min(lo + chunk, cfg.trials), code_text)
            for lo in range(0, cfg.trials, chunk)
        ]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            successes = sum(pool.map(_count_chunk, jobs))
    wallclock = time.perf_counter() - started
    predicted = success_prob_model(cfg.q, cfg.t, cfg.w)
    sigma = binomial_sigma(predicted, cfg.trials)
    return TrialReport(
        config=cfg,
        successes=successes,
        observed=successes / cfg.trials,
        predicted=predicted,
        predicted_count=round(cfg.trials * predicted),
        ci_low=max(0.0, predicted - 3.0 * sigma),
        ci_high=min(1.0, predicted + 3.0 * sigma),
        wallclock=wallclock,
    )


# Built-in experiment grid.  For each (p, m), t starts at the largest value
# with p^m - m*t > 0 and w sweeps down from t until the modeled success
# probability exceeds 0.9999.  Binary blocks are omitted from the modeled
# sweep (no failures are expected at all); the harness runs them at w = t
# and hard-asserts a perfect score instead.
TABLE_BLOCKS: list[tuple[int, int, int]] = [
    (3, 3, 8),
    (3, 3, 7),
    (3, 3, 6),
    (3, 4, 20),
    (5, 2, 12),
    (5, 3, 41),
    (7, 2, 24),
    (11, 2, 60),
]

BINARY_BLOCKS: list[tuple[int, int, int]] = [(2, 4, 3), (2, 5, 6)]

SWEEP_STOP = 0.9999


def sweep_weights(q: int, t: int, stop: float = SWEEP_STOP) -> list[int]:
    """w descending from t, including the first w whose modeled success
    exceeds the stop threshold."""
    out = []
    for w in range(t, -1, -1):
        out.append(w)
        if success_prob_model(q, t, w) > stop:
            break
    return out


def table_rows(
    blocks: list[tuple[int, int, int]] | None = None, include_binary: bool = True
) -> list[tuple[int, int, int, int]]:
    """(p, m, t, w) rows of the built-in experiment grid."""
    rows: list[tuple[int, int, int, int]] = []
    for p, m, t in blocks if blocks is not None else TABLE_BLOCKS:
        if p == 2:
            rows.append((p, m, t, t))
            continue
        for w in sweep_weights(p**m, t):
            rows.append((p, m, t, w))
    if blocks is None and include_binary:
        for p, m, t in BINARY_BLOCKS:
            rows.append((p, m, t, t))
    return rows
