"""Monte Carlo threshold scans.

A scan sweeps ``n`` over ``n_values`` and runs ``trials`` seeded cells per
``n``: generate a graph with target average degree ``c · (log2 n)^alpha``,
search for a rainbow TK_t, verify, and append one CSV row.  Rows are flushed
as they complete, and rerunning a scan skips cells already in the CSV.
"""

from __future__ import annotations

import csv
import json
import math
import multiprocessing
import os
import signal
import time
import warnings
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

import numpy as np

from .certificates import dumps as cert_dumps
from .errors import RainbowError, SearchFailure
from .generators import complete, hypercube, jung_union, random_colored
from .search import SearchParams, build_tkt
from .verify import verify_cycle, verify_subdivision

__all__ = [
    "ExperimentConfig",
    "ResultRow",
    "CSV_HEADER",
    "parse_config",
    "load_config",
    "cell_seed",
    "run_threshold_scan",
    "read_rows",
    "validate_csv",
    "summarize",
]

CSV_HEADER = (
    "n",
    "target_d",
    "realized_d",
    "t",
    "seed",
    "success",
    "path_len_max",
    "path_len_mean",
    "wall_time_ms",
    "rounds_used",
)

FAMILIES = ("random", "hypercube", "jung", "complete")


@dataclass
class ExperimentConfig:
    family: str = "random"
    n_values: list[int] = field(default_factory=lambda: [256])
    alpha: float = 2.0
    c: float = 1.0
    t: int = 3
    trials: int = 1
    seed: int = 0
    params: SearchParams = field(default_factory=SearchParams)
    output: str = "scan.csv"
    timeout: float = 60.0
    workers: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.t < 2:
            raise ValueError("t must be >= 2")
        if not self.n_values:
            raise ValueError("n_values is empty")
        if list(self.n_values) != sorted(self.n_values):
            raise ValueError("n_values must be sorted ascending")
        if self.timeout <= 0 or self.workers < 1:
            raise ValueError("timeout and workers must be positive")

    def target_degree(self, n: int) -> float:
        return self.c * math.log2(n) ** self.alpha


_PARAM_KEYS = {
    "p_c": ("p_c", float),
    "pc": ("p_c", float),
    "lambda": ("lam", float),
    "rounds": ("rounds", int),
    "retries": ("retries", int),
    "max_len": ("max_len", int),
    "extract": ("extract", lambda s: s.strip().lower() in ("1", "true", "yes", "on")),
}

_CONFIG_KEYS = {
    "family": ("family", str),
    "n_values": ("n_values", lambda s: [int(x) for x in s.replace(",", " ").split()]),
    "alpha": ("alpha", float),
    "degree_exponent": ("alpha", float),
    "c": ("c", float),
    "degree_constant": ("c", float),
    "t": ("t", int),
    "trials": ("trials", int),
    "seed": ("seed", int),
    "output": ("output", str),
    "timeout": ("timeout", float),
    "workers": ("workers", int),
}


def parse_config(text: str) -> ExperimentConfig:
    """Parse flat ``key = value`` lines; ``#`` starts a comment."""
    top, params = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key in _CONFIG_KEYS:
                name, conv = _CONFIG_KEYS[key]
                top[name] = conv(value)
            elif key in _PARAM_KEYS:
                name, conv = _PARAM_KEYS[key]
                params[name] = conv(value)
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ValueError(f"config line {lineno}: {exc}") from None
    seed = top.get("seed", 0)
    return ExperimentConfig(params=SearchParams(seed=seed, **params), **top)


def load_config(path) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def cell_seed(seed: int, n: int, trial: int) -> int:
    """63-bit seed derived from (config seed, n, trial); independent of execution order."""
    state = np.random.SeedSequence([seed, n, trial]).generate_state(1, dtype=np.uint64)[0]
    return int(state) & (2**63 - 1)


@dataclass
class ResultRow:
    n: int
    target_d: float
    realized_d: float
    t: int
    seed: int
    success: bool
    path_len_max: int = 0
    path_len_mean: float = 0.0
    wall_time_ms: float = 0.0
    rounds_used: int = 0

    def csv_values(self) -> list[str]:
        return [
            str(self.n),
            f"{self.target_d:.6f}",
            f"{self.realized_d:.6f}",
            str(self.t),
            str(self.seed),
            "true" if self.success else "false",
            str(self.path_len_max),
            f"{self.path_len_mean:.6f}",
            f"{self.wall_time_ms:.3f}",
            str(self.rounds_used),
        ]


class CellTimeout(Exception):
    pass


@contextmanager
def _alarm(seconds: float):
    if not hasattr(signal, "setitimer"):
        yield
        return

    def fire(signum, frame):
        raise CellTimeout()

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _generate(config: ExperimentConfig, n: int, seed: int):
    target = config.target_degree(n)
    if config.family == "random":
        return random_colored(n, target, seed), target
    if config.family == "hypercube":
        d = int(round(math.log2(n)))
        if 1 << d != n:
            raise ValueError(f"hypercube scan needs powers of two, got n = {n}")
        return hypercube(d), float(d)
    if config.family == "jung":
        side = max(1, int(round(target)))
        return jung_union(max(1, n // (2 * side)), side), float(side)
    return complete(n), float(n - 1)


def _run_cell(job) -> tuple[ResultRow, str | None, str]:
    config, n, seed = job
    g, target = _generate(config, n, seed)
    realized = 2.0 * g.m / g.n if g.n else 0.0
    row = ResultRow(n, target, realized, config.t, seed, False)
    start = time.perf_counter()
    status, cert_text = "fail", None
    try:
        with _alarm(config.timeout), warnings.catch_warnings():
            warnings.simplefilter("ignore")
            cert = build_tkt(g, config.t, replace(config.params, seed=seed))
    except CellTimeout:
        status = "timeout"
    except (SearchFailure, RainbowError):
        status = "fail"
    else:
        if config.t == 3:
            shown = cert.to_cycle()
            ok = verify_cycle(g, shown).ok and verify_subdivision(g, cert).ok
        else:
            shown = cert
            ok = verify_subdivision(g, cert).ok
        if ok:
            lengths = cert.path_lengths()
            row.success = True
            row.path_len_max = max(lengths)
            row.path_len_mean = sum(lengths) / len(lengths)
            row.rounds_used = cert.rounds_used
            status = "success"
            cert_text = cert_dumps(shown)
        else:
            status = "unverified"
    row.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return row, cert_text, status


def read_rows(path) -> list[dict]:
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        return []
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def validate_csv(path) -> list[str]:
    """Schema problems of a scan CSV (empty list when valid)."""
    problems = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if tuple(header or ()) != CSV_HEADER:
            return [f"bad header {header}"]
        ints = {"n", "t", "seed", "path_len_max", "rounds_used"}
        floats = {"target_d", "realized_d", "path_len_mean", "wall_time_ms"}
        for k, rec in enumerate(reader, start=2):
            if len(rec) != len(CSV_HEADER):
                problems.append(f"row {k}: {len(rec)} fields")
                continue
            for name, value in zip(CSV_HEADER, rec):
                try:
                    if name in ints:
                        int(value)
                    elif name in floats:
                        float(value)
                    elif value not in ("true", "false"):
                        raise ValueError
                except ValueError:
                    problems.append(f"row {k}: bad {name} {value!r}")
            if float(rec[2]) < 0:
                problems.append(f"row {k}: negative realized_d")
    return problems


def cert_path(output, n: int, seed: int) -> str:
    return f"{output}.{n}.{seed}.cert.json"


def run_threshold_scan(config: ExperimentConfig) -> list[ResultRow]:
    """Run every missing cell of the scan; returns the rows written by this call."""
    out = Path(config.output)
    done = {(int(r["n"]), int(r["seed"])) for r in read_rows(out)}
    jobs = []
    for n in config.n_values:
        for trial in range(config.trials):
            seed = cell_seed(config.seed, n, trial)
            if (n, seed) not in done:
                jobs.append((config, n, seed))

    fresh = not out.exists() or out.stat().st_size == 0
    out.parent.mkdir(parents=True, exist_ok=True)
    written = []
    with open(out, "a", newline="", encoding="utf-8") as fh, open(f"{out}.jsonl", "a", encoding="utf-8") as jl:
        writer = csv.writer(fh)
        if fresh:
            writer.writerow(CSV_HEADER)
            fh.flush()
        if config.workers > 1 and len(jobs) > 1:
            pool = multiprocessing.get_context("fork").Pool(config.workers)
            results = pool.imap(_run_cell, jobs)
        else:
            pool = None
            results = map(_run_cell, jobs)
        try:
            for row, cert_text, status in results:
                if cert_text is not None:
                    with open(cert_path(out, row.n, row.seed), "w", encoding="utf-8") as cf:
                        cf.write(cert_text)
                writer.writerow(row.csv_values())
                fh.flush()
                jl.write(json.dumps({**asdict(row), "status": status}) + "\n")
                jl.flush()
                written.append(row)
        finally:
            if pool is not None:
                pool.close()
                pool.join()
    return written


def summarize(rows) -> dict[int, float]:
    """Success fraction per n from ResultRow objects or CSV dicts."""
    tally: dict[int, list[int]] = {}
    for r in rows:
        n = int(r.n if isinstance(r, ResultRow) else r["n"])
        ok = r.success if isinstance(r, ResultRow) else r["success"] == "true"
        tally.setdefault(n, [0, 0])
        tally[n][0] += int(ok)
        tally[n][1] += 1
    return {n: s / k for n, (s, k) in sorted(tally.items())}

