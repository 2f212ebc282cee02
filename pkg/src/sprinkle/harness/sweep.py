"""Declarative Monte Carlo sweeps: generate a base graph, add random
edges, check a property, repeat over an m-grid.

Every trial's randomness is derived from the master seed and the
(grid_index, trial_index) pair, so a sweep is a pure function of its
config: reruns reproduce the CSV byte for byte, regardless of worker
count or completion order.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from ..augment import augment_bernoulli, augment_uniform
from ..checkers import (
    contains_kr,
    diameter_at_most,
    is_connected,
    is_k_connected,
)
from ..core import Graph, density_param
from ..generators import (
    blocked_gnp,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_cliques,
    empty_graph,
    gnm,
    mader_tightness_graph,
    path_graph,
    two_cliques,
)
from ..seeds import SeedSpec

Z95 = 1.959963984540054


# ---------------------------------------------------------------------------
# registries
# ---------------------------------------------------------------------------

def _gen_complete_multipartite(params, seed):
    return complete_multipartite(list(params["parts"]))


def _gen_two_cliques(params, seed):
    return two_cliques(int(params["n"]))


def _gen_disjoint_cliques(params, seed):
    return disjoint_cliques(int(params["n"]), int(params["clique_size"]))


def _gen_blocked_gnp(params, seed):
    return blocked_gnp(int(params["n"]), density_param(params["d"]), seed)


def _gen_gnm(params, seed):
    return gnm(int(params["n"]), int(params["M"]), seed)


def _gen_mader_tightness(params, seed):
    return mader_tightness_graph(int(params["n"]), int(params["k"]), seed)


GENERATORS: dict[str, Callable] = {
    "complete_multipartite": _gen_complete_multipartite,
    "two_cliques": _gen_two_cliques,
    "disjoint_cliques": _gen_disjoint_cliques,
    "blocked_gnp": _gen_blocked_gnp,
    "gnm": _gen_gnm,
    "mader_tightness": _gen_mader_tightness,
    "complete": lambda p, s: complete_graph(int(p["n"])),
    "empty": lambda p, s: empty_graph(int(p["n"])),
    "path": lambda p, s: path_graph(int(p["n"])),
    "cycle": lambda p, s: cycle_graph(int(p["n"])),
}

def _diameter_ge(g: Graph, p: dict) -> bool:
    t = int(p["t"])
    if t <= 0:
        return True
    return not diameter_at_most(g, t - 1)


# name -> (predicate(graph, params) -> bool, +1 increasing / -1 decreasing)
PROPERTIES: dict[str, tuple[Callable, int]] = {
    "contains_kr": (lambda g, p: bool(contains_kr(g, int(p["r"]))), +1),
    "diameter_le": (lambda g, p: bool(diameter_at_most(g, int(p["t"]))), +1),
    "diameter_ge": (_diameter_ge, -1),
    "k_connected": (lambda g, p: bool(is_k_connected(g, int(p["k"]))), +1),
    "connected": (lambda g, p: is_connected(g), +1),
}


# ---------------------------------------------------------------------------
# config and result types
# ---------------------------------------------------------------------------

_CONFIG_KEYS = {
    "generator",
    "model",
    "grid",
    "trials",
    "property",
    "master_seed",
    "output_path",
    "trial_timeout_s",
    "workers",
}


@dataclass(frozen=True)
class SweepConfig:
    """One declarative experiment: base-graph family, augmentation
    model, grid of m (or p) values, trials per grid point, property to
    check, and the master seed everything derives from."""

    generator: dict
    model: str
    grid: tuple
    trials: int
    property: dict
    master_seed: SeedSpec
    output_path: Optional[str] = None
    trial_timeout_s: Optional[float] = None
    workers: int = 1

    def __post_init__(self):
        if self.model not in ("uniform", "bernoulli"):
            raise ValueError(f"unknown model {self.model!r}")
        grid = tuple(self.grid)
        if len(grid) < 1:
            raise ValueError("grid must be nonempty")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError(f"grid must be strictly increasing, got {grid}")
        if self.model == "uniform" and any(
            (not isinstance(v, int)) or v < 0 for v in grid
        ):
            raise ValueError("uniform-model grid must hold nonnegative integers")
        if self.model == "bernoulli" and any(not (0 <= v <= 1) for v in grid):
            raise ValueError("bernoulli-model grid values must lie in [0, 1]")
        object.__setattr__(self, "grid", grid)
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.generator.get("name") not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator.get('name')!r}")
        if self.property.get("name") not in PROPERTIES:
            raise ValueError(f"unknown property {self.property.get('name')!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def to_json_dict(self) -> dict:
        def enc(value):
            if isinstance(value, Fraction):
                return str(value)
            if isinstance(value, dict):
                return {k: enc(v) for k, v in value.items()}
            if isinstance(value, (list, tuple)):
                return [enc(v) for v in value]
            return value

        return {
            "generator": enc(self.generator),
            "model": self.model,
            "grid": list(self.grid),
            "trials": self.trials,
            "property": enc(self.property),
            "master_seed": {"seed": self.master_seed.seed,
                            "stream_id": self.master_seed.stream_id},
            "output_path": self.output_path,
            "trial_timeout_s": self.trial_timeout_s,
            "workers": self.workers,
        }

    @staticmethod
    def from_json_dict(doc: dict) -> "SweepConfig":
        unknown = set(doc) - _CONFIG_KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        missing = {"generator", "model", "grid", "trials", "property",
                   "master_seed"} - set(doc)
        if missing:
            raise ValueError(f"missing config keys: {sorted(missing)}")
        seed_doc = doc["master_seed"]
        if isinstance(seed_doc, dict):
            seed = SeedSpec(int(seed_doc["seed"]), int(seed_doc.get("stream_id", 0)))
        else:
            seed = SeedSpec(int(seed_doc))
        return SweepConfig(
            generator=doc["generator"],
            model=doc["model"],
            grid=tuple(doc["grid"]),
            trials=int(doc["trials"]),
            property=doc["property"],
            master_seed=seed,
            output_path=doc.get("output_path"),
            trial_timeout_s=doc.get("trial_timeout_s"),
            workers=int(doc.get("workers", 1)),
        )

    def config_hash(self) -> str:
        doc = self.to_json_dict()
        doc.pop("output_path")  # where results land does not affect them
        doc.pop("workers")
        canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()


@dataclass(frozen=True)
class GridPointResult:
    value: object  # m (int) or p (float)
    trials: int  # trials counted (indeterminate excluded)
    successes: int
    indeterminate: int
    infeasible: int
    p_hat: float
    ci_lo: float
    ci_hi: float


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    points: tuple[GridPointResult, ...]
    direction: int  # +1 if the property is monotone increasing in m
    wall_clock_s: float
    monotonicity_warnings: tuple[int, ...] = field(default=())

    def to_csv(self) -> str:
        lines = ["m,trials,successes,p_hat,ci_lo,ci_hi"]
        for pt in self.points:
            lines.append(
                f"{pt.value},{pt.trials},{pt.successes},"
                f"{pt.p_hat!r},{pt.ci_lo!r},{pt.ci_hi!r}"
            )
        return "\n".join(lines) + "\n"

    def sidecar_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "config_hash": self.config.config_hash(),
            "direction": self.direction,
            "points": [asdict(pt) for pt in self.points],
            "monotonicity_warnings": list(self.monotonicity_warnings),
            # informational only; everything else is reproducible
            "wall_clock_s": self.wall_clock_s,
        }

    def write(self, output_path: str | Path) -> None:
        path = Path(output_path)
        path.write_text(self.to_csv(), encoding="ascii", newline="\n")
        sidecar = path.with_name(path.name + ".meta.json")
        sidecar.write_text(
            json.dumps(self.sidecar_dict(), indent=2, sort_keys=True) + "\n",
            encoding="ascii",
        )


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Two-sided Wilson score interval for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (z / denom) * (phat * (1 - phat) / trials + z * z / (4 * trials * trials)) ** 0.5
    lo = 0.0 if successes == 0 else max(0.0, center - half)
    hi = 1.0 if successes == trials else min(1.0, center + half)
    return lo, hi


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

def _run_trial(config: SweepConfig, gen, prop, grid_index: int,
               trial_index: int) -> tuple[str, bool]:
    """Returns (status, success); status in ok / infeasible / indeterminate."""
    value = config.grid[grid_index]
    trial_seed = config.master_seed.derive(grid_index, trial_index)
    start = time.perf_counter()
    base = gen(config.generator.get("params", {}), trial_seed.stream(0))
    if config.model == "uniform":
        try:
            aug = augment_uniform(base, int(value), trial_seed.stream(1))
        except ValueError:
            return "infeasible", False
    else:
        aug = augment_bernoulli(base, float(value), trial_seed.stream(1))
    ok = prop(aug.graph, config.property.get("params", {}))
    if (
        config.trial_timeout_s is not None
        and time.perf_counter() - start > config.trial_timeout_s
    ):
        return "indeterminate", False
    return "ok", bool(ok)


def run_sweep(config: SweepConfig) -> SweepResult:
    """Execute the sweep.  Trials are independent jobs; results are
    aggregated in (grid_index, trial_index) order no matter how the
    worker pool schedules them."""
    gen = GENERATORS[config.generator["name"]]
    prop, direction = PROPERTIES[config.property["name"]]
    started = time.perf_counter()

    jobs = [
        (gi, ti) for gi in range(len(config.grid)) for ti in range(config.trials)
    ]
    outcomes: dict[tuple[int, int], tuple[str, bool]] = {}
    if config.workers == 1:
        for gi, ti in jobs:
            outcomes[(gi, ti)] = _run_trial(config, gen, prop, gi, ti)
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            futures = {
                (gi, ti): pool.submit(_run_trial, config, gen, prop, gi, ti)
                for gi, ti in jobs
            }
            for key, fut in futures.items():
                outcomes[key] = fut.result()

    points = []
    for gi, value in enumerate(config.grid):
        successes = indeterminate = infeasible = 0
        for ti in range(config.trials):
            status, ok = outcomes[(gi, ti)]
            if status == "indeterminate":
                indeterminate += 1
                continue
            if status == "infeasible":
                infeasible += 1
            successes += ok
        counted = config.trials - indeterminate
        p_hat = successes / counted if counted else 0.0
        lo, hi = wilson_interval(successes, counted)
        points.append(
            GridPointResult(
                value=value,
                trials=counted,
                successes=successes,
                indeterminate=indeterminate,
                infeasible=infeasible,
                p_hat=p_hat,
                ci_lo=lo,
                ci_hi=hi,
            )
        )

    warnings = []
    for i in range(len(points) - 1):
        a, b = points[i], points[i + 1]
        slack = (a.ci_hi - a.ci_lo) + (b.ci_hi - b.ci_lo)
        drop = (a.p_hat - b.p_hat) * direction
        if drop > slack:
            warnings.append(i)

    result = SweepResult(
        config=config,
        points=tuple(points),
        direction=direction,
        wall_clock_s=time.perf_counter() - started,
        monotonicity_warnings=tuple(warnings),
    )
    if config.output_path:
        result.write(config.output_path)
    return result
