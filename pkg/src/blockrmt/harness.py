"""Monte Carlo comparison of simulated block-matrix spectra with limit laws.

A run draws ``trials`` independent triples ``(A, B, W)``, assembles
``I_k (x) A + W (x) B``, pools every eigenvalue into one spectral measure and
compares it with the configured theoretical law (moments and KS distance).

Trial ``i`` draws ``A``, ``B`` and ``W`` from streams ``3 i``, ``3 i + 1`` and
``3 i + 2`` of the master seed, so results do not depend on scheduling.
"""
from __future__ import annotations

import json
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from . import limits
from .blockops import BlockMatrixSpec, assemble, complete_graph_w
from .ensembles import KINDS as ENSEMBLE_KINDS
from .ensembles import EnsembleSpec, RngSeed
from .measures import (
    AnalyticDensity,
    MarchenkoPasturLaw,
    SemicircleLaw,
    export_density_csv,
    ks_distance,
    moment,
)
from .spectra import MAX_ORDER, EigensolveError, SpectralMeasure, hermitian_eigenvalues

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FIXED_KINDS = ("zero", "identity", "complete-graph", "diag")
THEORIES = (
    "none",
    "semicircle",
    "marchenko-pastur",
    "freeconv-f",
    "wigner-gaussian",
    "wigner-wishart",
    "ss-law",
    "finite-k",
)
N_MOMENTS = 6


class ConfigError(ValueError):
    """Invalid experiment configuration; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True)
class MatrixSource:
    """A random ensemble or a fixed matrix pattern for one of ``A``, ``B``, ``W``.

    ``ratio`` sets the Wishart shape ``p = round(ratio * order)``; ``values``
    holds the diagonal of a ``diag`` source.
    """

    kind: str
    ratio: float = 1.0
    values: tuple[float, ...] | None = None

    @classmethod
    def parse(cls, raw, field_name: str) -> "MatrixSource":
        if isinstance(raw, str):
            raw = {"kind": raw}
        if not isinstance(raw, dict) or "kind" not in raw:
            raise ConfigError(field_name, "expected a kind name or an object with a 'kind' entry")
        unknown = set(raw) - {"kind", "ratio", "values"}
        if unknown:
            raise ConfigError(field_name, f"unknown keys {sorted(unknown)}")
        kind = raw["kind"]
        if kind not in ENSEMBLE_KINDS and kind not in FIXED_KINDS:
            raise ConfigError(f"{field_name}.kind", f"unknown kind {kind!r}")
        ratio = raw.get("ratio", 1.0)
        if not isinstance(ratio, (int, float)) or not ratio > 0:
            raise ConfigError(f"{field_name}.ratio", "must be a positive number")
        values = raw.get("values")
        if kind == "diag":
            if not isinstance(values, list) or not values or not all(isinstance(v, (int, float)) for v in values):
                raise ConfigError(f"{field_name}.values", "diag sources need a nonempty list of numbers")
            values = tuple(float(v) for v in values)
        elif values is not None:
            raise ConfigError(f"{field_name}.values", f"only diag sources take values (kind is {kind!r})")
        return cls(kind, float(ratio), values)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind}
        if self.kind == "wishart":
            out["ratio"] = self.ratio
        if self.values is not None:
            out["values"] = list(self.values)
        return out

    @property
    def is_random(self) -> bool:
        return self.kind in ENSEMBLE_KINDS

    def check_order(self, order: int, field_name: str) -> None:
        if self.kind == "diag" and len(self.values) != order:
            raise ConfigError(f"{field_name}.values", f"expected {order} entries, got {len(self.values)}")

    def draw(self, order: int, seed: RngSeed) -> np.ndarray:
        if self.kind in ENSEMBLE_KINDS:
            p = max(1, int(round(self.ratio * order))) if self.kind == "wishart" else None
            return EnsembleSpec(self.kind, order, p).sample(seed)
        if self.kind == "zero":
            return np.zeros((order, order))
        if self.kind == "identity":
            return np.eye(order)
        if self.kind == "complete-graph":
            return complete_graph_w(order)[0]
        return np.diag(np.asarray(self.values, dtype=float))


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    k: int
    a: MatrixSource
    b: MatrixSource
    w: MatrixSource
    trials: int = 1
    seed: int = 0
    theory: dict = field(default_factory=lambda: {"name": "none"})
    bins: int = 100
    ks_max: float | None = None
    moment_rel: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("n", "k", "trials", "bins", "seed"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ConfigError(name, f"must be an integer, got {v!r}")
        if self.n < 1 or self.k < 1:
            raise ConfigError("n" if self.n < 1 else "k", "must be at least 1")
        if self.trials < 1:
            raise ConfigError("trials", "must be at least 1")
        if self.bins < 10:
            raise ConfigError("bins", "must be at least 10")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed", "must be a 64-bit unsigned integer")
        if self.n * self.k > MAX_ORDER:
            raise ConfigError("n", f"n*k = {self.n * self.k} exceeds the eigensolve guard {MAX_ORDER}")
        if self.ks_max is not None and not self.ks_max > 0:
            raise ConfigError("ks_max", "must be positive")
        for key, tol in self.moment_rel.items():
            if int(key) not in range(1, N_MOMENTS + 1):
                raise ConfigError(f"moment_rel.{key}", f"moment order must lie in 1..{N_MOMENTS}")
            if not tol > 0:
                raise ConfigError(f"moment_rel.{key}", "must be positive")
        self.a.check_order(self.n, "a")
        self.b.check_order(self.n, "b")
        self.w.check_order(self.k, "w")
        name = self.theory.get("name")
        if name not in THEORIES:
            raise ConfigError("theory.name", f"unknown theory {name!r}; expected one of {THEORIES}")

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        if not isinstance(raw, dict):
            raise ConfigError("<root>", "expected a JSON object")
        allowed = {"n", "k", "a", "b", "w", "trials", "seed", "theory", "bins", "tolerances"}
        unknown = set(raw) - allowed
        if unknown:
            raise ConfigError("<root>", f"unknown keys {sorted(unknown)}")
        for req in ("n", "k", "a", "b", "w"):
            if req not in raw:
                raise ConfigError(req, "missing required entry")
        theory = raw.get("theory", {"name": "none"})
        if isinstance(theory, str):
            theory = {"name": theory}
        if not isinstance(theory, dict) or "name" not in theory:
            raise ConfigError("theory", "expected a theory name or an object with a 'name' entry")
        tol = raw.get("tolerances", {})
        if not isinstance(tol, dict):
            raise ConfigError("tolerances", "expected an object")
        unknown = set(tol) - {"ks_max", "moment_rel"}
        if unknown:
            raise ConfigError("tolerances", f"unknown keys {sorted(unknown)}")
        moment_rel = tol.get("moment_rel", {})
        if not isinstance(moment_rel, dict):
            raise ConfigError("tolerances.moment_rel", "expected an object mapping moment order to tolerance")
        try:
            moment_rel = {str(int(key)): float(v) for key, v in moment_rel.items()}
        except (TypeError, ValueError) as exc:
            raise ConfigError("tolerances.moment_rel", str(exc)) from None
        return cls(
            n=raw["n"],
            k=raw["k"],
            a=MatrixSource.parse(raw["a"], "a"),
            b=MatrixSource.parse(raw["b"], "b"),
            w=MatrixSource.parse(raw["w"], "w"),
            trials=raw.get("trials", 1),
            seed=raw.get("seed", 0),
            theory=dict(theory),
            bins=raw.get("bins", 100),
            ks_max=tol.get("ks_max"),
            moment_rel=moment_rel,
        )

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
        return cls.from_dict(raw)

    def to_dict(self) -> dict:
        tol: dict[str, Any] = {"moment_rel": dict(sorted(self.moment_rel.items()))}
        if self.ks_max is not None:
            tol["ks_max"] = self.ks_max
        return {
            "n": self.n,
            "k": self.k,
            "a": self.a.to_dict(),
            "b": self.b.to_dict(),
            "w": self.w.to_dict(),
            "trials": self.trials,
            "seed": self.seed,
            "theory": self.theory,
            "bins": self.bins,
            "tolerances": tol,
        }


@dataclass
class ComparisonReport:
    pooled_count: int
    empirical_moments: list[float]
    theory_moments: list[float] | None
    ks: float | None
    passes: dict[str, bool]
    passed: bool
    failed_trials: list[int]
    config: dict
    seed: int
    theory: dict
    runtime_seconds: float | None = None
    schema_version: int = SCHEMA_VERSION

    def to_dict(self, include_runtime: bool = False) -> dict:
        d = asdict(self)
        if not include_runtime:
            d.pop("runtime_seconds")
        return d

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ComparisonReport":
        d = json.loads(text)
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema_version')!r}")
        return cls(**d)


# ---------------------------------------------------------------------------
# theory resolution
# ---------------------------------------------------------------------------


def _psi_family_for(config: ExperimentConfig) -> limits.PsiFamily:
    if config.a.kind not in ("gue", "wigner-gaussian", "wigner-rademacher"):
        raise ConfigError("a.kind", "this theory needs a Wigner A block")
    if config.b.kind in ("gue", "wigner-gaussian"):
        return limits.SEMICIRCLE_FAMILY
    if config.b.kind == "wishart":
        if config.b.ratio != 1.0:
            raise ConfigError("b.ratio", "the Wishart limit family is only known for ratio 1")
        return limits.FREECONV_FAMILY
    raise ConfigError("b.kind", f"no known limit family for B of kind {config.b.kind!r}")


def build_theory(config: ExperimentConfig) -> AnalyticDensity | None:
    """Resolve the configured theory name to a law (``None`` for ``"none"``)."""
    th = config.theory
    name = th["name"]
    if name == "none":
        return None
    if name == "semicircle":
        return SemicircleLaw(float(th.get("center", 0.0)), float(th.get("variance", 1.0))).to_density()
    if name == "marchenko-pastur":
        return MarchenkoPasturLaw(float(th.get("mean", 1.0))).to_density()
    if name == "freeconv-f":
        t = float(th.get("t", 1.0))
        return limits.FREECONV_FAMILY.law(t)
    if name == "wigner-gaussian":
        return limits.wigner_gaussian_law()
    if name == "wigner-wishart":
        if config.b.kind == "wishart" and config.b.ratio != 1.0:
            raise ConfigError("b.ratio", "the Wishart limit family is only known for ratio 1")
        return limits.wigner_wishart_law(int(th.get("order", limits.DEFAULT_OMEGA_ORDER)))
    if name == "ss-law":
        alphas = th.get("alphas", list(config.a.values) if config.a.kind == "diag" else None)
        betas = th.get("betas", list(config.b.values) if config.b.kind == "diag" else None)
        if alphas is None or betas is None:
            raise ConfigError("theory", "ss-law needs alphas/betas or diag A and B sources")
        return limits.ss_law_measure(alphas, betas)
    if name == "finite-k":
        if config.w.kind != "complete-graph":
            raise ConfigError("w.kind", "finite-k theory expects the complete-graph coupling")
        return limits.finite_k_limit(_psi_family_for(config), config.k)
    raise ConfigError("theory.name", f"unknown theory {name!r}")


def theory_moments(law: AnalyticDensity, kmax: int = N_MOMENTS) -> list[float]:
    return [moment(law, j) for j in range(1, kmax + 1)]


# ---------------------------------------------------------------------------
# running
# ---------------------------------------------------------------------------


def trial_matrix(config: ExperimentConfig, trial: int) -> np.ndarray:
    a = config.a.draw(config.n, RngSeed(config.seed, 3 * trial))
    b = config.b.draw(config.n, RngSeed(config.seed, 3 * trial + 1))
    w = config.w.draw(config.k, RngSeed(config.seed, 3 * trial + 2))
    return assemble(BlockMatrixSpec(w, a, b))


def _run_trial(config: ExperimentConfig, trial: int) -> np.ndarray | None:
    try:
        return hermitian_eigenvalues(trial_matrix(config, trial))
    except EigensolveError as exc:
        log.warning("trial %d: eigensolve failed: %s", trial, exc)
        return None


def simulate(config: ExperimentConfig, workers: int = 1) -> tuple[SpectralMeasure, list[int]]:
    """Pooled spectrum over all trials plus the indices of failed trials."""
    if workers <= 1:
        results = [_run_trial(config, i) for i in range(config.trials)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda i: _run_trial(config, i), range(config.trials)))
    failed = [i for i, r in enumerate(results) if r is None]
    pooled = SpectralMeasure.pooled([r for r in results if r is not None])
    return pooled, failed


def compare(
    pooled: SpectralMeasure,
    failed: list[int],
    config: ExperimentConfig,
    law: AnalyticDensity | None,
) -> ComparisonReport:
    emp = pooled.moments(N_MOMENTS) if pooled.order else [math.nan] * N_MOMENTS
    passes: dict[str, bool] = {"trials": not failed}
    th_moments = ks = None
    if law is not None and pooled.order:
        th_moments = theory_moments(law)
        ks = ks_distance(pooled, law)
        if config.ks_max is not None:
            passes["ks"] = ks <= config.ks_max
        for key, tol in sorted(config.moment_rel.items()):
            j = int(key)
            target = th_moments[j - 1]
            passes[f"m{j}"] = abs(emp[j - 1] - target) <= tol * max(abs(target), 1.0)
    return ComparisonReport(
        pooled_count=pooled.order,
        empirical_moments=emp,
        theory_moments=th_moments,
        ks=ks,
        passes=passes,
        passed=all(passes.values()),
        failed_trials=failed,
        config=config.to_dict(),
        seed=config.seed,
        theory=dict(law.params, kind=law.kind) if law is not None else {"kind": "none"},
    )


def run_experiment(config: ExperimentConfig, workers: int = 1) -> ComparisonReport:
    """Simulate, pool and compare; see the module docstring for the seed schedule."""
    start = time.perf_counter()
    law = build_theory(config)
    pooled, failed = simulate(config, workers)
    report = compare(pooled, failed, config, law)
    report.runtime_seconds = time.perf_counter() - start
    return report


def write_outputs(out_dir, report: ComparisonReport, pooled: SpectralMeasure, config: ExperimentConfig,
                  law: AnalyticDensity | None, include_runtime: bool = False) -> dict[str, Path]:
    """Report JSON, eigenvalue and histogram CSVs, and the theory density on the histogram range."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "report": out / "report.json",
        "eigenvalues": out / "eigenvalues.csv",
        "histogram": out / "histogram.csv",
    }
    paths["report"].write_text(report.to_json(include_runtime))
    pooled.to_csv(paths["eigenvalues"])
    if pooled.order:
        lo, hi = float(pooled.eigenvalues[0]), float(pooled.eigenvalues[-1])
        pooled.histogram_to_csv(paths["histogram"], config.bins, (lo, hi))
        if law is not None:
            paths["theory"] = out / "theory_density.csv"
            export_density_csv(paths["theory"], law, np.linspace(lo, hi, 4 * config.bins + 1))
    return paths
