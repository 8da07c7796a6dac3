"""Shared fixtures: the pinned seed, cached Monte Carlo runs and the criterion log."""
from __future__ import annotations

import functools

import pytest

from blockrmt.harness import ExperimentConfig, run_experiment

SEED = 20240607

# desk-scale experiment configurations, one per Monte Carlo criterion
CONFIGS = {
    "wigner-gaussian": dict(n=40, k=40, a="gue", b="gue", w="wigner-rademacher", trials=20,
                            seed=SEED, theory="wigner-gaussian"),
    "wigner-wishart": dict(n=30, k=30, a="gue", b="wishart", w="wigner-rademacher", trials=20,
                           seed=SEED, theory="wigner-wishart"),
    "ss-law": dict(n=4, k=400, a={"kind": "diag", "values": [0, 1, -1, 2]},
                   b={"kind": "diag", "values": [1, 1, 2, 1]}, w="wigner-rademacher", trials=1,
                   seed=SEED, theory="ss-law"),
    "finite-k": dict(n=400, k=3, a="gue", b="gue", w="complete-graph", trials=1, seed=SEED,
                     theory="finite-k"),
    "gue-semicircle": dict(n=1000, k=1, a="gue", b="zero", w="zero", trials=1, seed=SEED,
                           theory="semicircle"),
    "wishart-mp": dict(n=1000, k=1, a="zero", b="wishart", w="identity", trials=1, seed=SEED,
                       theory="marchenko-pastur"),
    "wigner-gaussian-small": dict(n=10, k=10, a="gue", b="gue", w="wigner-rademacher", trials=20,
                                  seed=SEED, theory="wigner-gaussian"),
}


@functools.lru_cache(maxsize=None)
def cached_report(name: str, workers: int = 1):
    return run_experiment(ExperimentConfig.from_dict(CONFIGS[name]), workers=workers)


_CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, detail: str) -> bool:
        _CRITERIA[number] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        passed, detail = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}")
