"""Command-line front end.

Subcommands: ``sample``, ``predict``, ``compare``, ``moments``, ``support``.
Exit codes: 0 success, 1 tolerance failure, 2 usage or configuration error,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import freeconv, limits
from .ensembles import KINDS as ENSEMBLE_KINDS
from .harness import (
    FIXED_KINDS,
    ConfigError,
    ExperimentConfig,
    build_theory,
    compare,
    simulate,
    write_outputs,
)
from .measures import (
    AnalyticDensity,
    MarchenkoPasturLaw,
    SemicircleLaw,
    moment,
    write_csv,
)
from .spectra import EigensolveError, SpectralMeasure

EXIT_OK, EXIT_TOLERANCE, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3

MODELS = ("wigner-gaussian", "wigner-wishart", "freeconv-f", "ss-law", "finite-k", "semicircle", "marchenko-pastur")
NUMERICAL_ERRORS = (
    freeconv.SupportError,
    freeconv.RootSelectionError,
    freeconv.InversionError,
    EigensolveError,
    ArithmeticError,
)


class UsageError(Exception):
    pass


def parse_grid(text: str) -> np.ndarray:
    """``start:stop:step`` -> ``start + i*step`` for every point below ``stop - step/2``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must look like start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"grid entries must be numbers, got {text!r}") from None
    if not step > 0 or not stop > start:
        raise UsageError("grid needs stop > start and step > 0")
    count = math.ceil((stop - start) / step - 0.5)
    return start + step * np.arange(max(count, 1))


def _floats(text: str | None, name: str) -> list[float] | None:
    if text is None:
        return None
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--{name} must be a comma-separated list of numbers") from None


def _echo(args: argparse.Namespace) -> None:
    resolved = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    print("resolved config: " + json.dumps(resolved, sort_keys=True, default=str), file=sys.stderr)


def _model_law(args) -> AnalyticDensity:
    m = args.model
    if m == "semicircle":
        return SemicircleLaw(args.center, args.variance).to_density()
    if m == "marchenko-pastur":
        return MarchenkoPasturLaw(args.mean).to_density()
    if m == "freeconv-f":
        if args.t is None:
            raise UsageError("--model freeconv-f needs --t")
        return limits.FREECONV_FAMILY.law(args.t)
    if m == "wigner-gaussian":
        return limits.wigner_gaussian_law()
    if m == "wigner-wishart":
        return limits.wigner_wishart_law(args.order)
    if m == "ss-law":
        alphas, betas = _floats(args.alphas, "alphas"), _floats(args.betas, "betas")
        if alphas is None or betas is None:
            raise UsageError("--model ss-law needs --alphas and --betas")
        try:
            return limits.ss_law_measure(alphas, betas)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if m == "finite-k":
        if args.k is None:
            raise UsageError("--model finite-k needs --k")
        family = limits.SEMICIRCLE_FAMILY if args.psi == "semicircle" else limits.FREECONV_FAMILY
        try:
            return limits.finite_k_limit(family, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown model {m!r}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_sample(args) -> int:
    raw = {
        "n": args.n, "k": args.k, "trials": args.trials, "seed": args.seed, "bins": args.bins,
        "a": {"kind": args.a}, "b": {"kind": args.b}, "w": {"kind": args.w},
    }
    for name in ("a", "b", "w"):
        if getattr(args, name) == "wishart":
            raw[name]["ratio"] = args.wishart_ratio
        values = _floats(getattr(args, f"{name}_values"), f"{name}-values")
        if values is not None:
            raw[name]["values"] = values
    config = ExperimentConfig.from_dict(raw)
    pooled, failed = simulate(config, args.workers)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    pooled.to_csv(out / "eigenvalues.csv")
    if pooled.order:
        pooled.histogram_to_csv(
            out / "histogram.csv", config.bins, (float(pooled.eigenvalues[0]), float(pooled.eigenvalues[-1]))
        )
    print(f"wrote {pooled.order} eigenvalues to {out / 'eigenvalues.csv'}")
    if failed:
        print(f"eigensolve failed for trials {failed}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_predict(args) -> int:
    law = _model_law(args)
    x = parse_grid(args.grid)
    dens = np.atleast_1d(law.pdf(x))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_csv(out, ("x", "density"), (x, dens))
    trapezoid = float(np.trapezoid(dens, x)) if x.size > 1 else 0.0
    sidecar = {
        "model": args.model,
        "kind": law.kind,
        "params": law.params,
        "support": [list(iv) for iv in law.support],
        "atoms": [list(a) for a in law.atoms],
        "mass": law.mass(),
        "grid_trapezoid_mass": trapezoid,
        "grid_points": int(x.size),
    }
    out.with_suffix(".json").write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    print(f"wrote {x.size} rows to {out}; grid mass {trapezoid:.6f}")
    return EXIT_OK


def cmd_compare(args) -> int:
    path = Path(args.config)
    if not path.is_file():
        print(f"error: config file not found: {path}", file=sys.stderr)
        return EXIT_USAGE
    try:
        config = ExperimentConfig.from_json(path.read_text())
    except ConfigError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("resolved experiment: " + json.dumps(config.to_dict(), sort_keys=True), file=sys.stderr)
    law = build_theory(config)
    pooled, failed = simulate(config, args.workers)
    report = compare(pooled, failed, config, law)
    paths = write_outputs(args.out, report, pooled, config, law)
    for name, flag in sorted(report.passes.items()):
        print(f"{name}: {'pass' if flag else 'FAIL'}")
    print(f"report: {paths['report']}")
    if failed:
        return EXIT_NUMERICAL
    return EXIT_OK if report.passed else EXIT_TOLERANCE


def cmd_moments(args) -> int:
    if args.eigenvalues:
        spec = SpectralMeasure.from_csv(args.eigenvalues)
        values = spec.moments(args.max_order)
    else:
        if args.model is None:
            raise UsageError("moments needs --model or --eigenvalues")
        law = _model_law(args)
        values = [moment(law, j) for j in range(1, args.max_order + 1)]
    print("order,moment")
    for j, v in enumerate(values, start=1):
        print(f"{j},{v!r}")
    return EXIT_OK


def cmd_support(args) -> int:
    t = args.t
    if t == 0:
        print("error: t = 0 gives the semicircle law itself, supported on [-2, 2]", file=sys.stderr)
        return EXIT_USAGE
    # the raw quartic roots, without the semicircle switch used by the density below |t| = 1e-3
    ta = abs(t)
    p1, p2 = freeconv.support_endpoints(ta)
    s1, s2 = (p1, p2) if t > 0 else (-p2, -p1)
    r1, r2 = (float(freeconv.quartic(v, ta)) for v in (p1, p2))
    print(f"s1 = {s1!r}")
    print(f"s2 = {s2!r}")
    print(f"quartic residuals: {r1!r} {r2!r}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _model_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--model", choices=MODELS, required=required)
    p.add_argument("--t", type=float, help="dilation parameter for freeconv-f")
    p.add_argument("--k", type=int, help="block count for finite-k")
    p.add_argument("--psi", choices=("semicircle", "freeconv"), default="semicircle",
                   help="limit family of A + tB for finite-k")
    p.add_argument("--alphas", help="comma-separated eigenvalues of A for ss-law")
    p.add_argument("--betas", help="comma-separated eigenvalues of B for ss-law")
    p.add_argument("--order", type=int, default=limits.DEFAULT_OMEGA_ORDER,
                   help="Gauss-Chebyshev order for wigner-wishart")
    p.add_argument("--center", type=float, default=0.0)
    p.add_argument("--variance", type=float, default=1.0)
    p.add_argument("--mean", type=float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockrmt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sources = sorted(ENSEMBLE_KINDS + FIXED_KINDS)

    p = sub.add_parser("sample", help="simulate and write pooled eigenvalues")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", choices=sources, default="gue")
    p.add_argument("--b", choices=sources, default="gue")
    p.add_argument("--w", choices=sources, default="wigner-rademacher")
    p.add_argument("--a-values", help="diagonal of A when --a diag")
    p.add_argument("--b-values", help="diagonal of B when --b diag")
    p.add_argument("--w-values", help="diagonal of W when --w diag")
    p.add_argument("--wishart-ratio", type=float, default=1.0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("predict", help="tabulate a limiting density on a grid")
    _model_flags(p, required=True)
    p.add_argument("--grid", required=True, help="start:stop:step")
    p.add_argument("--out", default="density.csv")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("compare", help="run a configured experiment against theory")
    p.add_argument("config")
    p.add_argument("--out", default="out")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("moments", help="print moments of a model or an eigenvalue CSV")
    _model_flags(p, required=False)
    p.add_argument("--eigenvalues", help="CSV with header index,eigenvalue")
    p.add_argument("--max-order", type=int, default=6)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("support", help="support endpoints of the semicircle + dilated MP convolution")
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=cmd_support)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse mistakes values such as "-1:4:0.01" or "-3,3" for options
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok.startswith("--") and "=" not in tok and nxt is not None and len(nxt) > 1
                and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == ".")):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_join_negative_values(argv))
    _echo(args)
    try:
        return args.func(args)
    except (UsageError, ConfigError, ValueError) as exc:
        if isinstance(exc, NUMERICAL_ERRORS):
            print(f"numerical failure: {exc}", file=sys.stderr)
            return EXIT_NUMERICAL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
