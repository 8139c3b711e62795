"""Command-line front end.

Subcommands:

* ``bound``     every applicable advantage bound for one mechanism, as JSON
* ``simulate``  one reconstruction-game run, as a CSV row
* ``sweep``     bounds (and optionally simulations) over a parameter grid, as CSV
* ``figures``   preset sweeps behind the advantage plots (fig2, fig3a, fig3b)

Exit codes: 0 success, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from fano_privacy.attack_sim import ADVERSARIES, run_game
from fano_privacy.fano import (
    DEFAULT_ALPHA_GRID,
    AdvantageBound,
    BoundAssertionError,
    best_generalized_fano,
    fano_advantage_bound,
    rero_baseline_bound,
)
from fano_privacy.info_theory import Prior
from fano_privacy.mi_bounds import (
    DEFAULT_MC_SAMPLES,
    GaussianSpec,
    MiBound,
    RdpCurve,
    RrSpec,
    dpsgd_rdp_curve,
    gaussian_mi_bound_thm2,
    gaussian_mi_monte_carlo,
    gaussian_rdp_curve,
    load_encodings_csv,
    mi_from_rdp,
    pairwise_sensitivity,
    rr_epsilon_dp,
    rr_exact_mi,
)

EXIT_USAGE = 2
EXIT_NUMERIC = 3

SWEEP_COLUMNS = (
    "param", "value", "bound_fano_exact", "bound_fano_thm1", "bound_fano_thm2",
    "bound_fano_mc", "bound_gen_fano", "bound_rero", "mc_mi", "mc_mi_stderr",
    "empirical_adv", "emp_ci_low", "emp_ci_high", "n_trials", "seed",
)
SIMULATE_COLUMNS = (
    "mechanism", "param", "value", "adversary", "n_trials", "successes",
    "empirical_success", "success_ci_low", "success_ci_high",
    "empirical_adv", "emp_ci_low", "emp_ci_high", "seed",
)
BOUND_NAMES = ("fano-exact", "fano-thm1", "fano-thm2", "fano-mc", "gen-fano", "rero")
PARAM_BOUNDS = {
    "q": ("fano-exact", "fano-thm1", "gen-fano", "rero"),
    "sigma": ("fano-thm1", "fano-thm2", "fano-mc", "gen-fano", "rero"),
    "epsilon": ("fano-thm1",),
}

FIG2_MS = (2, 10, 10**4, 10**10)
FIG2_EPS_GRID = tuple(np.geomspace(1e-2, 50.0, 199))
FIG3A_Q_GRID = tuple(round(0.1 * i, 1) for i in range(1, 11))
FIG3B_SIGMA_GRID = tuple(np.linspace(0.25, 3.0, 12))
FIGURE_SEED = 0


class UsageError(ValueError):
    pass


class SweepError(ArithmeticError):
    pass


# --- formatting --------------------------------------------------------------


def format_value(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def write_csv(rows: Sequence[Dict], columns: Sequence[str], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(c)) for c in columns])


def _json_number(x):
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return "Infinity" if x > 0 else "-Infinity"


# --- argument parsing helpers -------------------------------------------------


def _key_values(tokens: Sequence[str], allowed: Sequence[str], required: Sequence[str], flag: str) -> Dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in allowed:
            raise UsageError(f"{flag}: expected {' '.join(k + '=<value>' for k in allowed)}, got {tok!r}")
        out[key] = val
    missing = [k for k in required if k not in out]
    if missing:
        raise UsageError(f"{flag}: missing {', '.join(missing)}")
    return out


def _to_float(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"{what}: not a number: {text!r}") from None


def _to_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what}: not an integer: {text!r}") from None


def parse_float_list(text: str, what: str = "list") -> List[float]:
    """Comma list, ``start:stop:num`` (linear) or ``log:start:stop:num`` (geometric)."""
    text = text.strip()
    if text.startswith("log:") or text.count(":") == 2:
        parts = text.split(":")
        space = np.linspace
        if parts[0] == "log":
            parts, space = parts[1:], np.geomspace
        if len(parts) != 3:
            raise UsageError(f"{what}: bad range {text!r}")
        start, stop = _to_float(parts[0], what), _to_float(parts[1], what)
        num = _to_int(parts[2], what)
        if num < 1:
            raise UsageError(f"{what}: need at least one point")
        return [float(v) for v in space(start, stop, num)]
    values = [_to_float(v, what) for v in text.split(",") if v.strip()]
    if not values:
        raise UsageError(f"{what}: empty list")
    return values


def load_prior_json(path) -> Prior:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not all(isinstance(v, (int, float)) for v in data):
        raise UsageError(f"{path}: prior file must be a JSON array of numbers")
    return Prior(data)


def _resolve_prior(args, M: Optional[int]) -> Prior:
    if args.uniform and args.prior:
        raise UsageError("--uniform and --prior are mutually exclusive")
    if args.M is not None:
        if M is not None and M != args.M:
            raise UsageError(f"--M {args.M} conflicts with the mechanism's M = {M}")
        M = args.M
    if args.prior:
        prior = load_prior_json(args.prior)
        if M is not None and prior.M != M:
            raise UsageError(f"prior has {prior.M} entries but M = {M}")
        return prior
    if M is None:
        raise UsageError("candidate count unknown: pass --M or --prior")
    return Prior.uniform(M)


@dataclass
class Source:
    """A resolved information source: a mechanism or a raw bound."""

    kind: str  # rr | gaussian | mi | rdp
    prior: Prior
    rr: Optional[RrSpec] = None
    gaussian: Optional[GaussianSpec] = None
    delta: Optional[float] = None
    sigma: Optional[float] = None
    mi: Optional[float] = None
    curve: Optional[RdpCurve] = None
    echo: Dict = field(default_factory=dict)


def _gaussian_encodings(args) -> Optional[np.ndarray]:
    if args.encodings and args.onehot is not None:
        raise UsageError("--encodings and --onehot are mutually exclusive")
    if args.encodings:
        return load_encodings_csv(args.encodings)
    if args.onehot is not None:
        if args.onehot < 2:
            raise UsageError("--onehot needs M >= 2")
        return np.eye(args.onehot)
    return None


def resolve_source(args) -> Source:
    chosen = [name for name, on in (
        ("rr", args.rr is not None), ("gaussian", args.gaussian), ("mi", args.mi is not None),
        ("rdp-linear", args.rdp_linear is not None), ("dpsgd", args.dpsgd is not None),
    ) if on]
    if len(chosen) != 1:
        raise UsageError("specify exactly one of --rr, --gaussian, --mi, --rdp-linear, --dpsgd")
    which = chosen[0]

    if which == "rr":
        q = _to_float(_key_values(args.rr, ["q"], ["q"], "--rr")["q"], "--rr q")
        prior = _resolve_prior(args, None)
        spec = RrSpec(q, prior.M)
        return Source("rr", prior, rr=spec, echo={"mechanism": "rr", "q": q, "M": prior.M})

    if which == "gaussian":
        if args.sigma is None:
            raise UsageError("--gaussian needs --sigma")
        enc = _gaussian_encodings(args)
        if enc is not None and args.delta is not None:
            raise UsageError("--delta conflicts with --encodings/--onehot")
        if enc is None and args.delta is None:
            raise UsageError("--gaussian needs --encodings, --onehot or --delta")
        prior = _resolve_prior(args, None if enc is None else enc.shape[0])
        echo = {"mechanism": "gaussian", "sigma": args.sigma, "M": prior.M}
        if enc is not None:
            spec = GaussianSpec(enc, args.sigma, prior)
            delta = pairwise_sensitivity(enc)
            echo.update(delta=delta, d=spec.d)
            return Source("gaussian", prior, gaussian=spec, delta=delta, sigma=args.sigma, echo=echo)
        if not args.delta >= 0:
            raise UsageError("--delta must be non-negative")
        echo["delta"] = args.delta
        return Source("gaussian", prior, delta=args.delta, sigma=args.sigma, echo=echo)

    prior = _resolve_prior(args, None)
    if which == "mi":
        if not args.mi >= 0:
            raise UsageError("--mi must be non-negative")
        return Source("mi", prior, mi=args.mi, echo={"mi": args.mi, "M": prior.M})
    if which == "rdp-linear":
        slope = _to_float(_key_values(args.rdp_linear, ["slope"], ["slope"], "--rdp-linear")["slope"], "slope")
        return Source("rdp", prior, curve=RdpCurve.linear(slope),
                      echo={"rdp": "linear", "slope": slope, "M": prior.M})
    kv = _key_values(args.dpsgd, ["T", "sigma", "C"], ["T", "sigma"], "--dpsgd")
    T = _to_int(kv["T"], "--dpsgd T")
    noise = _to_float(kv["sigma"], "--dpsgd sigma")
    clip = _to_float(kv.get("C", "1"), "--dpsgd C")
    curve = dpsgd_rdp_curve(T, noise, clip)
    return Source("rdp", prior, curve=curve,
                  echo={"rdp": "dpsgd", "T": T, "sigma": noise, "C": clip, "M": prior.M})


# --- bound computation ------------------------------------------------------


@dataclass
class BoundRecord:
    method: str
    bound: AdvantageBound
    info: Optional[float]
    alpha: Optional[float]
    info_stderr: Optional[float] = None

    def as_json(self) -> Dict:
        out = {
            "method": self.method,
            "alpha": _json_number(self.alpha),
            "info_bound_nats": _json_number(self.info),
            "t_star": _json_number(self.bound.t_star),
            "success_upper": _json_number(self.bound.success_upper),
            "advantage": _json_number(self.bound.advantage),
        }
        if self.info_stderr is not None:
            out["info_bound_stderr"] = _json_number(self.info_stderr)
        return out


def _curve_for(src: Source) -> Optional[RdpCurve]:
    if src.kind == "rr":
        return RdpCurve.constant(rr_epsilon_dp(src.rr), name=f"rr-dp(q={src.rr.q:g})")
    if src.kind == "gaussian":
        return gaussian_rdp_curve(src.delta, src.sigma)
    return src.curve


def compute_bounds(
    src: Source, wanted: Optional[Sequence[str]] = None, alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    mc_samples: int = DEFAULT_MC_SAMPLES, seed: int = 0,
) -> List[BoundRecord]:
    """All bounds applicable to ``src`` (restricted to ``wanted`` if given)."""
    prior = src.prior
    out: List[BoundRecord] = []

    def want(name):
        return wanted is None or name in wanted

    if src.kind == "mi":
        mi = MiBound(src.mi, 1.0, "rdp-derived", description="user-supplied MI bound")
        out.append(BoundRecord("fano", fano_advantage_bound(mi, prior), src.mi, 1.0))
        return out

    if src.kind == "rr" and want("fano-exact"):
        mi = rr_exact_mi(src.rr, prior)
        out.append(BoundRecord("fano-exact", fano_advantage_bound(mi, prior), mi.value, 1.0))

    curve = _curve_for(src)
    if want("fano-thm1"):
        mi = mi_from_rdp(curve, 1.0)
        out.append(BoundRecord("fano-thm1", fano_advantage_bound(mi, prior), mi.value, 1.0))

    if src.kind == "gaussian":
        if want("fano-thm2"):
            mi = gaussian_mi_bound_thm2(prior, src.delta, src.sigma)
            out.append(BoundRecord("fano-thm2", fano_advantage_bound(mi, prior), mi.value, 1.0))
        if want("fano-mc") and src.gaussian is not None:
            mi = gaussian_mi_monte_carlo(src.gaussian, mc_samples, seed)
            out.append(BoundRecord("fano-mc", fano_advantage_bound(mi, prior), mi.value, 1.0, mi.stderr))

    if want("gen-fano"):
        b = best_generalized_fano(curve, prior, alpha_grid)
        out.append(BoundRecord("gen-fano", b, b.info_bound, b.alpha))

    if want("rero") and prior.is_uniform:
        b = rero_baseline_bound(curve, prior.M, prior)
        out.append(BoundRecord("rero", b, b.info_bound, b.alpha))
    return out


# --- subcommands ----------------------------------------------------------------


def cmd_bound(args, stdout) -> int:
    src = resolve_source(args)
    grid = parse_float_list(args.alpha_grid, "--alpha-grid") if args.alpha_grid else DEFAULT_ALPHA_GRID
    records = compute_bounds(src, None, grid, args.mc_samples, args.seed)
    doc = {"inputs": src.echo, "bounds": [r.as_json() for r in records]}
    json.dump(doc, stdout, indent=2, allow_nan=False)
    stdout.write("\n")
    return 0


def _simulation_mechanism(src: Source):
    if src.kind == "rr":
        return src.rr
    if src.kind == "gaussian" and src.gaussian is not None:
        return src.gaussian
    raise UsageError("simulate needs --rr or --gaussian with --encodings/--onehot")


def cmd_simulate(args, stdout) -> int:
    src = resolve_source(args)
    mech = _simulation_mechanism(src)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    rep = run_game(mech, args.adversary, src.prior, args.trials, args.seed, workers=args.workers)
    param, value = ("q", src.rr.q) if src.kind == "rr" else ("sigma", src.sigma)
    row = {
        "mechanism": src.kind, "param": param, "value": value, "adversary": rep.adversary_name,
        "n_trials": rep.n_trials, "successes": rep.successes,
        "empirical_success": rep.empirical_success,
        "success_ci_low": rep.ci_low, "success_ci_high": rep.ci_high,
        "empirical_adv": rep.empirical_advantage,
        "emp_ci_low": rep.adv_ci_low, "emp_ci_high": rep.adv_ci_high, "seed": rep.seed,
    }
    write_csv([row], SIMULATE_COLUMNS, stdout)
    return 0


@dataclass
class SweepConfig:
    param: str  # q | sigma | epsilon
    grid: List[float]
    prior: Prior
    encodings: Optional[np.ndarray] = None
    bounds: Sequence[str] = ()
    trials: int = 0
    seed: int = 0
    mc_samples: int = DEFAULT_MC_SAMPLES
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID
    adversary: str = "map"
    workers: int = 1

    def __post_init__(self):
        if self.param not in PARAM_BOUNDS:
            raise UsageError(f"unknown sweep parameter {self.param!r}")
        if not self.grid:
            raise UsageError("sweep grid is empty")
        if any(b < a for a, b in zip(self.grid, self.grid[1:])):
            raise UsageError("sweep grid must be sorted ascending")
        if self.trials < 0:
            raise UsageError("--trials must be >= 0")
        if not self.bounds:
            self.bounds = PARAM_BOUNDS[self.param]
        bad = [b for b in self.bounds if b not in PARAM_BOUNDS[self.param]]
        if bad:
            raise UsageError(f"bounds {bad} do not apply to a {self.param} sweep")
        if self.param == "sigma" and self.encodings is None:
            raise UsageError("a sigma sweep needs --onehot or --encodings")
        if self.param == "epsilon" and self.trials:
            raise UsageError("an epsilon sweep has no mechanism to simulate; use --trials 0")


def _sweep_point(cfg: SweepConfig, value: float) -> Dict:
    row: Dict = {"param": cfg.param, "value": value, "seed": cfg.seed}
    prior = cfg.prior
    if cfg.param == "q":
        src = Source("rr", prior, rr=RrSpec(value, prior.M))
        mech = src.rr
    elif cfg.param == "sigma":
        spec = GaussianSpec(cfg.encodings, value, prior)
        src = Source("gaussian", prior, gaussian=spec, delta=pairwise_sensitivity(cfg.encodings), sigma=value)
        mech = spec
    else:
        src = Source("mi", prior, mi=value)
        mech = None

    if src.kind == "mi":
        mi = MiBound(value, 1.0, "rdp-derived")
        row["bound_fano_thm1"] = fano_advantage_bound(mi, prior).advantage
    else:
        for rec in compute_bounds(src, cfg.bounds, cfg.alpha_grid, cfg.mc_samples, cfg.seed):
            row["bound_" + rec.method.replace("-", "_")] = rec.bound.advantage
            if rec.method == "fano-mc":
                row["mc_mi"], row["mc_mi_stderr"] = rec.info, rec.info_stderr

    if cfg.trials and mech is not None:
        rep = run_game(mech, cfg.adversary, prior, cfg.trials, cfg.seed)
        row.update(
            empirical_adv=rep.empirical_advantage, emp_ci_low=rep.adv_ci_low,
            emp_ci_high=rep.adv_ci_high, n_trials=rep.n_trials,
        )
    return row


def run_sweep(cfg: SweepConfig) -> List[Dict]:
    """Evaluates every grid point; rows come back in grid order."""

    def point(value):
        try:
            return _sweep_point(cfg, value)
        except (ArithmeticError, ValueError) as exc:
            raise SweepError(f"grid point {cfg.param}={value!r} failed: {exc}") from exc

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(point, cfg.grid))
    return [point(v) for v in cfg.grid]


def _write_rows(rows, path) -> None:
    buf = io.StringIO()
    write_csv(rows, SWEEP_COLUMNS, buf)
    with open(path, "w", newline="") as fh:
        fh.write(buf.getvalue())


def cmd_sweep(args, stdout) -> int:
    encodings = _gaussian_encodings(args)
    prior = _resolve_prior(args, None if encodings is None else encodings.shape[0])
    bounds = [b.strip() for b in args.bounds.split(",")] if args.bounds else ()
    unknown = [b for b in bounds if b not in BOUND_NAMES]
    if unknown:
        raise UsageError(f"unknown bounds {unknown}; choose from {BOUND_NAMES}")
    cfg = SweepConfig(
        param=args.param, grid=parse_float_list(args.grid, "--grid"), prior=prior,
        encodings=encodings, bounds=bounds, trials=args.trials, seed=args.seed,
        mc_samples=args.mc_samples,
        alpha_grid=parse_float_list(args.alpha_grid, "--alpha-grid") if args.alpha_grid else DEFAULT_ALPHA_GRID,
        adversary=args.adversary, workers=args.workers,
    )
    rows = run_sweep(cfg)
    if args.out in (None, "-"):
        write_csv(rows, SWEEP_COLUMNS, stdout)
    else:
        _write_rows(rows, args.out)
    return 0


def figure_configs(name: str, trials: int = 100_000, seed: int = FIGURE_SEED,
                   mc_samples: int = DEFAULT_MC_SAMPLES, workers: int = 1) -> Dict[str, SweepConfig]:
    """Preset sweeps keyed by output file name."""
    if name == "fig2":
        out = {}
        for M in FIG2_MS:
            grid = sorted(set(FIG2_EPS_GRID) | {math.log(M)})
            out[f"fig2_M{M}.csv"] = SweepConfig("epsilon", grid, Prior.uniform(M), seed=seed, workers=workers)
        return out
    if name == "fig3a":
        return {"fig3a.csv": SweepConfig(
            "q", list(FIG3A_Q_GRID), Prior.uniform(10), trials=trials, seed=seed, workers=workers)}
    if name == "fig3b":
        return {"fig3b.csv": SweepConfig(
            "sigma", list(FIG3B_SIGMA_GRID), Prior.uniform(10), encodings=np.eye(10),
            trials=trials, seed=seed, mc_samples=mc_samples, workers=workers)}
    raise UsageError(f"unknown figure preset {name!r}; choose from fig2, fig3a, fig3b")


def cmd_figures(args, stdout) -> int:
    configs = figure_configs(args.name, args.trials, args.seed, args.mc_samples, args.workers)
    os.makedirs(args.out_dir, exist_ok=True)
    for fname, cfg in configs.items():
        path = os.path.join(args.out_dir, fname)
        _write_rows(run_sweep(cfg), path)
        stdout.write(path + "\n")
    return 0


# --- parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_prior_flags(p) -> None:
    p.add_argument("--M", type=int, help="number of candidate secrets")
    p.add_argument("--uniform", action="store_true", help="uniform prior (default)")
    p.add_argument("--prior", metavar="JSON", help="file holding a JSON array of M probabilities")


def _add_gaussian_flags(p) -> None:
    p.add_argument("--encodings", metavar="CSV", help="M x d encoding matrix, no header")
    p.add_argument("--onehot", type=int, metavar="M", help="use the M standard basis vectors")


def _add_mechanism_flags(p, raw_sources: bool) -> None:
    p.add_argument("--rr", nargs=1, metavar="q=<f>", help="randomized response")
    p.add_argument("--gaussian", action="store_true", help="Gaussian mechanism")
    _add_gaussian_flags(p)
    p.add_argument("--sigma", type=float, help="Gaussian noise standard deviation")
    if raw_sources:
        p.add_argument("--delta", type=float, help="L2 sensitivity, instead of explicit encodings")
        p.add_argument("--mi", type=float, help="mutual-information bound in nats")
        p.add_argument("--rdp-linear", nargs=1, metavar="slope=<f>", help="RDP curve eps(alpha) = slope * alpha")
        p.add_argument("--dpsgd", nargs="+", metavar="KEY=VAL", help="T=<int> sigma=<f> [C=<f>]")
    else:
        p.set_defaults(delta=None, mi=None, rdp_linear=None, dpsgd=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fano-privacy", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", help="advantage bounds for one mechanism (JSON)")
    _add_mechanism_flags(p, raw_sources=True)
    _add_prior_flags(p)
    p.add_argument("--alpha-grid", help="orders for the generalized bound, e.g. 1,2,4,8")
    p.add_argument("--mc-samples", type=int, default=DEFAULT_MC_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("simulate", help="play the reconstruction game (CSV row)")
    _add_mechanism_flags(p, raw_sources=False)
    _add_prior_flags(p)
    p.add_argument("--adversary", choices=ADVERSARIES, default="map")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="bounds and simulations over a grid (CSV)")
    p.add_argument("--param", required=True, choices=sorted(PARAM_BOUNDS))
    p.add_argument("--grid", required=True, help="a,b,c | start:stop:num | log:start:stop:num")
    _add_gaussian_flags(p)
    _add_prior_flags(p)
    p.add_argument("--bounds", help=f"comma list from {','.join(BOUND_NAMES)}")
    p.add_argument("--adversary", choices=ADVERSARIES, default="map")
    p.add_argument("--trials", type=int, default=0, help="trials per point; 0 disables simulation")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mc-samples", type=int, default=DEFAULT_MC_SAMPLES)
    p.add_argument("--alpha-grid")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figures", help="write a preset figure dataset")
    p.add_argument("name", help="fig2, fig3a or fig3b")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=FIGURE_SEED)
    p.add_argument("--mc-samples", type=int, default=DEFAULT_MC_SAMPLES)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code in (0, EXIT_USAGE) else EXIT_USAGE
    try:
        return args.func(args, stdout)
    except (BoundAssertionError, SweepError, ArithmeticError) as exc:
        print(f"fano-privacy: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"fano-privacy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - exit codes are restricted to 0/2/3
        print(f"fano-privacy: unexpected failure: {exc!r}", file=sys.stderr)
        return EXIT_NUMERIC


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
