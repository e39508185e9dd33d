"""Command-line frontend: construct instances, run certifier suites, and
emit grids, curves, figures, and machine-readable reports.

Exit codes: 0 all checks passed, 1 a certified claim failed, 2 invalid
input or configuration.  All outputs are reproducible byte for byte given
the same config and seed, and every emitted file embeds the resolved
config (CSV/JSON header or PNG sidecar).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .construct import MappingInstance, select_A
from .errors import (
    ConfigError,
    DomainError,
    ParameterError,
    SearchExhaustedError,
    StepTooCoarseError,
)
from .kernel import (
    HALF_PI,
    ConstructionParams,
    hg_eval,
    hg_eval_c,
    log_spiral,
)
from .verify import (
    GridSpec,
    StripRegion,
    VerificationReport,
    asymptotic_residuals,
    boundedness_scan,
    dilatation_sup,
    eta_estimate,
    h_growth,
    injectivity_pairs,
    level_curve_monotonicity,
    separation_profile,
    sup_f_levels,
    winding_degree,
)

COMMANDS = ("construct", "verify", "eta", "grid", "curve", "report")
CHECK_NAMES = ("dilatation", "injectivity", "winding", "boundedness",
               "h_growth", "level_curves", "asymptotics", "separation")
WINDING_RADII = (0.5, 0.9, 0.99)
WINDING_N0 = 4096
WINDING_CAP = 2 ** 20


@dataclass
class RunConfig:
    """Resolved run configuration; flags override file values override defaults."""

    command: str
    k: float = 0.5
    eps: float = 0.1
    alpha: float = 0.3
    A: float | None = None
    A_values: list[float] | None = None
    b: float = HALF_PI
    seed: int = 42
    grid: dict = field(default_factory=lambda: {
        "angular_count": 2048, "m_max": 12, "interior_count": 4096})
    strip: dict = field(default_factory=lambda: {
        "x_max": None, "sample_count": 100_000})
    pairs: int = 10_000
    only: str | None = None
    radii: list[float] = field(default_factory=lambda: [0.5, 0.9, 0.99])
    output_dir: str = "out"
    format: str = "csv"

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "k": self.k, "eps": self.eps, "alpha": self.alpha,
            "A": self.A, "A_values": self.A_values, "b": self.b,
            "seed": self.seed,
            "grid": dict(self.grid), "strip": dict(self.strip),
            "pairs": self.pairs, "only": self.only,
            "radii": list(self.radii),
            "output_dir": self.output_dir, "format": self.format,
            "version": __version__,
        }

    def grid_spec(self) -> GridSpec:
        return GridSpec.make(
            angular_count=int(self.grid["angular_count"]),
            m_max=int(self.grid["m_max"]),
            interior_count=int(self.grid["interior_count"]),
            seed=int(self.grid.get("seed", self.seed)),
        )

    def strip_region(self, A: float) -> StripRegion:
        x_max = self.strip.get("x_max")
        return StripRegion.make(
            A=A, b=self.b,
            x_max=float(x_max) if x_max is not None else None,
            sample_count=int(self.strip["sample_count"]),
            seed=int(self.strip.get("seed", self.seed)),
        )


# ---------------------------------------------------------------------------
# config resolution
# ---------------------------------------------------------------------------

_CONFIG_KEYS = {"command", "k", "eps", "alpha", "A", "A_values", "b", "seed",
                "grid", "strip", "pairs", "only", "radii", "output_dir", "format"}


def _load_config_file(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return data


def _parse_A(text: str | None, command: str) -> tuple[float | None, list[float] | None]:
    if text is None:
        return None, None
    parts = [p for p in str(text).split(",") if p]
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise ConfigError(f"invalid --A value {text!r}") from exc
    if len(values) > 1:
        if command != "eta":
            raise ConfigError("comma-separated --A is only valid for the eta command")
        return None, values
    return values[0], None


def resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.config:
        file_cfg = _load_config_file(args.config)
        for key, value in file_cfg.items():
            if key == "command":
                continue
            if key in ("grid", "strip"):
                getattr(cfg, key).update(value)
            else:
                setattr(cfg, key, value)

    A_flag, A_list = _parse_A(args.A, args.command)
    if A_flag is not None:
        cfg.A = A_flag
    if A_list is not None:
        cfg.A_values = A_list
    for name in ("k", "eps", "alpha", "b", "seed", "pairs", "only", "format"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    if args.out is not None:
        cfg.output_dir = args.out
    if args.grid_angular is not None:
        cfg.grid["angular_count"] = args.grid_angular
    if args.grid_mmax is not None:
        cfg.grid["m_max"] = args.grid_mmax
    if args.grid_interior is not None:
        cfg.grid["interior_count"] = args.grid_interior
    if args.strip_xmax is not None:
        cfg.strip["x_max"] = args.strip_xmax
    if args.strip_samples is not None:
        cfg.strip["sample_count"] = args.strip_samples
    if getattr(args, "radii", None):
        try:
            cfg.radii = [float(r) for r in args.radii.split(",") if r]
        except ValueError as exc:
            raise ConfigError(f"invalid --radii value {args.radii!r}") from exc

    if cfg.format not in ("csv", "json", "png"):
        raise ConfigError(f"format must be csv, json or png, got {cfg.format!r}")
    if cfg.only is not None and cfg.only not in CHECK_NAMES:
        raise ConfigError(f"--only must be one of {CHECK_NAMES}, got {cfg.only!r}")
    return cfg


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))  # shortest round-trip decimal
    return str(value)


def _write_csv(path: Path, header: list[str], rows, config: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write("# " + json.dumps(config, sort_keys=True) + "\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _write_json(path: Path, payload: dict, config: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = dict(payload)
    payload["config"] = config
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _resolve_instance(cfg: RunConfig) -> MappingInstance:
    """Explicit A is taken as-is (certification may fail); otherwise select_A runs."""
    if cfg.A is None:
        return select_A(cfg.k, cfg.eps, cfg.alpha, cfg.grid_spec(), b=cfg.b)
    params = ConstructionParams(cfg.alpha, cfg.eps, cfg.k, float(cfg.A), cfg.b)
    report = dilatation_sup(params, cfg.grid_spec())
    return MappingInstance(params, report.extremum,
                           [(params.A, report.extremum)])


# ---------------------------------------------------------------------------
# verification suite
# ---------------------------------------------------------------------------

def _winding_refined(params: ConstructionParams, r: float,
                     probes: list[complex]) -> VerificationReport:
    n = WINDING_N0
    while True:
        try:
            return winding_degree(params, r, n, probes)
        except StepTooCoarseError:
            n *= 2
            if n > WINDING_CAP:
                raise


def _winding_suite(params: ConstructionParams) -> VerificationReport:
    notes, passed, extremum, samples = [], True, 0.0, 0
    witness = None
    for r in WINDING_RADII:
        probes = [complex(hg_eval(z0, params).f)
                  for z0 in (0.0, 0.3 * r, -0.3 * r, 0.3j * r, -0.3j * r)]
        rep = _winding_refined(params, r, probes)
        passed &= rep.passed
        if rep.extremum >= extremum:
            extremum, witness = rep.extremum, rep.witness
        samples += rep.samples_used
        notes.append(rep.notes)
    return VerificationReport(
        name="winding_degree", passed=bool(passed), extremum=extremum,
        witness=witness, tolerance=1e-3, samples_used=samples, seed=None,
        notes=" | ".join(notes))


def _separation_suite(cfg: RunConfig) -> VerificationReport:
    region = StripRegion.make(A=1e3, b=cfg.b, sample_count=cfg.pairs, seed=cfg.seed)
    reports = separation_profile(region, cfg.alpha)
    ratios = [r.extremum / r.tolerance if r.tolerance > 0 else math.inf
              for r in reports]
    worst = int(np.argmin(ratios))
    return VerificationReport(
        name="separation_profile",
        passed=all(r.passed for r in reports),
        extremum=float(ratios[worst]),
        witness=reports[worst].witness,
        tolerance=1.0,
        samples_used=sum(r.samples_used for r in reports),
        seed=cfg.seed,
        notes=" | ".join(f"{r.name}: min={r.extremum:.6g} floor={r.tolerance:g} "
                         f"n={r.samples_used}" for r in reports))


def _failed_report(name: str, exc: Exception) -> VerificationReport:
    # Sentinel values keep the bundle strict JSON; the notes carry the error.
    return VerificationReport(name=name, passed=False, extremum=-1.0,
                              witness=None, tolerance=0.0, samples_used=0,
                              seed=None, notes=f"error: {exc}")


def run_suite(cfg: RunConfig, params: ConstructionParams,
              only: str | None = None) -> list[VerificationReport]:
    """Run the certifier suite (or a single named check) and collect reports."""
    lemma_A = 1e3
    a0 = lemma_A ** cfg.alpha

    def level_region() -> StripRegion:
        return StripRegion.make(A=lemma_A, b=cfg.b, x_max=1e6,
                                sample_count=cfg.pairs, seed=cfg.seed)

    checks = {
        "dilatation": lambda: dilatation_sup(params, cfg.grid_spec()),
        "injectivity": lambda: injectivity_pairs(params, n_pairs=cfg.pairs,
                                                 seed=cfg.seed),
        "winding": lambda: _winding_suite(params),
        "boundedness": lambda: boundedness_scan(params,
                                                m_max=int(cfg.grid["m_max"])),
        "h_growth": lambda: h_growth(params, m_max=int(cfg.grid["m_max"])),
        "level_curves": lambda: level_curve_monotonicity(
            cfg.alpha, level_region(),
            [1.2 * a0, 1.5 * a0, 2.0 * a0, 3.0 * a0, 5.0 * a0], n_y=201),
        "asymptotics": lambda: asymptotic_residuals(
            cfg.alpha, np.geomspace(1e2, 1e6, 33), b=cfg.b),
        "separation": lambda: _separation_suite(cfg),
    }
    names = [only] if only else list(CHECK_NAMES)
    reports = []
    for name in names:
        try:
            reports.append(checks[name]())
        except Exception as exc:  # a broken check must not lose the bundle
            reports.append(_failed_report(name, exc))
    return reports


def _bundle_dict(reports: list[VerificationReport], params: ConstructionParams,
                 cfg: RunConfig) -> dict:
    return {
        "summary": {
            "passed_all": all(r.passed for r in reports),
            "params": params.to_dict(),
            "seed": cfg.seed,
            "version": __version__,
        },
        "reports": [r.to_dict() for r in reports],
    }


def _write_reports_csv(path: Path, reports: list[VerificationReport],
                       config: dict) -> None:
    rows = []
    for r in reports:
        d = r.to_dict()
        wit = "" if d["witness"] is None else ";".join(repr(v) for v in d["witness"])
        rows.append([d["name"], d["passed"], d["extremum"], wit,
                     d["tolerance"], d["samples_used"],
                     "" if d["seed"] is None else d["seed"], d["notes"]])
    _write_csv(path, ["name", "passed", "extremum", "witness", "tolerance",
                      "samples_used", "seed", "notes"], rows, config)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_construct(cfg: RunConfig) -> int:
    out = Path(cfg.output_dir)
    instance = _resolve_instance(cfg)
    _write_json(out / "instance.json", instance.to_dict(), cfg.to_dict())
    ok = instance.dilatation_sup_estimate <= cfg.k
    print(f"construct: A={instance.params.A:g} "
          f"sup|omega|={instance.dilatation_sup_estimate:.6g} "
          f"k={cfg.k:g} K={instance.params.K:.6g} "
          f"{'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_verify(cfg: RunConfig) -> int:
    out = Path(cfg.output_dir)
    instance = _resolve_instance(cfg)
    reports = run_suite(cfg, instance.params, only=cfg.only)
    bundle = _bundle_dict(reports, instance.params, cfg)
    _write_json(out / "verify_bundle.json", bundle, cfg.to_dict())
    _write_reports_csv(out / "reports.csv", reports, cfg.to_dict())
    for r in reports:
        print(f"verify: {r.name}: {'PASS' if r.passed else 'FAIL'} "
              f"(extremum={r.extremum:.6g}, tolerance={r.tolerance:.6g})")
    failing = [r for r in reports if not r.passed]
    if failing:
        print(f"verify: FAILED first at {failing[0].name}", file=sys.stderr)
        return 1
    return 0


def cmd_eta(cfg: RunConfig) -> int:
    out = Path(cfg.output_dir)
    a_values = cfg.A_values or ([cfg.A] if cfg.A is not None else None)
    if not a_values:
        raise ConfigError("eta requires --A with one or more comma-separated values")
    rows = []
    estimates = []
    for a in a_values:
        region = cfg.strip_region(float(a))
        eta_hat, (s, t) = eta_estimate(region, cfg.alpha,
                                       budget=region.sample_count)
        estimates.append(eta_hat)
        rows.append([float(a), eta_hat, s.real, s.imag, t.real, t.imag])
    _write_csv(out / "eta.csv",
               ["A", "eta_hat", "s_re", "s_im", "t_re", "t_im"],
               rows, cfg.to_dict())
    for a, e in zip(a_values, estimates):
        print(f"eta: A={a:g} eta_hat={e:.6g}")
    # Non-increasing within a 5% noise band.
    for prev, nxt in zip(estimates, estimates[1:]):
        if nxt > prev * 1.05:
            print("eta: FAILED monotone decay beyond the 5% noise band",
                  file=sys.stderr)
            return 1
    return 0


def cmd_grid(cfg: RunConfig) -> int:
    out = Path(cfg.output_dir)
    instance = _resolve_instance(cfg)
    z, w = cfg.grid_spec().points()
    rec = hg_eval_c(w, instance.params)
    omega_abs = np.abs(rec.omega)
    rows = (
        [z[i].real, z[i].imag, rec.S[i].real, rec.S[i].imag,
         rec.f[i].real, rec.f[i].imag, rec.h[i].real, rec.h[i].imag,
         rec.g[i].real, rec.g[i].imag, omega_abs[i], rec.jacobian[i]]
        for i in range(len(z))
    )
    _write_csv(out / "grid.csv",
               ["z_re", "z_im", "S_re", "S_im", "f_re", "f_im",
                "h_re", "h_im", "g_re", "g_im", "omega_abs", "jacobian"],
               rows, cfg.to_dict())
    print(f"grid: wrote {len(z)} rows to {out / 'grid.csv'}")
    return 0


def _curve_data(cfg: RunConfig, params: ConstructionParams):
    for r in cfg.radii:
        if not (0.0 < r < 1.0):
            raise ConfigError(f"curve radius must lie in (0, 1), got {r}")
    x_max = cfg.strip.get("x_max")
    x_hi = float(x_max) if x_max is not None else params.A0 * 1e3
    xs = np.geomspace(params.A0, x_hi, 2048)
    spiral = log_spiral(xs, params.alpha)

    theta = np.linspace(0.0, 2.0 * np.pi, 2049)
    circles = {}
    for r in cfg.radii:
        zc = r * np.cos(theta) + 1j * r * np.sin(theta)
        circles[r] = (theta, hg_eval(zc, params).f)

    m_max = int(cfg.grid["m_max"])
    ms = np.arange(1, m_max + 1)
    rec = hg_eval_c(10.0 ** (-ms.astype(float)), params)
    model = params.eps * np.log(np.log(params.A + ms * math.log(10.0)))
    return xs, spiral, circles, ms, rec, model


def cmd_curve(cfg: RunConfig) -> int:
    out = Path(cfg.output_dir)
    instance = _resolve_instance(cfg)
    params = instance.params
    xs, spiral, circles, ms, rec, model = _curve_data(cfg, params)
    config = cfg.to_dict()

    if cfg.format == "png":
        from . import figures
        out.mkdir(parents=True, exist_ok=True)
        figures.save_pointcloud(out / "spiral.png", [("Psi(x)", spiral)],
                                title="logarithmic spiral", config=config)
        clouds = [(f"f on |z|={r:g}", fvals) for r, (_, fvals) in circles.items()]
        figures.save_pointcloud(out / "disk_image.png", clouds,
                                title="images of circles under f", config=config)
        figures.save_radial_growth(out / "radial_trace.png", ms, rec.h.imag,
                                   model, config=config)
        print(f"curve: wrote figures to {out}")
        return 0

    _write_csv(out / "spiral.csv", ["x", "psi_re", "psi_im", "psi_abs"],
               ([x, p.real, p.imag, abs(p)] for x, p in zip(xs, spiral)),
               config)
    for r, (theta, fvals) in circles.items():
        _write_csv(out / f"circle_r{r:g}.csv", ["theta", "f_re", "f_im"],
                   ([t, fv.real, fv.imag] for t, fv in zip(theta, fvals)),
                   config)
    _write_csv(out / "radial_trace.csv",
               ["m", "r", "S", "h_re", "h_im", "model_im"],
               ([int(m), 1.0 - 10.0 ** (-int(m)), rec.S[i].real,
                 rec.h[i].real, rec.h[i].imag, model[i]]
                for i, m in enumerate(ms)),
               config)
    print(f"curve: wrote spiral, circle and radial-trace CSVs to {out}")
    return 0


def cmd_report(cfg: RunConfig) -> int:
    out = Path(cfg.output_dir)
    instance = _resolve_instance(cfg)
    params = instance.params
    reports = run_suite(cfg, params, only=cfg.only)
    bundle = _bundle_dict(reports, params, cfg)
    config = cfg.to_dict()
    _write_json(out / "verify_bundle.json", bundle, config)
    _write_json(out / "instance.json", instance.to_dict(), config)
    _write_reports_csv(out / "reports.csv", reports, config)

    from . import figures
    xs, spiral, circles, ms, rec, model = _curve_data(cfg, params)
    clouds = [("Psi(x)", spiral)] + [(f"f on |z|={r:g}", fvals)
                                     for r, (_, fvals) in circles.items()]
    figures.save_pointcloud(out / "fig_spiral_image.png", clouds,
                            title="spiral and disk images", config=config)
    z, w = cfg.grid_spec().points()
    om = np.abs(hg_eval_c(w, params).omega)
    figures.save_dilatation_field(out / "fig_dilatation.png", z, om,
                                  params.k, config=config)
    figures.save_radial_growth(out / "fig_h_growth.png", ms, rec.h.imag,
                               model, config=config)
    sups, bound, _ = sup_f_levels(params, m_max=int(cfg.grid["m_max"]))
    figures.save_sup_levels(out / "fig_boundedness.png", sups, bound,
                            config=config)

    for r in reports:
        print(f"report: {r.name}: {'PASS' if r.passed else 'FAIL'}")
    print(f"report: wrote bundle, CSV and figures to {out}")
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spiralmap",
        description="bounded univalent quasiconformal harmonic mapping toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--k", type=float)
        p.add_argument("--eps", type=float)
        p.add_argument("--alpha", type=float)
        p.add_argument("--A", type=str,
                       help="offset A; comma-separated list for eta")
        p.add_argument("--b", type=float)
        p.add_argument("--seed", type=int)
        p.add_argument("--grid-angular", dest="grid_angular", type=int)
        p.add_argument("--grid-mmax", dest="grid_mmax", type=int)
        p.add_argument("--grid-interior", dest="grid_interior", type=int)
        p.add_argument("--strip-xmax", dest="strip_xmax", type=float)
        p.add_argument("--strip-samples", dest="strip_samples", type=int)
        p.add_argument("--pairs", type=int)
        p.add_argument("--only", type=str)
        p.add_argument("--radii", type=str,
                       help="comma-separated circle radii for curve images")
        p.add_argument("--out", type=str)
        p.add_argument("--format", type=str, choices=("csv", "json", "png"))
        p.add_argument("--config", type=str)
    return parser


_DISPATCH = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "eta": cmd_eta,
    "grid": cmd_grid,
    "curve": cmd_curve,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        print("resolved config: " + json.dumps(cfg.to_dict(), sort_keys=True))
        return _DISPATCH[cfg.command](cfg)
    except (ConfigError, ParameterError, DomainError, SearchExhaustedError,
            OSError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
