"""Command-line driver: audits, certification runs, bounds, comparisons.

Subcommands
-----------
``audit``    evaluate one inequality over a grid, samples, or one point and
             emit margin records (CSV or JSON)
``certify``  run both complete-monotonicity certification routes on a ratio
             family and emit the combined report as JSON
``bounds``   print a special-function value next to its registered bounds
``compare``  rank bounds sharing one left-hand expression over a grid

Exit codes: 0 success / everything holds; 1 usage, config, or domain
error; 2 a violation was found; 3 certification inconclusive.

Output is deterministic: identical configuration (including seed) yields
byte-identical files.  Floats are serialized with 17 significant digits,
which round-trips doubles exactly.  The sampling seed resolves as
``--seed`` flag, then config file, then the ``CMGAMMA_SEED`` environment
variable, then 42.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import inequalities as iq
from .cm_certify import CertConfig, certify_cm_finite_diff, certify_log_cm
from .errors import DomainError, UsageError
from .kernels import Majorized, MultiParam, Symmetric, TwoParam

__all__ = ["RunConfig", "main", "cmd_audit", "cmd_certify", "cmd_bounds",
           "cmd_compare"]

_DEFAULT_SEED = 42
_NUDGE = 1e-9

_FAMILY_KINDS = {
    "two-param": (TwoParam, ("a", "b")),
    "multi-param": (MultiParam, ("a",)),
    "majorized": (Majorized, ("a", "b")),
    "symmetric": (Symmetric, ("a",)),
}

# bounds targets: point coordinate names, primary ids, reference ids
_BOUNDS_TARGETS = {
    "wallis": (("z",), ("WALLIS_LB", "WALLIS_UB"), ()),
    "wallis-shift": (("z",), ("WALLIS_SHIFT_LB", "WALLIS_SHIFT_UB"), ()),
    "sym": (("a", "z"), ("SYM_SANDWICH_LB", "SYM_SANDWICH_UB"), ()),
    "half": (("z",), ("HALF_SANDWICH_LB", "HALF_SANDWICH_UB"), ()),
    "beta": (("a", "b"), ("BETA_UB",), ("BETA_UB_DRAGOMIR",)),
    "dup": (("a",), ("DUP_SANDWICH_LB", "DUP_SANDWICH_UB"), ()),
    "inq58": (("a", "z"), ("INQ58",),
              ("INQ58_BASE_RATIO", "INQ58_BASE_SHIFT")),
}


def _fmt(v) -> str:
    return format(float(v), ".17g")


def _fmt_list(vals) -> str:
    return ";".join(_fmt(v) for v in vals)


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    count: int
    spacing: str = "linear"

    def build(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)


@dataclass(frozen=True)
class RunConfig:
    command: str
    ids: tuple = ()
    family: str | None = None
    target: str | None = None
    params: dict | None = None
    grid: GridSpec | None = None
    samples: int | None = None
    seed: int = _DEFAULT_SEED
    out: str | None = None
    fmt: str | None = None
    tol: float = iq.HOLDS_TOL
    n_max: int = 8
    fd_step: float = 1e-2


# -- config parsing -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # exit code 1 on bad flags, message on stderr, no SystemExit(2)
    def error(self, message):
        raise UsageError(message)


def _parse_params(text: str) -> dict:
    """'a=0.5,b=0.7' -> {'a': 0.5, 'b': 0.7}; ';' separates list entries."""
    out = {}
    if not text:
        return out
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise UsageError(f"malformed parameter {chunk!r}, want name=value")
        name, _, val = chunk.partition("=")
        name = name.strip()
        try:
            if ";" in val:
                parsed = [float(v) for v in val.split(";") if v.strip()]
            else:
                parsed = float(val)
        except ValueError:
            raise UsageError(
                f"malformed value for parameter {name!r}: {val!r}") from None
        if name in out:
            raise UsageError(f"parameter {name!r} given twice")
        out[name] = parsed
    return out


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise UsageError(
            f"malformed grid {text!r}, want min:max:count[:log]")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise UsageError(f"malformed grid {text!r}") from None
    spacing = parts[3].strip().lower() if len(parts) == 4 else "linear"
    if spacing not in ("linear", "log"):
        raise UsageError(f"grid spacing must be linear or log, got {spacing!r}")
    if count < 1:
        raise UsageError(f"grid count must be >= 1, got {count}")
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise UsageError(f"grid bounds must be finite with min <= max")
    if spacing == "log" and lo <= 0:
        raise UsageError("log spacing needs min > 0")
    return GridSpec(lo=lo, hi=hi, count=count, spacing=spacing)


def _resolve_seed(flag_val, config_val):
    for v in (flag_val, config_val, os.environ.get("CMGAMMA_SEED")):
        if v is None:
            continue
        try:
            return int(v)
        except (TypeError, ValueError):
            raise UsageError(f"seed must be an integer, got {v!r}") from None
    return _DEFAULT_SEED


def _build_config(args) -> RunConfig:
    filecfg = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                filecfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config!r}: {exc}")
        if not isinstance(filecfg, dict):
            raise UsageError("config file must hold a JSON object")

    def pick(flag, key):
        return flag if flag is not None else filecfg.get(key)

    ids_text = pick(args.id, "id")
    ids = tuple(s.strip() for s in ids_text.split(",") if s.strip()) \
        if ids_text else ()
    params_val = pick(args.params, "params")
    if isinstance(params_val, dict):
        params = dict(params_val)
    else:
        params = _parse_params(params_val or "")
    # a point source given as a flag displaces any config point source
    if args.grid is not None or args.samples is not None:
        grid_val, samples = args.grid, args.samples
    else:
        grid_val, samples = filecfg.get("grid"), filecfg.get("samples")
    grid = _parse_grid(grid_val) if grid_val else None
    if samples is not None:
        samples = int(samples)
        if samples < 1:
            raise UsageError(f"sample count must be >= 1, got {samples}")
    tol = pick(args.tol, "tol")
    tol = iq.HOLDS_TOL if tol is None else float(tol)
    if not (math.isfinite(tol) and tol > 0):
        raise UsageError(f"tolerance must be positive, got {tol!r}")
    n_max = pick(getattr(args, "n_max", None), "n_max")
    n_max = 8 if n_max is None else int(n_max)
    fd_step = pick(getattr(args, "fd_step", None), "fd_step")
    fd_step = 1e-2 if fd_step is None else float(fd_step)
    fmt = pick(args.format, "format")
    if fmt is not None and fmt not in ("csv", "json"):
        raise UsageError(f"format must be csv or json, got {fmt!r}")
    return RunConfig(
        command=args.command,
        ids=ids,
        family=pick(getattr(args, "family", None), "family"),
        target=getattr(args, "target", None) or filecfg.get("target"),
        params=params,
        grid=grid,
        samples=samples,
        seed=_resolve_seed(args.seed, filecfg.get("seed")),
        out=pick(args.out, "out"),
        fmt=fmt,
        tol=tol,
        n_max=n_max,
        fd_step=fd_step,
    )


def _make_parser() -> _Parser:
    parser = _Parser(prog="cmgamma",
                     description="gamma-ratio monotonicity and inequality "
                                 "audit toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, family=False, target=False):
        sp.add_argument("--params", default=None,
                        help="name=value pairs, comma separated; use ';' "
                             "between entries of a list value")
        sp.add_argument("--grid", default=None, help="min:max:count[:log]")
        sp.add_argument("--samples", type=int, default=None,
                        help="number of random in-domain points")
        sp.add_argument("--seed", default=None,
                        help="sampling seed (default: CMGAMMA_SEED or 42)")
        sp.add_argument("--out", default=None, help="output file path")
        sp.add_argument("--format", default=None, choices=("csv", "json"))
        sp.add_argument("--tol", type=float, default=None,
                        help="margin tolerance (default 1e-9)")
        sp.add_argument("--config", default=None,
                        help="JSON config file; flags win on conflict")
        if family:
            sp.add_argument("--family", default=None,
                            choices=sorted(_FAMILY_KINDS))
            sp.add_argument("--n-max", dest="n_max", type=int, default=None)
            sp.add_argument("--fd-step", dest="fd_step", type=float,
                            default=None)

    sp = sub.add_parser("audit", help="sweep one inequality, emit margins")
    sp.add_argument("--id", default=None, help="inequality id")
    common(sp)

    sp = sub.add_parser("certify",
                        help="certify complete monotonicity of a family")
    sp.add_argument("--id", default=None, help=argparse.SUPPRESS)
    common(sp, family=True)

    sp = sub.add_parser("bounds",
                        help="show a value next to its registered bounds")
    sp.add_argument("target", nargs="?", default=None,
                    help="which bounded quantity to show: "
                         + "|".join(sorted(_BOUNDS_TARGETS)))
    sp.add_argument("--id", default=None, help=argparse.SUPPRESS)
    common(sp)

    sp = sub.add_parser("compare", help="rank bounds sharing one LHS")
    sp.add_argument("--id", default=None,
                    help="comma-separated inequality ids")
    common(sp)
    return parser


# -- shared helpers -----------------------------------------------------------

def _case_params_and_point(case, mapping):
    """Split a name=value mapping into case parameters and an optional
    explicit point (when every point coordinate is present)."""
    mapping = dict(mapping or {})
    flat = []
    for name in case.param_names:
        key = name.rstrip("[]")
        if key not in mapping:
            raise UsageError(
                f"{case.id} needs parameter {key!r} (have: "
                f"{', '.join(sorted(mapping)) or 'none'})")
        val = mapping.pop(key)
        flat.extend(val if isinstance(val, list) else [val])
    point = None
    point_keys = [k for k in mapping if k in case.point_names]
    if point_keys:
        missing = [n for n in case.point_names if n not in mapping]
        if missing:
            raise UsageError(
                f"point for {case.id} needs all of "
                f"{'/'.join(case.point_names)}; missing {missing[0]!r}")
        point = tuple(float(mapping.pop(n)) for n in case.point_names)
    if mapping:
        raise UsageError(
            f"unknown parameter {sorted(mapping)[0]!r} for {case.id}")
    return tuple(float(v) for v in flat), point


def _grid_points(case, params, spec):
    """Grid for a case: the axis itself for 1-d points, the cartesian
    square for 2-d points.  1-d points sitting just outside an open
    boundary are nudged up by 1e-9 when that puts them inside."""
    axis = spec.build()
    dim = len(case.point_names)
    if dim == 1:
        pts = [(float(z),) for z in axis]
    elif dim == 2:
        pts = [(float(u), float(v)) for u in axis for v in axis]
    else:
        raise UsageError(f"{case.id} needs {dim}-coordinate points")
    nudged = 0
    if dim == 1:
        fixed = []
        for (z,) in pts:
            if (case.domain_violation(params, (z,)) is not None
                    and case.domain_violation(params, (z + _NUDGE,)) is None):
                fixed.append((z + _NUDGE,))
                nudged += 1
            else:
                fixed.append((z,))
        pts = fixed
    return pts, nudged


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary(line: str, out_path):
    # keep stdout clean for piped reports; file output frees stdout
    stream = sys.stdout if out_path else sys.stderr
    print(line, file=stream)


def _records_csv(records, tol) -> str:
    lines = ["id,params,point,lhs_log,rhs_log,margin,holds"]
    for r in records:
        lines.append(",".join([
            r.id, _fmt_list(r.params), _fmt_list(r.point), _fmt(r.lhs_log),
            _fmt(r.rhs_log), _fmt(r.margin),
            "true" if r.margin >= -tol else "false"]))
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, allow_nan=True) + "\n"


# -- subcommands ---------------------------------------------------------------

def cmd_audit(cfg: RunConfig) -> int:
    if len(cfg.ids) != 1:
        raise UsageError("audit needs exactly one --id")
    case = iq.get_case(cfg.ids[0])
    params, explicit_point = _case_params_and_point(case, cfg.params)
    reason = case.params_ok(params)
    if reason is not None:
        raise DomainError(f"{case.id}: {reason}")

    sources = sum(x is not None
                  for x in (explicit_point, cfg.grid, cfg.samples))
    if sources == 0:
        raise UsageError("audit needs --grid, --samples, or explicit point "
                         "coordinates in --params")
    if sources > 1:
        raise UsageError("give exactly one of --grid, --samples, or an "
                         "explicit point")

    nudged = 0
    if explicit_point is not None:
        # single asserted point: out-of-domain is an error, not a skip
        value = iq.margin(case.id, params, explicit_point)
        lhs, rhs = case.sides(params, [explicit_point])
        total = 1
        records = [iq.SweepRecord(
            id=case.id, params=params, point=explicit_point,
            lhs_log=float(lhs[0]), rhs_log=float(rhs[0]), margin=value,
            holds=bool(value >= -cfg.tol))]
    else:
        if cfg.grid is not None:
            pts, nudged = _grid_points(case, params, cfg.grid)
        else:
            rng = np.random.default_rng(cfg.seed)
            pts = [tuple(p) for p in
                   case.sample_points(rng, params, cfg.samples)]
        total = len(pts)
        records = iq.sweep(case.id, params, pts)

    skipped = total - len(records)
    all_hold = all(r.margin >= -cfg.tol for r in records)
    worst = min(records, key=lambda r: r.margin) if records else None

    fmt = cfg.fmt or "csv"
    if fmt == "csv":
        _emit(_records_csv(records, cfg.tol), cfg.out)
    else:
        payload = {
            "command": "audit", "id": case.id, "params": list(params),
            "tol": cfg.tol, "seed": cfg.seed,
            "records": [
                {**r.to_dict(), "holds": bool(r.margin >= -cfg.tol)}
                for r in records],
            "summary": {
                "points": len(records), "skipped": skipped, "nudged": nudged,
                "all_hold": all_hold,
                "min_margin": worst.margin if worst else None,
                "worst_point": list(worst.point) if worst else None,
            },
        }
        _emit(_json_text(payload), cfg.out)

    worst_text = (f" min_margin={_fmt(worst.margin)} "
                  f"worst_point={_fmt_list(worst.point)}") if worst else ""
    _summary(f"audit id={case.id} points={len(records)} skipped={skipped}"
             f" nudged={nudged}{worst_text} "
             f"{'all hold' if all_hold else 'VIOLATION'}", cfg.out)
    return 0 if all_hold else 2


def _family_from_config(cfg: RunConfig):
    if not cfg.family:
        raise UsageError("certify needs --family "
                         f"({'|'.join(sorted(_FAMILY_KINDS))})")
    ctor, names = _FAMILY_KINDS[cfg.family]
    mapping = dict(cfg.params or {})
    args = []
    for name in names:
        if name not in mapping:
            raise UsageError(f"family {cfg.family!r} needs parameter "
                             f"{name!r} in --params")
        val = mapping.pop(name)
        if ctor in (MultiParam, Majorized):
            val = val if isinstance(val, list) else [val]
        args.append(val)
    if mapping:
        raise UsageError(f"unknown parameter {sorted(mapping)[0]!r} for "
                         f"family {cfg.family!r}")
    return ctor(*args)


def cmd_certify(cfg: RunConfig) -> int:
    if cfg.fmt == "csv":
        raise UsageError("certify emits a JSON report; use --format json")
    fam = _family_from_config(cfg)
    if cfg.grid is None:
        raise UsageError("certify needs --grid min:max:count[:log]")
    cert_cfg = CertConfig(z_grid=tuple(cfg.grid.build()), n_max=cfg.n_max,
                          tol=cfg.tol, fd_step=cfg.fd_step)
    log_report = certify_log_cm(fam, cert_cfg)
    fd_report = certify_cm_finite_diff(fam, cert_cfg)
    verdicts = (log_report.verdict, fd_report.verdict)
    if "violated" in verdicts:
        combined = "violated"
    elif "inconclusive" in verdicts:
        combined = "inconclusive"
    else:
        combined = "certified"
    payload = {
        "command": "certify",
        "family": {"kind": fam.kind, **fam.params_dict()},
        "verdict": combined,
        "routes": {"log_cm": log_report.to_dict(),
                   "finite_diff": fd_report.to_dict()},
    }
    _emit(_json_text(payload), cfg.out)
    _summary(f"certify family={fam.kind} verdict={combined} "
             f"(log-cm {log_report.verdict}, finite-diff "
             f"{fd_report.verdict})", cfg.out)
    return {"certified": 0, "violated": 2, "inconclusive": 3}[combined]


def cmd_bounds(cfg: RunConfig) -> int:
    if cfg.target not in _BOUNDS_TARGETS:
        raise UsageError(
            f"bounds needs a target ({'|'.join(sorted(_BOUNDS_TARGETS))})"
            + (f", got {cfg.target!r}" if cfg.target else ""))
    if cfg.fmt == "csv":
        raise UsageError("bounds prints text or JSON; use --format json")
    coord_names, primary_ids, reference_ids = _BOUNDS_TARGETS[cfg.target]
    mapping = dict(cfg.params or {})
    missing = [n for n in coord_names if n not in mapping]
    if missing:
        raise UsageError(f"bounds {cfg.target} needs "
                         f"{'/'.join(coord_names)} in --params")
    extra = [k for k in mapping if k not in coord_names]
    if extra:
        raise UsageError(f"unknown parameter {extra[0]!r} for bounds "
                         f"{cfg.target}")
    coords = {n: float(mapping[n]) for n in coord_names}

    rows = []
    true_value = None
    for case_id in primary_ids + reference_ids:
        case = iq.get_case(case_id)
        params = tuple(coords[n.rstrip("[]")] for n in case.param_names)
        point = tuple(coords[n] for n in case.point_names)
        violation = case.domain_violation(params, point)
        is_ref = case_id in reference_ids
        if violation is not None:
            if not is_ref:
                raise DomainError(f"{case_id}: {violation} "
                                  f"(params={coords!r})")
            rows.append((case_id, case.direction, None, violation))
            continue
        lhs, rhs = case.sides(params, [point])
        if true_value is None:
            true_value = math.exp(lhs[0])
        rows.append((case_id, case.direction, float(np.exp(rhs[0])), None))

    side_name = {"ge": "lower", "le": "upper"}
    ordered = ([r for r in rows if r[1] == "ge"]
               + [None]
               + [r for r in rows if r[1] == "le"])
    if cfg.fmt == "json":
        payload = {
            "command": "bounds", "target": cfg.target, "params": coords,
            "true": true_value,
            "bounds": [
                {"id": rid, "side": side_name[d], "value": val,
                 **({"out_of_domain": msg} if msg else {})}
                for rid, d, val, msg in rows],
        }
        _emit(_json_text(payload), cfg.out)
    else:
        lines = [f"target={cfg.target} "
                 + " ".join(f"{k}={_fmt(v)}" for k, v in coords.items())]
        for row in ordered:
            if row is None:
                lines.append(f"  true   {_fmt(true_value):24s}")
                continue
            rid, d, val, msg = row
            shown = _fmt(val) if val is not None else f"out of domain: {msg}"
            ref = " (reference)" if rid in reference_ids else ""
            lines.append(f"  {side_name[d]:6s} {shown:24s} {rid}{ref}")
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0


def cmd_compare(cfg: RunConfig) -> int:
    if len(cfg.ids) < 2:
        raise UsageError("compare needs --id with two or more "
                         "comma-separated ids")
    cases = [iq.get_case(i) for i in cfg.ids]
    head = cases[0]
    params, explicit_point = _case_params_and_point(head, cfg.params)

    if explicit_point is not None:
        pts = [explicit_point]
        nudged = 0
    elif cfg.grid is not None:
        pts, nudged = _grid_points(head, params, cfg.grid)
    else:
        raise UsageError("compare needs --grid or explicit point "
                         "coordinates in --params")

    results = []
    skipped = 0
    for pt in sorted(pts):
        if any(c.domain_violation(params, pt) is not None for c in cases):
            skipped += 1
            continue
        results.append(iq.tightness_compare(cfg.ids, params, pt))
    if not results and pts:
        # surface the reason instead of an empty report
        first_bad = next(
            (f"{c.id}: {c.domain_violation(params, pts[0])}"
             for c in cases
             if c.domain_violation(params, pts[0]) is not None), None)
        if skipped == len(pts) and explicit_point is not None:
            raise DomainError(f"{first_bad} (point={pts[0]!r})")

    fmt = cfg.fmt or "csv"
    if fmt == "csv":
        header = (["params", "point", "lhs"] + list(cfg.ids) + ["tightest"])
        lines = [",".join(header)]
        for res in results:
            by_id = {e[0]: e[2] for e in res.entries}
            lines.append(",".join(
                [_fmt_list(res.params), _fmt_list(res.point),
                 _fmt(math.exp(res.lhs_log))]
                + [_fmt(by_id[i]) for i in cfg.ids]
                + [res.tightest_id]))
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        payload = {
            "command": "compare", "ids": list(cfg.ids),
            "params": list(params),
            "rows": [r.to_dict() for r in results],
            "summary": {"points": len(results), "skipped": skipped,
                        "nudged": nudged},
        }
        _emit(_json_text(payload), cfg.out)
    _summary(f"compare ids={','.join(cfg.ids)} points={len(results)} "
             f"skipped={skipped} nudged={nudged}", cfg.out)
    return 0


_DISPATCH = {"audit": cmd_audit, "certify": cmd_certify,
             "bounds": cmd_bounds, "compare": cmd_compare}


def main(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _build_config(args)
        return _DISPATCH[cfg.command](cfg)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
