"""Command-line surface: stats, sweep, release, bench and audit.

Exit codes: 0 success, 2 usage/config error, 3 policy refusal (unsafe
mechanism or budget cap).  Randomized commands take --seed; without one a
fresh seed is drawn and printed so the run can be reproduced.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import os
import secrets
import sys
import time
from pathlib import Path

from . import __version__
from .accounting import (
    BudgetLedger,
    compose,
    worst_case_eps,
    zeta_closed_form,
)
from .analytics import geomix_stats, lapmix_stats, standard_stats
from .bench import SimulationConfig, SweepRow, audit_privacy, run_simulation, table_sweep
from .data import QuerySpec, count_query, histogram_query, load_dataset, release, release_to_json
from .errors import PwmixError, UnsafeMechanismError
from .mechanisms import (
    Geometric,
    GeometricMixture,
    Laplace,
    LaplaceMixture,
    MechanismSpec,
    MixtureParams,
    RoundedLaplace,
    TruncatedLaplace,
    ZeroNoise,
    mechanism_label,
)
from .sampling import SeededStream

USAGE_ERROR = 2
POLICY_REFUSAL = 3


def _fail(message: str, code: int = USAGE_ERROR) -> int:
    print(f"pwmix: error: {message}", file=sys.stderr)
    return code


def _spec_from_args(args) -> MechanismSpec:
    return spec_from_dict(
        {
            "kind": args.mechanism,
            "eps": args.eps,
            "reps": args.reps,
            "ct": args.ct,
            "sens": args.sens,
            "unsafe": getattr(args, "unsafe", False),
        }
    )


def spec_from_dict(doc: dict) -> MechanismSpec:
    """Build a mechanism spec from the CLI/config representation.

    Keys: kind (laplace|rlaplace|geometric|lapmix|geomix|trunclap|zero),
    eps, reps (the outer parameter r*eps), ct, sens (default 1), unsafe.
    """
    kind = doc.get("kind")
    eps = doc.get("eps")
    sens = doc.get("sens") or 1.0
    if kind == "zero":
        return ZeroNoise()
    if eps is None:
        raise PwmixError(f"mechanism {kind!r} requires --eps")
    if kind == "laplace":
        return Laplace(scale=sens / eps)
    if kind == "rlaplace":
        return RoundedLaplace(scale=sens / eps)
    if kind == "geometric":
        return Geometric(alpha=math.exp(eps / sens))
    if kind == "trunclap":
        if doc.get("ct") is None:
            raise PwmixError("trunclap requires --ct as the truncation bound")
        return TruncatedLaplace(
            scale=sens / eps, bound=float(doc["ct"]), allow_unsafe=bool(doc.get("unsafe"))
        )
    if kind in ("lapmix", "geomix"):
        if doc.get("reps") is None or doc.get("ct") is None:
            raise PwmixError(f"{kind} requires --reps and --ct")
        params = MixtureParams(
            epsilon=eps, ratio=float(doc["reps"]) / eps, break_point=float(doc["ct"]), sensitivity=sens
        )
        return LaplaceMixture(params) if kind == "lapmix" else GeometricMixture(params)
    raise PwmixError(f"unknown mechanism kind {kind!r}")


def _add_mechanism_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--mechanism",
        required=True,
        choices=["laplace", "rlaplace", "geometric", "lapmix", "geomix", "trunclap", "zero"],
    )
    p.add_argument("--eps", type=float, help="inner privacy parameter epsilon")
    p.add_argument("--reps", type=float, help="outer privacy parameter r*eps (mixtures)")
    p.add_argument("--ct", type=float, help="break-point (mixtures) or truncation bound")
    p.add_argument("--sens", type=float, default=1.0, help="l1 sensitivity (default 1)")


def _seed_from_args(args) -> int:
    if args.seed is not None:
        return int(args.seed)
    seed = secrets.randbits(63)
    print(f"pwmix: generated seed {seed} (pass --seed {seed} to reproduce)", file=sys.stderr)
    return seed


# ---------------------------------------------------------------------------
# stats


def _cmd_stats(args) -> int:
    spec = _spec_from_args(args)
    if isinstance(spec, LaplaceMixture):
        stats = lapmix_stats(spec.params)
    elif isinstance(spec, GeometricMixture):
        stats = geomix_stats(spec.params)
    elif isinstance(spec, (Laplace, Geometric)):
        stats = standard_stats(spec)
    elif isinstance(spec, RoundedLaplace):
        stats = standard_stats(Laplace(spec.scale))
    else:
        return _fail(f"no closed-form stats for {mechanism_label(spec)}")
    zeta = zeta_closed_form(spec)
    row = {
        "mechanism": mechanism_label(spec),
        "mean_abs_noise": stats.mean_abs_noise,
        "variance": stats.variance,
        "entropy": stats.entropy,
        "zeta": zeta,
        "worst_case_eps": worst_case_eps(spec),
    }
    if args.format == "json":
        print(json.dumps(row, sort_keys=True))
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(row))
        writer.writeheader()
        writer.writerow({k: (f"{v:.6g}" if isinstance(v, float) else v) for k, v in row.items()})
    return 0


# ---------------------------------------------------------------------------
# sweep


def _cmd_sweep(args) -> int:
    if args.table1:
        grid = None
    elif args.grid:
        try:
            doc = json.loads(Path(args.grid).read_text())
            grid = [(float(ct), float(eps), float(reps)) for ct, eps, reps in doc]
        except (OSError, ValueError, TypeError) as exc:
            return _fail(f"malformed grid file: {exc}")
    else:
        return _fail("pass --table1 or --grid FILE")
    rows = table_sweep(grid)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(SweepRow.FIELDS)
        for row in rows:
            writer.writerow([f"{v:.6g}" for v in row.as_tuple()])
    finally:
        if args.out:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# release


def _parse_query(text: str) -> tuple[tuple[str, str], ...]:
    preds = []
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise PwmixError(f"predicate {part!r} is not of the form attr=value")
        attr, value = part.split("=", 1)
        preds.append((attr.strip(), value.strip()))
    return tuple(preds)


def _load_ledger(path: Path) -> list[dict]:
    if not path.exists():
        return []
    return json.loads(path.read_text())


def _store_ledger(path: Path, entries: list[dict]) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(entries, indent=2, sort_keys=True) + "\n")
    os.replace(tmp, path)


def _cmd_release(args) -> int:
    try:
        ds = load_dataset(args.data, header=not args.no_header)
    except (OSError, PwmixError) as exc:
        return _fail(f"cannot load dataset: {exc}")
    spec = _spec_from_args(args)
    if isinstance(spec, TruncatedLaplace) and not spec.allow_unsafe:
        return _fail(
            "trunclap has unbounded privacy loss and is not differentially private; "
            "pass --unsafe to release anyway",
            POLICY_REFUSAL,
        )
    seed = _seed_from_args(args)
    stream = SeededStream(seed)

    if args.hist:
        hist = histogram_query(ds, args.hist)
        cells = sorted(hist)
        truth = [hist[c] for c in cells]
        query_desc = f"histogram({args.hist})"
        zeta_unit = zeta_closed_form(spec)
        charge = zeta_unit if args.charge_mode == "parallel" else zeta_unit * len(cells)
        rel = release(truth, spec, stream)
        doc = release_to_json(rel, query=query_desc, zeta_charged=charge, reveal_true=args.reveal_true)
        doc["cells"] = cells
        doc["charge_mode"] = args.charge_mode
    else:
        q = QuerySpec(predicates=_parse_query(args.query or ""), kind="count")
        truth = count_query(ds, q)
        query_desc = args.query or "(all rows)"
        charge = zeta_closed_form(spec)
        rel = release(truth, spec, stream)
        doc = release_to_json(rel, query=query_desc, zeta_charged=charge, reveal_true=args.reveal_true)
    doc["seed"] = seed

    if args.ledger:
        path = Path(args.ledger)
        entries = _load_ledger(path)
        ledger = BudgetLedger(tuple((e["label"], float(e["zeta"])) for e in entries))
        if not math.isfinite(charge):
            return _fail(
                f"{mechanism_label(spec)} has unbounded budget; refusing to charge a ledger",
                POLICY_REFUSAL,
            )
        if args.budget_cap is not None and ledger.total + charge > args.budget_cap:
            return _fail(
                f"budget cap {args.budget_cap} would be exceeded "
                f"(spent {ledger.total:.6g}, charge {charge:.6g})",
                POLICY_REFUSAL,
            )
        label = f"{mechanism_label(spec)} {query_desc}"
        if args.hist:
            label += f" [{args.charge_mode}]"
        compose(ledger, charge, label)  # validates the charge
        entries.append({"label": label, "zeta": charge, "timestamp": time.time()})
        _store_ledger(path, entries)
        doc["ledger_total"] = sum(e["zeta"] for e in entries)

    print(json.dumps(doc, sort_keys=True))
    return 0


# ---------------------------------------------------------------------------
# bench / audit


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_manifest(out_dir: Path, command: str, config_path: Path, seed: int, outputs: list[str]):
    manifest = {
        "command": command,
        "config_digest": _digest(config_path),
        "master_seed": seed,
        "tool_version": __version__,
        "outputs": sorted(outputs),
    }
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _cmd_bench(args) -> int:
    config_path = Path(args.config)
    try:
        doc = json.loads(config_path.read_text())
        mechanisms = tuple(spec_from_dict(m) for m in doc["mechanisms"])
        samples = int(doc.get("samples_per_cell", 10**6))
        config = SimulationConfig(
            true_counts=tuple(int(n) for n in doc["true_counts"]),
            mechanisms=mechanisms,
            samples_per_cell=samples,
            master_seed=_seed_from_args(args),
            c_t_for_metrics=float(doc["c_t_for_metrics"]),
        )
    except (OSError, KeyError, ValueError, TypeError, PwmixError) as exc:
        return _fail(f"unreadable bench config: {exc!r}")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    report = run_simulation(config)

    report_path = out_dir / "utility_report.json"
    report_path.write_text(json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")
    outputs = [report_path.name]
    with open(out_dir / "error_cdf.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["mechanism", "true_count", "threshold", "probability"])
        for cell in report.cells:
            for t, p in cell.error_cdf.items():
                w.writerow([cell.mechanism, cell.true_count, t, f"{p:.6g}"])
    outputs.append("error_cdf.csv")
    with open(out_dir / "within_bound.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["mechanism", "true_count", "within_bound_fraction"])
        for cell in report.cells:
            w.writerow([cell.mechanism, cell.true_count, f"{cell.within_bound:.6g}"])
    outputs.append("within_bound.csv")
    with open(out_dir / "mre.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["mechanism", "true_count", "mean_relative_error"])
        for cell in report.cells:
            w.writerow([cell.mechanism, cell.true_count, f"{cell.mre:.6g}"])
    outputs.append("mre.csv")
    _write_manifest(out_dir, "bench", config_path, config.master_seed, outputs)
    return 0


def _random_queries(ds, n_queries: int, rng) -> list[QuerySpec]:
    """Random two-attribute conjunctions: attributes uniform, then an observed value."""
    queries = []
    attrs = list(ds.schema)
    for _ in range(n_queries):
        a, b = rng.choice(len(attrs), size=2, replace=False)
        preds = []
        for ai in (a, b):
            col = ds.column(attrs[int(ai)])
            values = sorted(set(col.tolist()))
            preds.append((attrs[int(ai)], values[int(rng.integers(0, len(values)))]))
        queries.append(QuerySpec(predicates=tuple(preds), kind="count"))
    return queries


def _cmd_audit(args) -> int:
    config_path = Path(args.config)
    try:
        doc = json.loads(config_path.read_text())
        data_path = doc["data"]
        spec = spec_from_dict(doc["mechanism"])
        trials = int(doc.get("trials", 10**6))
        ds = load_dataset(data_path, header=bool(doc.get("header", True)))
    except (OSError, KeyError, ValueError, TypeError, PwmixError) as exc:
        return _fail(f"unreadable audit config: {exc!r}")
    seed = _seed_from_args(args)
    stream = SeededStream(seed)
    try:
        queries = _random_queries(ds, int(doc.get("n_queries", 100)), stream.derive(99).generator)
        report = audit_privacy(
            ds,
            queries,
            spec,
            trials,
            stream,
            max_records=int(doc.get("max_records", 200)),
            queries_per_record=int(doc.get("queries_per_record", 100)),
        )
    except UnsafeMechanismError as exc:
        return _fail(str(exc), POLICY_REFUSAL)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    report_path = out_dir / "privacy_audit.json"
    report_path.write_text(json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")
    _write_manifest(out_dir, "audit", config_path, seed, [report_path.name])
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwmix",
        description="Piecewise-mixture differential privacy toolkit",
    )
    parser.add_argument("--version", action="version", version=f"pwmix {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="closed-form noise stats and privacy budget")
    _add_mechanism_flags(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("sweep", help="metrics sweep over a (ct, eps, r*eps) grid")
    p.add_argument("--table1", action="store_true", help="use the built-in reference grid")
    p.add_argument("--grid", help="JSON file with a list of [ct, eps, reps] triples")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("release", help="noisy count or histogram release")
    p.add_argument("--data", required=True, help="CSV dataset path")
    p.add_argument("--no-header", action="store_true", help="treat the first row as data")
    p.add_argument("--query", help='conjunctive predicates "attr=val[,attr=val]"')
    p.add_argument("--hist", help="histogram over this attribute")
    _add_mechanism_flags(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--ledger", help="JSON budget ledger to charge (atomic rewrite)")
    p.add_argument("--budget-cap", type=float, help="refuse once the ledger would pass this total")
    p.add_argument("--reveal-true", action="store_true", help="include the true value in output")
    p.add_argument("--unsafe", action="store_true", help="allow the non-private trunclap")
    p.add_argument("--charge-mode", choices=["parallel", "sequential"], default="parallel")
    p.set_defaults(func=_cmd_release)

    p = sub.add_parser("bench", help="Monte Carlo utility benchmark")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("audit", help="empirical privacy-loss audit on a dataset")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_audit)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsafeMechanismError as exc:
        return _fail(str(exc), POLICY_REFUSAL)
    except PwmixError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
