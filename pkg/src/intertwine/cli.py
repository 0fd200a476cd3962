"""Command-line front end.

Three subcommands:

    intertwine verify    -- run the verification matrix, emit a report
    intertwine spectrum  -- build spectra by operator chains, emit a table
    intertwine oracle    -- finite-difference cross-check of closed forms

Exit codes: 0 all checks pass, 1 a check failed, 2 usage/config error.
Reports are deterministic for a fixed config and seed; wall-clock data is
confined to the separate "timing" block so the results array is diffable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from datetime import datetime, timezone

from . import models, oracle, verify
from .models import ModelId, ParameterSet

_MODEL_NAMES = [m.value for m in ModelId]


def _parse_models(values):
    if not values:
        return tuple(ModelId)
    out = []
    for v in values:
        try:
            out.append(ModelId(v))
        except ValueError:
            raise SystemExit(_usage_error(
                f"unknown model {v!r}; choose from {', '.join(_MODEL_NAMES)}"))
    return tuple(out)


def _usage_error(msg):
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _override_params(args, selected):
    """One explicit ParameterSet when any of --m/--g/--l/--omega is given."""
    given = {k: getattr(args, k) for k in ("m", "g", "l", "omega")
             if getattr(args, k) is not None}
    if not given:
        return None
    if len(selected) != 1:
        raise SystemExit(_usage_error(
            "parameter overrides need exactly one --model"))
    p = ParameterSet(m=args.m, g=args.g, ell=args.l, omega=args.omega)
    try:
        models.validate_params(selected[0], p)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))
    return {selected[0]: (p,)}


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_payload(run_config, rows, extra=None):
    passed = sum(1 for r in rows if r["pass"])
    payload = {
        "run_config": run_config,
        "results": rows,
        "summary": {"total": len(rows), "passed": passed,
                    "failed": len(rows) - passed},
    }
    if extra:
        payload.update(extra)
    return payload


def _finalize(payload, t0):
    payload["timing"] = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "wall_time_s": time.perf_counter() - t0,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _reports_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["relation_id", "model", "params", "n", "check",
                     "residual", "tolerance", "pass"])
    for rep in reports:
        params = ",".join(f"{k}={v:g}" for k, v in sorted(rep.params.items()))
        for key in sorted(rep.residuals):
            writer.writerow([rep.relation_id, rep.model, params, rep.n, key,
                             repr(rep.residuals[key]),
                             repr(rep.tolerances.get(key, "")), rep.passed])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    selected = _parse_models(args.model)
    sets = _override_params(args, selected)
    tolerances = dict(verify.DEFAULT_TOLERANCES)
    for key, flag in (("relation", args.tol_relation),
                      ("mapping", args.tol_mapping),
                      ("arith", args.tol_arith)):
        if flag is not None:
            if flag <= 0:
                return _usage_error("tolerances must be positive")
            tolerances[key] = flag
    cfg = verify.RunConfig(models=selected, n_max=args.nmax, seed=args.seed,
                           tolerances=tolerances, param_sets=sets)
    reports = verify.run_verification_matrix(cfg)
    ok = all(r.passed for r in reports)
    if args.format == "csv":
        _emit(_reports_csv(reports), args.output)
    else:
        run_config = {
            "command": "verify",
            "models": [m.value for m in selected],
            "n_max": args.nmax,
            "seed": args.seed,
            "tolerances": tolerances,
            "param_overrides": {k: v for k, v in
                                (("m", args.m), ("g", args.g), ("l", args.l),
                                 ("omega", args.omega)) if v is not None},
        }
        payload = _json_payload(run_config, [r.row() for r in reports])
        _emit(_finalize(payload, t0), args.output)
    return 0 if ok else 1


def cmd_spectrum(args) -> int:
    t0 = time.perf_counter()
    selected = _parse_models(args.model or ["hydrogen"])
    if len(selected) != 1:
        return _usage_error("spectrum works on exactly one model")
    model = selected[0]
    sets = _override_params(args, selected)
    p = sets[model][0] if sets else models.DEFAULT_PARAMETER_SETS[model][0]
    n_top = args.nmax
    note = None
    count = models.bound_state_count(model, p)
    if math.isfinite(count) and n_top >= count:
        n_top = int(count) - 1
        note = f"spectrum truncated at n={n_top} (bound-state count {int(count)})"
    rep = verify.ladder_construct_spectrum(model, p, n_top)
    rows = rep.details["levels"]
    if args.format == "json":
        run_config = {"command": "spectrum", "model": model.value,
                      "params": p.as_dict(), "n_max": args.nmax, "seed": args.seed}
        payload = _json_payload(run_config, [rep.row()])
        if note:
            payload["note"] = note
        _emit(_finalize(payload, t0), args.output)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "E_direct", "E_chain", "overlap"])
        for row in rows:
            writer.writerow([row["n"], repr(row["E_direct"]),
                             repr(row["E_chain"]), repr(row["overlap"])])
        _emit(buf.getvalue(), args.output)
        if note:
            print(note, file=sys.stderr)
    return 0 if rep.passed else 1


def cmd_oracle(args) -> int:
    t0 = time.perf_counter()
    selected = _parse_models(args.model)
    if args.k < 1:
        return _usage_error("--k must be at least 1 (nothing to compute otherwise)")
    sets = _override_params(args, selected)
    try:
        cfg = oracle.GridConfig(ns=tuple(args.grid) if args.grid else None,
                                levels=args.levels, seed=args.seed)
    except ValueError as exc:
        return _usage_error(str(exc))
    reports = []
    for model in selected:
        param_sets = (sets or models.ORACLE_PARAMETER_SETS)[model]
        for p in param_sets:
            reports.append(oracle.compare_with_closed_form(model, p, args.k, cfg))
    ok = all(r.passed for r in reports)
    if args.format == "csv":
        _emit(_reports_csv(reports), args.output)
    else:
        run_config = {"command": "oracle", "models": [m.value for m in selected],
                      "k": args.k, "grids": list(args.grid or []),
                      "levels": args.levels, "seed": args.seed}
        payload = _json_payload(run_config, [r.row() for r in reports])
        _emit(_finalize(payload, t0), args.output)
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="intertwine",
        description="Certify the operator identities, eigenstate mappings and "
                    "spectra of five exactly solvable quantum models.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default):
        sp.add_argument("--model", action="append", metavar="NAME",
                        help=f"restrict to a model ({', '.join(_MODEL_NAMES)}); repeatable")
        sp.add_argument("--m", type=float, help="mass override")
        sp.add_argument("--g", type=float, help="coupling override")
        sp.add_argument("--l", type=float, help="angular parameter override")
        sp.add_argument("--omega", type=float, help="frequency override")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("json", "csv"), default=fmt_default)
        sp.add_argument("--output", metavar="PATH", help="write report here "
                        "instead of stdout")

    sp = sub.add_parser("verify", help="run the verification matrix")
    common(sp, "json")
    sp.add_argument("--nmax", type=int, default=8, metavar="N",
                    help="highest level index exercised (default 8)")
    sp.add_argument("--tol-relation", type=float, dest="tol_relation")
    sp.add_argument("--tol-mapping", type=float, dest="tol_mapping")
    sp.add_argument("--tol-arith", type=float, dest="tol_arith")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("spectrum", help="construct spectra by operator chains")
    common(sp, "csv")
    sp.add_argument("--nmax", type=int, default=5, metavar="N",
                    help="highest level to construct (default 5)")
    sp.set_defaults(fn=cmd_spectrum)

    sp = sub.add_parser("oracle", help="finite-difference cross-validation")
    common(sp, "json")
    sp.add_argument("--k", type=int, default=4,
                    help="number of levels per model (default 4)")
    sp.add_argument("--grid", action="append", type=int, metavar="N",
                    help="explicit interior grid size; repeat for several levels")
    sp.add_argument("--levels", type=int, default=3,
                    help="nested refinement levels when --grid is not given")
    sp.set_defaults(fn=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
