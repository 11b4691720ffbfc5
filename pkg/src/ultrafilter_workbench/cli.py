from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, Sequence

from .config import (
    OUTPUT_FORMATS,
    VERSION,
    RunConfig,
    configure_logging,
    env_node_budget,
    env_seed,
    env_workers,
    get_logger,
)
from .errors import EXIT_OK, EXIT_USAGE, InputFormatError, WorkbenchError
from .extension import choose_max, choose_min, run_theta
from .extraction import METHODS, GALVIN, extract
from .filters import PFilter, is_additive
from .gallery import (
    GALLERY_PARTITION,
    build_X,
    smallest_class_zero_sets,
    verify_no_sum_triple,
    verify_shift_witness,
    x_codes,
)
from .oracles import FSOracle
from .ramsey import fal_partition_regularity_probe, folkman_number
from .report import run_sweep, save_sweep
from .semigroup import FiniteSemigroup, idempotents, is_subsemigroup
from .storage import (
    REPORTS_DIR,
    dumps,
    load_filter,
    load_semigroup,
    load_window,
    parse_int_list,
    resolve_table,
)
from .windows import FSGenerator, WindowSet, fal_level, fs_set

logger = get_logger("cli")

CHOOSERS = {"min": choose_min, "max": choose_max}

Handler = Callable[[argparse.Namespace, RunConfig], Dict[str, Any]]


def _ground_and_filter(args: argparse.Namespace) -> tuple[FiniteSemigroup, PFilter | None]:
    S = load_semigroup(resolve_table(args.table)) if args.table else None
    if args.filter:
        F = load_filter(args.filter, S)
        return F.ground, F
    if S is None:
        raise InputFormatError("--table or --filter is required")
    return S, PFilter.of(S, parse_int_list(args.support, "--support")) if args.support else None


def handle_semigroup(args: argparse.Namespace, cfg: RunConfig) -> Dict[str, Any]:
    S, F = _ground_and_filter(args)
    if args.action == "idempotents":
        return {"semigroup": S.label, "idempotents": idempotents(S).sorted()}
    if F is None:
        raise InputFormatError("--support or --filter is required for this action")
    if args.action == "extend":
        return {"semigroup": S.label, **run_theta(F, CHOOSERS[args.chooser]).to_dict()}
    return {
        "semigroup": S.label,
        "support": F.support.sorted(),
        "additive": is_additive(F),
        "subsemigroup": is_subsemigroup(S, F.support),
    }


def handle_hindman(args: argparse.Namespace, cfg: RunConfig) -> Dict[str, Any]:
    X = FSGenerator.of(parse_int_list(args.gens, "--gens"))
    if not X.elements:
        raise InputFormatError("--gens needs at least one generator")
    horizon = cfg.horizon or sum(X.elements)
    A = load_window(args.set).restrict(horizon) if args.set else fs_set(X, horizon)
    result = extract(A, FSOracle(X), args.k, method=args.method)
    return {"generators": list(X.elements), "horizon": A.horizon, "k": args.k, **result.to_dict()}


def handle_folkman(args: argparse.Namespace, cfg: RunConfig) -> Dict[str, Any]:
    result = folkman_number(args.n, args.r, args.max, budget=cfg.budget, workers=cfg.workers)
    return result.to_dict()


def handle_example33(args: argparse.Namespace, cfg: RunConfig) -> Dict[str, Any]:
    horizon = cfg.horizon or 1 << 16
    if args.action == "build":
        codes = x_codes(horizon, GALLERY_PARTITION)
        X = WindowSet.of(horizon, (c.value for c in codes))
        return {
            **X.to_dict(),
            "count": len(X),
            "codes": [{"F": list(c.F), "G": list(c.G), "value": c.value} for c in codes],
            "partition": GALLERY_PARTITION.to_dict(),
        }
    X = build_X(horizon, GALLERY_PARTITION)
    bases = [parse_int_list(f, "--f0") for f in args.f0] if args.f0 else smallest_class_zero_sets(3)
    witness = fal_level(X, 2, workers=cfg.workers)
    return {
        "horizon": horizon,
        **verify_no_sum_triple(X).to_dict(),
        "shift_witnesses": [verify_shift_witness(F0, horizon, GALLERY_PARTITION, X=X).to_dict() for F0 in bases],
        "fal_level_2": witness.to_dict() if witness else None,
    }


def handle_fal(args: argparse.Namespace, cfg: RunConfig) -> Dict[str, Any]:
    A = load_window(args.set)
    if cfg.horizon:
        A = A.restrict(cfg.horizon)
    witness = fal_level(A, args.k, workers=cfg.workers)
    return {"horizon": A.horizon, "k": args.k, "witness": witness.to_dict() if witness else None}


def handle_probe(args: argparse.Namespace, cfg: RunConfig) -> Dict[str, Any]:
    A = load_window(args.set)
    report = fal_partition_regularity_probe(A, args.r, args.k, args.trials, seed=cfg.seed, budget=cfg.budget)
    return {"ok": report.ok, **report.to_dict()}


def handle_sweep(args: argparse.Namespace, cfg: RunConfig) -> Dict[str, Any]:
    outcomes = run_sweep()
    path = save_sweep(outcomes, Path(args.out))
    return {
        "report": path.as_posix(),
        "ok": all(o.ok for o in outcomes),
        "cases": sum(o.cases for o in outcomes),
        "violations": sum(len(o.violations) for o in outcomes),
        "outcomes": [o.to_dict() for o in outcomes],
    }


def render_text(payload: Dict[str, Any]) -> str:
    lines: list[str] = []
    for key, value in payload.items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{key}:")
            lines.extend(f"  {json.dumps(v, sort_keys=True)}" for v in value)
        elif isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="json", help="Output format")
    parser.add_argument("--seed", type=int, default=env_seed(), help="Seed for sampling probes")
    parser.add_argument("--workers", type=int, default=env_workers(), help="Worker processes for searches")
    parser.add_argument("--budget", type=int, default=env_node_budget(), help="Node budget for exhaustive searches")
    parser.add_argument("--horizon", type=int, help="Window horizon override")
    parser.add_argument("--no-timing", action="store_true", help="Emit elapsed_ms as null")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Filter algebra and finite-sums workbench")
    parser.add_argument("--version", action="version", version=VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    p_sg = sub.add_parser("semigroup", help="Idempotents, additivity and idempotent extension on a Cayley table")
    p_sg.add_argument("action", choices=["idempotents", "extend", "check-additive"])
    p_sg.add_argument("--table", help="Cayley table JSON ({\"n\", \"table\"})")
    given = p_sg.add_mutually_exclusive_group()
    given.add_argument("--support", help="Filter support, e.g. 0,2,4")
    given.add_argument("--filter", help="Filter JSON, @file ({\"semigroup\": table, \"support\": [...]})")
    p_sg.add_argument("--chooser", choices=sorted(CHOOSERS), default="min", help="Element choice rule for extend")
    _common(p_sg)
    p_sg.set_defaults(func=handle_semigroup)

    p_h = sub.add_parser("hindman", help="Extract an FS witness with the FS_X oracle")
    p_h.add_argument("action", choices=["extract"])
    p_h.add_argument("--gens", required=True, help="Generators x1<x2<..., e.g. 1,2,4,8")
    p_h.add_argument("--k", type=int, default=3, help="Witness size")
    p_h.add_argument("--method", choices=METHODS, default=GALVIN)
    p_h.add_argument("--set", help="Target window (@file); default FS(gens)")
    _common(p_h)
    p_h.set_defaults(func=handle_hindman)

    p_f = sub.add_parser("folkman", help="Least N with a monochromatic FS(S), |S| = n, in every r-coloring")
    p_f.add_argument("--n", type=int, required=True)
    p_f.add_argument("--r", type=int, required=True)
    p_f.add_argument("--max", type=int, required=True, help="Largest N to try")
    _common(p_f)
    p_f.set_defaults(func=handle_folkman)

    p_x = sub.add_parser("example33", help="Build and verify the additive, non-idempotent filter's set X")
    p_x.add_argument("action", choices=["build", "verify"])
    p_x.add_argument("--f0", action="append", help="Class-0 set F0 for the shift check (repeatable)")
    _common(p_x)
    p_x.set_defaults(func=handle_example33)

    p_fal = sub.add_parser("fal", help="Search a k-level FAL witness in a window")
    p_fal.add_argument("--set", required=True, help="Window JSON, @file")
    p_fal.add_argument("--k", type=int, required=True)
    _common(p_fal)
    p_fal.set_defaults(func=handle_fal)

    p_p = sub.add_parser("probe", help="Sample r-partitions of a window for FAL pieces")
    p_p.add_argument("--set", required=True, help="Window JSON, @file")
    p_p.add_argument("--r", type=int, required=True)
    p_p.add_argument("--k", type=int, required=True)
    p_p.add_argument("--trials", type=int, default=20)
    _common(p_p)
    p_p.set_defaults(func=handle_probe)

    p_s = sub.add_parser("sweep", help="Run the exhaustive filter-algebra sweeps and write a report")
    p_s.add_argument("--out", default=str(REPORTS_DIR), help="Report directory")
    _common(p_s)
    p_s.set_defaults(func=handle_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    inputs = tuple(v for v in (getattr(args, name, None) for name in ("table", "filter", "set")) if v)
    try:
        cfg = RunConfig(
            subcommand=args.command,
            inputs=inputs,
            horizon=args.horizon,
            budget=args.budget,
            output=args.format,
            seed=args.seed,
            workers=args.workers,
            timing=not args.no_timing,
        ).validate()
        started = time.perf_counter()
        payload = args.func(args, cfg)
    except WorkbenchError as e:
        logger.error(f"[{args.command}] {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    elapsed = round((time.perf_counter() - started) * 1000, 3) if cfg.timing else None
    command = args.command if not hasattr(args, "action") else f"{args.command} {args.action}"
    envelope = {"version": VERSION, "command": command, "elapsed_ms": elapsed, **payload}
    print(dumps(envelope) if cfg.output == "json" else render_text(envelope))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
