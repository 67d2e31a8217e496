"""``certify`` command line.

Exit codes: 0 when the verdict is pass, 1 when a verification fails,
2 for usage errors and unreadable or tampered golden data.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .pipeline.golden import GoldenDataError, load_golden
from .pipeline.instance import CuboidInstance, InvalidInstance, instance_check
from .pipeline.report import PASS
from .pipeline.runner import ALL_STAGES, OBJECT_STAGE, RunConfig, compute_object, default_jobs, run_all
from .polyio import write_poly

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _stage_list(text: str) -> tuple[int, ...]:
    try:
        stages = tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad stage list {text!r}") from None
    bad = [s for s in stages if s not in ALL_STAGES]
    if bad or not stages:
        raise argparse.ArgumentTypeError(f"stages must be in 0..8, got {text!r}")
    return stages


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="certify", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run certification stages")
    run.add_argument("--stages", type=_stage_list, default=ALL_STAGES, help="comma list, e.g. 4,5,6")
    run.add_argument("--golden", type=Path, default=None, help="golden data directory")
    run.add_argument("--cache", type=Path, default=None, help="cache directory")
    run.add_argument("--jobs", type=_positive, default=None, help="worker processes (default $CERTIFY_JOBS or 1)")
    run.add_argument("--keep-going", action="store_true", help="continue past a failed stage")
    run.add_argument("--report", type=Path, default=None, help="write the JSON certificate here")

    inst = sub.add_parser("instance", help="certify one (p, q) pair")
    inst.add_argument("--p", type=int, required=True)
    inst.add_argument("--q", type=int, required=True)
    inst.add_argument("--report", type=Path, default=None)

    dump = sub.add_parser("dump", help="write a computed object in the polynomial file format")
    dump.add_argument("--object", choices=sorted(OBJECT_STAGE), required=True)
    dump.add_argument("--out", type=Path, required=True)
    dump.add_argument("--golden", type=Path, default=None)
    dump.add_argument("--cache", type=Path, default=None)
    dump.add_argument("--jobs", type=_positive, default=None)
    return ap


def _summary(cert) -> str:
    lines = []
    for s in cert.stages:
        tail = f"  ({s.reason})" if s.reason else ""
        lines.append(f"stage {s.stage} {s.name:<15} {s.status:<8} {s.wall_ms:10.1f} ms{tail}")
    lines.append(f"verdict: {cert.verdict}")
    return "\n".join(lines)


def cmd_run(args) -> int:
    cfg = RunConfig(
        stages=args.stages,
        golden_dir=args.golden,
        cache_dir=args.cache,
        jobs=args.jobs or default_jobs(),
        keep_going=args.keep_going,
    )
    cert = run_all(cfg)
    if args.report:
        args.report.write_text(cert.to_json(), encoding="utf-8")
    print(_summary(cert))
    return EXIT_PASS if cert.verdict == PASS else EXIT_FAIL


def cmd_instance(args) -> int:
    try:
        inst = CuboidInstance(args.p, args.q)
    except InvalidInstance as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_USAGE
    res = instance_check(inst)
    if args.report:
        args.report.write_text(json.dumps(res.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"p={inst.p} q={inst.q} s0={inst.s0}: {res.verdict}")
    return EXIT_PASS if res.passed else EXIT_FAIL


def cmd_dump(args) -> int:
    cfg = RunConfig(golden_dir=args.golden, cache_dir=args.cache, jobs=args.jobs or default_jobs())
    obj, rep = compute_object(args.object, cfg, load_golden(args.golden))
    if obj is None:
        print(f"stage {rep.stage} {rep.status}: {rep.reason}", file=sys.stderr)
        return EXIT_FAIL
    write_poly(args.out, obj)
    print(f"wrote {args.object} to {args.out}")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    handler = {"run": cmd_run, "instance": cmd_instance, "dump": cmd_dump}[args.command]
    try:
        return handler(args)
    except (GoldenDataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
