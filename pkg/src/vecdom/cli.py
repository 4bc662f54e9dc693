"""Command-line driver: kernelize, solve, verify, generate, stats, selftest.

Exit codes: 0 on success (and YES answers), 1 on NO or failed
verification, 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys

from .instance import Status, VecdomError
from .rules import FixpointOptions, run_fixpoint
from .selftest import run_selftest
from .solver import solve_bb, solve_brute, verify_solution
from .toolkit import (
    format_stats,
    generate_planar,
    kernel_report,
    make_special_case,
    parse,
    trivial_instance,
    write,
)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_instance(path: str):
    return parse(_read(path))


def _fixpoint_options(args) -> FixpointOptions:
    certificate = args.kernel_certificate
    if args.no_region_rules:
        if certificate == "on":
            raise VecdomError(
                "--kernel-certificate on needs the region rules; "
                "drop --no-region-rules or turn the certificate off"
            )
        certificate = "off"
    return FixpointOptions(
        kernel_certificate=certificate != "off",
        enable_region_rules=not args.no_region_rules,
        max_paths_per_pair=args.max_paths_per_pair,
    )


def _witness_text(instance, witness) -> str:
    label = {v: i + 1 for i, v in enumerate(instance.vertices)}
    return " ".join(str(label[v]) for v in sorted(witness))


def _cmd_kernelize(args) -> int:
    instance = _load_instance(args.input)
    options = _fixpoint_options(args)
    reduced = instance.copy()
    report = run_fixpoint(reduced, options)
    stats = kernel_report(instance, report, args.max_paths_per_pair)
    if report.final_status is Status.OPEN:
        kernel = reduced
    else:
        kernel = trivial_instance(report.final_status is Status.DECIDED_YES)
    text = write(kernel)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(format_stats(stats))
    return 0


def _cmd_solve(args) -> int:
    instance = _load_instance(args.input)
    if args.method == "brute":
        result = solve_brute(instance, args.oracle_limit)
    else:
        result = solve_bb(instance)
    if result.answer:
        suffix = _witness_text(instance, result.witness)
        print(f"YES {suffix}".rstrip())
        return 0
    print("NO")
    return 1


def _cmd_verify(args) -> int:
    instance = _load_instance(args.input)
    tokens = []
    for line in _read(args.witness).splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        tokens.extend(line.split())
    try:
        file_ids = [int(t) for t in tokens]
    except ValueError as exc:
        raise VecdomError(f"witness file must hold vertex ids: {exc}") from None
    ids = instance.vertices
    for t in file_ids:
        if not 1 <= t <= len(ids):
            raise VecdomError(f"witness vertex {t} out of range 1..{len(ids)}")
    chosen = {ids[t - 1] for t in file_ids}
    if verify_solution(instance, chosen):
        print("VALID")
        return 0
    print("INVALID")
    return 1


def _cmd_generate(args) -> int:
    instance = generate_planar(args.n, args.density, args.seed)
    if args.profile:
        instance = make_special_case(instance, args.profile, seed=args.seed)
    instance.budget = args.k
    text = write(instance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_stats(args) -> int:
    instance = _load_instance(args.input)
    options = _fixpoint_options(args)
    reduced = instance.copy()
    report = run_fixpoint(reduced, options)
    print(format_stats(kernel_report(instance, report, args.max_paths_per_pair)))
    return 0


def _cmd_selftest(args) -> int:
    checked, failures = run_selftest(
        count=args.count,
        seed0=args.seed,
        oracle_limit=args.oracle_limit,
        progress=lambda done: print(f"checked {done}/{args.count} instances", file=sys.stderr),
    )
    for msg in failures:
        print(f"FAIL {msg}")
    if failures:
        print(f"selftest: {len(failures)} failure(s) over {checked} instances")
        return 1
    print(f"selftest: all {checked} instances sound")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vecdom",
        description="Kernelization and exact solving for planar vector domination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fixpoint_flags(p):
        p.add_argument("--kernel-certificate", choices=("on", "off"), default=None)
        p.add_argument("--no-region-rules", action="store_true")
        p.add_argument("--max-paths-per-pair", type=int, default=512)

    p = sub.add_parser("kernelize", help="reduce an instance and write the kernel")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    add_fixpoint_flags(p)
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("solve", help="decide an instance exactly")
    p.add_argument("--input", required=True)
    p.add_argument("--method", choices=("bb", "brute"), default="bb")
    p.add_argument("--oracle-limit", type=int, default=18)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a witness file against an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--witness", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit a random planar instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("stats", help="reduce and print one stats line")
    p.add_argument("--input", required=True)
    add_fixpoint_flags(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("selftest", help="run the rule-soundness property suite")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-limit", type=int, default=18)
    p.set_defaults(func=_cmd_selftest)

    return parser


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (VecdomError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))
