"""Command-line interface: generate, mutate, inspect, solve, render, export.

Exit codes: 0 success, 1 validation failure, 2 usage or input error.
All output is deterministic for a given input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cluster as cl
from . import frieze as fz
from . import geometry as geo
from . import oracle as orc
from . import pluecker as pl
from .combinat import KSubset
from .errors import (
    ClusterSizeError,
    CrossingPairError,
    InvalidInputError,
    PlabicError,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _read_cluster(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return cl.cluster_from_json(text), cl.input_digest(text)


def _parse_subset(spec: str, n: int) -> KSubset:
    try:
        elems = [int(x) for x in spec.split(",")]
    except ValueError:
        raise InvalidInputError(f"expected comma-separated residues, got {spec!r}")
    return KSubset.of(n, elems)


def _cmd_cluster_snake(args) -> int:
    if args.k != 3:
        raise InvalidInputError("snake clusters are defined for -k 3")
    c = geo.quadrilateral_cluster(args.n)
    _emit(cl.cluster_to_json(c) + "\n", args.output)
    return EXIT_OK


def _cmd_cluster_mutate(args) -> int:
    c, _ = _read_cluster(args.input)
    target = _parse_subset(args.at, c.n)
    _emit(cl.cluster_to_json(cl.mutate_subset(c, target)) + "\n", args.output)
    return EXIT_OK


def _cmd_cluster_check(args) -> int:
    try:
        c, _ = _read_cluster(args.input)
    except (CrossingPairError, ClusterSizeError) as exc:
        print(f"FAIL: {exc}")
        return EXIT_FAIL
    print(f"ok: ({c.k},{c.n}) cluster with {len(c.members)} members")
    return EXIT_OK


def _cmd_cluster_quiver(args) -> int:
    c, digest = _read_cluster(args.input)
    q = cl.quiver_from_cluster(c)
    if not args.dot:
        raise InvalidInputError("only --dot output is supported")
    _emit(cl.quiver_dot(q, digest), args.output)
    return EXIT_OK


def _cmd_tiling_svg(args) -> int:
    c, digest = _read_cluster(args.input)
    _emit(geo.superimposed_svg(c, args.side, digest), args.output)
    return EXIT_OK


def _cmd_quiddity(args) -> int:
    c, _ = _read_cluster(args.input)
    if args.kind in (geo.LOWER, geo.UPPER):
        values = geo.arc_quiddity(c, args.kind)
    else:
        values = fz.extract_quiddity(fz.build_sl3_from_cluster(c), args.kind)
    _emit(" ".join(str(v) for v in values) + "\n", args.output)
    return EXIT_OK


def _cmd_frieze_sl2(args) -> int:
    try:
        q = tuple(int(x) for x in args.quiddity.split(","))
    except ValueError:
        raise InvalidInputError(f"expected comma-separated integers, got {args.quiddity!r}")
    f = fz.build_sl2_from_quiddity(q)
    _emit(fz.render(f), args.output)
    if args.validate:
        report = fz.validate_sl2(f)
        if not report.ok:
            print(f"FAIL: {len(report.violations)} violations", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


def _cmd_frieze_sl3(args) -> int:
    c, _ = _read_cluster(args.input)
    f = fz.build_sl3_from_cluster(c)
    _emit(fz.render(f), args.output)
    if args.validate:
        report = fz.validate_sl3(f)
        if not report.ok:
            print(f"FAIL: {len(report.violations)} violations", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


def _cmd_oracle_enumerate(args) -> int:
    report = orc.enumerate_clusters(args.k, args.n)
    if args.json:
        _emit(orc.report_to_json(report) + "\n", args.output)
    else:
        _emit(
            f"({args.k},{args.n}): {report.cluster_count} clusters, "
            f"{report.rectangular_count} rectangular\n",
            args.output,
        )
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    try:
        c, _ = _read_cluster(args.input)
    except (CrossingPairError, ClusterSizeError) as exc:
        print(f"FAIL: {exc}")
        return EXIT_FAIL
    failures = []
    if orc.brute_force_is_maximal(c.k, c.n, c.members):
        print("ok: maximal by exhaustive scan")
    else:
        failures.append("collection is not maximal")
    try:
        cl.quiver_from_cluster(c)
        print("ok: clique orientations consistent")
    except PlabicError as exc:
        failures.append(f"quiver construction failed: {exc}")
    if cl.is_rectangular(c):
        bad = [
            s.label()
            for s in c.non_intervals()
            if not cl.check_prop_pairing(c, s).ok
        ]
        if bad:
            failures.append(f"pairing violated at {bad}")
        else:
            print("ok: shifted-neighbour pairing holds")
        try:
            geo.superimposed_from_cluster(c, geo.LOWER)
            geo.superimposed_from_cluster(c, geo.UPPER)
            print("ok: superimposed triangulations on both sides")
        except PlabicError as exc:
            failures.append(f"superimposed triangulation failed: {exc}")
    for line in failures:
        print(f"FAIL: {line}")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plabic",
        description="Clusters of Plücker coordinates, dimer quivers, polygon "
        "tilings and SL2/SL3 friezes, all in exact integer arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cluster = sub.add_parser("cluster", help="generate, mutate and inspect clusters")
    cluster_sub = p_cluster.add_subparsers(dest="subcommand", required=True)

    p = cluster_sub.add_parser("snake", help="emit the snake-generated (3,n) cluster as JSON")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_cluster_snake)

    p = cluster_sub.add_parser("mutate", help="mutate a cluster at one member")
    p.add_argument("-i", "--input", required=True, help="cluster JSON file")
    p.add_argument("--at", required=True, help="member to mutate, e.g. 2,4")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_cluster_mutate)

    p = cluster_sub.add_parser("check", help="validate a cluster file")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=_cmd_cluster_check)

    p = cluster_sub.add_parser("quiver", help="export the dimer quiver")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--dot", action="store_true", help="emit graphviz DOT")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_cluster_quiver)

    p_tiling = sub.add_parser("tiling", help="polygon tiling figures")
    tiling_sub = p_tiling.add_subparsers(dest="subcommand", required=True)
    p = tiling_sub.add_parser("svg", help="superimposed-triangulation SVG")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--side", choices=(geo.LOWER, geo.UPPER), default=geo.LOWER)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_tiling_svg)

    p = sub.add_parser("quiddity", help="arc or frieze quiddity of a cluster")
    p.add_argument("-i", "--input", required=True)
    p.add_argument(
        "--kind",
        choices=(geo.LOWER, geo.UPPER, fz.FORWARDS, fz.REVERSE),
        required=True,
    )
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_quiddity)

    p_frieze = sub.add_parser("frieze", help="build and validate friezes")
    frieze_sub = p_frieze.add_subparsers(dest="subcommand", required=True)
    p = frieze_sub.add_parser("sl2", help="grow an SL2 frieze from a quiddity row")
    p.add_argument("--quiddity", required=True, help="comma-separated, e.g. 3,1,2,2,1")
    p.add_argument("--validate", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_frieze_sl2)
    p = frieze_sub.add_parser("sl3", help="SL3 frieze of a (3,n) cluster")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--validate", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_frieze_sl3)

    p_oracle = sub.add_parser("oracle", help="brute-force verifiers and enumeration")
    oracle_sub = p_oracle.add_subparsers(dest="subcommand", required=True)
    p = oracle_sub.add_parser("enumerate", help="mutation closure census")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_oracle_enumerate)
    p = oracle_sub.add_parser("check", help="independent validators for a cluster file")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CrossingPairError, ClusterSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PlabicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
