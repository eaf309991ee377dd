"""Command line front end.

Subcommands: analyze (one group file), construct (the built-in families),
verify-corpus (sweep a directory and/or the built-in corpus), mu, and
factorizations. Exit codes: 0 all checks pass, 1 an asserted property is
violated, 2 usage or IO error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .analysis import count_maximum_cliques, subdegrees
from .groups import CapExceeded, order
from .lattice import SUBGROUP_CAP, all_subgroups_small, coprime_factorizations, mu
from .perm import format_cycles


def _caps_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument(
        "--elements-cap", type=int, default=200_000, metavar="N",
        help="bound for element-enumeration operations (default 200000)",
    )
    p.add_argument(
        "--subgroup-cap", type=int, default=SUBGROUP_CAP, metavar="N",
        help="largest group order for subgroup enumeration (default 2000)",
    )
    p.add_argument(
        "--coset-cap", type=int, default=100_000, metavar="N",
        help="largest coset-action index (default 100000)",
    )
    return p


def build_parser() -> argparse.ArgumentParser:
    caps = _caps_parent()
    parser = argparse.ArgumentParser(
        prog="subdeg",
        description="Subdegrees, coprime suborbit structure, mu, and factorizations of permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[caps], help="analyze one group file")
    p.add_argument("file")
    p.add_argument("--point", type=int, default=1, metavar="K", help="1-based base point (default 1)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the report as JSON")
    fmt.add_argument("--csv", action="store_true", help="emit the report as CSV")

    p = sub.add_parser("construct", parents=[caps], help="build a group from a named family")
    p.add_argument("family", choices=sorted(corpus.FAMILY_BUILDERS))
    p.add_argument("params", nargs="+", type=int, help="family parameters, e.g. 7 3")
    p.add_argument("--out", metavar="FILE", help="write the group file here")
    p.add_argument("--analyze", action="store_true", dest="do_analyze", help="also print the analysis report")

    p = sub.add_parser("verify-corpus", parents=[caps], help="sweep group files and built-in constructions")
    p.add_argument("--dir", metavar="DIR", help="directory of group .json files")
    p.add_argument("--builtin", action="store_true", help="include the built-in corpus (default when no --dir)")
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="parallel workers (default 1)")
    p.add_argument("--json", metavar="OUT", dest="json_out", help="write the JSON aggregate to this file ('-' for stdout)")

    p = sub.add_parser("mu", parents=[caps], help="mu of a group file via subgroup enumeration")
    p.add_argument("file")

    p = sub.add_parser("factorizations", parents=[caps], help="coprime factorizations of a group file")
    p.add_argument("file")

    return parser


def _bool_word(v) -> str:
    return "true" if v else "false"


def _seq(values, empty: str) -> str:
    return " ".join(str(x) for x in values) if values else empty


def _print_report(r: corpus.CoprimeReport, clique_count: int | None = None) -> None:
    print(f"name: {r.name}")
    print(f"degree: {r.degree}")
    print(f"order: {r.order}")
    print(f"transitive: {_bool_word(r.transitive)}")
    print(f"primitive: {_bool_word(r.primitive)}")
    if r.transitive:
        print(f"rank: {r.rank}")
        print(f"subdegrees: {_seq(r.subdegrees, 'none')}")
        print(f"distinct non-trivial subdegrees: {_seq(r.distinct_nontrivial_subdegrees, 'none')}")
        print(f"max coprime clique: {_seq(r.max_coprime_clique, 'empty')} (size {r.clique_size})")
        if clique_count is not None:
            print(f"maximum clique count: {clique_count}")
        print(f"weiss: {r.weiss_ok}")
        print(f"neumann: {'pass' if r.neumann_ok else 'fail'}")
        if r.theorem_ok is None:
            print("theorem (clique size <= 2): not-applicable (imprimitive)")
        else:
            print(f"theorem (clique size <= 2): {'pass' if r.theorem_ok else 'FAIL'}")
    for s in r.skipped_checks:
        print(f"skipped: {s}")


def _load_or_fail(path: str):
    try:
        return corpus.load_group(path)
    except corpus.GroupFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return None


def _cmd_analyze(args) -> int:
    G = _load_or_fail(args.file)
    if G is None:
        return 2
    if not 1 <= args.point <= G.degree:
        print(f"error: --point must be in 1..{G.degree}", file=sys.stderr)
        return 2
    point = args.point - 1
    report = corpus.analyze(G, point)
    if args.json:
        print(json.dumps(corpus.report_to_dict(report), indent=2, ensure_ascii=False))
    elif args.csv:
        sys.stdout.write(corpus.report_to_csv([report]))
    else:
        count = count_maximum_cliques(subdegrees(G, point)) if report.transitive else None
        _print_report(report, count)
    return 1 if report.violates else 0


def _cmd_construct(args) -> int:
    builder = corpus.FAMILY_BUILDERS[args.family]
    try:
        G = builder(*args.params)
    except TypeError:
        print(f"error: wrong number of parameters for {args.family}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    wrote = False
    if args.out:
        corpus.write_group(args.out, G)
        print(f"wrote {args.out}")
        wrote = True
    rc = 0
    if args.do_analyze:
        report = corpus.analyze(G)
        _print_report(report, count_maximum_cliques(subdegrees(G)) if report.transitive else None)
        rc = 1 if report.violates else 0
    elif not wrote:
        gens = [format_cycles(g) for g in G.generators] or ["()"]
        payload = {
            "name": G.label or args.family,
            "degree": G.degree,
            "generators": gens,
            "metadata": {"expected_order": str(order(G))},
        }
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    return rc


def _cmd_verify_corpus(args) -> int:
    if args.dir is not None and not Path(args.dir).is_dir():
        print(f"error: {args.dir} is not a directory", file=sys.stderr)
        return 2
    include_builtin = args.builtin or args.dir is None
    result = corpus.verify_corpus(
        directory=args.dir, include_builtin=include_builtin, jobs=max(1, args.jobs)
    )
    if args.json_out == "-":
        # keep stdout valid JSON when piping
        sys.stdout.write(result.to_json())
        return result.exit_code
    for entry in result.entries:
        name = entry["name"]
        if entry["degree"] is None:
            reason = "; ".join(entry["skipped_checks"] or ["unreadable"])
            print(f"skip  {name}: {reason}")
            continue
        status = "FAIL" if name in result.violations else "ok  "
        clique = entry["clique_size"]
        print(
            f"{status}  {name}: degree={entry['degree']} order={entry['order']} "
            f"primitive={_bool_word(entry['primitive'])} clique_size={clique}"
        )
    print(f"{result.total} entries, {len(result.violations)} violations")
    if result.violations:
        print("violations: " + " ".join(result.violations))
    if args.json_out:
        Path(args.json_out).write_text(result.to_json(), encoding="utf-8")
    return result.exit_code


def _cmd_mu(args) -> int:
    G = _load_or_fail(args.file)
    if G is None:
        return 2
    try:
        lat = all_subgroups_small(G, cap=args.subgroup_cap)
    except CapExceeded as e:
        print(f"skipped: {e.what} {e.value} exceeds cap {e.cap}")
        return 0
    value = mu(G, lat)
    print(f"group: {G.label or args.file}")
    print(f"order: {lat.group_order}")
    print(f"subgroups: {len(lat)}")
    print(f"maximal subgroup indices: {_seq(sorted({s.index for s in lat.maximal()}), 'none')}")
    print(f"mu = {value}")
    return 0


def _cmd_factorizations(args) -> int:
    G = _load_or_fail(args.file)
    if G is None:
        return 2
    try:
        lat = all_subgroups_small(G, cap=args.subgroup_cap)
    except CapExceeded as e:
        print(f"skipped: {e.what} {e.value} exceeds cap {e.cap}")
        return 0
    facs = coprime_factorizations(G, lat)
    print(f"group: {G.label or args.file}")
    print(f"coprime factorizations: {len(facs)}")
    for f in facs:
        tag = "  [maximal pair]" if f.both_maximal else ""
        print(
            f"  |A|={f.a.order} index={f.index_a}  x  |B|={f.b.order} index={f.index_b}{tag}"
        )
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "construct": _cmd_construct,
        "verify-corpus": _cmd_verify_corpus,
        "mu": _cmd_mu,
        "factorizations": _cmd_factorizations,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
