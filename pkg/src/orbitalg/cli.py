"""Command-line interface.

Subcommands: ``orbitals`` (rank/valency/pairing report), ``search``
(enumerate and classify orbital unions), ``check`` (classify one graph
file), ``design`` (symmetric 2-design test), ``catalog list``.

Group inputs are either a group file path or a catalog reference like
``catalog:subsets:5,2``.  Exit codes: 0 success, 1 usage error, 2 bad
input, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import catalog_entries, parse_catalog_uri
from .errors import ConsistencyError, InputError
from .graphio import read_graph
from .graphs import (
    IntersectionArray,
    Rejection,
    SrgParams,
    check_drg,
    check_regular,
    check_srg,
    check_symmetric_design,
    connected_components,
)
from .groups import PermutationGroup, load_group
from .orbitals import decompose, verify_axioms
from .search import SearchOptions, run_search

ENV_THREADS = "ORBITALG_THREADS"


class _Parser(argparse.ArgumentParser):
    """argparse, but usage errors exit 1 (2 is reserved for bad input data)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _resolve_group(spec: str) -> PermutationGroup:
    if spec.startswith("catalog:"):
        return parse_catalog_uri(spec)
    return load_group(spec)


def _default_threads() -> int:
    raw = os.environ.get(ENV_THREADS)
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{ENV_THREADS} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"{ENV_THREADS} must be at least 1")
    return value


def _srg_json(p: SrgParams | None):
    if p is None:
        return None
    return {"v": p.v, "k": p.k, "lambda": p.lam, "mu": p.mu}


def _drg_json(a: IntersectionArray | None):
    if a is None:
        return None
    return {"b": list(a.b), "c": list(a.c), "d": a.d, "ki": list(a.ki)}


def _group_block(group: PermutationGroup, dec) -> dict:
    return {
        "name": group.metadata.get("name", f"group-deg{group.degree}"),
        "degree": group.degree,
        "order": group.order(),
        "rank": dec.rank,
        "valencies": list(dec.valencies),
        "pairing": list(dec.pairing()),
        "primitive": group.metadata.get("primitive"),
    }


def cmd_orbitals(args) -> int:
    group = _resolve_group(args.group)
    dec = decompose(group)
    axioms = []
    failed = False
    if args.verify:
        rep = verify_axioms(dec)
        failed = not rep.ok
        axioms = [
            {
                "name": c.name,
                "status": c.status,
                "detail": c.detail,
                "witness": list(c.witness) if c.witness is not None else None,
            }
            for c in rep.checks
        ]
    if args.json:
        doc = {
            "group": _group_block(group, dec),
            "suborbit_representatives": [o.rep[1] for o in dec.orbitals],
            "pairing_cycles": dec.pairing_cycles(),
            "axioms": axioms,
        }
        print(json.dumps(doc, indent=2))
    else:
        block = _group_block(group, dec)
        print(f"group: {block['name']}")
        print(f"degree: {block['degree']}")
        print(f"order: {block['order']}")
        print(f"rank: {block['rank']}")
        print("valencies: " + " ".join(map(str, block["valencies"])))
        print(f"pairing: {dec.pairing_cycles()}")
        print("suborbit representatives: " + " ".join(str(o.rep[1]) for o in dec.orbitals))
        print(f"primitive: {block['primitive'] if block['primitive'] is not None else 'unknown'}")
        for c in axioms:
            extra = f" ({c['detail']})" if c["detail"] else ""
            wit = f" witness {c['witness']}" if c["witness"] else ""
            print(f"axiom {c['name']}: {c['status']}{extra}{wit}")
    if failed:
        raise ConsistencyError("orbital decomposition failed its axiom checks")
    return 0


def cmd_search(args) -> int:
    group = _resolve_group(args.group)
    threads = args.threads if args.threads is not None else _default_threads()
    options = SearchOptions(
        srg_only=args.srg_only,
        drg_min_diameter=args.drg_min_diameter,
        halves=args.halves,
        max_atoms=args.max_atoms,
        threads=threads,
        timeout=args.timeout,
        sample=args.sample,
        export_dir=args.export_dir,
    )
    dec = decompose(group)
    report = run_search(group, options, dec=dec)
    if args.report_dir:
        from .report import write_report_dir

        written = write_report_dir(report, args.report_dir, dec=dec)
        for path in written:
            print(f"wrote {path}", file=sys.stderr)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
        return 0
    print(
        f"group {report.group_name}: degree {report.degree}, order {report.order}, rank {report.rank}"
    )
    print("valencies: " + " ".join(map(str, report.valencies)))
    print("atoms: " + " ".join("[" + " ".join(map(str, a)) + "]" for a in report.atoms))
    print(f"candidates ({len(report.results)}):")
    for r in report.results:
        label = r.kind
        if r.srg:
            label = str(r.srg)
            if not r.connected:
                label += f" [disconnected({r.components})]"
        elif r.drg and r.kind == "drg":
            label = f"drg {r.drg} d={r.drg.d}"
        print(f"  {r.candidate.index:3d}  bits {r.candidate.bit_string(report.rank)}  degree {r.degree:5d}  {label}")
    summ = report.summary()
    print("distinct srg parameter sets: " + (", ".join(str(p) for p in summ["srg_parameter_sets"]) or "none"))
    print("distinct drg arrays: " + (", ".join(str(a) for a in summ["drg_arrays"]) or "none"))
    print(f"complement pairs: {summ['complement_pairs'] or 'none'}")
    return 0


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    reg = check_regular(g)
    regular = not isinstance(reg, Rejection)
    ncomp, _ = connected_components(g)
    doc = {
        "n": g.n,
        "regular": regular,
        "degree": reg if regular else None,
        "connected": ncomp == 1,
        "components": ncomp,
        "srg": None,
        "drg": None,
        "rejections": {
            "regular": None if regular else str(reg),
            "srg": None,
            "drg": None,
        },
    }
    if regular:
        srg = check_srg(g)
        if isinstance(srg, SrgParams):
            doc["srg"] = _srg_json(srg)
        else:
            doc["rejections"]["srg"] = str(srg)
        drg = check_drg(g)
        if isinstance(drg, IntersectionArray):
            doc["drg"] = _drg_json(drg)
        else:
            doc["rejections"]["drg"] = str(drg)
    print(json.dumps(doc, indent=2))
    return 0


def cmd_design(args) -> int:
    g = read_graph(args.graph)
    result = check_symmetric_design(g, args.diag)
    doc = {
        "n": g.n,
        "diagonal": args.diag,
        "design": None,
        "rejection": None,
    }
    if isinstance(result, Rejection):
        doc["rejection"] = str(result)
    else:
        doc["design"] = {"v": result.v, "k": result.k, "lambda": result.lam}
    print(json.dumps(doc, indent=2))
    return 0


def cmd_catalog(args) -> int:
    if args.action != "list":
        raise InputError(f"unknown catalog action {args.action!r}; try 'list'")
    rows = [("name", "degree", "order", "note")]
    for e in catalog_entries():
        rows.append((e.name, str(e.degree), str(e.order), e.note))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    for name, degree, order, note in rows:
        print(f"{name:<{widths[0]}}  {degree:>{widths[1]}}  {order:>{widths[2]}}  {note}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="orbitalg", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbitals", help="orbital rank/valency/pairing report")
    p.add_argument("group", help="group file path or catalog:family:params")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--verify", action="store_true", help="also run the axiom checks")
    p.set_defaults(func=cmd_orbitals)

    p = sub.add_parser("search", help="enumerate and classify orbital unions")
    p.add_argument("group", help="group file path or catalog:family:params")
    p.add_argument("--srg-only", action="store_true", help="skip the DRG check on non-SRG unions")
    p.add_argument("--drg-min-diameter", type=int, default=3, metavar="D",
                   help="report DRG unions only at diameter >= D (default 3)")
    p.add_argument("--halves", action="store_true",
                   help="keep one union per complementary pair (the one containing atom 0)")
    p.add_argument("--max-atoms", type=int, default=20, metavar="N",
                   help="refuse to enumerate more than N atoms (default 20)")
    p.add_argument("--threads", type=int, default=None, metavar="N",
                   help=f"classify candidates with N threads (default ${ENV_THREADS} or 1)")
    p.add_argument("--timeout", type=float, default=None, metavar="S",
                   help="per-candidate time budget in seconds; over-budget unions are marked skipped")
    p.add_argument("--sample", type=int, default=None, metavar="N",
                   help="DRG check from only N source vertices (exploration only, proves nothing)")
    p.add_argument("--export-dir", default=None, metavar="DIR",
                   help="write accepted unions as graph6 files into DIR")
    p.add_argument("--report-dir", default=None, metavar="DIR",
                   help="write candidates.csv, report.json and PNG figures into DIR")
    p.add_argument("--json", action="store_true", help="emit the full JSON report on stdout")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", help="classify a graph file (graph6 or adjacency list)")
    p.add_argument("graph", help="graph file path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("design", help="symmetric 2-design check on a graph file")
    p.add_argument("graph", help="graph file path")
    p.add_argument("--diag", required=True, choices=["zero", "one"],
                   help="read N = A (zero) or N = A + I (one)")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("catalog", help="built-in group catalog")
    p.add_argument("action", nargs="?", default="list", help="only 'list' is defined")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit:
        raise
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
