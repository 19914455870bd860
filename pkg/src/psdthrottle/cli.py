"""Command line front end.

Exit codes: 0 success, 1 a checked bound (or table row) failed, 2 bad
arguments or malformed input, 3 a search or game exceeded its size limit.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
from pathlib import Path

from . import throttling
from .bounds import BoundReport, bound_report, operation_bound_checks, product_bound_checks
from .cops import capt_k, capture_time, cop_number, strategy_dump, th_times_cops
from .errors import PSDThrottleError, SizeLimitError
from .families import QUOTED_VALUE_ERRATA, TABLE_FAMILIES, UNDEFINED, UNKNOWN, family_graph, family_values, quoted_row
from .graph import INF, Graph, generate, parse_edge_list
from .graph6 import decode, encode
from .psd import prop_time, propagate
from .throttling import search_record

log = logging.getLogger("psdthrottle")

EXTRA_FAMILIES = ("complement_cycle", "complement_path")


def _num(x):
    return "inf" if x == INF else x


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# ------------------------------------------------------------------- inputs


def _add_input(p: argparse.ArgumentParser):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--graph6", metavar="STRING", help="graph6 string")
    g.add_argument("--graph6-file", metavar="PATH", help="file whose first line is graph6 ('-' for stdin)")
    g.add_argument("--edges", metavar="PATH", help="edge-list file: 'n m' then one 'u v' per line, 0-indexed")
    g.add_argument("--family", nargs="+", metavar="ARG", help="family name followed by integer parameters")
    p.add_argument("--seed", type=int, default=None, help="seed for random_tree")


def _load_graph(args) -> Graph:
    if args.graph6 is not None:
        return decode(args.graph6)
    if args.graph6_file is not None:
        text = sys.stdin.read() if args.graph6_file == "-" else Path(args.graph6_file).read_text()
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise _Usage("empty graph6 input")
        return decode(lines[0].strip())
    if args.edges is not None:
        return parse_edge_list(Path(args.edges).read_text())
    name, *params = args.family
    try:
        values = [int(x) for x in params]
    except ValueError:
        raise _Usage(f"family parameters must be integers, got {params}") from None
    if name in EXTRA_FAMILIES:
        return family_graph(name, values)
    return generate(name, values, seed=args.seed)


def _parse_set(text: str, one_indexed: bool) -> list[int]:
    try:
        vs = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise _Usage(f"bad vertex set {text!r}") from None
    return [v - 1 for v in vs] if one_indexed else vs


class _Usage(Exception):
    pass


def _shift(vs, one_indexed):
    return sorted(v + (1 if one_indexed else 0) for v in vs)


# ----------------------------------------------------------------- commands


def _cmd_compute(args) -> int:
    G = _load_graph(args)
    wanted = args.param or ["all"]
    if "all" in wanted:
        wanted = ["z_plus", "th_sum", "th_times", "th_star"]
    records = []
    for name in wanted:
        if name == "z_plus":
            z, w = throttling.z_plus(G, args.limit, args.workers)
            records.append({"parameter": "z_plus", "value": z, "witness": _shift(w, args.one_indexed),
                            "pt": _num(prop_time(G, w)),
                            "k_searched": [1, z]})
        elif name == "pt_k":
            if args.k is None:
                raise _Usage("--param pt_k needs --k")
            v, w = throttling.pt_k(G, args.k, args.workers)
            records.append({"parameter": "pt_k", "k": args.k, "value": _num(v),
                            "witness": None if w is None else _shift(w, args.one_indexed),
                            "pt": _num(v), "k_searched": [args.k, args.k]})
        else:
            fn = getattr(throttling, name)
            records.append(fn(G, args.limit, args.workers).to_dict(args.one_indexed))
    header = {"n": G.n, "m": G.m, "graph6": encode(G)}
    if args.format == "json":
        print(_dump({"graph": header, "results": records}))
    elif args.format == "tsv":
        print("parameter\tvalue\twitness\tpt\tk_searched")
        for r in records:
            print("\t".join(str(x) for x in (r["parameter"], r["value"], _wfmt(r["witness"]), r["pt"],
                                             "..".join(map(str, r["k_searched"])))))
    else:
        print(f"graph {header['graph6']} (n={G.n}, m={G.m})")
        for r in records:
            print(f"{r['parameter']} = {r['value']}  witness {_wfmt(r['witness'])}  pt {r['pt']}")
    return 0


def _wfmt(w):
    return "-" if w is None else "{" + ",".join(map(str, w)) + "}"


def _emit_reports(reports: list[BoundReport], fmt: str):
    if fmt == "json":
        print(_dump({"ok": all(r.ok for r in reports), "reports": [r.to_dict() for r in reports]}))
    elif fmt == "tsv":
        for i, r in enumerate(reports):
            text = r.to_tsv()
            print(text if i == 0 else text.split("\n", 1)[1], end="")
    else:
        for r in reports:
            for e in r.entries:
                if e.applicable:
                    mark = "ok  " if e.holds else "FAIL"
                    print(f"{mark} {r.graph_id} {e.name}: {e.lhs} {e.relation} {e.rhs}")
                else:
                    print(f"skip {r.graph_id} {e.name}: {e.note}")


def _cmd_verify(args) -> int:
    G = _load_graph(args)
    gid = encode(G)
    reports = [bound_report(G, graph_id=gid)]
    if args.ops:
        for e in G.edge_list():
            log.info("edge operations for %s", e)
            reports.append(operation_bound_checks(G, e, graph_id=f"{gid} e={e[0]}-{e[1]}"))
    if args.product_with:
        H = decode(args.product_with)
        reports.append(product_bound_checks(G, H, graph_id=f"{gid} x {encode(H)}"))
    _emit_reports(reports, args.format)
    return 0 if all(r.ok for r in reports) else 1


def _expand(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in spec.split(",")]


def _cmd_table(args) -> int:
    name, *ranges = args.family
    if name not in TABLE_FAMILIES:
        raise _Usage(f"unknown table family {name!r}; choose from {', '.join(TABLE_FAMILIES)}")
    try:
        grids = [_expand(r) for r in ranges]
    except ValueError:
        raise _Usage(f"bad range in {ranges}") from None
    fields = ("z_plus", "pt_plus", "th_times", "th_star")
    rows = []
    all_match = True
    for params in itertools.product(*grids):
        seed = args.seed
        if name == "random_tree" and seed is None:
            raise _Usage("random_tree needs --seed")
        formula = family_values(name, params, seed=seed)
        G = family_graph(name, params, seed=seed)
        log.info("searching %s %s (n=%d)", name, params, G.n)
        rec = search_record(G, limit=args.limit)
        searched = {
            "z_plus": rec.z_plus,
            "pt_plus": rec.pt_plus,
            "th_times": rec.th_times.value,
            "th_star": rec.th_star.value if rec.th_star is not None else UNDEFINED,
        }
        match = all(getattr(formula, f) in (UNKNOWN,) or getattr(formula, f) == searched[f] for f in fields)
        all_match &= match
        errata = [f for f in fields if (name, f) in QUOTED_VALUE_ERRATA
                  and name not in ("tree", "random_tree")
                  and getattr(quoted_row(name, params), f) != getattr(formula, f)]
        rows.append({
            "family": name,
            "params": list(params),
            "formula": {f: getattr(formula, f) for f in fields},
            "searched": searched,
            "match": match,
            "quoted_value_differs": errata,
        })
    if args.format == "json":
        print(_dump({"rows": rows, "all_match": all_match}))
    else:
        sep = "\t" if args.format == "tsv" else "  "
        head = ["family", "params"] + [f"{f}:formula" for f in fields] + [f"{f}:search" for f in fields] + ["match", "quoted_differs"]
        print(sep.join(head))
        for r in rows:
            cells = [r["family"], ",".join(map(str, r["params"]))]
            cells += [str(r["formula"][f]) for f in fields] + [str(r["searched"][f]) for f in fields]
            cells += ["yes" if r["match"] else "NO", ",".join(r["quoted_value_differs"]) or "-"]
            print(sep.join(cells))
    return 0 if all_match else 1


def _cmd_trace(args) -> int:
    G = _load_graph(args)
    S = _parse_set(args.set, args.one_indexed)
    if any(not 0 <= v < G.n for v in S):
        raise _Usage(f"vertex set {S} out of range for n={G.n}")
    tr = propagate(G, S)
    sh = 1 if args.one_indexed else 0
    if args.format == "json":
        print(_dump({
            "initial": _shift(tr.initial, args.one_indexed),
            "rounds": [_shift(r, args.one_indexed) for r in tr.rounds],
            "forces": [[u + sh, v + sh, i] for u, v, i in tr.forces],
            "status": tr.status,
            "pt": _num(tr.prop_time),
        }))
    else:
        if args.one_indexed:
            for i in range(1, tr.p + 1):
                print(f"{i}: " + " ".join(f"{u + 1}->{v + 1}" for u, v, r in tr.forces if r == i))
        else:
            print(tr.to_text(), end="")
        print(f"status: {tr.status}")
        print(f"pt: {_num(tr.prop_time)}")
    return 0


def _cmd_cops(args) -> int:
    G = _load_graph(args)
    out = {"cop_number": cop_number(G)}
    if args.set is not None:
        S = _parse_set(args.set, args.one_indexed)
        out["capture_time"] = _num(capture_time(G, S))
        if args.strategy:
            sys.stderr.write(strategy_dump(G, S))
    if args.k is not None:
        v, w = capt_k(G, args.k)
        out["capt_k"] = {"k": args.k, "value": _num(v), "witness": None if w is None else _shift(w, args.one_indexed)}
    if not args.no_throttling:
        out.update(th_times_cops(G).to_dict(args.one_indexed))
    if args.format == "json":
        print(_dump(out))
    else:
        for key in sorted(out):
            print(f"{key}\t{out[key]}" if args.format == "tsv" else f"{key} = {out[key]}")
    return 0


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="psdthrottle", description=__doc__.split("\n")[0])
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, formats=("json", "tsv", "text"), default="text"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--one-indexed", action="store_true", help="print and read vertices as 1..n")

    c = sub.add_parser("compute", help="Z+, pt+(G,k) and throttling numbers with witnesses")
    _add_input(c)
    common(c)
    c.add_argument("--param", action="append", choices=throttling.PARAMETERS + ("all",))
    c.add_argument("--k", type=int, help="set size for --param pt_k")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--limit", type=int, default=throttling.SEARCH_LIMIT, help="largest n searched exhaustively")
    c.set_defaults(func=_cmd_compute)

    v = sub.add_parser("verify", help="check every applicable bound; exit 1 on a violation")
    _add_input(v)
    common(v, default="tsv")
    v.add_argument("--ops", action="store_true", help="also check subdivision/deletion for every edge")
    v.add_argument("--product-with", metavar="GRAPH6", help="also check Cartesian product bounds with this graph")
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="closed forms next to searched values for a family")
    t.add_argument("--family", nargs="+", required=True, metavar="ARG",
                   help="family then one range per parameter, e.g. 'path 2..12' or 'complete_bipartite 1..3 2,4'")
    t.add_argument("--seed", type=int, default=None)
    t.add_argument("--limit", type=int, default=16)
    t.add_argument("--format", choices=("json", "tsv", "text"), default="text")
    t.set_defaults(func=_cmd_table)

    r = sub.add_parser("trace", help="print the propagation trace of a starting set")
    _add_input(r)
    common(r, formats=("json", "text"))
    r.add_argument("--set", required=True, help="comma separated starting vertices")
    r.set_defaults(func=_cmd_trace)

    k = sub.add_parser("cops", help="cop number, capture times and cop product throttling")
    _add_input(k)
    common(k)
    k.add_argument("--set", help="cop placement for capture_time")
    k.add_argument("--k", type=int, help="report capt_k for this k")
    k.add_argument("--strategy", action="store_true", help="dump the cops' first moves to stderr")
    k.add_argument("--no-throttling", action="store_true")
    k.set_defaults(func=_cmd_cops)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"psdthrottle: size limit: {exc}", file=sys.stderr)
        return 3
    except (_Usage, PSDThrottleError, ValueError, OSError) as exc:
        print(f"psdthrottle: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
