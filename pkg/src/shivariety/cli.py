"""Command line interface.

    shivariety enumerate TYPE RANK [bfs|filter|both] [table|json|dot]
    shivariety check TYPE RANK [--lattice] [--semidistributive] [--covers] ...
    shivariety vector TYPE RANK WORD

Exit codes: 0 all checks pass, 1 property violation, 2 input error,
3 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Sequence

from . import components as comp
from .phirep import check_action, check_commuting_diagram
from .rootsys import RootSystem, RootSystemError, build_root_system
from .shi import VectorError, check_characterization, check_lambda, lambda_extract
from .weyl import (WordError, check_length_formula, from_word, length_bfs, length_from_shi,
                   parse_word, shi_vector)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def display_columns(rs: RootSystem) -> List[int]:
    """Non-simple root indices, highest dual height first."""
    idx = range(rs.rank, rs.m)
    return sorted(idx, key=lambda i: -rs.dual_height(rs.positive_roots[i]))


def _enumerate(rs: RootSystem, method: str):
    checks = {"count_oracle": comp.count_oracle(rs)}
    if method in ("bfs", "both"):
        elements = comp.enumerate_admitted_bfs(rs)
    if method in ("filter", "both"):
        filtered = comp.enumerate_admitted_filter(rs)
        if method == "filter":
            elements = filtered
        else:
            checks["methods_agree"] = filtered == elements
    checks["count_matches_oracle"] = len(elements) == checks["count_oracle"]
    return elements, checks


def render_table(rs, elements, cols) -> str:
    head = [rs.root_label(rs.positive_roots[i]) for i in cols]
    rows = [[str(v[i]) for i in cols] for v in elements]
    width = max([len(h) for h in head] + [1])
    lines = ["  ".join(h.rjust(width) for h in head)] if head else ["(no non-simple roots)"]
    for r in rows:
        lines.append("  ".join(x.rjust(width) for x in r) if r else "0")
    return "\n".join(lines) + "\n"


def render_json(rs, poset, checks) -> str:
    doc = {
        "type": rs.cartan,
        "rank": rs.rank,
        "roots": [list(r) for r in rs.positive_roots],
        "admitted": [list(v) for v in poset.elements],
        "covers": [list(e) for e in poset.covers],
        "checks": checks,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_dot(rs, poset, cols) -> str:
    out = [f'digraph "{rs.name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, v in enumerate(poset.elements):
        label = " ".join(str(v[c]) for c in cols) or "0"
        out.append(f'  n{i} [label="{label}"];')
    for a, b in poset.covers:
        root = poset.cover_root((a, b))
        lab = f"s_{rs.root_label(root)}" if root else "?"
        out.append(f'  n{a} -> n{b} [label="{lab}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_enumerate(args) -> int:
    rs = build_root_system(args.type, args.rank)
    elements, checks = _enumerate(rs, args.method)
    cols = display_columns(rs)
    if args.format == "table":
        sys.stdout.write(render_table(rs, elements, cols))
    else:
        poset = comp.build_poset(rs, elements)
        render = render_json(rs, poset, checks) if args.format == "json" else render_dot(
            rs, poset, cols)
        sys.stdout.write(render)
    ok = all(v for k, v in checks.items() if isinstance(v, bool))
    print(f"{rs.name}: {len(elements)} admitted vectors ({args.method}); "
          f"checks {'pass' if ok else 'FAIL'}: {checks}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VIOLATION


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):
        return x.item()
    return x


def cmd_check(args) -> int:
    start = time.perf_counter()
    rs = build_root_system(args.type, args.rank)
    selected = [f for f in ("lattice", "semidistributive", "covers", "interval", "top",
                            "action", "shi", "length") if getattr(args, f)]
    if not selected and args.diagram is None:
        selected = ["lattice", "semidistributive", "covers", "top"]
    elements = comp.enumerate_admitted_bfs(rs)
    poset = comp.build_poset(rs, elements)
    checks = {}
    if "lattice" in selected:
        checks["lattice"] = comp.check_lattice(poset)
    if "semidistributive" in selected:
        checks["semidistributive"] = comp.check_semidistributive(poset)
    if "covers" in selected:
        checks["covers"] = comp.check_cover_geometry(rs, poset)
    if "top" in selected:
        checks["top"] = comp.check_top(rs, poset)
    if "interval" in selected:
        checks["interval"] = comp.check_weak_order_interval(rs, poset)
    if "action" in selected:
        checks["action"] = check_action(rs, elements, seed=args.seed)
    if "shi" in selected:
        checks["shi"] = check_characterization(rs)
        checks["lambda"] = check_lambda(rs)
    if "length" in selected:
        checks["length"] = check_length_formula(rs)
    if args.diagram is not None:
        checks["diagram"] = check_commuting_diagram(rs, samples=args.diagram, seed=args.seed)
    report = {
        "command": " ".join(["check"] + [str(a) for a in args.argv]),
        "type": rs.cartan,
        "rank": rs.rank,
        "elements": len(elements),
        "checks": _jsonable(checks),
        "duration_s": round(time.perf_counter() - start, 3),
    }
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    ok = all(c["passed"] for c in checks.values())
    for name, c in sorted(checks.items()):
        print(f"{'PASS' if c['passed'] else 'FAIL'} {name}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_vector(args) -> int:
    rs = build_root_system(args.type, args.rank)
    word = parse_word(args.word)
    w = from_word(rs, word)
    k = shi_vector(rs, w)
    lam = lambda_extract(rs, k)
    roots = ", ".join(rs.root_label(r) for r in rs.positive_roots)
    print(f"roots:  {roots}")
    print(f"k:      {list(k)}")
    print(f"length: {length_from_shi(k)} (shi), {length_bfs(rs, w)} (bfs)")
    print(f"lambda: {list(lam)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="shivariety",
        description="Admitted vectors of Shi varieties of affine Weyl groups.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def type_rank(p):
        p.add_argument("type", help="Cartan type A-G")
        p.add_argument("rank", type=int)

    p = sub.add_parser("enumerate", help="list admitted vectors")
    type_rank(p)
    p.add_argument("method", nargs="?", default="bfs", choices=["bfs", "filter", "both"])
    p.add_argument("format", nargs="?", default="table", choices=["table", "json", "dot"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="verify structural properties")
    type_rank(p)
    p.add_argument("--lattice", action="store_true")
    p.add_argument("--semidistributive", action="store_true")
    p.add_argument("--covers", action="store_true")
    p.add_argument("--interval", action="store_true", help="weak order interval [e, w_top]")
    p.add_argument("--top", action="store_true")
    p.add_argument("--action", action="store_true", help="laws and transitivity of <>")
    p.add_argument("--shi", action="store_true", help="alcove inequalities and lambda")
    p.add_argument("--length", action="store_true", help="length formula on a ball")
    p.add_argument("--diagram", type=int, metavar="N",
                   help="N random pairs for the commuting-diagram test")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "vector", help="Shi vector, length and lambda of a word",
        description="WORD lists generator indices 0..n separated by commas or spaces; "
                    "'0,1,2' is the product s_0 s_1 s_2 (s_0 applied last to a point).")
    type_rank(p)
    p.add_argument("word", nargs="?", default="")
    p.set_defaults(func=cmd_vector)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.argv = argv[1:]
    try:
        return args.func(args)
    except (RootSystemError, WordError, VectorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except comp.CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
