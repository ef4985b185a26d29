"""Command-line interface.

Exit codes: 0 success (or "arrows"), 1 a good colouring exists / a check
failed, 2 usage, parse, guard or cache errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from sizeramsey import results
from sizeramsey.arrowing import MAX_ORACLE_EDGES, has_good_colouring, naive_arrowing_oracle, verify_colouring
from sizeramsey.constructions import ConstructionFamily, build, family_for, formula_status, upper_bound_formula
from sizeramsey.graph import is_connected
from sizeramsey.graph6 import Graph6Error, decode, encode
from sizeramsey.patterns import InstanceTooLarge, TargetPattern
from sizeramsey.search import MAX_ENUM_EDGES, PRUNING_PROFILES, EnumerationSpec, enumerate_graphs, minimum_arrowing_size

EXIT_OK, EXIT_NO, EXIT_ERR = 0, 1, 2


class CliError(Exception):
    pass


@dataclass
class Report:
    """Rows of one query, rendered as a text table, markdown, CSV or JSON."""

    query: dict
    columns: list[str]
    rows: list[dict] = field(default_factory=list)

    def as_json(self) -> str:
        return json.dumps({"query": self.query, "rows": self.rows}, indent=2) + "\n"

    def as_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            w.writerow({c: _cell(r.get(c)) for c in self.columns})
        return buf.getvalue()

    def as_markdown(self) -> str:
        out = ["| " + " | ".join(self.columns) + " |",
               "|" + "|".join("---" for _ in self.columns) + "|"]
        for r in self.rows:
            out.append("| " + " | ".join(_cell(r.get(c)) for c in self.columns) + " |")
        return "\n".join(out) + "\n"

    def as_table(self) -> str:
        cells = [[_cell(r.get(c)) for c in self.columns] for r in self.rows]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(self.columns)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*self.columns).rstrip()]
        lines += [fmt.format(*row).rstrip() for row in cells]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.as_json, "csv": self.as_csv, "md": self.as_markdown,
                "table": self.as_table}[fmt]()


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _target(text: str) -> TargetPattern:
    try:
        return TargetPattern.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _n_range(text: str) -> list[int]:
    for sep in ("..", "-", ":"):
        if sep in text:
            a, b = text.split(sep, 1)
            lo, hi = int(a), int(b)
            break
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}")
    return list(range(lo, hi + 1))


def _cache_path(args) -> Path | None:
    if getattr(args, "no_cache", False):
        return None
    return Path(args.cache) if args.cache else results.default_cache_path()


# -- arrows ------------------------------------------------------------------

def cmd_arrows(args, out) -> int:
    if args.graph and args.graph != "-":
        inputs = [args.graph]
        single = True
    else:
        inputs = [ln.strip() for ln in sys.stdin if ln.strip()]
        single = False
    h = args.target
    status = EXIT_OK
    rows = []
    for text in inputs:
        try:
            g = decode(text)
        except Graph6Error as exc:
            raise CliError(f"cannot parse graph6 {text!r}: {exc}") from None
        verdict = has_good_colouring(g, args.n, h)
        if args.oracle:
            if g.edge_count > MAX_ORACLE_EDGES:
                raise CliError(f"--oracle needs at most {MAX_ORACLE_EDGES} edges, {text!r} has {g.edge_count}")
            ref = naive_arrowing_oracle(g, args.n, h)
            if ref.arrows != verdict.arrows:
                raise CliError(f"oracle mismatch on {text}: search says arrows={verdict.arrows}, "
                               f"brute force says arrows={ref.arrows}")
        if verdict.witness is not None and not verify_colouring(verdict.witness, args.n, h).good:
            raise CliError(f"internal error: witness for {text} failed verification")
        rows.append({"graph6": text, "arrows": verdict.arrows,
                     "colouring": None if verdict.arrows else verdict.witness.lines()})
        if not verdict.arrows:
            status = EXIT_NO
        if args.json:
            continue
        prefix = "" if single else f"{text} "
        if verdict.arrows:
            out.write(f"{prefix}arrows\n")
        else:
            out.write(f"{prefix}good colouring\n")
            for line in verdict.witness.lines():
                out.write(f"  {line}\n")
    if args.json:
        query = {"command": "arrows", "n": args.n, "target": str(h)}
        out.write(json.dumps({"query": query, "rows": rows}, indent=2) + "\n")
    return status


# -- search-min --------------------------------------------------------------

def _record_row(rec) -> dict:
    return {
        "target": str(rec.target), "n": rec.n, "connected": rec.connected_only,
        "status": rec.status, "value": rec.value, "lo": rec.lo, "hi": rec.hi,
        "witness": rec.witness, "graphs_examined": rec.graphs_examined,
    }


def cmd_search_min(args, out) -> int:
    h = args.target
    max_edges = args.max_edges
    if max_edges is None:
        try:
            max_edges = upper_bound_formula(h, args.n)
        except ValueError:
            max_edges = 10
    if max_edges > MAX_ENUM_EDGES and not args.override:
        raise CliError(f"--max-edges {max_edges} exceeds the enumeration guard of "
                       f"{MAX_ENUM_EDGES}; pass --override to run anyway")
    rec = minimum_arrowing_size(h, args.n, connected_only=args.connected, max_edges=max_edges,
                                jobs=args.jobs, pruning=args.prune, override=args.override)
    path = _cache_path(args)
    if path is not None:
        results.store(path, rec)
    report = Report(
        {"command": "search-min", "n": args.n, "target": str(h), "max_edges": max_edges,
         "connected": args.connected, "prune": args.prune},
        ["target", "n", "connected", "status", "value", "lo", "hi", "witness", "graphs_examined"],
        [_record_row(rec)],
    )
    if args.format == "table":
        out.write(rec.describe() + "\n")
    out.write(report.render(args.format))
    return EXIT_OK


# -- construct ---------------------------------------------------------------

def cmd_construct(args, out) -> int:
    fam = ConstructionFamily(args.family.replace("-", "_"), args.n)
    g = build(fam)
    out.write(encode(g) + "\n")
    expected = upper_bound_formula(fam.target, fam.n)
    ok = True
    lines = [f"family: {fam.family}  n: {fam.n}  target: {fam.target}",
             f"vertices: {g.vertex_count}  edges: {g.edge_count}"]
    if args.verify:
        count_ok = g.edge_count == expected
        conn = is_connected(g)
        lines.append(f"edge count vs formula {expected}: {'ok' if count_ok else 'MISMATCH'}")
        lines.append(f"connected: {'yes' if conn else 'NO'}")
        ok = count_ok and conn
        if g.edge_count <= MAX_ORACLE_EDGES:
            arrows = has_good_colouring(g, fam.n, fam.target).arrows
            lines.append(f"arrows ({fam.n}K2, {fam.target}): {'yes' if arrows else 'NO'}")
            ok = ok and arrows
        else:
            lines.append(f"arrowing check skipped: {g.edge_count} edges > {MAX_ORACLE_EDGES}")
        lines.append("verified" if ok else "verification FAILED")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_NO


# -- table -------------------------------------------------------------------

def _note(h: TargetPattern, rec, formula: int) -> str:
    if rec is None:
        return "not computed"
    if rec.status != "exact":
        return f"search inconclusive up to {rec.lo - 1} edges" if rec.lo else "no exact value"
    kind = formula_status(h)
    if rec.value == formula:
        if kind == "exact":
            return "agrees with formula"
        if kind == "conjectured":
            return "conjecture confirmed at this n"
        return "upper bound attained"
    if kind == "upper bound" and rec.value < formula:
        return "below upper bound"
    return "MISMATCH"


def cmd_table(args, out) -> int:
    h = args.target
    path = _cache_path(args)
    table = results.load(path) if path is not None else {}
    rows = []
    mismatch = False
    for n in args.n_range:
        try:
            formula = upper_bound_formula(h, n)
        except ValueError:
            formula = None
        rec = table.get((str(h), n, True))
        if rec is None and not args.cached_only:
            limit = formula if formula is not None else args.max_edges
            if limit is not None and limit <= MAX_ENUM_EDGES:
                rec = minimum_arrowing_size(h, n, True, limit, jobs=args.jobs)
                if path is not None:
                    results.store(path, rec)
        note = _note(h, rec, formula) if formula is not None else ("" if rec else "not computed")
        mismatch |= note == "MISMATCH"
        value = None
        if rec is not None:
            value = rec.value if rec.status == "exact" else f">={rec.lo}"
        rows.append({"n": n, "value": value,
                     "status": rec.status if rec else "missing",
                     "formula": formula, "note": note})
    report = Report({"command": "table", "target": str(h), "n": args.n_range},
                    ["n", "value", "status", "formula", "note"], rows)
    out.write(report.render(args.format))
    return EXIT_NO if mismatch else EXIT_OK


# -- enumerate ---------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    spec = EnumerationSpec(args.edges, connected_only=args.connected, override=args.override)
    count = 0
    for g in enumerate_graphs(spec):
        if not args.count:
            out.write(encode(g) + "\n")
        count += 1
    if args.count:
        out.write(f"{count}\n")
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sizeramsey", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log search progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("arrows", help="decide G -> (nK2, H) for graph6 input")
    a.add_argument("graph", nargs="?", help="graph6 string; omit or '-' to read lines from stdin")
    a.add_argument("--n", type=_positive, required=True)
    a.add_argument("--target", type=_target, required=True, help="P3, C4, ...")
    a.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_arrows)

    s = sub.add_parser("search-min", help="smallest (connected) arrowing graph by exhaustive search")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--target", type=_target, required=True)
    s.add_argument("--max-edges", type=_positive, default=None,
                   help="largest edge count to scan (default: the known upper bound)")
    s.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True,
                   help="restrict to connected graphs (default); --no-connected gives r-hat")
    s.add_argument("--prune", choices=PRUNING_PROFILES, default="none")
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--cache", default=None, help="results cache (default $RAMSEY_CACHE or ./ramsey_results.json)")
    s.add_argument("--no-cache", action="store_true")
    s.add_argument("--override", action="store_true", help="lift the enumeration size guard")
    s.add_argument("--format", choices=("table", "json", "csv", "md"), default="table")
    s.set_defaults(func=cmd_search_min)

    c = sub.add_parser("construct", help="emit an upper-bound construction in graph6")
    c.add_argument("--family", choices=("p3-chain", "c4-chain", "c3-chain"), required=True)
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=cmd_construct)

    t = sub.add_parser("table", help="computed values next to the closed-form bounds")
    t.add_argument("--target", type=_target, required=True)
    t.add_argument("--n-range", type=_n_range, required=True, help="e.g. 1..4")
    t.add_argument("--format", choices=("csv", "json", "md", "table"), default="md")
    t.add_argument("--cache", default=None)
    t.add_argument("--no-cache", action="store_true")
    t.add_argument("--cached-only", action="store_true", help="do not run missing searches")
    t.add_argument("--max-edges", type=_positive, default=None)
    t.add_argument("--jobs", type=_positive, default=1)
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("enumerate", help="list graph classes with a given edge count in graph6")
    e.add_argument("--edges", type=_positive, required=True)
    e.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True)
    e.add_argument("--count", action="store_true", help="print only the number of classes")
    e.add_argument("--override", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERR if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except (CliError, InstanceTooLarge, results.CacheError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERR


if __name__ == "__main__":
    sys.exit(main())
