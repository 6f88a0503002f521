"""Command line front end: ``splitcycles <command> ...``.

Exit status: 0 success, 1 internal error, 2 input error, 3 resource cap refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from importlib import resources

from . import __version__
from .betti import DEFAULT_CAP, ek_check, graded_betti, graded_betti_ideal, \
    render_paper_table, wheel_formula_betti, wheel_oracle_betti
from .errors import InputError, SplitCyclesError
from .graph import Graph, induced_chordless_cycles, make_cycle_partition, parse_graph
from .monomials import parse_ideal
from .splitting import MAX_SEARCH_GENERATORS, MAX_VERIFY_GENERATORS, certify

BUNDLED_PREFIX = "bundled:"


def bundled_names() -> list[str]:
    files = resources.files("splitcycles").joinpath("data").iterdir()
    return sorted(f.name.rsplit(".", 1)[0] for f in files if f.name.endswith(".edges"))


def read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.startswith(BUNDLED_PREFIX):
        name = source[len(BUNDLED_PREFIX):]
        if name not in bundled_names():
            raise InputError(f"no bundled graph {name!r}; available: {', '.join(bundled_names())}")
        return resources.files("splitcycles").joinpath("data", f"{name}.edges").read_text("utf-8")
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def load_graph(source: str) -> Graph:
    return parse_graph(read_input(source))


def pick_cycle(g: Graph, choice: str | None):
    if choice:
        return make_cycle_partition(g, [v.strip() for v in choice.split(",") if v.strip()])
    cycles = induced_chordless_cycles(g)
    if not cycles:
        raise InputError("graph has no induced chordless cycle of length >= 4")
    if len(cycles) > 1:
        listing = "; ".join(",".join(c.cycle) for c in cycles)
        raise InputError(f"graph has {len(cycles)} chordless cycles, choose one with --cycle: {listing}")
    return cycles[0]


def dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _mark(ok: bool) -> str:
    return "✓" if ok else "✗"


# -- commands ------------------------------------------------------------------

def cmd_cycles(args) -> str:
    g = load_graph(args.input)
    cycles = induced_chordless_cycles(g, args.min_k)
    if args.format == "json":
        return dump([list(c.cycle) for c in cycles])
    return "".join(f"({','.join(c.cycle)})\n" for c in cycles)


def cmd_split(args) -> str:
    g = load_graph(args.input)
    cp = pick_cycle(g, args.cycle)
    cert = certify(g, cp, search=args.search, max_generators=args.max_generators,
                   search_max_generators=args.max_search_generators)
    if args.format == "json":
        return dump(cert.to_json())
    lines = [
        f"cycle: ({','.join(cert.cycle)})",
        f"verdict: {cert.verdict.value}",
        f"degree condition: {'holds' if cert.hypothesis_holds else 'fails'}"
        + "".join(f" [{a},{b}]" for a, b in cert.offending_pairs),
        f"nonzero parts: {cert.nonzero_parts}",
        f"condition (a): {cert.condition_a}",
        f"condition (b): {cert.condition_b}",
    ]
    if cert.witness is not None and not cert.witness.passed:
        w = cert.witness
        lines.append(f"witness S = {{{', '.join(str(m) for m in w.witness)}}}: "
                     f"lcm({w.side}(S)) = {w.lcm_image}, lcm(S) = {w.lcm_s}")
    if cert.function is not None:
        lines.append(f"splitting function ({cert.method}):")
        lines += [f"  {w} -> ({phi}, {psi})" for w, phi, psi in cert.function.assignments]
    return "\n".join(lines) + "\n"


def cmd_betti(args) -> str:
    if args.ideal is not None:
        if args.input is not None:
            raise InputError("give either a graph input or --ideal, not both")
        table = graded_betti_ideal(parse_ideal(args.ideal), cap=args.cap, workers=args.workers)
    elif args.input is not None:
        table = graded_betti(load_graph(args.input), cap=args.cap, workers=args.workers)
    else:
        raise InputError("nothing to compute: give a graph input or --ideal")
    if args.format == "json":
        return dump(table.to_json())
    return render_paper_table(table)


def cmd_check_ek(args) -> str:
    g = load_graph(args.input)
    cp = pick_cycle(g, args.cycle)
    report = ek_check(g, cp, cap=args.cap, workers=args.workers)
    if args.format == "json":
        return dump({"cycle": list(cp.cycle), **report.to_json()})
    lines = [f"cycle: ({','.join(cp.cycle)})", "column  beta(I)  beta(J)+beta(K)+beta'(JnK)"]
    for c in report.columns:
        lines.append(f"{c.i + 1:>6}  {c.lhs:>7}  {c.rhs:>7}  {_mark(c.equal)}")
    lines.append(f"overall: {_mark(report.overall)}")
    return "\n".join(lines) + "\n"


def cmd_wheel(args) -> str:
    formula = wheel_formula_betti(args.k, cap=args.cap)
    oracle = wheel_oracle_betti(args.k, cap=args.cap) if args.verify else None
    if args.format == "json":
        doc = {"k": args.k, "formula": formula.to_json()}
        if oracle is not None:
            doc["oracle"] = oracle.to_json()
            doc["match"] = formula == oracle
        return dump(doc)
    out = render_paper_table(formula)
    if oracle is not None:
        if formula == oracle:
            out += "match\n"
        else:
            out += "mismatch\n"
            args.status = 1
            for key in sorted(set(formula.entries) | set(oracle.entries)):
                a, b = formula.get(*key), oracle.get(*key)
                if a != b:
                    out += f"  beta_{key[0]},{key[1]}: formula {a}, direct {b}\n"
    return out


def analysis_report(g: Graph, search: bool = True, cap: int = DEFAULT_CAP, workers: int = 1) -> dict:
    cycles = []
    for cp in induced_chordless_cycles(g):
        entry = {"partition": cp.summary()}
        try:
            entry["certificate"] = certify(g, cp, search=search).to_json()
        except SplitCyclesError as exc:
            entry["certificate"] = {"error": str(exc), "exit_code": exc.exit_code}
        report = ek_check(g, cp, cap=cap, workers=workers)
        entry["ek"] = report.to_json()
        entry["betti"] = {name: t.to_json() for name, t in report.tables.items()}
        entry["tables"] = {name: render_paper_table(t) for name, t in report.tables.items()}
        cycles.append(entry)
    return {
        "tool": "splitcycles",
        "version": __version__,
        "caps": {"betti_vertices": cap, "verify_generators": MAX_VERIFY_GENERATORS,
                 "search_generators": MAX_SEARCH_GENERATORS},
        "graph": {"vertices": list(g.vertices), "n": g.n, "m": len(g.edges)},
        "cycles": cycles,
    }


def cmd_analyze(args) -> str:
    g = load_graph(args.input)
    doc = analysis_report(g, search=args.search, cap=args.cap, workers=args.workers)
    if args.format == "json":
        return dump(doc)
    lines = [f"graph: {doc['graph']['n']} vertices, {doc['graph']['m']} edges"]
    for entry in doc["cycles"]:
        cert = entry["certificate"]
        lines.append(f"cycle ({','.join(entry['partition']['cycle'])}): "
                     f"{cert.get('verdict', 'error: ' + cert.get('error', ''))}, "
                     f"EK {_mark(entry['ek']['overall'])}")
        for name, text in entry["tables"].items():
            lines.append(f"beta({name}):")
            lines += ["  " + row for row in text.rstrip("\n").split("\n")]
    return "\n".join(lines) + "\n"


# -- argument parsing --------------------------------------------------------------

def _wheel_k(text: str) -> int:
    k = int(text)
    if k < 2:
        raise argparse.ArgumentTypeError("k must be at least 2")
    return k


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitcycles", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p, optional=False):
        p.add_argument("input", nargs="?" if optional else None,
                       help=f"edge list or JSON graph file, '-' for stdin, or {BUNDLED_PREFIX}NAME")

    def betti_opts(p):
        p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="maximum number of vertices")
        p.add_argument("--workers", type=_positive, default=1, help="worker processes for the Hochster sum")

    p = sub.add_parser("cycles", help="list induced chordless cycles")
    graph_input(p)
    p.add_argument("--min-k", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("split", help="certify a cycle as splitting")
    graph_input(p)
    p.add_argument("--cycle", help="comma-separated cycle vertices in cyclic order")
    p.add_argument("--search", action="store_true", help="exhaustive search when the degree condition fails")
    p.add_argument("--max-generators", "--max-subsets", dest="max_generators", type=_positive,
                   default=MAX_VERIFY_GENERATORS, help="cap on |G(J cap K)| for the subset check")
    p.add_argument("--max-search-generators", type=_positive, default=MAX_SEARCH_GENERATORS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("betti", help="graded Betti table of an edge ideal or square-free ideal")
    graph_input(p, optional=True)
    p.add_argument("--ideal", help='square-free monomials, e.g. "<u1*u2*w1, u2*u3*w1>"')
    p.add_argument("--format", choices=("table", "json"), default="table")
    betti_opts(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("check-ek", help="compare Betti numbers with the Eliahou-Kervaire sum")
    graph_input(p)
    p.add_argument("--cycle")
    p.add_argument("--format", choices=("text", "json"), default="text")
    betti_opts(p)
    p.set_defaults(func=cmd_check_ek)

    p = sub.add_parser("wheel", help="Betti table of the wheel W(2k+1) from cycle and star tables")
    p.add_argument("--k", type=_wheel_k, required=True)
    p.add_argument("--verify", action="store_true", help="compare with a direct computation")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_wheel)

    p = sub.add_parser("analyze", help="full report over every chordless cycle")
    graph_input(p)
    p.add_argument("--search", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="json")
    betti_opts(p)
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.status = 0
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            out = args.func(args)
    except SplitCyclesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    sys.stdout.write(out)
    return args.status


if __name__ == "__main__":
    sys.exit(main())
