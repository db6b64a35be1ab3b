"""Command-line interface: ``tropgreen <command> ...``.

Exit codes: 0 Holds / pass, 1 Fails / violation, 2 Unknown, 3 usage error,
4 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import greens, ranks
from .bundles import BUNDLES
from .core import Flavor, TropicalError, format_scalar
from .fileio import MatrixFileError, read_matrix, serialize_matrix
from .figures import figure_data, to_csv, to_svg
from .fixtures import FIXTURES
from .fuzz import SUITES, run_suite
from .linalg import ChartUndefined
from .metric import MODES

EXIT_USAGE = 3
EXIT_INPUT = 4

RELATIONS = {
    "leqL": "<=L", "leqR": "<=R", "leqJ": "<=J",
    "relL": "L", "relR": "R", "relH": "H", "relJ": "J", "relD": "D",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(data: dict, lines: list[str], as_json: bool, out=None):
    out = out or sys.stdout
    if as_json:
        json.dump(data, out, indent=2)
        out.write("\n")
    else:
        out.write("\n".join(lines) + "\n")


def _matrix_lines(name: str, m) -> list[str]:
    if m is None:
        return [f"  {name} = identity"]
    return [f"  {name} ({m.flavor.value}):"] + ["    " + line for line in str(m).splitlines()]


def _verdict_lines(relation: str, v) -> list[str]:
    lines = [f"{relation}: {v.outcome.value}"]
    if v.witness is not None:
        lines.append("witness:")
        for name, m in v.witness.matrices.items():
            lines += _matrix_lines(name, m)
        for k, val in v.witness.extra.items():
            lines.append(f"  {k}: {json.dumps(_plain(val))}")
    if v.obstruction is not None:
        o = v.obstruction
        lines.append(f"obstruction: {o.kind}")
        for k, val in o.values.items():
            lines.append(f"  {k}: {json.dumps(_plain(val))}")
        if o.details:
            lines.append(f"  {o.details}")
    if v.budget_used:
        lines.append("budget used: " + json.dumps(_plain(v.budget_used)))
    lines += [f"note: {n}" for n in v.notes]
    return lines


def _plain(x):
    from .verdict import _jsonable
    return _jsonable(x)


def _load_hints(path):
    if path is None:
        return ()
    m = read_matrix(path)
    return ({"embedding": m},)


def cmd_greens(args) -> int:
    a, b = read_matrix(args.a), read_matrix(args.b)
    rel = args.relation
    if rel == "leqL":
        v = greens.leq_L(a, b)
    elif rel == "leqR":
        v = greens.leq_R(a, b)
    elif rel == "relL":
        v = greens.rel_L(a, b)
    elif rel == "relR":
        v = greens.rel_R(a, b)
    elif rel == "relH":
        v = greens.rel_H(a, b)
    elif rel == "leqJ":
        v = greens.leq_J_decide(a, b, rounds=args.budget, seeds=args.seeds, seed=args.seed,
                                hints=_load_hints(args.hint))
    elif rel == "relJ":
        v = greens.rel_J_decide(a, b, rounds=args.budget, seeds=args.seeds, seed=args.seed,
                                hints=_load_hints(args.hint))
    else:
        v = greens.rel_D_decide(a, b, budget=args.budget * 1000,
                                trust_extension=args.trust_extension)
    data = {"relation": RELATIONS[rel], **v.to_dict()}
    lines = _verdict_lines(f"A {RELATIONS[rel]} B", v)
    if args.diagnostics:
        diag = greens.isometry_diagnostics(a, b, mode=args.metric_mode, seed=args.seed)
        data["isometry_diagnostics"] = _plain(diag)
        lines.append("isometry diagnostics (report only, not a decision):")
        for mode, entry in diag["modes"].items():
            for k, val in entry.items():
                lines.append(f"  [{mode}] {k}: {json.dumps(_plain(val))}")
    if args.witness and v.witness is not None:
        Path(args.witness).write_text(json.dumps(v.witness.to_dict(), indent=2) + "\n")
    _emit(data, lines, args.json)
    return v.outcome.exit_code


def cmd_rank(args) -> int:
    a = read_matrix(args.file)
    flavor = Flavor.parse(args.flavor_override) if args.flavor_override else a.flavor
    if flavor < a.narrowest_flavor():
        raise TropicalError(f"entries of the matrix are not all in {flavor.value}")
    rep = ranks.rank_report(a, flavor, args.max_n)
    d = rep.to_dict()
    lines = [f"semiring: {d['semiring']}"]
    for k in ("row_rank", "col_rank", "gm_row", "gm_col", "tropical", "determinantal"):
        lines.append(f"{k}: {'n/a' if d[k] is None else d[k]}")
    lo, hi = rep.factor_rank
    lines.append(f"factor_rank: {lo}" if lo == hi else f"factor_rank: [{lo}, {hi}]")
    lines += [f"flag {k}: {v}" for k, v in d["flags"].items()]
    _emit(d, lines, args.json)
    return 0 if all(rep.flags.values()) else 1


def cmd_examples(args) -> int:
    names = list(BUNDLES) if args.name == "all" else [args.name]
    results = [BUNDLES[n]() for n in names]
    lines = [line for r in results for line in r.lines()]
    _emit({"bundles": [r.to_dict() for r in results]}, lines, args.json)
    return 0 if all(r.passed for r in results) else 1


def cmd_export_figure(args) -> int:
    a = read_matrix(args.file)
    fig = figure_data(a, args.space, samples=args.samples, seed=args.seed,
                      chart_coord=args.chart_coord)
    out = Path(args.out)
    if out.suffix.lower() == ".svg":
        out.write_text(to_svg(fig))
    elif out.suffix.lower() == ".csv":
        out.write_text(to_csv(fig))
    else:
        raise ValueError("output file must end in .svg or .csv")
    print(f"wrote {out}: {len(fig.vertices)} vertices, {len(fig.samples)} samples, "
          f"chart coordinate {fig.chart_coord + 1}")
    for v in fig.vertices:
        print("  (" + ", ".join(format_scalar(x) for x in v) + ")")
    return 0


def cmd_fuzz(args) -> int:
    rep = run_suite(args.suite, args.trials, args.seed)
    data = {"suite": rep.name, "trials": rep.trials, "violations": _plain(rep.violations),
            "passed": rep.passed}
    lines = [f"{rep.name}: {rep.trials} trials, {len(rep.violations)} violations"
             f" -> {'pass' if rep.passed else 'FAIL'}"]
    lines += [f"  {v}" for v in rep.violations[:10]]
    _emit(data, lines, args.json)
    return 0 if rep.passed else 1


def cmd_fixtures(args) -> int:
    if args.name not in FIXTURES:
        raise ValueError(f"unknown fixture {args.name!r}; choose from {', '.join(FIXTURES)}")
    text = serialize_matrix(FIXTURES[args.name])
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tropgreen", description="Green's relations for tropical matrices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("greens", help="decide a Green's relation between two matrices")
    g.add_argument("relation", choices=list(RELATIONS))
    g.add_argument("a")
    g.add_argument("b")
    g.add_argument("--budget", type=int, default=greens.DEFAULT_ROUNDS,
                   help="rounds per seed for J; thousands of search nodes for D")
    g.add_argument("--seeds", type=int, default=greens.DEFAULT_SEEDS)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--hint", help="matrix file with a monomial embedding for J")
    g.add_argument("--witness", metavar="FILE", help="write the witness as JSON")
    g.add_argument("--trust-extension", action="store_true",
                   help="report Fails for D once every bijection is ruled out")
    g.add_argument("--diagnostics", action="store_true",
                   help="append distance data of the projective row spaces")
    g.add_argument("--metric-mode", choices=MODES + ("both",), default="both")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_greens)

    r = sub.add_parser("rank", help="report every rank of a matrix")
    r.add_argument("file")
    r.add_argument("--flavor-override", choices=[f.value for f in Flavor])
    r.add_argument("--max-n", type=int, default=ranks.DEFAULT_MAX_N)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_rank)

    e = sub.add_parser("examples", help="run the worked-example checks")
    e.add_argument("name", choices=list(BUNDLES) + ["all"])
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_examples)

    f = sub.add_parser("export-figure", help="write a projective space picture")
    f.add_argument("file")
    f.add_argument("--space", choices=("rows", "cols"), default="cols")
    f.add_argument("--out", required=True, help="output path ending in .svg or .csv")
    f.add_argument("--samples", type=int, default=0)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--chart-coord", type=int, help="1-based coordinate to normalize at")
    f.set_defaults(func=cmd_export_figure)

    z = sub.add_parser("fuzz", help="run a seeded property suite")
    z.add_argument("suite", choices=SUITES)
    z.add_argument("trials", type=int, nargs="?")
    z.add_argument("seed", type=int, nargs="?", default=0)
    z.add_argument("--json", action="store_true")
    z.set_defaults(func=cmd_fuzz)

    x = sub.add_parser("fixtures", help="print a built-in matrix as a matrix file")
    x.add_argument("name", choices=list(FIXTURES))
    x.add_argument("--out")
    x.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "chart_coord", None) is not None:
        args.chart_coord -= 1
    try:
        return args.func(args)
    except (MatrixFileError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (TropicalError, ChartUndefined, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
