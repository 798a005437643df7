"""Command-line front end: ``intcurv <subcommand> [graph source] [options]``.

Exit codes: 0 success, 1 a verification or bound check failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import report
from .bounds import audit
from .curvature import alpha_profile, curvature_profile
from .errors import IntCurvError
from .graph import FAMILIES, Graph, all_pairs_distances, generate, load_graph_file
from .rational import format_float, parse_rational
from .spectral import spectrum
from .verify import SUITE_VERSION, run_suite


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except IntCurvError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _alpha(text: str) -> Fraction:
    value = _rational(text)
    if not 0 <= value < 1:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1), got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_argument_group("graph source (exactly one of --input / --family)")
    grp.add_argument("--input", metavar="PATH", help="edge-list file, or JSON graph if it ends in .json")
    grp.add_argument("--family", choices=FAMILIES)
    grp.add_argument("--n", type=int, help="size for path / cycle")
    grp.add_argument("--m", type=int, help="size for complete / dumbbell / binary_tree")
    grp.add_argument("--k", type=int, help="number of leaves for star")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("table", "json", "csv"), default="table")
    out.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="intcurv", description="Exact Lin-Lu-Yau curvature and integral-curvature bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[source], help="write a graph as an edge list or JSON")
    gen.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    gen.add_argument("--output", metavar="PATH")

    cur = sub.add_parser("curvature", parents=[source, out], help="per-edge curvature profile")
    cur.add_argument("--alpha", type=_alpha, help="also report alpha-Ricci curvature at this idleness")

    for name, text in (("bounds", "integral-curvature bounds"), ("audit", "curvature, spectrum and bounds together")):
        p = sub.add_parser(name, parents=[source, out], help=text)
        p.add_argument("--kappa0", type=_rational, help="threshold; default sweeps the distinct edge curvatures")
        p.add_argument("--alpha", type=_alpha, help="also evaluate the alpha-Ricci variants")

    sp = sub.add_parser("spectrum", parents=[source, out], help="eigenvalues of I - D^-1 A")
    sp.add_argument("--tol", type=float, default=1e-9)

    vp = sub.add_parser("verify-paper", parents=[out], help=f"run the reproduction suite ({SUITE_VERSION})")
    vp.set_defaults(input=None, family=None)
    return parser


def _graph(args, parser) -> Graph:
    if (args.input is None) == (args.family is None):
        parser.error("give exactly one graph source: --input PATH or --family NAME")
    if args.input is not None:
        return load_graph_file(args.input)
    return generate(args.family, n=args.n, m=args.m, k=args.k)


def _render(rows: list[dict], data: dict, fmt: str) -> str:
    if fmt == "json":
        return report.to_json(data)
    if fmt == "csv":
        return report.to_csv(rows)
    return report.to_table(rows)


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _run(args, parser) -> int:
    if args.command == "verify-paper":
        results = run_suite()
        data = report.check_dict(results, SUITE_VERSION)
        rows = [{"check": r.name, "result": "PASS" if r.passed else "FAIL", "detail": r.detail} for r in results]
        _emit(_render(rows, data, args.format), args.output)
        return 0 if data["passed"] else 1

    g = _graph(args, parser)
    if args.command == "gen":
        _emit(report.to_json(g.to_json()) if args.format == "json" else g.to_edge_list(), args.output)
        return 0

    dm = all_pairs_distances(g)
    if args.command == "spectrum":
        data = report.spectrum_dict(spectrum(g, args.tol))
        rows = [{"index": i, "eigenvalue": x} for i, x in enumerate(data["eigenvalues"])]
        text = _render(rows, data, args.format)
        if args.format == "table":
            text += f"lambda1 = {format_float(data['lambda1'])}\n"
        _emit(text, args.output)
        return 0

    profile = curvature_profile(g, dm)
    alpha = getattr(args, "alpha", None)
    if args.command == "curvature":
        alpha_values = alpha_profile(g, dm, alpha) if alpha is not None else None
        data = report.curvature_dict(g, profile, alpha_values, alpha)
        _emit(_render(data["edges"], data, args.format), args.output)
        return 0

    reports = audit(g, args.kappa0, alpha, profile=profile)
    bound_rows = [report.bound_dict(r) for r in reports]
    ok = all(r.all_hold for r in reports)
    if args.command == "bounds":
        _emit(_render(bound_rows, {"reports": bound_rows}, args.format), args.output)
        return 0 if ok else 1

    curv = report.curvature_dict(g, profile)
    spectral = report.spectrum_dict(spectrum(g))
    data = {"graph": {"n": g.n, "m": g.num_edges, "diameter": dm.diameter}, "curvature": curv, "spectrum": spectral, "reports": bound_rows}
    if args.format == "table":
        text = (
            f"n={g.n}  |E|={g.num_edges}  diameter={dm.diameter}  lambda1={format_float(spectral['lambda1'])}\n\n"
            + report.to_table(curv["edges"])
            + "\n"
            + report.to_table(bound_rows)
        )
    else:
        text = _render(bound_rows, data, args.format)
    _emit(text, args.output)
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, parser)
    except IntCurvError as exc:
        print(f"intcurv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"intcurv: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
