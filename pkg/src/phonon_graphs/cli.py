"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input or parse error, 3 numerical
failure.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .bounds import alpha_E, alpha_N, bound_report, classify_family
from .capacity import capacity_profile
from .graph import (
    DisconnectedGraphError,
    GeneratorSpec,
    GraphError,
    generate,
    is_connected,
    parse_generator,
    read_edge_list,
)
from .spectral import graph_spectrum
from .sweeps import EXPERIMENTS, SweepConfig, format_number, neighbours_for_power, parse_range, run_sweep
from .thermo import regime_indicator, thermo_point

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _add_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="edge-list file")
    src.add_argument("--gen", help="generator, e.g. path:4, cycle:6, complete:5, circulant:1000,100")


def _load(args):
    if args.file:
        g = read_edge_list(args.file)
    else:
        g = generate(parse_generator(args.gen))
    if not is_connected(g):
        raise DisconnectedGraphError()
    return g


def _fmt(v) -> str:
    return "n/a" if v is None else format_number(v)


def cmd_spectrum(args, out):
    g = _load(args)
    s = graph_spectrum(g)
    prof = capacity_profile(g, spectrum=s)
    print("eigenvalues: " + " ".join(format_number(x) for x in s.eigenvalues), file=out)
    print(f"cap_avg: {format_number(prof.average)}", file=out)
    print(f"kirchhoff: {format_number(prof.kirchhoff)}", file=out)
    print(f"cap_ratio: {format_number(prof.ratio)}", file=out)


def cmd_thermo(args, out):
    g = _load(args)
    s = graph_spectrum(g)
    prof = capacity_profile(g, spectrum=s)
    tp = thermo_point(s.eigenvalues, args.beta)
    ind = regime_indicator(tp, args.volume)
    rep = bound_report(prof, s.eigenvalues, args.beta)
    for key, value in [
        ("beta", tp.beta),
        ("avg_N", tp.avg_N),
        ("avg_H", tp.avg_H),
        ("heat", tp.heat),
        ("regime_indicator", ind.value),
        ("volume", ind.volume),
        ("cap_ratio", rep.cap_ratio),
        ("phonon_bound", rep.phonon_bound),
        ("holds_N", rep.holds_N),
        ("heat_bound", rep.heat_bound),
        ("holds_c", rep.holds_c),
    ]:
        print(f"{key}: {_fmt(value)}", file=out)


def cmd_constants(args, out):
    print("k,alpha_N", file=out)
    for k in range(2, args.kmax + 1):
        print(f"{k},{format_number(alpha_N(k))}", file=out)
    x, a = alpha_E()
    print(f"alpha_E: {format_number(a)}", file=out)
    print(f"x_star_E: {format_number(x)}", file=out)


def _family(name: str):
    if name in ("path", "complete", "cycle"):
        return lambda n: GeneratorSpec(name, n)
    if name.startswith("circulant-power:"):
        r = float(name.split(":", 1)[1])
        return lambda n: GeneratorSpec("circulant", n, neighbours_for_power(n, r))
    raise UsageError(f"unknown family {name!r}; use path, cycle, complete or circulant-power:<r>")


def cmd_classify(args, out):
    ns = parse_range(args.ns, integer=True)
    res = classify_family(_family(args.family), ns, tolerance=args.tolerance)
    print("n,cap_ratio", file=out)
    for n, ratio in res.samples:
        print(f"{n},{format_number(ratio)}", file=out)
    print(f"slope: {format_number(res.slope)}", file=out)
    print(f"verdict: {res.verdict}", file=out)


def cmd_sweep(args, out):
    kwargs = dict(
        experiment=args.experiment,
        r_values=list(parse_range(args.r_values)),
        beta=args.beta,
        n=args.n,
        output_dir=args.out,
        log_scale=args.log,
        include_complete=args.include_complete,
    )
    if args.n_range:
        kwargs["n_range"] = list(parse_range(args.n_range, integer=True))
    if args.l_range:
        kwargs["l_range"] = list(parse_range(args.l_range, integer=True))
    if args.T_range:
        kwargs["T_range"] = list(parse_range(args.T_range))
    try:
        config = SweepConfig(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows, csv_path, svg_path = run_sweep(config)
    print(f"{len(rows)} rows -> {csv_path}", file=out)
    print(f"plot -> {svg_path}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="phonon-graphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="Laplacian eigenvalues and Kirchhoff index")
    _add_source(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("thermo", help="thermodynamics and bounds at one temperature")
    _add_source(p)
    p.add_argument("--beta", type=_positive, required=True)
    p.add_argument("--volume", type=_positive, default=1.0)
    p.set_defaults(func=cmd_thermo)

    p = sub.add_parser("constants", help="bound constants alpha_N(k) and alpha_E")
    p.add_argument("--kmax", type=int, default=5)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("classify", help="bounded/divergent verdict for a graph family")
    p.add_argument("--family", required=True, help="path, cycle, complete or circulant-power:<r>")
    p.add_argument("--ns", default="10:200:10", help="sizes as start:stop:step or a comma list")
    p.add_argument("--tolerance", type=float, default=0.1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="run a sweep experiment, writing CSV and SVG")
    p.add_argument("experiment", choices=EXPERIMENTS)
    p.add_argument("--n-range", help="n grid for phonons_vs_n/cap_vs_n (default 10:1000:10)")
    p.add_argument("--l-range", help="l grid for heat_vs_l/bound_vs_T")
    p.add_argument("--T-range", dest="T_range", help="temperature grid for bound_vs_T (default 0.01:3:0.01)")
    p.add_argument("--r-values", default="0,0.2,0.4,0.6,0.8,1")
    p.add_argument("--beta", type=_positive, default=1.0)
    p.add_argument("--n", type=int, default=1000, help="fixed vertex count for heat_vs_l/bound_vs_T")
    p.add_argument("--include-complete", action="store_true", help="append K_n to heat_vs_l")
    p.add_argument("--log", action="store_true", help="log-scale y axis")
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, np.linalg.LinAlgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
