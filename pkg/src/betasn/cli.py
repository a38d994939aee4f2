"""Command line interface to the distribution library.

Subcommands: ``eval`` (pdf/cdf/quantile at a point), ``grid`` (tabulate
pdf and cdf on an even grid), ``sample`` (reproducible draws),
``moments`` (summary moments as JSON), ``moment-grid`` (recompute the
reference moment grid and report deviations), ``check`` (run a named
verification suite).

Exit codes are fixed: 0 success, 1 check failure, 2 usage or parameter
error, 3 numerical failure.  Data goes to stdout, diagnostics to
stderr.  CSV output uses a header row, comma separators, 12 significant
digits, and LF line endings; JSON output is one object per record with
a stable key order.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .balakrishnan import GBSN, SNB, TBSN
from .betafamily import GB1, Beta, BetaHalfNormal, BetaNormal, Kumaraswamy
from .bsn import BetaSkewNormal, sample_rejection
from .checks import SUITES, report_json, run_suite
from .quadrature import IntegrationError, QuadratureSpec
from .reference import compare_grid
from .skewnormal import Normal, SkewNormal

# one row per parameter flag: argparse dest, flag spelling, value parser
_PARAM_SPECS = (
    ("lam", "--lambda", float),
    ("lambda1", "--lambda1", float),
    ("lambda2", "--lambda2", float),
    ("a", "--a", float),
    ("b", "--b", float),
    ("p", "--p", float),
    ("q", "--q", float),
    ("n", "--n", int),
    ("m", "--m", int),
    ("mu", "--mu", float),
    ("sigma", "--sigma", float),
)
_FLAG_OF = {dest: flag for dest, flag, _ in _PARAM_SPECS}

# family name -> (required params, optional params, constructor); the
# constructor receives the given parameters and the quadrature spec
# (used only by the families that integrate for their cdf)
_FAMILIES = {
    "normal": (
        (),
        ("mu", "sigma"),
        lambda g, spec: Normal(g.get("mu", 0.0), g.get("sigma", 1.0)),
    ),
    "sn": (
        (),
        ("lam", "mu", "sigma"),
        # for sn the location/scale flags set xi and psi
        lambda g, spec: SkewNormal(
            g.get("mu", 0.0), g.get("sigma", 1.0), g.get("lam", 0.0)
        ),
    ),
    "snb": (
        ("lam", "n"),
        ("mu", "sigma"),
        lambda g, spec: SNB(
            g["lam"], g["n"], g.get("mu", 0.0), g.get("sigma", 1.0), spec=spec
        ),
    ),
    "gbsn": (
        ("lam", "n", "m"),
        (),
        lambda g, spec: GBSN(g["lam"], g["n"], g["m"], spec=spec),
    ),
    "tbsn": (
        ("lambda1", "lambda2", "n", "m"),
        ("mu", "sigma"),
        lambda g, spec: TBSN(
            g["lambda1"],
            g["lambda2"],
            g["n"],
            g["m"],
            g.get("mu", 0.0),
            g.get("sigma", 1.0),
            spec=spec,
        ),
    ),
    "beta": (("a", "b"), (), lambda g, spec: Beta(g["a"], g["b"])),
    "gb1": (
        ("a", "b", "p", "q"),
        (),
        lambda g, spec: GB1(g["a"], g["b"], g["p"], g["q"]),
    ),
    "kumaraswamy": (
        ("p", "b"),
        (),
        lambda g, spec: Kumaraswamy(g["p"], g["b"]),
    ),
    "bn": (
        ("a", "b"),
        ("mu", "sigma"),
        lambda g, spec: BetaNormal(g["a"], g["b"], g.get("mu", 0.0), g.get("sigma", 1.0)),
    ),
    "bhn": (("a", "b"), (), lambda g, spec: BetaHalfNormal(g["a"], g["b"])),
    "bsn": (
        ("lam", "a", "b"),
        ("mu", "sigma"),
        lambda g, spec: BetaSkewNormal(
            g["lam"], g["a"], g["b"], g.get("mu", 0.0), g.get("sigma", 1.0)
        ),
    ),
}

_FAMILY_HELP = """\
families and their parameter flags (brackets mark optional flags):
  normal       [--mu --sigma]
  sn           [--lambda --mu --sigma]    (--mu/--sigma set location xi, scale psi)
  snb          --lambda --n [--mu --sigma]
  gbsn         --lambda --n --m
  tbsn         --lambda1 --lambda2 --n --m [--mu --sigma]
  beta         --a --b
  gb1          --a --b --p --q
  kumaraswamy  --p --b
  bn           --a --b [--mu --sigma]
  bhn          --a --b
  bsn          --lambda --a --b [--mu --sigma]
"""


def _fmt(value):
    """Format one number with 12 significant digits."""
    return f"{float(value):.12g}"


def _load_spec(path):
    """Parse a key=value config file into a QuadratureSpec, or None."""
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read config file: {exc}") from exc
    mapping = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno} is not key=value: {line!r}")
        key, _, value = line.partition("=")
        mapping[key.strip()] = value.strip()
    return QuadratureSpec.from_mapping(mapping)


def _make_dist(args, spec):
    """Validate the parameter flags for the chosen family and build it."""
    required, optional, build = _FAMILIES[args.family]
    given = {}
    for dest, _, _ in _PARAM_SPECS:
        value = getattr(args, dest)
        if value is not None:
            given[dest] = value
    for name in required:
        if name not in given:
            raise ValueError(f"family {args.family} requires {_FLAG_OF[name]}")
    allowed = set(required) | set(optional)
    for name in given:
        if name not in allowed:
            raise ValueError(f"family {args.family} does not take {_FLAG_OF[name]}")
    return build(given, spec)


def _cmd_eval(args):
    spec = _load_spec(args.config)
    dist = _make_dist(args, spec)
    if args.what == "pdf":
        value = dist.pdf(args.at)
    elif args.what == "cdf":
        value = dist.cdf(args.at)
    else:
        value = dist.quantile(args.at)
    print(_fmt(value))
    return 0


def _cmd_grid(args):
    spec = _load_spec(args.config)
    dist = _make_dist(args, spec)
    if not args.x_from < args.x_to:
        raise ValueError("--from must be strictly less than --to")
    if args.points < 2:
        raise ValueError("--points must be at least 2")
    xs = np.linspace(args.x_from, args.x_to, args.points)
    pdf = np.atleast_1d(dist.pdf(xs))
    cdf = np.atleast_1d(dist.cdf(xs))
    if args.format == "csv":
        print("x,pdf,cdf")
        for x, d, c in zip(xs, pdf, cdf):
            print(f"{_fmt(x)},{_fmt(d)},{_fmt(c)}")
    else:
        for x, d, c in zip(xs, pdf, cdf):
            print(json.dumps({"x": float(x), "pdf": float(d), "cdf": float(c)}))
    return 0


def _cmd_sample(args):
    spec = _load_spec(args.config)
    dist = _make_dist(args, spec)
    if args.count < 1:
        raise ValueError("--count must be at least 1")
    if args.method == "rejection":
        if args.family != "bsn":
            raise ValueError("rejection sampling is only available for family bsn")
        if args.b != 1.0 or args.a < 1.0 or not float(args.a).is_integer():
            raise ValueError(
                "rejection sampling requires integer --a >= 1 and --b equal to 1"
            )
        batch = sample_rejection(args.lam, int(args.a), args.count, args.seed)
        mu = args.mu if args.mu is not None else 0.0
        sigma = args.sigma if args.sigma is not None else 1.0
        values = mu + sigma * batch.values
    else:
        values = dist.sample(args.count, args.seed)
    if args.format == "csv":
        print("value")
        for v in values:
            print(_fmt(v))
    else:
        for v in values:
            print(json.dumps({"value": float(v)}))
    return 0


def _cmd_moments(args):
    spec = _load_spec(args.config)
    dist = _make_dist(args, spec)
    summary = dist.moments(spec)
    print(
        json.dumps(
            {
                "mean": float(summary.mean),
                "sd": float(summary.sd),
                "skewness": float(summary.skewness),
                "kurtosis": float(summary.kurtosis),
            },
            indent=2,
        )
    )
    return 0


def _cmd_moment_grid(args):
    spec = _load_spec(args.config)
    rows = compare_grid(spec)
    failed = 0
    for cmp in rows:
        if not cmp.passed:
            failed += 1
        record = {
            "a": cmp.row.a,
            "b": cmp.row.b,
            "lam": cmp.row.lam,
            "computed": {
                "mean": float(cmp.computed.mean),
                "sd": float(cmp.computed.sd),
                "skewness": float(cmp.computed.skewness),
                "kurtosis": float(cmp.computed.kurtosis),
            },
            "reference": {
                "mean": cmp.row.mean,
                "sd": cmp.row.sd,
                "skewness": cmp.row.skewness,
                "kurtosis": cmp.row.kurtosis,
            },
            "deviations": {k: float(v) for k, v in cmp.deviations.items()},
            "tolerance": cmp.tolerance,
            "excluded": list(cmp.excluded),
            "pass": cmp.passed,
        }
        print(json.dumps(record))
    print(json.dumps({"rows": len(rows), "failed": failed, "pass": failed == 0}))
    return 0 if failed == 0 else 1


def _cmd_check(args):
    spec = _load_spec(args.config)
    report = run_suite(args.suite, seed=args.seed, spec=spec)
    sys.stdout.write(report_json(report))
    return 0 if report["passed"] else 1


def _add_family_flags(sub):
    sub.add_argument(
        "--family", required=True, choices=sorted(_FAMILIES), help="distribution family"
    )
    for dest, flag, kind in _PARAM_SPECS:
        sub.add_argument(flag, dest=dest, type=kind, default=None, metavar="X")


def _add_config_flag(sub):
    sub.add_argument(
        "--config",
        default=None,
        metavar="PATH",
        help="key=value file overriding quadrature defaults "
        "(abs_tol, rel_tol, truncation, max_subdivisions)",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="betasn",
        description="Evaluate, tabulate, sample, and verify the beta "
        "skew-normal family of distributions.",
        allow_abbrev=False,
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser(
        "eval",
        help="evaluate pdf, cdf, or quantile at a point",
        epilog=_FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        allow_abbrev=False,
    )
    _add_family_flags(p)
    _add_config_flag(p)
    p.add_argument("--what", required=True, choices=("pdf", "cdf", "quantile"))
    p.add_argument("--at", required=True, type=float, metavar="X")
    p.set_defaults(func=_cmd_eval)

    p = subs.add_parser(
        "grid",
        help="tabulate pdf and cdf on an even grid",
        epilog=_FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        allow_abbrev=False,
    )
    _add_family_flags(p)
    _add_config_flag(p)
    p.add_argument("--from", dest="x_from", required=True, type=float, metavar="X")
    p.add_argument("--to", dest="x_to", required=True, type=float, metavar="X")
    p.add_argument("--points", required=True, type=int, metavar="K")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_grid)

    p = subs.add_parser(
        "sample",
        help="draw reproducible samples",
        epilog=_FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        allow_abbrev=False,
    )
    _add_family_flags(p)
    _add_config_flag(p)
    p.add_argument("--count", required=True, type=int, metavar="K", help="number of draws")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument(
        "--method",
        choices=("inverse", "rejection"),
        default="inverse",
        help="rejection needs family bsn with integer --a >= 1 and --b 1",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_sample)

    p = subs.add_parser(
        "moments",
        help="mean, sd, skewness, kurtosis as JSON",
        epilog=_FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        allow_abbrev=False,
    )
    _add_family_flags(p)
    _add_config_flag(p)
    p.set_defaults(func=_cmd_moments)

    p = subs.add_parser(
        "moment-grid",
        help="recompute the reference moment grid and report deviations",
        allow_abbrev=False,
    )
    _add_config_flag(p)
    p.set_defaults(func=_cmd_moment_grid)

    p = subs.add_parser(
        "check",
        help="run a named verification suite and print its JSON report",
        allow_abbrev=False,
    )
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=0, metavar="S")
    _add_config_flag(p)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IntegrationError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
