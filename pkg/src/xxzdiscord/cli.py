"""
Command-line front end.

    xxzdiscord point --model dz --J 1 --Jz 0.2 --D 1 --T 1
    xxzdiscord sweep --config spec.json [--out rows.csv]
    xxzdiscord figure 1a --out fig1a.csv
    xxzdiscord critical-temp --model dz --J 1 --Jz 0.2 --D 1 --T-hi 10
    xxzdiscord opposite --model dx --J 1 --Jz 0.2 --T 1 --D-min 0.3 --D-max 1.2

Exit status is 0 on success, 2 on usage errors and 1 on numerical failure.
Errors go to stderr prefixed with ``error:``.
"""

import argparse
import json
import sys
from dataclasses import asdict

from . import __version__
from .correlations import correlation_report, critical_temperature
from .errors import DomainError, NumericalError, UsageError, ValidationError
from .models import ModelParams, concurrence_closed_dz
from .sweep import (
    FIGURE_IDS,
    PARAMETERS,
    QUANTITIES,
    Axis,
    SweepSpec,
    detect_opposite_tendency,
    figure_csv,
    load_config,
    run_sweep,
)

EXIT_OK, EXIT_NUMERICAL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_model_args(p, with_T=True, with_D=True):
    p.add_argument("--model", required=True, type=str.lower, choices=["dz", "dx"])
    p.add_argument("--J", type=float, required=True)
    p.add_argument("--Jz", type=float, required=True)
    if with_D:
        p.add_argument("--D", type=float, required=True)
    if with_T:
        p.add_argument("--T", type=float, required=True)


def _add_threads(p):
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")


def _parse_axis(text):
    # NAME:START:STOP:COUNT
    parts = text.split(":")
    if len(parts) != 4:
        raise UsageError(f"axis {text!r} must look like NAME:START:STOP:COUNT")
    name = parts[0]
    if name not in PARAMETERS:
        raise UsageError(f"unknown axis {name!r}; expected one of {PARAMETERS}")
    try:
        start, stop, count = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError:
        raise UsageError(f"axis {text!r} has non-numeric bounds") from None
    return Axis.linspace(name, start, stop, count)


def _parse_fixed(items):
    fixed = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--fixed expects NAME=VALUE, got {item!r}")
        try:
            fixed[name] = float(value)
        except ValueError:
            raise UsageError(f"--fixed {item!r}: value is not a number") from None
    return fixed


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xxzdiscord", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("point", help="correlation report for one parameter set, as JSON")
    _add_model_args(p)

    p = sub.add_parser("sweep", help="grid sweep to CSV")
    p.add_argument("--config", help="JSON file with SweepSpec fields")
    p.add_argument("--model", type=str.lower, choices=["dz", "dx"])
    p.add_argument("--fixed", action="append", metavar="NAME=VALUE")
    p.add_argument("--axis1", metavar="NAME:START:STOP:COUNT")
    p.add_argument("--axis2", metavar="NAME:START:STOP:COUNT")
    p.add_argument("--quantities", help=f"comma-separated subset of {','.join(QUANTITIES)}")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    _add_threads(p)

    p = sub.add_parser("figure", help="regenerate one figure panel as CSV")
    p.add_argument("id", help=f"one of {', '.join(FIGURE_IDS)}")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    _add_threads(p)

    p = sub.add_parser("critical-temp", help="temperature where concurrence vanishes")
    _add_model_args(p, with_T=False)
    p.add_argument("--T-hi", dest="T_hi", type=float, default=10.0)

    p = sub.add_parser("opposite", help="D intervals where discord and concurrence move oppositely")
    _add_model_args(p, with_D=False)
    p.add_argument("--D-min", dest="D_min", type=float, required=True)
    p.add_argument("--D-max", dest="D_max", type=float, required=True)
    p.add_argument("--num", type=int, default=46)
    return parser


def _params(args, T=None):
    return ModelParams(args.model, args.J, args.Jz, args.D, args.T if T is None else T)


def _emit(text, out=None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_point(args):
    p = _params(args)
    report = correlation_report(p).to_dict()
    payload = {"params": asdict(p), **report}
    if p.model == "Dz":
        payload["concurrence_closed"] = concurrence_closed_dz(p)
    _emit(json.dumps(payload, indent=2) + "\n")


def _cmd_sweep(args):
    cfg = load_config(args.config).to_config() if args.config else {}
    if args.model:
        cfg["model"] = args.model
    if args.fixed:
        cfg["fixed"] = {**cfg.get("fixed", {}), **_parse_fixed(args.fixed)}
    if args.axis1:
        cfg["axis1"] = _parse_axis(args.axis1).to_config()
    if args.axis2:
        cfg["axis2"] = _parse_axis(args.axis2).to_config()
    if args.quantities:
        cfg["quantities"] = [q.strip() for q in args.quantities.split(",") if q.strip()]
    spec = SweepSpec.from_config(cfg)
    _emit(run_sweep(spec, threads=args.threads).to_csv(), args.out)


def _cmd_figure(args):
    _emit(figure_csv(args.id, threads=args.threads), args.out)


def _cmd_critical(args):
    t_c, status = critical_temperature(_params(args, T=1.0), args.T_hi, full_output=True)
    _emit(json.dumps({"T_c": t_c, "status": status}) + "\n")


def _cmd_opposite(args):
    intervals = detect_opposite_tendency(
        args.model, {"J": args.J, "J_z": args.Jz}, (args.D_min, args.D_max), args.T, num=args.num
    )
    _emit(json.dumps([asdict(i) for i in intervals], indent=2) + "\n")


_COMMANDS = {
    "point": _cmd_point,
    "sweep": _cmd_sweep,
    "figure": _cmd_figure,
    "critical-temp": _cmd_critical,
    "opposite": _cmd_opposite,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _COMMANDS[args.command](args)
    except (UsageError, ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, ArithmeticError) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
