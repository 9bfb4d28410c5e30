"""Command-line front end.

Every subcommand prints one JSON document. Rationals are written as strings
in lowest terms ("3/2", "-1"); key order is fixed per command so output is
byte-deterministic. Exit status is 0 on success (including negative
verdicts), 2 for malformed input and 1 for internal failures.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import __version__
from .bounds import (
    BoundsError,
    bound_problem,
    codim_conclusion,
    n0_search,
    ss_inequality,
    theorem_inequalities,
    uniform_problem,
)
from .bruhat import INFINITE, bruhat_reps, fiber_codimension, positive_reps
from .building import parabolic_stats
from .hodge import (
    ConditionInput,
    HodgeError,
    HodgeProfile,
    lv_pipeline,
    numerical_condition,
    profile_from_chis,
    surface_hilbert,
)
from .polygon import adjoint_polygon
from .positivity import (
    StandardParabolic,
    block_parabolic,
    point_parabolic,
    positivity_pairing,
    standard_parabolic,
    whole_group,
)
from .root_data import GroupFamily, RootDataError, RootDatum, build_root_datum

log = logging.getLogger("flagbound")

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class InputError(ValueError):
    """Malformed user input, reported with exit status 2."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def parse_rational(text: str) -> Fraction:
    s = str(text).strip()
    if not _RATIONAL.match(s):
        raise ValueError(f"not a rational of the form p or p/q: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


def format_rational(value) -> str:
    return str(Fraction(value))


def parse_point(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(v) for v in text.split(","))


def format_point(x) -> str:
    return ",".join(format_rational(v) for v in x)


def parse_int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    return [int(v) for v in text.split(",")]


def parse_parabolic(datum: RootDatum, text: str) -> StandardParabolic:
    """``borel``, ``all``, ``blocks:2,1`` or 1-based simple-root indices ``1,3``."""
    s = text.strip().lower()
    if s in ("", "borel", "b", "none"):
        return standard_parabolic(datum, ())
    if s in ("all", "g"):
        return whole_group(datum)
    if s.startswith("blocks:"):
        return block_parabolic(datum, parse_int_list(s[len("blocks:"):]))
    return standard_parabolic(datum, [i - 1 for i in parse_int_list(s)])


def _field(name: str, fn: Callable, *args):
    try:
        return fn(*args)
    except (ValueError, ZeroDivisionError, RootDataError) as exc:
        raise InputError(name, str(exc)) from exc


def _datum(args) -> RootDatum:
    if args.group is None:
        raise InputError("--group", "required")
    fam = _field("--group", GroupFamily.parse, args.group)
    return build_root_datum(fam)


def _point(args, datum: RootDatum) -> tuple:
    if args.point is None:
        raise InputError("--point", "required")
    x = _field("--point", parse_point, args.point)
    return _field("--point", datum.check_point, x)


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float) and value == INFINITE:
        return "infinite"
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# -- subcommands ------------------------------------------------------------

def cmd_polygon(args) -> Dict[str, Any]:
    D = _datum(args)
    p = adjoint_polygon(D, _point(args, D))
    if args.at is not None:
        t = _field("--at", parse_rational, args.at)
        return {"value": _field("--at", p.evaluate, t)}
    return {
        "slopes": list(p.slopes),
        "max": p.max_value(),
        "breakpoints": [[t, v] for t, v in p.breakpoints()],
    }


def cmd_stats(args) -> Dict[str, Any]:
    D = _datum(args)
    return parabolic_stats(D, _point(args, D)).to_json()


def cmd_positivity(args) -> Dict[str, Any]:
    D = _datum(args)
    x = _point(args, D)
    q = _field("--parabolic", parse_parabolic, D, args.parabolic)
    val = positivity_pairing(D, q, x)
    return {"pairing": val, "positive": val >= 0, "delta": list(q.delta_q_on_torus)}


def cmd_bruhat(args) -> Dict[str, Any]:
    D = _datum(args)
    q = _field("--q", parse_parabolic, D, args.q)
    if args.point is None:
        if args.p is None:
            raise InputError("--p", "required unless --point is given")
        p = _field("--p", parse_parabolic, D, args.p)
        return {"reps": [w.to_json() for w in bruhat_reps(D, q, p)]}
    x = _point(args, D)
    p = (_field("--p", parse_parabolic, D, args.p) if args.p is not None
         else _field("--point", point_parabolic, D, x))
    cells = _field("--p", positive_reps, D, q, p, x, args.threads)
    return {
        "cells": [
            {**c.w.to_json(), "pairing": c.pairing, "positive": c.is_positive,
             "fiber_dim": c.cell_fiber_dim}
            for c in cells
        ]
    }


def cmd_fiber_codim(args) -> Dict[str, Any]:
    D = _datum(args)
    x = _point(args, D)
    q = _field("--q", parse_parabolic, D, args.q)
    return {"codimension": _field("--point", fiber_codimension, D, x, q, args.threads)}


def cmd_bound(args) -> Dict[str, Any]:
    D = _datum(args)
    x = _point(args, D)
    bp = _field("--n", bound_problem, D, x, args.n, args.dim_c)
    ok = _field("--n", theorem_inequalities, bp)
    return {"inequalities": ok, "codimension": codim_conclusion(bp) if ok else None}


def cmd_n0(args) -> Dict[str, Any]:
    D = _datum(args)
    y = _point(args, D)
    slopes = None
    if args.slopes is not None:
        slopes = _field("--slopes", parse_point, args.slopes)
    up = _field("--slopes", uniform_problem, D, y, args.n, slopes)
    n0 = n0_search(up)
    if n0 is not None:
        return {"n0": n0}
    if not ss_inequality(up.dim_h, up.h_rank, up.h_p_ss):
        reason = "2 dim P^ss >= dim H + rk H"
    else:
        reason = "empty flag variety"
    return {"n0": None, "reason": reason}


def cmd_hodge_check(args) -> Dict[str, Any]:
    c = ConditionInput(args.d, args.g, args.chi_top_bar, args.chi_o_bar, args.symmetric)
    verdict, case = numerical_condition(c)
    return {"verdict": verdict, "case": case}


def _profile(args) -> HodgeProfile:
    if (args.chis is None) == (args.h is None):
        raise InputError("--chis", "give exactly one of --chis or --h")
    try:
        if args.chis is not None:
            return profile_from_chis(args.d, parse_int_list(args.chis), args.symmetric)
        return HodgeProfile(args.d, tuple(parse_int_list(args.h)), args.symmetric)
    except (HodgeError, ValueError) as exc:
        raise InputError("--chis" if args.chis is not None else "--h", str(exc)) from exc


def cmd_lv_pipeline(args) -> Dict[str, Any]:
    r = _field("--dim-base", lv_pipeline, _profile(args), args.dim_base)
    return {
        "h": list(r.profile.h),
        "e": r.profile.e,
        "group": str(r.family),
        "point": list(r.point),
        "stats": r.stats.to_json(),
        "dim_h": r.dim_h,
        "skull": r.skull,
        "skull_q": r.skull_q,
        "ss": r.ss,
        "implication": r.implication_holds,
        "n": r.n,
        "n0": r.n0,
        "ok": r.ok,
    }


def cmd_surface_hilbert(args) -> Dict[str, Any]:
    rows = _field("--c2", surface_hilbert, args.c2)
    return {
        "surfaces": [
            {"c1sq": s.c1sq, "chi_o": s.chi_o, "hilbert": list(s.hilbert)} for s in rows
        ]
    }


# -- parser -----------------------------------------------------------------

COMMANDS: Dict[str, Callable] = {}


def _common(suppress: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--quiet", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="print only the result object")
    parent.add_argument("--pretty", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="indent the JSON output")
    parent.add_argument("--threads", type=int, default=argparse.SUPPRESS if suppress else 1,
                        help="worker threads for Weyl enumeration")
    parent.add_argument("--no-strict", dest="strict", action="store_false",
                        default=argparse.SUPPRESS if suppress else True,
                        help="ignore unknown fields in problem files")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagbound", parents=[_common(False)],
                                     description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--problem", metavar="PATH",
                        help="read the command and its fields from a JSON file ('-' for stdin)")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    common = _common(True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        COMMANDS[name] = fn
        return sp

    def group_point(sp):
        sp.add_argument("--group", "--family", dest="group", metavar="SPEC",
                        help="gl:<e>, gsp:<e> or go:<e>")
        sp.add_argument("--point", metavar="X", help="comma-separated rationals, e.g. 1,1/2,0")

    sp = add("polygon", cmd_polygon, "adjoint polygon of a point")
    group_point(sp)
    sp.add_argument("--at", metavar="T", help="evaluate at T instead of listing breakpoints")

    sp = add("stats", cmd_stats, "parabolic dimension statistics of a point")
    group_point(sp)

    sp = add("positivity", cmd_positivity, "positivity pairing with a standard parabolic")
    group_point(sp)
    sp.add_argument("--parabolic", default="borel",
                    help="borel, all, blocks:2,1 or 1-based simple-root indices")

    sp = add("bruhat", cmd_bruhat, "Bruhat representatives, optionally with positivity cells")
    group_point(sp)
    sp.add_argument("--q", default="borel", help="parabolic Q")
    sp.add_argument("--p", default=None, help="parabolic P (default: that of --point)")

    sp = add("fiber-codim", cmd_fiber_codim, "fiber codimension for a dominant point")
    group_point(sp)
    sp.add_argument("--q", default="borel", help="parabolic Q")

    sp = add("bound", cmd_bound, "evaluate the dimension-bound inequalities")
    group_point(sp)
    sp.add_argument("--n", type=int, required=False, default=1)
    sp.add_argument("--dim-c", type=int, default=0, help="centralizer dimension")

    sp = add("n0", cmd_n0, "minimal power N0 for the uniform bound")
    group_point(sp)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--slopes", default=None, help="allowed slope set I (default {0, +-y_i})")

    sp = add("hodge-check", cmd_hodge_check, "numerical condition on Euler characteristics")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--chi-top-bar", type=int, required=True)
    sp.add_argument("--chi-o-bar", type=int, required=True)
    sp.add_argument("--symmetric", action="store_true")

    sp = add("lv-pipeline", cmd_lv_pipeline, "Hodge numbers to group, point and N0")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--chis", default=None, help="chi(X, Omega^p) for p = 0..d")
    sp.add_argument("--h", default=None, help="signed Euler characteristics h_0..h_d")
    sp.add_argument("--symmetric", action="store_true")
    sp.add_argument("--dim-base", type=int, default=0)

    sp = add("surface-hilbert", cmd_surface_hilbert, "surface Chern numbers and Hilbert polynomials")
    sp.add_argument("--c2", type=int, required=True)
    return parser


def _problem_argv(parser: argparse.ArgumentParser, source: str, strict: bool) -> List[str]:
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError("--problem", str(exc)) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("--problem", f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError("--problem", "top level must be a JSON object")
    command = doc.get("command")
    if command not in COMMANDS:
        raise InputError("command", f"unknown or missing command {command!r}")
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    sp = sub.choices[command]
    options = {}
    for action in sp._actions:
        for opt in action.option_strings:
            if opt.startswith("--"):
                options[opt[2:].replace("-", "_")] = (opt, action)
    argv = [command]
    for key, value in doc.items():
        if key == "command":
            continue
        if key not in options:
            if strict:
                raise InputError(key, f"unknown field for command {command!r}")
            log.warning("ignoring unknown field %r", key)
            continue
        opt, action = options[key]
        if isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
            if not isinstance(value, bool):
                raise InputError(key, "expected true or false")
            if value == isinstance(action, argparse._StoreTrueAction):
                argv.append(opt)
            continue
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        elif isinstance(value, bool) or value is None or isinstance(value, (dict, float)):
            raise InputError(key, f"unsupported value {value!r}")
        argv.append(f"{opt}={value}")
    return argv


def _echo(args) -> Dict[str, Any]:
    skip = {"command", "quiet", "pretty", "threads", "strict", "problem"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def _configure_logging() -> None:
    level = os.environ.get("LOG_LEVEL", "warn").lower()
    levels = {"error": logging.ERROR, "warn": logging.WARNING, "warning": logging.WARNING,
              "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=levels.get(level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _fail(code: int, field: Optional[str], message: str) -> int:
    err = {"error": message}
    if field:
        err["field"] = field
    print(json.dumps(err), file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    _configure_logging()
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.problem is not None:
            if args.command is not None:
                raise InputError("--problem", "give either a problem file or a subcommand")
            extra = _problem_argv(parser, args.problem, args.strict)
            globals_ = [a for a in argv if a in ("--quiet", "--pretty", "--no-strict")]
            try:
                args = parser.parse_args(globals_ + extra)
            except SystemExit as exc:
                return int(exc.code or 0)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return 2
        log.debug("dispatching %s", args.command)
        result = COMMANDS[args.command](args)
    except InputError as exc:
        return _fail(2, exc.field, str(exc))
    except (RootDataError, HodgeError, BoundsError) as exc:
        return _fail(2, None, str(exc))
    except Exception as exc:  # noqa: BLE001
        log.debug("internal failure", exc_info=True)
        return _fail(1, None, f"internal error: {exc!r}")

    result = _jsonable(result)
    if args.quiet:
        doc = result
    else:
        doc = {
            "command": args.command,
            "input": _jsonable(_echo(args)),
            "result": result,
            "provenance": {"library": "flagbound", "version": __version__},
        }
    if args.pretty:
        text = json.dumps(doc, indent=2, ensure_ascii=False)
    else:
        text = json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
