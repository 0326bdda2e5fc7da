"""Command-line interface.

Exit codes: 0 success, 2 bad input, 3 failed precondition, 4 internal
oracle mismatch, 5 no solution, 6 invalid move.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .embedding import check_profile
from .engine import matching_sum, pfaffian_expand, pfaffian_of_graph, signed_sum, skew_from_graph
from .errors import (
    GraphError,
    NoSolution,
    NotSimpleGraph,
    OracleMismatch,
    ProfileError,
    ScriptError,
    TooManyMatchings,
    VerificationFailed,
    WeightError,
)
from .graph import DEFAULT_MAX_MATCHINGS
from .io import FormatError, load_graph, load_profile, load_script, profile_to_json
from .moves import apply_script, ledger_to_modification
from .render import crossing_points, render_svg
from .ring import RingParseError
from .solver import equalize, kasteleyn_weights
from .verify import format_report, run_all

EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_ORACLE = 4
EXIT_NO_SOLUTION = 5
EXIT_INVALID_MOVE = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _order(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise CliError(EXIT_INPUT, f"bad --order {text!r}") from None


def _ones(g) -> dict:
    return {e.id: 1 for e in g.edges}


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def cmd_count(args) -> None:
    g, w = load_graph(args.graph)
    m = matching_sum(g, w, max_matchings=args.max_matchings)
    print(f"m = {m}")
    print(f"m(1) = {m.evaluate(_ones(g))}")


def cmd_pfaffian(args) -> None:
    g, w = load_graph(args.graph)
    order = _order(args.order)
    pf = pfaffian_of_graph(g, w, order)
    oracle = pfaffian_expand(skew_from_graph(g, w, order))
    print(f"Pf = {pf}")
    print(f"Pf (matrix expansion) = {oracle}")
    if pf != oracle:
        raise OracleMismatch("Pfaffian disagrees with matrix expansion")


def cmd_signed_sum(args) -> None:
    g, w = load_graph(args.graph)
    p = load_profile(args.profile)
    check_profile(p, g)
    print(f"s = {signed_sum(g, w, p, max_matchings=args.max_matchings)}")


def cmd_equalize(args) -> None:
    g, w = load_graph(args.graph)
    pa, pb = load_profile(args.profile_a), load_profile(args.profile_b)
    check_profile(pa, g)
    check_profile(pb, g)
    mod = equalize(g, w, pa, pb, max_matchings=args.max_matchings)
    print(_dumps(mod.to_json()))


def cmd_kasteleyn(args) -> None:
    g, w = load_graph(args.graph)
    order = _order(args.order)
    mod = kasteleyn_weights(g, w, order, max_matchings=args.max_matchings)
    m = matching_sum(g, w, max_matchings=args.max_matchings)
    pf = pfaffian_of_graph(g, mod.apply(w), order)
    if m != pf:
        raise VerificationFailed(f"m = {m} but Pf = {pf}")
    print(_dumps(mod.to_json()))
    print(f"m = Pf = {m}")


def cmd_moves(args) -> None:
    g, w = load_graph(args.graph)
    p = load_profile(args.profile)
    check_profile(p, g)
    script = load_script(args.script)
    final, led = apply_script(g, p, script)
    before = signed_sum(g, w, p, max_matchings=args.max_matchings)
    after = signed_sum(g, ledger_to_modification(led).apply(w), final, max_matchings=args.max_matchings)
    print(f"profile = {_dumps(profile_to_json(final))}")
    print(f"ledger = {_dumps({str(e): k for e, k in led.flips})}")
    print(f"modification = {_dumps(ledger_to_modification(led).to_json())}")
    print(f"s before = {before}")
    print(f"s after = {after}")
    if before != after:
        raise OracleMismatch("signed sum changed under the move script")


def cmd_render(args) -> None:
    g, _ = load_graph(args.graph)
    order = _order(args.order)
    svg = render_svg(g, order)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out} ({len(crossing_points(g, order))} crossings)")


def cmd_verify(args) -> None:
    results = run_all(args.seed, args.trials, fault=args.inject_fault)
    sys.stdout.write(format_report(args.seed, args.trials, results))
    if not all(r.ok for r in results):
        raise CliError(EXIT_ORACLE, "verification suites failed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matchsign", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    def caps(sp):
        sp.add_argument("--max-matchings", type=int, default=DEFAULT_MAX_MATCHINGS)

    sp = add("count", cmd_count, "perfect-matching generating function")
    sp.add_argument("graph")
    caps(sp)

    sp = add("pfaffian", cmd_pfaffian, "Pfaffian in the half-circle drawing")
    sp.add_argument("graph")
    sp.add_argument("--order")

    sp = add("signed-sum", cmd_signed_sum, "signed generating function for a profile")
    sp.add_argument("graph")
    sp.add_argument("profile")
    caps(sp)

    sp = add("equalize", cmd_equalize, "sign-modification carrying profile A's signed sum to profile B")
    sp.add_argument("graph")
    sp.add_argument("profile_a")
    sp.add_argument("profile_b")
    caps(sp)

    sp = add("kasteleyn", cmd_kasteleyn, "sign-modification with m = Pf for a planar graph")
    sp.add_argument("graph")
    sp.add_argument("--order")
    caps(sp)

    sp = add("moves", cmd_moves, "replay a move script on a profile")
    sp.add_argument("graph")
    sp.add_argument("profile")
    sp.add_argument("script")
    caps(sp)

    sp = add("render", cmd_render, "SVG of the half-circle drawing")
    sp.add_argument("graph")
    sp.add_argument("--order")
    sp.add_argument("--out", required=True)

    sp = add("verify", cmd_verify, "run the randomized invariant suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotSimpleGraph as exc:
        print(f"NotSimpleGraph: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TooManyMatchings as exc:
        print(f"TooManyMatchings: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ScriptError as exc:
        print(f"invalid move at index {exc.index}: {exc.cause}", file=sys.stderr)
        return EXIT_INVALID_MOVE
    except NoSolution as exc:
        print(f"NoSolution: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except (OracleMismatch, VerificationFailed) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (
        OSError,
        json.JSONDecodeError,
        FormatError,
        GraphError,
        ProfileError,
        RingParseError,
        WeightError,
        ValueError,
    ) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
