"""Command-line front-end: convert, stats, enumerate, verify, render.

Exit codes: 0 success, 1 verification counterexample, 2 parse failure,
3 invalid object, 4 size over the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijections import big_phi, big_phi_inv, phi, phi_inv, psi, psi_inv
from .enumeration import (
    CLAIMS,
    STATISTICS,
    distribution,
    resolve_cap,
    verify_all,
)
from .errors import InvalidMatchingError, InvalidPathError, OverCapError, ParseError
from .matching import Matching
from .paths import WedgePath
from .render import RenderSpec, render

_FORMAT_WORDS = ("pairs", "steps", "heights")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def parse_object(tokens: list[str]) -> Matching | WedgePath:
    """Parse an object from CLI tokens.

    The first token may name the format (``pairs``, ``steps``, or
    ``heights``); otherwise the format is sniffed: a leading parenthesis
    means pairs, a pure E/N/S word means steps, anything else is read as a
    comma-separated height list.
    """
    fmt = None
    if tokens and tokens[0].lower() in _FORMAT_WORDS:
        fmt = tokens[0].lower()
        tokens = tokens[1:]
    text = " ".join(tokens).strip()
    if not text:
        raise ParseError("missing object text")
    if fmt == "pairs":
        return Matching.from_text(text)
    if fmt == "steps":
        return WedgePath.parse_steps(text)
    if fmt == "heights":
        return WedgePath.from_height_text(text)
    if text.startswith("("):
        return Matching.from_text(text)
    if set(text) <= set("ENS"):
        return WedgePath.parse_steps(text)
    return WedgePath.from_height_text(text)


def _need_path(obj: Matching | WedgePath, why: str) -> WedgePath:
    if not isinstance(obj, WedgePath):
        raise InvalidPathError(f"{why} needs a path (steps or heights) as input")
    return obj


def _need_matching(obj: Matching | WedgePath, why: str) -> Matching:
    if not isinstance(obj, Matching):
        raise InvalidMatchingError(f"{why} needs a matching (pair list) as input")
    return obj


def cmd_convert(args: argparse.Namespace) -> int:
    obj = parse_object(args.input)
    via = args.via
    if args.to_matching:
        if via == "Phi":
            out: Matching | WedgePath = big_phi(_need_path(obj, "--to-matching via Phi"))
        elif via == "psi":
            out = psi(_need_path(obj, "--to-matching via psi"))
        else:
            out = phi(_need_matching(obj, "--to-matching via phi"))
    else:
        if via == "Phi":
            out = big_phi_inv(_need_matching(obj, "--to-path via Phi"))
        elif via == "psi":
            out = psi_inv(_need_matching(obj, "--to-path via psi"))
        else:
            out = phi_inv(_need_matching(obj, "--to-path via phi"))
    if args.json:
        print(json.dumps(out.to_json_value()))
    elif isinstance(out, Matching):
        print(out.to_text())
    else:
        print(out.to_steps())
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    obj = parse_object(args.input)
    if isinstance(obj, Matching):
        data: dict[str, object] = {
            "n": obj.n,
            "crossings": obj.crossings(),
            "nestings": obj.nestings(),
            "alignments": obj.alignments(),
            "st_total": obj.st_total(),
        }
    else:
        data = {
            "n": obj.n,
            "east": obj.east_steps(),
            "north": obj.north_steps(),
            "south": obj.south_steps(),
            "final_south_run": obj.final_south_run(),
            "dyck": obj.is_dyck(),
            "component_sizes": [c.n for c in obj.components()],
        }
    if args.json:
        print(json.dumps(data))
    else:
        for key, value in data.items():
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            elif isinstance(value, bool):
                value = "true" if value else "false"
            print(f"{key} {value}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    table = distribution(args.n, args.statistic, max_n=args.max_n)
    if args.json:
        print(json.dumps(table.to_json_value()))
    elif args.csv:
        print(table.to_csv(), end="")
    else:
        print(table.to_text())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    claims = None
    if args.claims:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
    cap = resolve_cap(args.max_n)
    if args.n > cap:
        raise OverCapError(f"size {args.n} exceeds the enumeration cap {cap}")
    reports = []
    for size in range(1, args.n + 1):
        report = verify_all(
            size,
            max_n=args.max_n,
            workers=args.workers,
            counterexample_limit=args.limit,
            claims=claims,
        )
        reports.append(report)
        if not args.json:
            print(report.to_text(), end="")
            print(f"(elapsed {report.elapsed:.2f}s)", file=sys.stderr)
    if args.json:
        print(json.dumps([r.to_json_value() for r in reports]))
    return 0 if all(r.passed for r in reports) else 1


def cmd_render(args: argparse.Namespace) -> int:
    obj = parse_object(args.input)
    spec = RenderSpec(target=args.target, obj=obj, output=args.output)
    try:
        text = render(spec)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    if args.output is None:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgematch",
        description="Wedge-confined lattice paths, matchings on [2n], and the "
        "bijections between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cap_flags = argparse.ArgumentParser(add_help=False)
    cap_flags.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="enumeration cap (default: $WEDGEMATCH_MAX_N or 7)",
    )
    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser(
        "convert",
        parents=[json_flag],
        help="map a path to a matching or back",
        description="Apply one of the bijections. Input is an object text, "
        "optionally preceded by its format word (pairs, steps, heights).",
    )
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-matching", action="store_true")
    direction.add_argument("--to-path", action="store_true")
    p.add_argument(
        "--via",
        choices=["psi", "phi", "Phi"],
        default="Phi",
        help="which map to apply (phi maps matchings to matchings)",
    )
    p.add_argument("input", nargs="+", help="object text")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser(
        "stats", parents=[json_flag], help="arc or step statistics of one object"
    )
    p.add_argument("input", nargs="+", help="object text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser(
        "enumerate",
        parents=[cap_flags, json_flag],
        help="exact distribution of a statistic over all objects of size n",
    )
    p.add_argument("n", type=_positive_int)
    p.add_argument("statistic", choices=list(STATISTICS))
    p.add_argument("--csv", action="store_true", help="emit CSV (k,count)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "verify",
        parents=[cap_flags, json_flag],
        help="replay every claimed identity exhaustively for sizes 1..n",
    )
    p.add_argument("n", type=_positive_int)
    p.add_argument(
        "--claims",
        default=None,
        help=f"comma-separated claim labels (available: {', '.join(CLAIMS)})",
    )
    p.add_argument("--workers", type=int, default=1, help="parallel worker count")
    p.add_argument(
        "--limit", type=int, default=10, help="counterexamples kept per claim"
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw an arc diagram or a path picture")
    p.add_argument(
        "--format",
        dest="target",
        choices=["ascii", "svg"],
        default="ascii",
    )
    p.add_argument("-o", "--output", default=None, help="write to a file")
    p.add_argument("input", nargs="+", help="object text")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidMatchingError, InvalidPathError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OverCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
