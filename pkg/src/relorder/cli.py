"""Command-line entry point: ``relorder <command> ...``.

Exit codes: 0 success, 1 a verification or invariant violation was found,
2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO

from .formats import ParseError, emit_dot, parse_relation, serialize
from .oracle import BudgetExceeded
from .quotient import quotient_relation
from .relation import Relation, classify, transitive_closure
from .rng import SplitMix64, random_partial_order, random_relation
from .solutions import SolutionReport, solve
from .sweep import run_sweep
from .zorn import GuardExceeded, check_hypothesis, extend_chain, find_top_cycle_run, verify_theorem

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

ZORN_MODES = ("check-hypothesis", "extend-chain", "find-top-cycle", "verify-theorem")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would sys.exit; keep control here
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="relorder", description="Analyze finite binary relations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("input", help="relation file, or - for stdin")
        p.add_argument("--format", choices=("edge", "json"), help="input format (default: by extension)")
        return p

    p = with_input(sub.add_parser("props", help="reflexive/transitive/antisymmetric/total report"))
    p.add_argument("--json", action="store_true")

    p = with_input(sub.add_parser("closure", help="transitive closure"))
    p.add_argument("--json", action="store_true", help="write the closure as a JSON document")

    p = with_input(sub.add_parser("quotient", help="mutual-reachability classes and their order"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit the condensation as DOT")

    p = with_input(sub.add_parser("solve", help="maximal elements, top cycles, Schwartz sets"))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("zorn", help="chain-extension traces (JSON)")
    p.add_argument("mode", choices=ZORN_MODES)
    with_input(p)
    p.add_argument("--guard", type=int, default=20, help="max n for chain enumeration")

    p = sub.add_parser("random", help="seeded random relation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-format", choices=("edge", "json"), default="edge")
    p.add_argument("--no-self-loops", action="store_true")
    p.add_argument("--partial-order", action="store_true", help="closure of a random DAG instead")

    p = sub.add_parser("verify", help="fast path versus oracle sweep")
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--count", type=int, default=1000, help="random instances per n in 4..nmax")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read(args: argparse.Namespace, stdin: TextIO) -> Relation:
    if args.input == "-":
        text = stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    fmt = args.format or ("json" if args.input.endswith(".json") else "edge")
    return parse_relation(text, fmt)


def _braces(labels: Sequence[str], members: Iterable[int]) -> str:
    return "{" + ", ".join(labels[i] for i in sorted(members)) + "}"


def _names(labels: Sequence[str], members: Iterable[int]) -> list[str]:
    return [labels[i] for i in sorted(members)]


def _named_witness(labels: Sequence[str], witness):
    if isinstance(witness, tuple):
        return [_named_witness(labels, w) for w in witness]
    return labels[witness]


def report_dict(r: Relation, report: SolutionReport) -> dict:
    lab = r.labels
    cycle = lambda c: {"members": _names(lab, c.members), "trivial": c.trivial}  # noqa: E731
    deb = lambda e: {  # noqa: E731
        "members": _names(lab, e.members),
        "kind": e.kind,
        "witness": None if e.witness is None else _named_witness(lab, e.witness),
    }
    return {
        "elements": list(lab),
        "maximal": _names(lab, report.maximal),
        "minimal_undominated": [_names(lab, s) for s in report.minimal_undominated],
        "top_cycles": [cycle(c) for c in report.top_cycles],
        "strong_top_cycles": [cycle(c) for c in report.strong_top_cycles],
        "schwartz_gocha": _names(lab, report.schwartz_gocha),
        "schwartz_strict": _names(lab, report.schwartz_strict),
        "deb": {
            "strict": [deb(e) for e in report.deb.strict],
            "literal": [deb(e) for e in report.deb.literal],
            "strict_violations": len(report.deb.strict_violations),
            "literal_violations": len(report.deb.literal_violations),
        },
    }


def report_text(r: Relation, report: SolutionReport) -> str:
    lab = r.labels

    def cycles(cs) -> str:
        return ", ".join(_braces(lab, c.members) + (" (trivial)" if c.trivial else "") for c in cs)

    def deb(entries) -> str:
        return "; ".join(f"{_braces(lab, e.members)} {e.kind}" for e in entries)

    lines = [
        "elements: " + " ".join(lab),
        "maximal: " + _braces(lab, report.maximal),
        "minimal undominated: " + ", ".join(_braces(lab, s) for s in report.minimal_undominated),
        "top cycles: " + cycles(report.top_cycles),
        "strong top cycles: " + cycles(report.strong_top_cycles),
        "schwartz gocha: " + _braces(lab, report.schwartz_gocha),
        "schwartz strict: " + _braces(lab, report.schwartz_strict),
        "deb strict: " + deb(report.deb.strict),
        "deb literal: " + deb(report.deb.literal),
    ]
    return "\n".join(lines) + "\n"


def _props(r: Relation, as_json: bool) -> str:
    rep = classify(r)
    d = rep.as_dict()
    d["witness"] = {k: _named_witness(r.labels, w) for k, w in rep.witness.items()}
    if as_json:
        return json.dumps(d, indent=2) + "\n"
    lines = []
    for key in ("reflexive", "transitive", "antisymmetric", "total", "is_partial_order", "is_total_order"):
        line = f"{key}: {str(d[key]).lower()}"
        if key in d["witness"]:
            line += f"  witness {d['witness'][key]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _quotient(r: Relation, as_json: bool, dot: bool) -> str:
    q = quotient_relation(r)
    if dot:
        return emit_dot(q)
    classes = [_names(r.labels, c) for c in q.partition.classes]
    pairs = sorted(q.pairs)
    if as_json:
        return json.dumps({"classes": classes, "order": [list(p) for p in pairs]}, indent=2) + "\n"
    lines = [f"class {cid}: {{{', '.join(c)}}}" for cid, c in enumerate(classes)]
    lines.append("order: " + " ".join(f"{c}>={d}" for c, d in pairs))
    return "\n".join(lines) + "\n"


def _zorn(r: Relation, mode: str, guard: int) -> tuple[dict, int]:
    lab = r.labels
    if mode == "check-hypothesis":
        v = check_hypothesis(r, guard)
        witness = None if v.witness is None else [lab[i] for i in v.witness]
        return {"hypothesis": v.holds, "witness": witness}, EXIT_OK
    if mode == "extend-chain":
        return extend_chain(r).as_dict(lab), EXIT_OK
    if mode == "find-top-cycle":
        return find_top_cycle_run(r).as_dict(lab), EXIT_OK
    report = verify_theorem(r, guard)
    return report.as_dict(lab), EXIT_OK if report.ok else EXIT_VIOLATION


def _dispatch(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    cmd = args.command
    if cmd == "random":
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        rng = SplitMix64(args.seed)
        if args.partial_order:
            r = random_partial_order(args.n, args.density, rng)
        else:
            r = random_relation(args.n, args.density, rng, self_loops=not args.no_self_loops)
        out.write(serialize(r, args.out_format))
        return EXIT_OK
    if cmd == "verify":
        if args.nmax < 1 or args.count < 0:
            raise UsageError("--nmax must be >= 1 and --count >= 0")
        result = run_sweep(args.nmax, args.count, args.seed)
        for size in sorted(result.per_size):
            out.write(f"n={size}: {result.per_size[size]} instances\n")
        for v in result.violations:
            out.write(f"VIOLATION {v.check} [{v.instance}]: {v.detail}\n")
        out.write(result.summary() + "\n")
        return EXIT_VIOLATION if result.violations else EXIT_OK

    r = _read(args, stdin)
    if cmd == "props":
        out.write(_props(r, args.json))
    elif cmd == "closure":
        closed = transitive_closure(r)
        out.write(serialize(closed, "json" if args.json else "edge"))
    elif cmd == "quotient":
        out.write(_quotient(r, args.json, args.dot))
    elif cmd == "solve":
        report = solve(r)
        out.write(json.dumps(report_dict(r, report), indent=2) + "\n" if args.json else report_text(r, report))
    elif cmd == "zorn":
        payload, code = _zorn(r, args.mode, args.guard)
        out.write(json.dumps(payload, indent=2) + "\n")
        return code
    return EXIT_OK


def run_command(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, out, stdin)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (ParseError, GuardExceeded, BudgetExceeded, ValueError, KeyError) as exc:
        err.write(f"relorder: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run_command())


if __name__ == "__main__":
    main()
