"""Command line interface.

    sp4gt dim --weight 3/2,1/2
    sp4gt branch --weight 1,0
    sp4gt matrix --weight 1,1 --generator f[1,-2]
    sp4gt verify --weight 1,1 --suite all --seed 7 --samples 20

Every command prints one JSON document.  Exit codes: 0 success,
1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagrams import GTDiagram, HighestWeight, enumerate_diagrams, weyl_dim
from .exact import format_fraction
from .verify import DEFAULT_SEED, SUITES

VERBS = ("dim", "diagrams", "basis", "matrix", "branch", "verify")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sp4gt", description="Gelfand-Tsetlin bases of sp4 = o5 irreps in matrix minors.")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    for verb in VERBS:
        s = sub.add_parser(verb)
        s.add_argument("--weight", help="highest weight m2,m1 (e.g. 3/2,1/2)")
        s.add_argument("--out", help="write JSON here instead of standard output")
        if verb == "basis":
            s.add_argument("--diagram", help="only this diagram, 'sigma;m2,m1;k2,k1;s2,s1'")
        if verb == "matrix":
            s.add_argument("--generator", required=True, help="e.g. f[1,-2]")
        if verb == "verify":
            s.add_argument("--suite", default="all", choices=SUITES + ("all",))
            s.add_argument("--seed", type=int, default=DEFAULT_SEED)
            s.add_argument("--samples", type=int, default=20)
    return p


def _weight(args) -> HighestWeight:
    diagram = getattr(args, "diagram", None)
    if args.weight is None:
        if diagram is None:
            raise UsageError("--weight is required")
        return GTDiagram.parse(diagram).weight
    return HighestWeight.parse(args.weight)


def cmd_dim(args):
    return weyl_dim(_weight(args)), 0


def cmd_diagrams(args):
    return [d.to_json() for d in enumerate_diagrams(_weight(args))], 0


def cmd_basis(args):
    from .gt import gt_basis

    w = _weight(args)
    wanted = None
    if args.diagram:
        wanted = GTDiagram.parse(args.diagram)
        if not wanted.is_valid() or wanted.weight != w:
            raise UsageError(f"diagram {wanted} is not a diagram of weight {w}")
    diagrams, funcs = gt_basis(w)
    out = [
        {"diagram": d.to_json(), "function": f.to_json()}
        for d, f in zip(diagrams, funcs)
        if wanted is None or d == wanted
    ]
    return out, 0


def cmd_matrix(args):
    from .action import generator_matrix
    from .operators import parse_operator

    op = parse_operator(args.generator)
    if op.kind != "f_sp4":
        raise UsageError("--generator must name an sp4 element f[i,j]")
    return generator_matrix(_weight(args), op).to_json(), 0


def cmd_branch(args):
    from .oracle import branching, build_irrep

    br = branching(build_irrep(_weight(args)))
    return {format_fraction(k): v for k, v in br.items()}, 0


def cmd_verify(args):
    from .verify import run_suites

    if args.samples < 1:
        raise UsageError("--samples must be positive")
    w = _weight(args)
    reports = run_suites(w, args.suite, seed=args.seed, samples=args.samples)
    passed = all(r.passed for r in reports)
    out = {
        "weight": w.to_json(),
        "seed": args.seed,
        "samples": args.samples,
        "passed": passed,
        "suites": [r.to_json() for r in reports],
    }
    return out, 0 if passed else 1


COMMANDS = {
    "dim": cmd_dim,
    "diagrams": cmd_diagrams,
    "basis": cmd_basis,
    "matrix": cmd_matrix,
    "branch": cmd_branch,
    "verify": cmd_verify,
}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise UsageError("a verb is required: " + ", ".join(VERBS))
        result, code = COMMANDS[args.verb](args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"sp4gt: error: {exc}", file=stderr)
        return 2
    text = dumps(result) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main(argv=None):
    sys.exit(run(argv))
