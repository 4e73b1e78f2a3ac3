"""Command-line interface.

Exit codes: 0 success or orderable, 3 not orderable, 1 input error,
2 internal contract violation.  Results go to stdout as JSON (or DOT);
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .closure import Closed, close, close_bounded
from .graphs import to_dot
from .intervalgraph import c_plus, intersection_graph, interval_representation
from .orderability import ContractViolation, Verdict, decide
from .setcore import InstanceError, SetFamily, parse_family
from .structure import EmptyUniverse, NotAPatchwork, TreeSpec, TreeSpecError, autonomy_tree, synthesize_patchwork
from . import testkit

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONTRACT = 2
EXIT_NOT_ORDERABLE = 3


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None


def _emit(obj: object) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _family(args: argparse.Namespace) -> SetFamily:
    return parse_family(_read(args.instance))


def cmd_close(args: argparse.Namespace) -> int:
    f = _family(args)
    if args.bound is None:
        P = close(f)
    else:
        outcome = close_bounded(f, args.bound)
        if not isinstance(outcome, Closed):
            _emit({"size": outcome.reached, "exceeded": True, "bound": outcome.bound})
            return EXIT_OK
        P = outcome.patchwork
    _emit({
        "size": len(P),
        "exceeded": False,
        "bound": args.bound,
        "sets": [f.ground.labels_of(m) for m in P.sets],
    })
    return EXIT_OK


def _verdict_exit(v: Verdict) -> int:
    return EXIT_OK if v.orderable else EXIT_NOT_ORDERABLE


def cmd_decide(args: argparse.Namespace) -> int:
    f = _family(args)
    d = decide(f, use_quotient=not args.no_quotient, find_triple=args.find_triple,
               triple_cap=args.triple_cap)
    _emit(d.verdict.to_json(f.ground))
    if args.figure:
        if d.verdict.orderable:
            from .plotting import plot_interval_representation

            plus = c_plus(f)
            rep = interval_representation(d.verdict.order, plus)
            plot_interval_representation(rep, f.ground, args.figure, title="interval model of the family")
        else:
            print("no figure: family is not orderable", file=sys.stderr)
    return _verdict_exit(d.verdict)


def cmd_analyze(args: argparse.Namespace) -> int:
    f = _family(args)
    P = close(f)
    try:
        tree = autonomy_tree(P)
    except EmptyUniverse:
        _emit({"closure_size": len(P), "tree": None, "case_labels": []})
        return EXIT_OK
    labels = [
        {"set": f.ground.labels_of(n.mask), "case": n.label.kind}
        for n in tree.nodes
    ]
    _emit({"closure_size": len(P), "tree": tree.to_json(f.ground), "case_labels": labels})
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    try:
        data = json.loads(_read(args.treespec))
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed JSON: {exc}") from None
    spec = TreeSpec.from_json(data)
    _, P, _ = synthesize_patchwork(spec)
    _emit(P.family.to_json())
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    f = _family(args)
    g = intersection_graph(c_plus(f))
    if args.format == "dot":
        sys.stdout.write(to_dot(g))
    else:
        _emit(g.to_json())
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace) -> int:
    make = testkit.powerset_example if args.kind == "powerset" else testkit.interval_example
    f = make(args.n)
    _emit(f.to_json())
    if args.figure:
        from .plotting import plot_closure_sizes

        # powerset closures grow doubly exponentially; n = 3 is the last cheap one
        top = min(args.n, 3) if args.kind == "powerset" else args.n
        start = 0 if args.kind == "powerset" else 1
        rows = [
            (k, len(close(make(k))), testkit.max_patchwork_size(k), testkit.max_convex_patchwork_size(k))
            for k in range(start, top + 1)
        ]
        plot_closure_sizes(rows, args.figure)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    f = _family(args)
    order = testkit.brute_force_decide(f)
    v = Verdict(order is not None, order)
    _emit(v.to_json(f.ground))
    return _verdict_exit(v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patchwork",
        description="Patchwork closures and convex orderings of set families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_instance(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("instance", nargs="?", help="instance JSON file (default: stdin)")
        return p

    p = with_instance(sub.add_parser("close", help="compute the patchwork closure"))
    p.add_argument("--bound", type=int, help="stop once the closure has more than this many sets")
    p.set_defaults(func=cmd_close)

    p = with_instance(sub.add_parser("decide", help="decide orderability"))
    p.add_argument("--find-triple", action="store_true",
                   help="when the size bound is exceeded, keep closing to exhibit an adjacent triple")
    p.add_argument("--triple-cap", type=int, default=1 << 16, help="closure size cap for --find-triple")
    p.add_argument("--no-quotient", action="store_true", help="skip the membership-signature quotient")
    p.add_argument("--figure", metavar="PATH", help="write the interval model of an orderable family")
    p.set_defaults(func=cmd_decide)

    p = with_instance(sub.add_parser("analyze", help="autonomy tree of the closure"))
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synth", help="build a patchwork from a tree description")
    p.add_argument("treespec", nargs="?", help="TreeSpec JSON file (default: stdin)")
    p.set_defaults(func=cmd_synth)

    p = with_instance(sub.add_parser("graph", help="intersection graph of the family plus singletons"))
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("extremal", help="emit an extremal instance")
    p.add_argument("--kind", choices=["powerset", "interval"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--figure", metavar="PATH", help="plot closure sizes against both bounds")
    p.set_defaults(func=cmd_extremal)

    p = with_instance(sub.add_parser("oracle", help="brute-force orderability (small inputs)"))
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAPatchwork as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (InstanceError, TreeSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ContractViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
