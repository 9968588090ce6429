"""Command-line front door.

Thin client over the library: every command parses a graph file (or "-" for
standard input), calls the corresponding library function and prints a text
or byte-stable JSON report.

Exit codes: 0 = criterion holds / success, 1 = criterion fails or the graph
is not disciplined, 2 = invalid input, 3 = internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys

from .compgroup import component_group, spanning_tree_order_oracle
from .criteria import CRITERIA, check_all, is_aligned, is_disciplined, \
    is_regular_model, is_toric_additive
from .errors import GraphFormatError, GraphValidationError, \
    InternalInvariantError, InvalidParameterError, NotDisciplinedError, \
    SizeLimitError, ToricheckError
from .graph import contract, require_valid
from .graphio import dumps_graph, dumps_json, graph_json_obj, parse_graph
from .oracle import GeneratorConfig, aligned_bruteforce, enumerate_cycles, \
    random_labelled_graph
from .purity import purity_report
from .resolution import resolve

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3

_CRITERION_FLAGS = {
    "ta": ("toric_additive",),
    "aligned": ("aligned",),
    "disciplined": ("disciplined",),
    "regular": ("regular",),
    "all": CRITERIA,
}

_SINGLE_CHECKS = {
    "toric_additive": is_toric_additive,
    "aligned": is_aligned,
    "disciplined": is_disciplined,
    "regular": is_regular_model,
}


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    graph = parse_graph(text)
    require_valid(graph)
    return graph


def _parse_params(text: str):
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise InvalidParameterError(f"bad parameter list {text!r}") from exc


def _print_verdict_text(v):
    if v.holds:
        print(f"{v.criterion}: holds")
    else:
        print(f"{v.criterion}: fails (witness: {v.witness})")


def cmd_check(args) -> int:
    graph = _read_graph(args.file)
    wanted = _CRITERION_FLAGS[args.criterion]
    if args.criterion == "all":
        verdicts = check_all(graph)
    else:
        verdicts = {name: _SINGLE_CHECKS[name](graph) for name in wanted}
    if args.format == "json":
        obj = {name: verdicts[name].to_json_obj() for name in wanted}
        sys.stdout.write(dumps_json(obj))
    else:
        for name in wanted:
            _print_verdict_text(verdicts[name])
    return EXIT_OK if all(verdicts[name].holds for name in wanted) else EXIT_FAIL


def cmd_contract(args) -> int:
    graph = _read_graph(args.file)
    result = contract(graph, _parse_params(args.params))
    sys.stdout.write(dumps_graph(result.graph))
    return EXIT_OK


def cmd_purity(args) -> int:
    graph = _read_graph(args.file)
    report = purity_report(graph)
    obj = report.to_json_obj()
    if args.snf:
        from .intlin import smith_normal_form
        obj["snf_diagonal"] = smith_normal_form(report.matrix).diagonal
    if args.format == "json":
        sys.stdout.write(dumps_json(obj))
    else:
        print(f"domain rank: {report.domain_rank}")
        print(f"codomain ranks: {report.codomain_ranks}")
        print(f"matrix: {report.matrix.to_lists()}")
        print(f"injective: {report.injective}")
        print(f"cokernel: torsion {report.cokernel_torsion}, "
              f"free rank {report.cokernel_free_rank}")
        print(f"isomorphism: {report.is_isomorphism}")
        if args.snf:
            print(f"snf diagonal: {obj['snf_diagonal']}")
    return EXIT_OK


def cmd_resolve(args) -> int:
    graph = _read_graph(args.file)
    out = resolve(graph)
    obj = {"graph": graph_json_obj(out.graph), "trace": out.trace_json_obj()}
    sys.stdout.write(dumps_json(obj))
    return EXIT_OK


def cmd_phi(args) -> int:
    graph = _read_graph(args.file)
    group = component_group(graph, args.param)
    if args.format == "json":
        sys.stdout.write(dumps_json(group.to_json_obj()))
    else:
        factors = [d for d in group.invariant_factors if d > 1]
        name = " x ".join(f"Z/{d}" for d in factors) if factors else "trivial"
        print(f"component group at parameter {group.param}: {name} "
              f"(order {group.order}, invariant factors {group.invariant_factors})")
    return EXIT_OK


def cmd_random(args) -> int:
    config = GeneratorConfig(
        num_vertices=args.vertices,
        num_edges=args.edges,
        num_params=args.params,
        max_exponent=args.max_exponent,
        seed=args.seed,
        class_constraint=getattr(args, "class"),
    )
    graph = random_labelled_graph(config)
    sys.stdout.write(dumps_graph(graph))
    return EXIT_OK


def cmd_oracle(args) -> int:
    graph = _read_graph(args.file)
    if args.op == "aligned":
        ok = aligned_bruteforce(graph)
        sys.stdout.write(dumps_json({"op": "aligned", "holds": ok}))
        return EXIT_OK if ok else EXIT_FAIL
    if args.op == "cycles":
        cycles = [sorted(c) for c in enumerate_cycles(graph)]
        sys.stdout.write(dumps_json({"op": "cycles", "cycles": cycles}))
        return EXIT_OK
    if args.param is None:
        raise InvalidParameterError("--param is required for --op phi-order")
    order = spanning_tree_order_oracle(graph, args.param)
    sys.stdout.write(dumps_json({"op": "phi-order", "param": args.param,
                                 "order": order}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricheck",
        description="Criteria, purity maps, resolutions and component groups "
                    "of labelled dual graphs of nodal curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide criteria on a graph file")
    p.add_argument("file")
    p.add_argument("--criterion", choices=sorted(_CRITERION_FLAGS),
                   default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("contract", help="contract to a parameter subset")
    p.add_argument("file")
    p.add_argument("--params", required=True,
                   help="comma-separated 1-based parameter indices")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("purity", help="purity map report")
    p.add_argument("file")
    p.add_argument("--snf", action="store_true",
                   help="include the Smith normal form diagonal")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_purity)

    p = sub.add_parser("resolve", help="combinatorial blow-up to unit labels")
    p.add_argument("file")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("phi", help="component group at one parameter")
    p.add_argument("file")
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("random", help="generate a seeded random graph")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--params", type=int, required=True)
    p.add_argument("--max-exponent", type=int, default=3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--class", choices=GeneratorConfig.CLASSES, default="any")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("oracle", help="run a brute-force counterpart")
    p.add_argument("file")
    p.add_argument("--op", choices=("aligned", "cycles", "phi-order"),
                   required=True)
    p.add_argument("--param", type=int)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotDisciplinedError as exc:
        print(f"not disciplined: {exc} (edge {exc.edge_id!r})", file=sys.stderr)
        return EXIT_FAIL
    except InternalInvariantError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GraphFormatError, GraphValidationError, InvalidParameterError,
            SizeLimitError, ToricheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
