"""Command-line surface: gen / verify / solve / hexpath / witness / params.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 budget
exceeded, 4 witness scale insufficient.  Identical command lines with the
same seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from random import Random

from .errors import (
    FamilyTooSmallError,
    InvalidParameterError,
    PreconditionViolationError,
    ResourceLimitError,
)
from .graphs import graph_from_json, graph_to_json, make_hex_dual, make_star, make_star_hex_product
from .hexpath import (
    boundary_sequence,
    coloring_from_json,
    coloring_to_json_dict,
    find_monochromatic_path,
    random_coloring,
)
from .layouts import (
    LinearOrder,
    layout_from_json,
    layout_to_json,
    verify_layout,
)
from .render import graph_to_dot
from .solve import SolveBudget, queue_number, stack_number
from .witness import (
    InsufficientScale,
    extract_crossing_witness,
    insufficient_to_json_dict,
    parameters_to_json_dict,
    required_parameters,
    witness_to_json_dict,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_SCALE = 4


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be a positive integer")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _dump(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        print(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".linlay-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text + "\n")
        os.replace(tmp, output)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InvalidParameterError(f"cannot read {path}: {exc}") from exc


def _cmd_gen(args) -> int:
    if args.kind == "hex":
        g = make_hex_dual(args.n)
    elif args.kind == "star":
        g = make_star(args.a)
    else:
        g = make_star_hex_product(args.a, args.n)
    text = graph_to_dot(g).rstrip("\n") if args.format == "dot" else graph_to_json(g)
    _emit(text, args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = graph_from_json(_read(args.graph))
    layout = layout_from_json(_read(args.layout))
    report = verify_layout(g, layout)
    doc = {
        "valid": report.valid,
        "violations": [[list(e), list(f)] for e, f in report.violations],
    }
    _emit(_dump(doc), args.output)
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_solve(args) -> int:
    g = graph_from_json(_read(args.graph))
    budget = SolveBudget(max_vertices=args.max_vertices, max_orders=args.max_orders)
    solver = stack_number if args.kind == "stack" else queue_number
    try:
        result = solver(g, budget)
    except ResourceLimitError as exc:
        print(
            _dump({"error": "budget-exceeded", "lower": exc.lower, "upper": exc.upper}),
            file=sys.stderr,
        )
        return EXIT_BUDGET
    if not result.exact:
        print(
            _dump(
                {
                    "error": "budget-exceeded",
                    "lower": result.lower_bound,
                    "upper": result.k,
                    "orders_scanned": result.orders_scanned,
                }
            ),
            file=sys.stderr,
        )
        return EXIT_BUDGET
    print(result.k)
    if args.format == "dot":
        text = graph_to_dot(g, result.layout).rstrip("\n")
        _emit(text, args.output)
    elif args.output is not None:
        _emit(layout_to_json(result.layout), args.output)
    else:
        print(layout_to_json(result.layout))
    return EXIT_OK


def _cmd_hexpath(args) -> int:
    if args.random:
        if args.n is None:
            raise InvalidParameterError("--random requires --n")
        coloring = random_coloring(args.n, Random(args.seed))
    elif args.coloring is not None:
        coloring = coloring_from_json(_read(args.coloring))
    else:
        raise InvalidParameterError("provide a colouring file or --random --n N")
    path = find_monochromatic_path(coloring)
    doc = {
        "n": coloring.n,
        "color": coloring.color(path[0]),
        "path": [[c.a, c.b] for c in path],
    }
    if args.random:
        doc["coloring"] = coloring_to_json_dict(coloring)
    if args.trace:
        steps = boundary_sequence(coloring)
        doc["steps"] = [
            {
                "color": step.color,
                "component": [[c.a, c.b] for c in sorted(step.component)],
                "far_boundary": None
                if step.far_boundary is None
                else [[c.a, c.b] for c in sorted(step.far_boundary)],
            }
            for step in steps
        ]
    _emit(_dump(doc), args.output)
    return EXIT_OK


def _cmd_witness(args) -> int:
    size = (args.a + 1) * args.n * args.n
    if args.order is not None:
        raw = json.loads(_read(args.order))
        if isinstance(raw, dict):
            raw = raw.get("order")
        if not isinstance(raw, list) or len(raw) != size:
            raise InvalidParameterError("order file must list every product vertex once")
        order = LinearOrder.from_sequence(int(v) for v in raw)
    elif args.random:
        rng = Random(args.seed)
        seq = list(range(size))
        rng.shuffle(seq)
        order = LinearOrder.from_sequence(seq)
    else:
        raise InvalidParameterError("provide --order FILE or --random")
    outcome = extract_crossing_witness(args.a, args.n, order, args.c, args.d, trace=args.trace)
    if isinstance(outcome, InsufficientScale):
        _emit(_dump(insufficient_to_json_dict(outcome)), args.output)
        return EXIT_SCALE
    _emit(_dump(witness_to_json_dict(outcome)), args.output)
    return EXIT_OK


def _cmd_params(args) -> int:
    params = required_parameters(args.s)
    _emit(_dump(parameters_to_json_dict(params)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linlay", description="linear layouts of graphs: generators, verifiers, solvers"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a graph as JSON or DOT")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    gen_hex = gen_sub.add_parser("hex")
    gen_hex.add_argument("--n", type=_positive_int, required=True)
    gen_star = gen_sub.add_parser("star")
    gen_star.add_argument("--a", type=_positive_int, required=True)
    gen_product = gen_sub.add_parser("product")
    gen_product.add_argument("--a", type=_positive_int, required=True)
    gen_product.add_argument("--n", type=_positive_int, required=True)
    for p in (gen_hex, gen_star, gen_product):
        p.add_argument("--output", default=None)
        p.add_argument("--format", choices=("json", "dot"), default="json")
        p.set_defaults(func=_cmd_gen)

    verify = sub.add_parser("verify", help="check a layout file against a graph file")
    verify.add_argument("graph")
    verify.add_argument("layout")
    verify.add_argument("--output", default=None)
    verify.set_defaults(func=_cmd_verify)

    solve = sub.add_parser("solve", help="exact stack or queue number of a small graph")
    solve.add_argument("graph")
    solve.add_argument("--kind", choices=("stack", "queue"), required=True)
    solve.add_argument("--max-vertices", type=_positive_int, default=9)
    solve.add_argument("--max-orders", type=_positive_int, default=None)
    solve.add_argument("--output", default=None)
    solve.add_argument("--format", choices=("json", "dot"), default="json")
    solve.set_defaults(func=_cmd_solve)

    hexpath = sub.add_parser("hexpath", help="monochromatic path in a two-coloured grid")
    hexpath.add_argument("coloring", nargs="?", default=None)
    hexpath.add_argument("--random", action="store_true")
    hexpath.add_argument("--n", type=_positive_int, default=None)
    hexpath.add_argument("--seed", type=_nonnegative_int, default=0)
    hexpath.add_argument("--trace", action="store_true")
    hexpath.add_argument("--output", default=None)
    hexpath.set_defaults(func=_cmd_hexpath)

    witness = sub.add_parser("witness", help="crossing witness for an order of a product")
    witness.add_argument("--a", type=_positive_int, required=True)
    witness.add_argument("--n", type=_positive_int, required=True)
    witness.add_argument("--c", type=_positive_int, required=True)
    witness.add_argument("--d", type=_positive_int, required=True)
    witness.add_argument("--order", default=None)
    witness.add_argument("--random", action="store_true")
    witness.add_argument("--seed", type=_nonnegative_int, default=0)
    witness.add_argument("--trace", action="store_true")
    witness.add_argument("--output", default=None)
    witness.set_defaults(func=_cmd_witness)

    params = sub.add_parser("params", help="scale parameters for a target witness size")
    params.add_argument("--s", type=_positive_int, required=True)
    params.add_argument("--output", default=None)
    params.set_defaults(func=_cmd_params)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, PreconditionViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FamilyTooSmallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE


def script() -> None:
    raise SystemExit(main())
