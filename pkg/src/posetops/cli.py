"""Command line entry points for the poset interval machinery.

Output is JSON on stdout (or --out): sorted keys, UTF-8, two-space
indentation, one trailing newline, so repeated runs are byte-identical.
Exit codes: 0 success, 1 verification failure, 2 domain error, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import PosetOpsError
from .flags import (
    ab_index,
    cd_index,
    ce_index,
    flag_f_vector,
    flag_to_dict,
    upsilon,
)
from .ncpoly import AB, CD, NCPoly, from_dict as poly_from_dict, to_dict as poly_to_dict
from .operators import (
    ab_interval_transform,
    cd_interval_transform,
    delannoy_mixing,
    lift,
    mixing_ab,
    mixing_cd,
    pyramid,
    second_kind_ab_transform,
    upsilon_interval_transform,
)
from .posets import (
    GradedPoset,
    Poset,
    count_chains_with_support,
    diamond_product,
    direct_product,
    generate,
    graded_interval_poset,
    interval_poset,
    is_eulerian,
    poset_from_dict,
    poset_to_dict,
    second_kind_transform,
)
from .verify import SUITES, run_suite

USAGE_EXIT = 64


def _emit(data, out_path) -> None:
    text = json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as error:
        raise PosetOpsError(f"cannot read {path}: {error}") from error
    except json.JSONDecodeError as error:
        raise PosetOpsError(f"{path} is not valid JSON: {error}") from error


def _load_poset(path: str) -> Poset:
    data = _load_json(path)
    try:
        return poset_from_dict(data)
    except (PosetOpsError, KeyError, TypeError, ValueError) as error:
        raise PosetOpsError(f"{path} does not hold a poset: {error}") from error


def _load_graded_poset(path: str) -> GradedPoset:
    P = _load_poset(path)
    if not isinstance(P, GradedPoset):
        raise PosetOpsError(f"{path} holds a poset without rank data")
    return P


def _load_poly(path: str) -> NCPoly:
    data = _load_json(path)
    try:
        return poly_from_dict(data)
    except (PosetOpsError, KeyError, TypeError, ValueError) as error:
        raise PosetOpsError(f"{path} does not hold a polynomial: {error}") from error


def _split_support(text: str) -> list:
    """Split a comma-separated label list, honoring bracket nesting.

    Labels such as "{1,2}", "[u,v]" and "(p,q)" keep their inner commas.
    """
    openers = "([{"
    closers = ")]}"
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in openers:
            depth += 1
        elif ch in closers:
            depth -= 1
            if depth < 0:
                raise PosetOpsError(f"unbalanced brackets in support {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise PosetOpsError(f"unbalanced brackets in support {text!r}")
    parts.append("".join(current))
    parts = [part.strip() for part in parts]
    if any(not part for part in parts):
        raise PosetOpsError(f"empty label in support {text!r}")
    return parts


def _poset_argument(args) -> GradedPoset:
    """A graded poset from --in, or from --kind and --n."""
    if args.in_path:
        return _load_graded_poset(args.in_path)
    if args.kind is None or args.n is None:
        raise PosetOpsError("provide either --in or both --kind and --n")
    return generate(args.kind, args.n)


# -- poset subcommands -----------------------------------------------------------


def _cmd_poset_gen(args) -> int:
    _emit(poset_to_dict(generate(args.kind, args.n)), args.out)
    return 0


def _cmd_poset_intervals(args) -> int:
    _emit(poset_to_dict(interval_poset(_load_poset(args.in_path))), args.out)
    return 0


def _cmd_poset_graded_intervals(args) -> int:
    P = _load_graded_poset(args.in_path)
    _emit(poset_to_dict(graded_interval_poset(P)), args.out)
    return 0


def _cmd_poset_second_kind(args) -> int:
    P = _load_graded_poset(args.in_path)
    members = [
        {"generator": x, "poset": poset_to_dict(member)}
        for x, member in second_kind_transform(P)
    ]
    _emit({"members": members}, args.out)
    return 0


def _cmd_poset_product(args) -> int:
    A = _load_poset(args.in_path)
    B = _load_poset(args.in2_path)
    _emit(poset_to_dict(direct_product(A, B)), args.out)
    return 0


def _cmd_poset_diamond(args) -> int:
    A = _load_graded_poset(args.in_path)
    B = _load_graded_poset(args.in2_path)
    _emit(poset_to_dict(diamond_product(A, B)), args.out)
    return 0


def _cmd_poset_dual(args) -> int:
    _emit(poset_to_dict(_load_poset(args.in_path).dual()), args.out)
    return 0


def _cmd_poset_eulerian(args) -> int:
    _emit({"eulerian": is_eulerian(_load_graded_poset(args.in_path))}, args.out)
    return 0


def _cmd_poset_chains(args) -> int:
    P = _poset_argument(args)
    support = _split_support(args.support)
    _emit(count_chains_with_support(P, support), args.out)
    return 0


# -- index subcommands -----------------------------------------------------------


_INDEX_FUNCTIONS = {
    "flag": lambda P: flag_to_dict(flag_f_vector(P)),
    "upsilon": lambda P: poly_to_dict(upsilon(P)),
    "ab": lambda P: poly_to_dict(ab_index(P)),
    "cd": lambda P: poly_to_dict(cd_index(P)),
    "ce": lambda P: poly_to_dict(ce_index(P)),
}


def _cmd_index(args) -> int:
    P = _poset_argument(args)
    _emit(_INDEX_FUNCTIONS[args.which](P), args.out)
    return 0


# -- op subcommands --------------------------------------------------------------


def _op_mixing(p: NCPoly, q: NCPoly) -> NCPoly:
    if p.alphabet == AB and q.alphabet == AB:
        return mixing_ab(p, q)
    if p.alphabet == CD and q.alphabet == CD:
        return mixing_cd(p, q)
    raise PosetOpsError("mixing needs two ab- or two cd-polynomials")


def _cmd_op_unary(args) -> int:
    operators = {
        "iota": upsilon_interval_transform,
        "Iab": ab_interval_transform,
        "Icd": cd_interval_transform,
        "IIab": second_kind_ab_transform,
        "pyr": pyramid,
        "lift": lift,
    }
    result = operators[args.which](_load_poly(args.in_path))
    _emit(poly_to_dict(result), args.out)
    return 0


def _cmd_op_mixing(args) -> int:
    result = _op_mixing(_load_poly(args.in_path), _load_poly(args.in2_path))
    _emit(poly_to_dict(result), args.out)
    return 0


def _cmd_op_delannoy(args) -> int:
    _emit(poly_to_dict(delannoy_mixing(args.i, args.j)), args.out)
    return 0


# -- verify ------------------------------------------------------------------------


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed)
    _emit(report, args.out)
    return 0 if report["summary"]["failed"] == 0 else 1


# -- parser ------------------------------------------------------------------------


def _add_out(parser) -> None:
    parser.add_argument("--out", help="write the JSON result to this file")


def _add_in(parser, required=True) -> None:
    parser.add_argument(
        "--in", dest="in_path", required=required, help="input JSON file"
    )


def _add_in2(parser) -> None:
    parser.add_argument(
        "--in2", dest="in2_path", required=True, help="second input JSON file"
    )


def _add_kind_n(parser) -> None:
    parser.add_argument("--kind", help="generator family name")
    parser.add_argument("--n", type=int, help="generator size parameter")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetops",
        description="Interval posets, flag indices, and their transforms.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    poset = commands.add_parser("poset", help="build and transform posets")
    poset_actions = poset.add_subparsers(dest="action", required=True)

    gen = poset_actions.add_parser("gen", help="generate a standard poset")
    gen.add_argument("--kind", required=True)
    gen.add_argument("--n", type=int, required=True)
    _add_out(gen)
    gen.set_defaults(handler=_cmd_poset_gen)

    intervals = poset_actions.add_parser(
        "intervals", help="poset of nonempty intervals"
    )
    _add_in(intervals)
    _add_out(intervals)
    intervals.set_defaults(handler=_cmd_poset_intervals)

    graded_intervals = poset_actions.add_parser(
        "graded-intervals", help="interval poset with an empty bottom adjoined"
    )
    _add_in(graded_intervals)
    _add_out(graded_intervals)
    graded_intervals.set_defaults(handler=_cmd_poset_graded_intervals)

    second_kind = poset_actions.add_parser(
        "second-kind", help="one interval poset member per element"
    )
    _add_in(second_kind)
    _add_out(second_kind)
    second_kind.set_defaults(handler=_cmd_poset_second_kind)

    product = poset_actions.add_parser("product", help="direct product")
    _add_in(product)
    _add_in2(product)
    _add_out(product)
    product.set_defaults(handler=_cmd_poset_product)

    diamond = poset_actions.add_parser(
        "diamond", help="product with bottoms fused into a new bottom"
    )
    _add_in(diamond)
    _add_in2(diamond)
    _add_out(diamond)
    diamond.set_defaults(handler=_cmd_poset_diamond)

    dual = poset_actions.add_parser("dual", help="reverse the order")
    _add_in(dual)
    _add_out(dual)
    dual.set_defaults(handler=_cmd_poset_dual)

    eulerian = poset_actions.add_parser(
        "eulerian", help="check the even/odd interval balance"
    )
    _add_in(eulerian)
    _add_out(eulerian)
    eulerian.set_defaults(handler=_cmd_poset_eulerian)

    chains = poset_actions.add_parser(
        "chains", help="count nested-interval chains over a support chain"
    )
    _add_in(chains, required=False)
    _add_kind_n(chains)
    chains.add_argument(
        "--support", required=True, help="comma-separated chain of labels"
    )
    _add_out(chains)
    chains.set_defaults(handler=_cmd_poset_chains)

    index = commands.add_parser("index", help="flag counts and index polynomials")
    index_actions = index.add_subparsers(dest="which", required=True)
    for which, text in (
        ("flag", "chain counts by visited rank set"),
        ("upsilon", "flag-word polynomial"),
        ("ab", "ab-index"),
        ("cd", "cd-index"),
        ("ce", "ce-index"),
    ):
        sub = index_actions.add_parser(which, help=text)
        _add_in(sub, required=False)
        _add_kind_n(sub)
        _add_out(sub)
        sub.set_defaults(handler=_cmd_index, which=which)

    op = commands.add_parser("op", help="transforms on index polynomials")
    op_actions = op.add_subparsers(dest="which", required=True)
    for which, text in (
        ("iota", "interval transform of flag-word polynomials"),
        ("Iab", "interval transform of ab-indices"),
        ("Icd", "interval transform of cd-indices"),
        ("IIab", "second-kind transform of ab-indices"),
        ("pyr", "mix with a single point"),
        ("lift", "multiply by a-b on both sides and add"),
    ):
        sub = op_actions.add_parser(which, help=text)
        _add_in(sub)
        _add_out(sub)
        sub.set_defaults(handler=_cmd_op_unary, which=which)

    mixing = op_actions.add_parser("M", help="mix two index polynomials")
    _add_in(mixing)
    _add_in2(mixing)
    _add_out(mixing)
    mixing.set_defaults(handler=_cmd_op_mixing)

    delannoy = op_actions.add_parser(
        "delannoy", help="mixing of two c-powers via weighted lattice paths"
    )
    delannoy.add_argument("--i", type=int, required=True)
    delannoy.add_argument("--j", type=int, required=True)
    _add_out(delannoy)
    delannoy.set_defaults(handler=_cmd_op_delannoy)

    verify = commands.add_parser("verify", help="run a named verification suite")
    verify.add_argument(
        "--suite",
        default="all",
        choices=list(SUITES) + ["all"],
        help="which suite to run",
    )
    verify.add_argument(
        "--seed", type=int, default=0, help="seed for the random corpus members"
    )
    _add_out(verify)
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 0
        return USAGE_EXIT if code == 2 else code
    try:
        return args.handler(args)
    except PosetOpsError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
