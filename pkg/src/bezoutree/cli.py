"""Command-line front end.

Exit codes: 0 success, 1 precondition violation (or a failed ``verify-trees``),
2 unparsable arguments. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import __version__
from .bezout_core import PreconditionError, beta, xgcd
from .compat import candidate_exceptional, check_compat, scan_exceptional
from .mat2 import Mat2, eval_word, factor, format_word, parse_matrix, parse_word
from .trees import TreeNode, first_mismatch, iter_bezout_tree, iter_pyth_tree

MAX_DEPTH = 20
MAX_BOUND = 10**4

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_PARSE = 2


class ParseError(ValueError):
    pass


def parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"pair literal must look like 'm,n', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"pair literal must hold two integers, got {text!r}") from None


def _matrix(text: str) -> Mat2:
    try:
        return parse_matrix(text)
    except PreconditionError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _word(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _s(pair) -> list[str]:
    return [str(x) for x in pair]


def _fmt(pair) -> str:
    return f"({pair[0]},{pair[1]})"


def _matrix_json(A: Mat2) -> list[list[str]]:
    return [_s(row) for row in A.rows()]


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _sorted_pairs(pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    return sorted(set(pairs))


def node_json(node: TreeNode) -> dict:
    return {
        "path": node.path,
        "pair": _s(node.pair),
        "bezout": _s(node.bezout),
        "overridden": node.overridden,
    }


def _node_line(node: TreeNode, with_bezout: bool) -> str:
    path = node.path or "-"
    line = f"{path}\t{_fmt(node.pair)}"
    if with_bezout:
        line += f"\t{_fmt(node.bezout)}"
        if node.overridden:
            line += "\t*"
    return line


def _check_depth(depth: int) -> None:
    if depth < 0 or depth > MAX_DEPTH:
        raise PreconditionError(f"depth must be between 0 and {MAX_DEPTH}, got {depth}")


def _check_bound(bound: int) -> None:
    if bound < 1 or bound > MAX_BOUND:
        raise PreconditionError(f"bound must be between 1 and {MAX_BOUND}, got {bound}")


# -- subcommands ----------------------------------------------------------------------


def cmd_xgcd(args, out):
    g, r, s = xgcd(args.a, args.b)
    if args.format == "json":
        out.write(_dump({"pair": _s((args.a, args.b)), "gcd": str(g), "bezout": _s((r, s))}) + "\n")
    else:
        out.write(f"{g} {r} {s}\n")
    return EXIT_OK


def cmd_tree(args, out):
    _check_depth(args.depth)
    root = parse_pair(args.root)
    for node in iter_pyth_tree(root, args.depth):
        if args.format == "json":
            node = TreeNode(node.path, node.pair, beta(*node.pair), False)
            out.write(_dump(node_json(node)) + "\n")
        else:
            out.write(_node_line(node, with_bezout=False) + "\n")
    return EXIT_OK


def cmd_bezout_tree(args, out):
    _check_depth(args.depth)
    root, seed = parse_pair(args.root), parse_pair(args.seed)
    for node in iter_bezout_tree(root, seed, args.depth, canonical=args.canonical):
        if args.format == "json":
            out.write(_dump(node_json(node)) + "\n")
        else:
            out.write(_node_line(node, with_bezout=True) + "\n")
    return EXIT_OK


def cmd_verify_trees(args, out):
    _check_depth(args.depth)
    root, seed = parse_pair(args.root), parse_pair(args.seed)
    nodes = iter_bezout_tree(root, seed, args.depth, canonical=args.canonical)
    count = 0

    def counted():
        nonlocal count
        for node in nodes:
            count += 1
            yield node

    bad = first_mismatch(counted())
    ok = bad is None
    if args.format == "json":
        record = {"root": _s(root), "seed": _s(seed), "depth": args.depth,
                  "canonical": args.canonical, "ok": ok, "checked": count}
        if bad is not None:
            record["mismatch"] = dict(node_json(bad), beta=_s(beta(*bad.pair)))
        out.write(_dump(record) + "\n")
    elif ok:
        out.write(f"ok: {count} nodes, propagated coefficients equal beta\n")
    else:
        out.write(
            f"mismatch at path {bad.path or '-'}: pair {_fmt(bad.pair)} "
            f"propagated {_fmt(bad.bezout)} beta {_fmt(beta(*bad.pair))}\n"
        )
    return EXIT_OK if ok else EXIT_PRECONDITION


def cmd_factor(args, out):
    A = _matrix(args.matrix)
    word = format_word(factor(A))
    if args.format == "json":
        out.write(_dump({"matrix": _matrix_json(A), "word": word}) + "\n")
    else:
        out.write(word + "\n")
    return EXIT_OK


def cmd_compat(args, out):
    A = _matrix(args.matrix)
    rep = check_compat(A, parse_pair(args.pair))
    if args.format == "json":
        out.write(_dump({
            "matrix": _matrix_json(A),
            "pair": _s(rep.pair),
            "transformed": _s(rep.transformed),
            "expected": _s(rep.expected),
            "actual": _s(rep.actual),
            "equal": rep.equal,
        }) + "\n")
    else:
        out.write(f"{'equal' if rep.equal else 'differ'} {_fmt(rep.transformed)} "
                  f"expected {_fmt(rep.expected)} actual {_fmt(rep.actual)}\n")
    return EXIT_OK


def cmd_exceptional(args, out):
    A = _matrix(args.matrix)
    _check_bound(args.bound)
    if args.workers < 1:
        raise PreconditionError(f"workers must be >= 1, got {args.workers}")
    word = _word(args.word) if args.word is not None else factor(A)
    if args.word is not None and eval_word(word) != A:
        raise PreconditionError(f"word {args.word!r} does not evaluate to the matrix")
    found = scan_exceptional(A, args.bound, workers=args.workers)
    if args.format == "json":
        out.write(_dump({
            "matrix": _matrix_json(A),
            "bound": args.bound,
            "exceptional": [_s(p) for p in found],
            "candidate": [_s(p) for p in _sorted_pairs(candidate_exceptional(word))],
        }) + "\n")
    else:
        for p in found:
            out.write(f"{p[0]} {p[1]}\n")
    return EXIT_OK


def cmd_candidate(args, out):
    word = _word(args.word)
    pairs = _sorted_pairs(candidate_exceptional(word))
    if args.format == "json":
        out.write(_dump({"word": format_word(word), "candidate": [_s(p) for p in pairs]}) + "\n")
    else:
        for p in pairs:
            out.write(f"{p[0]} {p[1]}\n")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="bezoutree", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("xgcd", parents=[common], help="canonical (gcd, r, s) of a pair")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_xgcd)

    p = sub.add_parser(
        "tree", parents=[common], help="Pythagorean-pair tree",
        epilog="Each pair (m,n) gives the primitive triple x=m^2-n^2, y=2mn, z=m^2+n^2.",
    )
    p.add_argument("--root", default="3,1")
    p.add_argument("--depth", type=int, default=2)
    p.set_defaults(func=cmd_tree)

    for name, func, help_ in (
        ("bezout-tree", cmd_bezout_tree, "Bezout tree propagated from a seed"),
        ("verify-trees", cmd_verify_trees, "check propagated coefficients against beta"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--root", default="2,1")
        p.add_argument("--seed", default="0,1")
        p.add_argument("--depth", type=int, default=2)
        p.add_argument("--no-canonical", dest="canonical", action="store_false",
                       help="skip the (1,-1) fix at path 1 of the (2,1) tree")
        p.set_defaults(func=func)

    p = sub.add_parser("factor", parents=[common], help="word in U,S,s,T,t for a unimodular matrix")
    p.add_argument("--matrix", required=True, help='row-major, e.g. "2,1;1,0"')
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("compat", parents=[common], help="check beta(A p) == (A^-1)^T beta(p)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("exceptional", parents=[common], help="exhaustive exceptional-set scan")
    p.add_argument("--matrix", required=True)
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--word", help="factorization used for the candidate set (default: computed)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("candidate", parents=[common], help="candidate exceptional set of a word")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_candidate)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"bezoutree: error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        err.write(f"bezoutree: precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
