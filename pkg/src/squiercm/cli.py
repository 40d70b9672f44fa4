"""Command line front end: ``squiercm <subcommand> <presentation-file> [flags]``.

Exit status is 0 on success (including ``unknown`` verdicts), 1 on domain
errors and 2 on usage errors.  Errors are reported on stderr as a single
line ``error: <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from .crossedmod import CrossedWord, FreeCrossedModule, check_axioms, phi
from .freegroup import WordError, format_word, parse_word
from .presentation import (
    CosetLabeler,
    GroupOracle,
    OracleError,
    Presentation,
    PresentationError,
    parse_presentation,
    validate_oracle,
)
from .squier import Edge, PathError, SignedEdge, SquierComplex
from .starone import ExchangeError, LambdaWord, NotAnIdentity, StarOne, parse_lambda_word


class DomainError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


_EDGE_RE = re.compile(r"edge\(\s*([A-Za-z0-9_]+)\s*,([^,)]*),([^)]*)\)\s*(\^\s*-1)?\Z")


def parse_path(text: str, cx: SquierComplex, source: Optional[str] = None):
    """Parse ``edge(<rel>, <p>, <q>)[^-1]; ...``; the empty path is ``1``."""
    alphabet = cx.presentation.alphabet
    src = None if source is None else parse_word(source, alphabet)
    text = text.strip()
    if text == "1":
        return cx.path([], source=src if src is not None else parse_word("1"))
    steps = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        m = _EDGE_RE.match(chunk)
        if not m:
            raise ValueError(f"malformed step {chunk!r} (expected edge(<rel>, <p>, <q>)[^-1])")
        e = cx.edge(parse_word(m.group(2).strip(), alphabet), m.group(1), parse_word(m.group(3).strip(), alphabet))
        steps.append(SignedEdge(e, -1 if m.group(4) else 1))
    return cx.path(steps, source=src)


def _load(path: str) -> Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError("io", f"{path}: {exc.strerror}") from None
    return parse_presentation(text)


def _oracle(args, P: Presentation, required: bool = False) -> Optional[GroupOracle]:
    choice = getattr(args, "oracle", None)
    if choice is None and required:
        choice = "file" if P.oracle_rules else None
        if choice is None:
            raise DomainError("oracle", "an oracle is required (--oracle free|file)")
    if choice is None or choice == "none":
        return None
    if choice == "free":
        return GroupOracle.free_reduction()
    report = validate_oracle(P.rewriting_oracle(), args.budget)
    if not report.valid:
        raise DomainError("oracle", "rewriting system in the presentation file failed validation")
    return report.oracle


def _element(text: str, P: Presentation, translate: bool = False):
    """Read a lambda word, a crossed word or an edge path (as its lambda form)."""
    t = text.strip()
    if t.startswith("gen("):
        return FreeCrossedModule(P).parse(t)
    if t.startswith("edge("):
        cx = SquierComplex(P)
        alpha = parse_path(t, cx)
        if translate:
            alpha = cx.translate_to_one(alpha)
        return StarOne(P).lambda_normal_form(alpha)
    return parse_lambda_word(t, P)


def _as_lambda(x) -> LambdaWord:
    return phi(x) if isinstance(x, CrossedWord) else x


def _input(args) -> str:
    for name in ("lambda_", "crossed", "path"):
        value = getattr(args, name, None)
        if value is not None:
            return value
    raise DomainError("usage", "one of --lambda, --crossed or --path is required")


# -- subcommands ---------------------------------------------------------------


def cmd_explore(args, P, out):
    cx = SquierComplex(P)
    frag = cx.enumerate_fragment(args.vertex_radius, args.context_radius)
    out.write(cx.export_fragment(frag, args.format).decode("utf-8"))


def cmd_normalize(args, P, out):
    x = _as_lambda(_element(_input(args), P, translate=args.translate))
    out.write(f"{x}\n")


def cmd_boundary(args, P, out):
    x = _element(_input(args), P, translate=True)
    out.write(format_word(StarOne(P).boundary(x)) + "\n")


def cmd_abelianize(args, P, out):
    x = _element(_input(args), P, translate=True)
    vec = StarOne(P).abelianize(x, _oracle(args, P))
    if args.format == "json":
        out.write(json.dumps(vec.to_json()) + "\n")
    else:
        out.write(f"{vec}\n")


def cmd_equal(args, P, out):
    a = _as_lambda(_element(args.left, P, translate=True))
    b = _as_lambda(_element(args.right, P, translate=True))
    out.write(f"{StarOne(P).equal(a, b, _oracle(args, P))}\n")


def cmd_identity_check(args, P, out):
    x = _element(_input(args), P, translate=True)
    out.write("true\n" if StarOne(P).is_identity(x) else "false\n")


def cmd_cockcroft(args, P, out):
    if not args.lambda_:
        raise DomainError("usage", "cockcroft needs at least one --lambda identity")
    if args.subgroup == "whole":
        labeler = CosetLabeler.whole_group()
    else:
        oracle = _oracle(args, P, required=True)
        if args.subgroup == "trivial":
            labeler = CosetLabeler.trivial_subgroup(oracle)
        else:
            try:
                with open(args.subgroup, encoding="utf-8") as fh:
                    table = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise DomainError("io", f"labeler file {args.subgroup}: {exc}") from None
            table = {oracle.normal_form(P.parse_word(k)): v for k, v in table.items()}
            labeler = CosetLabeler.from_table(table, oracle, name=args.subgroup)
    S = StarOne(P)
    zero = True
    for text in args.lambda_:
        a = _as_lambda(_element(text, P, translate=True))
        img = S.cockcroft_image(a, labeler)
        zero = zero and img.is_zero()
        out.write(f"{a} => {img}\n")
    out.write(f"cockcroft on supplied identities: {'yes' if zero else 'no'}\n")


def cmd_check_axioms(args, P, out):
    oracle = _oracle(args, P, required=True)
    report = check_axioms(P, oracle, args.trials, args.seed)
    out.write(report.summary() + "\n")


def cmd_verify_oracle(args, P, out):
    report = validate_oracle(P.rewriting_oracle(), args.budget)
    out.write(report.summary() + "\n")
    if not report.valid:
        raise DomainError("oracle-invalid", "rewriting system failed validation")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squiercm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("presentation", help="presentation file")
        p.set_defaults(func=func)
        return p

    def add_input(p, multiple=False):
        g = p.add_mutually_exclusive_group(required=not multiple)
        if multiple:
            g.add_argument("--lambda", dest="lambda_", action="append", help="lambda word (repeatable)")
        else:
            g.add_argument("--lambda", dest="lambda_", help="lambda word, e.g. 'lam(r1, x); lam(r1, 1)^-1'")
            g.add_argument("--crossed", help="crossed word, e.g. 'gen(c, b)'")
            g.add_argument("--path", help="edge path, e.g. 'edge(c, 1, 1)'")

    def add_oracle(p):
        p.add_argument("--oracle", choices=("none", "free", "file"), default=None,
                       help="word problem oracle: free reduction or the file's rewriting system")
        p.add_argument("--budget", type=int, default=1000, help="rewriting step budget for validation")

    p = add("explore", cmd_explore, "enumerate and export a fragment of the complex")
    p.add_argument("--vertex-radius", type=int, default=1)
    p.add_argument("--context-radius", type=int, default=1)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("normalize", cmd_normalize, "print the lambda normal form")
    add_input(p)
    p.add_argument("--translate", action="store_true", help="translate a path to start at 1 first")

    p = add("boundary", cmd_boundary, "print the boundary in F(X)")
    add_input(p)

    p = add("abelianize", cmd_abelianize, "image in the free module over the relations")
    add_input(p)
    add_oracle(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("equal", cmd_equal, "decide equality (equal/unequal/unknown)")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    add_oracle(p)

    p = add("identity-check", cmd_identity_check, "is the element an identity among relations")
    add_input(p)

    p = add("cockcroft", cmd_cockcroft, "image of identities with coefficients in cosets G/L")
    add_input(p, multiple=True)
    p.add_argument("--subgroup", default="trivial",
                   help="'trivial', 'whole' or a JSON labeler file mapping words to coset labels")
    add_oracle(p)

    p = add("check-axioms", cmd_check_axioms, "randomized crossed module axiom checks")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    add_oracle(p)

    p = add("verify-oracle", cmd_verify_oracle, "critical pair check of the file's rewriting system")
    p.add_argument("--budget", type=int, default=1000)
    return parser


_DOMAIN_ERRORS = (
    PresentationError, WordError, OracleError, PathError, ExchangeError, NotAnIdentity, KeyError, ValueError,
)


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        P = _load(args.presentation)
        args.func(args, P, out)
    except DomainError as exc:
        err.write(f"error: {exc.kind}: {exc}\n")
        return 2 if exc.kind == "usage" else 1
    except _DOMAIN_ERRORS as exc:
        msg = str(exc).replace("\n", " ")
        err.write(f"error: {type(exc).__name__}: {msg}\n")
        return 1
    return 0


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
