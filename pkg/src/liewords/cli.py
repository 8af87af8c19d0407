"""The ``lw`` command line tool.

Single-query evaluation (lambda, ell, bracket, ...) plus the exhaustive
verification suites.  Exit codes: 0 success, 1 verification failure,
2 usage or resource error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from . import lie, suites, tabloids
from .poly import Poly, left_residual, parse_poly, right_residual, shuffle
from .render import render
from .words import Alphabet, lyndon_words

_WORD_RE = re.compile(r"[a-z]*\Z")


class UsageError(Exception):
    pass


def _word(arg: str) -> str:
    if arg == "1":
        return ""
    if not _WORD_RE.match(arg):
        raise UsageError(f"not a word: {arg!r}")
    return arg


def _parse_poly_arg(arg: str) -> Poly:
    try:
        return parse_poly(arg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, obj) -> None:
    sys.stdout.buffer.write(render(obj, args.format))


def _infer_pascal_shape(w: str) -> tuple[int, str, int]:
    k = len(w) - len(w.lstrip("a"))
    l = len(w) - len(w.rstrip("a"))
    body = w[k : len(w) - l or None]
    if len(body) < 2 or body[0] != "b" or body[-1] != "b":
        raise UsageError(f"{w!r} is not of the shape a^k b u b a^l")
    return k, body[1:-1], l


def cmd_lambda(args) -> int:
    w = _word(args.word)
    if args.method in (None, "rec"):
        result = lie.lambda_rec(w)
    elif args.method == "oracle":
        result = lie.lambda_oracle(w)
    elif args.method == "factors":
        result = lie.lambda_factor_expansion(w, r=1) if w else Poly.zero()
    elif args.method == "pascal":
        k, u, l = _infer_pascal_shape(w)
        result = lie.lambda_pascal(k, u, l)
    else:
        raise UsageError(f"unknown method {args.method!r}")
    _emit(args, result)
    return 0


def cmd_ell(args) -> int:
    _emit(args, lie.ell(_word(args.word)))
    return 0


def cmd_bracket(args) -> int:
    w = _word(args.word)
    try:
        tree, expansion = lie.lyndon_bracket(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(args, {"tree": str(tree), "expansion": expansion})
    else:
        sys.stdout.buffer.write(f"{tree} = {expansion}\n".encode())
    return 0


def cmd_lyndon(args) -> int:
    try:
        words = lyndon_words(Alphabet.of(args.alphabet), args.length)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, words)
    return 0


def cmd_shuffle(args) -> int:
    _emit(args, shuffle(_parse_poly_arg(args.p), _parse_poly_arg(args.q)))
    return 0


def cmd_residual(args) -> int:
    p = _parse_poly_arg(args.p)
    q = _parse_poly_arg(args.q)
    if args.side == "left":
        _emit(args, left_residual(q, p))
    else:
        _emit(args, right_residual(p, q))
    return 0


def cmd_gamma(args) -> int:
    _emit(args, lie.gamma(_word(args.word)))
    return 0


def cmd_support(args) -> int:
    _emit(args, lie.in_support(_word(args.word), args.method))
    return 0


def cmd_ed(args) -> int:
    try:
        d, e = lie.e_d_invariants(_word(args.word), args.pivot)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(args, {"d": d, "e": e})
    else:
        sys.stdout.buffer.write(f"d={d} e={e}\n".encode())
    return 0


def cmd_classify(args) -> int:
    _emit(args, lie.classify_pair(_word(args.u), _word(args.v)))
    return 0


def cmd_proportional(args) -> int:
    try:
        result = lie.lambda_proportional(_word(args.u), _word(args.v))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if result is None:
        sys.stdout.buffer.write(b"not proportional\n" if args.format == "text"
                                else b'{"proportional":false}\n')
        return 0
    eta, eta_p = result
    if args.format == "json":
        _emit(args, {"proportional": True, "eta": eta, "etaPrime": eta_p})
    else:
        sys.stdout.buffer.write(f"{eta} {eta_p}\n".encode())
    return 0


def cmd_tabloid(args) -> int:
    w = _word(args.word)
    try:
        t = tabloids.word_to_tabloid(w, Alphabet.of(args.alphabet))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(args, {"tabloid": [list(block) for block in t]})
    else:
        sys.stdout.buffer.write((tabloids.format_tabloid(t) + "\n").encode())
    return 0


def cmd_verify(args) -> int:
    name = args.suite
    known = set(suites.SUITES) | {"tabloid-theorem3"}
    if name not in known:
        raise UsageError(f"unknown suite {name!r}; choose from {sorted(known)}")
    if args.max_len is not None and not args.unsafe_no_cap:
        cap = suites.TABLOID_CAP if name == "tabloid-theorem3" else suites.LENGTH_CAP
        if args.max_len > cap:
            raise UsageError(
                f"bound {args.max_len} exceeds the hard cap {cap};"
                " pass --unsafe-no-cap to override"
            )
    report = suites.run_suite(
        name, alphabet=args.alphabet, max_len=args.max_len, jobs=args.jobs
    )
    _emit(args, report)
    print(f"[{report.suite}] {report.millis} ms", file=sys.stderr)
    return 0 if report.ok else 1


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("LW_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lw",
        description="Free Lie algebra and shuffle algebra desk calculator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--alphabet", default="ab")
        return p

    p = add("lambda", cmd_lambda, "adjoint of the left-normed bracketing")
    p.add_argument("word")
    p.add_argument("--method", choices=("rec", "oracle", "pascal", "factors"))

    p = add("ell", cmd_ell, "left-normed Lie bracketing of a word")
    p.add_argument("word")

    p = add("bracket", cmd_bracket, "Lyndon bracketing tree and expansion")
    p.add_argument("word")

    p = add("lyndon", cmd_lyndon, "Lyndon words of a given length")
    p.add_argument("length", type=int)

    p = add("shuffle", cmd_shuffle, "shuffle product of two polynomials")
    p.add_argument("p")
    p.add_argument("q")

    p = add("residual", cmd_residual, "residual P |> Q (or Q <| P with --side left)")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--side", choices=("right", "left"), default="right")

    p = add("gamma", cmd_gamma, "gcd of the adjoint image coefficients")
    p.add_argument("word")

    p = add("support", cmd_support, "free Lie algebra support membership")
    p.add_argument("word")
    p.add_argument("--method", choices=("lambda", "closed"), default="lambda")

    p = add("ed", cmd_ed, "trailing-run invariants d and e of lambda(word)")
    p.add_argument("word")
    p.add_argument("--pivot", default="b")

    p = add("classify", cmd_classify, "twin / anti-twin classification of a pair")
    p.add_argument("u")
    p.add_argument("v")

    p = add("proportional", cmd_proportional, "rational proportionality of adjoints")
    p.add_argument("u")
    p.add_argument("v")

    p = add("tabloid", cmd_tabloid, "ordered set partition picture of a word")
    p.add_argument("word")

    p = add("verify", cmd_verify, "run an exhaustive verification suite")
    p.add_argument("suite")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--unsafe-no-cap", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"lw: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
