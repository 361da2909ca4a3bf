"""Command-line surface: series expansion, family tables, Sheffer routes,
and the identity-verification runner.

Exit codes: 0 success / all checks pass; 1 a verification failed;
2 usage, parse, or domain errors.  Exact values are always emitted as
strings ("-3/2"), never floats, in every output format.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .dsl import Binary, ComposeNode, LSym, PowNode, Unary, eval_expr, parse_expr
from .errors import DomainError, ParseError, UmbralError, UnknownIdentity
from .families import BESPOKE_TAGS, FAMILY_NAMES, bespoke_pair, family_polys
from .fields import QL, QQ
from .identities import (
    IDENTITY_TAGS,
    aggregate_pass,
    default_grid,
    run_registry,
)
from .series import Poly, Series, working_trunc
from .umbral import ShefferPair, sheffer_gf, sheffer_transfer_all


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _lambda_arg(text: str):
    if text in ("symbolic", "sym", "L"):
        return None
    return _fraction_arg(text)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="umbralkit",
        description="Exact Sheffer-sequence kernel: expand series, tabulate "
        "polynomial families, and verify the identity registry.",
    )
    top.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    p_exp = sub.add_parser("expand", help="expand a DSL expression as a truncated series")
    p_exp.add_argument("expr")
    p_exp.add_argument("--order", type=int, required=True, metavar="N")
    p_exp.add_argument("--field", choices=("q", "qlambda"), default=None)
    p_exp.add_argument("--lambda", dest="lam", type=_fraction_arg, default=None, metavar="p/q")
    p_exp.add_argument("--format", choices=("csv", "json", "latex"), default="json")

    p_fam = sub.add_parser(
        "family",
        help="tabulate a named polynomial family or a registry pair's sequence",
    )
    p_fam.add_argument("name", choices=FAMILY_NAMES + BESPOKE_TAGS)
    p_fam.add_argument("--order-param", dest="order", type=int, default=1, metavar="k")
    p_fam.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None, metavar="p/q|symbolic")
    p_fam.add_argument("--a", type=_fraction_arg, default=None, metavar="p/q",
                       help="Poisson-Charlier parameter (nonzero)")
    p_fam.add_argument("--b", type=_fraction_arg, default=None, metavar="p/q")
    p_fam.add_argument("--c", type=_fraction_arg, default=None, metavar="p/q")
    p_fam.add_argument("--m", type=int, default=None, metavar="k")
    p_fam.add_argument("--n", type=int, required=True, metavar="N")
    p_fam.add_argument("--format", choices=("csv", "json", "latex"), default="csv")

    p_sh = sub.add_parser("sheffer", help="build a Sheffer sequence by both routes")
    p_sh.add_argument("--g", required=True, metavar="EXPR")
    p_sh.add_argument("--f", required=True, metavar="EXPR")
    p_sh.add_argument("--n", type=int, required=True, metavar="N")
    p_sh.add_argument("--field", choices=("q", "qlambda"), default=None)
    p_sh.add_argument("--lambda", dest="lam", type=_fraction_arg, default=None, metavar="p/q")
    p_sh.add_argument("--format", choices=("csv", "json", "latex"), default="json")

    p_ver = sub.add_parser("verify", help="run identity checks in exact arithmetic")
    p_ver.add_argument("id", nargs="?", default=None,
                       help=f"identity tag ({', '.join(IDENTITY_TAGS)})")
    p_ver.add_argument("--all", action="store_true", help="run the whole registry")
    p_ver.add_argument("--n-max", dest="n_max", type=int, default=6, metavar="N")
    p_ver.add_argument("--grid", choices=("default",), default="default")
    p_ver.add_argument("--format", choices=("json",), default="json")
    return top


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------


def _coeff_strs(s: Series) -> list[str]:
    return [s.field.to_str(c) for c in s.coeffs]


def _poly_row(p: Poly) -> list[str]:
    if p.is_zero():
        return ["0"]
    return [p.field.to_str(c) for c in p.coeffs]


def _latex_scalar(text: str) -> str:
    """LaTeX for one exact scalar rendered by the field (L spelled lambda)."""
    text = text.replace("L", r"\lambda ")
    if "/" in text and "(" not in text:
        num, den = text.split("/", 1)
        sign = ""
        if num.startswith("-"):
            sign, num = "-", num[1:]
        return rf"{sign}\frac{{{num}}}{{{den}}}"
    if text.startswith("(") and ")/(" in text:
        num, den = text[1:-1].split(")/(", 1)
        return rf"\frac{{{num}}}{{{den}}}"
    return text


def _latex_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if not c:
            continue
        cs = p.field.to_str(c)
        neg = cs.startswith("-") and " " not in cs
        mag = cs[1:] if neg else cs
        body = _latex_scalar(mag) if " " not in mag else rf"\left({_latex_scalar(cs)}\right)"
        if k > 0:
            xs = var if k == 1 else f"{var}^{{{k}}}"
            body = xs if body == "1" else body + " " + xs
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def _latex_series(s: Series) -> str:
    parts = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        cs = s.field.to_str(c)
        neg = cs.startswith("-") and " " not in cs
        mag = cs[1:] if neg else cs
        body = _latex_scalar(mag) if " " not in mag else rf"\left({_latex_scalar(cs)}\right)"
        if k > 0:
            ts = "t" if k == 1 else f"t^{{{k}}}"
            body = ts if body == "1" else body + " " + ts
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    if not parts:
        parts = ["0"]
    return " ".join(parts) + f" + O(t^{{{s.trunc}}})"


def _emit_rows(polys, fmt, out) -> None:
    if fmt == "csv":
        for n, p in enumerate(polys):
            out.write(",".join([str(n)] + _poly_row(p)) + "\n")
    elif fmt == "json":
        out.write(json.dumps([_poly_row(p) for p in polys]) + "\n")
    else:
        for n, p in enumerate(polys):
            out.write(f"{n} & {_latex_poly(p)} \\\\\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _ast_uses_lambda(ast) -> bool:
    if isinstance(ast, LSym):
        return True
    if isinstance(ast, Unary):
        return _ast_uses_lambda(ast.arg)
    if isinstance(ast, Binary):
        return _ast_uses_lambda(ast.left) or _ast_uses_lambda(ast.right)
    if isinstance(ast, PowNode):
        return _ast_uses_lambda(ast.base)
    if isinstance(ast, ComposeNode):
        return _ast_uses_lambda(ast.outer) or _ast_uses_lambda(ast.inner)
    return False


def _pick_field(args, asts):
    if args.field == "q" or args.lam is not None:
        return QQ
    if args.field == "qlambda":
        return QL
    return QL if any(_ast_uses_lambda(a) for a in asts) else QQ


def _cmd_expand(args, out) -> int:
    if args.order < 1:
        raise DomainError("--order must be >= 1")
    ast = parse_expr(args.expr)
    field = _pick_field(args, [ast])
    series = eval_expr(ast, args.order, field, args.lam)
    if args.format == "json":
        out.write(json.dumps(_coeff_strs(series)) + "\n")
    elif args.format == "csv":
        for k, c in enumerate(series.coeffs):
            out.write(f"{k},{series.field.to_str(c)}\n")
    else:
        out.write(_latex_series(series) + "\n")
    return 0


def _cmd_family(args, out) -> int:
    if args.n < 0:
        raise DomainError("--n must be >= 0")
    if args.name in BESPOKE_TAGS:
        if args.n < 1:
            raise DomainError("registry pairs need --n >= 1")
        if args.a is not None:
            raise DomainError("--a applies to the poisson_charlier family only")
        pair = bespoke_pair(
            args.name,
            working_trunc(args.n),
            order=args.order,
            b=args.b,
            c=args.c,
            m=args.m,
            lam=args.lam,
        )
        _emit_rows(sheffer_gf(pair, args.n), args.format, out)
        return 0
    for flag, value in (("--b", args.b), ("--c", args.c), ("--m", args.m)):
        if value is not None:
            raise DomainError(f"{flag} applies to registry pairs only")
    lam_needed = args.name in ("frobenius_euler", "frobenius_eulerian", "daehee")
    if not lam_needed and args.lam is not None:
        raise DomainError(f"--lambda does not apply to the {args.name} family")
    if args.name != "poisson_charlier" and args.a is not None:
        raise DomainError("--a applies to the poisson_charlier family only")
    polys = family_polys(args.name, args.order, args.n, lam=args.lam, a=args.a)
    _emit_rows(polys, args.format, out)
    return 0


def _cmd_sheffer(args, out) -> int:
    if args.n < 1:
        raise DomainError("--n must be >= 1")
    g_ast = parse_expr(args.g)
    f_ast = parse_expr(args.f)
    field = _pick_field(args, [g_ast, f_ast])
    T = working_trunc(args.n)
    pair = ShefferPair(
        eval_expr(g_ast, T, field, args.lam), eval_expr(f_ast, T, field, args.lam)
    )
    polys = sheffer_gf(pair, args.n)
    transfer = sheffer_transfer_all(pair, args.n)
    agree = all(transfer[n - 1] == polys[n] for n in range(1, args.n + 1))
    if args.format == "json":
        out.write(
            json.dumps({"agree": agree, "rows": [_poly_row(p) for p in polys]}) + "\n"
        )
    elif args.format == "csv":
        _emit_rows(polys, "csv", out)
        out.write(f"agree,{'true' if agree else 'false'}\n")
    else:
        _emit_rows(polys, "latex", out)
        out.write(f"% agree: {'true' if agree else 'false'}\n")
    return 0 if agree else 1


def _cmd_verify(args, out) -> int:
    if args.id is None and not getattr(args, "all", False):
        raise DomainError("verify needs an identity tag or --all")
    grid = default_grid()
    if args.id is not None:
        if args.id not in IDENTITY_TAGS:
            raise UnknownIdentity(f"unknown identity tag {args.id!r}")
        grid = [(tag, params) for tag, params in grid if tag == args.id]
    reports = run_registry(grid, args.n_max)
    if len(reports) == 1:
        out.write(json.dumps(reports[0].to_dict(), sort_keys=True) + "\n")
    else:
        out.write(json.dumps([r.to_dict() for r in reports], sort_keys=True) + "\n")
    return 0 if aggregate_pass(reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "expand":
            return _cmd_expand(args, out)
        if args.command == "family":
            return _cmd_family(args, out)
        if args.command == "sheffer":
            return _cmd_sheffer(args, out)
        return _cmd_verify(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except UmbralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
