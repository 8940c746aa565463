"""Command-line front end: ``glpq <command> [--algebra ...] args``."""
from __future__ import annotations

import argparse
import json
import sys

from .errors import GlpqError
from .funalg import commutator, is_central
from .parser import parse_element
from .rewrite import enumerate_basis
from .verify import PRESET_IDS, SUITES, get_preset, run_suite


def _read(arg):
    return sys.stdin.read().strip() if arg == "-" else arg


def _emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(text)


def _element(args, pre, arg):
    return parse_element(_read(arg), pre)


def cmd_normalize(args, pre):
    x = _element(args, pre, args.expr)
    _emit(args, str(x), x.to_json())


def cmd_comul(args, pre):
    x = _element(args, pre, args.expr)
    d = pre.coproduct(x)
    _emit(args, str(d), d.to_json())


def cmd_antipode(args, pre):
    x = _element(args, pre, args.expr)
    s = pre.antipode(x)
    _emit(args, str(s), s.to_json())


def cmd_counit(args, pre):
    x = _element(args, pre, args.expr)
    e = pre.counit(x)
    _emit(args, str(e), {"value": str(e)})


def cmd_commutator(args, pre):
    c = commutator(_element(args, pre, args.x), _element(args, pre, args.y))
    _emit(args, str(c), c.to_json())


def cmd_central(args, pre):
    x = _element(args, pre, args.expr)
    central, witness = is_central(x)
    if central:
        _emit(args, "central", {"central": True})
    else:
        g, comm = witness
        _emit(args, f"not central: [x, {g}] = {comm}",
              {"central": False, "witness": {"generator": g, "commutator": comm.to_json()}})


def cmd_basis(args, pre):
    words = enumerate_basis(pre.alg, args.k, args.bound)
    texts = [pre.alg.word_text(w) for w in words]
    _emit(args, "\n".join(texts), {"degree": args.k, "count": len(texts), "monomials": texts})


def cmd_show_presentation(args, pre):
    lines = pre.alg.dump()
    _emit(args, "\n".join(lines), {"algebra": pre.label, "rules": lines})


def cmd_verify(args, pre):
    rep = run_suite(pre, args.suite)
    _emit(args, rep.render_text(), rep.to_json())
    return 0 if rep.ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=PRESET_IDS, default="mat", help="algebra preset (default mat)")
    common.add_argument("--n", type=int, help="root-of-unity order for slqxi/uqxi")
    common.add_argument("--d", type=int, help="exact order of zeta, dividing n (default n)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="glpq", description="Two-parameter quantum groups: exact normal forms and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *positionals):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        for pos, kw in positionals:
            sp.add_argument(pos, **kw)
        sp.set_defaults(func=fn)
        return sp

    expr = ("expr", {"help": 'expression, or "-" to read stdin'})
    add("normalize", cmd_normalize, "PBW normal form", expr)
    add("comul", cmd_comul, "coproduct", expr)
    add("antipode", cmd_antipode, "antipode", expr)
    add("counit", cmd_counit, "counit", expr)
    add("commutator", cmd_commutator, "x*y - y*x", ("x", {}), ("y", {}))
    add("central", cmd_central, "test centrality against every generator", expr)
    sp = add("basis", cmd_basis, "normal monomials of a given degree", ("k", {"type": int}))
    sp.add_argument("--bound", type=int, help="exponent bound for invertible generators")
    add("show-presentation", cmd_show_presentation, "dump the rewrite rules")
    add("verify", cmd_verify, "run an identity suite", ("suite", {"choices": SUITES + ("all",)}))
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        pre = get_preset(args.algebra, args.n, args.d)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        code = args.func(args, pre)
    except (GlpqError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
