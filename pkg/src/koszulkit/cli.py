"""Command line front end.

Exit status: 0 on success, 1 when ``koszul`` finds the poset is not Koszul,
2 on malformed input or a failed validation.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .bar import build_differential, enumerate_chains, format_chain, homology_witnesses, module_tor, tor_table
from .builder import run_script
from .errors import KoszulkitError, NotGradedError
from .families import generate, parse_generator
from .io import dump_poset, load_poset, pretty_tsv, script_from_json, to_dot, tor_tsv
from .linalg import Field, parse_field
from .poset import validate_graded
from .quadratic import koszul_complex_exact, phi_dimension_check


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _poset(path):
    return load_poset(_read(path))


def _coef(v, field: Field) -> str:
    if not field.is_rational and v > field.p // 2:
        v = v - field.p
    v = Fraction(v)
    sign = "-" if v < 0 else "+"
    v = abs(v)
    return sign if v == 1 else "%s%s*" % (sign, v)


def _cycle_text(cycle: dict, field: Field) -> str:
    return " ".join("%s%s" % (_coef(v, field), format_chain(c)) for c, v in cycle.items())


def cmd_validate(args, out):
    p = _poset(args.input)
    rep = validate_graded(p)
    if rep.graded:
        out.write("graded: true\n")
        return 0
    x, y, lengths = rep.witness
    out.write("graded: false\nwitness: interval [%s,%s] lengths %s\n" % (x, y, " ".join(map(str, lengths))))
    return 2


def cmd_tor(args, out):
    p = _poset(args.input)
    table = tor_table(p, args.field)
    if args.debug_matrices:
        os.makedirs(args.debug_matrices, exist_ok=True)
        for m in range(p.max_length + 1):
            for n in range(2, m + 1):
                if enumerate_chains(p, n, m).chains:
                    path = os.path.join(args.debug_matrices, "d_%d_%d.txt" % (n, m))
                    with open(path, "w", encoding="utf-8") as fh:
                        fh.write(build_differential(p, n, m).dump())
    text = tor_tsv(table, full=args.full)
    out.write(pretty_tsv(text) if args.pretty else text)
    return 0


def cmd_koszul(args, out):
    p = _poset(args.input)
    table = tor_table(p, args.field)
    out.write("koszul: %s (field %s)\n" % ("true" if table.koszul else "false", args.field))
    for n, m, d in table.witnesses:
        out.write("witness: n=%d m=%d dim=%d\n" % (n, m, d))
        if args.witness:
            for z in homology_witnesses(p, n, m, args.field):
                out.write("cycle n=%d m=%d: %s\n" % (n, m, _cycle_text(z, args.field)))
    return 0 if table.koszul else 1


def cmd_shriek(args, out):
    p = _poset(args.input)
    rep = phi_dimension_check(p, args.field)
    lines = ["n\tdim_shriek\tdim_tor_diag"]
    lines += ["%d\t%d\t%d" % pair for pair in rep.pairs]
    lines.append("agree\t%s" % str(rep.agree).lower())
    if args.koszul_complex:
        kc = koszul_complex_exact(p, args.field)
        lines.append("koszul_complex_exact\t%s" % str(kc.exact).lower())
        if kc.failure is not None:
            n, q = kc.failure
            lines.append("failure\tn=%d\tq=%d\tdim=%d" % (n, q, kc.homology[kc.failure]))
    text = "\n".join(lines) + "\n"
    out.write(pretty_tsv(text) if args.pretty else text)
    return 0


def cmd_module_tor(args, out):
    p = _poset(args.input)
    gens = [g.strip() for g in args.gens.split(",") if g.strip()]
    L = p.max_length
    lines = ["n\tm\tdim"]
    for n in range(L):
        for m in range(n + 1, L + 1):
            d = module_tor(p, args.target, gens, n, m, args.field)
            if d or args.full:
                lines.append("%d\t%d\t%d" % (n, m, d))
    text = "\n".join(lines) + "\n"
    out.write(pretty_tsv(text) if args.pretty else text)
    return 0


def cmd_build(args, out):
    script = script_from_json(_read(args.script))
    log = open(args.log, "w", encoding="utf-8") if args.log else sys.stderr
    try:
        try:
            result = run_script(script, args.field)
        except KoszulkitError as exc:
            for line in getattr(exc, "log", []):
                log.write(line + "\n")
            raise
        for line in result.log:
            log.write(line + "\n")
    finally:
        if args.log:
            log.close()
    out.write(dump_poset(result.poset))
    return 0


def cmd_gen(args, out):
    name, params = parse_generator(args.spec)
    out.write(dump_poset(generate(name, *params)))
    return 0


def cmd_dot(args, out):
    out.write(to_dot(_poset(args.input)))
    return 0


def _field(text):
    try:
        return parse_field(text)
    except KoszulkitError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="koszulkit", description="Koszulity of incidence rings of finite graded posets.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("input", help="poset JSON file, or - for standard input")
        return sp

    def with_field(sp):
        sp.add_argument("--field", type=_field, default=parse_field("q"), help="q (default) or fp:<prime>")
        return sp

    sp = with_input("validate", "check that the poset is well formed and graded")
    sp.set_defaults(func=cmd_validate)

    sp = with_field(with_input("tor", "bigraded Tor table as TSV"))
    sp.add_argument("--full", action="store_true", help="also print zero cells")
    sp.add_argument("--pretty", action="store_true", help="align columns")
    sp.add_argument("--debug-matrices", metavar="DIR", help="write every differential as a triplet file")
    sp.set_defaults(func=cmd_tor)

    sp = with_field(with_input("koszul", "Koszul verdict with off-diagonal witnesses"))
    sp.add_argument("--witness", action="store_true", help="print representative cycles")
    sp.set_defaults(func=cmd_koszul)

    sp = with_field(with_input("shriek", "quadratic dual dimensions against the Tor diagonal"))
    sp.add_argument("--koszul-complex", action="store_true", help="also test exactness of the Koszul complex")
    sp.add_argument("--pretty", action="store_true")
    sp.set_defaults(func=cmd_shriek)

    sp = with_field(with_input("module-tor", "Tor of the frontier module generated below a maximal element"))
    sp.add_argument("--target", required=True)
    sp.add_argument("--gens", required=True, help="comma separated generators")
    sp.add_argument("--full", action="store_true")
    sp.add_argument("--pretty", action="store_true")
    sp.set_defaults(func=cmd_module_tor)

    sp = with_field(sub.add_parser("build", help="run a build script and print the resulting poset"))
    sp.add_argument("script", help="build script JSON file, or -")
    sp.add_argument("--log", help="write the step log here instead of standard error")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("gen", help="print a generated poset as JSON")
    sp.add_argument("spec", help="e.g. tile, vdiamond:3, hdiamond:2,2, random:7,10,0.5, tiling:0,0;1,1")
    sp.set_defaults(func=cmd_gen)

    sp = with_input("dot", "Hasse diagram in DOT")
    sp.set_defaults(func=cmd_dot)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except NotGradedError as exc:
        x, y, lengths = exc.witness
        sys.stderr.write("error: %s\nwitness: interval [%s,%s] lengths %s\n" % (
            exc, x, y, " ".join(map(str, lengths))))
        return 2
    except (KoszulkitError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
