"""Command-line front end.

Every answer is printed as an exact decimal string.  The default output is
``key: value`` lines; ``--json`` emits one JSON object instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Union

from . import arrangements, enumeration, incidence, ring, schubert
from .textio import ParseError

Result = Union[str, Dict[str, str]]


@dataclass
class CommandResult:
    command: str
    result: Result
    provenance: str
    extra: Dict[str, str] = field(default_factory=dict)

    def as_dict(self):
        return {"command": self.command, "result": self.result,
                "provenance": self.provenance, **self.extra}

    def render_text(self) -> str:
        lines = [f"command: {self.command}"]
        if isinstance(self.result, dict):
            lines += [f"{k}: {v}" for k, v in self.result.items()]
        else:
            lines.append(f"result: {self.result}")
        lines += [f"{k}: {v}" for k, v in self.extra.items()]
        lines.append(f"provenance: {self.provenance}")
        return "\n".join(lines)


def _table_result(table: enumeration.CharNumberTable) -> Dict[str, str]:
    return {f"N({p},{table.D - p})": str(v) for p, v in table.entries.items()}


def parse_curves(text: str) -> List[enumeration.CurveSpec]:
    curves = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        deg, sep, cls = item.partition(":")
        if not sep:
            raise ValueError(f"curve {item!r} must be written degree:class")
        curves.append(enumeration.CurveSpec(int(deg), int(cls)))
    return curves


def _ints(text: str) -> List[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _read(path: str) -> str:
    return Path(path).read_text()


def cmd_count(args) -> CommandResult:
    if args.kind == "generic":
        value = enumeration.count_generic(args.k, args.n)
        prov = "(kn)! / (k! (n!)^k)"
    elif args.kind == "zero-coned":
        value = enumeration.count_0coned(args.k, args.n)
        prov = "(kn+n-k)! / ((n!)^(n+1) (k-n)! ((n-1)!)^(k-n))"
    elif args.naive:
        value = enumeration.naive_dconed_count(args.d, args.k, args.n)
        prov = "single configuration s_1=...=s_d=0 (undercount)"
    else:
        value = enumeration.count_dconed(args.d, args.k, args.n)
        prov = "Schubert-weighted sum over Gamma of multinomials, divided by k!"
    return CommandResult(args.invocation, str(value), prov)


def cmd_charnum(args) -> CommandResult:
    table = enumeration.char_number_table(args.family, args.k)
    if args.family.startswith("generic"):
        prov = "deg [M] (sum x)^p (sum y)^(2k-p), minus quadruple lines for k=4, divided by k!"
    elif args.family == "braid":
        prov = "N_4(8-p, p) by projective duality"
    else:
        prov = "pencil characteristic numbers"
    if args.p is None:
        return CommandResult(args.invocation, _table_result(table), prov)
    if not 0 <= args.p <= table.D:
        raise ValueError(f"p must lie in [0, {table.D}], got {args.p}")
    return CommandResult(args.invocation, str(table[args.p]), prov)


def cmd_zeuthen(args) -> CommandResult:
    table = enumeration.char_number_table(args.family, args.k)
    curves = parse_curves(args.curves)
    value = enumeration.zeuthen_transfer(table, args.points, curves)
    return CommandResult(args.invocation, str(value),
                         "expand mu^p prod(m_i mu + n_i nu), replace mu^j nu^(D-j) by N(j, D-j)")


def cmd_schubert(args) -> CommandResult:
    g = schubert.GrassmannianSpec(args.d, args.n)
    value = schubert.schubert_degree(g, _ints(args.s))
    return CommandResult(args.invocation, str(value),
                         "iterated vertical-strip Pieri rule, coefficient of the point class")


def cmd_tutte(args) -> CommandResult:
    arr = arrangements.parse_arrangement(_read(args.arrangement))
    lattice = arrangements.lattice_from_arrangement(arr)
    xs = [Fraction(t) for t in args.xs.split(",") if t.strip()]
    value = arrangements.tutte_eval(lattice, Fraction(args.q), xs)
    return CommandResult(args.invocation, str(value),
                         "sum over subsets B of q^(-rk B) prod x_j")


def cmd_dim(args) -> CommandResult:
    spec = incidence.parse_incidence_spec(_read(args.spec))
    result = {"virtual": str(incidence.virtual_dimension(spec))}
    prov = "n(k+l) - #incidences"
    if args.realization:
        real = incidence.parse_realization(_read(args.realization))
        result["jacobian_rank"] = str(incidence.jacobian_rank(spec, real))
        result["actual"] = str(incidence.moduli_dimension_estimate(spec, real))
        prov += "; actual = n(k+l) - rank of the incidence Jacobian (local, exact at smooth points)"
    return CommandResult(args.invocation, result, prov)


def cmd_class(args) -> CommandResult:
    r, cls = enumeration.incidence_class(args.k)
    prov = "prod_{i<j} (x_i + y_ij)(x_j + y_ij)"
    if args.coefficient is not None:
        return CommandResult(args.invocation, str(cls.coefficient(args.coefficient)), prov)
    return CommandResult(args.invocation, ring.format_polynomial(cls), prov,
                         {"terms": str(len(cls))})


def cmd_pappus(args) -> CommandResult:
    spec, real = incidence.pappus_realization()
    Path(args.spec_out).write_text(incidence.format_incidence_spec(spec))
    Path(args.realization_out).write_text(incidence.format_realization(real))
    return CommandResult(args.invocation,
                         {"spec": args.spec_out, "realization": args.realization_out},
                         "two-transversal Pappus configuration")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON object")

    parser = argparse.ArgumentParser(
        prog="arrcount",
        description="Enumerative geometry of hyperplane arrangements, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="degrees of moduli spaces")
    count_sub = count.add_subparsers(dest="kind", required=True)
    for name in ("generic", "zero-coned"):
        p = count_sub.add_parser(name, parents=[common])
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=cmd_count)
    p = count_sub.add_parser("d-coned", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--naive", action="store_true",
                   help="the single-configuration undercount, for comparison")
    p.set_defaults(func=cmd_count)

    families = ["generic3", "generic4", "braid", "pencil"]
    p = sub.add_parser("charnum", parents=[common], help="characteristic numbers")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--p", type=int, help="number of point conditions (omit for the table)")
    p.add_argument("--k", type=int, help="number of lines (pencil family)")
    p.set_defaults(func=cmd_charnum)

    p = sub.add_parser("zeuthen", parents=[common], help="tangency to curves of given degree and class")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--curves", default="", help='"degree:class,..."')
    p.set_defaults(func=cmd_zeuthen)

    schub = sub.add_parser("schubert", help="Schubert calculus on G(d,n)")
    schub_sub = schub.add_subparsers(dest="kind", required=True)
    p = schub_sub.add_parser("degree", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True, help='"s0,s1,...,s_{d+1}"')
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("tutte", parents=[common], help="multivariate Tutte polynomial")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--xs", required=True)
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("dim", parents=[common], help="virtual and actual moduli dimension")
    p.add_argument("--spec", required=True)
    p.add_argument("--realization")
    p.set_defaults(func=cmd_dim)

    cls = sub.add_parser("class", help="Chow classes")
    cls_sub = cls.add_subparsers(dest="kind", required=True)
    p = cls_sub.add_parser("incidence", parents=[common])
    p.add_argument("--k", type=int, required=True, choices=[3, 4])
    p.add_argument("--coefficient", help='monomial such as "x1*x2*x3*y12*y13*y23"')
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("pappus", parents=[common], help="write the built-in Pappus files")
    p.add_argument("--spec-out", required=True)
    p.add_argument("--realization-out", required=True)
    p.set_defaults(func=cmd_pappus)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.invocation = " ".join(a for a in argv if a != "--json")
    try:
        res = args.func(args)
    except (ParseError, ValueError, ArithmeticError, OSError) as exc:
        print(f"arrcount: error: {exc}", file=stderr)
        return 2
    if args.json:
        print(json.dumps(res.as_dict(), sort_keys=False), file=stdout)
    else:
        print(res.render_text(), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
