"""Command-line front end.

Exit codes: 0 success, 1 a counterexample was found, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .gamma import OutsideDomain, SingularDenominator, gamma_bruteforce, gamma_extended, gamma_operator, pi_extended, pi_operator
from .grassmannian import AmbientMismatch, NotTransversal, Subspace, enumerate_subspaces
from .linalg import Field
from .pairs import check_pair_laws, extract_pair, standard_imbedding
from .charts import Chart
from .relations import gamma_via_relations
from .suites import ALL_ORDER, RunConfig, SuiteError, render, run_suites
from .textio import ParseError, format_algebra, format_pair, format_subspace, parse_sections, parse_subspace
from .torsors import GroupContext, NotInTorsor, TorsorContext, group_table, is_cyclic

GAMMA_FORMS = {
    "extended": gamma_extended,
    "operator": gamma_operator,
    "bruteforce": gamma_bruteforce,
    "relations": gamma_via_relations,
}


class UsageError(ValueError):
    pass


def canonical_line(s: Subspace) -> str:
    """One-line serialization ``[r1; r2; ...]`` of the RREF basis."""
    return "[" + "; ".join(" ".join(s.field.format(v) for v in row) for row in s.basis) + "]"


def _json_subspace(s: Subspace) -> dict:
    return {"field": s.field.spec(), "ambient": s.n, "basis": [[str(v) for v in row] for row in s.basis]}


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_points(args, labels: tuple[str, ...]) -> list[Subspace]:
    if args.quintuple:
        sections = parse_sections(_read(args.quintuple))
        missing = [k for k in labels if k not in sections]
        if missing:
            raise UsageError(f"{args.quintuple}: missing section(s) {', '.join(missing)}")
        spaces = [sections[k] for k in labels]
    else:
        if len(args.files) != len(labels):
            raise UsageError(f"expected {len(labels)} files ({' '.join(labels)}) or --quintuple")
        spaces = []
        for path in args.files:
            try:
                spaces.append(parse_subspace(_read(path)))
            except ParseError as exc:
                raise ParseError(exc.line, f"{path}: {str(exc).split(': ', 1)[1]}") from None
    if len({(s.field, s.n) for s in spaces}) != 1:
        raise AmbientMismatch("inputs live in different spaces")
    return spaces


def _emit(args, text: str, doc) -> None:
    out = json.dumps(doc, indent=2, sort_keys=True) + "\n" if args.json else text
    if getattr(args, "output", None):
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)


def cmd_gamma(args) -> int:
    x, a, y, b, z = _load_points(args, ("x", "a", "y", "b", "z"))
    result = GAMMA_FORMS[args.form](x, a, y, b, z)
    _emit(args, format_subspace(result), _json_subspace(result))
    return 0


def cmd_pi(args) -> int:
    x, a, z = _load_points(args, ("x", "a", "z"))
    r = x.field(args.r)
    result = pi_operator(r, x, a, z) if args.form == "operator" else pi_extended(r, x, a, z)
    _emit(args, format_subspace(result), _json_subspace(result))
    return 0


def cmd_verify(args) -> int:
    cfg = RunConfig(
        command="verify",
        field=args.field,
        n=args.n,
        seed=args.seed,
        budget=args.budget,
        exhaustive=args.exhaustive,
        mutate=args.mutate,
        output_path=args.output,
    )
    if args.mutate and args.suite not in ("axioms", "all"):
        raise UsageError("--mutate applies to the axioms suite")
    results = run_suites(args.suite, cfg)
    text = render(results, cfg, as_json=args.json)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in results) else 1


def cmd_enumerate(args) -> int:
    spaces = enumerate_subspaces(args.field, args.n, args.dim)
    text = "".join(canonical_line(s) + "\n" for s in spaces)
    _emit(args, text, [_json_subspace(s) for s in spaces])
    return 0


def _standard_axes(field: Field, n: int) -> tuple[Subspace, Subspace, Subspace]:
    if n % 2:
        raise UsageError("default axes need even n; pass --a and --b")
    h = n // 2
    a = Subspace.coordinate(field, n, range(h))
    b = Subspace.coordinate(field, n, range(h, n))
    diag = Subspace.span(field, n, [[field.one if j in (i, i + h) else field.zero for j in range(n)] for i in range(h)])
    return a, b, diag


def cmd_group_table(args) -> int:
    if args.a or args.b:
        if not (args.a and args.b):
            raise UsageError("--a and --b go together")
        a, b = parse_subspace(_read(args.a)), parse_subspace(_read(args.b))
        unit = parse_subspace(_read(args.unit)) if args.unit else None
    else:
        a, b, unit = _standard_axes(args.field, args.n)
        if args.unit:
            unit = parse_subspace(_read(args.unit))
    ctx = TorsorContext(a, b)
    if unit is None:
        elems = ctx.elements()
        if not elems:
            raise UsageError("a and b have no common complement")
        unit = elems[0]
    elems, table = group_table(GroupContext(ctx, unit))
    cyclic = is_cyclic(table)
    lines = [f"order {len(elems)}"]
    lines += [f"{i} {canonical_line(s)}" for i, s in enumerate(elems)]
    lines.append("table")
    lines += [" ".join(str(v) for v in row) for row in table]
    lines.append(f"cyclic {'yes' if cyclic else 'no'}")
    doc = {"order": len(elems), "elements": [_json_subspace(s) for s in elems], "table": table, "cyclic": cyclic}
    _emit(args, "\n".join(lines) + "\n", doc)
    return 0


def cmd_pair(args) -> int:
    if args.plus or args.minus:
        if not (args.plus and args.minus):
            raise UsageError("--plus and --minus go together")
        o_plus, o_minus = parse_subspace(_read(args.plus)), parse_subspace(_read(args.minus))
        chart = Chart(o_plus, o_minus)
    else:
        k = args.k if args.k is not None else args.n // 2
        chart = Chart.standard(args.field, args.n - k, k)
    pair = extract_pair(chart.o_plus, chart.o_minus).constants()

    def triples(sign):
        dp, dm = pair.dims(sign)
        basis = lambda d: [tuple(int(i == j) for j in range(d)) for i in range(d)]  # noqa: E731
        for x in basis(dp):
            for y in basis(dm):
                for z in basis(dp):
                    for u in basis(dm):
                        for v in basis(dp):
                            yield x, y, z, u, v

    bad = check_pair_laws(pair, triples)
    ok = not (bad["+"] or bad["-"])
    text = f"# para-associative on basis elements: {'yes' if ok else 'no'}\n" + format_pair(pair)
    doc = {"dplus": pair.dplus, "dminus": pair.dminus, "para_associative": ok, "text": format_pair(pair)}
    _emit(args, text, doc)
    return 0 if ok else 1


_PAIR_NAME = re.compile(r"^(?:scalar-gf(\d+)|hom-(\d+)x(\d+)-gf(\d+))$")


def cmd_imbed(args) -> int:
    m = _PAIR_NAME.match(args.pair)
    if not m:
        raise UsageError("--pair must be scalar-gf<p> or hom-<e>x<f>-gf<p>")
    if m.group(1):
        field, e, f = Field(int(m.group(1))), 1, 1
    else:
        field, e, f = Field(int(m.group(4))), int(m.group(2)), int(m.group(3))
    im = standard_imbedding(field, e, f)
    dims = im.peirce_dims()
    lines = [f"# End(E+F) with dim E = {e}, dim F = {f}", f"# peirce dims A00 A01 A10 A11: {' '.join(map(str, dims))}"]
    text = "\n".join(lines) + "\n" + format_algebra(im.algebra)
    doc = {"e": e, "f": f, "peirce_dims": list(dims), "algebra": format_algebra(im.algebra)}
    _emit(args, text, doc)
    return 0


def _field_arg(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="assocgeom", description="Associative geometries on Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field=True):
        if field:
            p.add_argument("--field", type=_field_arg, default=Field(2), help="p=<prime> or q (default p=2)")
            p.add_argument("--n", type=int, default=3, help="ambient dimension (default 3)")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--output", help="write the report here instead of stdout")

    g = sub.add_parser("gamma", help="compute Gamma(x, a, y, b, z)")
    g.add_argument("files", nargs="*", help="subspace files for x a y b z")
    g.add_argument("--quintuple", help="one file with [x] [a] [y] [b] [z] sections")
    g.add_argument("--form", choices=sorted(GAMMA_FORMS), default="extended")
    common(g, field=False)
    g.set_defaults(func=cmd_gamma)

    p = sub.add_parser("pi", help="compute Pi_r(x, a, z)")
    p.add_argument("files", nargs="*", help="subspace files for x a z")
    p.add_argument("--quintuple", help="one file with [x] [a] [z] sections")
    p.add_argument("--r", required=True, help="the scalar r")
    p.add_argument("--form", choices=("extended", "operator"), default="extended")
    common(p, field=False)
    p.set_defaults(func=cmd_pi)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=ALL_ORDER + ("all",))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=200, help="sampled instances per identity")
    v.add_argument("--exhaustive", action="store_true", help="enumerate all instances (small finite cases)")
    v.add_argument("--mutate", action="store_true", help="self-test: corrupt the Gamma table before the axiom check")
    common(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list Gras(F^n), one subspace per line")
    e.add_argument("--dim", type=int, default=None)
    common(e)
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("group-table", help="multiplication table of U_ab")
    t.add_argument("--a", help="subspace file for a (default: first half coordinates)")
    t.add_argument("--b", help="subspace file for b (default: second half coordinates)")
    t.add_argument("--unit", help="subspace file for the unit (default: diagonal)")
    common(t)
    t.set_defaults(func=cmd_group_table)

    pr = sub.add_parser("pair", help="structure constants of the pair at a base point")
    pr.add_argument("--plus", help="subspace file for o+")
    pr.add_argument("--minus", help="subspace file for o-")
    pr.add_argument("--k", type=int, default=None, help="dim o+ for the standard base point")
    common(pr)
    pr.set_defaults(func=cmd_pair)

    im = sub.add_parser("imbed", help="standard imbedding End(E+F) of a Hom pair")
    im.add_argument("--pair", required=True, help="scalar-gf<p> or hom-<e>x<f>-gf<p>")
    common(im, field=False)
    im.set_defaults(func=cmd_imbed)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, SuiteError, AmbientMismatch, NotTransversal, NotInTorsor) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OutsideDomain as exc:
        print(f"error: quintuple outside the operator domain: {exc}", file=sys.stderr)
        return 2
    except SingularDenominator as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
