"""Command-line front end.

Exit status: 0 when every requested check passes (or the command
succeeds), 1 when a check fails, 2 on usage, file or scope errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path
from typing import Callable

from . import algebra, codesets, constructions, search
from .codesets import Code
from .errors import IdCodesError, ScopeError
from .formats import parse_code_file, write_code_file
from .hamming import DEFAULT_VERTEX_CAP, Radices

CHECKS = ("identifying", "dominating", "separating", "group", "linear", "sld", "selfid", "two-dir", "mindist2")
DEFAULT_CHECKS = ("identifying", "dominating", "separating", "group")


def _fmt_jset(code: Code, v) -> str:
    return str(codesets.j_set(code, v))


def _check_dominating(code: Code) -> str | None:
    v = codesets.undominated_vertex(code)
    return None if v is None else f"J({v}) is empty"


def _check_separating(code: Code) -> str | None:
    pair = codesets.unseparated_pair(code)
    if pair is None:
        return None
    u, v = pair
    return f"J({u}) = J({v}) = {_fmt_jset(code, u)}"


def _check_identifying(code: Code) -> str | None:
    return _check_dominating(code) or _check_separating(code)


def _closure_witness(code: Code) -> str | None:
    bad = algebra.closure_violation(code)
    if bad is None:
        return None
    a, b, s = bad
    if not code.has_index(0):
        return f"identity {s} not in code"
    return f"{a}+{b}={s} not in code"


def _check_linear(code: Code) -> str | None:
    if algebra.is_linear_code(code):
        return None
    return _closure_witness(code)


def _check_sld(code: Code) -> str | None:
    pair = codesets.sld_violation(code)
    if pair is None:
        return None
    x, y = pair
    return f"x={x} y={y}: J(x)={_fmt_jset(code, x)} is contained in J(y)={_fmt_jset(code, y)}"


def _jset_failure(jset) -> str:
    return f"|J({jset.owner})|={len(jset)}, J={jset}"


def _check_selfid(code: Code) -> str | None:
    bad = codesets.selfid_violation(code)
    if bad is None:
        return None
    if len(bad) >= 3:
        return f"J({bad.owner})={bad} has no pair at distance 2"
    return _jset_failure(bad)


def _check_two_dir(code: Code) -> str | None:
    bad = codesets.two_direction_violation(code)
    return None if bad is None else _jset_failure(bad)


def _check_mindist2(code: Code) -> str | None:
    bad = codesets.mindist2_violation(code)
    if bad is None:
        return None
    if code.has_index(bad.owner.index):
        return f"codeword {bad.owner} has codeword neighbours, J={bad}"
    return _jset_failure(bad)


CHECK_FUNCS: dict[str, Callable[[Code], str | None]] = {
    "identifying": _check_identifying,
    "dominating": _check_dominating,
    "separating": _check_separating,
    "group": _closure_witness,
    "linear": _check_linear,
    "sld": _check_sld,
    "selfid": _check_selfid,
    "two-dir": _check_two_dir,
    "mindist2": _check_mindist2,
}


def _read_code(path: str, cap: int) -> Code:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IdCodesError(f"cannot read {path}: {exc.strerror}") from None
    return parse_code_file(text, cap=cap)


def _emit_code(code: Code, out: str | None) -> None:
    text = write_code_file(code)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _split_checks(text: str) -> list[str]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise IdCodesError(f"unknown checks {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    return names


def cmd_verify(args) -> int:
    code = _read_code(args.file, args.cap)
    checks = _split_checks(args.checks) if args.checks else list(DEFAULT_CHECKS)
    print(f"code: {len(code)} codewords over radices {code.radices}")
    status = 0
    for name in checks:
        try:
            witness = CHECK_FUNCS[name](code)
        except ScopeError as exc:
            print(f"{name}: ERROR {exc}")
            status = 2
            continue
        if witness is None:
            print(f"{name}: PASS")
        else:
            print(f"{name}: FAIL {witness}")
            status = max(status, 1)
    return status


def cmd_construct(args) -> int:
    if args.kind == "sum":
        if args.m is None or args.n is None:
            raise IdCodesError("construct sum needs --m and --n")
        code = constructions.sum_code(args.m, args.n)
    else:
        if not args.input:
            raise IdCodesError("construct extend needs --in FILE")
        code = constructions.direct_sum_extend(_read_code(args.input, args.cap))
    _emit_code(code, args.out)
    return 0


def cmd_search(args) -> int:
    if args.target == "lid":
        if args.p is None or args.n is None:
            raise IdCodesError("search lid needs --p and --n")
        cap = args.cap or algebra.DEFAULT_SUBGROUP_CAP
        report = search.min_linear_identifying_code(args.p, args.n, cap=cap)
        print(f"target: lid\np: {args.p}\nn: {args.n}")
    else:
        if not args.radices:
            raise IdCodesError(f"search {args.target} needs --radices")
        r = Radices.parse(args.radices)
        if args.target == "id":
            cap = args.cap or search.DEFAULT_EXHAUSTIVE_CAP
            report = search.min_identifying_code(r, cap=cap, symmetry=not args.no_symmetry)
        else:
            cap = args.cap or algebra.DEFAULT_SUBGROUP_CAP
            report = search.min_group_identifying_code(r, cap=cap)
        print(f"target: {args.target}\nradices: {r}")
    if report.optimum is None:
        print("optimum: none (no code of this kind exists)")
        print(f"explored: {report.explored}")
        return 1
    print(f"optimum: {report.optimum}")
    if report.dimension is not None:
        print(f"kappa: {report.dimension}")
        if report.kappa_formula is not None:
            verdict = "agrees" if report.kappa_formula == report.dimension else "DISAGREES"
            print(f"kappa formula: {report.kappa_formula} ({verdict})")
    print(f"explored: {report.explored}")
    print(f"bound used: {report.bound_used}")
    if args.out:
        _emit_code(report.witness, args.out)
        print(f"witness written to {args.out}")
    else:
        print("witness:")
        _emit_code(report.witness, None)
    return 0


def _bound_row(name: str, fn: Callable[[], int]) -> str:
    try:
        return f"{name}: {fn()}"
    except ScopeError as exc:
        return f"{name}: N/A ({exc})"


def _radices_bounds(r: Radices) -> list[str]:
    rows = [f"radices: {r}"]
    rows.append(_bound_row("id lower bound (mu=1, nu=1)", lambda: constructions.id_lower_bound(r)))

    def generic_group():
        constructions.gid_lower_bound(r)  # scope check only
        return constructions.generic_id_lower_bound(r.order, r.degree, 3, 1)

    rows.append(_bound_row("generic group lower bound (mu=3, nu=1)", generic_group))
    rows.append(_bound_row("gid lower bound", lambda: constructions.gid_lower_bound(r)))

    def upper():
        if not r.is_uniform:
            raise ScopeError("radices non-uniform")
        return constructions.gid_bounds(r.dims[0], r.n)[1]

    rows.append(_bound_row("gid upper bound (sum code)", upper))
    return rows


def _kappa_bounds(n: int, p: int) -> list[str]:
    if not algebra.is_prime(p):
        raise IdCodesError(f"{p} is not prime")
    rows = [f"n: {n}", f"p: {p}"]
    rows.append(_bound_row("kappa", lambda: constructions.kappa(n, p)))
    rows.append(_bound_row("kappa lower bound", lambda: constructions.kappa_lower_bound(n, p)))
    rows.append(_bound_row("lid size p^kappa", lambda: p ** constructions.kappa(n, p)))

    def monotone():
        if n < 2:
            raise ScopeError("needs n >= 2")
        return "holds" if constructions.kappa_monotonicity_check(n, p) else "VIOLATED"

    rows.append(_bound_row("kappa(n+1) <= kappa(n) + 1", monotone))
    return rows


def cmd_bounds(args) -> int:
    if args.kappa:
        if args.n is None or args.p is None:
            raise IdCodesError("bounds --kappa needs --n and --p")
        rows = _kappa_bounds(args.n, args.p)
    elif args.radices:
        rows = _radices_bounds(Radices.parse(args.radices))
    elif args.m is not None and args.n is not None:
        rows = _radices_bounds(Radices.uniform(args.m, args.n))
    else:
        raise IdCodesError("bounds needs --radices, --m/--n, or --kappa --n/--p")
    print("\n".join(rows))
    return 0


def cmd_syndrome(args) -> int:
    try:
        text = Path(args.matrix).read_text(encoding="utf-8")
    except OSError as exc:
        raise IdCodesError(f"cannot read {args.matrix}: {exc.strerror}") from None
    h = algebra.parse_matrix_text(text)
    if args.generator:
        h = algebra.generator_to_parity_check(h)
    try:
        vec = [int(x) for x in args.vertex.replace(",", " ").split()]
    except ValueError:
        raise IdCodesError(f"cannot parse vertex {args.vertex!r}") from None
    print(" ".join(str(x) for x in algebra.syndrome(h, vec)))
    return 0


def cmd_subgroups(args) -> int:
    r = Radices.parse(args.radices)
    subgroups = algebra.enumerate_subgroups(r, cap=args.cap or algebra.DEFAULT_SUBGROUP_CAP)
    print(f"radices: {r}")
    print(f"subgroups: {len(subgroups)}")
    for h in subgroups:
        gens = ", ".join(str(g) for g in h.generators())
        line = f"size {len(h)}: <{gens}>"
        if args.identifying:
            ident = codesets.is_identifying(h.code)
            proper = 1 < len(h) < r.order
            tag = "identifying" if ident else "not identifying"
            line += f"  {tag}" + ("  proper" if proper and ident else "")
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idcodes", description="Identifying codes in Hamming graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check properties of a code file")
    p.add_argument("file")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="vertex cap for the radices")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a code and write it as a code file")
    p.add_argument("kind", choices=("sum", "extend"))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--in", dest="input")
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exact minimum identifying / group / linear code")
    p.add_argument("target", choices=("id", "gid", "lid"))
    p.add_argument("--radices")
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--no-symmetry", action="store_true", help="do not fix vertex 0 (id only)")
    p.add_argument("--out")
    p.add_argument("--cap", type=int, help="override the enumeration cap")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="closed-form bounds")
    p.add_argument("--radices")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--kappa", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("syndrome", help="syndrome of a vector under a parity-check matrix file")
    p.add_argument("matrix")
    p.add_argument("--vertex", required=True, help="comma-separated coordinates")
    p.add_argument("--generator", action="store_true", help="treat the matrix file as a generator matrix")
    p.set_defaults(func=cmd_syndrome)

    p = sub.add_parser("subgroups", help="list all subgroups of Z_m1 x ... x Z_mn")
    p.add_argument("--radices", required=True)
    p.add_argument("--identifying", action="store_true", help="mark which subgroups are identifying")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_subgroups)
    return parser


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = _show_warning
        try:
            return args.func(args)
        except IdCodesError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2


if __name__ == "__main__":
    sys.exit(main())
