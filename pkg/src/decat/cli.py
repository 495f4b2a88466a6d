"""Command-line front end: ``decat <area> <command> ...``.

Output is JSON with sorted keys by default (integers as canonical strings
inside algebraic payloads), or a short human-readable form with ``--text``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import blm, bubbles, hochschild as hh
from . import currentalg as ca
from . import symfunc as sf
from . import tracecat as tc
from . import vpres
from .suites import SUITES, bound_names, run_suite


class CliError(Exception):
    pass


def _sym(text: str) -> sf.SymElement:
    """A symmetric function: JSON list of partitions, JSON terms, or a product word like 'e2 h1'."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return sf.to_schur(text)
    if isinstance(data, list) and all(isinstance(t, dict) for t in data):
        return sf.SymElement.from_json(data)
    if isinstance(data, list) and all(isinstance(t, list) for t in data):
        return sum((sf.schur(t) for t in data), sf.zero())
    if isinstance(data, list) and all(isinstance(t, int) for t in data):
        return sf.schur(data)
    raise CliError(f"cannot read a symmetric function from {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [int(x) for x in text.replace(",", " ").split()]
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise CliError(f"expected a list of integers, got {text!r}")
    return data


def _emit(args, payload, text: str):
    if args.text:
        print(text)
    else:
        print(json.dumps(payload, sort_keys=True))


# --- sym -------------------------------------------------------------------


def cmd_sym_mul(args):
    x = _sym(args.x)
    for y in args.y:
        x = sf.mul(x, _sym(y))
    _emit(args, x.to_json(), str(x))


def cmd_sym_straighten(args):
    r = sf.straighten(_int_list(args.seq))
    if r is None:
        _emit(args, {"zero": True}, "0")
    else:
        sign, lam = r
        _emit(args, {"zero": False, "sign": sign, "partition": list(lam)}, f"{'-' if sign < 0 else ''}s{list(lam)}")


def cmd_sym_wedge(args):
    x = sf.truncate(_sym(args.x), args.a)
    y = sf.truncate(_sym(args.y), args.b)
    z = sf.wedge(args.a, args.b, x, y)
    _emit(args, z.to_json(), str(z))


def cmd_sym_schur(args):
    x = sf.to_schur(args.word)
    _emit(args, x.to_json(), str(x))


# --- blm -------------------------------------------------------------------


def cmd_blm_mul(args):
    letters = tuple(l for w in args.words for l in blm.parse_letters(w))
    x = blm.word_element(letters, args.n)
    _emit(args, x.to_json(), repr(x))


def cmd_blm_qbinom(args):
    v = blm.gauss_binom(args.m, args.j)
    _emit(args, v.to_json(), repr(v))


# --- bubbles ---------------------------------------------------------------


def cmd_bubbles_series(args):
    series = bubbles.fake_bubble_series(args.n, args.deg)
    payload = {str(k): c.value.to_json() for k, c in enumerate(series)}
    _emit(args, payload, "\n".join(f"t^{k}: {c.value}" for k, c in enumerate(series)))


def cmd_bubbles_identity(args):
    lhs = bubbles.commutator_identity(args.m)
    ok = lhs == sf.p(args.m)
    _emit(args, {"m": args.m, "value": lhs.to_json(), "equals_power_sum": ok}, f"{lhs}  (= p_{args.m}: {ok})")


# --- current ---------------------------------------------------------------


def cmd_current_nf(args):
    x = ca.normal_form(args.word, args.n)
    _emit(args, x.to_json(), repr(x))


def cmd_current_mul(args):
    y = ca.normal_form(args.y, args.n)
    x = ca.normal_form(args.x, y.target)
    z = ca.mul(x, y)
    _emit(args, z.to_json(), repr(z))


def cmd_current_basis(args):
    words = ca.enumerate_basis(args.n, args.m, args.deg, args.extra)
    _emit(args, [w.to_json() for w in words], "\n".join(map(str, words)))


def cmd_current_phi(args):
    x = ca.apply_Phi(ca.normal_form(args.word, args.n))
    _emit(args, x.to_json(), repr(x))


# --- trace -----------------------------------------------------------------


def cmd_trace_compose(args):
    x = tc.parse_word(args.word, args.n)
    _emit(args, x.to_json(), repr(x))


def cmd_trace_dims(args):
    table = {str(d): tc.graded_dim(args.n, args.m, d, args.extra) for d in range(args.deg + 1)}
    _emit(args, {"n": args.n, "m": args.m, "extra": args.extra, "dims": table}, "\n".join(f"deg {2 * int(d)}: {v}" for d, v in table.items()))


def cmd_trace_tocurrent(args):
    x = tc.to_current(tc.parse_word(args.word, args.n))
    _emit(args, x.to_json(), repr(x))


TRACE_SUITES = ("zzz", "ja", "r7", "qqq", "k0")


def cmd_trace_verify(args):
    if args.suite:
        if args.word:
            raise CliError("give either a word or --suite, not both")
        args.bound, args.no_timing = [], False
        return cmd_verify(args)
    if not args.word:
        raise CliError("give a word such as 'E1[1] E2[0]' or --suite")
    x = tc.parse_word(args.word, args.n)
    back = tc.from_current(tc.to_current(x))
    result = {"word": args.word, "n": args.n, "roundtrip": back == x}
    # for products of E-factors only, compare with the wedge composition rule
    factors = args.word.split()
    if factors and all(f.startswith("E") for f in factors):
        acc = None
        for f in reversed(factors):
            k, body = f[1:].split("[", 1)
            lam = [int(v) for v in body.rstrip("]").split(",") if v.strip()]
            p = tc.plus_basis(int(k), lam, args.n if acc is None else acc.target)
            acc = p if acc is None else tc.compose_plus(p, acc)
        result["two_path"] = tc.from_plus(acc) == x
    ok = all(v for v in result.values() if isinstance(v, bool))
    result["passed"] = ok
    _emit(args, result, f"{'PASS' if ok else 'FAIL'} {result}")
    return 0 if ok else 1


# --- vpres -----------------------------------------------------------------


def cmd_vpres_nf(args):
    src = tuple(_int_list(args.source))
    if len(src) != 2:
        raise CliError("--source takes b,a")
    m = args.n + 2 * (src[1] - src[0])
    x = vpres.VElement.word(vpres.parse_word(args.word), src, args.n, m)
    y = vpres.normal_form(x, args.strategy)
    _emit(args, y.to_json(), repr(y))


def cmd_vpres_dims(args):
    forms = vpres.enumerate_forms(args.n, args.a, args.b, args.delta, args.deg)
    basis = vpres.enumerate_Bplus(args.n, args.a, args.b, args.delta, args.deg)
    payload = {
        "normal_forms": {str(k): v for k, v in forms.items()},
        "basis": {str(k): v for k, v in basis.items()},
        "match": forms == basis,
    }
    _emit(args, payload, f"normal forms {forms}\nbasis        {basis}\nmatch: {forms == basis}")
    return 0 if forms == basis else 1


# --- hh --------------------------------------------------------------------


def cmd_hh_compute(args):
    with open(args.input) as fh:
        C = hh.load_category(fh.read())
    groups = hh.hh(C, args.maxdeg, args.strategy)
    _emit(args, hh.homology_json(groups), "\n".join(f"HH_{n} = {g}" for n, g in enumerate(groups)))


# --- suites ----------------------------------------------------------------


def _parse_bounds(pairs: list[str]) -> dict:
    bounds = {}
    for item in pairs:
        if "=" not in item:
            raise CliError(f"malformed bound {item!r}; use key=value")
        k, v = item.split("=", 1)
        try:
            bounds[k.strip()] = int(v)
        except ValueError:
            raise CliError(f"bound {k} must be an integer, got {v!r}") from None
    return bounds


def cmd_verify(args):
    if args.suite not in SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}")
    report = run_suite(args.suite, seed=args.seed, **_parse_bounds(args.bound))
    print(report.text() if args.text else report.dumps(timing=not args.no_timing))
    return 0 if report.passed else 1


def cmd_suites(args):
    payload = {name: bound_names(name) for name in sorted(SUITES)}
    _emit(args, payload, "\n".join(f"{k}: {', '.join(v)}" for k, v in payload.items()))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--text", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--json", dest="text", action="store_false", help="JSON output (default)")

    parser = argparse.ArgumentParser(prog="decat", description="Exact computations in the trace of categorified sl2.")
    areas = parser.add_subparsers(dest="area", required=True)

    def group(name, help_):
        sub = areas.add_parser(name, help=help_)
        return sub.add_subparsers(dest="command", required=True)

    def command(grp, name, fn, help_):
        p = grp.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    g = group("sym", "symmetric functions in the Schur basis")
    p = command(g, "mul", cmd_sym_mul, "multiply symmetric functions")
    p.add_argument("x")
    p.add_argument("y", nargs="+")
    p = command(g, "straighten", cmd_sym_straighten, "straighten s_m for an integer sequence")
    p.add_argument("seq")
    p = command(g, "wedge", cmd_sym_wedge, "wedge product Sym_a x Sym_b -> Sym_(a+b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("x")
    p.add_argument("y")
    p = command(g, "schur", cmd_sym_schur, "expand a product of e/h/p/e(t,j) factors")
    p.add_argument("word")

    g = group("blm", "the q-deformed idempotented form")
    p = command(g, "mul", cmd_blm_mul, "canonical expansion of a product of divided powers")
    p.add_argument("words", nargs="+")
    p.add_argument("--n", type=int, required=True)
    p = command(g, "qbinom", cmd_blm_qbinom, "Gaussian binomial [m choose j]")
    p.add_argument("m", type=int)
    p.add_argument("j", type=int)

    g = group("bubbles", "bubbles and the fake-bubble series")
    p = command(g, "series", cmd_bubbles_series, "terms of the inverse series up to degree 2*deg")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--deg", type=int, default=5)
    p = command(g, "identity", cmd_bubbles_identity, "sum (-1)^(m-l) l h_l e_(m-l)")
    p.add_argument("--m", type=int, required=True)

    g = group("current", "integral current algebra")
    p = command(g, "nf", cmd_current_nf, "Garland normal form of a word")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p = command(g, "mul", cmd_current_mul, "product x * y with y acting first on 1_n")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--n", type=int, required=True)
    p = command(g, "basis", cmd_current_basis, "Garland basis words from 1_n to 1_m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--extra", type=int, default=0)
    p = command(g, "phi", cmd_current_phi, "apply the automorphism exchanging E and F")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)

    g = group("trace", "the trace category")
    p = command(g, "compose", cmd_trace_compose, "evaluate a product such as 'E1[2] F1[]'")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p = command(g, "dims", cmd_trace_dims, "graded dimensions of a hom space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--extra", type=int, default=0)
    p = command(g, "tocurrent", cmd_trace_tocurrent, "transport a product to the current algebra")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p = command(g, "verify", cmd_trace_verify, "round-trip and two-path checks for a product, or a trace suite")
    p.add_argument("word", nargs="?")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--suite", choices=TRACE_SUITES)
    p.add_argument("--seed", type=int, default=0)

    g = group("vpres", "the generators-and-relations presentation")
    p = command(g, "nf", cmd_vpres_nf, "normal form of a word such as 'u0 t1'")
    p.add_argument("word")
    p.add_argument("--source", required=True, help="source object b,a")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", choices=["leftmost", "rightmost"], default="leftmost")
    p = command(g, "dims", cmd_vpres_dims, "normal-form counts against the basis, per degree")
    for name in ("n", "a", "b", "delta", "deg"):
        p.add_argument(f"--{name}", type=int, required=True)

    g = group("hh", "Hochschild-Mitchell homology")
    p = command(g, "compute", cmd_hh_compute, "homology of a finite category given as JSON")
    p.add_argument("--input", required=True)
    p.add_argument("--maxdeg", type=int, default=hh.DEFAULT_MAXDEG)
    p.add_argument("--strategy", choices=["min", "first"], default="min")

    for name in ("verify", "run-suite"):
        p = areas.add_parser(name, parents=[common], help="run a named verification suite")
        p.add_argument("suite")
        p.add_argument("--bound", action="append", default=[], metavar="KEY=VALUE")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--no-timing", action="store_true", help="omit wall-clock time so output is byte-identical")
        p.set_defaults(func=cmd_verify)
    p = areas.add_parser("suites", parents=[common], help="list suites and their bounds")
    p.set_defaults(func=cmd_suites)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (CliError, ValueError, KeyError, ArithmeticError, OSError, hh.SizeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
