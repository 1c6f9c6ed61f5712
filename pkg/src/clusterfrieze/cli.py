"""Command-line interface: ``clusterfrieze <command> ...``.

Exit codes: 0 ok, 2 bad input, 3 internal error, 4 inconclusive
(a budget ran out before a definite answer).
"""

import argparse
import json
import sys

from . import belt as beltmod
from . import coxeter, frieze, morphisms
from .cartan import CartanError, as_cartan, classify
from .laurent import InexactDivision, LaurentError
from .seeds import (BudgetExceeded, DEFAULT_BUDGET, ExtendedMutationMatrix, Inconclusive, Seed,
                    SeedError, explore)

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_INCONCLUSIVE = 0, 2, 3, 4


class CLIError(Exception):
    """Bad command-line input; maps to exit code 2."""


# input helpers

def _json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError("%s is not valid JSON: %s" % (what, exc)) from None


def _int_list(text, what):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise CLIError("%s must be a comma-separated list of integers" % what) from None


def _window(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise CLIError("window must look like LO:HI") from None


def _read_json_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CLIError("cannot read %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise CLIError("%s is not valid JSON: %s" % (path, exc)) from None


def resolve_cartan(args):
    """Exactly one of --type and --cartan."""
    if bool(args.type) == bool(getattr(args, "cartan", None)):
        raise CLIError("give exactly one of --type and --cartan")
    if args.type:
        return as_cartan(args.type)
    return as_cartan(_json_arg(args.cartan, "--cartan"))


def resolve_coeffs(args, A):
    kind = args.coeffs
    r = A.r
    if kind == "trivial":
        P = []
    elif kind == "principal":
        P = [[int(i == j) for j in range(r)] for i in range(r)]
    elif kind == "bfz":
        P = beltmod.build_UA(A)
    else:
        if not args.P:
            raise CLIError("--coeffs matrix needs --P")
        P = _json_arg(args.P, "--P")
    if getattr(args, "P", None) and kind != "matrix":
        raise CLIError("--P only goes with --coeffs matrix")
    return P


def resolve_seed(args):
    """A seed from --seed FILE, or --type/--cartan with --coeffs, or --B."""
    sources = [bool(getattr(args, "seed", None)), bool(args.type or getattr(args, "cartan", None)),
               bool(getattr(args, "B", None))]
    if sum(sources) != 1:
        raise CLIError("give exactly one of --seed, --type/--cartan, --B")
    if args.seed:
        try:
            return Seed.from_json(_read_json_file(args.seed))
        except (KeyError, TypeError) as exc:
            raise CLIError("malformed seed file: %s" % exc) from None
    if args.B:
        rows = _json_arg(args.B, "--B")
        r = args.rank if args.rank is not None else len(rows[0])
        return Seed.root(ExtendedMutationMatrix(rows, r))
    A = resolve_cartan(args)
    if args.coeffs == "bfz":
        return frieze.bfz_seed(A)
    if args.coeffs == "principal":
        return frieze.principal_seed(A)
    return beltmod.belt_root(A, resolve_coeffs(args, A))


# output helpers

def emit(obj, fmt="json", out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump(obj, out, indent=2, sort_keys=False)
        out.write("\n")
    else:
        out.write(obj if obj.endswith("\n") else obj + "\n")


def tsv_table(rows, m_lo):
    lines = ["i\\m\t" + "\t".join(str(m_lo + k) for k in range(len(rows[0]) if rows else 0))]
    for i, row in enumerate(rows, 1):
        lines.append("%d\t" % i + "\t".join(str(x) for x in row))
    return "\n".join(lines)


def ascii_staggered(rows, m_lo=0):
    """Row i at vertical offset i, column m at horizontal offset 2m + i.

    Entries of consecutive rows interleave, so every diamond
    (i, m), (i+1, m), (i, m+1) and the entry below sits on a Coxeter
    diamond of the pattern.
    """
    cells = [[str(x) for x in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    unit = width // 2 + 1
    lines = []
    for i, row in enumerate(cells, 1):
        chars = {}
        for k, text in enumerate(row):
            start = (2 * k + i) * unit
            for n, ch in enumerate(text.rjust(width)):
                chars[start + n] = ch
        length = max(chars) + 1 if chars else 0
        lines.append("".join(chars.get(n, " ") for n in range(length)).rstrip())
    return "\n".join(lines)


def _table(rows, m_lo, fmt, extra=None):
    if fmt == "tsv":
        return tsv_table(rows, m_lo)
    if fmt == "ascii":
        return ascii_staggered(rows, m_lo)
    obj = {"m_lo": m_lo, "rows": [[str(x) if not isinstance(x, int) else x for x in row] for row in rows]}
    obj.update(extra or {})
    return obj


# commands

def cmd_mutate(args):
    seed = resolve_seed(args)
    word = _int_list(args.word, "--word") if args.word else []
    if any(not 1 <= k <= seed.r for k in word):
        raise CLIError("word entries must lie in [1, %d]" % seed.r)
    out = seed.mutate_word(word)
    data = out.to_json()
    data["cluster_strings"] = [str(x) for x in out.cluster]
    if args.output:
        with open(args.output, "w") as fh:
            emit(data, "json", fh)
        return {"written": args.output, "word": word}
    return data


def cmd_explore(args):
    seed = resolve_seed(args)
    try:
        frag = explore(seed, budget=args.budget)
    except BudgetExceeded as exc:
        raise Inconclusive("exploration exceeded %d seeds (%d variables so far)"
                           % (args.budget, len(exc.fragment.variables))) from None
    return {"seeds": len(frag), "closed": frag.closed, "cluster_variables": len(frag.variables),
            "variables": [str(x) for x in frag.cluster_variables()]}


def cmd_belt(args):
    A = resolve_cartan(args)
    P = resolve_coeffs(args, A)
    m_lo, m_hi = _window(args.window) if args.window else (0, 2 * A.r + 2)
    table = beltmod.knit(A, P, m_lo, m_hi)
    rows = table.rows()
    if args.point:
        point = _int_list(args.point, "--point")
        rows = [[_as_int(x.evaluate(point)) for x in row] for row in rows]
    bad = table.check_relations()
    if bad:
        raise RuntimeError("belt exchange relations fail at %r" % bad[:3])
    return _table(rows, m_lo, args.format, {"type": classify(A), "relations_ok": True})


def _as_int(v):
    return int(v) if v.denominator == 1 else str(v)


def cmd_frieze_enumerate(args):
    A = resolve_cartan(args)
    P = resolve_coeffs(args, A)
    fp = _int_list(args.fp, "--fp") if args.fp else [1] * len(P)
    res = frieze.enumerate_friezes(A, P, fp, bound=args.bound)
    cd = coxeter.coxeter_orbit(A)
    if args.format == "ascii":
        return "\n\n".join("frieze %d: %r\n%s" % (n + 1, list(p.column(0)), ascii_staggered(p.rows(), p.m_lo))
                           for n, p in enumerate(res.patterns))
    if args.format == "tsv":
        return "\n".join(["index\tinitial\tF_invariant"] + [
            "%d\t%s\t%s" % (n + 1, ",".join(map(str, p.column(0))), p.is_F_invariant(cd))
            for n, p in enumerate(res.patterns)])
    return {"type": classify(A), "bound": args.bound, "count": len(res), "scanned": res.scanned,
            "max_entry": res.max_entry,
            "friezes": [{"initial": list(p.column(0)), "frozen": list(p.fp),
                         "F_invariant": p.is_F_invariant(cd)} for p in res.patterns]}


def cmd_frieze_check(args):
    A = resolve_cartan(args)
    P = resolve_coeffs(args, A)
    values = _int_list(args.values, "--values")
    if len(values) != A.r + len(P):
        raise CLIError("need %d values" % (A.r + len(P)))
    seed = beltmod.belt_root(A, P)
    try:
        frag = explore(seed, budget=args.budget)
    except BudgetExceeded:
        raise Inconclusive("exploration exceeded the budget") from None
    if min(values) <= 0:
        return {"values": values, "verdict": False, "witnesses": ["values must be positive"]}
    bad = frieze.check_frieze(frag.cluster_variables(), frieze.Frieze(values, A.r))
    return {"values": values, "verdict": not bad, "checked": len(frag.variables),
            "witnesses": ["%s = %s" % (x, v) for x, v in bad]}


def cmd_frieze_check_point(args):
    if not args.type:
        raise CLIError("check-point needs --type")
    A = as_cartan(args.type)
    report = frieze.frieze_point_check(args.regime, A, _int_list(args.point, "--point"))
    return report.to_json()


def cmd_frieze_reconstruct(args):
    A = resolve_cartan(args)
    res = frieze.bfz_reconstruct(A, _int_list(args.z, "--z"), _int_list(args.p, "--p"))
    if not res:
        return {"verdict": False, "rejection": repr(res)}
    return {"verdict": True, "z": res}


def cmd_coxeter_report(args):
    A = resolve_cartan(args)
    cd = coxeter.coxeter_orbit(A)
    try:
        bedard = coxeter.bedard_numbers(A)
    except coxeter.CoxeterError:
        bedard = None
    rows = []
    for i in range(1, A.r + 1):
        j = cd.star(i)
        rows.append({"i": i, "i_star": j, "h_i": cd.hc(i), "m_i": bedard[i - 1] if bedard else None,
                     "F": "(%d, m+%d)" % (j, cd.hc(j) + 1)})
    if args.format == "json":
        return {"type": classify(A), "h": cd.h, "h_i": list(cd.h_i), "rows": rows}
    sep = "\t" if args.format == "tsv" else "  "
    lines = [sep.join(["i", "i*", "h(i;c)", "m_i", "F(i,m)"])]
    for row in rows:
        lines.append(sep.join(str(row[k]) for k in ("i", "i_star", "h_i", "m_i", "F")))
    return "type %s, h = %d\n" % (classify(A), cd.h) + "\n".join(lines)


def hom_from_json(data):
    """Build a homomorphism from a spec file.

    ``kind`` is "quasi" (default: source, target, R, E, t0, t0bar),
    "freeze" or "delete" (seed, subset), or "universal" (B, P).
    """
    kind = data.get("kind", "quasi")
    if kind == "quasi":
        return morphisms.quasi_hom(morphisms.QuasiHomSpec.from_json(data))
    if kind in ("freeze", "delete"):
        seed = Seed.from_json(data["seed"])
        fn = morphisms.freezing_inclusion if kind == "freeze" else morphisms.delete
        return fn(seed, data.get("subset", []))
    if kind == "universal":
        return morphisms.universal_specialization(data["B"], data["P"]).hom
    raise CLIError("unknown morphism kind %r" % kind)


def _load_hom(args):
    try:
        return hom_from_json(_read_json_file(args.spec))
    except (KeyError, TypeError) as exc:
        raise CLIError("malformed spec: %s" % exc) from None


def cmd_morph_check(args):
    hom = _load_hom(args)
    verdict = morphisms.property_F_check(hom, args.budget)
    out = verdict.to_json()
    out["kind"] = hom.kind
    return out


def cmd_morph_universal(args):
    if args.type or args.cartan:
        A = resolve_cartan(args)
        B = beltmod.build_BA(A)
        P = resolve_coeffs(args, A)
    else:
        if not args.B:
            raise CLIError("give --type/--cartan or an exchange matrix --B")
        B = _json_arg(args.B, "--B")
        P = _json_arg(args.P, "--P") if args.P else []
    data = morphisms.universal_specialization(B, P)
    out = data.to_json()
    out["property_F"] = morphisms.property_F_check(data.hom).to_json()
    return out


def cmd_morph_pullback(args):
    hom = _load_hom(args)
    values = _int_list(args.values, "--values")
    if len(values) != hom.target.alphabet.n:
        raise CLIError("target frieze needs %d values" % hom.target.alphabet.n)
    verdict = morphisms.property_F_check(hom, args.budget)
    pulled = morphisms.pullback_frieze(hom, frieze.Frieze(values, hom.target.r), verdict, args.budget)
    return {"kind": hom.kind, "property_F": verdict.to_json(), "source_values": list(pulled.values)}


# parser

def _add_input(p, coeffs=True, seed=False):
    p.add_argument("--type", help="named Cartan type, e.g. A3, G2, A2xA1")
    p.add_argument("--cartan", help="explicit Cartan matrix as JSON")
    if coeffs:
        p.add_argument("--coeffs", choices=["trivial", "principal", "bfz", "matrix"], default="trivial")
        p.add_argument("--P", help="coefficient matrix as JSON (with --coeffs matrix)")
    if seed:
        p.add_argument("--seed", help="seed JSON file")
        p.add_argument("--B", help="extended mutation matrix as JSON")
        p.add_argument("--rank", type=int, help="number of mutable rows of --B")


def build_parser():
    parser = argparse.ArgumentParser(prog="clusterfrieze", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "tsv", "ascii"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate a seed along a word")
    _add_input(p, seed=True)
    p.add_argument("--word", default="", help="comma-separated 1-based directions")
    p.add_argument("-o", "--output", help="write the seed JSON here")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("explore", help="explore the seed pattern")
    _add_input(p, seed=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("belt", help="acyclic belt tables")
    bsub = p.add_subparsers(dest="belt_command", required=True)
    q = bsub.add_parser("dump", help="knitted cluster variables u(i, m)")
    _add_input(q)
    q.add_argument("--window", help="LO:HI range of m")
    q.add_argument("--point", help="evaluate at u1..ur,p1..pl")
    q.set_defaults(func=cmd_belt)

    p = sub.add_parser("frieze", help="friezes and frieze points")
    fsub = p.add_subparsers(dest="frieze_command", required=True)
    q = fsub.add_parser("enumerate")
    _add_input(q)
    q.add_argument("--fp", help="frozen values, comma-separated (default all 1)")
    q.add_argument("--bound", type=int, default=8)
    q.set_defaults(func=cmd_frieze_enumerate)
    q = fsub.add_parser("check")
    _add_input(q)
    q.add_argument("--values", required=True, help="u1..ur,p1..pl")
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    q.set_defaults(func=cmd_frieze_check)
    q = fsub.add_parser("check-point")
    q.add_argument("--type", help="named Cartan type (required)")
    q.add_argument("--regime", required=True, choices=sorted(frieze.REGIMES))
    q.add_argument("--point", required=True)
    q.set_defaults(func=cmd_frieze_check_point)
    q = fsub.add_parser("reconstruct-bfz")
    _add_input(q, coeffs=False)
    q.add_argument("--z", required=True, help="z_1..z_r")
    q.add_argument("--p", required=True, help="p_1..p_r")
    q.set_defaults(func=cmd_frieze_reconstruct)

    p = sub.add_parser("coxeter", help="Coxeter element data")
    csub = p.add_subparsers(dest="coxeter_command", required=True)
    q = csub.add_parser("report")
    _add_input(q, coeffs=False)
    q.set_defaults(func=cmd_coxeter_report)

    p = sub.add_parser("morph", help="homomorphisms with Property F")
    msub = p.add_subparsers(dest="morph_command", required=True)
    q = msub.add_parser("check-F")
    q.add_argument("--spec", required=True)
    q.add_argument("--budget", type=int, default=10000)
    q.set_defaults(func=cmd_morph_check)
    q = msub.add_parser("universal")
    _add_input(q)
    q.add_argument("--B", help="exchange matrix as JSON (instead of --type)")
    q.set_defaults(func=cmd_morph_universal)
    q = msub.add_parser("pullback")
    q.add_argument("--spec", required=True)
    q.add_argument("--values", required=True, help="target frieze values")
    q.add_argument("--budget", type=int, default=10000)
    q.set_defaults(func=cmd_morph_pullback)
    return parser


INPUT_ERRORS = (CLIError, CartanError, ValueError, KeyError, frieze.RegimeMismatch,
                morphisms.REViolation, morphisms.NotFiniteTarget, morphisms.NotFiniteType,
                SeedError, frieze.FriezeError, coxeter.NonFiniteType, coxeter.UnsupportedType)


def main(argv=None, out=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        result = args.func(args)
    except (Inconclusive, BudgetExceeded) as exc:
        print("inconclusive: %s" % exc, file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except InexactDivision as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    except INPUT_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (LaurentError, RuntimeError, AssertionError, morphisms.MorphismError) as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    emit(result, "json" if not isinstance(result, str) else "text", out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
