"""Command-line interface.

Exit codes: 0 success / check passed, 1 check failed or computation refused,
2 malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from fractions import Fraction

from . import algebra as alg
from .algfile import format_algebra, load_algebra
from .cone import normalize_variant, prec_order
from .errors import AlgebraFileError, MalformedAlgebraError, NotNilpotentError, PrecCycleError, RedZetaError
from .grading import certify_nice, check_mult_hypothesis, grading_lattice
from .oracle import enumerate_counts
from .ratfun import RationalFunction, display_factored, series
from .zeta import check_funeq, check_multiplicativity, check_reciprocity, reduced_zeta

OK, FAILED, INPUT_ERROR = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: error: {message}")


def _vec_str(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _combo(v, names):
    parts = []
    for x, n in zip(v, names):
        if x == 0:
            continue
        x = Fraction(x)
        mag = "" if abs(x) == 1 else f"{abs(x)}*"
        sign = "-" if x < 0 else "+"
        parts.append((sign, f"{mag}{n}"))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def _rf_json(R: RationalFunction):
    return {
        "numerator": [str(c) for c in R.num.coeffs],
        "denominator": [str(c) for c in R.den.coeffs],
        "display": display_factored(R),
    }


def _pair(names, p):
    return f"{names[p[0]]} {names[p[1]]}"


# --- subcommands ------------------------------------------------------------

def cmd_validate(args):
    L = load_algebra(args.file)
    rep = alg.validate(L)
    failures = [
        {"triple": [L.basis[t] for t in triple],
         "defect": {L.basis[l]: str(c) for l, c in defect.items()}}
        for triple, defect in rep.failures
    ]
    lines = [f"algebra: {L.name}", f"jacobi: {'ok' if rep.ok else 'FAILED'}"]
    for f, (triple, defect) in zip(failures, rep.failures):
        vec = [defect.get(k, 0) for k in range(L.dim)]
        lines.append(f"  ({', '.join(f['triple'])}): defect {_combo(vec, L.basis)}")
    return (OK if rep.ok else FAILED), lines, {"algebra": L.name, "ok": rep.ok, "failures": failures}


def cmd_info(args):
    L = load_algebra(args.file)
    simple = alg.is_simple(L)
    data = {"algebra": L.name, "dim": L.dim, "basis": list(L.basis), "simple": simple}
    lines = [f"algebra: {L.name}", f"dim: {L.dim}", f"basis: {' '.join(L.basis)}",
             f"simple: {'yes' if simple else 'no'}"]
    center = alg.center(L)
    data["center"] = [_combo(v, L.basis) for v in center]
    lines.append("center: " + (", ".join(data["center"]) if center else "0"))
    try:
        hp = alg.height_profile(L)
    except NotNilpotentError:
        data["nilpotent"] = False
        lines.append("nilpotent: no")
    else:
        data.update(nilpotent=True, nilpotency_class=hp.nilpotency_class,
                    heights={b: h for b, h in zip(L.basis, hp.heights)}, w=hp.w, u=hp.u)
        lines += [
            "nilpotent: yes",
            f"class: {hp.nilpotency_class}",
            "heights: " + " ".join(f"{b}={h}" for b, h in zip(L.basis, hp.heights)),
            f"w: {hp.w}",
            f"u: {hp.u}",
        ]
    if simple:
        try:
            order = prec_order(alg.simple_table(L), L.dim)
        except PrecCycleError as exc:
            data["order"] = None
            lines.append("order: cycle " + " -> ".join(L.basis[k] for k in exc.cycle))
        else:
            rel = sorted(order.relation, key=lambda p: (p[1], p[0]))
            data["order"] = [[L.basis[l], L.basis[i]] for l, i in rel]
            lines.append("order: " + (", ".join(f"{L.basis[l]} < {L.basis[i]}" for l, i in rel) or "empty"))
    return OK, lines, data


def cmd_grading(args):
    L = load_algebra(args.file)
    G = grading_lattice(L)
    cert = certify_nice(L, G)
    mh = check_mult_hypothesis(L, G)
    lines = [f"algebra: {L.name}", f"rank: {G.rank}", "generators:"]
    lines += [f"  {_vec_str(g)}" for g in G.generators] or ["  (none)"]
    lines.append("removable pairs:")
    pairs = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            wit = cert.witnesses.get((i, j))
            pairs.append({"pair": [L.basis[i], L.basis[j]], "removable": wit is not None,
                          "witness": list(wit) if wit is not None else None})
            lines.append(f"  {_pair(L.basis, (i, j))}: " + (f"yes {_vec_str(wit)}" if wit is not None else "no"))
    if cert.certified:
        lines.append("nice: certified")
    else:
        lines.append("nice: not certified; non-removable pairs: "
                     + ", ".join(f"({_pair(L.basis, p)})" for p in cert.non_removable))
    lines.append(f"mult hypothesis: {'holds' if mh.holds else 'fails'}")
    data = {
        "algebra": L.name,
        "rank": G.rank,
        "generators": [list(g) for g in G.generators],
        "pairs": pairs,
        "certified": cert.certified,
        "non_removable": [[L.basis[i], L.basis[j]] for i, j in cert.non_removable],
        "mult_hypothesis": mh.holds,
    }
    return (OK if cert.certified else FAILED), lines, data


def cmd_zeta(args):
    L = load_algebra(args.file)
    res = reduced_zeta(L, args.variant, force=args.force)
    lines = [display_factored(res.R)]
    data = {"algebra": L.name, "variant": res.variant, "certificate": res.certificate, **_rf_json(res.R)}
    if not res.certified:
        lines.append("UNCERTIFIED: niceness not certified; non-removable pairs: "
                     + ", ".join(f"({_pair(L.basis, p)})" for p in res.non_removable))
    if args.expand is not None:
        coeffs = series(res.R, args.expand)
        data["series"] = [str(c) for c in coeffs]
        lines.append("series: " + ", ".join(str(c) for c in coeffs))
    return OK, lines, data


def cmd_funeq(args):
    L = load_algebra(args.file)
    rep = check_funeq(L, args.variant)
    det = rep.detected
    lines = [f"algebra: {L.name}", f"variant: {rep.variant}",
             f"hypothesis: {'holds' if rep.hypothesis else 'fails'}" + (f" ({rep.note})" if rep.note else "")]
    if rep.w is not None:
        lines.append(f"w: {rep.w}  u: {rep.u}  class: {rep.nilpotency_class}")
    if rep.violations:
        lines.append("chain violations: " + ", ".join(f"{L.basis[l]} < {L.basis[i]}" for l, i in rep.violations))
    if rep.predicted is not None:
        lines.append(f"predicted: epsilon={rep.predicted[0]} b={rep.predicted[1]}")
    lines.append(f"detected: epsilon={det.epsilon} b={det.b}" if det.exists else "detected: none")
    if rep.matches is not None:
        lines.append(f"match: {'yes' if rep.matches else 'NO'}")
    data = {
        "algebra": L.name, "variant": rep.variant, "hypothesis": rep.hypothesis,
        "predicted": list(rep.predicted) if rep.predicted is not None else None,
        "detected": {"exists": det.exists, "epsilon": det.epsilon, "b": det.b},
        "match": rep.matches, "w": rep.w, "u": rep.u, "note": rep.note,
    }
    return (FAILED if rep.matches is False else OK), lines, data


def cmd_reciprocity(args):
    L = load_algebra(args.file)
    rep = check_reciprocity(L, args.variant, series_degree=args.series_degree)
    lines = [f"algebra: {L.name}", f"variant: {rep.variant}",
             f"interior witness: {_vec_str(rep.witness)}",
             f"closed: {display_factored(rep.closed)}",
             f"open: {display_factored(rep.open)}",
             f"reciprocity: {'holds' if rep.holds else 'FAILS'}"]
    if rep.series_ok is not None:
        lines.append(f"open-cone series vs enumeration to degree {rep.series_degree}: "
                     f"{'agree' if rep.series_ok else 'DISAGREE'}")
    ok = rep.holds and rep.series_ok is not False
    data = {"algebra": L.name, "variant": rep.variant, "holds": rep.holds,
            "witness": list(rep.witness), "closed": _rf_json(rep.closed), "open": _rf_json(rep.open),
            "series_degree": rep.series_degree, "series_ok": rep.series_ok}
    return (OK if ok else FAILED), lines, data


def cmd_mult(args):
    L, N = load_algebra(args.file1), load_algebra(args.file2)
    rep = check_multiplicativity(L, N, args.variant)
    lines = [f"algebras: {L.name} + {N.name}", f"variant: {rep.variant}"]
    if rep.hypothesis is not None:
        lines.append(f"grading hypothesis: {'holds' if rep.hypothesis else 'fails (outside theorem hypotheses)'}")
    lines += [f"direct sum: {display_factored(rep.direct)}",
              f"product: {display_factored(rep.product)}",
              f"multiplicative: {'yes' if rep.holds else 'NO'}"]
    data = {"algebras": [L.name, N.name], "variant": rep.variant, "hypothesis": rep.hypothesis,
            "holds": rep.holds, "direct": _rf_json(rep.direct), "product": _rf_json(rep.product)}
    return (OK if rep.holds else FAILED), lines, data


def cmd_oracle(args):
    L = load_algebra(args.file)
    res = reduced_zeta(L, args.variant, force=args.force)
    M = args.max_degree
    counts = enumerate_counts(res.cone, M)
    coeffs = series(res.R, M)
    agree = [Fraction(c) for c in counts] == coeffs
    lines = [f"algebra: {L.name}", f"variant: {res.variant}",
             "enumerated: " + ", ".join(map(str, counts)),
             "series: " + ", ".join(str(c) for c in coeffs),
             f"series check: {'agree' if agree else 'DISAGREE'}"]
    data = {"algebra": L.name, "variant": res.variant, "max_degree": M, "counts": counts,
            "series": [str(c) for c in coeffs], "agree": agree}
    return (OK if agree else FAILED), lines, data


def cmd_builtin(args):
    L = alg.builtin(args.name, args.param)
    text = format_algebra(L)
    return OK, text.rstrip("\n").split("\n"), {"algebra": L.name, "text": text}


# --- wiring -----------------------------------------------------------------

def _variant(s):
    try:
        return normalize_variant(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(s):
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = _Parser(prog="redzeta", description="Reduced zeta functions of Lie algebras with a nice simple basis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def file_cmd(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    file_cmd("validate", cmd_validate, "check the Jacobi identity")
    file_cmd("info", cmd_info, "center, heights, nilpotency class, order")
    file_cmd("grading", cmd_grading, "grading lattice, removable pairs, niceness certificate")
    sp = file_cmd("zeta", cmd_zeta, "reduced zeta function")
    sp.add_argument("--variant", type=_variant, required=True)
    sp.add_argument("--expand", type=_nonneg, metavar="M")
    sp.add_argument("--force", action="store_true", help="compute without a niceness certificate")
    sp = file_cmd("funeq", cmd_funeq, "predicted vs detected functional equation")
    sp.add_argument("--variant", type=_variant, required=True)
    sp = file_cmd("reciprocity", cmd_reciprocity, "Stanley reciprocity check")
    sp.add_argument("--variant", type=_variant, required=True)
    sp.add_argument("--series-degree", type=_nonneg, metavar="M")
    sp = sub.add_parser("mult", parents=[common], help="multiplicativity under direct sums")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--variant", type=_variant, required=True)
    sp.set_defaults(func=cmd_mult)
    sp = file_cmd("oracle", cmd_oracle, "brute-force lattice point counts vs series")
    sp.add_argument("--variant", type=_variant, required=True)
    sp.add_argument("--max-degree", type=_nonneg, required=True, metavar="M")
    sp.add_argument("--force", action="store_true")
    sp = sub.add_parser("builtin", parents=[common], help="print a catalog algebra as a file")
    sp.add_argument("name", choices=sorted(alg.BUILTINS))
    sp.add_argument("param", nargs="?", type=int)
    sp.set_defaults(func=cmd_builtin)
    return p


def run(argv) -> tuple[int, str, str]:
    """Execute one command; returns ``(exit_code, stdout, stderr)``."""
    parser = build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured):
            args = parser.parse_args(argv)
    except _Usage as exc:
        return INPUT_ERROR, "", f"{exc}\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), captured.getvalue(), ""
    try:
        code, lines, data = args.func(args)
    except (AlgebraFileError, MalformedAlgebraError, OSError) as exc:
        return INPUT_ERROR, "", f"error: {exc}\n"
    except ValueError as exc:
        return INPUT_ERROR, "", f"error: {exc}\n"
    except RedZetaError as exc:
        return FAILED, "", f"refused: {exc}\n"
    if args.json:
        data = {"command": args.command, "exit_code": code, **data}
        return code, json.dumps(data, indent=2, sort_keys=True) + "\n", ""
    return code, "\n".join(lines) + "\n", ""


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
