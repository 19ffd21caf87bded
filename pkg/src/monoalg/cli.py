"""Command line interface: problem files in, JSON or text reports out.

A problem file is a JSON object with "rank", "semigroup_generators",
"ideal_generators" and optionally "bound".  Every subcommand prints a
report whose JSON form is deterministic byte for byte for identical
inputs.  Exit codes: 0 success, 1 input error, 2 precondition error,
3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import derivations as dv
from . import ideal as idl
from . import oracle as orc
from . import quotient as qt
from . import semigroup as sg

DEFAULT_BOUND = 8
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_INTERNAL = 3


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def frac_str(x) -> str:
    f = Fraction(x)
    return "%d/%d" % (f.numerator, f.denominator)


def matrix_json(m):
    return [[frac_str(x) for x in row] for row in m]


def poly_matrix_json(m):
    return [[[frac_str(c) for c in entry] for entry in row] for row in m]


def load_problem(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise InputError(str(e))
    try:
        data = json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as e:
        raise InputError(
            "JSON parse error at line %d column %d: %s"
            % (e.lineno, e.colno, e.msg)
        )
    if not isinstance(data, dict):
        raise InputError("problem file must be a JSON object")
    try:
        rank = int(data["rank"])
        sgens = [tuple(int(x) for x in v) for v in data["semigroup_generators"]]
        igens = [tuple(int(x) for x in v) for v in data.get("ideal_generators", [])]
    except (KeyError, TypeError, ValueError) as e:
        raise InputError("malformed problem file: %s" % e)
    if not sgens:
        raise InputError("semigroup generator list is empty")
    if any(len(v) != rank for v in sgens + igens):
        raise InputError("vector length differs from rank")
    bound = data.get("bound")
    digest = hashlib.sha256(raw).hexdigest()
    return rank, sgens, igens, bound, digest


def build_from_problem(rank, sgens, igens):
    try:
        S = sg.build_semigroup(rank, sgens)
    except sg.SemigroupError as e:
        raise PreconditionError(str(e))
    try:
        I = idl.build_ideal(S, igens)
    except ValueError as e:
        raise PreconditionError(str(e))
    return S, I


def max_dim() -> int:
    return int(os.environ.get("MONOALG_MAX_DIM", "512"))


def check_dim(n: int):
    cap = max_dim()
    if n > cap:
        raise PreconditionError(
            "complement size %d exceeds MONOALG_MAX_DIM=%d" % (n, cap)
        )


def base_report(command, digest, args) -> dict:
    rep = {"command": command, "input_sha256": digest, "warnings": []}
    if getattr(args, "seed", None) is not None:
        rep["seed"] = args.seed
    return rep


def cmd_analyze(args) -> dict:
    rank, sgens, igens, _, digest = load_problem(args.file)
    report = base_report("analyze", digest, args)
    S, I = build_from_problem(rank, sgens, igens)
    cofinite, cert = idl.is_cofinite(I)
    result = {
        "rank": rank,
        "pointed": True,
        "saturated": True,
        "minimally_embedded": True,
        "simplicial": S.is_simplicial(),
        "first_octant": S.is_first_octant(),
        "dual_rays": [list(r) for r in S.dual_rays],
        "ray_generators": [list(r) for r in S.ray_generators],
        "hilbert_basis": [list(h) for h in S.hilbert_basis],
        "ideal_generators_minimal": [list(a) for a in I.generators],
        "full": idl.is_full(I),
        "cofinite": cofinite,
    }
    if cofinite:
        result["cofiniteness_certificate"] = [
            {"ray": list(mu), "k": k} for mu, k in cert.multiples
        ]
        comp = idl.complement(I)
        check_dim(len(comp))
        result["complement_size"] = len(comp)
        result["complement"] = [list(m) for m in comp]
    else:
        result["failing_ray"] = list(cert.failing_ray)
    report["result"] = result
    return report


def cmd_roots(args) -> dict:
    rank, sgens, igens, file_bound, digest = load_problem(args.file)
    bound = args.bound if args.bound is not None else (file_bound or DEFAULT_BOUND)
    report = base_report("roots", digest, args)
    S, I = build_from_problem(rank, sgens, igens)
    rs = dv.roots_of_ideal(S, I, bound)
    all_rs = dv.demazure_roots(S, bound)
    report["result"] = {
        "bound": bound,
        "groups": [
            {
                "dual_ray": list(rho),
                "roots_of_semigroup": [list(a) for a in alphas],
                "roots_of_ideal": [
                    list(a) for a in dict(rs.groups)[rho]
                ],
            }
            for rho, alphas in all_rs.groups
        ],
    }
    return report


def _report_lnd(rep: dv.LndDegreeReport) -> dict:
    return {
        "alpha": list(rep.alpha),
        "case": rep.case,
        "G_basis": [[frac_str(x) for x in p] for p in rep.G_basis],
        "K_basis": [[frac_str(x) for x in p] for p in rep.K_basis],
        "effective_basis": [
            [frac_str(x) for x in p] for p in rep.effective_basis
        ],
        "effective_dim": rep.effective_dim,
    }


def cmd_lnds(args) -> dict:
    rank, sgens, igens, file_bound, digest = load_problem(args.file)
    report = base_report("lnds", digest, args)
    S, I = build_from_problem(rank, sgens, igens)
    bound = args.bound if args.bound is not None else file_bound
    cofinite, _ = idl.is_cofinite(I)
    if cofinite:
        check_dim(len(idl.complement(I)))
    elif bound is None:
        raise PreconditionError("bound required for a non-cofinite ideal")
    else:
        report["warnings"].append("bounded search: degrees outside the box "
                                  "[-%d, %d]^n were not examined" % (bound, bound))
    try:
        reports = dv.lnd_degrees(S, I, bound=None if cofinite else bound)
    except ValueError as e:
        raise PreconditionError(str(e))
    report["result"] = {
        "exact": cofinite,
        "bound": bound,
        "degrees": [_report_lnd(r) for r in reports],
    }
    return report


def parse_fractions(text, rank, what):
    try:
        parts = [Fraction(p) for p in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputError("cannot parse %s: %r" % (what, text))
    if len(parts) != rank:
        raise InputError("%s must have %d components" % (what, rank))
    return tuple(parts)


def cmd_aut(args) -> dict:
    rank, sgens, igens, _, digest = load_problem(args.file)
    report = base_report("aut", digest, args)
    S, I = build_from_problem(rank, sgens, igens)
    cofinite, cert = idl.is_cofinite(I)
    if not cofinite:
        raise PreconditionError(
            "quotient is infinite dimensional: ray %s has no multiple in "
            "the support" % (cert.failing_ray,)
        )
    gens = qt.aut_generators(S, I)
    Q = gens.quotient
    check_dim(Q.dim)
    if gens.warning:
        report["warnings"].append(gens.warning)
    if Q.notice:
        report["warnings"].append(Q.notice)
    n = Q.semigroup.ambient_rank
    torus = (
        parse_fractions(args.torus, n, "--torus")
        if args.torus else qt.default_torus_point(n)
    )
    s = Fraction(args.param) if args.param else Fraction(1)
    families = []
    for fam in gens.unipotent_families:
        families.append({
            "alpha": list(fam.alpha),
            "p": [frac_str(x) for x in fam.p],
            "parametric": poly_matrix_json(fam.parametric),
            "sample": matrix_json(qt.specialize(fam.parametric, s)),
        })
    report["result"] = {
        "basis": [list(m) for m in Q.basis],
        "first_octant_certified": gens.first_octant_certified,
        "torus_weights": [list(m) for m in gens.torus_weights],
        "torus_point": [frac_str(t) for t in torus],
        "torus_sample": matrix_json(qt.torus_matrix(Q, torus)),
        "unipotent_parameter": frac_str(s),
        "unipotent_families": families,
        "toric": [
            {
                "lattice_map": [list(r) for r in t.lattice_map],
                "basis_permutation": list(t.basis_permutation),
                "matrix": matrix_json(t.matrix(Q.dim)),
            }
            for t in gens.toric
        ],
        "opposite_root_degrees": [list(a) for a in gens.opposite_root_degrees],
    }
    return report


def cmd_oracle(args) -> dict:
    rank, sgens, igens, _, digest = load_problem(args.file)
    report = base_report("oracle", digest, args)
    S, I = build_from_problem(rank, sgens, igens)
    cofinite, cert = idl.is_cofinite(I)
    if not cofinite:
        raise PreconditionError(
            "oracle requires a cofinite ideal: ray %s has no multiple in "
            "the support" % (cert.failing_ray,)
        )
    check_dim(len(idl.complement(I)))
    cmp = orc.compare_with_classification(S, I)
    label = (
        "extras" if S.is_first_octant()
        else "non-liftable candidates"
    )
    report["result"] = {
        "all_match": cmp.all_match,
        "rows": [
            {
                "alpha": list(r.alpha),
                "oracle_dim": r.oracle_dim,
                "classified_dim": r.classified_dim,
                "match": r.match,
            }
            for r in cmp.rows
        ],
        "extras_label": label,
        "extras": [list(a) for a in cmp.extras],
        "mismatches": [list(a) for a in cmp.mismatches],
    }
    return report


def cmd_witness(args) -> dict:
    rank, sgens, igens, _, digest = load_problem(args.file)
    report = base_report("witness", digest, args)
    S, _ = build_from_problem(rank, sgens, igens)
    try:
        w = dv.non_liftable_witness(S)
    except ValueError as e:
        raise PreconditionError(str(e))
    report["result"] = {
        "ideal_generators": [list(a) for a in w.ideal.generators],
        "source": list(w.source),
        "target": list(w.target),
        "alpha": list(w.alpha),
        "violated_constraints": [
            {"dual_ray": list(rho), "value": v}
            for rho, v in w.violated_constraints
        ],
    }
    return report


def cmd_exp(args) -> dict:
    rank, sgens, igens, _, digest = load_problem(args.file)
    report = base_report("exp", digest, args)
    S, I = build_from_problem(rank, sgens, igens)
    if args.alpha is None or args.p is None:
        raise InputError("exp requires --alpha and --p")
    try:
        alpha = tuple(int(x) for x in args.alpha.split(","))
    except ValueError:
        raise InputError("cannot parse --alpha: %r" % args.alpha)
    if len(alpha) != rank:
        raise InputError("--alpha must have %d components" % rank)
    p = parse_fractions(args.p, rank, "--p")
    cofinite, cert = idl.is_cofinite(I)
    if not cofinite:
        raise PreconditionError(
            "quotient is infinite dimensional: ray %s has no multiple in "
            "the support" % (cert.failing_ray,)
        )
    Q = qt.build_quotient(S, I)
    check_dim(Q.dim)
    if Q.notice:
        report["warnings"].append(Q.notice)
    try:
        verdict = dv.classify_lnd(Q.semigroup, Q.ideal, alpha, p)
    except ValueError as e:
        raise PreconditionError(str(e))
    if not verdict.is_lnd:
        raise PreconditionError("not locally nilpotent: %s" % verdict.reason)
    s = Fraction(args.param) if args.param else Fraction(1)
    parametric = qt.exp_parametric(Q, alpha, p)
    report["result"] = {
        "basis": [list(m) for m in Q.basis],
        "alpha": list(alpha),
        "p": [frac_str(x) for x in p],
        "case": verdict.case,
        "parametric": poly_matrix_json(parametric),
        "parameter": frac_str(s),
        "matrix": matrix_json(qt.specialize(parametric, s)),
    }
    return report


def render_text(report) -> str:
    lines = []

    def walk(key, value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append("%s%s:" % (pad, key))
            for k in value:
                walk(k, value[k], indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append("%s%s:" % (pad, key))
            for i, item in enumerate(value):
                walk(str(i), item, indent + 1)
        else:
            lines.append("%s%s: %s" % (pad, key, json.dumps(value)))

    for k in report:
        walk(k, report[k], 0)
    result = report.get("result", {})
    comp = result.get("complement")
    if comp and len(comp[0]) == 2:
        lines.append("staircase:")
        xs = [m[0] for m in comp]
        ys = [m[1] for m in comp]
        cset = {tuple(m) for m in comp}
        for y in range(max(ys), min(ys) - 1, -1):
            row = "".join(
                "o " if (x, y) in cset else ". "
                for x in range(min(xs), max(xs) + 1)
            )
            lines.append("  " + row)
    return "\n".join(lines) + "\n"


COMMANDS = {
    "analyze": cmd_analyze,
    "roots": cmd_roots,
    "lnds": cmd_lnds,
    "aut": cmd_aut,
    "oracle": cmd_oracle,
    "witness": cmd_witness,
    "exp": cmd_exp,
}


def make_parser():
    parser = argparse.ArgumentParser(
        prog="monoalg",
        description="Automorphisms and derivations of zero-dimensional "
                    "monomial algebras over affine semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--bound", type=int, default=None)
        p.add_argument("--torus", default=None,
                       help="comma separated torus point, e.g. 2,3")
        p.add_argument("--param", default=None,
                       help="unipotent parameter s (rational)")
        p.add_argument("--alpha", default=None,
                       help="comma separated degree vector")
        p.add_argument("--p", default=None,
                       help="comma separated rational functional")
        p.add_argument("--seed", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except InputError as e:
        print("input error: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PRECONDITION
    except AssertionError as e:
        print("internal error: %s" % e, file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "text":
        sys.stdout.write(render_text(report))
    else:
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
