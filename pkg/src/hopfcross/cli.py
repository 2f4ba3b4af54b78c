"""Command-line front end: ``hopf verify | classify | crossed | aut | iso | equiv | seq | morphism``.

Exit codes: 0 pass/decided, 1 failed/refuted, 2 undecided, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .crossed import InvalidSystem, build_crossed_product, check_crossed_system
from .errors import BudgetExceeded, HopfError, HypothesisUnchecked, UnknownModel
from .fields import FieldSpec
from .hopf import check_map_properties, verify_hopf
from .io import dump_algebra, load_algebra, map_from_json, parse_element, read_json_file, system_from_json
from .morphisms import MorphismQuadruple, check_group_closure, endo_search_by_generators, quadruple_to_map, triple_to_map
from .structure import DEFAULT_BUDGET
from .sweedler import (
    FinSuppSeq,
    H4CocycleParam,
    aut_group_A_a,
    aut_model_for,
    build_A_a,
    classification_report,
    cocycle_from_param,
    decide_orbit,
    decide_seq_equiv,
    iso_test_A_a,
)

EXIT_OK, EXIT_FAIL, EXIT_UNDECIDED, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _field(args, required=True):
    if args.field is None:
        if required:
            raise InputError("--field is required")
        return None
    return FieldSpec.from_flag(args.field)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def _load(args, ref):
    A = load_algebra(ref, _field(args, required=ref.startswith("catalog:")))
    if not args.skip_verify:
        rep = verify_hopf(A)
        if not rep.ok:
            raise _Refuted(f"{ref} is not a Hopf algebra: {', '.join(rep.failed_names())}", rep)
    return A


class _Refuted(Exception):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def _status_code(status):
    return EXIT_UNDECIDED if status == "Unknown" else EXIT_OK


# -- commands ------------------------------------------------------------------------------------


def cmd_verify(args):
    A = load_algebra(args.algebra, _field(args, required=args.algebra.startswith("catalog:")))
    rep = verify_hopf(A)
    _emit(args, rep.to_dict(), f"{A!r}\n{rep}\n{'PASS' if rep.ok else 'FAIL'}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _parse_reps(A, text):
    if text is None:
        return None
    return [parse_element(A, part) for part in text.split(",") if part.strip()]


def cmd_classify(args):
    A = _load(args, args.algebra)
    model = None if args.aut_model == "auto" else aut_model_for(A, args.aut_model, args.budget)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisUnchecked)
        rep = classification_report(A, model, _parse_reps(A, args.representatives), args.budget,
                                    exhaustive=args.exhaustive)
    d = rep.to_dict()
    lines = [f"algebra {d['algebra']} over {d['field']}",
             f"zp basis: {', '.join(d['zp_basis']) or '0'}",
             f"H^2 points: {d['h2']['points'] if d['h2']['points'] is not None else 'infinite'}",
             f"completeness certificate: {d['certificate']['complete']}",
             f"Crp classes: {d['crp']['count']} ({'decided' if rep.decided else 'undecided'})"]
    for c in d["crp"]["classes"]:
        lines.append(f"  [{c['representative']}] members {c['members']} aut order {c['aut_order']}")
    _emit(args, d, "\n".join(lines))
    return EXIT_OK if rep.decided else EXIT_UNDECIDED


def _system_from_args(args):
    """``(system, param)``; ``param`` is set for the H4 family given by ``--base``/``--param``."""
    if args.system:
        return system_from_json(read_json_file(args.system), _field(args, required=False)), None
    if not args.base:
        raise InputError("give --system FILE or --base REF with --param")
    A = _load(args, args.base)
    param = H4CocycleParam(A, parse_element(A, args.param or "0"))
    return cocycle_from_param(param), param


def cmd_crossed(args):
    sys_, param = _system_from_args(args)
    if args.action == "check":
        rep = check_crossed_system(sys_)
        _emit(args, rep.to_dict(), f"{rep}\n{'PASS' if rep.ok else 'FAIL'}")
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.force and not args.i_know_this_is_unchecked:
        raise InputError("--force needs --i-know-this-is-unchecked")
    try:
        if param is not None:
            P = build_A_a(param)
        else:
            P = build_crossed_product(sys_, force=args.force)
    except InvalidSystem as exc:
        _emit(args, exc.report.to_dict(), f"{exc.report}\nFAIL: {exc}")
        return EXIT_FAIL
    text = dump_algebra(P.algebra, args.out)
    if args.out:
        print(f"wrote {P.algebra.dim}-dimensional algebra to {args.out}")
    else:
        print(text)
    return EXIT_OK


def cmd_aut(args):
    A = _load(args, args.algebra)
    if args.param is None:
        res = endo_search_by_generators(A, budget=args.budget)
        closed = check_group_closure(res.automorphisms)
        payload = {"order": len(res.automorphisms), "endomorphisms": len(res.maps),
                   "candidates": res.candidates, "generators": res.generators, "group_closed": closed}
        _emit(args, payload, f"|Aut_Hopf| = {len(res.automorphisms)} (group closure {closed})")
        return EXIT_OK if closed else EXIT_FAIL
    model = aut_model_for(A, args.aut_model, args.budget)
    desc = aut_group_A_a(A, parse_element(A, args.param), model)
    _emit(args, desc.to_dict(), f"G(a): {desc.condition}; order {desc.order}")
    if desc.verified is False:
        return EXIT_FAIL
    return EXIT_OK if desc.order is not None else EXIT_UNDECIDED


def cmd_iso(args):
    A = _load(args, args.algebra)
    model = None if args.aut_model == "auto" else aut_model_for(A, args.aut_model, args.budget)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisUnchecked)
        res = iso_test_A_a(A, parse_element(A, args.a), parse_element(A, args.b), model, budget=args.budget)
    _emit(args, res.to_dict(), f"{res.status}: {res.reason}")
    return _status_code(res.status)


def cmd_equiv(args):
    F = _field(args)
    sub = "prime" if args.scalars == "prime-subfield" else "full"
    res = decide_orbit(F.parse(args.q), F.parse(args.qprime), sub, F)
    w = "" if res.witness is None else f" (alpha = {res.witness.alpha}, beta = {res.witness.beta})"
    _emit(args, res.to_dict(), f"{res.status}{w}: {res.reason}")
    return _status_code(res.status)


def _parse_seq(F, text):
    entries = {}
    for part in text.split(","):
        if not part.strip():
            continue
        i, sep, c = part.partition(":")
        if not sep:
            raise InputError(f"sequence entries look like i:c, got {part!r}")
        entries[int(i)] = F.parse(c)
    return FinSuppSeq(F.p, entries)


def cmd_seq(args):
    F = _field(args)
    res = decide_seq_equiv(_parse_seq(F, args.s), _parse_seq(F, args.t), F)
    w = "" if res.witness is None else f" (alpha = {res.witness.alpha}, beta = {res.witness.beta})"
    _emit(args, res.to_dict(), f"{res.status}{w}: {res.reason}")
    return _status_code(res.status)


def cmd_morphism(args):
    data = read_json_file(args.file)
    F = _field(args, required=False)
    src_sys = system_from_json(data["source"], F)
    dst_sys = system_from_json(data["target"], F)
    src, dst = build_crossed_product(src_sys), build_crossed_product(dst_sys)
    A, H, A2, H2 = src.A, src.H, dst.A, dst.H
    u = map_from_json(data["u"], A, A2)
    r = map_from_json(data["r"], H, A2)
    v = map_from_json(data["v"], H, H2)
    if "p" in data:
        p = map_from_json(data["p"], A, H2)
        psi, rep = quadruple_to_map(MorphismQuadruple(u, p, r, v), src, dst)
        extra = {}
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", HypothesisUnchecked)
            res = triple_to_map(u, r, v, src, dst)
        psi, rep = res.psi, res.report
        extra = {"psi_invertible": res.psi_invertible, "inverse_ok": res.inverse_ok,
                 "iso_criterion_agrees": res.iso_criterion_agrees}
    hopf = check_map_properties(psi).is_hopf_map
    payload = {"checks": rep.to_dict(), "psi_is_hopf_map": hopf, **extra}
    _emit(args, payload, f"{rep}\npsi is a Hopf map: {hopf}")
    return EXIT_OK if rep.ok and hopf else EXIT_FAIL


# -- parser -------------------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="q, fP or fP(X1,...,Xn)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget")
    common.add_argument("--skip-verify", action="store_true", help="do not verify input algebras")
    common.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; work is sequential")

    p = argparse.ArgumentParser(prog="hopf", description="Crossed products of Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check the Hopf algebra axioms")
    s.add_argument("algebra", help="catalog:NAME or a JSON file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", parents=[common], help="H^2 and Crp for crossed products with H4")
    s.add_argument("algebra")
    s.add_argument("--aut-model", default="auto", choices=["auto", "scaling", "search"])
    s.add_argument("--representatives", help="comma-separated elements of zp(A) (infinite fields)")
    s.add_argument("--exhaustive", action="store_true", help="also scan the linear residual")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("crossed", parents=[common], help="build or check a crossed system")
    s.add_argument("action", choices=["build", "check"])
    s.add_argument("--system", help="crossed-system JSON file")
    s.add_argument("--base", help="algebra A for the H4 family")
    s.add_argument("--param", help="central primitive a in A (H4 family)")
    s.add_argument("--out", help="write the product algebra JSON here")
    s.add_argument("--force", action="store_true", help="build without checking the axioms")
    s.add_argument("--i-know-this-is-unchecked", action="store_true", help="confirm --force")
    s.set_defaults(func=cmd_crossed)

    s = sub.add_parser("aut", parents=[common], help="Hopf automorphisms of A or of A_(a)")
    s.add_argument("--algebra", required=True)
    s.add_argument("--param", help="a in zp(A): describe Aut(A_(a)) instead")
    s.add_argument("--aut-model", default="auto", choices=["auto", "scaling", "search"])
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("iso", parents=[common], help="is A_(a) isomorphic to A_(b)?")
    s.add_argument("--algebra", required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--aut-model", default="auto", choices=["auto", "scaling", "search"])
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("equiv", parents=[common], help="decide alpha q = beta^2 q'")
    s.add_argument("--q", required=True)
    s.add_argument("--qprime", required=True)
    s.add_argument("--scalars", default="full", choices=["full", "prime-subfield"])
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("seq", parents=[common], help="decide alpha^(p^i) s_i = beta^2 t_i")
    s.add_argument("--s", required=True, help="entries i:c separated by commas")
    s.add_argument("--t", required=True)
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("morphism", parents=[common], help="check a morphism given by (u, [p,] r, v)")
    s.add_argument("action", choices=["check"])
    s.add_argument("file", help="JSON with source, target systems and maps u, r, v (and optionally p)")
    s.set_defaults(func=cmd_morphism)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _Refuted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (BudgetExceeded, UnknownModel) as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (InputError, HopfError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
