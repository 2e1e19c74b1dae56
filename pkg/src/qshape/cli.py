"""Command-line front end: JSON algebra descriptions in, JSON reports out.

Subcommands: check, tilt, gamma, ext, window, basechange, verify.
Exit codes: 0 all checks pass, 1 a structural property or lemma check
failed, 2 parse/compile error, 3 hypothesis failure, 4 comparison mismatch,
5 nonzero stable Ext off degree zero.

Algebra file schema (UTF-8 JSON)::

    {"field": {"char": 0},
     "builtin": {"family": "truncated_polynomial", "parameter": 4}}

or::

    {"field": {"char": 0},
     "quiver": {"vertices": ["1", "2"],
                "arrows": [{"name": "a", "from": "1", "to": "2", "degree": 0},
                           {"name": "b", "from": "2", "to": "1", "degree": 1}],
                "relations": [[{"coeff": 1, "path": ["b", "a"]}],
                              [{"coeff": 1, "path": ["a", "b"]}]],
                "nilpotency_bound": 2}}

A relation is a list of terms; each term multiplies a coefficient (integer
or "p/q" string) with a path written right-to-left, so ["b", "a"] is "apply
a, then b".  Rationals are printed as "p/q" strings, prime-field scalars as
least non-negative residues.  QSHAPE_SEED overrides --seed.
"""

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from .algebra import (
    QuiverPresentation,
    builtin,
    compile_quiver,
    sup_degree,
)
from .basechange import base_change_hom_check, gamma_tensor, tensor_algebra, ungrade
from .errors import HypothesisViolated, QShapeError
from .fields import FieldSpec
from .modules import projective, regular, simple
from .stable import stable_ext_table
from .tilting import (
    DEFAULT_GLDIM_BOUND,
    check_hypotheses,
    compare,
    fingerprint,
    reference_auslander_linear,
    reference_subcategory_algebra,
    reference_upper_triangular,
    tilting_endomorphism_algebra,
    tilting_module,
)
from .window import build_window, check_window_properties

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_COMPARISON = 4
EXIT_EXT_NONZERO = 5


class ParseError(Exception):
    pass


def _load_algebra_file(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ParseError(f"invalid JSON in {path}: {e}")
    digest = hashlib.sha256(raw).hexdigest()
    try:
        field = FieldSpec(int(data.get("field", {}).get("char", 0)))
    except (TypeError, ValueError, AttributeError) as e:
        raise ParseError(f"bad field spec: {e}")
    if ("builtin" in data) == ("quiver" in data):
        raise ParseError("file must contain exactly one of 'builtin' or 'quiver'")
    try:
        if "builtin" in data:
            b = data["builtin"]
            a = builtin(b["family"], int(b["parameter"]), field)
            echo = {"builtin": {"family": b["family"], "parameter": int(b["parameter"])}}
        else:
            q = data["quiver"]
            arrows = [(ar["name"], ar["from"], ar["to"], int(ar["degree"]))
                      for ar in q["arrows"]]
            relations = [
                [(term["coeff"], tuple(term["path"])) for term in rel]
                for rel in q["relations"]
            ]
            pres = QuiverPresentation(q["vertices"], arrows, relations,
                                      int(q["nilpotency_bound"]))
            a = compile_quiver(pres, field)
            echo = {"quiver": {"vertices": list(q["vertices"]),
                               "arrows": len(arrows),
                               "relations": len(relations)}}
    except QShapeError as e:
        raise ParseError(f"{type(e).__name__}: {e}")
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad algebra description: {e}")
    return a, field, echo, digest


def _scalar_str(field, x):
    return field.to_str(x)


def _vec_json(field, vec):
    return {str(k): _scalar_str(field, c) for k, c in sorted(vec.items())}


def _algebra_json(a):
    return {
        "dim": a.dim,
        "degrees": list(a.degrees),
        "labels": list(a.labels) if a.labels else None,
        "unit": _vec_json(a.field, a.unit),
        "mult": [[_vec_json(a.field, a.mult[i][j]) for j in range(a.dim)]
                 for i in range(a.dim)],
    }


def _envelope(command, field, echo, digest, seed):
    return {
        "command": command,
        "version": __version__,
        "seed": seed,
        "field": {"char": field.char},
        "input": echo,
        "input_sha256": digest,
    }


def _emit(report):
    print(json.dumps(report, sort_keys=True, indent=2))


def _hypothesis_block(a, gldim_bound):
    verdicts = check_hypotheses(a, gldim_bound)
    verdicts = dict(verdicts)
    if a.dim:
        verdicts["top_degree"] = sup_degree(a)
    else:
        verdicts["top_degree"] = None
    return verdicts


def cmd_check(args, seed):
    a, field, echo, digest = _load_algebra_file(args.file)
    report = _envelope("check", field, echo, digest, seed)
    verdicts = _hypothesis_block(a, args.gldim_bound)
    report["hypotheses"] = verdicts
    report["dim"] = a.dim
    _emit(report)
    ok = all(verdicts[k] for k in
             ("non_negative_grading", "self_injective", "finite_global_dimension"))
    return EXIT_OK if ok else EXIT_HYPOTHESIS


def cmd_tilt(args, seed):
    a, field, echo, digest = _load_algebra_file(args.file)
    report = _envelope("tilt", field, echo, digest, seed)
    report["hypotheses"] = _hypothesis_block(a, args.gldim_bound)
    try:
        td = tilting_module(a, args.gldim_bound)
    except HypothesisViolated as e:
        report["error"] = str(e)
        _emit(report)
        return EXIT_HYPOTHESIS
    report["tilting"] = {
        "summand_count": td.ell,
        "summand_dims": [s.dim for s in td.summands],
        "summand_degrees": [sorted(set(s.degrees)) for s in td.summands],
        "total_dim": td.module.dim,
    }
    _emit(report)
    return EXIT_OK


def _auto_reference(echo, a, field):
    b = echo.get("builtin")
    if not b:
        return None, None
    fam, par = b["family"], b["parameter"]
    if fam == "truncated_polynomial":
        return f"upper_triangular:{par - 1}", reference_upper_triangular(par - 1, field)
    if fam == "preprojective_A":
        if par == 1:
            return "upper_triangular:0", reference_upper_triangular(0, field)
        return f"auslander:{par - 1}", reference_auslander_linear(par - 1, field)
    if fam == "exterior":
        return "subcategory", reference_subcategory_algebra(a)
    return None, None


def _resolve_reference(spec_str, echo, a, field):
    if spec_str == "none":
        return None, None
    if spec_str == "auto":
        return _auto_reference(echo, a, field)
    try:
        if spec_str == "subcategory":
            return "subcategory", reference_subcategory_algebra(a)
        name, _, param = spec_str.partition(":")
        if name == "upper_triangular":
            return spec_str, reference_upper_triangular(int(param), field)
        if name == "auslander":
            return spec_str, reference_auslander_linear(int(param), field)
    except (ValueError, TypeError) as e:
        raise ParseError(f"bad --compare spec {spec_str!r}: {e}")
    raise ParseError(f"unknown --compare spec {spec_str!r}")


def cmd_gamma(args, seed):
    a, field, echo, digest = _load_algebra_file(args.file)
    report = _envelope("gamma", field, echo, digest, seed)
    report["hypotheses"] = _hypothesis_block(a, args.gldim_bound)
    try:
        gamma = tilting_endomorphism_algebra(a, args.gldim_bound)
    except HypothesisViolated as e:
        report["error"] = str(e)
        _emit(report)
        return EXIT_HYPOTHESIS
    g = gamma.algebra
    report["gamma"] = _algebra_json(g)
    report["gamma"]["block_idempotents"] = [_vec_json(field, e)
                                            for e in gamma.block_idempotents]
    report["fingerprint"] = fingerprint(g, seed).as_dict()
    ref_name, ref = _resolve_reference(args.compare, echo, a, field)
    if ref is None:
        report["comparison"] = {"reference": None, "verdict": None}
        _emit(report)
        return EXIT_OK
    verdict = compare(g, ref, seed)
    report["comparison"] = {
        "reference": ref_name,
        "reference_fingerprint": fingerprint(ref, seed).as_dict(),
        "verdict": verdict.as_dict(),
    }
    _emit(report)
    return EXIT_OK if verdict.status != "mismatch" else EXIT_COMPARISON


def cmd_ext(args, seed):
    a, field, echo, digest = _load_algebra_file(args.file)
    report = _envelope("ext", field, echo, digest, seed)
    report["hypotheses"] = _hypothesis_block(a, args.gldim_bound)
    try:
        td = tilting_module(a, args.gldim_bound)
    except HypothesisViolated as e:
        report["error"] = str(e)
        _emit(report)
        return EXIT_HYPOTHESIS
    table = stable_ext_table(td.module, td.module, args.range)
    report["ext_table"] = {str(i): table[i] for i in sorted(table)}
    off_zero = [i for i, v in table.items() if i != 0 and v]
    report["vanishes_off_zero"] = not off_zero
    _emit(report)
    return EXIT_OK if not off_zero else EXIT_EXT_NONZERO


def cmd_window(args, seed):
    from .errors import NotSelfInjective

    a, field, echo, digest = _load_algebra_file(args.file)
    report = _envelope("window", field, echo, digest, seed)
    report["hypotheses"] = _hypothesis_block(a, args.gldim_bound)
    w = build_window(a, args.lo, args.hi)
    try:
        rep = check_window_properties(w, serre_check=args.serre)
    except NotSelfInjective as e:
        report["error"] = str(e)
        _emit(report)
        return EXIT_HYPOTHESIS
    report["properties"] = rep
    report["hom_dims"] = w.dims_table()
    _emit(report)
    return EXIT_OK if rep["all_pass"] else EXIT_FAILED_CHECK


def cmd_basechange(args, seed):
    a, field, echo, digest = _load_algebra_file(args.file)
    a2, field2, echo2, digest2 = _load_algebra_file(getattr(args, "with"))
    report = _envelope("basechange", field, echo, digest, seed)
    report["coefficient_input"] = echo2
    report["coefficient_sha256"] = digest2
    if field != field2:
        report["error"] = "base and coefficient algebras use different fields"
        _emit(report)
        return EXIT_PARSE
    coeff = a2 if a2.is_trivially_graded() else ungrade(a2)
    report["coefficient_regraded"] = not a2.is_trivially_graded()
    report["hypotheses"] = _hypothesis_block(a, args.gldim_bound)
    try:
        td = tilting_module(a, args.gldim_bound)
    except HypothesisViolated as e:
        report["error"] = str(e)
        _emit(report)
        return EXIT_HYPOTHESIS
    tensor = tensor_algebra(a, coeff)
    witnesses = {"regular": regular(a)}
    for i in range(1, len(a.idempotents or []) + 1):
        witnesses[f"projective_{i}"] = projective(a, i)
        witnesses[f"simple_{i}"] = simple(a, i)
    witnesses["tilting"] = td.module
    checks = {}
    all_pass = True
    for name_m, m in sorted(witnesses.items()):
        for name_n, n in sorted(witnesses.items()):
            res = base_change_hom_check(m, n, tensor)
            checks[f"{name_m}|{name_n}"] = res
            all_pass = all_pass and res["pass"]
    gt = gamma_tensor(a, coeff, args.gldim_bound)
    gamma_dim = tilting_endomorphism_algebra(a, args.gldim_bound).algebra.dim
    report["hom_checks"] = checks
    report["all_hom_checks_pass"] = all_pass
    report["gamma_tensor"] = {
        "dim": gt.dim,
        "expected_dim": gamma_dim * coeff.dim,
        "pass": gt.dim == gamma_dim * coeff.dim,
    }
    _emit(report)
    ok = all_pass and report["gamma_tensor"]["pass"]
    return EXIT_OK if ok else EXIT_FAILED_CHECK


def _verify_one_field(family, parameter, field, seed):
    """Per-instance acceptance subset for one field; returns (verdicts, code)."""
    a = builtin(family, parameter, field)
    verdicts = {}
    hyp = check_hypotheses(a, DEFAULT_GLDIM_BOUND)
    verdicts["hypotheses"] = {
        k: hyp[k] for k in ("non_negative_grading", "self_injective",
                            "finite_global_dimension")
    }
    if not all(verdicts["hypotheses"].values()):
        return verdicts, EXIT_HYPOTHESIS

    gamma = tilting_endomorphism_algebra(a)
    echo = {"builtin": {"family": family, "parameter": parameter}}
    ref_name, ref = _auto_reference(echo, a, field)
    cmp_verdict = compare(gamma.algebra, ref, seed)
    verdicts["gamma_dim"] = gamma.algebra.dim
    verdicts["comparison"] = {"reference": ref_name, "verdict": cmp_verdict.as_dict()}

    td = gamma.tilting
    table = stable_ext_table(td.module, td.module, 5)
    off = [i for i, v in table.items() if i != 0 and v]
    verdicts["ext_vanishes_off_zero"] = not off
    verdicts["ext_zero_entry_is_gamma_dim"] = table[0] == gamma.algebra.dim

    wrep = check_window_properties(build_window(a, -6, 6), serre_check=True)
    verdicts["window_all_pass"] = wrep["all_pass"]

    if (family, parameter) in (("truncated_polynomial", 3), ("preprojective_A", 2)):
        from .tilting import reference_upper_triangular as rut

        coeffs = {
            "base_field": builtin("preprojective_A", 1, field),
            "dual_numbers": ungrade(builtin("truncated_polynomial", 2, field)),
            "upper_triangular_2": rut(2, field),
        }
        witnesses = [regular(a)]
        for i in range(1, len(a.idempotents) + 1):
            witnesses.append(projective(a, i))
            witnesses.append(simple(a, i))
        witnesses.append(td.module)
        bc_pass = True
        for coeff in coeffs.values():
            tensor = tensor_algebra(a, coeff)
            for m in witnesses:
                for n in witnesses:
                    if not base_change_hom_check(m, n, tensor)["pass"]:
                        bc_pass = False
            gt = gamma_tensor(a, coeff)
            if gt.dim != gamma.algebra.dim * coeff.dim:
                bc_pass = False
        verdicts["base_change_pass"] = bc_pass

    code = EXIT_OK
    if cmp_verdict.status == "mismatch":
        code = EXIT_COMPARISON
    elif off:
        code = EXIT_EXT_NONZERO
    elif not (verdicts["ext_zero_entry_is_gamma_dim"] and verdicts["window_all_pass"]
              and verdicts.get("base_change_pass", True)):
        code = EXIT_FAILED_CHECK
    return verdicts, code


def cmd_verify(args, seed):
    echo = {"builtin": {"family": args.family, "parameter": args.parameter}}
    digest = hashlib.sha256(
        json.dumps(echo, sort_keys=True).encode("utf-8")
    ).hexdigest()
    report = _envelope("verify", FieldSpec(0), echo, digest, seed)
    try:
        rational, code_q = _verify_one_field(args.family, args.parameter,
                                             FieldSpec(0), seed)
        modular, code_p = _verify_one_field(args.family, args.parameter,
                                            FieldSpec(32003), seed)
    except QShapeError as e:
        report["error"] = f"{type(e).__name__}: {e}"
        _emit(report)
        return EXIT_PARSE
    report["rationals"] = rational
    report["gf_32003"] = modular
    agree = rational == modular
    report["field_independent"] = agree
    _emit(report)
    if code_q != EXIT_OK:
        return code_q
    if code_p != EXIT_OK:
        return code_p
    return EXIT_OK if agree else EXIT_FAILED_CHECK


def build_parser():
    p = argparse.ArgumentParser(prog="qshape", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--seed", type=int, default=0,
                   help="determinism seed (QSHAPE_SEED overrides)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(sp):
        sp.add_argument("file", help="algebra description JSON file")
        sp.add_argument("--gldim-bound", type=int, default=DEFAULT_GLDIM_BOUND)

    sp = sub.add_parser("check", help="verify the standing hypotheses")
    with_file(sp)
    sp = sub.add_parser("tilt", help="construct the tilting module")
    with_file(sp)
    sp = sub.add_parser("gamma", help="stable endomorphism algebra of the tilting module")
    with_file(sp)
    sp.add_argument("--compare", default="auto",
                    help="auto|upper_triangular:m|auslander:m|subcategory|none")
    sp = sub.add_parser("ext", help="stable Ext table of the tilting module")
    with_file(sp)
    sp.add_argument("--range", type=int, default=5)
    sp = sub.add_parser("window", help="check the shifted-projective category window")
    with_file(sp)
    sp.add_argument("--lo", type=int, required=True)
    sp.add_argument("--hi", type=int, required=True)
    serre = sp.add_mutually_exclusive_group()
    serre.add_argument("--serre", dest="serre", action="store_true", default=True)
    serre.add_argument("--no-serre", dest="serre", action="store_false")
    sp = sub.add_parser("basechange", help="hom base-change checks against a coefficient algebra")
    with_file(sp)
    sp.add_argument("--with", required=True, help="coefficient algebra JSON file")
    sp = sub.add_parser("verify", help="run the acceptance subset for a builtin instance")
    sp.add_argument("family")
    sp.add_argument("parameter", type=int)
    return p


COMMANDS = {
    "check": cmd_check,
    "tilt": cmd_tilt,
    "gamma": cmd_gamma,
    "ext": cmd_ext,
    "window": cmd_window,
    "basechange": cmd_basechange,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed
    env_seed = os.environ.get("QSHAPE_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            print(json.dumps({"error": "QSHAPE_SEED must be an integer"}))
            return EXIT_PARSE
    try:
        return COMMANDS[args.command](args, seed)
    except ParseError as e:
        print(json.dumps({"error": str(e)}, sort_keys=True, indent=2))
        return EXIT_PARSE
    except (QShapeError, ValueError) as e:
        print(json.dumps({"error": f"{type(e).__name__}: {e}"}, sort_keys=True, indent=2))
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
