"""Command-line front end.

Every subcommand reads the text formats from textio, calls the matching
library routine, and renders one result object either as indented JSON
(``--json``) or as plain ``key: value`` lines.  Both modes print the same
object, so scripted and interactive runs can never disagree.

Exit codes: 0 for a completed run (including negative verdicts), 1 for a
domain error such as a file describing something the requested operation
rejects, 2 for unusable input (bad flags, malformed files, broken JSON).
``fixture compare`` additionally exits 1 when both files are readable but
disagree.
"""

import argparse
import json
import random
import re
import sys
from fnmatch import fnmatch
from pathlib import Path

from .cohen_macaulay import cm_check, hilbert_function, hyperplane_section, saturate
from .complete_intersection import (border, border_basis, ci_locus,
                                    minimality_report, minimization_matrix)
from .gorenstein import gorenstein_locus, is_gorenstein, socle
from .marked import is_marked_basis, marked_family, reduce, verified_basis
from .monomials import (dimension_codimension, pommaret_basis, regularity,
                        satiety, truncate)
from .regular_sequences import regseq_find, regseq_verify
from .rings import ParseError, RingError, parse_polynomial, polynomial_str, term_str
from .textio import (FormatError, read_ideal, read_marked, read_poly_dicts,
                     ring_repr)

# lists of rendered polynomials where only the set matters, modulo an
# overall sign on each member
UNORDERED_KEYS = frozenset({
    "equations", "minors", "inequalities", "socle", "generators",
    "pommaret", "border", "outside_pommaret", "socle_like_generators",
})


# ---------------------------------------------------------------- loading


def _read_file(path):
    return Path(path).read_text()


def _load_ideal(path):
    return read_ideal(_read_file(path))


def _load_marked(path):
    return read_marked(_read_file(path))


def _load_basis(path):
    ring, ms = _load_marked(path)
    return ring, verified_basis(ms)


def _load_family(args):
    _, J = _load_ideal(args.ideal)
    qs = pommaret_basis(J)
    fam = marked_family(qs)
    if not args.restrict:
        return fam
    patterns = [s.strip() for s in args.restrict.split(",") if s.strip()]
    chosen = sorted(p for p in fam.parameters
                    if any(fnmatch(p, pat) for pat in patterns))
    unmatched = [pat for pat in patterns
                 if not any(fnmatch(p, pat) for p in fam.parameters)]
    if unmatched:
        raise RingError("restriction %r matches no parameter" % unmatched[0])
    return marked_family(qs, restrict=chosen)


# -------------------------------------------------------------- rendering


def _human(value, out, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                print("%s%s:" % (pad, k), file=out)
                _human(v, out, indent + 1)
            else:
                print("%s%s: %s" % (pad, k, _scalar(v)), file=out)
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict):
                _human(v, out, indent)
            elif isinstance(v, list):
                print(pad + "  ".join(_scalar(x) for x in v), file=out)
            else:
                print(pad + _scalar(v), file=out)
    else:
        print(pad + _scalar(value), file=out)


def _scalar(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def _emit(payload, args, out):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    else:
        _human(payload, out)


def _fail(args, kind, exc, out, err):
    if getattr(args, "json", False):
        print(json.dumps({"error": {"type": kind, "message": str(exc)}},
                         indent=2, sort_keys=True), file=out)
    else:
        print("error: %s" % exc, file=err)


def _degree_table(values):
    return {str(t): values[t] for t in sorted(values)}


def _hilbert_payload(hd):
    return {"values": _degree_table(hd.values), "polynomial": hd.poly_str()}


def _marked_payload(I):
    return [{"head": term_str(h.head), "body": polynomial_str(h.body)}
            for h in I]


def _report_payload(report):
    return {
        "mode": report.mode,
        "certified": report.certified,
        "agrees": report.agrees,
        "checked_up_to": report.checked_up_to,
        "degrees": list(report.degrees),
        "table": [list(row) for row in report.rows()],
        "mismatches": report.mismatches(),
    }


# --------------------------------------------------------------- commands


def cmd_ideal_check(args):
    ring, J = _load_ideal(args.input)
    dim, codim = dimension_codimension(J)
    payload = {
        "ring": ring_repr(ring),
        "generators": [term_str(e) for e in J.generators],
        "dim": dim,
        "codim": codim,
    }
    try:
        pommaret_basis(J)
        payload["quasi_stable"] = True
    except RingError:
        payload["quasi_stable"] = False
    return payload


def cmd_ideal_pommaret(args):
    _, J = _load_ideal(args.input)
    qs = pommaret_basis(J)
    return {
        "pommaret": [term_str(e) for e in qs.pommaret],
        "regularity": regularity(qs),
        "satiety": satiety(qs),
    }


def cmd_ideal_truncate(args):
    ring, J = _load_ideal(args.input)
    cut = truncate(J, args.deg)
    return {
        "ring": ring_repr(ring),
        "degree": args.deg,
        "generators": [term_str(e) for e in cut.generators],
    }


def cmd_ideal_dim(args):
    _, J = _load_ideal(args.input)
    dim, codim = dimension_codimension(J)
    return {"dim": dim, "codim": codim}


def cmd_marked_check(args):
    _, ms = _load_marked(args.input)
    check = is_marked_basis(ms)
    payload = {"is_marked_basis": check.is_basis}
    if not check.is_basis:
        payload["failures"] = [
            {"head": term_str(a), "variable": "x%d" % i,
             "remainder": polynomial_str(rem)}
            for a, i, rem in check.failures]
    return payload


def cmd_marked_reduce(args):
    ring, ms = _load_marked(args.input)
    f = parse_polynomial(ring, args.poly)
    sr = reduce(ms, f)
    return {
        "remainder": polynomial_str(sr.remainder),
        "in_span": sr.remainder.is_zero(),
        "coefficients": {term_str(a): polynomial_str(c)
                         for a, c in sorted(sr.coefficients.items())},
    }


def cmd_marked_family(args):
    fam = _load_family(args)
    return {
        "parameters": list(fam.parameters),
        "restricted": sorted(fam.restriction),
        "equations": [q.render(fam.param_ring.names) for q in fam.equations],
    }


def cmd_cm_saturate(args):
    _, I = _load_basis(args.input)
    sat = saturate(I)
    return {
        "m": sat.m,
        "is_trivial": sat.is_trivial(),
        "socle_like_generators": [polynomial_str(g)
                                  for g in sat.socle_like_generators],
        "hilbert": _hilbert_payload(
            sat.hilbert_function(args.bound or regularity(I.qs) + 1)),
    }


def cmd_cm_section(args):
    _, I = _load_basis(args.input)
    sec = hyperplane_section(I)
    return {"ring": ring_repr(sec.ring), "marked": _marked_payload(sec)}


def cmd_cm_check(args):
    _, I = _load_basis(args.input)
    verdict = cm_check(I, m=args.m)
    steps = []
    for st in verdict.trace:
        d = {"step": st.step}
        if st.note:
            d["note"] = st.note
        if st.match is not None:
            d["difference"] = _degree_table(st.difference.values)
            d["section_hilbert"] = _degree_table(st.section_hilbert.values)
            d["match"] = st.match
        steps.append(d)
    return {"is_cm": verdict.is_cm, "trace": steps}


def cmd_cm_hilbert(args):
    _, I = _load_basis(args.input)
    up_to = args.bound if args.bound is not None else regularity(I.qs) + 1
    return _hilbert_payload(hilbert_function(I, up_to))


def cmd_gor_socle(args):
    _, I = _load_basis(args.input)
    basis = socle(I)
    return {"socle": [polynomial_str(e) for e in basis],
            "dimension": len(basis)}


def cmd_gor_check(args):
    _, I = _load_basis(args.input)
    return {"gorenstein": is_gorenstein(I)}


def cmd_gor_locus(args):
    locus = gorenstein_locus(_load_family(args))
    return {
        "parameters": list(locus.family.parameters),
        "equations": [q.render(locus.family.param_ring.names)
                      for q in locus.family.equations],
        "minors": locus.minor_strings(),
        "description": locus.description,
    }


def cmd_ci_border(args):
    _, J = _load_ideal(args.input)
    bd = border(pommaret_basis(J))
    return {
        "border": [term_str(e) for e in bd.terms],
        "outside_pommaret": [term_str(e) for e in bd.outside_pommaret],
    }


def cmd_ci_basis(args):
    _, I = _load_basis(args.input)
    bb = border_basis(I)
    return {"elements": _marked_payload(bb)}


def cmd_ci_matrix(args):
    _, I = _load_basis(args.input)
    bb = border_basis(I)
    mt = minimization_matrix(I, bb, args.deg)
    dom = I.ring.domain
    return {
        "degree": mt.degree,
        "rows": [term_str(e) for e in mt.row_labels],
        "columns": mt.column_labels(),
        "matrix": [[dom.coeff_str(c) for c in row] for row in mt.matrix.rows],
        "reduced": [[dom.coeff_str(c) for c in row]
                    for row in mt.reduced.rows],
    }


def cmd_ci_check(args):
    _, I = _load_basis(args.input)
    report = minimality_report(I)
    return {
        "complete_intersection": report.is_complete_intersection,
        "minimal_generator_count": report.minimal_generator_count,
        "codimension": report.codimension,
        "counts_by_degree": _degree_table(report.counts_by_degree()),
        "verdicts": [{"head": term_str(v.head), "degree": v.degree,
                      "dependent": v.dependent,
                      "witness": v.witness}
                     for v in report.verdicts],
    }


def cmd_ci_locus(args):
    locus = ci_locus(_load_family(args))
    return {
        "parameters": list(locus.family.parameters),
        "codimension": locus.codimension,
        "required_dependent": locus.required_dependent,
        "inequalities": locus.inequality_strings(),
    }


def cmd_regseq_find(args):
    _, I = _load_basis(args.input)
    seed = args.seed if args.seed is not None else random.randrange(2 ** 31)
    search = regseq_find(I, attempts=args.attempts, seed=seed,
                         bound=args.bound)
    payload = {
        "found": search.found,
        "seed": seed,
        "attempts_used": search.attempts_used,
        "blocks": search.partition.head_subsets(),
    }
    if search.candidate is not None:
        payload["coefficients"] = search.candidate.coefficients
        payload["polys"] = [search.candidate.poly_string(j)
                            for j in range(len(search.candidate))]
    if search.report is not None:
        payload["report"] = _report_payload(search.report)
    return payload


def cmd_regseq_verify(args):
    ring, dicts = read_poly_dicts(_read_file(args.polys))
    report = regseq_verify(dicts, bound=args.bound, ring=ring)
    return _report_payload(report)


# --------------------------------------------------------- fixture compare


_SPLIT_RE = re.compile(r" ([+-]) ")


def _flip_sign(s):
    parts = _SPLIT_RE.split(s)
    head = parts[0]
    out = head[1:] if head.startswith("-") else "-" + head
    for op, term in zip(parts[1::2], parts[2::2]):
        out += " %s %s" % ("-" if op == "+" else "+", term)
    return out


def _sign_normal(s):
    return _flip_sign(s) if s.startswith("-") else s


def _multiset_diff(a, b):
    left = sorted(a)
    right = sorted(b)
    only_a, only_b = [], []
    while left or right:
        if not left:
            only_b.append(right.pop(0))
        elif not right:
            only_a.append(left.pop(0))
        elif left[0] == right[0]:
            left.pop(0)
            right.pop(0)
        elif left[0] < right[0]:
            only_a.append(left.pop(0))
        else:
            only_b.append(right.pop(0))
    return only_a, only_b


def _compare(a, b, path, key=None):
    if isinstance(a, dict) and isinstance(b, dict):
        out = []
        for k in sorted(set(a) | set(b)):
            p = "%s.%s" % (path, k) if path else k
            if k not in a:
                out.append({"path": p, "computed": None, "fixture": b[k]})
            elif k not in b:
                out.append({"path": p, "computed": a[k], "fixture": None})
            else:
                out.extend(_compare(a[k], b[k], p, key=k))
        return out
    if isinstance(a, list) and isinstance(b, list):
        if (key in UNORDERED_KEYS
                and all(isinstance(x, str) for x in a + b)):
            only_a, only_b = _multiset_diff([_sign_normal(x) for x in a],
                                            [_sign_normal(x) for x in b])
            if only_a or only_b:
                return [{"path": path, "computed": only_a,
                         "fixture": only_b}]
            return []
        out = []
        for i in range(max(len(a), len(b))):
            p = "%s[%d]" % (path, i)
            if i >= len(a):
                out.append({"path": p, "computed": None, "fixture": b[i]})
            elif i >= len(b):
                out.append({"path": p, "computed": a[i], "fixture": None})
            else:
                out.extend(_compare(a[i], b[i], p, key=key))
        return out
    if a != b or type(a) is not type(b):
        return [{"path": path or "$", "computed": a, "fixture": b}]
    return []


def _load_json_object(path, role):
    try:
        obj = json.loads(_read_file(path))
    except json.JSONDecodeError as exc:
        raise FormatError("%s %s: %s" % (role, path, exc)) from exc
    if not isinstance(obj, dict):
        raise FormatError("%s %s: top level must be a JSON object"
                          % (role, path))
    return obj


def cmd_fixture_compare(args):
    computed = _load_json_object(args.computed, "computed")
    fixture = _load_json_object(args.fixture, "fixture")
    diffs = _compare(computed, fixture, "")
    return {"match": not diffs, "diffs": diffs}, (0 if not diffs else 1)


# ----------------------------------------------------------------- parser


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit one JSON object instead of plain lines")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized commands (printed back)")
    common.add_argument("--attempts", type=int, default=20,
                        help="tries for randomized searches (default 20)")
    common.add_argument("--bound", type=int, default=None,
                        help="degree horizon override where applicable")

    parser = argparse.ArgumentParser(
        prog="markedbases",
        description="Marked bases over quasi-stable ideals: structure "
                    "checks by exact linear algebra.")
    groups = parser.add_subparsers(dest="group", metavar="command",
                                   required=True)

    def leaf(sub, name, func, help_text, **opts):
        q = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kw in opts.items():
            q.add_argument("--" + flag, **kw)
        q.set_defaults(func=func)
        return q

    infile = {"required": True, "metavar": "FILE"}

    g = groups.add_parser("ideal", help="monomial ideal facts")
    sub = g.add_subparsers(dest="action", metavar="action", required=True)
    leaf(sub, "check", cmd_ideal_check,
         "quasi-stability, dimension and codimension",
         input=dict(infile, help="ideal file"))
    leaf(sub, "pommaret", cmd_ideal_pommaret,
         "Pommaret basis with regularity and satiety",
         input=dict(infile, help="ideal file"))
    leaf(sub, "truncate", cmd_ideal_truncate,
         "generators of the degree-t truncation",
         input=dict(infile, help="ideal file"),
         deg=dict(type=int, required=True, metavar="T"))
    leaf(sub, "dim", cmd_ideal_dim, "dimension and codimension only",
         input=dict(infile, help="ideal file"))

    g = groups.add_parser("marked", help="marked sets and families")
    sub = g.add_subparsers(dest="action", metavar="action", required=True)
    leaf(sub, "check", cmd_marked_check, "marked-basis criterion",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "reduce", cmd_marked_reduce,
         "involutive reduction of one polynomial",
         input=dict(infile, help="marked-set file"),
         poly=dict(required=True, metavar="POLY"))
    leaf(sub, "family", cmd_marked_family,
         "defining equations of the marked family",
         ideal=dict(infile, help="ideal file"),
         restrict=dict(default="", metavar="NAMES",
                       help="comma-separated parameter names or globs "
                            "forced to zero"))

    g = groups.add_parser("cm", help="saturation, sections, the decision loop")
    sub = g.add_subparsers(dest="action", metavar="action", required=True)
    leaf(sub, "saturate", cmd_cm_saturate, "saturation by the last variable",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "section", cmd_cm_section, "generic hyperplane section",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "check", cmd_cm_check, "Cohen-Macaulay decision with trace",
         input=dict(infile, help="marked-set file"),
         m=dict(type=int, default=None, metavar="M",
                help="truncation floor threaded through the loop"))
    leaf(sub, "hilbert", cmd_cm_hilbert, "Hilbert function of the quotient",
         input=dict(infile, help="marked-set file"))

    g = groups.add_parser("gor", help="socle and Gorenstein structure")
    sub = g.add_subparsers(dest="action", metavar="action", required=True)
    leaf(sub, "socle", cmd_gor_socle, "socle basis of an Artinian quotient",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "check", cmd_gor_check, "Gorenstein verdict",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "locus", cmd_gor_locus,
         "minors cutting the non-Gorenstein part of a family",
         ideal=dict(infile, help="ideal file"),
         restrict=dict(default="", metavar="NAMES"))

    g = groups.add_parser("ci", help="borders and complete intersections")
    sub = g.add_subparsers(dest="action", metavar="action", required=True)
    leaf(sub, "border", cmd_ci_border, "border terms of an Artinian ideal",
         input=dict(infile, help="ideal file"))
    leaf(sub, "basis", cmd_ci_basis, "border basis elements",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "matrix", cmd_ci_matrix, "minimization matrix at a degree",
         input=dict(infile, help="marked-set file"),
         deg=dict(type=int, required=True, metavar="T"))
    leaf(sub, "check", cmd_ci_check, "complete-intersection verdict",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "locus", cmd_ci_locus,
         "inequalities cutting the complete-intersection part of a family",
         ideal=dict(infile, help="ideal file"),
         restrict=dict(default="", metavar="NAMES"))

    g = groups.add_parser("regseq", help="regular sequences from the basis")
    sub = g.add_subparsers(dest="action", metavar="action", required=True)
    leaf(sub, "find", cmd_regseq_find,
         "sample block combinations until one verifies",
         input=dict(infile, help="marked-set file"))
    leaf(sub, "verify", cmd_regseq_verify,
         "rank verification of a candidate sequence",
         polys=dict(infile, help="polynomial list file"))

    g = groups.add_parser("fixture", help="compare result files")
    sub = g.add_subparsers(dest="action", metavar="action", required=True)
    leaf(sub, "compare", cmd_fixture_compare,
         "diff two JSON result files up to sign and order",
         computed=dict(infile, help="freshly computed JSON"),
         fixture=dict(infile, help="committed fixture JSON"))

    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        result = args.func(args)
    except (FormatError, ParseError) as exc:
        _fail(args, "format", exc, out, err)
        return 2
    except OSError as exc:
        _fail(args, "io", exc, out, err)
        return 1
    except RingError as exc:
        _fail(args, "domain", exc, out, err)
        return 1
    payload, code = result if isinstance(result, tuple) else (result, 0)
    _emit(payload, args, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
