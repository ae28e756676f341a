"""Command line front end: solve cases, classify representations, reconcile.

Subcommands: solve, classify, dims, verify, compare, word-eval.  All output
is JSON on stdout (or --out); logs go to stderr.  Reports are deterministic:
no timestamps, sorted keys, exact coordinates serialized as coefficient
strings, so re-running a config byte-reproduces the report.

Exit codes: 0 ok, 3 step budget exceeded, 4 reconciliation or certificate
mismatch, 5 internal error (argparse itself uses 2 for usage errors).
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from math import gcd

from .cyclotomic import CycloNum, galois_group
from .invariants import (branch_fixing_subgroup, canonical_signature,
                         cusp_classify, degenerate_member_exists,
                         galois_orbits, hermitian_form, is_irreducible,
                         lift_check)
from .linalg import is_scalar_mat, mat_apply
from .poly import BudgetExceeded
from .presentation import Presentation, Word
from .reference import (expected_table_row, published_alpha_points,
                        type_one_lattices)
from .repfamily import CASES, RepPoint, family
from .solver import (DENOM_BOUND, SOLVE_PRECISION, SolveError,
                     dimension_scan, identity_reflection_rep, solve_case,
                     verify, verify_matrices)

EXIT_OK = 0
EXIT_BUDGET = 3
EXIT_MISMATCH = 4
EXIT_INTERNAL = 5

SCHEMA = 1

# side-effort cap for the supplementary both-regular dimension scan during a
# full classify run (the dims subcommand takes whatever budget is configured)
DIMS_BUDGET = 10 ** 4

log = logging.getLogger("dmrep")


# -- exact JSON serialization --------------------------------------------------


def cyc_json(v):
    v = v.min_conductor()
    return {"conductor": v.n, "coeffs": [str(Fraction(c)) for c in v.coeffs]}


def cyc_from_json(obj):
    return CycloNum(obj["conductor"], [Fraction(c) for c in obj["coeffs"]])


def mat_json(M):
    return [[cyc_json(e) for e in row] for row in M]


def mat_from_json(rows):
    return tuple(tuple(cyc_from_json(e) for e in row) for row in rows)


def field_label(n):
    return "Q" if n == 1 else "Q(zeta_%d)" % n


def branch_json(branch):
    if not branch:
        return None
    out = {}
    for key in sorted(branch):
        v = branch[key]
        if isinstance(v, CycloNum):
            out[key] = cyc_json(v)
        elif isinstance(v, tuple):
            out[key] = list(v)
        else:
            out[key] = v
    return out


def point_json(pt):
    return {
        "case": pt.case,
        "p": pt.p,
        "k": pt.k,
        "branch": branch_json(pt.branch),
        "values": {g: cyc_json(v) for g, v in sorted(pt.values.items())},
        "J": mat_json(pt.J),
        "R": mat_json(pt.R),
        "relator_scalars": {w: cyc_json(s)
                            for w, s in sorted(pt.relator_scalars.items())},
        "field": pt.matrix_field_conductor(),
    }


def outcome_json(out, with_points=True):
    d = {
        "case": out.case,
        "p": out.p,
        "k": out.k,
        "branch": branch_json(out.branch),
        "status": out.status,
        "dimension": out.dimension,
        "count": out.count,
        "std_monomials": out.std_monomials,
    }
    if with_points:
        d["points"] = [point_json(pt) for pt in out.points]
        d["unresolved"] = _plain(out.unresolved)
    return d


def _plain(obj):
    """Recursively strip exact types down to JSON-safe values."""
    if isinstance(obj, CycloNum):
        return cyc_json(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def emit(doc, out_path):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


# -- classification pipeline ---------------------------------------------------


def proper_reflection_orders(p):
    """Orders d | p, d > 1, a reflection image of R1 may have."""
    return [d for d in range(2, p + 1) if p % d == 0]


def type_preserving_outcomes(p, k, precision=SOLVE_PRECISION,
                             denom_bound=DENOM_BOUND, budget=None):
    """Solve every type-preserving family: reflections of each order d | p
    (one eigenvalue branch; the others arrive by Galois closure), both
    degenerate block forms, and the identity-reflection special point."""
    outcomes, points = [], []
    for d in proper_reflection_orders(p):
        for case in ("refl_regular", "refl_degenerate_1", "refl_degenerate_2"):
            fam = family(case, p, k, refl_order=d)
            log.info("solving %s (order %d)", case, d)
            out = solve_case(fam, precision, denom_bound, budget)
            outcomes.append(out)
            points.extend(out.points)
    idpt, cert = identity_reflection_rep(p, k)
    if idpt is not None:
        points.append(idpt)
    return outcomes, points, idpt


def galois_close_points(points):
    """Close certified points under the full Galois action on matrix entries.

    Relator coefficients are rational, so every automorphism image of a
    certified representation is again one; each image is re-verified exactly
    and either joins the set or is flagged as a violation.
    """
    seen = {}
    order = []
    for pt in points:
        key = pt.key()
        if key not in seen:
            seen[key] = pt
            order.append(key)
    queue = list(points)
    violations = []
    while queue:
        pt = queue.pop()
        n = pt.conductor
        if n == 1:
            continue
        for a in galois_group(n):
            if a == 1:
                continue
            Jm = mat_apply(pt.J, lambda e: e.galois(a))
            Rm = mat_apply(pt.R, lambda e: e.galois(a))
            values = {g: v.embed(n).galois(a).min_conductor()
                      for g, v in pt.values.items()}
            branch = dict(pt.branch) if pt.branch else None
            if branch and isinstance(branch.get("x"), CycloNum):
                branch["x"] = branch["x"].embed(n).galois(a).min_conductor()
            cert = verify_matrices(pt.p, pt.k, Jm, Rm)
            if not cert["ok"]:
                violations.append({"source": repr(pt), "automorphism": a,
                                   "failing": cert["failing"]})
                continue
            scalars = {w: d["scalar"] for w, d in cert["relators"].items()}
            img = RepPoint(pt.case, pt.p, pt.k, values, Jm, Rm, scalars,
                           branch=branch)
            key = img.key()
            if key not in seen:
                seen[key] = img
                order.append(key)
                queue.append(img)
    return [seen[k] for k in order], violations


def orbit_value_dict(pt):
    """Coordinates that pin the representation down for the Galois action:
    the parameter values plus the reflection-eigenvalue branch when fixed."""
    d = dict(pt.values)
    if pt.branch and isinstance(pt.branch.get("x"), CycloNum):
        d["x"] = pt.branch["x"]
    return d


def full_galois_orbits(points):
    """Partition the closed point list into Galois orbits (full group of the
    common field, per case)."""
    groups = {}
    for i, pt in enumerate(points):
        groups.setdefault(pt.case, []).append(i)
    orbits = []
    violations = []
    for case in sorted(groups):
        idxs = groups[case]
        dicts = [orbit_value_dict(points[i]) for i in idxs]
        res = galois_orbits(dicts)
        for orb in res["orbits"]:
            orbits.append(sorted(idxs[j] for j in orb))
        for v in res["violations"]:
            violations.append({"case": case, "point": idxs[v["point"]],
                               "automorphism": v["automorphism"]})
    orbits.sort(key=lambda o: o[0])
    return orbits, violations


def default_order_bound(p, k):
    m = 3
    for v in (p, 2 * k):
        m = m * v // gcd(m, v)
    return 2 * m


def classify_point(pt, order_bound):
    herm = hermitian_form(pt.J, pt.R)
    if herm["form"] is not None:
        pos, neg, zero = canonical_signature(herm["form"])
        if zero == 0:
            form_label = "(%d,%d)" % (pos, neg)
        else:
            form_label = "degenerate rank %d" % (3 - zero)
        form_coarse = "degenerate" if zero else form_label
    elif herm["basis"]:
        # higher-dimensional space of invariant forms (reducible points):
        # degenerate members always exist there
        deg = degenerate_member_exists(herm["basis"])
        form_label = "degenerate space dim %d" % len(herm["basis"])
        form_coarse = "degenerate" if deg else "ambiguous"
    else:
        form_label = "none"
        form_coarse = "none"
    irr = is_irreducible(pt.J, pt.R)
    if irr["irreducible"] and form_coarse == "degenerate":
        raise ArithmeticError("irreducible point with degenerate form: %r" % pt)
    lift = lift_check(pt)
    cusp = cusp_classify(pt, order_bound)
    rec = {
        "point": point_json(pt),
        "field": pt.matrix_field_conductor(),
        "field_label": field_label(pt.matrix_field_conductor()),
        "hermitian": {
            "signs": list(herm["signs"]) if herm["signs"] else None,
            "kernel_dims": {"%d,%d" % k: v
                            for k, v in sorted(herm["kernel_dims"].items())},
            "form": mat_json(herm["form"]) if herm["form"] is not None else None,
            "basis_dim": len(herm["basis"]) if herm["basis"] else 0,
            "ambiguous": herm["ambiguous"],
        },
        "signature": form_label,
        "form_coarse": form_coarse,
        "irreducible": irr["irreducible"],
        "irreducibility_route": irr["route"],
        "liftable": lift["liftable_within_bound"],
        "lift_witness": ([cyc_json(w) for w in lift["witness"]]
                         if lift["witness"] else None),
        "lift_conclusive": lift["conclusive"],
        "lift_bound": lift["bound"],
        "cusp_type": cusp["type"],
        "cusp": {kk: vv for kk, vv in sorted(cusp.items())
                 if kk not in ("type",) and not isinstance(vv, CycloNum)},
        "factors_strict": cusp["factors_strict"],
        "factors": cusp["factors"],
    }
    return rec


def aggregate_table_row(p, k, classified, orbits, compact):
    """Synthesize the published-table row shape from classified points."""
    orbit_rows = []
    for oid, orb in enumerate(orbits):
        members = [classified[i] for i in orb]
        rep = members[0]
        for m in members[1:]:
            if m["form_coarse"] != rep["form_coarse"]:
                raise ArithmeticError("signature varies within a Galois orbit")
            if m["irreducible"] != rep["irreducible"]:
                raise ArithmeticError("reducibility varies within a Galois orbit")
        field = max(m["field"] for m in members)
        case = rep["point"]["case"]
        orbit_rows.append({
            "id": oid,
            "case": case,
            "size": len(orb),
            "members": list(orb),
            "field": field,
            "form": rep["form_coarse"] if rep["form_coarse"] != "degenerate"
                    else "degenerate",
            "signature": rep["signature"],
            "irreducible": rep["irreducible"],
            "factors": rep["factors"],
            "factors_strict": rep["factors_strict"],
        })
    subrows = {}
    for row in orbit_rows:
        key = (row["field"], row["form"])
        sub = subrows.setdefault(key, {"field": key[0], "form": key[1],
                                       "irreducible": 0, "reducible": [0, 0],
                                       "factors": 0})
        if row["irreducible"]:
            sub["irreducible"] += 1
        elif row["case"] in ("refl_regular",):
            sub["reducible"][0] += 1
        else:
            sub["reducible"][1] += 1
        if row["factors"]:
            sub["factors"] += 1
    ordered = [subrows[key] for key in sorted(subrows, key=lambda t: (-t[0], t[1]))]
    return {
        "p": p,
        "k": k,
        "compact": compact,
        "total": len(classified),
        "orbits": len(orbits),
        "subrows": ordered,
        "factors_total": sum(s["factors"] for s in ordered),
        "factors_total_strict": sum(1 for r in orbit_rows if r["factors_strict"]),
    }, orbit_rows


def compare_rows(actual, expected):
    """Column-by-column diff of an aggregate row against a published row."""
    diff = []

    def check(column, a, e):
        if a != e:
            diff.append({"column": column, "actual": a, "expected": e})

    check("Total", actual.get("total"), expected.get("total"))
    check("Galois Orbits", actual.get("orbits"), expected.get("orbits"))
    akeys = {(s["field"], s["form"]): s for s in actual.get("subrows", [])}
    ekeys = {(s["field"], s["form"]): s for s in expected.get("subrows", [])}
    for key in sorted(set(akeys) | set(ekeys), key=lambda t: (-t[0], t[1])):
        tag = "%s %s" % (field_label(key[0]), key[1])
        if key not in akeys:
            diff.append({"column": tag, "actual": None,
                         "expected": ekeys[key]})
            continue
        if key not in ekeys:
            diff.append({"column": tag, "actual": akeys[key],
                         "expected": None})
            continue
        a, e = akeys[key], ekeys[key]
        check("%s Irreducible" % tag, a["irreducible"], e["irreducible"])
        check("%s Reducible" % tag, list(a["reducible"]), list(e["reducible"]))
        check("%s Factors" % tag, a["factors"], e["factors"])
    return diff


def classify_run(p, k, precision=SOLVE_PRECISION, denom_bound=DENOM_BOUND,
                 budget=None, cases=None, recheck=False, expectations=None):
    """The full pipeline for one lattice: solve, close, classify, aggregate.

    Returns (report dict, exit code).  cases restricts which families are
    solved; the aggregate row is only built from the full type-preserving run.
    """
    pres = Presentation(p, k)  # validates (p, k)
    report = {"schema": SCHEMA,
              "config": {"p": p, "k": k, "precision": precision,
                         "denom_bound": denom_bound,
                         "budget": budget,
                         "cases": sorted(cases) if cases else None,
                         "recheck": bool(recheck)},
              "cases": [], "classified": [], "orbits": [],
              "violations": [], "aggregate": None, "reconciliation": None}
    code = EXIT_OK

    wanted = set(cases) if cases else set(CASES) | {"identity_reflection"}
    for c in wanted - set(CASES) - {"identity_reflection"}:
        raise ValueError("unknown case %r" % (c,))

    full = cases is None

    points = []
    refl_wanted = [c for c in ("refl_regular", "refl_degenerate_1",
                               "refl_degenerate_2") if c in wanted]
    if refl_wanted:
        for d in proper_reflection_orders(p):
            for case in refl_wanted:
                fam = family(case, p, k, refl_order=d)
                log.info("solving %s (reflection order %d)", case, d)
                out = solve_case(fam, precision, denom_bound, budget)
                report["cases"].append(outcome_json(out))
                points.extend(out.points)
    if "identity_reflection" in wanted:
        idpt, idcert = identity_reflection_rep(p, k)
        if idpt is not None:
            points.append(idpt)
            report["cases"].append({
                "case": "identity_reflection", "p": p, "k": k,
                "branch": branch_json(idpt.branch), "status": "points",
                "dimension": 0, "count": 1, "std_monomials": 1,
                "points": [point_json(idpt)], "unresolved": []})

    # non-type-preserving families: dimension information only.  The inverted
    # case's emptiness is part of the classification claim and gets the full
    # budget; the both-regular scan is supplementary and much harder, so in a
    # full run it gets a bounded side-effort and reports honestly when that
    # does not suffice.
    for case in ("inverted", "both_regular"):
        if case not in wanted:
            continue
        dims_budget = budget
        if case == "both_regular" and budget is None:
            dims_budget = DIMS_BUDGET
        pairs = [(a, b) for a in range(1, p) for b in range(a + 1, p)]
        for pair in pairs:
            fam = family(case, p, k, eigen_pair=pair)
            log.info("dimension of %s %s", case, pair)
            try:
                out = solve_case(fam, precision, denom_bound, dims_budget,
                                 enumerate_points=False)
                report["cases"].append(outcome_json(out, with_points=False))
            except BudgetExceeded as e:
                log.warning("%s %s: budget exceeded after %d steps",
                            case, pair, e.steps)
                report["cases"].append({
                    "case": case, "p": p, "k": k,
                    "branch": {"eigen_pair": list(pair)},
                    "status": "budget_exceeded", "dimension": None,
                    "count": -1, "std_monomials": -1})
                if not full:
                    code = max(code, EXIT_BUDGET)

    closed, violations = galois_close_points(points)
    report["violations"] = violations
    orbits, orbit_violations = full_galois_orbits(closed)
    report["violations"] += orbit_violations

    order_bound = default_order_bound(p, k)
    classified = [classify_point(pt, order_bound) for pt in closed]
    for rec, pt in zip(classified, closed):
        rec["orbit"] = None
    for oid, orb in enumerate(orbits):
        for i in orb:
            classified[i]["orbit"] = oid
    report["classified"] = classified

    if full:
        row = expected_table_row(p, k)
        compact = row["compact"] if row else None
        aggregate, orbit_rows = aggregate_table_row(p, k, classified, orbits,
                                                    compact)
        report["orbits"] = orbit_rows
        report["aggregate"] = aggregate
        expected = expectations if expectations is not None \
            else expected_table_row(p, k)
        if expected is not None:
            diff = compare_rows(aggregate, expected)
            report["reconciliation"] = {"expected": expected, "diff": diff,
                                        "ok": not diff}
            if diff:
                code = max(code, EXIT_MISMATCH)
    else:
        report["orbits"] = [{"id": i, "members": orb}
                            for i, orb in enumerate(orbits)]

    if recheck:
        rc = recheck_report(report)
        report["recheck"] = rc
        if not rc["ok"]:
            code = max(code, EXIT_MISMATCH)
    return report, code


def recheck_report(report):
    """Re-verify every certificate in a report from scratch."""
    ok = True
    checked = 0
    failures = []
    for rec in report["classified"]:
        pt = rec["point"]
        Jm = mat_from_json(pt["J"])
        Rm = mat_from_json(pt["R"])
        cert = verify_matrices(pt["p"], pt["k"], Jm, Rm)
        checked += 1
        if not cert["ok"]:
            ok = False
            failures.append({"case": pt["case"], "values": pt["values"],
                             "failing": cert["failing"]})
    return {"ok": ok, "checked": checked, "failures": failures}


# -- subcommands ----------------------------------------------------------------


def cmd_solve(args):
    cases = args.cases.split(",") if args.cases else list(CASES)
    doc = {"schema": SCHEMA,
           "config": {"p": args.p, "k": args.k, "cases": cases,
                      "precision": args.precision,
                      "denom_bound": args.denom_bound, "budget": args.budget},
           "outcomes": []}
    code = EXIT_OK
    for case in cases:
        if case in ("inverted", "both_regular"):
            pairs = [(a, b) for a in range(1, args.p)
                     for b in range(a + 1, args.p)]
        else:
            pairs = [None]
        for pair in pairs:
            fam = family(case, args.p, args.k, eigen_pair=pair)
            log.info("solving %s %s", case, pair or "")
            try:
                out = solve_case(fam, args.precision, args.denom_bound,
                                 args.budget)
                doc["outcomes"].append(outcome_json(out))
            except BudgetExceeded as e:
                doc["outcomes"].append({"case": case, "p": args.p, "k": args.k,
                                        "branch": branch_json(fam.branch),
                                        "status": "budget_exceeded",
                                        "steps": e.steps})
                code = max(code, EXIT_BUDGET)
    emit(doc, args.out)
    return code


def cmd_classify(args):
    cases = set(args.cases.split(",")) if args.cases else None
    expectations = None
    if args.expect:
        with open(args.expect) as f:
            expectations = json.load(f)
    report, code = classify_run(args.p, args.k, precision=args.precision,
                                denom_bound=args.denom_bound,
                                budget=args.budget, cases=cases,
                                recheck=args.recheck,
                                expectations=expectations)
    emit(report, args.out)
    return code


def cmd_dims(args):
    cases = args.cases.split(",") if args.cases else None
    dims = dimension_scan(args.p, args.k, cases=cases, budget=args.budget)
    doc = {"schema": SCHEMA,
           "config": {"p": args.p, "k": args.k, "budget": args.budget,
                      "cases": cases},
           "dimensions": dims}
    emit(doc, args.out)
    if any(isinstance(v, str) and v.startswith("budget_exceeded")
           for v in dims.values()):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args):
    doc = {"schema": SCHEMA, "config": {"p": args.p, "k": args.k},
           "checked": [], "ok": True}
    if args.report:
        with open(args.report) as f:
            report = json.load(f)
        rc = recheck_report(report)
        doc["checked"] = rc["failures"]
        doc["count"] = rc["checked"]
        doc["ok"] = rc["ok"]
    else:
        if (args.p, args.k) != (3, 6):
            raise ValueError("bundled points exist only for (3,6); "
                             "pass --report for other lattices")
        fam = family("refl_regular", args.p, args.k)
        for name, values in published_alpha_points():
            cert, pt = verify(fam, values)
            doc["checked"].append({"name": name, "ok": cert["ok"]})
            if not cert["ok"]:
                doc["ok"] = False
        doc["count"] = len(doc["checked"])
    emit(doc, args.out)
    return EXIT_OK if doc["ok"] else EXIT_MISMATCH


def cmd_compare(args):
    with open(args.report) as f:
        report = json.load(f)
    if args.expect:
        with open(args.expect) as f:
            expected = json.load(f)
    else:
        p = args.p if args.p is not None else report["config"]["p"]
        k = args.k if args.k is not None else report["config"]["k"]
        expected = expected_table_row(p, k)
        if expected is None:
            raise ValueError("no bundled expectations for (%s,%s)" % (p, k))
    actual = report.get("aggregate")
    if actual is None:
        raise ValueError("report has no aggregate row (classify with all cases)")
    diff = compare_rows(actual, expected)
    emit({"schema": SCHEMA, "diff": diff, "ok": not diff}, args.out)
    return EXIT_OK if not diff else EXIT_MISMATCH


def cmd_word_eval(args):
    pres = Presentation(args.p, args.k)
    named = {"J3": pres.relators()["J3"], "Rp": pres.relators()["Rp"],
             "RJ2k": pres.relators()["RJ2k"], "W": pres.relators()["W"],
             "R2": pres.cusp_r2(), "A1": pres.cusp_a1(),
             "cusp_center": pres.cusp_center()}
    word = named.get(args.word) or Word.parse(args.word, p=args.p)
    if args.alpha:
        table = dict(published_alpha_points())
        if args.alpha not in table:
            raise ValueError("unknown point %r (alpha1..alpha15)" % args.alpha)
        if (args.p, args.k) != (3, 6):
            raise ValueError("bundled points are for (3,6)")
        fam = family("refl_regular", args.p, args.k)
        cert, pt = verify(fam, table[args.alpha])
        if pt is None:
            raise ArithmeticError("bundled point failed its certificate")
        Jm, Rm = pt.J, pt.R
    elif args.values:
        with open(args.values) as f:
            data = json.load(f)
        Jm = mat_from_json(data["J"])
        Rm = mat_from_json(data["R"])
    else:
        raise ValueError("need --alpha NAME or --values FILE")
    n = Jm[0][0].n
    one = CycloNum.from_rational(1, n)
    M = word.evaluate(Jm, Rm, one)
    lam = is_scalar_mat(M, lambda e: e.is_zero())
    emit({"schema": SCHEMA, "word": repr(word), "matrix": mat_json(M),
          "scalar": cyc_json(lam) if lam is not None else None,
          "is_scalar": lam is not None}, args.out)
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="dmrep",
        description="Exact classification of Deligne-Mostow lattice "
                    "representations into PGL(3,C).")
    ap.add_argument("--verbose", "-v", action="count", default=0,
                    help="log progress to stderr (-vv for debug)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, pk_required=True):
        sp.add_argument("--p", type=int, required=pk_required)
        sp.add_argument("--k", type=int, required=pk_required)
        sp.add_argument("--out", help="write JSON here instead of stdout")

    def solver_flags(sp):
        sp.add_argument("--cases", help="comma-separated case names")
        sp.add_argument("--precision", type=int, default=SOLVE_PRECISION,
                        help="working precision in bits")
        sp.add_argument("--denom-bound", type=int, default=DENOM_BOUND,
                        help="largest denominator tried in reconstruction")
        sp.add_argument("--budget", type=int, default=None,
                        help="Groebner step budget")

    sp = sub.add_parser("solve", help="solve generator cases exactly")
    common(sp)
    solver_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("classify",
                        help="full pipeline with aggregate table row")
    common(sp)
    solver_flags(sp)
    sp.add_argument("--expect", help="expectations JSON (default: bundled)")
    sp.add_argument("--recheck", action="store_true",
                    help="re-verify all certificates from scratch")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("dims", help="ideal dimension per case")
    common(sp)
    sp.add_argument("--cases", help="comma-separated case names")
    sp.add_argument("--budget", type=int, default=None)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("verify",
                        help="re-verify certificates (bundled points or a report)")
    common(sp)
    sp.add_argument("--report", help="report JSON produced by classify")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("compare", help="diff a report against expectations")
    sp.add_argument("report", help="report JSON produced by classify")
    sp.add_argument("--expect", help="expectations JSON (default: bundled row)")
    sp.add_argument("--p", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("word-eval", help="evaluate a word at a point")
    common(sp)
    sp.add_argument("--word", required=True,
                    help="word like 'R1 J R1^2 J2' or a named relator/cusp word")
    sp.add_argument("--alpha", help="bundled point name (alpha1..alpha15)")
    sp.add_argument("--values", help="JSON file with explicit J and R")
    sp.set_defaults(func=cmd_word_eval)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as e:
        log.error("step budget exceeded after %d steps", e.steps)
        return EXIT_BUDGET
    except (OSError, json.JSONDecodeError, ValueError, SolveError) as e:
        log.error("%s", e)
        return EXIT_INTERNAL
    except ArithmeticError as e:
        log.error("internal consistency failure: %s", e)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
