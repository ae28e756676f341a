"""Solving the relator systems: enumeration, reconstruction, certification.

Pipeline per generator case: Groebner basis (grevlex) for triviality and
dimension; if zero-dimensional, a lex basis is solved numerically by
back-substitution at two working precisions (agreement of the solution counts
guards against clustering artifacts), every numeric point is reconstructed as
exact cyclotomic numbers (small fields by direct linear solve, bigger ones by
LLL integer relations), and reconstruction only counts once the exact point
passes the relator certificate.  Numbers never flow back from floats into the
exact layer without that certificate.
"""

from fractions import Fraction
from math import gcd

import mpmath
from sympy.polys.matrices import DomainMatrix
from sympy import ZZ

from .cyclotomic import CycloNum, euler_phi
from .linalg import identity, is_scalar_mat
from .poly import BudgetExceeded
from .repfamily import CASES, RepPoint, family, instantiate, relators_to_ideal

SOLVE_PRECISION = 120
DENOM_BOUND = 10 ** 4
CONDUCTOR_CAP = 72


class SolveError(Exception):
    pass


class SolveOutcome:
    """Result of solve_case: dimension information plus certified points."""

    __slots__ = ("case", "p", "k", "status", "dimension", "count", "points",
                 "unresolved", "std_monomials", "branch")

    def __init__(self, case, p, k, status, dimension, count, points,
                 unresolved, std_monomials, branch):
        self.case = case
        self.p = p
        self.k = k
        self.status = status
        self.dimension = dimension
        self.count = count
        self.points = points
        self.unresolved = unresolved
        self.std_monomials = std_monomials
        self.branch = branch

    def __repr__(self):
        return ("SolveOutcome(%s, p=%d, k=%d, %s, dim=%d, count=%d)"
                % (self.case, self.p, self.k, self.status, self.dimension, self.count))


# -- numeric back-substitution on a lex basis --------------------------------


def _poly_numeric_in_var(poly, assign, var_idx, prec):
    """Coefficients (ascending, mpc) of poly as univariate in var_idx, with all
    other used variables taken from assign (var index -> mpc)."""
    deg = max((e[var_idx] for e in poly.terms), default=0)
    out = [mpmath.mpc(0)] * (deg + 1)
    for e, c in poly.terms.items():
        val = c.approx(prec)
        for i, x in enumerate(e):
            if x and i != var_idx:
                val *= assign[i] ** x
        out[e[var_idx]] += val
    return out


def _trim_tiny(coeffs, tol):
    k = len(coeffs)
    while k > 0 and abs(coeffs[k - 1]) < tol:
        k -= 1
    return coeffs[:k]


def _poly_roots(coeffs, prec):
    """Roots of an ascending mpc coefficient list."""
    if len(coeffs) <= 1:
        return []
    with mpmath.workprec(prec + 30):
        rev = list(reversed(coeffs))
        try:
            return list(mpmath.polyroots(rev, maxsteps=200, extraprec=prec))
        except mpmath.libmp.NoConvergence:
            # multiple roots stall the iteration at full precision; a coarser
            # location still reconstructs, and exact division certifies it
            with mpmath.workprec(prec // 2 + 30):
                return list(mpmath.polyroots([mpmath.mpc(c) for c in rev],
                                             maxsteps=400, extraprec=prec // 2))


def numeric_solutions(gb_lex, ring, prec):
    """All numeric solutions of a zero-dimensional lex basis, by substituting
    variables from the last one upwards.

    Generic (no shape-lemma assumption): at each level the candidate roots are
    taken from the smallest-degree nonvanishing polynomial in the next
    variable and filtered against all others.
    """
    nv = ring.nvars()
    tol = mpmath.mpf(2) ** (-prec // 2)
    sols = []

    def descend(level, assign):
        # level counts assigned variables from the tail
        if level == nv:
            sols.append(dict(assign))
            return
        var_idx = nv - 1 - level
        cands = []
        others = []
        with mpmath.workprec(prec + 30):
            for g in gb_lex:
                used = g.variables_used()
                if any(i < var_idx for i in used):
                    continue
                co = _trim_tiny(_poly_numeric_in_var(g, assign, var_idx, prec), tol)
                if len(co) >= 2:
                    cands.append(co)
                elif len(co) == 1:
                    # nonzero constant: inconsistent branch
                    return
            if not cands:
                # variable unconstrained at this branch: should not happen for
                # a zero-dimensional ideal
                raise SolveError("unconstrained variable %s" % ring.gens[var_idx])
            cands.sort(key=len)
            roots = _poly_roots(cands[0], prec)
            for r in roots:
                ok = True
                for co in cands[1:]:
                    v = mpmath.mpc(0)
                    for c in reversed(co):
                        v = v * r + c
                    scale = max(abs(c) for c in co)
                    if abs(v) > tol * max(1, scale) * 100:
                        ok = False
                        break
                if ok:
                    assign[var_idx] = r
                    descend(level + 1, assign)
                    del assign[var_idx]

    descend(0, {})
    return sols


def cluster_points(points, nv, tol):
    """Deduplicate numeric points within tolerance; returns representatives."""
    reps = []
    for pt in points:
        for q in reps:
            if all(abs(pt[i] - q[i]) < tol for i in range(nv)):
                break
        else:
            reps.append(pt)
    return reps


# -- exact reconstruction ------------------------------------------------------


def default_conductors(cap=CONDUCTOR_CAP, max_phi=16):
    """Candidate conductors, cheapest fields first.  Conductors 2 mod 4 are
    skipped (Q(zeta_2m) = Q(zeta_m) for odd m)."""
    cands = [n for n in range(1, cap + 1)
             if euler_phi(n) <= max_phi and n % 4 != 2]
    return sorted(cands, key=lambda n: (euler_phi(n), n))


def reconstruct_value(z, conductors=None, denom_bound=DENOM_BOUND, prec=SOLVE_PRECISION):
    """Exact cyclotomic value from a numeric approximation, or None.

    Tries candidate conductors in order of field degree.  For phi(n) <= 2 the
    coordinates come from a direct 2x2 real solve with denominator-bounded
    rounding; for larger fields from an LLL integer relation between
    1, zeta, ..., zeta^(phi-1) and z.  A candidate is accepted only if it
    re-approximates to z within tolerance; callers must still run the exact
    relator certificate.
    """
    if conductors is None:
        conductors = default_conductors()
    with mpmath.workprec(prec + 20):
        tol = mpmath.mpf(2) ** (-prec // 2)
        for n in conductors:
            cand = _reconstruct_in(z, n, denom_bound, prec)
            if cand is None:
                continue
            err = abs(cand.approx(prec + 20) - z)
            if err < tol:
                return cand.min_conductor()
    return None


def _reconstruct_in(z, n, denom_bound, prec):
    phi = euler_phi(n)
    zeta_pows = [CycloNum.zeta(n, j).approx(prec + 20) for j in range(phi)]
    if phi == 1:
        if abs(z.imag) > mpmath.mpf(2) ** (-prec // 2):
            return None
        q = _round_fraction(z.real, denom_bound)
        if q is None:
            return None
        val = CycloNum.from_rational(q, n)
        return val
    if phi == 2:
        # solve c0 + c1 zeta = z in real coordinates
        a, b = zeta_pows[1].real, zeta_pows[1].imag
        if abs(b) < mpmath.mpf(2) ** (-prec):
            return None
        c1 = z.imag / b
        c0 = z.real - c1 * a
        q0 = _round_fraction(c0, denom_bound)
        q1 = _round_fraction(c1, denom_bound)
        if q0 is None or q1 is None:
            return None
        return CycloNum(n, [q0, q1])
    # LLL integer relation among zeta powers and z
    scale = mpmath.mpf(2) ** (prec * 3 // 5)
    rows = []
    for j in range(phi):
        rows.append([1 if i == j else 0 for i in range(phi + 1)]
                    + [int(mpmath.nint(zeta_pows[j].real * scale)),
                       int(mpmath.nint(zeta_pows[j].imag * scale))])
    rows.append([0] * phi + [1]
                + [int(mpmath.nint(z.real * scale)), int(mpmath.nint(z.imag * scale))])
    M = DomainMatrix([[ZZ(x) for x in row] for row in rows], (phi + 1, phi + 3), ZZ)
    try:
        red = M.lll()
    except Exception:
        return None
    best = None
    for row in red.to_list():
        vec = [int(x) for x in row]
        q = vec[phi]
        if q == 0:
            continue
        if abs(q) > denom_bound:
            continue
        # heuristic quality: residual must be small relative to scale
        resid = mpmath.mpf(abs(vec[phi + 1])) + abs(vec[phi + 2])
        size = sum(abs(v) for v in vec[:phi + 1])
        if resid > size * mpmath.mpf(2) ** (-prec // 5) * scale:
            continue
        coeffs = [Fraction(-vec[j], q) for j in range(phi)]
        if any(abs(c.denominator) > denom_bound for c in coeffs):
            continue
        cand = CycloNum(n, coeffs)
        if best is None or sum(abs(c.numerator) + c.denominator for c in coeffs) < best[0]:
            best = (sum(abs(c.numerator) + c.denominator for c in coeffs), cand)
    return best[1] if best else None


def _round_fraction(x, denom_bound):
    fr = Fraction(int(mpmath.nint(x * denom_bound * 2)), denom_bound * 2)
    return fr.limit_denominator(denom_bound)


def reconstruct_point(numeric_pt, ring, conductors=None,
                      denom_bound=DENOM_BOUND, prec=SOLVE_PRECISION):
    """Reconstruct all coordinates; returns dict var -> CycloNum, or None."""
    out = {}
    for i, g in enumerate(ring.gens):
        val = reconstruct_value(numeric_pt[i], conductors, denom_bound, prec)
        if val is None:
            return None
        out[g] = val
    return out


def univariate_roots_exact(coeffs, conductors=None, denom_bound=DENOM_BOUND,
                           prec=SOLVE_PRECISION):
    """Exact cyclotomic roots (with multiplicity) of an ascending CycloNum
    coefficient list.  Returns (list of (root, multiplicity), fully_split).

    Roots are located numerically, reconstructed, then certified by exact
    synthetic division; fully_split reports whether the whole degree was
    accounted for.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if len(coeffs) <= 1:
        return [], True
    if conductors is None:
        conductors = default_conductors()
    nc = 1
    for c in coeffs:
        nc = nc * c.n // gcd(nc, c.n)
    coeffs = [c.embed(nc) for c in coeffs]
    sf = _squarefree_part(coeffs)
    with mpmath.workprec(prec + 30):
        approx = [c.approx(prec) for c in sf]
        roots = _poly_roots(approx, prec)
        tol = mpmath.mpf(2) ** (-prec // 3)
        reps = cluster_points([(r,) for r in roots], 1, tol)
    found = []
    work = coeffs
    for (r,) in reps:
        cand = reconstruct_value(r, conductors, denom_bound, prec)
        if cand is None:
            continue
        mult = 0
        while True:
            q, rem = _synth_div(work, cand)
            if rem.is_zero() and len(work) > 1:
                work = q
                mult += 1
            else:
                break
        if mult:
            found.append((cand, mult))
    return found, len(work) == 1


def _upoly_divmod(a, b):
    """Euclidean division of ascending CycloNum coefficient lists."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = lb.inverse()
    q = []
    while len(a) - 1 >= db and any(not c.is_zero() for c in a):
        while a and a[-1].is_zero():
            a.pop()
        if len(a) - 1 < db:
            break
        f = a[-1] * inv
        shift = len(a) - 1 - db
        q.append((shift, f))
        for i in range(db + 1):
            a[shift + i] = a[shift + i] - f * b[i]
        a.pop()
    qc = [coeff_zero(b)] * (1 + max((s for s, _ in q), default=0)) if q else []
    for s, f in q:
        qc[s] = f
    while a and a[-1].is_zero():
        a.pop()
    return qc, a


def coeff_zero(coeffs):
    return CycloNum.from_rational(0, coeffs[0].n)


def _squarefree_part(coeffs):
    """Exact squarefree part f / gcd(f, f') over the cyclotomic field."""
    deriv = [coeffs[i] * i for i in range(1, len(coeffs))]
    a, b = list(coeffs), deriv
    while b and any(not c.is_zero() for c in b):
        _, r = _upoly_divmod(a, b)
        a, b = b, r
    while a and a[-1].is_zero():
        a.pop()
    if len(a) <= 1:
        return coeffs
    q, r = _upoly_divmod(coeffs, a)
    if r and any(not c.is_zero() for c in r):
        raise ArithmeticError("squarefree division left a remainder")
    return q


def _synth_div(coeffs, r):
    """Divide by (t - r): returns (quotient ascending, remainder)."""
    n = max(c.n for c in coeffs)
    n = n * r.n // gcd(n, r.n)
    cs = [c.embed(n) for c in coeffs]
    rr = r.embed(n)
    out = []
    acc = CycloNum.from_rational(0, n)
    for c in reversed(cs):
        acc = acc * rr + c if out else c
        out.append(acc)
    rem = out[-1]
    q = list(reversed(out[:-1]))
    return q, rem


# -- certification --------------------------------------------------------------


def verify_matrices(p, k, Jm, Rm):
    """Exact relator certificate for explicit generator matrices.

    Returns dict with per-relator scalar (None when the relator image is not
    scalar) and overall ok flag.
    """
    from .presentation import Presentation
    n = Jm[0][0].n
    one = CycloNum.from_rational(1, n)
    rel = Presentation(p, k).relators()
    out = {"ok": True, "relators": {}, "failing": []}
    for name, word in rel.items():
        M = word.evaluate(Jm, Rm, one)
        lam = is_scalar_mat(M, lambda e: e.is_zero())
        good = lam is not None and not lam.is_zero()
        out["relators"][name] = {"scalar": lam, "ok": good}
        if not good:
            out["ok"] = False
            out["failing"].append(name)
    return out


def verify(fam, values):
    """Certificate for a candidate parameter point of a family: side conditions
    plus all relators, all exact.  Returns (certificate, RepPoint or None)."""
    Jm, Rm, vals, n = instantiate(fam, values)
    cert = {"side_ok": True}
    for s in fam.side:
        if not s.evaluate(vals).is_zero():
            cert["side_ok"] = False
    rc = verify_matrices(fam.p, fam.k, Jm, Rm)
    cert.update(rc)
    cert["ok"] = cert["ok"] and cert["side_ok"]
    if not cert["ok"]:
        return cert, None
    scalars = {name: d["scalar"] for name, d in cert["relators"].items()}
    pt = RepPoint(fam.case, fam.p, fam.k, vals, Jm, Rm, scalars,
                  branch=fam.branch)
    return cert, pt


# -- the solver -------------------------------------------------------------------


def solve_case(fam, precision=SOLVE_PRECISION, denom_bound=DENOM_BOUND,
               budget=None, conductors=None, enumerate_points=True):
    """Solve one generator case exactly.

    Returns a SolveOutcome: status "empty" (trivial ideal),
    "positive_dimension" (no enumeration attempted), "finite" (zero set
    certified finite by the early witness but a full basis was out of budget),
    or "points" with the certified RepPoints.  Raises SolveError if numeric
    enumeration cannot be reconciled (count instability or failed
    reconstruction), BudgetExceeded if the Groebner work outgrows the budget.
    """
    ideal = relators_to_ideal(fam, budget)
    dim, exact = ideal.dimension_certificate(budget)
    if exact and dim == -1:
        return SolveOutcome(fam.case, fam.p, fam.k, "empty", -1, 0, [], [], 0,
                            fam.branch)
    if exact and dim > 0:
        return SolveOutcome(fam.case, fam.p, fam.k, "positive_dimension", dim,
                            -1, [], [], -1, fam.branch)
    if not exact:
        # dimension <= 0 certified, but a full basis was out of budget: the
        # zero set is finite yet not enumerable here
        return SolveOutcome(fam.case, fam.p, fam.k, "finite", 0, -1, [], [],
                            -1, fam.branch)
    nstd = len(ideal.standard_monomials(budget))
    if not enumerate_points:
        return SolveOutcome(fam.case, fam.p, fam.k, "points", dim, -1, [], [],
                            nstd, fam.branch)
    gb_lex = ideal.groebner("lex", budget)
    ring_lex = gb_lex[0].ring
    nv = ring_lex.nvars()

    counts = {}
    numeric = None
    for prec in (precision, 2 * precision):
        sols = numeric_solutions(gb_lex, ring_lex, prec)
        with mpmath.workprec(prec + 30):
            tol = mpmath.mpf(2) ** (-prec // 3)
            pts = cluster_points([tuple(s[i] for i in range(nv)) for s in sols],
                                 nv, tol)
        counts[prec] = len(pts)
        numeric = pts
    if counts[precision] != counts[2 * precision]:
        raise SolveError("solution count unstable under precision doubling: %r"
                         % (counts,))
    if counts[precision] > nstd:
        raise SolveError("numeric count %d exceeds standard monomial bound %d"
                         % (counts[precision], nstd))

    base = fam.ring.conductor
    if conductors is None:
        conductors = [n for n in default_conductors()
                      if n % base == 0 or base % n == 0]
    points, unresolved = [], []
    for pt in numeric:
        values = reconstruct_point(pt, ring_lex, conductors, denom_bound,
                                   2 * precision)
        cert = None
        if values is not None:
            cert, rep = verify(fam, values)
            if rep is not None:
                points.append(rep)
                continue
        unresolved.append({"numeric": [str(c) for c in pt],
                           "reconstructed": values is not None,
                           "certificate": cert})
    points.sort(key=lambda r: r.key())
    return SolveOutcome(fam.case, fam.p, fam.k, "points", 0, len(points),
                        points, unresolved, nstd, fam.branch)


def identity_reflection_rep(p, k):
    """The special representation with rho(R1) = Id, rho(J) = J_std, when the
    relators allow it (needs the J-exponent sums to keep J^2k scalar)."""
    from .repfamily import J_STD_ROWS
    Jm = tuple(tuple(CycloNum.from_rational(c, 1) for c in row) for row in J_STD_ROWS)
    Rm = identity(3, CycloNum.from_rational(1, 1))
    cert = verify_matrices(p, k, Jm, Rm)
    if not cert["ok"]:
        return None, cert
    scalars = {name: d["scalar"] for name, d in cert["relators"].items()}
    values = {}
    pt = RepPoint("identity_reflection", p, k, values, Jm, Rm, scalars,
                  branch={"special": "R1=Id"})
    return pt, cert


def dimension_scan(p, k, cases=None, budget=None, eigen_pairs="all"):
    """Hilbert dimension of every case's relator ideal (no enumeration).

    For both_regular/inverted with p > 3 each eigenvalue sub-case (a,b) is
    scanned separately.  Returns a dict keyed by case label; values are exact
    integers (-1 for the trivial ideal), or the string "<=0" when only the
    early finiteness witness completed within budget (zero set certified
    finite, possibly empty).
    """
    out = {}
    for case in (cases or CASES):
        labels = [(case, None)]
        if case in ("both_regular", "inverted"):
            pairs = [(a, b) for a in range(1, p) for b in range(a + 1, p)]
            if eigen_pairs != "all":
                pairs = list(eigen_pairs)
            labels = [(case, pr) for pr in pairs]
        for case_name, pair in labels:
            if pair is None or len(labels) == 1:
                label = case_name
            else:
                label = "%s(%d,%d)" % (case_name, pair[0], pair[1])
            try:
                fam = family(case_name, p, k, eigen_pair=pair)
                ideal = relators_to_ideal(fam, budget)
                dim, exact = ideal.dimension_certificate(budget)
                out[label] = dim if exact else "<=0"
            except BudgetExceeded as e:
                out[label] = "budget_exceeded(%d)" % e.steps
            except ValueError as e:
                out[label] = "invalid(%s)" % e
    return out
