"""Classification invariants for certified representation points.

Everything here is exact: invariant Hermitian forms come from rational kernel
computations, signatures from Descartes counting with certified signs,
irreducibility from common-eigenvector tests (with an exact matrix-algebra
span fallback), Galois orbits from coordinate-wise automorphism action, lift
obstructions from integer-lattice conditions on relator scalars, and cusp
classification from exact matrix identities.
"""

from fractions import Fraction
from math import gcd

from .cyclotomic import CycloNum, euler_phi, galois_group
from .linalg import (charpoly3, conj_transpose, det3, e2_3, identity,
                     is_scalar_mat, kernel_basis, mat_apply, mat_mul, mat_rank,
                     mat_scale, mat_sub, mat_trace, transpose)
from .presentation import Presentation
from .solver import univariate_roots_exact

# -- invariant hermitian forms -----------------------------------------------


def hermitian_form(Jm, Rm):
    """Invariant Hermitian forms of the projective pair, over all sign choices.

    Solves g* H g = eps_g H for eps in {+1,-1} per generator together with
    H* = H, as a rational linear system in the phi(n)*9 coordinates of H.
    Returns a dict with the per-sign kernel dimensions, the chosen form
    (normalized so its first nonzero diagonal entry is +1) when some kernel is
    one-dimensional, and the full basis when the kernel is bigger.
    """
    n = Jm[0][0].n
    phi = euler_phi(n)
    basis_elts = []
    for i in range(3):
        for j in range(3):
            for t in range(phi):
                coeffs = [Fraction(0)] * phi
                coeffs[t] = Fraction(1)
                basis_elts.append((i, j, CycloNum(n, coeffs)))

    def mat_from_vector(vec):
        rows = [[CycloNum.from_rational(0, n) for _ in range(3)] for _ in range(3)]
        for (i, j, e), c in zip(basis_elts, vec):
            if c:
                rows[i][j] = rows[i][j] + e * c
        return tuple(tuple(r) for r in rows)

    def constraint_rows(op):
        # rows of the rational matrix of H -> op(H) in the chosen basis
        cols = []
        for (i, j, e) in basis_elts:
            H = [[CycloNum.from_rational(0, n)] * 3 for _ in range(3)]
            H[i][j] = e
            out = op(tuple(tuple(r) for r in H))
            col = []
            for a in range(3):
                for b in range(3):
                    col.extend(out[a][b].coeffs)
            cols.append(col)
        # transpose: constraints as rows over unknown coordinates
        return [[Fraction(cols[c][r]) for c in range(len(cols))]
                for r in range(9 * phi)]

    Jh = conj_transpose(Jm)
    Rh = conj_transpose(Rm)

    def herm_op(H):
        return mat_sub(H, conj_transpose(H))

    results = {}
    chosen = None
    for ej in (1, -1):
        for er in (1, -1):
            # stacked system: J-constraint, R-constraint, hermiticity
            rows = []
            rows += constraint_rows(lambda H, ej=ej: mat_sub(
                mat_mul(mat_mul(Jh, H), Jm), mat_scale(H, ej)))
            rows += constraint_rows(lambda H, er=er: mat_sub(
                mat_mul(mat_mul(Rh, H), Rm), mat_scale(H, er)))
            rows += constraint_rows(herm_op)
            kern = kernel_basis(rows, Fraction(0), Fraction(1))
            results[(ej, er)] = [mat_from_vector(v) for v in kern]
            if kern and chosen is None:
                chosen = (ej, er)

    out = {"kernel_dims": {k: len(v) for k, v in results.items()},
           "signs": chosen, "form": None, "basis": None, "ambiguous": False}
    if chosen is None:
        return out
    basis = results[chosen]
    out["basis"] = basis
    # The rational kernel sees real-subfield multiples of one projective form
    # as independent vectors (dimension phi(n)/2 for a unique form over
    # Q(zeta_n)).  Collapse by exact proportionality before calling the space
    # ambiguous.
    if _all_proportional(basis):
        out["form"] = normalize_form(basis[0])
    else:
        out["ambiguous"] = True
    return out


def _all_proportional(mats):
    if len(mats) == 1:
        return True
    H0 = mats[0]
    pos = None
    for i in range(3):
        for j in range(3):
            if not H0[i][j].is_zero():
                pos = (i, j)
                break
        if pos:
            break
    if pos is None:
        return False
    a, b = pos
    for H in mats[1:]:
        c = H[a][b] / H0[a][b]
        for i in range(3):
            for j in range(3):
                if H[i][j] != H0[i][j] * c:
                    return False
    return True


def normalize_form(H):
    """Scale so the first nonzero diagonal entry equals +1 (diagonals of a
    Hermitian form are real)."""
    for i in range(3):
        d = H[i][i]
        if not d.is_zero():
            return mat_apply(H, lambda e: e / d)
    # zero diagonal: scale first nonzero entry to 1 instead
    for i in range(3):
        for j in range(3):
            if not H[i][j].is_zero():
                return mat_apply(H, lambda e: e / H[i][j])
    return H


def signature(H):
    """(positive, negative, zero) inertia of an exact Hermitian matrix.

    Uses Descartes' rule on the characteristic polynomial: legitimate because
    a Hermitian matrix has only real eigenvalues.  Signs of the coefficients
    are certified interval signs.  The zero count is cross-checked against the
    exact rank.
    """
    c0, c1, c2 = charpoly3(H)  # t^3 + c2 t^2 + c1 t + c0
    for c in (c0, c1, c2):
        if not c.is_real():
            raise ValueError("characteristic polynomial not real: not Hermitian?")
    zeros = 0
    seq = [c0, c1, c2]
    while zeros < 3 and seq and seq[0].is_zero():
        zeros += 1
        seq.pop(0)
    rank = mat_rank([list(r) for r in H])
    if rank != 3 - zeros:
        raise ArithmeticError("rank %d inconsistent with charpoly zeros %d"
                              % (rank, zeros))
    # remaining polynomial has nonzero constant term; count sign changes
    signs = [c.sign_real() for c in seq] + [1]  # +1 for the leading t^3 coeff
    signs = [s for s in signs if s != 0]
    pos = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    neg = 3 - zeros - pos
    return pos, neg, zeros


def canonical_signature(H):
    """Inertia (pos, neg, zero) with pos >= neg: the form is only defined up
    to a real scalar, so both sign choices name the same projective datum."""
    pos, neg, zeros = signature(H)
    if pos < neg:
        pos, neg = neg, pos
    return pos, neg, zeros


def form_is_degenerate(H):
    return det3(H).is_zero()


def degenerate_member_exists(basis):
    """For a multi-dimensional space of forms: is some member degenerate?

    Checks the basis members and, for two-dimensional spaces, the pencil
    det(H1 + t H2) = 0 for exact cyclotomic roots t.
    """
    for H in basis:
        if form_is_degenerate(H):
            return True
    if len(basis) == 2:
        H1, H2 = basis
        # det(H1 + t H2) coefficients via evaluation at t = 0,1,2,3 (degree 3)
        pts = []
        for tv in range(4):
            M = tuple(tuple(H1[i][j] + H2[i][j] * tv for j in range(3))
                      for i in range(3))
            pts.append(det3(M))
        if all(v.is_zero() for v in pts):
            return True  # whole pencil degenerate
        # Newton forward differences give the monomial coefficients exactly
        c0 = pts[0]
        c1 = (-Fraction(11, 6) * pts[0] + 3 * pts[1]
              - Fraction(3, 2) * pts[2] + Fraction(1, 3) * pts[3])
        c2 = (pts[0] - Fraction(5, 2) * pts[1] + 2 * pts[2]
              - Fraction(1, 2) * pts[3])
        c3 = (-Fraction(1, 6) * pts[0] + Fraction(1, 2) * pts[1]
              - Fraction(1, 2) * pts[2] + Fraction(1, 6) * pts[3])
        roots, _ = univariate_roots_exact([c0, c1, c2, c3])
        return any(r.is_real() for r, _ in roots)
    return False


# -- irreducibility -----------------------------------------------------------


def eigenvalues_exact(M):
    """Exact eigenvalues (with multiplicity) of a 3x3 cyclotomic matrix, and a
    flag for whether the characteristic polynomial split completely."""
    c0, c1, c2 = charpoly3(M)
    n = M[0][0].n
    one = CycloNum.from_rational(1, n)
    roots, split = univariate_roots_exact([c0, c1, c2, one])
    return roots, split

def _common_eigenvector_exists(A, B):
    """Do A and B share an eigenvector?  Exact; needs split spectra."""
    eigA, splitA = eigenvalues_exact(A)
    eigB, splitB = eigenvalues_exact(B)
    if not (splitA and splitB):
        return None
    for la, _ in eigA:
        for lb, _ in eigB:
            n = A[0][0].n
            m = n * la.n // gcd(n, la.n)
            m = m * lb.n // gcd(m, lb.n)
            onem = CycloNum.from_rational(1, m)
            Am = mat_apply(A, lambda e: e.embed(m))
            Bm = mat_apply(B, lambda e: e.embed(m))
            rows = [list(r) for r in mat_sub(Am, mat_scale(identity(3, onem), la.embed(m)))]
            rows += [list(r) for r in mat_sub(Bm, mat_scale(identity(3, onem), lb.embed(m)))]
            if mat_rank(rows) < 3:
                return True
    return False


def burnside_span_dim(mats):
    """Dimension of the matrix algebra generated by the given 3x3 matrices
    (with identity); 9 iff the set acts irreducibly (Burnside)."""
    n = mats[0][0][0].n
    one = CycloNum.from_rational(1, n)

    def vec(M):
        return [M[i][j] for i in range(3) for j in range(3)]

    # fully reduced echelon basis: every stored row is zero at the other
    # rows' pivot columns, so a single reduction pass is enough
    echelon = []  # list of (pivot_index, row)

    def reduce_add(row):
        row = list(row)
        for piv, r in echelon:
            if not row[piv].is_zero():
                f = row[piv]
                row = [a - f * b for a, b in zip(row, r)]
        for i, v in enumerate(row):
            if not v.is_zero():
                inv = v.inverse()
                row = [a * inv for a in row]
                for t, (piv, r) in enumerate(echelon):
                    if not r[i].is_zero():
                        f = r[i]
                        echelon[t] = (piv, [a - f * b for a, b in zip(r, row)])
                echelon.append((i, row))
                return True
        return False

    frontier = [identity(3, one)]
    reduce_add(vec(frontier[0]))
    seen_dim = 1
    while frontier and len(echelon) < 9:
        new_frontier = []
        for M in frontier:
            for g in mats:
                P = mat_mul(M, g)
                if reduce_add(vec(P)):
                    new_frontier.append(P)
        frontier = new_frontier
    return len(echelon)


def is_irreducible(Jm, Rm):
    """Exact irreducibility of the pair: no common invariant line or plane.

    Primary route: common eigenvector test on the matrices and their
    transposes (a common invariant plane is a common eigenvector of the
    transposes).  When a spectrum does not split over the tried cyclotomic
    fields, falls back to the Burnside span criterion, which is always
    conclusive."""
    ce = _common_eigenvector_exists(Jm, Rm)
    if ce is None:
        dim = burnside_span_dim([Jm, Rm])
        return {"irreducible": dim == 9, "route": "burnside", "span_dim": dim}
    if ce:
        return {"irreducible": False, "route": "common_eigenvector",
                "invariant": "line"}
    ce_t = _common_eigenvector_exists(transpose(Jm), transpose(Rm))
    if ce_t is None:
        dim = burnside_span_dim([Jm, Rm])
        return {"irreducible": dim == 9, "route": "burnside", "span_dim": dim}
    if ce_t:
        return {"irreducible": False, "route": "common_eigenvector",
                "invariant": "plane"}
    return {"irreducible": True, "route": "common_eigenvector"}


# -- galois action --------------------------------------------------------------


def galois_orbits(value_dicts, subgroup=None, conductor=None):
    """Partition points (dicts var -> CycloNum) into Galois orbits.

    subgroup: list of automorphism exponents of the common field (default: the
    full group).  Points must be closed under the action; any image that is
    not a listed point is reported as a closure violation.
    """
    if not value_dicts:
        return {"orbits": [], "violations": []}
    n = conductor or 1
    for vd in value_dicts:
        for v in vd.values():
            n = n * v.n // gcd(n, v.n)
    lifted = []
    for vd in value_dicts:
        lifted.append({g: v.embed(n) for g, v in vd.items()})

    def key_of(vd):
        return tuple(sorted((g, v.coeffs) for g, v in vd.items()))

    index = {key_of(vd): i for i, vd in enumerate(lifted)}
    exps = subgroup if subgroup is not None else galois_group(n)
    parent = list(range(len(lifted)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    violations = []
    for i, vd in enumerate(lifted):
        for k in exps:
            if n > 1 and gcd(k, n) != 1:
                continue
            img = {g: v.galois(k) for g, v in vd.items()}
            j = index.get(key_of(img))
            if j is None:
                violations.append({"point": i, "automorphism": k})
            else:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    orbits = {}
    for i in range(len(lifted)):
        orbits.setdefault(find(i), []).append(i)
    orbit_list = [sorted(v) for _, v in sorted(orbits.items())]
    return {"orbits": orbit_list, "violations": violations,
            "conductor": n, "subgroup": list(exps)}


def branch_fixing_subgroup(n, branch_value):
    """Automorphism exponents of Q(zeta_n) fixing a given element."""
    out = []
    for k in galois_group(n):
        v = branch_value.embed(n) if branch_value.n != n else branch_value
        if v.galois(k) == v:
            out.append(k)
    return out


# -- lifting ---------------------------------------------------------------------


def lift_check(point, bound_multiplier=1):
    """Can the projective representation lift to a linear one?

    A lift rescales rho(J) by kappa and rho(R1) by tau; relator w with written
    exponent sums (a_w, b_w) and scalar lambda_w requires
    kappa^a_w tau^b_w lambda_w = 1.

    Two exact layers: an integer-lattice obstruction (for every integer vector
    v in the kernel of the exponent matrix, prod lambda_w^v_w must be 1; if
    not, no lift exists over any scalars), and a witness search for kappa, tau
    among roots of unity of order dividing M = lcm(3, p, 2k, n) *
    bound_multiplier, via discrete logarithms.  "Not liftable within bound"
    without the obstruction is reported as inconclusive.
    """
    p, k = point.p, point.k
    pres = Presentation(p, k)
    rel = pres.relators()
    names = list(rel.keys())
    sums = [rel[w].exponent_sums() for w in names]
    lams = [point.relator_scalars[w].min_conductor() for w in names]
    n = 1
    for l in lams:
        n = n * l.n // gcd(n, l.n)
    M = 1
    for v in (3, p, 2 * k, n):
        M = M * v // gcd(M, v)
    M *= bound_multiplier
    L = M * n // gcd(M, n)
    if L % 2:
        L2 = 2 * L  # roots of unity in Q(zeta_L) include -1
    else:
        L2 = L

    # discrete logs of the relator scalars in the L2 roots of unity
    logs = []
    z = CycloNum.zeta(L2)
    for l in lams:
        dl = None
        target = l.embed(L2)
        acc = CycloNum.from_rational(1, L2)
        for t in range(L2):
            if acc == target:
                dl = t
                break
            acc = acc * z
        logs.append(dl)

    # lattice obstruction: kernel of the 2x4 exponent matrix
    obstructed = False
    if all(dl is not None for dl in logs):
        kern = _int_kernel([[s[0] for s in sums], [s[1] for s in sums]])
        for v in kern:
            total = sum(vi * dl for vi, dl in zip(v, logs)) % L2
            if total:
                obstructed = True
                break
    else:
        obstructed = None  # scalar not a root of unity in the tried field

    witness = None
    if not obstructed:
        step = L2 // M
        for i in range(M):
            for j in range(M):
                ok = True
                for (a, b), dl in zip(sums, logs):
                    if (a * i * step + b * j * step + dl) % L2:
                        ok = False
                        break
                if ok:
                    witness = (CycloNum.zeta(M, i).min_conductor(),
                               CycloNum.zeta(M, j).min_conductor())
                    break
            if witness:
                break

    liftable = witness is not None
    return {"liftable_within_bound": liftable,
            "witness": witness,
            "bound": M,
            "obstructed": bool(obstructed) if obstructed is not None else None,
            "conclusive": liftable or bool(obstructed),
            "relator_scalar_logs": dict(zip(names, logs)),
            "root_of_unity_order": L2}


def _int_kernel(rows):
    """Basis of the integer kernel of a small integer matrix (via rational
    kernel and clearing denominators)."""
    m = [[Fraction(x) for x in r] for r in rows]
    kern = kernel_basis(m, Fraction(0), Fraction(1))
    out = []
    for v in kern:
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


# -- cusp classification -----------------------------------------------------------


def cusp_classify(point, order_bound=24):
    """Classify the image of the cusp centre (R2 A1)^2.

    Outcomes: "scalar" (projectively trivial), "elliptic" with the projective
    order, "unipotent" with the Jordan structure (after scaling by the scalar
    eigenvalue), or "other".  factors_through_compactification is reported in
    both semantics: strict (scalar only) and loose (scalar or elliptic).
    """
    pres = Presentation(point.p, point.k)
    word = pres.cusp_center()
    n = point.conductor
    one = CycloNum.from_rational(1, n)
    M = word.evaluate(point.J, point.R, one)
    out = {"word": repr(word)}
    lam = is_scalar_mat(M, lambda e: e.is_zero())
    if lam is not None:
        out["type"] = "scalar"
        out["factors_strict"] = True
        out["factors"] = True
        return out
    # elliptic: some power is scalar
    P = M
    for m in range(2, order_bound + 1):
        P = mat_mul(P, M)
        if is_scalar_mat(P, lambda e: e.is_zero()) is not None:
            out["type"] = "elliptic"
            out["projective_order"] = m
            out["factors_strict"] = False
            out["factors"] = True
            return out
    # unipotent up to scalar: char poly (t - lam)^3 with lam = trace/3
    lam = mat_trace(M) / 3
    if e2_3(M) == lam * lam * 3 and det3(M) == lam ** 3:
        shifted = mat_sub(M, mat_scale(identity(3, one), lam))
        r = mat_rank([list(row) for row in shifted])
        sq = mat_mul(shifted, shifted)
        sq_zero = all(sq[i][j].is_zero() for i in range(3) for j in range(3))
        out["type"] = "unipotent"
        out["jordan"] = "2+1" if sq_zero else "3"
        out["shifted_rank"] = r
        out["factors_strict"] = False
        out["factors"] = False
        return out
    out["type"] = "other"
    out["factors_strict"] = False
    out["factors"] = False
    return out
