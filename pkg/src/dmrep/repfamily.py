"""Parametrized matrix families for each generator-image configuration.

A representation of Gamma(p,k) into PGL(3,C) is type preserving when rho(J)
is regular elliptic and rho(R1) is a complex reflection (possibly of order a
proper divisor of p, possibly the identity).  Up to conjugation the generator
images fall into the cases below; each case is realized as matrix templates
over a polynomial ring, with structural side conditions, so that relator
evaluation produces a polynomial system.

Standard matrices:

    J_std = [[0,0,1],[-1,0,0],[0,1,0]]          (J_std^3 = -Id)
    reflection template, fixed line through [1,0,0] and [1,1,1]:
        [[1,-r1,r1],[0,1-r2,r2],[0,1-r2-x,r2+x]]  (eigenvalues 1,1,x)

Cases:
  refl_regular       rho(J) = J_std, rho(R1) the reflection template.
  refl_degenerate_1  rho(J) = diag(1,w,w^2), reflection template with r1 = 1.
  refl_degenerate_2  same with r1 = 0 (the fixed flag of R1 meets the J frame).
  inverted           rho(J) is a reflection, rho(R1) regular elliptic (written
                     in the centralizer of J_std: a*Id + b*J_std + c*J_std^2).
  both_regular       rho(J) = J_std, rho(R1) regular with eigenvalues
                     (1, zeta_p^a, zeta_p^b); not type preserving.

The reflection eigenvalue x either stays adjoined with its minimal polynomial
Phi_d(x) as a side condition, or is specialized to the fixed primitive root
zeta_d; solutions on the other primitive branches are Galois images of the
specialized ones.
"""

from fractions import Fraction
from math import gcd

from .cyclotomic import CycloNum, cyclotomic_coeffs, euler_phi, lift_common
from .linalg import (mat, mat_mul, mat_apply, identity, is_scalar_mat,
                     kernel_basis, mat_rank, mat_sub, mat_scale)
from .poly import PolyRing, Ideal, buchberger, normal_form, BudgetExceeded
from .presentation import Presentation

CASES = ("refl_regular", "refl_degenerate_1", "refl_degenerate_2",
         "inverted", "both_regular")

J_STD_ROWS = ((0, 0, 1), (-1, 0, 0), (0, 1, 0))


def _phi_poly(ring, var, d):
    """Phi_d(var) as an element of ring."""
    x = ring.var(var)
    out = ring.zero()
    for i, c in enumerate(cyclotomic_coeffs(d)):
        if c:
            out = out + x ** i * c
    return out


class Family:
    """Matrix templates and side conditions for one generator case."""

    __slots__ = ("case", "p", "k", "ring", "J", "R", "side", "params",
                 "branch", "notes", "_ideal")

    def __init__(self, case, p, k, ring, J, R, side, branch, notes=""):
        self.case = case
        self.p = p
        self.k = k
        self.ring = ring
        self.J = J
        self.R = R
        self.side = side
        self.params = ring.gens
        self.branch = branch
        self.notes = notes
        self._ideal = None

    def __repr__(self):
        return "Family(%s, p=%d, k=%d, vars=%s)" % (
            self.case, self.p, self.k, ",".join(self.params))

    def presentation(self):
        return Presentation(self.p, self.k)


def _reflection_template(ring, r1, r2, x):
    one, zero = ring.one(), ring.zero()
    return mat([[one, -r1, r1],
                [zero, one - r2, r2],
                [zero, one - r2 - x, r2 + x]])


def _jstd(ring):
    return mat([[ring.const(c) for c in row] for row in J_STD_ROWS])


def family(case, p, k, adjoin_x=None, refl_order=None, eigen_pair=None,
           branch_root=1):
    """Build the matrix family for a generator case of Gamma(p,k).

    adjoin_x: keep the reflection eigenvalue as a variable with Phi_d side
    condition (default False for refl_regular, True for the degenerate forms).
    refl_order: order d | p of the reflection image (default p).
    eigen_pair: (a,b) exponents for regular R1 eigenvalues (1, z_p^a, z_p^b),
    used by inverted / both_regular; default (1,2) scaled to p.
    branch_root: which primitive d-th root specializes x (exponent, coprime to d).
    """
    pres = Presentation(p, k)  # validates (p,k)
    if case not in CASES:
        raise ValueError("unknown case %r (choose from %s)" % (case, ", ".join(CASES)))

    if case in ("refl_regular", "refl_degenerate_1", "refl_degenerate_2"):
        d = refl_order if refl_order is not None else p
        if d <= 1 or p % d:
            raise ValueError("reflection order must be a divisor > 1 of p")
        if adjoin_x is None:
            adjoin_x = case != "refl_regular"
        if gcd(branch_root, d) != 1:
            raise ValueError("branch root must be coprime to the order")

        degenerate = case != "refl_regular"
        base_conductor = 3 if degenerate else 1

        if adjoin_x:
            n = base_conductor
            gens = ("r2", "x") if degenerate else ("r1", "r2", "x")
            ring = PolyRing(gens, n, "grevlex")
            x = ring.var("x")
            side = [_phi_poly(ring, "x", d)]
            branch = {"x": "adjoined", "order": d}
        else:
            n = base_conductor * d // gcd(base_conductor, d)
            gens = ("r2",) if degenerate else ("r1", "r2")
            ring = PolyRing(gens, n, "grevlex")
            x = ring.const(CycloNum.zeta(d, branch_root))
            side = []
            branch = {"x": CycloNum.zeta(d, branch_root), "order": d,
                      "root_exponent": branch_root}

        one, zero = ring.one(), ring.zero()
        if case == "refl_regular":
            r1, r2 = ring.var("r1"), ring.var("r2")
            J = _jstd(ring)
        else:
            r2 = ring.var("r2")
            r1 = one if case == "refl_degenerate_1" else zero
            w = ring.const(CycloNum.zeta(3))
            J = mat([[one, zero, zero], [zero, w, zero], [zero, zero, w * w]])
        R = _reflection_template(ring, r1, r2, x)
        return Family(case, p, k, ring, J, R, side, branch)

    if case == "both_regular":
        a, b = eigen_pair if eigen_pair else (1, 2)
        if not 0 < a < b < p:
            raise ValueError("eigen_pair must satisfy 0 < a < b < p")
        za, zb = CycloNum.zeta(p, a), CycloNum.zeta(p, b)
        s1c = (1 + za + zb).min_conductor()
        s2c = (za + zb + za * zb).min_conductor()
        s3c = (za * zb).min_conductor()
        n = 1
        for c in (s1c, s2c, s3c):
            n = n * c.n // gcd(n, c.n)
        ring = PolyRing(("s1", "s2", "s3", "r1", "r2"), n, "grevlex")
        one, zero = ring.one(), ring.zero()
        s1, s2, s3, r1, r2 = ring.vars()
        sig1 = ring.const(s1c)
        sig2 = ring.const(s2c)
        sig3 = ring.const(s3c)
        # trace pinned through the (3,3) entry; R e1 = e1 normalizes the
        # eigenvalue at e1 to exactly 1
        t33 = sig1 - one - s2
        J = _jstd(ring)
        R = mat([[one, s1, r1], [zero, s2, r2], [zero, s3, t33]])
        from .linalg import e2_3, det3
        side = [e2_3(R) - sig2, det3(R) - sig3]
        branch = {"eigen_pair": (a, b)}
        return Family(case, p, k, ring, J, R, side, branch,
                      notes="not type preserving: rho(R1) regular")

    # inverted: rho(J) a reflection (template in j1, j2 with eigenvalue y),
    # rho(R1) regular elliptic sharing the J_std eigenframe
    a, b = eigen_pair if eigen_pair else (1, 2)
    if not (0 < a < b < p):
        raise ValueError("eigen_pair must satisfy 0 < a < b < p")
    za, zb = CycloNum.zeta(p, a), CycloNum.zeta(p, b)
    sig1 = (1 + za + zb).min_conductor()
    sig2 = (za + zb + za * zb).min_conductor()
    sig3 = (za * zb).min_conductor()
    n = 1
    for c in (sig1, sig2, sig3):
        n = n * c.n // gcd(n, c.n)
    ring = PolyRing(("j1", "j2", "y", "vb", "vc"), n, "grevlex")
    one, zero = ring.one(), ring.zero()
    j1, j2, y, vb, vc = ring.vars()
    J = _reflection_template(ring, j1, j2, y)
    aconst = ring.const(sig1) * Fraction(1, 3)
    Jc = _jstd(ring)
    Jc2 = mat_mul(Jc, Jc)
    ident = identity(3, one)
    R = tuple(tuple(aconst * ident[i][j] + vb * Jc[i][j] + vc * Jc2[i][j]
                    for j in range(3)) for i in range(3))
    from .linalg import e2_3, det3
    side = [_phi_poly(ring, "y", 3),
            e2_3(R) - ring.const(sig2),
            det3(R) - ring.const(sig3)]
    branch = {"eigen_pair": (a, b)}
    return Family("inverted", p, k, ring, J, R, side, branch,
                  notes="rho(J) reflection, rho(R1) regular: not type preserving")


def projective_identity_eqs(M):
    """Polynomial conditions for M to be a scalar matrix."""
    eqs = []
    for i in range(3):
        for j in range(3):
            if i != j and M[i][j]:
                eqs.append(M[i][j])
    for d in (M[0][0] - M[1][1], M[1][1] - M[2][2]):
        if d:
            eqs.append(d)
    return eqs


BATCH_BUDGET = 10 ** 5
RELATOR_ORDER = ("J3", "Rp", "W", "RJ2k")


def relators_to_ideal(fam, budget=None, progressive=True):
    """Polynomial ideal whose zero set is the relator-satisfying locus.

    Relator words are evaluated on the templates with entries normal-formed
    against a running reducer set (side conditions first, then each relator's
    equations), which keeps intermediate matrix entries small.  Cheap relator
    batches grow the reducer set into a Groebner basis of everything so far,
    cached on the ideal; a batch whose basis outgrows the per-batch step cap
    instead joins its raw equations as reducers (still sound for reduction)
    and leaves the final basis to the caller.
    """
    if fam._ideal is not None:
        return fam._ideal
    ring = fam.ring
    one = ring.one()
    rel = fam.presentation().relators()
    eqs = list(fam.side)
    running, have_gb = [], True

    def grow(new):
        nonlocal running, have_gb
        if not progressive:
            running = running + new
            have_gb = False
            return
        if have_gb:
            try:
                cap = BATCH_BUDGET if budget is None else min(BATCH_BUDGET, budget)
                running = buchberger(new, cap, seed_gb=running)
                return
            except BudgetExceeded:
                have_gb = False
        running = running + new

    if eqs:
        grow(list(eqs))

    def red(M):
        if not running:
            return M
        return mat_apply(M, lambda e: normal_form(e, running, budget))

    Jm, Rm = red(fam.J), red(fam.R)
    # cheap relators first: their equations shrink the reduction of the
    # higher-degree ones
    for name in RELATOR_ORDER:
        word = rel[name]
        acc = identity(3, one)
        for gen, exp in word.letters:
            base = Jm if gen == "J" else Rm
            for _ in range(exp):
                acc = red(mat_mul(acc, base))
        new = [normal_form(e, running, budget) for e in projective_identity_eqs(acc)]
        new = [e for e in new if e.terms]
        if new:
            eqs.extend(new)
            grow(new)
    ideal = Ideal(ring, eqs)
    if progressive and have_gb:
        ideal.seed_groebner("grevlex", running)
    fam._ideal = ideal
    return ideal


class RepPoint:
    """An exact representation: certified generator matrices at a solution."""

    __slots__ = ("case", "p", "k", "values", "J", "R", "conductor",
                 "relator_scalars", "branch")

    def __init__(self, case, p, k, values, J, R, relator_scalars, branch=None):
        self.case = case
        self.p = p
        self.k = k
        self.values = values
        self.J = J
        self.R = R
        self.conductor = J[0][0].n
        self.relator_scalars = relator_scalars
        self.branch = branch

    def __repr__(self):
        vals = ", ".join("%s=%r" % (g, v) for g, v in sorted(self.values.items()))
        return "RepPoint(%s, p=%d, k=%d, %s)" % (self.case, self.p, self.k, vals)

    def matrix_field_conductor(self):
        """Smallest conductor containing every matrix entry."""
        n = 1
        for M in (self.J, self.R):
            for row in M:
                for e in row:
                    c = e.min_conductor().n
                    n = n * c // gcd(n, c)
        return n

    def key(self):
        """Deterministic identity for dedup/sorting: the exact matrices.

        Parameter values alone would conflate points from different branches
        of the reflection eigenvalue; the instantiated matrices are the
        representation itself.
        """
        ms = []
        for M in (self.J, self.R):
            for row in M:
                for e in row:
                    c = e.min_conductor()
                    ms.append((c.n, tuple(c.coeffs)))
        return (self.case, self.p, self.k, tuple(ms))


def instantiate(fam, values):
    """Exact generator matrices at given parameter values (no verification).

    values: dict var name -> CycloNum/Fraction/int.  Everything is lifted to a
    common conductor.
    """
    vals = {}
    for g in fam.ring.gens:
        if g not in values:
            raise ValueError("missing value for %s" % g)
        v = values[g]
        vals[g] = v if isinstance(v, CycloNum) else CycloNum.from_rational(v, 1)
    lifted = lift_common(CycloNum.from_rational(0, fam.ring.conductor), *vals.values())
    n = lifted[0].n
    vals = dict(zip(vals.keys(), lifted[1:]))
    Jm = mat_apply(fam.J, lambda e: e.evaluate(vals).embed(n) if e.variables_used()
                   else e.constant_coeff().embed(n))
    Rm = mat_apply(fam.R, lambda e: e.evaluate(vals).embed(n) if e.variables_used()
                   else e.constant_coeff().embed(n))
    return Jm, Rm, vals, n


def check_side_conditions(fam, values):
    """Exact check that the side conditions vanish at the values."""
    for s in fam.side:
        if not s.evaluate(values).is_zero():
            return False
    return True


def fixed_structure(fam, Jm, Rm):
    """Eigenstructure incidence data for an instantiated point.

    Computed exactly: dimension of the reflection's fixed space (2 for a true
    reflection, 3 for the identity), how many eigenvectors of the regular
    generator lie on it, and whether the pair is type preserving.
    """
    n = Jm[0][0].n
    one = CycloNum.from_rational(1, n)
    zero = CycloNum.from_rational(0, n)
    info = {"case": fam.case}
    if fam.case in ("refl_regular", "refl_degenerate_1", "refl_degenerate_2"):
        RmI = mat_sub(Rm, identity(3, one))
        fdim = 3 - mat_rank([list(r) for r in RmI])
        info["r_fixed_space_dim"] = fdim
        info["r_is_identity"] = fdim == 3
        info["type_preserving"] = fdim >= 2
        basis = [list(v) for v in kernel_basis([list(r) for r in RmI], zero, one)]
        if fam.case == "refl_regular":
            # eigenvectors of J_std: kernels of J - lambda for lambda^3 = -1
            m = n * 3 // gcd(n, 3)
            onem = CycloNum.from_rational(1, m)
            zerom = CycloNum.from_rational(0, m)
            w = CycloNum.zeta(3).embed(m)
            Jm_m = mat_apply(Jm, lambda e: e.embed(m))
            basis_m = [[v.embed(m) for v in row] for row in basis]
            hits = 0
            for lam in (-onem, -w, -(w * w)):
                shifted = mat_sub(Jm_m, mat_scale(identity(3, onem), lam))
                ev = kernel_basis([list(r) for r in shifted], zerom, onem)
                for v in ev:
                    if mat_rank(basis_m + [list(v)]) == len(basis_m):
                        hits += 1
            info["j_eigenvectors_on_fixed_line"] = hits
        else:
            # diagonal J: eigenvectors are e1, e2, e3
            hits = 0
            for i in range(3):
                e = [zero] * 3
                e[i] = one
                if mat_rank(basis + [e]) == len(basis):
                    hits += 1
            info["j_eigenvectors_on_fixed_line"] = hits
    elif fam.case == "both_regular":
        info["type_preserving"] = False
        info["r_regular"] = True
    else:
        JmI = mat_sub(Jm, identity(3, one))
        info["j_fixed_space_dim"] = 3 - mat_rank([list(r) for r in JmI])
        info["type_preserving"] = False
    return info
