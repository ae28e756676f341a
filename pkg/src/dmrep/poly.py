"""Multivariate polynomials over cyclotomic fields and Groebner bases.

Polynomials live in a PolyRing (named variables, coefficient conductor,
monomial order) and store terms as a dict mapping exponent tuples to nonzero
CycloNum coefficients.  Supported orders are grevlex (default, used for
dimension computations) and lex (used for elimination and triangular
solving).

The Buchberger loop uses the normal selection strategy (smallest lcm), the
coprimality and chain criteria, and rational content stripping after every
reduction.  All reduction work is charged against a step budget so runaway
computations fail loudly instead of hanging.
"""

import heapq
from fractions import Fraction
from math import gcd

from .cyclotomic import CycloNum

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(Exception):
    """Raised when a Groebner computation exceeds its reduction-step budget."""

    def __init__(self, steps, context=""):
        self.steps = steps
        super().__init__("budget of %d reduction steps exceeded%s"
                         % (steps, " in " + context if context else ""))


def _key_grevlex(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _key_lex(e):
    return e


_ORDER_KEYS = {"grevlex": _key_grevlex, "lex": _key_lex}


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class PolyRing:
    __slots__ = ("gens", "conductor", "order", "_key", "_zero_exp")

    def __init__(self, gens, conductor=1, order="grevlex"):
        if order not in _ORDER_KEYS:
            raise ValueError("unknown monomial order %r" % (order,))
        self.gens = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("duplicate variable names")
        self.conductor = conductor
        self.order = order
        self._key = _ORDER_KEYS[order]
        self._zero_exp = (0,) * len(self.gens)

    def key(self):
        return (self.gens, self.conductor, self.order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.key() == other.key()

    def __repr__(self):
        return "PolyRing(%s; Q(zeta_%d); %s)" % (",".join(self.gens), self.conductor, self.order)

    def nvars(self):
        return len(self.gens)

    def coeff(self, c):
        """Coerce int/Fraction/CycloNum into the coefficient field."""
        if isinstance(c, CycloNum):
            if c.n == self.conductor:
                return c
            if self.conductor % c.n == 0:
                return c.embed(self.conductor)
            raise ValueError("coefficient conductor %d does not divide ring conductor %d"
                             % (c.n, self.conductor))
        return CycloNum.from_rational(c, self.conductor)

    def zero(self):
        return MultiPoly(self, {})

    def const(self, c):
        c = self.coeff(c)
        if c.is_zero():
            return self.zero()
        return MultiPoly(self, {self._zero_exp: c})

    def one(self):
        return self.const(1)

    def var(self, name):
        i = self.gens.index(name)
        e = [0] * len(self.gens)
        e[i] = 1
        return MultiPoly(self, {tuple(e): self.coeff(1)})

    def vars(self):
        return [self.var(g) for g in self.gens]

    def with_order(self, order):
        return PolyRing(self.gens, self.conductor, order)


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # exps tuple -> nonzero CycloNum

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def lead(self):
        """(exponent tuple, coefficient) of the leading term, or None."""
        if not self.terms:
            return None
        e = max(self.terms, key=self.ring._key)
        return e, self.terms[e]

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_exp, self.ring.coeff(0))

    def coeff_of(self, exps):
        return self.terms.get(tuple(exps), self.ring.coeff(0))

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return used

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring.key() != self.ring.key():
                raise ValueError("polynomial ring mismatch")
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in o.terms.items():
            s = t.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(e, None)
            else:
                t[e] = s
        return MultiPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            c = self.ring.coeff(other)
            if c.is_zero():
                return self.ring.zero()
            return MultiPoly(self.ring, {e: x * c for e, x in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = mono_mul(e1, e2)
                c = c1 * c2
                s = t.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    t.pop(e, None)
                else:
                    t[e] = s
        return MultiPoly(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring.key() == other.ring.key() and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.key(), frozenset(self.terms.items())))

    # -- normalization ---------------------------------------------------------

    def monic(self):
        lt = self.lead()
        if lt is None:
            return self
        _, c = lt
        return self * c.inverse()

    def strip_content(self):
        """Scale by a positive rational so coefficients are integral and primitive."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            for q in c.coeffs:
                den = den * q.denominator // gcd(den, q.denominator)
        num = 0
        for c in self.terms.values():
            for q in c.coeffs:
                num = gcd(num, q.numerator * (den // q.denominator))
        if num == 0:
            return self
        scale = Fraction(den, num)
        if scale == 1:
            return self
        return self * scale

    # -- substitution ---------------------------------------------------------

    def evaluate(self, point):
        """Full evaluation; point maps every used variable name to CycloNum/Fraction.

        Values may live in any cyclotomic field containing the coefficients;
        everything is lifted to a common conductor.
        """
        from .cyclotomic import lift_common
        names = self.ring.gens
        idx_val = {}
        for i, g in enumerate(names):
            if g in point:
                idx_val[i] = point[g]
        need = self.variables_used()
        missing = [names[i] for i in need if i not in idx_val]
        if missing:
            raise ValueError("no value for %s" % ", ".join(missing))
        items = [CycloNum.from_rational(0, self.ring.conductor)]
        items += [v if isinstance(v, CycloNum) else CycloNum.from_rational(v, 1)
                  for v in idx_val.values()]
        lifted = lift_common(*items)
        n = lifted[0].n
        vals = dict(zip(idx_val.keys(), lifted[1:]))
        out = CycloNum.from_rational(0, n)
        for e, c in self.terms.items():
            term = c.embed(n)
            for i, x in enumerate(e):
                if x:
                    term = term * vals[i] ** x
            out = out + term
        return out

    def substitute(self, assignments):
        """Replace some variables by exact values; result lives in a smaller ring.

        The remaining ring keeps the other variables (same relative order) and
        lifts the conductor to contain the substituted values.
        """
        from .cyclotomic import CycloNum as CN
        names = self.ring.gens
        vals = {}
        n = self.ring.conductor
        for k, v in assignments.items():
            if k not in names:
                raise ValueError("unknown variable %r" % (k,))
            v = v if isinstance(v, CN) else CN.from_rational(v, 1)
            n = n * v.n // gcd(n, v.n)
            vals[names.index(k)] = v
        keep = [i for i, g in enumerate(names) if g not in assignments]
        ring2 = PolyRing(tuple(names[i] for i in keep), n, self.ring.order)
        vals = {i: v.embed(n) for i, v in vals.items()}
        out = ring2.zero()
        for e, c in self.terms.items():
            coef = c.embed(n)
            for i, x in enumerate(e):
                if x and i in vals:
                    coef = coef * vals[i] ** x
            mono_e = tuple(e[i] for i in keep)
            out = out + MultiPoly(ring2, {mono_e: ring2.coeff(1)}) * coef
        return out

    def map_ring(self, ring2):
        """Reinterpret in another ring (reordered and/or fewer/more variables,
        possibly a larger conductor).  Variables absent from the target must be
        unused."""
        perm = [ring2.gens.index(g) if g in ring2.gens else None
                for g in self.ring.gens]
        t = {}
        for e, c in self.terms.items():
            e2 = [0] * len(ring2.gens)
            for i, x in enumerate(e):
                if x:
                    if perm[i] is None:
                        raise ValueError("variable %r not in target ring"
                                         % (self.ring.gens[i],))
                    e2[perm[i]] = x
            t[tuple(e2)] = ring2.coeff(c)
        return MultiPoly(ring2, t)

    def univariate_coeffs(self):
        """For a poly using at most one variable: (var_index or None, ascending coeffs)."""
        used = self.variables_used()
        if len(used) > 1:
            raise ValueError("not univariate")
        if not used:
            return None, [self.constant_coeff()]
        i = used.pop()
        deg = max(e[i] for e in self.terms)
        zero = self.ring.coeff(0)
        out = [zero] * (deg + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return i, out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=self.ring._key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                g if x == 1 else "%s^%d" % (g, x)
                for g, x in zip(self.ring.gens, e) if x)
            cs = repr(c)
            if mono and ("+" in cs or "-" in cs[1:] or "*" in cs):
                cs = "(%s)" % cs
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(cs + "*" + mono)
        return " + ".join(parts)


class _Budget:
    __slots__ = ("limit", "steps")

    def __init__(self, limit):
        self.limit = limit if limit is not None else DEFAULT_BUDGET
        self.steps = 0

    def charge(self, k=1):
        self.steps += k
        if self.steps > self.limit:
            raise BudgetExceeded(self.limit)


def normal_form(f, G, budget=None):
    """Remainder of f on division by the list G (multivariate division)."""
    b = budget if isinstance(budget, _Budget) else _Budget(budget)
    ring = f.ring
    key = ring._key
    rem = {}
    work = dict(f.terms)
    leads = [(g, g.lead()) for g in G if g]
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        hit = None
        for g, (ge, gc) in leads:
            if mono_divides(ge, e):
                hit = (g, ge, gc)
                break
        if hit is None:
            rem[e] = c
            continue
        g, ge, gc = hit
        b.charge()
        fac = c * gc.inverse()
        shift = mono_div(e, ge)
        for e2, c2 in g.terms.items():
            if e2 == ge:
                continue
            em = mono_mul(e2, shift)
            s = work.get(em)
            s = -(fac * c2) if s is None else s - fac * c2
            if s.is_zero():
                work.pop(em, None)
            else:
                work[em] = s
    return MultiPoly(ring, rem)


def s_poly(f, g):
    fe, fc = f.lead()
    ge, gc = g.lead()
    l = mono_lcm(fe, ge)
    mf = MultiPoly(f.ring, {mono_div(l, fe): gc})
    mg = MultiPoly(g.ring, {mono_div(l, ge): fc})
    return mf * f - mg * g


def _pure_power_tracker(nvars):
    """Incremental check that lead exponents cover a pure power of every
    variable (the standard finiteness test on a lead ideal).  Feed exponent
    tuples to add(); covered() flips True once every variable is hit or a
    constant shows up."""
    cov = [False] * nvars

    class _T:
        remaining = nvars

        def add(self, e):
            nz = -1
            for idx, x in enumerate(e):
                if x:
                    if nz >= 0:
                        return
                    nz = idx
            if nz < 0:
                self.remaining = 0
                return
            if not cov[nz]:
                cov[nz] = True
                self.remaining -= 1

        def covered(self):
            return self.remaining == 0

    return _T()


def _prep_basis(gens, seed_gb):
    G = []
    for f in (seed_gb or []):
        if f:
            G.append(f)
    nseed = len(G)
    seen = {frozenset(g.terms.items()) for g in G}
    for f in gens:
        if f:
            f = f.strip_content()
            fk = frozenset(f.terms.items())
            if fk not in seen:
                seen.add(fk)
                G.append(f)
    return G, nseed


def buchberger(gens, budget=None, seed_gb=None):
    """Reduced Groebner basis of the given generators, in their ring's order.

    seed_gb: an already-known Groebner basis contained in the ideal; pairs
    internal to the seed are skipped (their S-polynomials already reduce to
    zero), which makes incremental extension by a few new generators cheap.

    Rational-coefficient rings take an integer pseudo-reduction path that is
    much faster on dense systems; cyclotomic-coefficient rings use the
    generic field reduction.
    """
    b = budget if isinstance(budget, _Budget) else _Budget(budget)
    G, nseed = _prep_basis(gens, seed_gb)
    if not G:
        return []
    ring = G[0].ring
    if ring.conductor == 1:
        basis, _ = _rat_buchberger(ring, G, nseed, b)
        return interreduce(basis, b)
    basis = _gen_buchberger(G, nseed, b)
    return interreduce(basis, b)


def zero_dim_witness(gens, budget=None, seed_gb=None):
    """Certify that the ideal's zero set is finite without finishing a basis.

    Runs the Buchberger loop but stops as soon as the working basis holds an
    element with a pure-power lead for every variable: every intermediate
    element lies in the ideal, so those leads sit in the lead ideal and force
    dimension <= 0.  Returns (witnessed, polys); when witnessed is False the
    loop ran to completion and polys is the reduced basis (the ideal is then
    genuinely positive-dimensional or trivial, decidable from it).  The
    witness set is NOT a Groebner basis.
    """
    b = budget if isinstance(budget, _Budget) else _Budget(budget)
    G, nseed = _prep_basis(gens, seed_gb)
    if not G:
        return False, []
    ring = G[0].ring
    if ring.conductor == 1:
        basis, witnessed = _rat_buchberger(ring, G, nseed, b, stop_pure=True)
        if witnessed:
            return True, basis
        return False, interreduce(basis, b)
    tracker = _pure_power_tracker(ring.nvars())
    basis = _gen_buchberger(G, nseed, b, tracker)
    if tracker.covered():
        return True, basis
    return False, interreduce(basis, b)


def _gen_buchberger(G, nseed, b, tracker=None):
    ring = G[0].ring
    key = ring._key
    pairs = set()
    done = set()

    def lcm_of(i, j):
        return mono_lcm(G[i].lead()[0], G[j].lead()[0])

    for i in range(len(G)):
        for j in range(max(i + 1, nseed), len(G)):
            pairs.add((i, j))
    for i in range(nseed):
        for j in range(i + 1, nseed):
            done.add((i, j))
    if tracker is not None:
        for g in G:
            tracker.add(g.lead()[0])
        if tracker.covered():
            return G

    while pairs:
        i, j = min(pairs, key=lambda p: (key(lcm_of(*p)), p))
        pairs.discard((i, j))
        done.add((i, j))
        ei, ej = G[i].lead()[0], G[j].lead()[0]
        l = mono_lcm(ei, ej)
        # coprimality criterion
        if l == mono_mul(ei, ej):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(G[k].lead()[0], l):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in done and p2 in done:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(s_poly(G[i], G[j]), G, b)
        if r.is_zero():
            continue
        r = r.strip_content()
        t = len(G)
        G.append(r)
        for m in range(t):
            pairs.add((m, t))
        if tracker is not None:
            tracker.add(r.lead()[0])
            if tracker.covered():
                return G

    return G


# -- fast integer pseudo-reduction path for rational rings --------------------


_NEG_KEYS = {
    "grevlex": lambda e: (-sum(e), tuple(reversed(e))),
    "lex": lambda e: tuple(-x for x in e),
}


def _rat_from_poly(f):
    """Primitive integer term dict of a rational-coefficient MultiPoly."""
    den = 1
    for c in f.terms.values():
        q = c.coeffs[0]
        den = den * q.denominator // gcd(den, q.denominator)
    d = {}
    g = 0
    for e, c in f.terms.items():
        q = c.coeffs[0]
        v = q.numerator * (den // q.denominator)
        d[e] = v
        g = gcd(g, v)
    if g > 1:
        for e in d:
            d[e] //= g
    return d


def _rat_to_poly(ring, d):
    return MultiPoly(ring, {e: CycloNum.from_rational(Fraction(v), 1)
                            for e, v in d.items()})


def _int_strip(*dicts):
    """Divide the joint coefficient content out of several term dicts."""
    g = 0
    for d in dicts:
        for v in d.values():
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for d in dicts:
            for e in d:
                d[e] //= g


def _rat_reduce(fd, les, lcs, tails, key, negkey, budget, top=False):
    """Normal form of an integer term dict against cached basis data.

    les/lcs/tails: leading exponents, leading integer coefficients, and tail
    term lists of the basis.  Pseudo-reduction: the work polynomial is scaled
    by integers, never divided, and the content is stripped periodically.
    With top=True reduction stops at the first irreducible lead (tail terms
    stay untouched), which is all the Buchberger loop needs and avoids most
    of the coefficient churn on dense systems.
    """
    work = dict(fd)
    rem = {}
    heap = [(negkey(e), e) for e in work]
    heapq.heapify(heap)
    nb = len(les)
    steps_since_strip = 0
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue
        # among the divisors prefer the one with the shortest tail: it adds
        # the fewest new terms and the least coefficient growth
        hit = -1
        hit_len = -1
        for t in range(nb):
            if mono_divides(les[t], e):
                tl = len(tails[t])
                if hit < 0 or tl < hit_len:
                    hit, hit_len = t, tl
                    if tl == 0:
                        break
        if hit < 0:
            if top:
                work[e] = c
                _int_strip(work)
                return work
            rem[e] = c
            continue
        budget.charge()
        gc = lcs[hit]
        d = gcd(gc, c)
        a = gc // d
        bb = c // d
        if a != 1:
            for k2 in work:
                work[k2] *= a
            for k2 in rem:
                rem[k2] *= a
        shift = mono_div(e, les[hit])
        for e2, c2 in tails[hit]:
            em = mono_mul(e2, shift)
            s = work.get(em)
            if s is None:
                v = -bb * c2
                if v:
                    work[em] = v
                    heapq.heappush(heap, (negkey(em), em))
            else:
                s = s - bb * c2
                if s:
                    work[em] = s
                else:
                    del work[em]
        steps_since_strip += 1
        if steps_since_strip >= 32:
            steps_since_strip = 0
            _int_strip(work, rem)
    _int_strip(rem)
    return rem


def _rat_buchberger(ring, G_polys, nseed, budget, stop_pure=False):
    """Buchberger loop on primitive integer term dicts.

    Returns (polys, witnessed).  With stop_pure the loop exits early once the
    basis leads cover a pure power of every variable (witnessed True; the
    returned set is then not a full basis, just ideal members carrying the
    finiteness certificate).
    """
    key = ring._key
    negkey = _NEG_KEYS[ring.order]
    G = [_rat_from_poly(g) for g in G_polys]
    les, lcs, tails = [], [], []
    tracker = _pure_power_tracker(ring.nvars()) if stop_pure else None

    def register(d):
        e = max(d, key=key)
        les.append(e)
        lcs.append(d[e])
        tails.append([(e2, c2) for e2, c2 in d.items() if e2 != e])
        if tracker is not None:
            tracker.add(e)

    for d in G:
        register(d)
    if tracker is not None and tracker.covered():
        return [_rat_to_poly(ring, d) for d in G], True
    seen = {frozenset(d.items()) for d in G}
    pair_heap = []
    done = set()
    for i in range(len(G)):
        for j in range(max(i + 1, nseed), len(G)):
            heapq.heappush(pair_heap, (key(mono_lcm(les[i], les[j])), i, j))
    for i in range(nseed):
        for j in range(i + 1, nseed):
            done.add((i, j))

    while pair_heap:
        _, i, j = heapq.heappop(pair_heap)
        if (i, j) in done:
            continue
        done.add((i, j))
        ei, ej = les[i], les[j]
        l = mono_lcm(ei, ej)
        if l == mono_mul(ei, ej):
            continue
        skip = False
        for t in range(len(G)):
            if t in (i, j):
                continue
            if mono_divides(les[t], l):
                p1 = (min(i, t), max(i, t))
                p2 = (min(j, t), max(j, t))
                if p1 in done and p2 in done:
                    skip = True
                    break
        if skip:
            continue
        # integer S-polynomial
        d = gcd(lcs[i], lcs[j])
        ai = lcs[j] // d
        aj = lcs[i] // d
        si = mono_div(l, ei)
        sj = mono_div(l, ej)
        sp = {}
        for e2, c2 in tails[i]:
            sp[mono_mul(e2, si)] = ai * c2
        for e2, c2 in tails[j]:
            em = mono_mul(e2, sj)
            v = sp.get(em, 0) - aj * c2
            if v:
                sp[em] = v
            else:
                sp.pop(em, None)
        if not sp:
            continue
        r = _rat_reduce(sp, les, lcs, tails, key, negkey, budget)
        if not r:
            continue
        rk = frozenset(r.items())
        if rk in seen:
            continue
        seen.add(rk)
        t = len(G)
        G.append(r)
        register(r)
        if tracker is not None and tracker.covered():
            return [_rat_to_poly(ring, d) for d in G], True
        for m in range(t):
            heapq.heappush(pair_heap, (key(mono_lcm(les[m], les[t])), m, t))

    return [_rat_to_poly(ring, d) for d in G], False


def interreduce(G, budget=None):
    """Minimal reduced monic basis from any basis of the ideal."""
    b = budget if isinstance(budget, _Budget) else _Budget(budget)
    G = [g for g in G if g]
    if not G:
        return []
    key = G[0].ring._key
    # drop elements whose lead is divisible by another lead
    G = sorted(G, key=lambda g: key(g.lead()[0]))
    minimal = []
    for g in G:
        ge = g.lead()[0]
        if not any(mono_divides(h.lead()[0], ge) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, rest, b)
        if r:
            out.append(r.monic())
    out.sort(key=lambda g: key(g.lead()[0]))
    return out


class Ideal:
    """An ideal with cached Groebner bases per monomial order."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = [g for g in gens]
        self._gb = {}

    def groebner(self, order=None, budget=None):
        order = order or self.ring.order
        if order not in self._gb:
            if order == self.ring.order:
                gens = self.gens
                ring = self.ring
            else:
                ring = self.ring.with_order(order)
                gens = [g.map_ring(ring) for g in self.gens]
            self._gb[order] = buchberger(gens, budget)
        return self._gb[order]

    def seed_groebner(self, order, basis):
        """Install a precomputed basis (trusted reduced GB) for an order."""
        self._gb[order] = basis

    def has_groebner(self, order=None):
        return (order or self.ring.order) in self._gb

    def is_trivial(self, budget=None):
        gb = self.groebner(budget=budget)
        return len(gb) == 1 and gb[0].is_constant()

    def dimension_certificate(self, budget=None):
        """(dimension, exact).  Exact dimension when a basis is cached or the
        Buchberger loop finishes in budget; otherwise tries the early
        finiteness witness and returns (0, False) meaning certified dim <= 0
        with the zero set possibly empty."""
        order = self.ring.order
        if order in self._gb:
            return self.dimension(budget), True
        witnessed, basis = zero_dim_witness(self.gens, budget)
        if witnessed:
            if any(f.is_constant() for f in basis if f):
                return -1, True
            return 0, False
        self._gb[order] = basis
        return self.dimension(budget), True

    def normal_form(self, f, budget=None):
        gb = self.groebner(budget=budget)
        ring = gb[0].ring if gb else self.ring
        if f.ring.key() != ring.key():
            f = f.map_ring(ring)
        return normal_form(f, gb, budget)

    def dimension(self, budget=None):
        """Krull dimension of the quotient: -1 if trivial, else the maximum size
        of a variable subset not meeting any leading-term support."""
        gb = self.groebner(budget=budget)
        if not gb:
            return self.ring.nvars()
        if len(gb) == 1 and gb[0].is_constant():
            return -1
        supports = []
        for g in gb:
            e = g.lead()[0]
            supports.append(frozenset(i for i, x in enumerate(e) if x))
        n = self.ring.nvars()
        best = 0
        for mask in range(1 << n):
            s = {i for i in range(n) if mask >> i & 1}
            if len(s) <= best:
                continue
            if all(not sup <= s for sup in supports):
                best = len(s)
        return best

    def standard_monomials(self, budget=None, cap=100000):
        """Monomials outside the leading-term ideal; requires dimension <= 0."""
        gb = self.groebner(budget=budget)
        dim = self.dimension(budget=budget)
        if dim > 0:
            raise ValueError("positive-dimensional ideal has infinitely many "
                             "standard monomials (dim %d)" % dim)
        if dim == -1:
            return []
        leads = [g.lead()[0] for g in gb]
        n = self.ring.nvars()
        start = (0,) * n
        seen = {start}
        queue = [start]
        out = []
        while queue:
            e = queue.pop()
            if any(mono_divides(l, e) for l in leads):
                continue
            out.append(e)
            if len(out) > cap:
                raise ValueError("standard monomial count exceeds cap")
            for i in range(n):
                e2 = e[:i] + (e[i] + 1,) + e[i + 1:]
                if e2 not in seen:
                    seen.add(e2)
                    queue.append(e2)
        out.sort(key=self.ring._key)
        return out

    def eliminate(self, keep, budget=None):
        """Generators of the elimination ideal in the kept variables.

        Builds a lex ring with the dropped variables first, computes the lex
        basis, and returns the elements involving only kept variables, mapped
        into a ring over the kept variables.
        """
        keep = list(keep)
        drop = [g for g in self.ring.gens if g not in keep]
        ring_elim = PolyRing(tuple(drop + keep), self.ring.conductor, "lex")
        gens = [g.map_ring(ring_elim) for g in self.gens]
        gb = buchberger(gens, budget)
        ring_out = PolyRing(tuple(keep), self.ring.conductor, "lex")
        ndrop = len(drop)
        out = []
        for g in gb:
            if all(all(x == 0 for x in e[:ndrop]) for e in g.terms):
                out.append(g.map_ring(ring_out))
        return out
