"""Groebner engine: oracle comparisons against sympy, property suites for
basis certification, and the documented dimension/elimination examples."""

import random
from fractions import Fraction

import pytest
import sympy

from dmrep.cyclotomic import CycloNum
from dmrep.poly import (BudgetExceeded, Ideal, MultiPoly, PolyRing,
                        buchberger, normal_form, zero_dim_witness)


def ring2(order="grevlex", conductor=1):
    return PolyRing(("x", "y"), conductor, order)


def ring3(order="grevlex", conductor=1):
    return PolyRing(("x", "y", "z"), conductor, order)


def from_sympy(ring, expr, syms):
    poly = sympy.Poly(expr, *syms)
    out = ring.zero()
    for mono, coeff in poly.terms():
        c = Fraction(int(sympy.numer(coeff)), int(sympy.denom(coeff)))
        term = ring.const(c)
        for g, e in zip(ring.gens, mono):
            if e:
                term = term * ring.var(g) ** e
        out = out + term
    return out


def to_sympy(f, syms):
    out = 0
    for e, c in f.terms.items():
        q = c.rational_value()
        t = sympy.Rational(q.numerator, q.denominator)
        for s, ei in zip(syms, e):
            if ei:
                t *= s ** ei
        out += t
    return out


def sympy_reduced_gb(polys, ring, syms):
    order = "grevlex" if ring.order == "grevlex" else "lex"
    G = sympy.groebner([to_sympy(f, syms) for f in polys], *syms, order=order)
    return [from_sympy(ring, g, syms) for g in G.exprs]


def canon(f):
    return tuple(sorted((e, c.n, tuple(c.coeffs)) for e, c in f.terms.items()))


def monic_sorted(G):
    out = []
    for g in G:
        _, lc = g.lead()
        out.append(g * lc.inverse())
    return sorted(out, key=canon)


def rand_poly(rng, ring, deg=3, nterms=4, span=5):
    nv = ring.nvars()
    out = ring.zero()
    for _ in range(nterms):
        term = ring.const(Fraction(rng.randint(-span, span)))
        budgetd = rng.randint(0, deg)
        for _ in range(budgetd):
            g = ring.gens[rng.randrange(nv)]
            term = term * ring.var(g)
        out = out + term
    return out


# -- arithmetic and orders -------------------------------------------------------


def test_poly_arithmetic_ring_axioms():
    rng = random.Random(42)
    ring = ring3()
    for _ in range(15):
        a, b, c = (rand_poly(rng, ring) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a - a).is_zero()


def test_grevlex_vs_lex_leads():
    ring_g = ring2("grevlex")
    x, y = ring_g.var("x"), ring_g.var("y")
    f = x * y ** 2 + x ** 2  # grevlex: x*y^2 (deg 3) beats x^2
    assert f.lead()[0] == (1, 2)
    ring_l = ring2("lex")
    x, y = ring_l.var("x"), ring_l.var("y")
    f = x * y ** 2 + x ** 2
    assert f.lead()[0] == (2, 0)  # lex: x^2 beats x*y^2


def test_normal_form_is_idempotent_and_linear():
    rng = random.Random(8)
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    G = buchberger([x ** 2 + y, x * y - 1])
    for _ in range(10):
        f = rand_poly(rng, ring, deg=4)
        r = normal_form(f, G)
        assert normal_form(r, G) == r
        g = rand_poly(rng, ring, deg=4)
        assert normal_form(f + g, G) == normal_form(
            normal_form(f, G) + normal_form(g, G), G)


# -- oracle comparisons ----------------------------------------------------------


SYSTEMS_2 = [
    ("x**2 + y**2 - 1", "x - y"),
    ("x**3 - 2*x*y", "x**2*y - 2*y**2 + x"),
    ("x**2 + y", "y**2 + x", "x*y - 1"),
]


@pytest.mark.parametrize("order", ["grevlex", "lex"])
@pytest.mark.parametrize("sysidx", range(len(SYSTEMS_2)))
def test_reduced_gb_matches_sympy(order, sysidx):
    ring = ring2(order)
    xs = sympy.symbols("x y")
    polys = [from_sympy(ring, sympy.sympify(s), xs) for s in SYSTEMS_2[sysidx]]
    ours = monic_sorted(buchberger(polys))
    theirs = monic_sorted(sympy_reduced_gb(polys, ring, xs))
    assert ours == theirs


def test_random_gb_matches_sympy():
    rng = random.Random(2)
    xs = sympy.symbols("x y z")
    for trial in range(6):
        ring = ring3()
        polys = [rand_poly(rng, ring, deg=2, nterms=3) for _ in range(3)]
        polys = [f for f in polys if f and not f.is_constant()]
        if not polys:
            continue
        ours = monic_sorted(buchberger(polys))
        theirs = monic_sorted(sympy_reduced_gb(polys, ring, xs))
        assert ours == theirs, trial


def test_cyclotomic_coefficient_gb():
    # same system over Q and over Q(zeta_3) with a zeta constant folded in
    ring = ring2(conductor=3)
    x, y = ring.var("x"), ring.var("y")
    w = ring.const(CycloNum.zeta(3))
    G = buchberger([x ** 2 - w, y - x])
    I = Ideal(ring, [x ** 2 - w, y - x])
    assert I.dimension() == 0
    # y^2 - w must reduce to zero: it is in the ideal
    assert normal_form(y ** 2 - w, G).is_zero()


# -- property suites ---------------------------------------------------------------


def spoly_pairs(G):
    from dmrep.poly import s_poly as spoly
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            yield spoly(G[i], G[j])


def test_every_spoly_reduces_to_zero():
    rng = random.Random(77)
    ring = ring2()
    for _ in range(8):
        polys = [rand_poly(rng, ring, deg=3, nterms=3) for _ in range(3)]
        polys = [f for f in polys if f]
        if not polys:
            continue
        G = buchberger(polys)
        for s in spoly_pairs(G):
            assert normal_form(s, G).is_zero()


def test_reduced_gb_stable_under_shuffle():
    rng = random.Random(123)
    ring = ring3()
    base = [rand_poly(rng, ring, deg=2, nterms=3) for _ in range(4)]
    base = [f for f in base if f]
    G0 = monic_sorted(buchberger(base))
    for _ in range(6):
        shuffled = base[:]
        rng.shuffle(shuffled)
        assert monic_sorted(buchberger(shuffled)) == G0


def test_dimension_independent_of_generator_order():
    rng = random.Random(5)
    ring = ring3()
    x, y, z = (ring.var(g) for g in ("x", "y", "z"))
    systems = [
        [x * y, y * z],
        [x ** 2 - 1, y - x, z - y],
        [x - y, x + y],
    ]
    for gens in systems:
        d0 = Ideal(ring, gens).dimension()
        for _ in range(4):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert Ideal(ring, shuffled).dimension() == d0


def test_generic_and_rational_paths_agree():
    # the same rational input run through the conductor-1 fast path and,
    # after embedding into Q(zeta_3), through the generic path
    rng = random.Random(31)
    r1 = ring2(conductor=1)
    r3 = ring2(conductor=3)
    for _ in range(5):
        polys1 = [rand_poly(rng, r1, deg=3, nterms=3) for _ in range(3)]
        polys1 = [f for f in polys1 if f]
        if not polys1:
            continue
        polys3 = [MultiPoly(r3, {e: c.embed(3) for e, c in f.terms.items()})
                  for f in polys1]
        G1 = monic_sorted(buchberger(polys1))
        G3 = monic_sorted(buchberger(polys3))
        assert len(G1) == len(G3)
        for g1, g3 in zip(G1, G3):
            assert set(g1.terms) == set(g3.terms)
            for e, c in g1.terms.items():
                assert g3.terms[e] == c.embed(3)


# -- dimension, elimination, witness -----------------------------------------------


def test_dimension_examples():
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    assert Ideal(ring, [x * y]).dimension() == 1
    assert Ideal(ring, [x, y]).dimension() == 0
    assert Ideal(ring, [x - x]).dimension() == 2
    assert Ideal(ring, [ring.one()]).dimension() == -1
    r1v = PolyRing(("x",), 1, "grevlex")
    x = r1v.var("x")
    assert Ideal(r1v, [x ** 2 + x + 1]).dimension() == 0


def test_is_trivial():
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    assert Ideal(ring, [x, y, x * y - 1]).is_trivial()
    assert not Ideal(ring, [x * y - 1]).is_trivial()


def test_eliminate_examples():
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    gens = Ideal(ring, [x - y]).eliminate(["y"])
    assert all(g.is_zero() for g in gens) or gens == []
    gens = Ideal(ring, [x ** 2 - y, x - 1]).eliminate(["y"])
    assert len(gens) == 1
    g = gens[0]
    ylocal = g.ring.var("y")
    one = g.ring.one()
    _, lc = g.lead()
    assert g * lc.inverse() == ylocal - one


def test_standard_monomials_count():
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    I = Ideal(ring, [x ** 2 - 1, y ** 3 - y])
    assert len(I.standard_monomials()) == 6


def test_budget_exceeded_raises():
    ring = ring3()
    x, y, z = (ring.var(g) for g in ("x", "y", "z"))
    gens = [x ** 3 * y - z ** 2, y ** 3 * z - x ** 2, z ** 3 * x - y ** 2]
    with pytest.raises(BudgetExceeded):
        buchberger(gens, 3)


def test_zero_dim_witness_on_finite_system():
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    witnessed, polys = zero_dim_witness([x ** 2 - 1, y ** 2 - x])
    # either the witness fired early or the full basis came back; both must
    # be consistent with a finite zero set
    if witnessed:
        assert polys
    else:
        assert Ideal(ring, [x ** 2 - 1, y ** 2 - x]).dimension() == 0


def test_zero_dim_witness_sound_on_curve():
    # a 1-dimensional ideal must never be witnessed as finite
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    witnessed, polys = zero_dim_witness([x * y - 1])
    assert not witnessed
    I = Ideal(ring, [x * y - 1])
    assert I.dimension() == 1


def test_witness_polys_are_ideal_members():
    # every returned element must reduce to zero against an honest basis
    ring = ring2()
    x, y = ring.var("x"), ring.var("y")
    gens = [x ** 2 + y ** 2 - 4, x * y - 1]
    witnessed, polys = zero_dim_witness(gens)
    G = buchberger(gens)
    for f in polys:
        assert normal_form(f, G).is_zero()
