"""Matrix families per generator case and their relator ideals."""

import pytest

from dmrep.cyclotomic import CycloNum
from dmrep.linalg import is_scalar_mat
from dmrep.reference import (published_alpha_points, published_both_regular,
                             published_degenerate_r2)
from dmrep.repfamily import (CASES, RepPoint, family, check_side_conditions,
                             instantiate, projective_identity_eqs,
                             relators_to_ideal)
from dmrep.solver import verify


def alpha_values(name):
    return dict(next(v for nm, v in published_alpha_points() if nm == name))


def test_case_names():
    assert CASES == ("refl_regular", "refl_degenerate_1", "refl_degenerate_2",
                     "inverted", "both_regular")
    with pytest.raises(ValueError):
        family("nonsense", 3, 6)


def test_refl_regular_family_shape():
    fam = family("refl_regular", 3, 6)
    assert fam.ring.gens == ("r1", "r2")
    assert fam.ring.conductor == 3
    assert fam.side == []
    assert fam.branch["order"] == 3
    # J_std rows and the reflection template column structure
    j = [[e.constant_coeff() for e in row] for row in fam.J]
    assert [[c.rational_value() for c in row] for row in j] == \
        [[0, 0, 1], [-1, 0, 0], [0, 1, 0]]
    assert fam.R[1][0].is_zero() and fam.R[2][0].is_zero()


def test_refl_regular_branch_roots():
    f1 = family("refl_regular", 3, 6, branch_root=1)
    f2 = family("refl_regular", 3, 6, branch_root=2)
    x1, x2 = f1.branch["x"], f2.branch["x"]
    assert (x1 * x2 - CycloNum.from_rational(1, 3)).is_zero()  # conjugate roots
    with pytest.raises(ValueError):
        family("refl_regular", 4, 2, refl_order=4, branch_root=2)
    with pytest.raises(ValueError):
        family("refl_regular", 3, 6, refl_order=5)


def test_degenerate_families():
    for case, r1val in (("refl_degenerate_1", 1), ("refl_degenerate_2", 0)):
        fam = family(case, 3, 6)
        assert fam.ring.gens == ("r2", "x")
        assert len(fam.side) == 1  # Phi_d(x)
        assert fam.R[0][2].constant_coeff().rational_value() == r1val
        # J is the fixed diagonal regular elliptic
        assert fam.J[0][0].constant_coeff().rational_value() == 1
        assert fam.J[1][1].constant_coeff() == CycloNum.zeta(3)


def test_both_regular_family():
    fam = family("both_regular", 3, 6)
    assert fam.ring.gens == ("s1", "s2", "s3", "r1", "r2")
    assert fam.ring.conductor == 1  # eigenvalues 1, w, w^2 have rational sums
    assert len(fam.side) == 2
    with pytest.raises(ValueError):
        family("both_regular", 3, 6, eigen_pair=(2, 1))
    with pytest.raises(ValueError):
        family("both_regular", 3, 6, eigen_pair=(0, 2))


def test_projective_identity_eqs():
    fam = family("refl_regular", 3, 6)
    one, zero = fam.ring.one(), fam.ring.zero()
    ident = [[one, zero, zero], [zero, one, zero], [zero, zero, one]]
    assert projective_identity_eqs(ident) == []
    two = one + one
    assert len(projective_identity_eqs(
        [[one, zero, zero], [zero, two, zero], [zero, zero, one]])) == 2


def test_published_alpha_points_satisfy_relators():
    fam = family("refl_regular", 3, 6)
    for name in ("alpha1", "alpha7", "alpha13"):
        cert, pt = verify(fam, alpha_values(name))
        assert cert["ok"], name
        assert pt is not None
        for lam in pt.relator_scalars.values():
            assert not lam.is_zero()


def test_published_both_regular_points_satisfy_relators():
    fam = family("both_regular", 3, 6)
    pts = published_both_regular()
    assert len(pts) == 11
    for vals in pts[:3]:
        assert check_side_conditions(
            fam, {g: v.embed(3) for g, v in vals.items()})
        cert, pt = verify(fam, vals)
        assert cert["ok"], vals
        assert pt is not None


def test_degenerate_published_r2_values():
    # both degenerate block forms recover their published r2 values exactly
    for case in ("refl_degenerate_1", "refl_degenerate_2"):
        fam = family(case, 3, 6)
        for x, r2 in published_degenerate_r2():
            cert, pt = verify(fam, {"x": x, "r2": r2})
            assert cert["ok"], (case, x, r2)


def test_perturbed_point_fails_verification():
    fam = family("refl_regular", 3, 6)
    vals = alpha_values("alpha7")
    from fractions import Fraction
    eps = CycloNum.from_rational(Fraction(1, 10 ** 40), 3)  # tiny rational nudge
    vals["r1"] = vals["r1"] + eps
    cert, pt = verify(fam, vals)
    assert not cert["ok"]
    assert pt is None
    assert cert["failing"]


def test_instantiate_requires_all_values():
    fam = family("refl_regular", 3, 6)
    with pytest.raises(ValueError):
        instantiate(fam, {"r1": 0})


def test_relator_ideal_vanishes_at_published_points():
    fam = family("refl_regular", 3, 6)
    ideal = relators_to_ideal(fam)
    for name in ("alpha1", "alpha8"):
        vals = alpha_values(name)
        for g in ideal.gens:
            assert g.evaluate(vals).is_zero(), (name, g)


def test_reppoint_key_separates_branches():
    vals = alpha_values("alpha7")
    pts = []
    for root in (1, 2):
        fam = family("refl_regular", 3, 6, branch_root=root)
        cert, pt = verify(fam, {g: v.conj() if root == 2 else v
                                for g, v in vals.items()})
        if pt is not None:
            pts.append(pt)
    assert len(pts) == 2
    assert pts[0].key() != pts[1].key()
    assert pts[0].key()[0] == "refl_regular"


def test_identity_reflection_point():
    from dmrep.solver import identity_reflection_rep
    pt, cert = identity_reflection_rep(3, 6)
    assert cert["ok"]
    assert pt is not None
    lam = is_scalar_mat(pt.R, lambda e: e.is_zero())
    assert lam is not None and not lam.is_zero()
