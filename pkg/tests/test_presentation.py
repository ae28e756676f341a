"""Word algebra and the type-one presentations."""

import pytest

from dmrep.cyclotomic import CycloNum
from dmrep.linalg import identity, is_scalar_mat, mat_mul
from dmrep.presentation import Presentation, Word, commutator, evaluate_word
from dmrep.reference import published_alpha_points, type_one_lattices
from dmrep.repfamily import family, instantiate


def mat_eq(A, B):
    return all((a - b).is_zero() for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_scalar(A):
    return is_scalar_mat(A, lambda e: e.is_zero()) is not None


def test_word_merges_adjacent_letters():
    w = Word([("J", 1), ("J", 2), ("R", 1), ("R", 1)])
    assert w.letters == (("J", 3), ("R", 2))
    assert len(w) == 5


def test_word_drops_zero_exponents():
    assert Word([("J", 0), ("R", 2)]).letters == (("R", 2),)
    assert Word([]).letters == ()


def test_word_rejects_bad_letters():
    with pytest.raises(ValueError):
        Word([("X", 1)])
    with pytest.raises(ValueError):
        Word([("J", -1)])


def test_word_mul_and_pow():
    a = Word([("J", 1)])
    b = Word([("R", 2)])
    assert (a * b).letters == (("J", 1), ("R", 2))
    assert (a * a).letters == (("J", 2),)
    assert ((a * b) ** 2).letters == (("J", 1), ("R", 2), ("J", 1), ("R", 2))
    with pytest.raises(ValueError):
        a ** -1


def test_parse_roundtrip():
    w = Word.parse("J R1^2 J2 R")
    assert w.letters == (("J", 1), ("R", 2), ("J", 2), ("R", 1))
    assert Word.parse(repr(w)) == w
    # compact form, single digit exponents, * separators
    assert Word.parse("JRRJ2") == Word([("J", 1), ("R", 2), ("J", 2)])
    assert Word.parse("J*R1*J^2") == Word([("J", 1), ("R", 1), ("J", 2)])


def test_parse_negative_exponents_projectively():
    assert Word.parse("J^-1") == Word([("J", 2)])
    assert Word.parse("R^-1", p=5) == Word([("R", 4)])
    with pytest.raises(ValueError):
        Word.parse("R^-1")  # needs p
    with pytest.raises(ValueError):
        Word.parse("J Q")


def test_exponent_sums_as_written():
    w = Word([("J", 2), ("R", 3), ("J", 1)])
    assert w.exponent_sums() == (3, 3)


def test_presentation_validates_type_one():
    good = set(type_one_lattices())
    for p, k in good:
        Presentation(p, k)
    for p, k in [(3, 7), (4, 5), (5, 4), (6, 4), (7, 1), (0, 1), (3, 0)]:
        with pytest.raises(ValueError):
            Presentation(p, k)
    with pytest.raises(ValueError):
        Presentation(3.0, 6)


def test_relator_shapes():
    pres = Presentation(3, 6)
    rel = pres.relators()
    assert list(rel) == ["J3", "Rp", "RJ2k", "W"]
    assert rel["J3"] == Word([("J", 3)])
    assert rel["Rp"] == Word([("R", 3)])
    assert len(rel["RJ2k"]) == 2 * 2 * 6
    # W = R1 J R1 J^2 R1 J R1^(p-1) J^2 R1^(p-1) J R1^(p-1) J^2
    sj, sr = rel["W"].exponent_sums()
    assert (sj, sr) == (9, 3 * 3)
    assert pres.relator_exponent_sums()["RJ2k"] == (2 * 6, 2 * 6)


def published_matrices(name="alpha7"):
    fam = family("refl_regular", 3, 6)
    vals = dict(next(v for nm, v in published_alpha_points() if nm == name))
    Jm, Rm, _, n = instantiate(fam, vals)
    one = CycloNum.from_rational(1, n)
    return Jm, Rm, one


def test_evaluate_matches_direct_product():
    Jm, Rm, one = published_matrices()
    w = Word.parse("R1 J^2 R1^2 J")
    direct = mat_mul(mat_mul(Rm, mat_mul(Jm, Jm)), mat_mul(mat_mul(Rm, Rm), Jm))
    assert mat_eq(evaluate_word(w, Jm, Rm, one), direct)
    assert mat_eq(Word([]).evaluate(Jm, Rm, one), identity(3, one))


def test_inverse_is_projective_inverse():
    Jm, Rm, one = published_matrices()
    w = Word.parse("J R1^2 J^2 R1 J")
    prod = mat_mul(w.evaluate(Jm, Rm, one), w.inverse(3).evaluate(Jm, Rm, one))
    assert is_scalar(prod)


def test_commutator_of_word_with_itself_is_scalar():
    Jm, Rm, one = published_matrices()
    w = Word.parse("J R1")
    c = commutator(w, w * w, 3)
    prod = c.evaluate(Jm, Rm, one)
    assert is_scalar(prod)


def test_cusp_words():
    pres = Presentation(3, 6)
    assert pres.cusp_r2() == Word.parse("J R1 J^2")
    assert pres.cusp_a1() == Word.parse("J R1^2 J^2 R1^2 J")
    center = pres.cusp_center()
    assert center == pres.cusp_r2() * pres.cusp_a1() * pres.cusp_r2() * pres.cusp_a1()
    gens = pres.cusp_parabolic_gens()
    assert len(gens) == 3 and gens[2] == center


def test_word_immutable_and_hashable():
    w = Word.parse("J R1")
    with pytest.raises(AttributeError):
        w.letters = ()
    assert len({w, Word.parse("JR")}) == 1
