import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from m2sl2 import (
    ONE,
    CanonicalMonomial,
    GradeMismatchError,
    LieBracket,
    LieVar,
    QPoly,
    commutator,
    enumerate_basis,
    identity_generators,
    lie_to_poly,
    monomial_from_obj,
    monomial_to_obj,
    normalize,
    poly_from_obj,
    poly_to_obj,
    q_mul,
    reduce_word,
    subst,
    subst_words,
    word,
    y,
    z,
)
from tests.util import rand_lie, rand_monomial, rand_qpoly, rand_word


def mk(yexp=(), cseq=(), dseq=()):
    return CanonicalMonomial.make(yexp, cseq, dseq)


# --- canonical form ----------------------------------------------------------

def test_monomial_validation():
    with pytest.raises(ValueError):
        CanonicalMonomial((0,), (), ())  # untrimmed exponent vector
    with pytest.raises(ValueError):
        CanonicalMonomial((), (2, 1), ())  # unsorted slot sequence
    with pytest.raises(ValueError):
        CanonicalMonomial((), (), (1,))  # d-slots cannot outnumber c-slots
    with pytest.raises(ValueError):
        CanonicalMonomial((), (1, 2), (3, 4, 5))
    # length difference of one is the odd-length case
    CanonicalMonomial((), (1, 2), (1,))


def test_monomial_props():
    m = mk((2, 0, 1), (1, 3), (2,))
    assert m.degree == 6
    assert m.grade == 1
    assert not m.is_pure_y
    assert m.max_index == 3
    assert ONE.degree == 0 and ONE.is_pure_y
    assert m.word() == (("y", 1), ("y", 1), ("y", 3), ("z", 1), ("z", 2), ("z", 3))


def test_reduce_word_examples():
    assert reduce_word(word(y(2), y(1))) == (1, mk((1, 1)))
    assert reduce_word(word(z(1), y(1))) == (-1, mk((1,), (1,)))
    assert reduce_word(word(z(3), z(2), z(1))) == (1, mk((), (1, 3), (2,)))
    sign, m = reduce_word(word(y(1), z(2), z(1), z(3)))
    assert sign == 1
    assert m == mk((1,), (2, 3), (1,))


def test_reduce_word_sign_counts_yz_inversions():
    # z y y: the z letter hops over two y's
    assert reduce_word(word(z(1), y(1), y(2)))[0] == 1
    assert reduce_word(word(z(1), y(1)))[0] == -1
    assert reduce_word(word(y(1), z(1)))[0] == 1


def test_reduce_word_idempotent_randomized():
    rng = random.Random(40)
    for _ in range(300):
        m = rand_monomial(rng)
        assert reduce_word(m.word()) == (1, m)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.sampled_from("yz"), st.integers(1, 5)), max_size=9))
def test_reduce_word_canonical_output(letters):
    w = tuple(letters)
    sign, m = reduce_word(w)
    assert sign in (1, -1)
    # the output is already reduced
    assert reduce_word(m.word()) == (1, m)
    # letter multiset is preserved family by family
    assert sorted(i for f, i in w if f == "y") == sorted(
        i for i, e in enumerate(m.yexp, start=1) for _ in range(e)
    )
    assert sorted(i for f, i in w if f == "z") == sorted(m.cseq + m.dseq)


# --- quotient polynomials ----------------------------------------------------

def test_normalize_examples():
    assert normalize([(1, word(y(1), y(2))), (-1, word(y(2), y(1)))]).is_zero()
    assert normalize([(1, word(z(1), y(1))), (1, word(y(1), z(1)))]).is_zero()
    assert normalize([(2, word(z(1), z(2), z(3))), (-2, word(z(3), z(2), z(1)))]).is_zero()


def test_q_mul_examples():
    y1 = QPoly.letter(y(1))
    z1 = QPoly.letter(z(1))
    assert y1 * y1 == QPoly.monomial(mk((2,)))
    assert z1 * z1 == QPoly.monomial(mk((), (1,), (1,)))
    assert z1 * y1 == QPoly.monomial(mk((1,), (1,)), -1)
    assert q_mul(y1, z1) == QPoly.monomial(mk((1,), (1,)))


def test_commutator_examples():
    y1, y2 = QPoly.letter(y(1)), QPoly.letter(y(2))
    z1 = QPoly.letter(z(1))
    assert commutator(y1, y2).is_zero()
    f = rand_qpoly(random.Random(41))
    assert commutator(f, f).is_zero()
    assert commutator(y1, z1) == QPoly.monomial(mk((1,), (1,)), 2)


def test_qpoly_algebra_randomized():
    rng = random.Random(42)
    for _ in range(120):
        a, b, c = (rand_qpoly(rng, max_terms=3, max_degree=4) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * 1 == a and 0 * a == QPoly.zero()


def test_grade_coherence_randomized():
    rng = random.Random(43)
    for _ in range(150):
        a = rand_monomial(rng, max_degree=4)
        b = rand_monomial(rng, max_degree=4)
        prod = QPoly.monomial(a) * QPoly.monomial(b)
        for m in prod.terms:
            assert m.grade == (a.grade + b.grade) % 2


def test_degree_and_max_index():
    f = QPoly.monomial(mk((1,), (2,))) + QPoly.monomial(mk((3,)))
    assert f.degree == 3
    assert f.max_index == 2
    assert QPoly.zero().degree == -1


# --- Lie expressions and substitution ---------------------------------------

def test_lie_to_poly_examples():
    assert lie_to_poly(LieVar(y(3))) == QPoly.letter(y(3))
    assert lie_to_poly(LieBracket(LieVar(y(1)), LieVar(y(2)))).is_zero()
    got = lie_to_poly(LieBracket(LieVar(z(1)), LieVar(z(2))))
    want = QPoly.monomial(mk((), (1,), (2,))) - QPoly.monomial(mk((), (2,), (1,)))
    assert got == want


def test_lie_grades():
    assert LieVar(y(1)).grade == 0
    assert LieVar(z(1)).grade == 1
    assert LieBracket(LieVar(z(1)), LieVar(z(2))).grade == 0
    assert LieBracket(LieVar(y(1)), LieVar(z(2))).grade == 1


def test_subst_examples():
    f = [(1, word(y(1), z(1)))]
    assert subst(f, {}) == QPoly.monomial(mk((1,), (1,)))

    f = [(1, word(y(1), y(2))), (-1, word(y(2), y(1)))]
    sigma = {y(1): LieBracket(LieVar(z(1)), LieVar(z(2))), y(2): LieVar(y(3))}
    assert subst(f, sigma).is_zero()

    f = [(1, word(z(1), z(2), z(3))), (-1, word(z(3), z(2), z(1)))]
    sigma = {z(2): LieBracket(LieVar(y(1)), LieVar(z(2)))}
    assert subst(f, sigma).is_zero()


def test_subst_grade_mismatch():
    with pytest.raises(GradeMismatchError):
        subst([(1, word(z(1)))], {z(1): LieVar(y(1))})
    with pytest.raises(GradeMismatchError):
        subst([(1, word(y(1)))], {y(1): LieBracket(LieVar(y(2)), LieVar(z(1)))})


def test_generators_die_under_any_graded_substitution():
    rng = random.Random(44)
    gens = identity_generators()
    for _ in range(60):
        g = gens[rng.randrange(3)]
        letters = {letter for _, w in g for letter in w}
        sigma = {
            letter: rand_lie(rng, 0 if letter[0] == "y" else 1, rng.randint(0, 2))
            for letter in letters
        }
        assert subst(g, sigma).is_zero()
        # the raw expanded image is a sum of honest free words
        for coeff, w in subst_words(g, sigma):
            assert isinstance(coeff, int)
            assert all(f in ("y", "z") for f, _ in w)


# --- serialization -----------------------------------------------------------

def test_monomial_obj_roundtrip():
    m = mk((0, 2), (1, 1), (3,))
    obj = monomial_to_obj(m)
    assert obj == {"y": [0, 2], "c": [1, 1], "d": [3]}
    assert monomial_from_obj(obj) == m


def test_poly_obj_roundtrip_randomized():
    rng = random.Random(45)
    for _ in range(80):
        f = rand_qpoly(rng)
        obj = poly_to_obj(f)
        for rec in obj:
            assert isinstance(rec["coeff"], str)  # coefficients travel as strings
        assert poly_from_obj(obj) == f


# --- basis enumeration -------------------------------------------------------

def test_enumerate_basis_small():
    base = list(enumerate_basis(2, 2))
    assert len(base) == len(set(base))
    assert len(base) == 16
    assert ONE in base
    degs = [m.degree for m in base]
    assert degs == sorted(degs)  # graded enumeration
    for m in base:
        assert m.degree <= 2 and (m.max_index <= 2)


def test_enumerate_basis_counts_against_direct_formula():
    # degree <= 3 over one index: 1, y1, y1^2, y1^3, z1, y1 z1, y1^2 z1,
    # z1 z1, y1 z1 z1, z1 z1 z1 -> 10 monomials
    base = list(enumerate_basis(3, 1))
    assert len(base) == 10
