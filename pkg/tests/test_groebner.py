import random
from fractions import Fraction

import pytest
from helpers import PRESENTATIONS, random_element
from hypothesis import given, settings
from hypothesis import strategies as st

from ddgk.corpus import commutative, corpus, quantum_plane, swap
from ddgk.errors import NotDivisible, ZeroElement
from ddgk.groebner import (
    GroebnerBasis,
    buchberger,
    divide,
    is_member,
    lclm,
    leading,
    left_quotient,
    reduce_step,
    remainder,
    right_divides,
    spoly,
    staircase_of,
)
from ddgk.ordering import OrderingSpec

QP = quantum_plane()
SW = swap()
C20 = commutative(2, 0)
S, D = QP.S(1), QP.D(1)
SD = S * D


def test_leading_examples():
    assert leading(S ** 2 * D + S) == ((2, 1), QP.field.one)
    assert leading(QP.constant(3)) == ((0, 0), QP.field(3))
    assert leading(SW.D(2) * SW.S(1)) == ((1, 1, 0), SW.field.one)
    with pytest.raises(ZeroElement):
        leading(QP.zero())


def test_right_divides_examples():
    assert right_divides((1, 1), (2, 3))
    assert not right_divides((0, 1, 0), (1, 0, 1))
    assert SW.D(1) * SW.S(1) == SW.S(1) * SW.D(2)  # left divisible all the same
    assert right_divides((2, 1), (2, 1))


def test_left_quotient_examples():
    h = left_quotient(QP, (2, 2), (1, 1))
    assert h == QP.monomial((1, 1), Fraction(1, 2))
    assert h * SD == QP.monomial((2, 2))
    assert left_quotient(QP, (2, 1), (0, 0)) == QP.monomial((2, 1))
    assert left_quotient(QP, (2, 1), (2, 1)) == QP.one()
    with pytest.raises(NotDivisible):
        left_quotient(QP, (1, 1), (0, 2))


def test_reduce_step_examples():
    assert not reduce_step(QP, QP.monomial((2, 2)), SD)
    assert reduce_step(QP, SD + S, SD) == S
    with pytest.raises(NotDivisible):
        reduce_step(QP, SD, D ** 2)


def test_remainder_examples():
    assert not remainder(QP, QP.monomial((2, 3)), [SD])
    f = S ** 2 + D
    assert remainder(QP, f, [SD]) == f
    assert not remainder(QP, QP.zero(), [SD])


def test_lclm_examples():
    assert lclm((1, 2), (2, 1)) == (2, 2)
    assert lclm((3, 1), (0, 0)) == (3, 1)
    assert lclm((3, 1), (3, 1)) == (3, 1)


def test_spoly_examples():
    assert not spoly(QP, SD - S, D ** 2 - D)
    assert not spoly(QP, SD + D, SD + D)
    assert not spoly(C20, C20.S(1) ** 2, C20.S(1) * C20.S(2))


def test_buchberger_examples():
    assert list(buchberger(QP, [SD])) == [SD]
    F = [C20.S(1) ** 2, C20.S(1) * C20.S(2)]
    assert set(map(str, buchberger(C20, F))) == set(map(str, F))
    assert list(buchberger(QP, [S ** 2 - D, QP.constant(5) + S])) == [QP.one()]
    assert list(buchberger(QP, [S + 3, SD])) == [D, S + 3]


def test_unreduced_basis_keeps_inputs():
    F = [SD - S, D ** 2 - D]
    G = buchberger(QP, F, reduced=False)
    assert list(G)[:2] == F
    assert G.is_certified()


def test_is_member_examples():
    G = buchberger(QP, [SD])
    assert is_member(QP, QP.monomial((2, 3)), G)
    assert not is_member(QP, S ** 2, G)
    assert is_member(QP, QP.zero(), G)


def test_staircase_examples():
    assert staircase_of(buchberger(QP, [SD])).minimal_exponents == ((1, 1),)
    raw = GroebnerBasis(C20, OrderingSpec(), (C20.S(1) ** 2, C20.S(1) * C20.S(2), C20.S(1) ** 3))
    assert set(staircase_of(raw).minimal_exponents) == {(2, 0), (1, 1)}
    st1 = staircase_of(buchberger(QP, [QP.one()]))
    assert st1.minimal_exponents == ((0, 0),)
    assert st1.contains((0, 0))


@pytest.mark.parametrize("ideal", corpus(), ids=lambda c: c.name)
def test_corpus_bases_certify(ideal):
    G = buchberger(ideal.presentation, ideal.generators)
    assert G.is_certified()
    for f in ideal.generators:
        assert G.contains(f)


@pytest.mark.parametrize("name", ["quantum_plane", "swap", "sqrt2_twist"])
def test_division_identity(name):
    p = PRESENTATIONS[name]
    rng = random.Random(7)
    G = [random_element(rng, p, 2, 2) for _ in range(2)]
    key = OrderingSpec().key(p.m)
    for _ in range(30):
        f = random_element(rng, p, 4, 3)
        qs, r = divide(p, f, G)
        assert sum((q * g for q, g in zip(qs, G)), p.zero()) + r == f
        for q, g in zip(qs, G):
            if q:
                assert key(leading(q * g)[0]) <= key(leading(f)[0])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3))
def test_generated_ideal_is_contained(terms):
    f = QP.element((c, (a, b)) for c, a, b in terms)
    G = buchberger(QP, [f, D ** 2 - S])
    assert G.is_certified()
    assert G.contains(f) and G.contains(D ** 2 - S)
    assert G.contains(S * f) and G.contains(D * f)
