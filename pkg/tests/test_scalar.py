from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddgk.errors import InvalidFieldAutomorphism, ReducibleModulus, ZeroInversion
from ddgk.scalar import FieldAutomorphism, NumberField, aut_apply, aut_invert, fe_arith, fe_inv

QQ = NumberField.rationals()
K = NumberField([-2, 0, 1])
CUBIC = NumberField([-2, 0, 0, 1])  # a^3 = 2
a = K.gen
conj = FieldAutomorphism(K, -a)


def test_field_examples():
    assert fe_arith(a, a, "mul") == K(2)
    assert fe_arith(a, K.one, "mul") == a
    assert fe_arith(QQ(Fraction(1, 2)), QQ(Fraction(1, 3)), "add") == QQ(Fraction(5, 6))
    assert fe_inv(K.one + a) == a - 1
    assert fe_inv(K.one) == K.one
    assert fe_inv(QQ(Fraction(2, 3))) == QQ(Fraction(3, 2))


def test_automorphism_examples():
    assert aut_apply(conj, 1 + a) == 1 - a
    assert aut_apply(conj, K(5)) == K(5)
    assert aut_apply(K.identity(), a) == a
    assert aut_invert(conj) == conj
    assert conj.order == 2
    assert aut_invert(K.identity()).is_identity()
    assert aut_invert(QQ.identity()).is_identity()


def test_canonical_form_and_rendering():
    assert K([0, 0, 1]) == K(2)
    assert str(1 + a) == "1+a"
    assert str(-a) == "-a"
    assert str(K.zero) == "0"


def test_errors():
    with pytest.raises(ZeroInversion):
        K.zero.inv()
    with pytest.raises(InvalidFieldAutomorphism):
        FieldAutomorphism(K, K(1))
    reducible = NumberField([-1, 0, 1])  # (x-1)(x+1)
    with pytest.raises(ReducibleModulus):
        (reducible.gen - 1).inv()
    with pytest.raises(TypeError):
        K(0.5)


def test_non_galois_cubic_has_only_identity():
    assert CUBIC.identity().order == 1
    assert (CUBIC.gen ** 3) == CUBIC(2)


elems = st.lists(st.integers(-5, 5), min_size=2, max_size=2).map(K)


@settings(max_examples=60, deadline=None)
@given(elems, elems, elems)
def test_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == K.zero
    if x:
        assert x * x.inv() == K.one


@settings(max_examples=60, deadline=None)
@given(elems, elems)
def test_automorphism_is_multiplicative(x, y):
    assert conj(x * y) == conj(x) * conj(y)
    assert conj(x + y) == conj(x) + conj(y)
    assert conj.inverse()(conj(x)) == x
