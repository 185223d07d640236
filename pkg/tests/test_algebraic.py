from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from singcay.algebraic import AlgebraicValue, squarefree_decomposition

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
radicands = st.sampled_from([-15, -7, -3, -1, 2, 3, 5, 6, 7, 21])


def test_squarefree_decomposition():
    assert squarefree_decomposition(12) == (2, 3)
    assert squarefree_decomposition(-75) == (5, -3)
    assert squarefree_decomposition(49) == (7, 1)


def test_canonical_form():
    v = AlgebraicValue(1, 2, 4)          # 1 + 2*2 = 5
    assert v.is_rational() and v == 5 and v.m == 0 and v.b == 0
    w = AlgebraicValue(0, 1, 12)         # 2*sqrt(3)
    assert (w.b, w.m) == (2, 3)
    assert AlgebraicValue(3, 0, 5).m == 0


def test_a3_value_arithmetic():
    # the nontrivial cube root of unity (-1 + sqrt(-3))/2 has norm 1 and cubes to 1
    w = (AlgebraicValue(-1) + AlgebraicValue.sqrt(-3)) / 2
    assert w.imaginary and w.radicand == -3
    assert w.norm() == 1
    assert w * w * w == 1
    assert w + w.conjugate() == -1


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        AlgebraicValue.sqrt(2) + AlgebraicValue.sqrt(3)


def test_sign_and_string():
    assert (AlgebraicValue(1, -1, 2)).sign() == -1
    assert (AlgebraicValue(2, -1, 3)).sign() == 1
    assert str((AlgebraicValue(1) + AlgebraicValue.sqrt(5)) / 2) == "1/2+1/2*sqrt(5)"
    with pytest.raises(ValueError):
        AlgebraicValue.sqrt(-1).sign()


@given(rationals, rationals, radicands, rationals, rationals)
def test_field_axioms(a, b, d, c, e):
    x = AlgebraicValue(a, b, d)
    y = AlgebraicValue(c, e, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) - y == x
    if not y.is_zero():
        assert (x / y) * y == x
    assert x * x.galois_conjugate() == x.norm()


@given(rationals, rationals, radicands)
def test_json_round_trip_and_sympy(a, b, d):
    import sympy
    x = AlgebraicValue(a, b, d)
    assert AlgebraicValue.from_json(x.to_json()) == x
    expected = sympy.Rational(a.numerator, a.denominator) + \
        sympy.Rational(b.numerator, b.denominator) * sympy.sqrt(d)
    assert sympy.simplify(x.to_sympy() - expected) == 0


@given(rationals, rationals, st.sampled_from([2, 3, 5, 7]))
def test_sign_matches_float(a, b, d):
    x = AlgebraicValue(a, b, d)
    f = float(a) + float(b) * d ** 0.5
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)
    else:
        assert x.sign() == 0 or abs(f) < 1e-9
