from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src import exact
from src.errors import NonExactDivision
from src.exact import Level, Y


def test_binomial_com_argumento_superior_negativo():
    assert exact.binomial(-1, 3) == -1
    assert exact.binomial(-2, 2) == 3
    assert exact.binomial(5, -1) == 0
    assert exact.binomial(3, 5) == 0


def test_catalan():
    assert [exact.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(ValueError):
        exact.catalan(-1)


def test_niveis_e_promocao():
    assert exact.level_of(3) == Level.INTEGER
    assert exact.level_of(Fraction(1, 2)) == Level.RATIONAL
    assert exact.level_of(Y + 1) == Level.POLYNOMIAL
    assert exact.add(1, Fraction(1, 2)) == Fraction(3, 2)
    assert exact.equal(exact.add(Y, 2), Y + 2)
    with pytest.raises(TypeError):
        exact.level_of(1.5)


def test_normalize_rebaixa():
    v = exact.normalize(Fraction(4, 2))
    assert v == 2 and isinstance(v, int)
    assert exact.normalize(Y - Y + 3) == 3
    assert exact.normalize(exact.promote(Fraction(1, 3), Level.POLYNOMIAL)) == Fraction(1, 3)


def test_zero_elevado_a_zero():
    assert exact.power(0, 0) == 1
    assert exact.power(2, -2) == Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        exact.power(0, -1)


def test_divisao_exata():
    q = exact.divide(6, 3)
    assert q == 2 and isinstance(q, int)
    assert exact.divide(1, 2) == Fraction(1, 2)
    assert exact.divide(Y**2 - 1, Y - 1) == Y + 1
    with pytest.raises(NonExactDivision):
        exact.divide(Y**2 + 1, Y - 1)
    assert exact.poly_exact_div(Y**2 - 1, Y + 1) == Y - 1
    with pytest.raises(NonExactDivision):
        exact.poly_exact_div(Y**2, Y + 1)


def test_unidades():
    assert exact.is_unit(Fraction(-2, 3))
    assert exact.is_unit(exact.promote(5, Level.POLYNOMIAL))
    assert not exact.is_unit(Y)
    assert not exact.is_unit(0)


def test_texto_em_potencias_decrescentes():
    assert exact.to_text(2 * Y**2 + 6 * Y + 5) == "2*y^2+6*y+5"
    assert exact.to_text(-Y - 2) == "-y-2"
    assert exact.to_text(Y**3) == "y^3"
    assert exact.to_text(Fraction(-3, 4)) == "-3/4"
    assert exact.to_text(Y - Y) == "0"


def test_parse_value():
    assert exact.parse_value("7") == 7
    assert exact.parse_value("-3/4") == Fraction(-3, 4)
    assert exact.parse_value("2*y^2+6*y+5") == 2 * Y**2 + 6 * Y + 5


def test_evaluate():
    assert exact.evaluate(2 * Y**2 + 6 * Y + 5, 1) == 13
    assert exact.evaluate(Y + 2, Fraction(1, 2)) == Fraction(5, 2)


@given(st.lists(st.fractions(max_denominator=5).filter(lambda f: abs(f) < 50), min_size=1, max_size=6))
def test_texto_volta_ao_mesmo_polinomio(coeffs):
    p = exact.poly_from_coefficients(coeffs)
    assert exact.equal(exact.parse_value(exact.to_text(p)), p)
