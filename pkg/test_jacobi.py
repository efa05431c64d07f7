from fractions import Fraction

import pytest

from src.errors import InsufficientDepth, NonUnitConstantTerm, NonzeroResidual, ZeroLambda
from src.exact import Y
from src.families import borel_polynomial, borel_triangle, catalan_series, row_sums
from src.jacobi import (
    borel_cf,
    jacobi_from_series,
    required_depth,
    series_from_jacobi,
    verify_quadratic_zero,
)
from src.models import JacobiCF
from src.powerseries import Series


def test_profundidade_necessaria():
    assert required_depth(10) == 6
    assert required_depth(9) == 6


def test_fracao_de_borel_gera_os_polinomios():
    s = series_from_jacobi(borel_cf(6), 10)
    for n in range(11):
        assert s[n] == borel_polynomial(n).value


def test_fracao_de_borel_em_y_igual_a_um():
    g = Series(row_sums(borel_triangle(10)))
    cf = jacobi_from_series(g, 5)
    assert cf.b == (3, 4, 4, 4, 4)
    assert cf.lam == (4, 4, 4, 4)
    assert not cf.terminating


def test_ida_e_volta_de_fracao_finita():
    cf = JacobiCF(b=(1, Fraction(1, 2), -2), lam=(3, Fraction(-1, 3)), terminating=True)
    back = jacobi_from_series(series_from_jacobi(cf, 7), 4)
    assert back == cf
    assert back.depth == 3


def test_fracao_de_um_nivel():
    g = series_from_jacobi(JacobiCF(b=(2,), lam=(), terminating=True), 7)
    assert list(g.coeffs) == [2**n for n in range(8)]
    back = jacobi_from_series(g, 4)
    assert back.terminating and back.b == (2,) and back.lam == ()


def test_profundidade_insuficiente():
    with pytest.raises(InsufficientDepth):
        series_from_jacobi(JacobiCF.periodic(3, 4, 4, 2), 10)


def test_lambda_nulo_com_resto():
    g = Series.polynomial([1, -1, 0, -1], 5).inverse()
    with pytest.raises(ZeroLambda):
        jacobi_from_series(g, 3)


def test_extracao_exige_racionais():
    with pytest.raises(ValueError):
        jacobi_from_series(Series([1, Y, 0]), 1)
    with pytest.raises(NonUnitConstantTerm):
        jacobi_from_series(Series([2, 1, 0]), 1)


def test_jacobi_exige_lambdas_coerentes():
    with pytest.raises(ValueError):
        JacobiCF(b=(1, 2), lam=())
    with pytest.raises(ValueError):
        JacobiCF(b=(), lam=())


def test_zero_quadratico_de_catalan():
    order = 8
    z = catalan_series(order).shift_up().truncate(order)
    one, minus_one, x = Series.one(order), Series.constant(-1, order), Series.x(order)
    verify_quadratic_zero(z, one, minus_one, x)
    with pytest.raises(NonzeroResidual) as info:
        verify_quadratic_zero(z, one, minus_one, x + Series.polynomial([0, 0, 0, 1], order))
    assert info.value.index == 3
