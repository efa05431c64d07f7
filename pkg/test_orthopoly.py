import pytest

from src.errors import InsufficientOrder
from src.exact import Y
from src.families import borel_gf_by_radical, borel_polynomial
from src.orthopoly import (
    cf_moments_check,
    coefficient_array,
    moment_gf,
    moment_spec_borel,
    moment_spec_rs,
    moment_spec_tilde,
    moments_check,
    production_check,
    recurrence_from_production,
    recurrence_from_spec,
    recurrence_polynomials,
)
from src.riordan import LowerTriangle, matrix_inverse


def test_matriz_de_coeficientes_de_borel():
    t = coefficient_array(moment_spec_borel(), 4)
    expected = LowerTriangle(
        [
            [1],
            [-Y - 2, 1],
            [Y**2 + 4 * Y + 3, -3 * Y - 4, 1],
            [-(Y**3) - 6 * Y**2 - 9 * Y - 4, 6 * Y**2 + 16 * Y + 10, -5 * Y - 6, 1],
        ]
    )
    assert t == expected


def test_recorrencia_de_borel():
    rec = recurrence_from_spec(moment_spec_borel())
    assert rec.b0p == Y + 2
    assert rec.b == 2 * Y + 2
    assert rec.lam == (Y + 1) ** 2
    assert rec.lam_at(1) == (Y + 1) ** 2
    polys = recurrence_polynomials(rec, 3)
    assert polys[1] == [-Y - 2, 1]


def test_producao_tridiagonal_e_recorrencia():
    p = production_check(moment_spec_borel(), 6)
    assert p.is_tridiagonal()
    assert p.diagonal(0) == [Y + 2] + [2 * Y + 2] * 4
    rec = recurrence_from_production(p)
    assert rec == recurrence_from_spec(moment_spec_borel())


def test_recorrencia_exige_tres_linhas():
    p = production_check(moment_spec_borel(), 3)
    with pytest.raises(InsufficientOrder):
        recurrence_from_production(p)


def test_momentos_de_borel():
    moments = moments_check(moment_spec_borel(), borel_gf_by_radical(8), 9)
    assert moments[:4] == [borel_polynomial(n).value for n in range(4)]
    inverse = matrix_inverse(coefficient_array(moment_spec_borel(), 5))
    assert inverse.entry(4, 0) == 14 * Y**4 + 70 * Y**3 + 135 * Y**2 + 120 * Y + 42


def test_funcao_geradora_dos_momentos_rs():
    gf = moment_gf(moment_spec_rs(1, 1), 6)
    at_zero = list(gf.evaluate_y(0).coeffs)
    # at y = 0 the moments are the Motzkin numbers
    assert at_zero == [1, 1, 2, 4, 9, 21, 51]


@pytest.mark.parametrize("r,s", [(2, 3), (1, 1), (0, 1)])
def test_fracao_continua_dos_momentos_tilde(r, s):
    cf_moments_check(moment_spec_tilde(r, s), 9)
