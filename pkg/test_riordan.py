from fractions import Fraction
from math import factorial

import pytest

from src.errors import (
    InsufficientOrder,
    KindMismatch,
    NonUnitConstantTerm,
    NonUnitDiagonal,
    NonUnitLinearTerm,
    NonzeroConstantInner,
    ShapeMismatch,
)
from src.exact import Y
from src.families import borel_ftra_pair
from src.powerseries import Series
from src.riordan import (
    EXPONENTIAL,
    LowerTriangle,
    RiordanPair,
    binomial_pair,
    binomial_transform,
    bivariate_to_triangle,
    derivative_subgroup_inverse,
    ftra_apply,
    group_inverse,
    group_mul,
    hadamard,
    left_multiply_binomial,
    materialize,
    matrix_inverse,
    pascal,
    pascal_inverse,
    production_matrix,
    triangle_reversal,
    triangle_to_bivariate,
)


def test_pascal():
    assert pascal(4) == LowerTriangle([[1], [1, 1], [1, 2, 1], [1, 3, 3, 1]])
    assert materialize(binomial_pair(6), 7) == pascal(7)


def test_inversa_de_pascal():
    assert matrix_inverse(pascal(6)) == pascal_inverse(6)
    assert pascal(6) @ pascal_inverse(6) == LowerTriangle.identity(6)


def test_inversa_exige_diagonal_unitaria():
    with pytest.raises(NonUnitDiagonal):
        matrix_inverse(LowerTriangle([[1], [1, 0]]))
    with pytest.raises(NonUnitDiagonal):
        matrix_inverse(LowerTriangle([[Y]]))


def test_matriz_de_producao_de_pascal():
    p = production_matrix(pascal(6))
    assert p.n_rows == 5
    assert p.diagonal(0) == [1] * 5
    assert p.diagonal(1) == [1] * 4
    assert p.diagonal(-1) == [0] * 4
    assert p.is_hessenberg() and p.is_tridiagonal()


def test_matriz_de_producao_exige_duas_linhas():
    with pytest.raises(InsufficientOrder):
        production_matrix(pascal(1))


def test_validacao_do_par():
    with pytest.raises(NonUnitConstantTerm):
        RiordanPair(Series.polynomial([0, 1], 3), Series.x(3))
    with pytest.raises(NonzeroConstantInner):
        RiordanPair(Series.one(3), Series.polynomial([1, 1], 3))
    with pytest.raises(NonUnitLinearTerm):
        RiordanPair(Series.one(3), Series.polynomial([0, 0, 1], 3))
    with pytest.raises(ValueError):
        RiordanPair(Series.one(3), Series.x(3), "bivariado")


def test_par_com_termo_linear_y():
    # f'(0) = y is accepted; only the group inverse needs a unit
    p = borel_ftra_pair(4)
    t = materialize(p, 5)
    assert list(t.rows[1]) == [2, Y]
    assert t.entry(2, 1) == 6 * Y + 1
    assert t.entry(4, 2) == 60 * Y**2 + 20 * Y + 1
    with pytest.raises(NonUnitLinearTerm):
        group_inverse(p)


def test_produto_do_grupo_e_produto_de_matrizes():
    a = binomial_pair(6)
    b = RiordanPair(Series.polynomial([1, 1], 6), Series.polynomial([0, 1, 2], 6))
    assert materialize(group_mul(a, b), 6) == materialize(a, 6) @ materialize(b, 6)


def test_inverso_do_grupo():
    assert materialize(group_inverse(binomial_pair(6)), 6) == pascal_inverse(6)


def test_produto_exige_mesmo_tipo():
    a = binomial_pair(4)
    b = RiordanPair(Series.one(4), Series.x(4), EXPONENTIAL)
    with pytest.raises(KindMismatch):
        group_mul(a, b)


def test_par_exponencial_de_pascal():
    exp = Series.from_function(lambda n: Fraction(1, factorial(n)), 6)
    assert materialize(RiordanPair(exp, Series.x(6), EXPONENTIAL), 7) == pascal(7)


def test_materializar_alem_da_ordem():
    with pytest.raises(InsufficientOrder):
        materialize(binomial_pair(3), 5)


def test_ftra_de_pascal_sobre_uns():
    ones = Series.polynomial([1, -1], 5).inverse()
    assert list(ftra_apply(binomial_pair(5), ones).coeffs) == [1, 2, 4, 8, 16, 32]


def test_inversao_de_linhas():
    t = LowerTriangle([[1], [1, 1], [2, 2, 1]])
    assert triangle_reversal(t) == LowerTriangle([[1], [1, 1], [1, 2, 2]])


def test_conversao_bivariada():
    s = triangle_to_bivariate(pascal(4))
    assert s[3] == (1 + Y) ** 3
    assert bivariate_to_triangle(s, 4) == pascal(4)
    with pytest.raises(InsufficientOrder):
        bivariate_to_triangle(s, 5)
    with pytest.raises(ShapeMismatch):
        bivariate_to_triangle(Series([Y, 0]), 2)


def test_multiplicar_por_pascal():
    assert left_multiply_binomial(pascal_inverse(5)) == LowerTriangle.identity(5)
    assert left_multiply_binomial(pascal(5), inverse=True) == LowerTriangle.identity(5)


def test_transformada_binomial():
    assert binomial_transform([1, 1, 1, 1], 1) == [1, 2, 4, 8]
    assert binomial_transform([1, 0, 0, 0], 3) == [1, 3, 9, 27]


def test_inversa_do_subgrupo_derivada():
    t = derivative_subgroup_inverse(2, 3, 7)
    assert list(t.rows[2]) == [21, 6, 1]
    assert list(t.rows[6]) == [13993, 5922, 2009, 532, 105, 14, 1]


def test_formas_incompativeis():
    with pytest.raises(ShapeMismatch):
        hadamard(pascal(3), pascal(4))
    with pytest.raises(ShapeMismatch):
        pascal(3) @ pascal(4)
    with pytest.raises(ShapeMismatch):
        LowerTriangle([[1, 2]])
