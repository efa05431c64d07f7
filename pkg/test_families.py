import pytest

from src import families as fam
from src.errors import FamilyError, Mismatch
from src.exact import Y
from src.models import FamilySpec
from src.riordan import LowerTriangle


def test_triangulo_de_borel():
    t = fam.borel_triangle(7)
    assert list(t.rows[3]) == [14, 28, 20, 5]
    assert list(t.rows[6]) == [429, 2002, 4004, 4368, 2730, 924, 132]
    assert t.column(0) == [1, 2, 5, 14, 42, 132, 429]


def test_todas_as_rotas_de_borel_coincidem():
    assert fam.borel_route_check(8) == fam.borel_triangle(8)


def test_polinomio_de_borel():
    assert fam.borel_polynomial(2).value == 2 * Y**2 + 6 * Y + 5
    assert fam.borel_polynomial(0).n == 0


def test_borel_e_catalan_vezes_pascal():
    assert fam.catalan_factorization_check(7) == fam.borel_triangle(7)
    assert list(fam.catalan_triangle(7).rows[6]) == [1, 6, 20, 48, 90, 132, 132]


def test_somas_de_borel():
    t = fam.borel_triangle(8)
    assert fam.row_sums(t) == [1, 3, 13, 67, 381, 2307, 14589, 95235]
    assert fam.sums_gf_consistent(t, fam.borel_gf(7), "row")
    with pytest.raises(ValueError):
        fam.sums_gf_consistent(t, fam.borel_gf(7), "coluna")


def test_r_borel():
    assert list(fam.r_borel(1, 7).rows[6]) == [51, 266, 644, 924, 840, 462, 132]
    assert list(fam.r_borel(0, 9).rows[8]) == [14, 0, 420, 0, 1980, 0, 3003, 0, 1430]
    assert fam.r_borel_first_column_check(1, 8) == [1, 1, 2, 4, 9, 21, 51, 127]
    assert fam.r_borel(2, 6) == fam.borel_triangle(6)


def test_r_borel_com_r_simbolico():
    t = fam.build_triangle(FamilySpec("r-borel", r=Y), 3)
    assert t.entry(1, 0) == Y
    assert t.entry(2, 0) == Y**2 + 1


def test_rs_borel():
    assert fam.rs_borel_check(1, 1, 7) == fam.r_borel(1, 7)
    assert fam.row_sums(fam.rs_borel(0, 1, 6)) == [1, 1, 3, 9, 31, 113]
    assert fam.diagonal_sums(fam.rs_borel(1, 1, 6)) == [1, 1, 3, 7, 21, 61]


def test_rs_sem_rota_simbolica():
    with pytest.raises(FamilyError):
        fam.rs_gf(Y, 1, 4)


def test_tilde():
    t = fam.tilde_check(2, 3, 7)
    assert list(t.rows[6]) == [1999, 5922, 8036, 6384, 3150, 924, 132]
    assert list(fam.tilde_first_column(2, 3, 6).coeffs) == [1, 2, 7, 26, 106, 452, 1999]
    assert fam.row_sums(fam.tilde_rs(1, 1, 6)) == [1, 2, 7, 29, 133, 650]


@pytest.mark.parametrize("r,s", [(0, 1), (1, 1), (2, 3), (3, 2)])
def test_escala_s_entre_rs_e_tilde(r, s):
    fam.s_scaling_check(r, s, 9)


def test_leituras_do_zero_quadratico_tilde():
    readings = fam.tilde_quadratic_readings(2, 3, 8)
    assert readings == {"1": True, "x^2+y": False}
    fam.tilde_quadratic_check(1, 1, 8)


def test_zeros_quadraticos():
    for r in range(4):
        fam.borel_quadratic_check(r, 10)
    fam.catalan_quadratic_check(10)


def test_aerado():
    t = fam.aerated_085880_check(9)
    assert t.entry(6, 2) == 84


def test_fuss_borel():
    assert fam.fuss_borel_check(2, 6) == fam.borel_triangle(6)
    assert list(fam.fuss_borel_check(3, 6).rows[5]) == [1428, 6120, 10608, 9282, 4095, 728]
    assert list(fam.fuss_borel(0, 4).rows[3]) == [0, 0, 0, -1]


def test_fuss_catalan():
    assert fam.fuss_catalan_check(2, 6) == fam.catalan_triangle(6)
    assert list(fam.fuss_catalan_check(4, 6).rows[5]) == [1, 15, 114, 570, 1995, 4389]
    assert list(fam.fuss_catalan(0, 6).rows[5]) == [1, -5, 10, -10, 5, -1]


def test_sequencias_de_fuss():
    column, diagonal = fam.fuss_sequences_check(5, 6)
    assert column == [1, 5, 35, 285, 2530, 23751]
    assert diagonal == [1, 4, 26, 204, 1771, 16380]
    column, _ = fam.fuss_sequences_check(0, 3)
    assert column == [1, 0, 0]


def test_fuss_borel_generalizado():
    t = fam.generalized_fuss_borel(3, (1, 1, 1, 1), 7)
    assert list(t.rows[6]) == [104, 826, 3045, 6720, 9520, 8568, 3876]
    assert t.column(0) == [1, 1, 2, 5, 13, 36, 104]
    with pytest.raises(FamilyError):
        fam.generalized_fuss_borel(3, (1, 1, 1), 4)
    with pytest.raises(FamilyError):
        fam.generalized_fuss_borel(2, (2, 1, 1), 4)


def test_reversoes():
    assert list(fam.borel_reversion(8).rows[7][:2]) == [-8, -7]
    assert fam.borel_reversion_binomial(7).entry(1, 1) == -1
    assert fam.catalan_reversion_binomial(7) == LowerTriangle.from_function(
        lambda n, k: [1, -1][n] if n == k and n <= 1 else 0, 7
    )
    assert [fam.diagonal_reversion(7).entry(n, n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    fam.catalan_reversal_reversion(8)
    assert fam.binomial_reversion(5).entry(3, 1) == -3


def test_reversao_de_um_triangulo_qualquer():
    t = LowerTriangle([[1], [2, 1], [5, 6, 2]])
    rev = fam.reversion_triangle(t)
    assert fam.reversion_triangle(rev) == t


def test_decomposicao_de_catalan():
    m1, m2, ok = fam.catalan_decomposition(7)
    assert ok
    assert m1[5][5] == 252
    assert m2[6][6] == 1716


def test_construcao_por_nome():
    t = fam.build_triangle(FamilySpec("fuss-catalan", r=3), 6)
    assert list(t.rows[5]) == [1, 10, 52, 182, 455, 728]
    t = fam.build_triangle(FamilySpec("borel-inverse-array"), 3)
    assert t.entry(2, 0) == Y + 2


@pytest.mark.parametrize(
    "spec,rows",
    [
        (FamilySpec("motzkin"), 4),
        (FamilySpec("borel"), 0),
        (FamilySpec("r-borel"), 4),
        (FamilySpec("rs-borel", r=1), 4),
        (FamilySpec("gen-fuss-borel", r=3), 4),
        (FamilySpec("fuss-borel", r=-1), 4),
        (FamilySpec("fuss-borel", r=Y), 4),
    ],
)
def test_construcao_rejeita_parametros(spec, rows):
    with pytest.raises(FamilyError):
        fam.build_triangle(spec, rows)


def test_funcao_geradora_da_familia():
    assert fam.family_gf(FamilySpec("tilde", 1, 1), 6) is not None
    assert fam.family_gf(FamilySpec("tilde", Y, 1), 6) is None
    assert fam.family_gf(FamilySpec("fuss-borel", 3), 6) is None


def test_rota_de_borel_detecta_divergencia(monkeypatch):
    monkeypatch.setattr(fam, "borel_entry", lambda n, k: 1 if 0 <= k <= n else 0)
    with pytest.raises(Mismatch):
        fam.borel_route_check(4)
