import os

import pytest

from main import main
from src import families as fam
from src.render import parse_json

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


@pytest.fixture(autouse=True)
def ambiente_limpo(monkeypatch):
    for name in ("RIORDAN_ORDER", "RIORDAN_DATA_DIR", "RIORDAN_LOG_LEVEL", "RIORDAN_PROGRESS"):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_gen_uma_linha(capsys):
    assert run(capsys, "gen", "--family", "borel", "--rows", "1") == (0, "1\n", "")


def test_gen_fuss_catalan_csv(capsys):
    status, out, _ = run(capsys, "gen", "--family", "fuss-catalan", "--r", "3", "--rows", "6", "--format", "csv")
    assert status == 0
    assert out.splitlines()[-1] == "1,10,52,182,455,728"


def test_gen_bfile_coincide_com_a234950(capsys):
    status, out, _ = run(capsys, "gen", "--family", "borel", "--rows", "7", "--format", "bfile")
    assert status == 0
    with open(os.path.join(DATA_DIR, "sequences", "A234950.txt"), encoding="utf-8") as f:
        head = "".join(f.readlines()[:28])
    assert out == head


def test_gen_json_volta_ao_triangulo(capsys):
    status, out, _ = run(capsys, "gen", "--family", "tilde", "--r", "1", "--s", "1", "--rows", "4", "--format", "json")
    assert status == 0
    family, params, t = parse_json(out)
    assert family == "tilde"
    assert params == {"r": "1", "s": "1"}
    assert t == fam.tilde_rs(1, 1, 4)


def test_gen_com_y_especializado(capsys):
    status, out, _ = run(capsys, "gen", "--family", "borel-inverse-array", "--rows", "3", "--y", "1", "--format", "csv")
    assert status == 0
    assert out == "1\n1,1\n3,4,1\n"


def test_sums_com_funcao_geradora(capsys):
    status, out, _ = run(capsys, "sums", "--family", "tilde", "--r", "1", "--s", "1", "--rows", "7")
    assert status == 0
    assert out == "1 2 7 29 133 650 3319\ngf-consistent: yes\n"


def test_sums_diagonais(capsys):
    status, out, _ = run(capsys, "sums", "--family", "rs-borel", "--r", "1", "--s", "1", "--rows", "6", "--kind", "diag")
    assert status == 0
    assert out.splitlines()[0] == "1 1 3 7 21 61"


def test_prodmat_dos_momentos_de_borel(capsys):
    status, out, _ = run(capsys, "prodmat", "--family", "borel-moments", "--rows", "5", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "y+2,1,0,0,0"
    assert lines[2] == "0,y^2+2*y+1,2*y+2,1,0"


def test_jfrac_de_borel_em_um(capsys):
    status, out, _ = run(capsys, "jfrac", "--family", "borel", "--y", "1", "--depth", "5")
    assert status == 0
    assert out == "b: 3 4 4 4 4\nlam: 4 4 4 4\n"


def test_jfrac_exige_y(capsys):
    status, _, err = run(capsys, "jfrac", "--family", "borel")
    assert status == 2
    assert "--y" in err


def test_revert_de_pascal(capsys):
    status, out, _ = run(capsys, "revert", "--family", "pascal", "--rows", "4")
    assert status == 0
    assert out == " 1\n-1 -1\n 1  2  1\n-1 -3 -3 -1\n"


def test_revert_binomial_de_borel(capsys):
    status, out, _ = run(capsys, "revert", "--family", "borel", "--rows", "3", "--binomial")
    assert status == 0
    assert out == " 1\n-1 -1\n 0  0  0\n"


def test_parametro_ausente_sai_com_2(capsys):
    status, out, err = run(capsys, "sums", "--family", "r-borel")
    assert status == 2
    assert out == ""
    assert "--r" in err


def test_linhas_alem_da_ordem(capsys):
    status, _, err = run(capsys, "gen", "--family", "borel", "--rows", "30", "--order", "5")
    assert status == 2
    assert "--order" in err


def test_parametro_mal_formado(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gen", "--family", "r-borel", "--r", "x"])
    assert info.value.code == 2


def test_ordem_invalida_no_ambiente(capsys, monkeypatch):
    monkeypatch.setenv("RIORDAN_ORDER", "muitas")
    status, _, err = run(capsys, "gen", "--family", "borel")
    assert status == 2
    assert "RIORDAN_ORDER" in err


def test_sem_subcomando(capsys):
    assert main([]) == 2
