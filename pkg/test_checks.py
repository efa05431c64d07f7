import shutil
from pathlib import Path

import pytest

from main import main
from src.checks import SUITES, compare_rows, compare_terms, run_suite
from src.commands import format_report
from src.config import load_settings
from src.errors import Mismatch
from src.models import CheckResult

DATA_DIR = Path(__file__).resolve().parent / "data"


@pytest.fixture
def settings(monkeypatch):
    monkeypatch.setenv("RIORDAN_PROGRESS", "false")
    monkeypatch.setenv("RIORDAN_PROPERTY_CASES", "3")
    monkeypatch.delenv("RIORDAN_DATA_DIR", raising=False)
    return load_settings()


def test_suites_conhecidas():
    assert SUITES == ("paper", "oeis", "properties")


@pytest.mark.parametrize("suite", ["paper", "oeis", "properties"])
def test_suite_passa(settings, suite):
    results = run_suite(suite, settings, 12)
    assert results
    failures = [f"{r.item}: {r.detail}" for r in results if not r.passed]
    assert failures == []


def test_fixture_corrompida_falha(settings, tmp_path, monkeypatch, capsys):
    data = tmp_path / "data"
    shutil.copytree(DATA_DIR, data)
    path = data / "sequences" / "A001006.txt"
    lines = path.read_text(encoding="utf-8").splitlines()
    index, value = lines[-1].split()
    lines[-1] = f"{index} {int(value) + 1}"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    monkeypatch.setenv("RIORDAN_DATA_DIR", str(data))

    assert main(["check", "--suite", "oeis"]) == 1
    out = capsys.readouterr().out
    assert "FAIL oeis:A001006" in out
    assert "PASS oeis:A000108" in out


def test_fixture_ausente_falha(settings, tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("RIORDAN_DATA_DIR", str(tmp_path))
    assert main(["check", "--suite", "paper"]) == 1
    assert "FAIL paper:fixtures" in capsys.readouterr().out


def test_check_pela_linha_de_comando(settings, capsys):
    assert main(["check", "--suite", "properties", "--order", "8"]) == 0
    last = capsys.readouterr().out.splitlines()[-1]
    assert last == "21/21 passed"


def test_comparacoes():
    compare_rows("t", [[1], [2, 1]], [[1, 0], [2, 1]])
    with pytest.raises(Mismatch):
        compare_rows("t", [[1], [2, 1]], [[1, 0], [3, 1]])
    compare_terms("s", [1, 2, 5], [1, 2, 5])
    with pytest.raises(Mismatch):
        compare_terms("s", [1, 2], [1, 2, 5])


def test_relatorio():
    text = format_report([CheckResult("a", True), CheckResult("b", False, "celula (1, 0)")])
    assert text == "PASS a\nFAIL b: celula (1, 0)\n1/2 passed\n"
