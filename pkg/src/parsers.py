import json
import os
import re
from typing import Dict, List, Tuple

from . import exact
from .errors import FixtureError
from .exact import RingValue
from .models import SequenceFixture

BFILE_LINE_RE = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")
PARAM_RE = re.compile(r"^-?\d+(/-?\d+)?$")


def parse_param(text: str) -> RingValue:
    """--r / --s: integer, rational p/q, or the symbol y."""
    text = text.strip()
    if text == "y":
        return exact.Y
    if not PARAM_RE.match(text):
        raise ValueError(f"parametro invalido: {text!r} (esperado inteiro, p/q ou y)")
    try:
        return exact.parse_value(text)
    except ZeroDivisionError:
        raise ValueError(f"parametro com denominador zero: {text!r}")


def parse_t(text: str) -> Tuple[int, ...]:
    """--t: comma-separated integers."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"--t espera inteiros separados por virgula, recebido {text!r}")


def parse_rational(text: str) -> RingValue:
    """--y: rational p/q."""
    value = parse_param(text)
    if exact.level_of(value) == exact.Level.POLYNOMIAL:
        raise ValueError("--y deve ser racional")
    return value


def read_bfile(path: str) -> List[int]:
    terms: List[int] = []
    expected = None
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            m = BFILE_LINE_RE.match(line)
            if not m:
                raise FixtureError(f"{path}:{lineno}: linha fora do formato 'indice valor'")
            index, value = int(m.group(1)), int(m.group(2))
            if expected is not None and index != expected:
                raise FixtureError(f"{path}:{lineno}: indice {index}, esperado {expected}")
            expected = index + 1
            terms.append(value)
    if not terms:
        raise FixtureError(f"{path}: fixture vazia")
    return terms


def sequences_dir(data_dir: str) -> str:
    return os.path.join(data_dir, "sequences")


def load_fixture(data_dir: str, fixture_id: str, reading: str = "plain") -> SequenceFixture:
    path = os.path.join(sequences_dir(data_dir), f"{fixture_id}.txt")
    if not os.path.isfile(path):
        raise FixtureError(f"fixture ausente: {path}")
    return SequenceFixture(id=fixture_id, terms=read_bfile(path), reading=reading, source_path=path)


def load_fixtures(data_dir: str) -> Dict[str, SequenceFixture]:
    folder = sequences_dir(data_dir)
    if not os.path.isdir(folder):
        raise FixtureError(f"diretorio de fixtures ausente: {folder}")
    out: Dict[str, SequenceFixture] = {}
    for name in sorted(os.listdir(folder)):
        if not name.endswith(".txt"):
            continue
        fixture_id = os.path.splitext(name)[0]
        out[fixture_id] = load_fixture(data_dir, fixture_id)
    return out


def load_paper_matrices(data_dir: str) -> Dict[str, List[List[RingValue]]]:
    """Printed matrices, keyed by name; cells are exact text."""
    path = os.path.join(data_dir, "paper_matrices.json")
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
    except FileNotFoundError:
        raise FixtureError(f"fixture ausente: {path}")
    except json.JSONDecodeError as e:
        raise FixtureError(f"{path}: json invalido: {e}")
    out: Dict[str, List[List[RingValue]]] = {}
    for name, rows in payload.items():
        try:
            out[name] = [[exact.parse_value(str(cell)) for cell in row] for row in rows]
        except (ValueError, TypeError) as e:
            raise FixtureError(f"{path}: matriz {name}: {e}")
    return out
