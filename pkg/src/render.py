import json
from typing import Dict, List, Optional, Sequence, Tuple

from . import exact
from .errors import FixtureError, ShapeMismatch
from .exact import RingValue
from .models import OutputFormat
from .riordan import LowerTriangle


def _table(rows: Sequence[Sequence[str]]) -> str:
    if not rows:
        return ""
    width = max(len(cell) for row in rows for cell in row)
    return "\n".join(" ".join(cell.rjust(width) for cell in row).rstrip() for row in rows) + "\n"


def _csv(rows: Sequence[Sequence[str]]) -> str:
    return "".join(",".join(row) + "\n" for row in rows)


def bfile(values: Sequence[RingValue], offset: int = 0) -> str:
    """'index value' per line, LF-terminated."""
    return "".join(f"{i + offset} {exact.to_text(v)}\n" for i, v in enumerate(values))


def flatten(t: LowerTriangle) -> List[RingValue]:
    return [v for row in t.rows for v in row]


def render_rows(
    rows: Sequence[Sequence[str]],
    fmt: OutputFormat,
    family: str = "",
    params: Optional[Dict[str, str]] = None,
) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.TABLE:
        return _table(rows)
    if fmt == OutputFormat.CSV:
        return _csv(rows)
    if fmt == OutputFormat.BFILE:
        flat = [cell for row in rows for cell in row]
        return "".join(f"{i} {cell}\n" for i, cell in enumerate(flat))
    payload = {"family": family, "params": params or {}, "rows": [list(row) for row in rows]}
    return json.dumps(payload) + "\n"


def render_triangle(
    t: LowerTriangle,
    fmt: OutputFormat,
    family: str = "",
    params: Optional[Dict[str, str]] = None,
) -> str:
    return render_rows(t.as_text_rows(), fmt, family, params)


def render_sequence(values: Sequence[RingValue]) -> str:
    return " ".join(exact.to_text(v) for v in values)


def parse_json(text: str) -> Tuple[str, Dict[str, str], LowerTriangle]:
    """Inverse of the json rendering."""
    try:
        payload = json.loads(text)
        rows = [[exact.parse_value(cell) for cell in row] for row in payload["rows"]]
        return payload.get("family", ""), dict(payload.get("params", {})), LowerTriangle(rows)
    except (ValueError, KeyError, TypeError, ShapeMismatch) as e:
        raise FixtureError(f"json de triangulo invalido: {e}")
