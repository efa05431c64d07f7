import logging
from typing import List, Optional, Tuple

from . import families as fam
from .checks import run_suite
from .config import Settings
from .errors import FamilyError
from .exact import RingValue
from .jacobi import jacobi_from_series
from .models import CheckResult, FamilySpec, OutputFormat
from .render import render_rows, render_sequence, render_triangle
from .riordan import LowerTriangle, left_multiply_binomial, production_matrix, triangle_to_bivariate

logger = logging.getLogger(__name__)

# reversions with a known closed form are verified against it
_NAMED_REVERSIONS = {
    "borel": fam.borel_reversion,
    "catalan-triangle": fam.catalan_reversion,
    "pascal": fam.binomial_reversion,
}


def _check_rows(rows: int, order: int) -> None:
    if rows < 1:
        raise FamilyError(f"--rows deve ser >= 1, recebido {rows}")
    if rows - 1 > order:
        raise FamilyError(f"--rows {rows} excede a ordem de truncamento {order} (use --order)")


def run_gen(
    spec: FamilySpec,
    rows: int,
    order: int,
    fmt: OutputFormat = OutputFormat.TABLE,
    y_eval: Optional[RingValue] = None,
) -> str:
    _check_rows(rows, order)
    t = fam.build_triangle(spec, rows)
    if y_eval is not None:
        t = t.evaluate_y(y_eval)
    return render_triangle(t, fmt, spec.name, spec.params())


def run_sums(spec: FamilySpec, rows: int, order: int, kind: str = "row") -> str:
    _check_rows(rows, order)
    t = fam.build_triangle(spec, rows)
    sums = fam.row_sums(t) if kind == "row" else fam.diagonal_sums(t)
    lines = [render_sequence(sums)]
    gf = fam.family_gf(spec, max(rows - 1, 1))
    if gf is not None:
        consistent = fam.sums_gf_consistent(t, gf, kind)
        lines.append(f"gf-consistent: {'yes' if consistent else 'no'}")
    return "\n".join(lines) + "\n"


def run_prodmat(spec: FamilySpec, rows: int, order: int, fmt: OutputFormat = OutputFormat.TABLE) -> str:
    """rows x rows production matrix, from a triangle with one extra row."""
    _check_rows(rows + 1, order)
    p = production_matrix(fam.build_triangle(spec, rows + 1))
    if not p.is_hessenberg():
        logger.warning("matriz de producao de %s nao e Hessenberg", spec.name)
    return render_rows(p.as_text_rows(), fmt, spec.name, spec.params())


def run_jfrac(spec: FamilySpec, y: RingValue, depth: int, order: int) -> str:
    """J-fraction of the row-polynomial gf sum_n T_n(y) x^n at a rational y."""
    if depth < 1:
        raise FamilyError(f"--depth deve ser >= 1, recebido {depth}")
    rows = 2 * depth
    _check_rows(rows, order)
    g = triangle_to_bivariate(fam.build_triangle(spec, rows)).evaluate_y(y)
    cf = jacobi_from_series(g, depth)
    lines = [
        "b: " + render_sequence(cf.b),
        "lam: " + render_sequence(cf.lam),
    ]
    if cf.terminating:
        lines.append(f"terminating: depth {cf.depth}")
    return "\n".join(lines) + "\n"


def run_revert(
    spec: FamilySpec,
    rows: int,
    order: int,
    fmt: OutputFormat = OutputFormat.TABLE,
    binomial: bool = False,
) -> str:
    _check_rows(rows, order)
    named = _NAMED_REVERSIONS.get(spec.name)
    if named is not None and not spec.params():
        rev: LowerTriangle = named(rows)
    else:
        rev = fam.reversion_triangle(fam.build_triangle(spec, rows))
    if binomial:
        rev = left_multiply_binomial(rev)
    return render_triangle(rev, fmt, f"rev({spec.name})", spec.params())


def format_report(results: List[CheckResult]) -> str:
    lines = []
    for res in results:
        if res.passed:
            lines.append(f"PASS {res.item}")
        else:
            lines.append(f"FAIL {res.item}: {res.detail}")
    passed = sum(1 for res in results if res.passed)
    lines.append(f"{passed}/{len(results)} passed")
    return "\n".join(lines) + "\n"


def run_check(suite: str, settings: Settings, order: Optional[int] = None) -> Tuple[str, int]:
    """Report text and exit status (0 iff every item passed)."""
    results = run_suite(suite, settings, order)
    status = 0 if results and all(res.passed for res in results) else 1
    return format_report(results), status

