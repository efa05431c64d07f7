"""Verification suites behind `main.py check`.

paper      every printed matrix (data/paper_matrices.json) plus the exact
           identities relating the constructions
oeis       bundled sequence prefixes (data/sequences/*.txt)
properties seeded randomized round trips and group axioms

Each item is a callable that raises on failure; run_suite turns the outcome
into CheckResult records.
"""

from __future__ import annotations

import logging
import os
import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from . import exact, families as fam, orthopoly, parsers, render
from .config import Settings
from .errors import FixtureError, Mismatch, RiordanError
from .exact import RingValue
from .jacobi import jacobi_from_series, series_from_jacobi
from .models import CheckResult, FamilySpec, JacobiCF
from .powerseries import Series
from .riordan import (
    LowerTriangle,
    ProductionMatrix,
    RiordanPair,
    group_inverse,
    group_mul,
    identity_pair,
    materialize,
    triangle_reversal,
)

logger = logging.getLogger(__name__)

SUITES = ("paper", "oeis", "properties")

Item = Tuple[str, Callable[[], None]]
Rows = List[List[RingValue]]


# --- comparison helpers -------------------------------------------------------------


def _as_rows(value) -> Rows:
    if isinstance(value, LowerTriangle):
        return [list(row) for row in value.rows]
    if isinstance(value, ProductionMatrix):
        return [list(row) for row in value.entries]
    return [list(row) for row in value]


def compare_rows(what: str, got, want: Rows) -> None:
    """Cell-exact comparison; cells missing on our side count as 0."""
    got_rows = _as_rows(got)
    if len(got_rows) < len(want):
        raise Mismatch(f"{what}: {len(got_rows)} linhas produzidas, {len(want)} esperadas")
    for n, want_row in enumerate(want):
        row = got_rows[n]
        for k, w in enumerate(want_row):
            g = row[k] if k < len(row) else 0
            if not exact.equal(g, w):
                raise Mismatch(what, (n, k), exact.to_text(g), exact.to_text(w))


def compare_terms(what: str, got: Sequence[RingValue], want: Sequence[int]) -> None:
    if len(got) < len(want):
        raise Mismatch(f"{what}: {len(got)} termos produzidos, {len(want)} esperados")
    for i, w in enumerate(want):
        if not exact.equal(got[i], w):
            raise Mismatch(what, (i,), exact.to_text(got[i]), str(w))


def _column(rows: Sequence[RingValue]) -> Rows:
    return [[v] for v in rows]


# --- paper suite --------------------------------------------------------------------


def _catalan_square(size: int) -> Rows:
    m1, _, _ = fam.catalan_decomposition(size)
    shifted = fam.catalan_m2_shifted(size)
    return [[m1[n][k] - shifted[n][k] for k in range(size)] for n in range(size)]


def _r_borel_checked(r: int, n_rows: int) -> LowerTriangle:
    fam.r_borel_first_column_check(r, n_rows)
    return fam.r_borel(r, n_rows)


def _ones(count: int) -> Tuple[int, ...]:
    return (1,) * count


def paper_producers() -> Dict[str, Callable[[], object]]:
    """Fixture name -> construction reproducing it (with its cross-checks)."""
    producers: Dict[str, Callable[[], object]] = {
        "borel_7": lambda: fam.borel_route_check(7),
        "catalan_7": lambda: fam.catalan_triangle(7),
        "borel_inverse_array_5": lambda: fam.build_triangle(FamilySpec("borel-inverse-array"), 5),
        "borel_ftra_array_5": lambda: fam.build_triangle(FamilySpec("borel-ftra-array"), 5),
        "catalan_column_5": lambda: _column(fam.catalan_series(4).coeffs),
        "borel_polynomials_5": lambda: _column([fam.borel_polynomial(n).value for n in range(5)]),
        "r_borel_1_7": lambda: _r_borel_checked(1, 7),
        "r_borel_0_9": lambda: fam.aerated_085880_check(9),
        "borel_coefficients_4": lambda: orthopoly.coefficient_array(orthopoly.moment_spec_borel(), 4),
        "borel_production_5": lambda: orthopoly.production_check(orthopoly.moment_spec_borel(), 6),
        "rs_borel_0_1_7": lambda: fam.rs_borel_check(0, 1, 7),
        "rs_borel_1_1_7": lambda: fam.rs_borel_check(1, 1, 7),
        "tilde_2_3_7": lambda: fam.tilde_check(2, 3, 7),
        "deriv_inverse_2_3_7": lambda: fam.build_triangle(FamilySpec("deriv-inverse", 2, 3), 7),
        "borel_reversion_8": lambda: fam.borel_reversion(8),
        "borel_reversion_binomial_7": lambda: fam.borel_reversion_binomial(7),
        "catalan_reversion_8": lambda: fam.catalan_reversion(8),
        "diag_one_minus_one_7": lambda: fam.catalan_reversion_binomial(7),
        "diagonal_reversion_7": lambda: fam.diagonal_reversion(7),
        "catalan_reversal_6": lambda: triangle_reversal(fam.catalan_triangle(6)),
        "catalan_reversal_reversion_8": lambda: fam.catalan_reversal_reversion(8),
        "pascal_reversion_8": lambda: fam.binomial_reversion(8),
        "fuss_columns": lambda: [fam.fuss_sequences_check(r, 6)[0] for r in range(6)],
        "fuss_diagonals": lambda: [fam.fuss_sequences_check(r, 6)[1] for r in range(6)],
        "gen_fuss_borel_3_7": lambda: fam.generalized_fuss_borel(3, _ones(4), 7),
        "gen_fuss_borel_4_7": lambda: fam.generalized_fuss_borel(4, _ones(5), 7),
        "catalan_m1_6": lambda: fam.catalan_m1(6),
        "catalan_m2_7": lambda: fam.catalan_m2(7),
        "catalan_square_6": lambda: _catalan_square(6),
        "catalan_m2_shifted_6": lambda: fam.catalan_m2_shifted(6),
    }
    for r in range(5):
        producers[f"fuss_borel_{r}"] = lambda r=r: fam.fuss_borel_check(r, 6)
        producers[f"fuss_catalan_{r}"] = lambda r=r: fam.fuss_catalan_check(r, 6)
    return producers


def _golden_items(data_dir: str) -> List[Item]:
    matrices = parsers.load_paper_matrices(data_dir)
    producers = paper_producers()
    items: List[Item] = []
    for name, want in matrices.items():
        producer = producers.get(name)
        if producer is None:
            items.append((f"paper:{name}", lambda name=name: _raise(FixtureError(f"sem construcao para {name}"))))
            continue
        items.append((f"paper:{name}", lambda name=name, p=producer, w=want: compare_rows(name, p(), w)))
    for name in sorted(set(producers) - set(matrices)):
        items.append((f"paper:{name}", lambda name=name: _raise(FixtureError(f"matriz {name} ausente da fixture"))))
    return items


def _raise(error: Exception) -> None:
    raise error


def _quadratic_tilde(r: int, s: int, order: int) -> None:
    fam.tilde_quadratic_check(r, s, order)
    readings = fam.tilde_quadratic_readings(r, s, order)
    if not readings["1"]:
        raise Mismatch(f"tilde({r},{s}): leitura com termo constante 1 nao anula")


def _borel_jfrac_at_one() -> None:
    cf = jacobi_from_series(fam.borel_gf(12).evaluate_y(1), 6)
    if cf.b != (3, 4, 4, 4, 4, 4) or cf.lam != (4, 4, 4, 4, 4):
        raise Mismatch(f"fracao continua de B(x,1): b={cf.b} lam={cf.lam}, esperado b=(3,4,4,...) lam=(4,4,...)")


def _tilde_moments(r: int, s: int, n_rows: int) -> None:
    """Generalized Borel polynomials are the moments of the tilde spec."""
    rows = fam.tilde_rs(r, s, n_rows).rows
    target = Series(exact.poly_from_coefficients(row) for row in rows)
    orthopoly.moments_check(orthopoly.moment_spec_tilde(r, s), target, n_rows)


def _moment_items() -> List[Item]:
    items: List[Item] = [
        ("paper:momentos-borel", lambda: orthopoly.moments_check(
            orthopoly.moment_spec_borel(), Series(fam.borel_polynomial(n).value for n in range(10)), 10)),
        ("paper:cf-borel", lambda: orthopoly.cf_moments_check(orthopoly.moment_spec_borel(), 12)),
        ("paper:cf-borel-y1", _borel_jfrac_at_one),
        ("paper:catalan-x-pascal", lambda: fam.catalan_factorization_check(12)),
        ("paper:catalan-decomposicao", lambda: fam.catalan_decomposition(10)),
        ("paper:fuss-hadamard", lambda: [fam.fuss_borel_check(r, 8) for r in range(6)]),
    ]
    for r, s in ((2, 3), (1, 1), (0, 1)):
        spec = orthopoly.moment_spec_tilde(r, s)
        items.append((f"paper:momentos-tilde({r},{s})", lambda r=r, s=s: _tilde_moments(r, s, 9)))
        items.append((f"paper:cf-tilde({r},{s})", lambda spec=spec: orthopoly.cf_moments_check(spec, 10)))
    return items


def _identity_items(order: int) -> List[Item]:
    items: List[Item] = [
        ("paper:rotas-borel", lambda: fam.borel_route_check(min(order, 20) + 1)),
        ("paper:quadratica-catalan", lambda: fam.catalan_quadratic_check(order)),
    ]
    for r in range(5):
        items.append((f"paper:quadratica-borel({r})", lambda r=r: fam.borel_quadratic_check(r, order)))
        for s in range(4):
            label = f"({r},{s})"
            items.append((f"paper:rs{label}", lambda r=r, s=s: fam.rs_borel_check(r, s, 13)))
            items.append((f"paper:tilde{label}", lambda r=r, s=s: fam.tilde_check(r, s, 13)))
            items.append((f"paper:escala-s{label}", lambda r=r, s=s: fam.s_scaling_check(r, s, 13)))
            items.append((f"paper:quadratica-tilde{label}", lambda r=r, s=s: _quadratic_tilde(r, s, order)))
    return items


def paper_items(settings: Settings, order: int) -> List[Item]:
    return _golden_items(settings.data_dir) + _moment_items() + _identity_items(order)


# --- oeis suite ---------------------------------------------------------------------


def _rows_for(length: int) -> int:
    """Smallest row count whose triangle holds `length` terms."""
    rows = 0
    while rows * (rows + 1) // 2 < length:
        rows += 1
    return rows


def _borel_bfile_bytes(data_dir: str) -> None:
    path = os.path.join(parsers.sequences_dir(data_dir), "A234950.txt")
    with open(path, "rb") as f:
        head = b"".join(f.readlines()[:28])
    ours = render.render_triangle(fam.borel_triangle(7), "bfile").encode("utf-8")
    if ours != head:
        raise Mismatch("bfile do triangulo de Borel difere de A234950 nos 28 primeiros indices")


def _gen_fuss(r: int, count: int) -> LowerTriangle:
    return fam.generalized_fuss_borel(r, _ones(r + 1), count)


def oeis_producers() -> Dict[str, Callable[[int], Sequence[RingValue]]]:
    """Fixture id -> terms for the first `count` indices."""
    producers: Dict[str, Callable[[int], Sequence[RingValue]]] = {
        "A234950": lambda c: render.flatten(fam.borel_triangle(_rows_for(c))),
        "A009766": lambda c: render.flatten(fam.catalan_triangle(_rows_for(c))),
        "A085880": lambda c: [
            fam.r_borel_entry(0, 2 * m - k, k) for m in range(_rows_for(c)) for k in range(m + 1)
        ],
        "A062992": lambda c: fam.row_sums(fam.borel_triangle(c)),
        "A064641": lambda c: fam.row_sums(fam.tilde_rs(1, 1, c)),
        "A025235": lambda c: fam.diagonal_sums(fam.rs_borel(1, 1, c)),
        "A052709": lambda c: fam.row_sums(fam.rs_borel(0, 1, c)),
        "A122871": lambda c: fam.tilde_first_column(2, 3, c - 1).coeffs,
        "A001006": lambda c: fam.rs_borel(1, 1, c).column(0),
        "A000108": lambda c: fam.catalan_series(c - 1).coeffs,
        "A036765": lambda c: _gen_fuss(3, c).column(0),
        "A006013": lambda c: [_gen_fuss(3, c).entry(n, n) for n in range(c)],
        "A036766": lambda c: _gen_fuss(4, c).column(0),
        "A006632": lambda c: [_gen_fuss(4, c).entry(n, n) for n in range(c)],
    }
    for r in range(6):
        producers[f"fuss_column_r{r}"] = lambda c, r=r: fam.fuss_sequences_check(r, c)[0]
        producers[f"fuss_diagonal_r{r}"] = lambda c, r=r: fam.fuss_sequences_check(r, c)[1]
    return producers


def _sums_gf_item(name: str, spec: FamilySpec, kind: str, n_rows: int) -> Item:
    def run() -> None:
        t = fam.build_triangle(spec, n_rows)
        if not fam.sums_gf_consistent(t, fam.family_gf(spec, n_rows - 1), kind):
            raise Mismatch(f"somas ({kind}) de {spec.name} {spec.params()} nao batem com a funcao geradora")

    return name, run


def oeis_items(settings: Settings) -> List[Item]:
    fixtures = parsers.load_fixtures(settings.data_dir)
    producers = oeis_producers()
    items: List[Item] = []
    for fixture_id, fixture in fixtures.items():
        producer = producers.get(fixture_id)
        if producer is None:
            items.append((f"oeis:{fixture_id}", lambda i=fixture_id: _raise(FixtureError(f"sem construcao para {i}"))))
            continue
        terms = fixture.terms
        items.append(
            (f"oeis:{fixture_id}", lambda i=fixture_id, p=producer, t=terms: compare_terms(i, p(len(t)), t))
        )
    for fixture_id in sorted(set(producers) - set(fixtures)):
        items.append((f"oeis:{fixture_id}", lambda i=fixture_id: _raise(FixtureError(f"fixture {i} ausente"))))
    items.append(("oeis:A234950-bfile", lambda: _borel_bfile_bytes(settings.data_dir)))
    items.extend(
        [
            _sums_gf_item("oeis:A062992-fg", FamilySpec("borel"), "row", 12),
            _sums_gf_item("oeis:A064641-fg", FamilySpec("tilde", 1, 1), "row", 12),
            _sums_gf_item("oeis:A025235-fg", FamilySpec("rs-borel", 1, 1), "diag", 12),
            _sums_gf_item("oeis:A052709-fg", FamilySpec("rs-borel", 0, 1), "row", 12),
        ]
    )
    return items


# --- properties suite ----------------------------------------------------------------


def _random_series(rng: random.Random, order: int, c0: int, c1: Optional[int] = None) -> Series:
    coeffs = [c0] + [rng.randint(-3, 3) for _ in range(order)]
    if c1 is not None and order >= 1:
        coeffs[1] = c1
    return Series(coeffs)


def _random_pair(rng: random.Random, order: int) -> RiordanPair:
    g = _random_series(rng, order, 1)
    f = _random_series(rng, order, 0, rng.choice((1, -1)))
    return RiordanPair(g, f)


def _expect_series(what: str, got: Series, want: Series) -> None:
    n = got.first_difference(want)
    if n is not None:
        raise Mismatch(what, (n,), exact.to_text(got.coefficient(n)), exact.to_text(want.coefficient(n)))


def _expect_pair(what: str, got: RiordanPair, want: RiordanPair) -> None:
    _expect_series(f"{what} (g)", got.g, want.g)
    _expect_series(f"{what} (f)", got.f, want.f)


def _prop_revert_involution(rng: random.Random, order: int) -> None:
    f = _random_series(rng, order, 0, rng.choice((1, -1)))
    _expect_series("Rev(Rev(f)) = f", f.revert().revert(), f)


def _prop_compose_revert(rng: random.Random, order: int) -> None:
    f = _random_series(rng, order, 0, rng.choice((1, -1)))
    _expect_series("f(Rev f) = x", f.compose(f.revert()), Series.x(order))


def _prop_sqrt_square(rng: random.Random, order: int) -> None:
    s = _random_series(rng, order, 1)
    root = s.sqrt()
    _expect_series("sqrt(s)^2 = s", root * root, s)


def _prop_inverse(rng: random.Random, order: int) -> None:
    s = _random_series(rng, order, rng.choice((1, -1, 2)))
    _expect_series("s * 1/s = 1", s * s.inverse(), Series.one(order))


def _prop_group_axioms(rng: random.Random, order: int) -> None:
    a, b, c = (_random_pair(rng, order) for _ in range(3))
    n_rows = order + 1
    ab = group_mul(a, b)
    product = materialize(a, n_rows) @ materialize(b, n_rows)
    cell = materialize(ab, n_rows).first_difference(product)
    if cell is not None:
        raise Mismatch("[(g,f)(u,v)] = [g,f][u,v]", cell)
    _expect_pair("associatividade", group_mul(ab, c), group_mul(a, group_mul(b, c)))
    _expect_pair("a a^-1 = 1", group_mul(a, group_inverse(a)), identity_pair(order))
    _expect_pair("a 1 = a", group_mul(a, identity_pair(order)), a)


def _prop_tridiagonal(rng: random.Random, order: int) -> None:
    r, s = rng.randint(-3, 3), rng.randint(-3, 3)
    spec = rng.choice((orthopoly.moment_spec_rs, orthopoly.moment_spec_tilde))(r, s)
    p = orthopoly.production_check(spec, 6)
    if not p.is_tridiagonal():
        raise Mismatch(f"matriz de producao de {spec.label} nao e tridiagonal")


def _random_nonzero_rational(rng: random.Random) -> Fraction:
    num = rng.choice([v for v in range(-4, 5) if v])
    return Fraction(num, rng.randint(1, 3))


def _prop_cf_round_trip(rng: random.Random, order: int) -> None:
    depth = 10
    b = tuple(exact.normalize(_random_nonzero_rational(rng)) for _ in range(depth))
    lam = tuple(exact.normalize(_random_nonzero_rational(rng)) for _ in range(depth - 1))
    g = series_from_jacobi(JacobiCF(b=b, lam=lam, terminating=True), 2 * depth - 1)
    cf = jacobi_from_series(g, depth)
    if cf.b != b or cf.lam != lam:
        raise Mismatch(f"fracao continua ida e volta: b={cf.b} lam={cf.lam}, esperado b={b} lam={lam}")


PROPERTIES: Dict[str, Tuple[Callable[[random.Random, int], None], int]] = {
    # name -> (property, series order)
    "revert-involucao": (_prop_revert_involution, 12),
    "compoe-reverte": (_prop_compose_revert, 12),
    "raiz-ao-quadrado": (_prop_sqrt_square, 12),
    "inversa": (_prop_inverse, 16),
    "axiomas-do-grupo": (_prop_group_axioms, 16),
    "producao-tridiagonal": (_prop_tridiagonal, 0),
    "fracao-continua": (_prop_cf_round_trip, 0),
}


def property_items(settings: Settings, order: int) -> List[Item]:
    rng = random.Random(settings.seed)
    items: List[Item] = []
    for name, (prop, prop_order) in PROPERTIES.items():
        for case in range(settings.property_cases):
            case_rng = random.Random(rng.getrandbits(64))
            items.append(
                (f"properties:{name}#{case}", lambda p=prop, r=case_rng, o=min(prop_order, order): p(r, o))
            )
    return items


# --- runner ---------------------------------------------------------------------------


def collect(suite: str, settings: Settings, order: int) -> List[Item]:
    if suite == "all":
        return [item for name in SUITES for item in collect(name, settings, order)]
    if suite == "paper":
        return paper_items(settings, order)
    if suite == "oeis":
        return oeis_items(settings)
    if suite == "properties":
        return property_items(settings, order)
    raise ValueError(f"suite desconhecida: {suite}")


def run_items(items: Sequence[Item], progress: bool = True, desc: str = "Verificando") -> List[CheckResult]:
    results: List[CheckResult] = []
    for name, fn in tqdm(items, desc=desc, disable=not progress):
        try:
            fn()
            results.append(CheckResult(item=name, passed=True))
        except (RiordanError, AssertionError, ValueError) as e:
            logger.debug("falha em %s: %s", name, e)
            results.append(CheckResult(item=name, passed=False, detail=str(e) or type(e).__name__))
    return results


def run_suite(suite: str, settings: Settings, order: Optional[int] = None) -> List[CheckResult]:
    order = settings.order if order is None else order
    try:
        items = collect(suite, settings, order)
    except FixtureError as e:
        return [CheckResult(item=f"{suite}:fixtures", passed=False, detail=str(e))]
    logger.info("suite %s: %d itens (ordem %d)", suite, len(items), order)
    return run_items(items, progress=settings.progress, desc=f"Suite {suite}")
