"""Triangle families of the Borel circle: closed forms, generating
functions and the alternative constructions each one is checked against.

Entry functions return 0 outside 0 <= k <= n. Triangle builders return
LowerTriangle; the *_check helpers raise Mismatch at the first differing
cell and return the triangle they verified.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import exact
from .errors import FamilyError, Mismatch, NonzeroResidual
from .exact import Level, RingValue, Y, binomial, catalan
from .jacobi import borel_cf, required_depth, series_from_jacobi, verify_quadratic_zero
from .models import BorelPolynomial, FamilySpec
from .orthopoly import coefficient_array, moment_spec_borel
from .powerseries import Series, lagrange_coefficient
from .riordan import (
    EXPONENTIAL,
    LowerTriangle,
    RiordanPair,
    assert_same,
    binomial_transform,
    bivariate_to_triangle,
    derivative_pair,
    derivative_subgroup_inverse,
    derivative_subgroup_term,
    ftra_apply,
    group_inverse,
    hadamard,
    left_multiply_binomial,
    materialize,
    matrix_inverse,
    pascal,
    pascal_inverse,
    triangle_reversal,
    triangle_reversion,
    triangle_to_bivariate,
)

logger = logging.getLogger(__name__)


def _in_triangle(n: int, k: int) -> bool:
    return 0 <= k <= n


def _require_numeric(*values: RingValue) -> None:
    for v in values:
        if exact.level_of(v) == Level.POLYNOMIAL:
            raise FamilyError("rota por funcao geradora exige parametros numericos (y ja e a variavel da serie)")


# --- Borel triangle ---------------------------------------------------------------


def borel_entry(n: int, k: int) -> int:
    """B_{n,k} = C(2n+2, n-k) C(n+k, k) / (n+1)."""
    if not _in_triangle(n, k):
        return 0
    value = Fraction(binomial(2 * n + 2, n - k) * binomial(n + k, k), n + 1)
    assert value.denominator == 1, f"B({n},{k}) nao inteiro"
    return int(value)


def borel_triangle(n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(borel_entry, n_rows)


def borel_polynomial(n: int) -> BorelPolynomial:
    return BorelPolynomial(n, exact.poly_from_coefficients([borel_entry(n, k) for k in range(n + 1)]))


def borel_defining_f(order: int) -> Series:
    """x(1 - yx)/(1 + x)^2."""
    return Series.polynomial([0, 1, -Y], order) * Series.polynomial([1, 2, 1], order).inverse()


def borel_defining_pair(order: int) -> RiordanPair:
    """(1/(1+x), x(1-yx)/(1+x)^2); its inverse has column 0 equal to 1 + xB(x,y)."""
    return RiordanPair(Series.polynomial([1, 1], order).inverse(), borel_defining_f(order))


def borel_ftra_pair(order: int) -> RiordanPair:
    """(1/(1-2x), x(x+y)/(1-2x)^2)."""
    g = Series.polynomial([1, -2], order).inverse()
    return RiordanPair(g, Series.polynomial([0, Y, 1], order) * g * g)


def catalan_series(order: int) -> Series:
    return Series.from_function(catalan, order)


def borel_gf_by_reversion(order: int) -> Series:
    return borel_defining_f(order + 1).revert().shift_down()


def borel_gf_by_radical(order: int) -> Series:
    """(1 - 2x - sqrt(1 - 4x(y+1))) / (2x(x+y)), dividing exactly by x then by 2(x+y)."""
    n = order + 1
    root = Series.polynomial([1, -4 * (Y + 1)], n).sqrt()
    numerator = Series.polynomial([1, -2], n) - root
    return numerator.shift_down().exact_div(Series.polynomial([2 * Y, 2], order))


def borel_gf_by_catalan_substitution(order: int) -> Series:
    """c(x(x+y)/(1-2x)^2)/(1-2x), i.e. the bivariate pair acting on c(x)."""
    return ftra_apply(borel_ftra_pair(order), catalan_series(order))


def borel_gf(order: int) -> Series:
    """B(x,y) to the given order; three routes must agree."""
    radical = borel_gf_by_radical(order)
    for name, other in (
        ("reversao", borel_gf_by_reversion(order)),
        ("substituicao de Catalan", borel_gf_by_catalan_substitution(order)),
    ):
        n = radical.first_difference(other)
        if n is not None:
            raise Mismatch(f"B(x,y) radical vs {name}", (n,), exact.to_text(radical[n]), exact.to_text(other[n]))
    return radical


def borel_routes(n_rows: int) -> Dict[str, LowerTriangle]:
    """Every independent construction of the Borel triangle."""
    order = max(n_rows - 1, 1)
    f_next = borel_defining_f(order + 1)
    lagrange_rows = [exact.poly_coefficients(lagrange_coefficient(Series.x(order + 1), f_next, n + 1)) for n in range(n_rows)]
    moments = matrix_inverse(coefficient_array(moment_spec_borel(), n_rows))
    cf = series_from_jacobi(borel_cf(required_depth(order)), order)
    return {
        "forma fechada": borel_triangle(n_rows),
        "reversao": bivariate_to_triangle(borel_gf_by_reversion(order), n_rows),
        "radical": bivariate_to_triangle(borel_gf_by_radical(order), n_rows),
        "substituicao de Catalan": bivariate_to_triangle(borel_gf_by_catalan_substitution(order), n_rows),
        "Catalan x Pascal": catalan_triangle(n_rows) @ pascal(n_rows),
        "Hadamard": hadamard(
            LowerTriangle.from_function(lambda n, k: Fraction(binomial(n + k, k), n + 1), n_rows),
            derivative_subgroup_inverse(2, 1, n_rows),
        ),
        "fracao continua": bivariate_to_triangle(cf, n_rows),
        "momentos": LowerTriangle(exact.poly_coefficients(moments.entry(n, 0)) for n in range(n_rows)),
        "Lagrange": LowerTriangle(lagrange_rows),
    }


def borel_route_check(n_rows: int) -> LowerTriangle:
    routes = borel_routes(n_rows)
    reference = routes.pop("forma fechada")
    for name, triangle in routes.items():
        assert_same(reference, triangle, f"Borel: forma fechada vs {name}")
        logger.debug("rota %s confere em %d linhas", name, n_rows)
    return reference


# --- sums ------------------------------------------------------------------------


def row_sums(t: LowerTriangle) -> List[RingValue]:
    out = []
    for row in t.rows:
        acc: RingValue = 0
        for v in row:
            acc = exact.add(acc, v)
        out.append(exact.normalize(acc))
    return out


def diagonal_sums(t: LowerTriangle) -> List[RingValue]:
    out = []
    for n in range(t.n_rows):
        acc: RingValue = 0
        for k in range(n // 2 + 1):
            acc = exact.add(acc, t.entry(n - k, k))
        out.append(exact.normalize(acc))
    return out


def sums_gf_consistent(t: LowerTriangle, gf: Series, kind: str) -> bool:
    """Row sums against gf at y=1, diagonal sums against gf at y=x."""
    if kind == "row":
        sums, series = row_sums(t), gf.evaluate_y(1)
    elif kind == "diag":
        sums, series = diagonal_sums(t), gf.substitute_y_by_x()
    else:
        raise ValueError(f"tipo de soma desconhecido: {kind}")
    n = min(len(sums), series.order + 1)
    return all(exact.equal(sums[i], series.coeffs[i]) for i in range(n))


# --- r, (r,s) and tilde (r,s) --------------------------------------------------------


def r_borel_entry(r: RingValue, n: int, k: int) -> RingValue:
    """sum_j C(j,k) C(n+k,2j) r^(n+k-2j) C_j."""
    if not _in_triangle(n, k):
        return 0
    acc: RingValue = 0
    for j in range(k, (n + k) // 2 + 1):
        c = binomial(j, k) * binomial(n + k, 2 * j)
        if c == 0:
            continue
        acc = exact.add(acc, exact.mul(c * catalan(j), exact.power(r, n + k - 2 * j)))
    return exact.normalize(acc)


def r_borel(r: RingValue, n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(lambda n, k: r_borel_entry(r, n, k), n_rows)


def aerated_catalan(count: int) -> List[int]:
    return [catalan(n // 2) if n % 2 == 0 else 0 for n in range(count)]


def r_borel_first_column_check(r: RingValue, n_rows: int) -> List[RingValue]:
    """Column 0 of B^(r) is the r-th binomial transform of the aerated Catalan numbers."""
    column = [r_borel_entry(r, n, 0) for n in range(n_rows)]
    expected = binomial_transform(aerated_catalan(n_rows), r)
    for n, (a, b) in enumerate(zip(column, expected)):
        if not exact.equal(a, b):
            raise Mismatch(f"coluna 0 de B^({exact.to_text(r)})", (n, 0), exact.to_text(a), exact.to_text(b))
    return column


def rs_borel_entry(r: RingValue, s: RingValue, n: int, k: int) -> RingValue:
    """sum_j C(j,k) C(n+k,2j) s^j r^(n+k-2j) C_j."""
    if not _in_triangle(n, k):
        return 0
    acc: RingValue = 0
    for j in range(k, (n + k) // 2 + 1):
        c = binomial(j, k) * binomial(n + k, 2 * j)
        if c == 0:
            continue
        term = exact.mul(exact.power(s, j), exact.power(r, n + k - 2 * j))
        acc = exact.add(acc, exact.mul(c * catalan(j), term))
    return exact.normalize(acc)


def rs_borel(r: RingValue, s: RingValue, n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(lambda n, k: rs_borel_entry(r, s, n, k), n_rows)


def radical_gf(r: RingValue, linear: RingValue, quadratic: RingValue, order: int) -> Series:
    """2/(1 - rx + sqrt(1 - 2*linear*x + quadratic*x^2))."""
    root = Series.polynomial([1, exact.mul(-2, linear), quadratic], order).sqrt()
    return (Series.polynomial([1, exact.neg(r)], order) + root).inverse().scale(2)


def rs_gf(r: RingValue, s: RingValue, order: int) -> Series:
    """(1 - rx - sqrt(D))/(2sx(x+y)) with D = 1 - 2(r+2sy)x + (r^2-4s)x^2, in unit-denominator form."""
    _require_numeric(r, s)
    linear = exact.add(r, exact.mul(2 * Y, s))
    quadratic = exact.sub(exact.mul(r, r), exact.mul(4, s))
    return radical_gf(r, linear, quadratic, order)


def tilde_rs_entry(r: RingValue, s: RingValue, n: int, k: int) -> RingValue:
    """C(n+k,k)/(n+1) times the derivative-subgroup term."""
    if not _in_triangle(n, k):
        return 0
    t = derivative_subgroup_term(r, s, n, k)
    return exact.normalize(exact.divide(exact.mul(binomial(n + k, k), t), n + 1))


def tilde_rs_entry_catalan_sum(r: RingValue, s: RingValue, n: int, k: int) -> RingValue:
    """sum_j C(j,k) C(n+k,2j) s^(j-k) r^(n+k-2j) C_j."""
    if not _in_triangle(n, k):
        return 0
    acc: RingValue = 0
    for j in range(k, (n + k) // 2 + 1):
        c = binomial(j, k) * binomial(n + k, 2 * j)
        if c == 0:
            continue
        term = exact.mul(exact.power(s, j - k), exact.power(r, n + k - 2 * j))
        acc = exact.add(acc, exact.mul(c * catalan(j), term))
    return exact.normalize(acc)


def tilde_rs(r: RingValue, s: RingValue, n_rows: int) -> LowerTriangle:
    """Lagrange form, checked cell by cell against the Catalan-sum form."""
    lagrange = LowerTriangle.from_function(lambda n, k: tilde_rs_entry(r, s, n, k), n_rows)
    by_sum = LowerTriangle.from_function(lambda n, k: tilde_rs_entry_catalan_sum(r, s, n, k), n_rows)
    assert_same(lagrange, by_sum, f"tilde({exact.to_text(r)},{exact.to_text(s)}) Lagrange vs soma de Catalan")
    return lagrange


def tilde_gf_by_reversion(r: RingValue, s: RingValue, order: int) -> Series:
    """(1/x) Rev(x(1-yx)/(1+rx+sx^2))."""
    _require_numeric(r, s)
    n = order + 1
    f = Series.polynomial([0, 1, -Y], n) * Series.polynomial([1, r, s], n).inverse()
    return f.revert().shift_down()


def tilde_gf(r: RingValue, s: RingValue, order: int) -> Series:
    """2/(1 - rx + sqrt(1 - 2(r+2y)x + (r^2-4s)x^2))."""
    _require_numeric(r, s)
    linear = exact.add(r, 2 * Y)
    quadratic = exact.sub(exact.mul(r, r), exact.mul(4, s))
    return radical_gf(r, linear, quadratic, order)


def tilde_first_column(r: RingValue, s: RingValue, order: int) -> Series:
    """(1/x) Rev(x/(1+rx+sx^2))."""
    f = Series.polynomial([1, r, s], order + 1).inverse().shift_up().truncate(order + 1)
    return f.revert().shift_down()


def rs_borel_check(r: RingValue, s: RingValue, n_rows: int) -> LowerTriangle:
    t = rs_borel(r, s, n_rows)
    by_gf = bivariate_to_triangle(rs_gf(r, s, max(n_rows - 1, 1)), n_rows)
    assert_same(t, by_gf, f"rs({exact.to_text(r)},{exact.to_text(s)}) soma vs funcao geradora")
    return t


def tilde_check(r: RingValue, s: RingValue, n_rows: int) -> LowerTriangle:
    t = tilde_rs(r, s, n_rows)
    order = max(n_rows - 1, 1)
    label = f"tilde({exact.to_text(r)},{exact.to_text(s)})"
    assert_same(t, bivariate_to_triangle(tilde_gf_by_reversion(r, s, order), n_rows), f"{label} vs reversao")
    assert_same(t, bivariate_to_triangle(tilde_gf(r, s, order), n_rows), f"{label} vs radical")
    return t


def s_scaling_check(r: RingValue, s: RingValue, n_rows: int) -> None:
    """rs entry = s^k * tilde entry."""
    for n in range(n_rows):
        for k in range(n + 1):
            a = rs_borel_entry(r, s, n, k)
            b = exact.mul(exact.power(s, k), tilde_rs_entry(r, s, n, k))
            if not exact.equal(a, b):
                raise Mismatch(f"escala s^k ({exact.to_text(r)},{exact.to_text(s)})", (n, k), exact.to_text(a), exact.to_text(b))


# --- Catalan triangle ------------------------------------------------------------------


def catalan_triangle_entry(n: int, k: int) -> int:
    """Ballot numbers (n-k+1)/(n+1) C(n+k, k)."""
    if not _in_triangle(n, k):
        return 0
    return (n - k + 1) * binomial(n + k, k) // (n + 1)


def catalan_triangle(n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(catalan_triangle_entry, n_rows)


def catalan_triangle_gf(order: int) -> Series:
    """B(x, y-1) = 2/(1 - 2x + sqrt(1 - 4xy))."""
    return radical_gf(2, 2 * Y, 0, order)


def catalan_factorization_check(n_rows: int) -> LowerTriangle:
    product = catalan_triangle(n_rows) @ pascal(n_rows)
    assert_same(borel_triangle(n_rows), product, "Borel vs Catalan x Pascal")
    return product


def catalan_m1(size: int) -> List[List[int]]:
    return [[binomial(n + k, k) for k in range(size)] for n in range(size)]


def catalan_m2_entry(n: int, k: int) -> int:
    if k < 0:
        return 0
    return sum(binomial(n + k - 2 * i, n - i) * catalan(i) for i in range(k + 1))


def catalan_m2_entry_negative(n: int, k: int) -> int:
    """Same entry with negative upper arguments: sum_i C(i-k-1, n-i) (-1)^(n-i) C_i."""
    if k < 0:
        return 0
    return sum(binomial(i - k - 1, n - i) * (-1) ** (n - i) * catalan(i) for i in range(k + 1))


def catalan_m2(size: int) -> List[List[int]]:
    return [[catalan_m2_entry(n, k) for k in range(size)] for n in range(size)]


def catalan_m2_shifted(size: int) -> List[List[int]]:
    return [[catalan_m2_entry(n, k - 1) for k in range(size)] for n in range(size)]


def catalan_decomposition(size: int) -> Tuple[List[List[int]], List[List[int]], bool]:
    """C_{n,k} = C(n+k,k) - M2(n,k-1) on the size x size square."""
    m1, m2 = catalan_m1(size), catalan_m2(size)
    shifted = catalan_m2_shifted(size)
    for n in range(size):
        for k in range(size):
            want = catalan_triangle_entry(n, k)
            got = m1[n][k] - shifted[n][k]
            if got != want:
                raise Mismatch("decomposicao do triangulo de Catalan", (n, k), str(got), str(want))
            if catalan_m2_entry_negative(n, k) != m2[n][k]:
                raise Mismatch("M2 com argumentos negativos", (n, k), str(catalan_m2_entry_negative(n, k)), str(m2[n][k]))
            negative = sum(binomial(i - k, n - i) * (-1) ** (n - i) * catalan(i) for i in range(k))
            if m1[n][k] - negative != want:
                raise Mismatch("identidade com argumentos negativos", (n, k), str(m1[n][k] - negative), str(want))
    return m1, m2, True


# --- aerated A085880 -------------------------------------------------------------------


def aerated_entry(n: int, k: int) -> int:
    """[n+k even] C(m,k) C_m with m = (n+k)/2."""
    if not _in_triangle(n, k) or (n + k) % 2:
        return 0
    m = (n + k) // 2
    return binomial(m, k) * catalan(m)


def aerated_gf(order: int) -> Series:
    """(1 - sqrt(1 - 4x(x+y)))/(2x(x+y))."""
    n = order + 1
    root = Series.polynomial([1, -4 * Y, -4], n).sqrt()
    return (Series.one(n) - root).shift_down().exact_div(Series.polynomial([2 * Y, 2], order))


def aerated_085880_check(n_rows: int) -> LowerTriangle:
    b0 = r_borel(0, n_rows)
    assert_same(b0, LowerTriangle.from_function(aerated_entry, n_rows), "B^(0) vs aeracao de C(n,k)C_n")
    assert_same(b0, bivariate_to_triangle(aerated_gf(max(n_rows - 1, 1)), n_rows), "B^(0) vs funcao geradora")
    return b0


# --- Fuss-Borel and Fuss-Catalan ----------------------------------------------------------


def _fuss_left(r: int, n: int, k: int) -> Fraction:
    return Fraction(binomial((r - 1) * (n + 1) + k - 1, k), n + 1)


def fuss_borel_entry(r: int, n: int, k: int) -> RingValue:
    """C((r-1)(n+1)+k-1, k) C(r(n+1), n-k) / (n+1)."""
    if not _in_triangle(n, k):
        return 0
    return exact.normalize(_fuss_left(r, n, k) * binomial(r * (n + 1), n - k))


def fuss_borel_corollary_entry(r: int, n: int, k: int) -> RingValue:
    if not _in_triangle(n, k):
        return 0
    acc = sum(
        (Fraction(fuss_catalan_entry(r, n, j)) * binomial(j, k) for j in range(k, n + 1)),
        Fraction(0),
    )
    return exact.normalize(acc)


def fuss_borel(r: int, n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(lambda n, k: fuss_borel_entry(r, n, k), n_rows)


def fuss_borel_hadamard(r: int, n_rows: int) -> LowerTriangle:
    """Left factor composed entrywise with ((x/(1+x)^r)', x/(1+x)^r)^-1."""
    order = max(n_rows, 1)
    f = Series.polynomial([1, 1], order).power(-r).shift_up().truncate(order)
    inverse = materialize(group_inverse(derivative_pair(f)), n_rows)
    return hadamard(LowerTriangle.from_function(lambda n, k: _fuss_left(r, n, k), n_rows), inverse)


def fuss_catalan_entry(r: int, n: int, k: int) -> RingValue:
    """(n-k+1)/(n+1) C((r-1)(n+1)+k-1, k)."""
    if not _in_triangle(n, k):
        return 0
    return exact.normalize(Fraction(n - k + 1, n + 1) * binomial((r - 1) * (n + 1) + k - 1, k))


def fuss_catalan(r: int, n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(lambda n, k: fuss_catalan_entry(r, n, k), n_rows)


def fuss_reversal_pair(r: int, order: int) -> RiordanPair:
    """((1-x)^(r-1), x(1-x)^(r-1))."""
    g = Series.polynomial([1, -1], order).power(r - 1)
    return RiordanPair(g, g.shift_up().truncate(order))


def fuss_borel_check(r: int, n_rows: int) -> LowerTriangle:
    t = fuss_borel(r, n_rows)
    assert_same(t, fuss_borel_hadamard(r, n_rows), f"Fuss-Borel({r}) vs Hadamard")
    assert_same(t, LowerTriangle.from_function(lambda n, k: fuss_borel_corollary_entry(r, n, k), n_rows), f"Fuss-Borel({r}) vs soma")
    return t


def fuss_catalan_check(r: int, n_rows: int) -> LowerTriangle:
    """Fuss-Catalan = Fuss-Borel * Pascal^-1, and its reversal is a Riordan inverse."""
    t = fuss_catalan(r, n_rows)
    assert_same(t, fuss_borel(r, n_rows) @ pascal_inverse(n_rows), f"Fuss-Catalan({r}) vs Fuss-Borel x Pascal^-1")
    reversal = materialize(group_inverse(fuss_reversal_pair(r, max(n_rows, 1))), n_rows)
    assert_same(triangle_reversal(t), reversal, f"reversao de Fuss-Catalan({r}) vs par de Riordan")
    return t


def fuss_column(r: int, count: int) -> List[int]:
    """C(r(n+1), n+1)/((r-1)n+r), or C(r(n+1), n)/(n+1) where that denominator vanishes."""
    out = []
    for n in range(count):
        d = (r - 1) * n + r
        if d == 0:
            value = Fraction(binomial(r * (n + 1), n), n + 1)
        else:
            value = Fraction(binomial(r * (n + 1), n + 1), d)
        out.append(exact.normalize(value))
    return out


def fuss_diagonal(r: int, count: int) -> List[int]:
    return [exact.normalize(Fraction(binomial(r * (n + 1) - 2, n), n + 1)) for n in range(count)]


def fuss_sequences_check(r: int, count: int) -> Tuple[List[int], List[int]]:
    column, diagonal = fuss_column(r, count), fuss_diagonal(r, count)
    for n in range(count):
        if column[n] != fuss_borel_entry(r, n, 0):
            raise Mismatch(f"primeira coluna de Fuss-Borel({r})", (n, 0), str(column[n]), str(fuss_borel_entry(r, n, 0)))
        if diagonal[n] != fuss_borel_entry(r, n, n):
            raise Mismatch(f"diagonal de Fuss-Borel({r})", (n, n), str(diagonal[n]), str(fuss_borel_entry(r, n, n)))
    return column, diagonal


def generalized_fuss_borel(r: int, t: Sequence[int], n_rows: int) -> LowerTriangle:
    """Fuss left factor composed entrywise with ((x/t(x))', x/t(x))^-1."""
    if r < 1:
        raise FamilyError(f"Fuss-Borel generalizado exige r >= 1, recebido {r}")
    if len(t) != r + 1:
        raise FamilyError(f"Fuss-Borel generalizado de ordem {r} exige {r + 1} coeficientes t, recebeu {len(t)}")
    if t[0] != 1:
        raise FamilyError(f"t0 deve ser 1, recebido {t[0]}")
    order = max(n_rows, 1)
    f = Series.polynomial(list(t), order).inverse().shift_up().truncate(order)
    inverse = materialize(group_inverse(derivative_pair(f)), n_rows)
    return hadamard(LowerTriangle.from_function(lambda n, k: _fuss_left(r, n, k), n_rows), inverse)


# --- reversions ------------------------------------------------------------------------------


def reversion_triangle(t: LowerTriangle) -> LowerTriangle:
    """Triangle of (1/x) Rev_x(x T(x,y))."""
    return bivariate_to_triangle(triangle_reversion(triangle_to_bivariate(t)), t.n_rows)


def _gf_triangle(numerator: Sequence[RingValue], denominator: Sequence[RingValue], n_rows: int) -> LowerTriangle:
    order = max(n_rows - 1, 1)
    gf = Series.polynomial(list(numerator), order) * Series.polynomial(list(denominator), order).inverse()
    return bivariate_to_triangle(gf, n_rows)


def borel_reversion(n_rows: int) -> LowerTriangle:
    """Reversion of the Borel triangle has gf (1 - yx)/(1 + x)^2."""
    rev = reversion_triangle(borel_triangle(n_rows))
    assert_same(rev, _gf_triangle([1, -Y], [1, 2, 1], n_rows), "reversao de Borel vs (1-yx)/(1+x)^2")
    return rev


def catalan_reversion(n_rows: int) -> LowerTriangle:
    """Reversion of the Catalan triangle has gf (1 + x - yx)/(1 + x)^2."""
    rev = reversion_triangle(catalan_triangle(n_rows))
    assert_same(rev, _gf_triangle([1, 1 - Y], [1, 2, 1], n_rows), "reversao de Catalan vs (1+x-yx)/(1+x)^2")
    return rev


def _diag_one_minus_one(n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(lambda n, k: [1, -1][n] if n == k and n <= 1 else 0, n_rows)


def borel_reversion_binomial(n_rows: int) -> LowerTriangle:
    """Pascal times the Borel reversion keeps only rows (1) and (-1, -1)."""
    product = left_multiply_binomial(borel_reversion(n_rows))
    expected = LowerTriangle.from_function(lambda n, k: 1 if n == 0 else (-1 if n == 1 else 0), n_rows)
    assert_same(product, expected, "Pascal x reversao de Borel")
    return product


def catalan_reversion_binomial(n_rows: int) -> LowerTriangle:
    """Pascal times the Catalan reversion is diag(1, -1, 0, ...)."""
    product = left_multiply_binomial(catalan_reversion(n_rows))
    expected = _diag_one_minus_one(n_rows)
    assert_same(product, expected, "Pascal x reversao de Catalan")
    return product


def diagonal_reversion(n_rows: int) -> LowerTriangle:
    """Reversion of diag(1, -1, 0, ...) is diag(C_0, C_1, C_2, ...)."""
    rev = reversion_triangle(_diag_one_minus_one(n_rows))
    assert_same(rev, LowerTriangle.from_function(lambda n, k: catalan(n) if n == k else 0, n_rows), "reversao de diag(1,-1)")
    return rev


def catalan_reversal_reversion(n_rows: int) -> LowerTriangle:
    """Reversion of the reversed Catalan triangle is the exponential array [1-x, -x]."""
    rev = reversion_triangle(triangle_reversal(catalan_triangle(n_rows)))
    order = max(n_rows - 1, 1)
    exponential = RiordanPair(Series.polynomial([1, -1], order), Series.polynomial([0, -1], order), EXPONENTIAL)
    assert_same(rev, materialize(exponential, n_rows), "reversao do Catalan invertido vs [1-x,-x]")
    return rev


def binomial_reversion(n_rows: int) -> LowerTriangle:
    """Reversion of Pascal's triangle is ((-1)^n C(n,k))."""
    rev = reversion_triangle(pascal(n_rows))
    expected = LowerTriangle.from_function(lambda n, k: (-1) ** n * binomial(n, k), n_rows)
    assert_same(rev, expected, "reversao de Pascal")
    return rev


REVERSIONS: Dict[str, Callable[[int], LowerTriangle]] = {
    "borel": borel_reversion,
    "borel-binomial": borel_reversion_binomial,
    "catalan": catalan_reversion,
    "catalan-binomial": catalan_reversion_binomial,
    "diagonal": diagonal_reversion,
    "catalan-reversal": catalan_reversal_reversion,
    "pascal": binomial_reversion,
}


# --- quadratic zeros ----------------------------------------------------------------------------


def borel_quadratic_check(r: RingValue, order: int) -> None:
    """(x+y) z^2 - (1-rx) z + x = 0 for z = x B^(r)(x,y)."""
    z = rs_gf(r, 1, order).shift_up().truncate(order)
    verify_quadratic_zero(
        z,
        Series.polynomial([Y, 1], order),
        Series.polynomial([-1, r], order),
        Series.x(order),
        f"xB^({exact.to_text(r)})",
    )


def catalan_quadratic_check(order: int) -> None:
    """(x+y-1) z^2 - (1-2x) z + x = 0 for z = x C(x,y)."""
    z = catalan_triangle_gf(order).shift_up().truncate(order)
    verify_quadratic_zero(
        z,
        Series.polynomial([Y - 1, 1], order),
        Series.polynomial([-1, 2], order),
        Series.x(order),
        "xC",
    )


def tilde_quadratic_readings(r: RingValue, s: RingValue, order: int) -> Dict[str, bool]:
    """Which constant term makes x(sx+y) z^2 - (1-rx) z + c vanish at z = tilde gf."""
    z = tilde_gf(r, s, order)
    a = Series.polynomial([0, Y, s], order)
    b = Series.polynomial([-1, r], order)
    readings = {
        "1": Series.one(order),
        "x^2+y": Series.polynomial([Y, 0, 1], order),
    }
    out = {}
    for name, c in readings.items():
        try:
            verify_quadratic_zero(z, a, b, c)
            out[name] = True
        except NonzeroResidual:
            out[name] = False
    return out


def tilde_quadratic_check(r: RingValue, s: RingValue, order: int) -> None:
    z = tilde_gf(r, s, order)
    verify_quadratic_zero(
        z,
        Series.polynomial([0, Y, s], order),
        Series.polynomial([-1, r], order),
        Series.one(order),
        f"tilde({exact.to_text(r)},{exact.to_text(s)})",
    )


# --- family registry --------------------------------------------------------------------------------


def _needs(spec: FamilySpec, *names: str) -> None:
    for name in names:
        value = getattr(spec, name)
        if value is None or (name == "t" and not value):
            raise FamilyError(f"familia {spec.name} exige --{name}")


def _integer_r(spec: FamilySpec, minimum: int = 0) -> int:
    _needs(spec, "r")
    r = spec.r
    if not isinstance(r, int) or r < minimum:
        raise FamilyError(f"familia {spec.name} exige r inteiro >= {minimum}, recebido {exact.to_text(r)}")
    return r


def _build_borel_inverse_array(spec: FamilySpec, n_rows: int) -> LowerTriangle:
    return materialize(group_inverse(borel_defining_pair(max(n_rows, 1))), n_rows)


def _build_borel_ftra_array(spec: FamilySpec, n_rows: int) -> LowerTriangle:
    return materialize(borel_ftra_pair(max(n_rows, 1)), n_rows)


FAMILIES: Dict[str, Callable[[FamilySpec, int], LowerTriangle]] = {
    "borel": lambda spec, n: borel_triangle(n),
    "r-borel": lambda spec, n: r_borel(spec.r, n),
    "rs-borel": lambda spec, n: rs_borel(spec.r, spec.s, n),
    "tilde": lambda spec, n: tilde_rs(spec.r, spec.s, n),
    "fuss-borel": lambda spec, n: fuss_borel(_integer_r(spec), n),
    "fuss-catalan": lambda spec, n: fuss_catalan(_integer_r(spec), n),
    "gen-fuss-borel": lambda spec, n: generalized_fuss_borel(_integer_r(spec, 1), spec.t, n),
    "catalan-triangle": lambda spec, n: catalan_triangle(n),
    "aerated-085880": lambda spec, n: aerated_085880_check(n),
    "pascal": lambda spec, n: pascal(n),
    "deriv-inverse": lambda spec, n: derivative_subgroup_inverse(spec.r, spec.s, n),
    "borel-coefficients": lambda spec, n: coefficient_array(moment_spec_borel(), n),
    "borel-moments": lambda spec, n: matrix_inverse(coefficient_array(moment_spec_borel(), n)),
    "borel-inverse-array": _build_borel_inverse_array,
    "borel-ftra-array": _build_borel_ftra_array,
}

REQUIRED_PARAMS: Dict[str, Tuple[str, ...]] = {
    "r-borel": ("r",),
    "rs-borel": ("r", "s"),
    "tilde": ("r", "s"),
    "fuss-borel": ("r",),
    "fuss-catalan": ("r",),
    "gen-fuss-borel": ("r", "t"),
    "deriv-inverse": ("r", "s"),
}


def build_triangle(spec: FamilySpec, n_rows: int) -> LowerTriangle:
    if spec.name not in FAMILIES:
        raise FamilyError(f"familia desconhecida: {spec.name} (opcoes: {', '.join(sorted(FAMILIES))})")
    if n_rows < 1:
        raise FamilyError(f"numero de linhas deve ser >= 1, recebido {n_rows}")
    _needs(spec, *REQUIRED_PARAMS.get(spec.name, ()))
    logger.info("gerando %s %s com %d linhas", spec.name, spec.params(), n_rows)
    return FAMILIES[spec.name](spec, n_rows)


def family_gf(spec: FamilySpec, order: int) -> Optional[Series]:
    """Bivariate gf in radical or rational form, when one is known."""
    numeric = all(v is None or exact.level_of(v) != Level.POLYNOMIAL for v in (spec.r, spec.s))
    if spec.name == "borel":
        return borel_gf_by_radical(order)
    if spec.name == "catalan-triangle":
        return catalan_triangle_gf(order)
    if spec.name == "aerated-085880":
        return aerated_gf(order)
    if spec.name == "pascal":
        return Series.polynomial([1, -1 - Y], order).inverse()
    if not numeric:
        return None
    if spec.name == "r-borel":
        return rs_gf(spec.r, 1, order)
    if spec.name == "rs-borel":
        return rs_gf(spec.r, spec.s, order)
    if spec.name == "tilde":
        return tilde_gf(spec.r, spec.s, order)
    return None
