"""Riordan arrays: (g, f) pairs, their materialized triangles and the
matrix-level operations used across the families (production matrices,
Hadamard products, reversal, reversion, binomial transforms).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import exact
from .errors import (
    InsufficientOrder,
    KindMismatch,
    Mismatch,
    NonUnitConstantTerm,
    NonUnitDiagonal,
    NonUnitLinearTerm,
    NonzeroConstantInner,
    ShapeMismatch,
)
from .exact import RingValue
from .powerseries import Series

logger = logging.getLogger(__name__)

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"


# --- triangles -------------------------------------------------------------


class LowerTriangle:
    """Rows 0..n_rows-1 of a lower-triangular array; row n holds a[n][0..n]."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence[RingValue]]):
        built = []
        for n, row in enumerate(rows):
            row = list(row)
            if len(row) > n + 1:
                if any(row[n + 1 :]):
                    raise ShapeMismatch(f"linha {n} tem entradas acima da diagonal")
                row = row[: n + 1]
            row = row + [0] * (n + 1 - len(row))
            built.append(tuple(exact.normalize(v) for v in row))
        self.rows: Tuple[Tuple[RingValue, ...], ...] = tuple(built)

    @classmethod
    def from_function(cls, fn: Callable[[int, int], RingValue], n_rows: int) -> "LowerTriangle":
        return cls([fn(n, k) for k in range(n + 1)] for n in range(n_rows))

    @classmethod
    def identity(cls, n_rows: int) -> "LowerTriangle":
        return cls.from_function(lambda n, k: 1 if n == k else 0, n_rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> RingValue:
        if k < 0 or k > n or n >= self.n_rows:
            return 0
        return self.rows[n][k]

    def column(self, k: int) -> List[RingValue]:
        return [self.rows[n][k] for n in range(k, self.n_rows)]

    def truncate(self, n_rows: int) -> "LowerTriangle":
        if n_rows > self.n_rows:
            raise InsufficientOrder(f"triangulo tem {self.n_rows} linhas, pedido {n_rows}")
        return LowerTriangle(self.rows[:n_rows])

    def map(self, fn: Callable[[RingValue], RingValue]) -> "LowerTriangle":
        return LowerTriangle([fn(v) for v in row] for row in self.rows)

    def evaluate_y(self, at: RingValue) -> "LowerTriangle":
        return self.map(lambda v: exact.evaluate(v, at))

    def level(self) -> exact.Level:
        return exact.common_level(v for row in self.rows for v in row)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for row in self.rows for v in row)

    def to_array(self, level: Optional[exact.Level] = None) -> np.ndarray:
        """Dense square object array, every cell promoted to one level."""
        level = self.level() if level is None else level
        n = self.n_rows
        arr = np.empty((n, n), dtype=object)
        zero = exact.zero(level)
        for i in range(n):
            for j in range(n):
                arr[i, j] = exact.promote(self.rows[i][j], level) if j <= i else zero
        return arr

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "LowerTriangle":
        return cls([arr[n, k] for k in range(n + 1)] for n in range(arr.shape[0]))

    def __matmul__(self, other: "LowerTriangle") -> "LowerTriangle":
        if not isinstance(other, LowerTriangle):
            return NotImplemented
        if other.n_rows != self.n_rows:
            raise ShapeMismatch(f"produto {self.n_rows}x{self.n_rows} por {other.n_rows}x{other.n_rows}")
        if self.n_rows == 0:
            return LowerTriangle([])
        level = max(self.level(), other.level())
        return LowerTriangle.from_array(np.dot(self.to_array(level), other.to_array(level)))

    def first_difference(self, other: "LowerTriangle") -> Optional[Tuple[int, int]]:
        n = min(self.n_rows, other.n_rows)
        for i in range(n):
            for j in range(i + 1):
                if not exact.equal(self.rows[i][j], other.rows[i][j]):
                    return (i, j)
        if self.n_rows != other.n_rows:
            return (n, 0)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LowerTriangle):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        return f"LowerTriangle(n_rows={self.n_rows})"

    def as_text_rows(self) -> List[List[str]]:
        return [[exact.to_text(v) for v in row] for row in self.rows]


def assert_same(left: LowerTriangle, right: LowerTriangle, what: str) -> None:
    """Raise Mismatch at the first differing cell."""
    cell = left.first_difference(right)
    if cell is None:
        return
    n, k = cell
    raise Mismatch(what, cell, exact.to_text(left.entry(n, k)), exact.to_text(right.entry(n, k)))


@dataclass(frozen=True)
class ProductionMatrix:
    """Square truncation of M^-1 * M-bar; Hessenberg for Riordan arrays."""

    entries: Tuple[Tuple[RingValue, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    def entry(self, n: int, k: int) -> RingValue:
        return self.entries[n][k]

    def diagonal(self, offset: int = 0) -> List[RingValue]:
        """offset 0 = main, -1 = subdiagonal, +1 = superdiagonal."""
        n = self.n_rows
        if offset >= 0:
            return [self.entries[i][i + offset] for i in range(n - offset)]
        return [self.entries[i][i + offset] for i in range(-offset, n)]

    def is_hessenberg(self) -> bool:
        return all(not self.entries[i][j] for i in range(self.n_rows) for j in range(i + 2, self.n_rows))

    def is_tridiagonal(self) -> bool:
        if not self.is_hessenberg():
            return False
        return all(not self.entries[i][j] for i in range(self.n_rows) for j in range(0, i - 1))

    def as_text_rows(self) -> List[List[str]]:
        return [[exact.to_text(v) for v in row] for row in self.entries]


# --- matrix-level operations -----------------------------------------------


def matrix_inverse(m: LowerTriangle) -> LowerTriangle:
    """Forward substitution; the diagonal must consist of units."""
    n_rows = m.n_rows
    inv: List[List[RingValue]] = []
    for n in range(n_rows):
        d = m.rows[n][n]
        if not exact.is_unit(d):
            raise NonUnitDiagonal(f"diagonal nao unitaria na linha {n}: {exact.to_text(d)}")
        row: List[RingValue] = [0] * (n + 1)
        row[n] = exact.divide(1, d)
        for k in range(n):
            acc: RingValue = 0
            for j in range(k, n):
                a = m.rows[n][j]
                if a:
                    b = inv[j][k]
                    if b:
                        acc = exact.add(acc, exact.mul(a, b))
            row[k] = exact.normalize(exact.neg(exact.divide(acc, d)))
        inv.append(row)
    return LowerTriangle(inv)


def production_matrix(m: LowerTriangle) -> ProductionMatrix:
    n = m.n_rows
    if n < 2:
        raise InsufficientOrder("matriz de producao exige ao menos 2 linhas")
    inverse = matrix_inverse(m).truncate(n - 1)
    level = max(m.level(), inverse.level())
    bar = m.to_array(level)[1:, : n - 1]
    prod = np.dot(inverse.to_array(level), bar)
    entries = tuple(tuple(exact.normalize(prod[i, j]) for j in range(n - 1)) for i in range(n - 1))
    logger.debug("matriz de producao %dx%d", n - 1, n - 1)
    return ProductionMatrix(entries)


def hadamard(a: LowerTriangle, b: LowerTriangle) -> LowerTriangle:
    if a.n_rows != b.n_rows:
        raise ShapeMismatch(f"Hadamard entre {a.n_rows} e {b.n_rows} linhas")
    return LowerTriangle(
        [exact.mul(u, v) for u, v in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)
    )


def triangle_reversal(m: LowerTriangle) -> LowerTriangle:
    return LowerTriangle(tuple(reversed(row)) for row in m.rows)


def bivariate_to_triangle(T: Series, n_rows: int) -> LowerTriangle:
    """Row n = y-coefficients of [x^n] T(x, y)."""
    if n_rows - 1 > T.order:
        raise InsufficientOrder(f"serie de ordem {T.order} nao cobre {n_rows} linhas")
    rows = []
    for n in range(n_rows):
        coeffs = exact.poly_coefficients(T.coeffs[n])
        if len(coeffs) > n + 1:
            raise ShapeMismatch(f"[x^{n}] tem grau {len(coeffs) - 1} em y")
        rows.append(coeffs)
    return LowerTriangle(rows)


def triangle_to_bivariate(m: LowerTriangle) -> Series:
    return Series(exact.poly_from_coefficients(row) for row in m.rows)


def triangle_reversion(T: Series) -> Series:
    """(1/x) Rev_x (x T(x, y))."""
    if not exact.equal(T.coeffs[0], 1):
        raise NonUnitLinearTerm("reversao de triangulo exige T(0) = 1")
    return T.shift_up().revert().shift_down()


def pascal(n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(exact.binomial, n_rows)


def pascal_inverse(n_rows: int) -> LowerTriangle:
    return LowerTriangle.from_function(lambda n, k: (-1) ** (n - k) * exact.binomial(n, k), n_rows)


def left_multiply_binomial(m: LowerTriangle, inverse: bool = False) -> LowerTriangle:
    left = pascal_inverse(m.n_rows) if inverse else pascal(m.n_rows)
    return left @ m


def binomial_transform(a: Sequence[RingValue], r: RingValue) -> List[RingValue]:
    out = []
    for n in range(len(a)):
        acc: RingValue = 0
        for k in range(n + 1):
            if a[k]:
                term = exact.mul(exact.power(r, n - k), a[k])
                acc = exact.add(acc, exact.mul(exact.binomial(n, k), term))
        out.append(exact.normalize(acc))
    return out


# --- pairs -------------------------------------------------------------------


@dataclass(frozen=True)
class RiordanPair:
    g: Series
    f: Series
    kind: str = ORDINARY

    def __post_init__(self):
        if self.kind not in (ORDINARY, EXPONENTIAL):
            raise ValueError(f"tipo de par desconhecido: {self.kind}")
        # g(0) and f'(0) only need to be nonzero here; invertibility is
        # demanded by group_inverse (x(x+y)/(1-2x)^2 has f'(0) = y)
        if not self.g.coeffs[0]:
            raise NonUnitConstantTerm("g(0) deve ser nao nulo")
        if self.f.coeffs[0]:
            raise NonzeroConstantInner("f(0) deve ser 0")
        if self.f.order < 1 or not self.f.coeffs[1]:
            raise NonUnitLinearTerm("f'(0) deve ser nao nulo")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)


def identity_pair(order: int, kind: str = ORDINARY) -> RiordanPair:
    return RiordanPair(Series.one(order), Series.x(order), kind)


def binomial_pair(order: int) -> RiordanPair:
    """(1/(1-x), x/(1-x)): Pascal's triangle."""
    g = Series.polynomial([1, -1], order).inverse()
    return RiordanPair(g, g.shift_up().truncate(order))


def derivative_pair(f: Series) -> RiordanPair:
    """(f', f), truncated to the order of f'."""
    df = f.derivative()
    return RiordanPair(df, f.truncate(df.order))


def materialize(p: RiordanPair, n_rows: int) -> LowerTriangle:
    """a[n][k] = [x^n] g f^k (times n!/k! for exponential pairs)."""
    if n_rows - 1 > p.order:
        raise InsufficientOrder(f"par de ordem {p.order} nao cobre {n_rows} linhas")
    if n_rows == 0:
        return LowerTriangle([])
    top = n_rows - 1
    f = p.f.truncate(top)
    column = p.g.truncate(top)
    cols: List[Tuple[RingValue, ...]] = []
    for _ in range(n_rows):
        cols.append(column.coeffs)
        column = column * f
    rows = []
    for n in range(n_rows):
        row = []
        for k in range(n + 1):
            value = cols[k][n]
            if p.kind == EXPONENTIAL and value:
                value = exact.mul(value, math.factorial(n) // math.factorial(k))
            row.append(value)
        rows.append(row)
    return LowerTriangle(rows)


def group_mul(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    """(g, f) * (u, v) = (g u(f), v(f))."""
    if a.kind != b.kind:
        raise KindMismatch(f"produto entre pares {a.kind} e {b.kind}")
    return RiordanPair(a.g * b.g.compose(a.f), b.f.compose(a.f), a.kind)


def group_inverse(a: RiordanPair) -> RiordanPair:
    """(1/g(fbar), fbar); needs g(0) and f'(0) to be units."""
    fbar = a.f.revert()
    return RiordanPair(a.g.compose(fbar).inverse(), fbar, a.kind)


def ftra_apply(p: RiordanPair, h: Series) -> Series:
    """g(x) h(f(x)): the array acting on the coefficient vector of h."""
    if p.kind != ORDINARY:
        raise KindMismatch("FTRA so se aplica a pares ordinarios")
    return p.g * h.compose(p.f)


# --- derivative subgroup -------------------------------------------------------


def derivative_subgroup_term(r: RingValue, s: RingValue, n: int, k: int) -> RingValue:
    """sum_j C(n+1, j) C(j, n-k-j) s^(n-k-j) r^(2j+k-n)."""
    if k < 0 or k > n:
        return 0
    acc: RingValue = 0
    for j in range(n + 2):
        c = exact.binomial(n + 1, j) * exact.binomial(j, n - k - j)
        if c == 0:
            continue
        term = exact.mul(exact.power(s, n - k - j), exact.power(r, 2 * j + k - n))
        acc = exact.add(acc, exact.mul(c, term))
    return exact.normalize(acc)


def chebyshev_like_f(r: RingValue, s: RingValue, order: int) -> Series:
    """x/(1 + r x + s x^2)."""
    return Series.polynomial([1, r, s], order).inverse().shift_up().truncate(order)


def derivative_subgroup_inverse(r: RingValue, s: RingValue, n_rows: int) -> LowerTriangle:
    """((x/(1+rx+sx^2))', x/(1+rx+sx^2))^-1 by the closed sum, checked
    against the group inverse of the pair."""
    closed = LowerTriangle.from_function(lambda n, k: derivative_subgroup_term(r, s, n, k), n_rows)
    if n_rows == 0:
        return closed
    f = chebyshev_like_f(r, s, n_rows)
    routed = materialize(group_inverse(derivative_pair(f)), n_rows)
    assert_same(closed, routed, f"subgrupo derivada r={exact.to_text(r)} s={exact.to_text(s)}")
    logger.debug("subgrupo derivada (%s, %s): %d linhas conferem", exact.to_text(r), exact.to_text(s), n_rows)
    return closed
