"""Truncated formal power series in x over the exact coefficient tower.

A bivariate generating function in x and y is a Series whose coefficients
are polynomials in y, so reverting "along x" is plain reversion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence

from . import exact
from .errors import (
    NonExactDivision,
    NonUnitConstantTerm,
    NonUnitLinearTerm,
    NonzeroConstantInner,
    TruncationError,
)
from .exact import Level, RingValue

DEFAULT_ORDER = 24


class Series:
    """Coefficients c_0..c_N of a power series, N being the truncation order.

    All coefficients live on the same tower level. Binary operations truncate
    to the smaller order.
    """

    __slots__ = ("coeffs", "level")

    def __init__(self, coeffs: Iterable[RingValue]):
        values = tuple(coeffs)
        if not values:
            raise ValueError("serie precisa de pelo menos um coeficiente")
        level = exact.common_level(values)
        self.coeffs = tuple(exact.promote(c, level) for c in values)
        self.level = level

    # --- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: RingValue, order: int) -> "Series":
        return cls([value] + [0] * order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def x(cls, order: int) -> "Series":
        if order < 1:
            return cls.zero(order)
        return cls([0, 1] + [0] * (order - 1))

    @classmethod
    def from_function(cls, fn: Callable[[int], RingValue], order: int) -> "Series":
        return cls(fn(n) for n in range(order + 1))

    @classmethod
    def polynomial(cls, coeffs: Sequence[RingValue], order: int) -> "Series":
        """Series of a polynomial in x given by ascending coefficients."""
        padded = list(coeffs[: order + 1]) + [0] * max(0, order + 1 - len(coeffs))
        return cls(padded)

    # --- access -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> RingValue:
        return self.coefficient(n)

    def coefficient(self, n: int) -> RingValue:
        if n < 0:
            return exact.zero(self.level)
        if n > self.order:
            raise TruncationError(f"coeficiente x^{n} alem da ordem {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationError(f"nao ha como estender a ordem {self.order} para {order}")
        return Series(self.coeffs[: order + 1])

    def pad(self, order: int) -> "Series":
        """Extend with zero coefficients (only for known polynomials)."""
        if order <= self.order:
            return self.truncate(order)
        return Series(self.coeffs + (exact.zero(self.level),) * (order - self.order))

    def normalized(self) -> "Series":
        return Series(exact.normalize(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def first_difference(self, other: "Series") -> Optional[int]:
        n = min(self.order, other.order)
        for i in range(n + 1):
            if not exact.equal(self.coeffs[i], other.coeffs[i]):
                return i
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series) or other.order != self.order:
            return NotImplemented if not isinstance(other, Series) else False
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        shown = ", ".join(exact.to_text(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"Series([{shown}{more}], order={self.order})"

    # --- ring operations ------------------------------------------------

    def _lift(self, level: Level) -> "Series":
        if level == self.level:
            return self
        return Series(exact.promote(c, level) for c in self.coeffs)

    def _pair(self, other: "Series"):
        n = min(self.order, other.order)
        level = max(self.level, other.level)
        a = self._lift(level)
        b = other._lift(level)
        return a.coeffs[: n + 1], b.coeffs[: n + 1], n, level

    def __add__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.constant(other, self.order)
        a, b, _, _ = self._pair(other)
        return Series(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-c for c in self.coeffs)

    def __sub__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def scale(self, factor: RingValue) -> "Series":
        level = max(self.level, exact.level_of(factor))
        factor = exact.promote(factor, level)
        return Series(c * factor for c in self._lift(level).coeffs)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self.scale(other)
        a, b, n, level = self._pair(other)
        zero = exact.zero(level)
        out = []
        for i in range(n + 1):
            acc = zero
            for j in range(i + 1):
                u = a[j]
                if u:
                    v = b[i - j]
                    if v:
                        acc = acc + u * v
            out.append(acc)
        return Series(out)

    def __rmul__(self, other) -> "Series":
        return self.scale(other)

    def power(self, e: int) -> "Series":
        if e < 0:
            return self.inverse().power(-e)
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift_up(self) -> "Series":
        """Multiply by x (order grows by one)."""
        return Series((exact.zero(self.level),) + self.coeffs)

    def shift_down(self) -> "Series":
        """Divide by x; the constant term must vanish."""
        if self.coeffs[0]:
            raise NonExactDivision("serie com termo constante nao e divisivel por x")
        if self.order == 0:
            raise TruncationError("dividir por x uma serie de ordem 0")
        return Series(self.coeffs[1:])

    def inverse(self) -> "Series":
        c0 = self.coeffs[0]
        if not exact.is_unit(c0):
            raise NonUnitConstantTerm(f"termo constante {exact.to_text(c0)} nao e unidade")
        inv0 = exact.divide(exact.one(self.level), c0)
        out: List[RingValue] = [inv0]
        a = self.coeffs
        for n in range(1, self.order + 1):
            acc = exact.zero(self.level)
            for j in range(1, n + 1):
                if a[j]:
                    acc = exact.add(acc, exact.mul(a[j], out[n - j]))
            out.append(exact.neg(exact.mul(inv0, acc)))
        return Series(out)

    def exact_div(self, other: "Series") -> "Series":
        """Quotient q with other*q == self, dividing exactly by other(0).

        other(0) need not be a unit: each step is an exact polynomial
        division, so a non-divisible numerator raises NonExactDivision.
        """
        a, b, n, level = self._pair(other)
        if not b[0]:
            if a[0]:
                raise NonExactDivision("divisor anula em x=0 e numerador nao")
            return Series(a).shift_down().exact_div(Series(b).shift_down())
        out: List[RingValue] = []
        for i in range(n + 1):
            acc = a[i]
            for j in range(1, i + 1):
                if b[j]:
                    acc = acc - b[j] * out[i - j]
            try:
                out.append(exact.divide(acc, b[0]))
            except NonExactDivision as exc:
                raise NonExactDivision(f"divisao de series falhou em x^{i}: {exc}")
        return Series(out)

    # --- composition and reversion ------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """self(inner(x)) by Horner; inner(0) must vanish."""
        if inner.coeffs[0]:
            raise NonzeroConstantInner("serie interna com termo constante nao nulo")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = Series.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def revert(self) -> "Series":
        """Compositional inverse by triangular solving against the powers of f.

        sum_k g_k [x^n] f^k = [n == 1]; the diagonal is f_1^n, so the only
        divisions are by powers of the linear coefficient.
        """
        if self.coeffs[0]:
            raise NonzeroConstantInner("reversao exige f(0) = 0")
        n_max = self.order
        if n_max < 1:
            raise TruncationError("reversao exige ordem >= 1")
        f1 = self.coeffs[1]
        if not exact.is_unit(f1):
            raise NonUnitLinearTerm(f"coeficiente linear {exact.to_text(f1)} nao e unidade")
        powers = [None, self]
        for _ in range(2, n_max + 1):
            powers.append(powers[-1] * self)
        g: List[RingValue] = [exact.zero(self.level)] * (n_max + 1)
        for n in range(1, n_max + 1):
            acc: RingValue = 1 if n == 1 else 0
            for k in range(1, n):
                if g[k]:
                    acc = exact.sub(acc, exact.mul(g[k], powers[k].coeffs[n]))
            g[n] = exact.divide(acc, exact.power(f1, n))
        return Series(g)

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series.zero(0)._lift(self.level)
        return Series(exact.mul(k, self.coeffs[k]) for k in range(1, self.order + 1))

    def sqrt(self) -> "Series":
        """Square root with constant term +1, by Newton iteration s <- (s + a/s)/2."""
        if not exact.equal(self.coeffs[0], 1):
            raise NonUnitConstantTerm("raiz quadrada exige termo constante 1")
        half = Fraction(1, 2)
        s = Series.one(0)
        precision = 1
        while precision <= self.order:
            precision = min(2 * precision, self.order + 1)
            target = self.truncate(precision - 1)
            s = s.pad(precision - 1)
            s = (s + target * s.inverse()).scale(half)
        return s.truncate(self.order).normalized()

    # --- y handling -----------------------------------------------------

    def evaluate_y(self, at: RingValue) -> "Series":
        return Series(exact.evaluate(c, at) for c in self.coeffs)

    def substitute_y_by_x(self) -> "Series":
        """sum a_{n,k} x^n y^k  ->  sum a_{n,k} x^(n+k), same order."""
        out: List[RingValue] = [0] * (self.order + 1)
        for n, c in enumerate(self.coeffs):
            for k, a in enumerate(exact.poly_coefficients(c)):
                if a and n + k <= self.order:
                    out[n + k] = exact.add(out[n + k], a)
        return Series(out)


def lagrange_coefficient(G: Series, f: Series, n: int) -> RingValue:
    """[x^n] G(fbar) = (1/n) [x^(n-1)] G'(x) (x/f)^n, without building fbar."""
    if n < 1:
        raise ValueError("lagrange_coefficient exige n >= 1")
    if f.coeffs[0]:
        raise NonzeroConstantInner("Lagrange exige f(0) = 0")
    if f.order < n or G.order < n:
        raise TruncationError(f"ordem insuficiente para [x^{n}]")
    if not exact.is_unit(f.coeffs[1]):
        raise NonUnitLinearTerm("coeficiente linear de f nao e unidade")
    x_over_f = f.truncate(n).shift_down().inverse()
    body = G.truncate(n).derivative() * x_over_f.power(n)
    return exact.normalize(exact.divide(body.coefficient(n - 1), n))


def geometric(ratio: RingValue, order: int) -> Series:
    """1/(1 - ratio*x)."""
    return Series.from_function(lambda n: exact.power(ratio, n), order)
