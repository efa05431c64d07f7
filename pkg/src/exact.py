"""Exact scalar arithmetic.

The coefficient ring is a three-level tower: ``int`` (Integer), ``Fraction``
(Rational) and sympy's sparse polynomials in ``y`` over QQ (YPolynomial).
Binary operations promote to the wider level; going back down only happens
through :func:`normalize`.
"""

from __future__ import annotations

import math
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

import sympy
from sympy import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .errors import NonExactDivision

YRing, Y = ring("y", QQ)

RingValue = Union[int, Fraction, PolyElement]


class Level(IntEnum):
    INTEGER = 0
    RATIONAL = 1
    POLYNOMIAL = 2


def _qq(value) -> object:
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(int(value))


def _from_qq(c) -> Union[int, Fraction]:
    num, den = int(c.numerator), int(c.denominator)
    return num if den == 1 else Fraction(num, den)


def level_of(value: RingValue) -> Level:
    if isinstance(value, PolyElement):
        return Level.POLYNOMIAL
    if isinstance(value, Fraction):
        return Level.RATIONAL
    if isinstance(value, int):
        return Level.INTEGER
    raise TypeError(f"valor fora do anel de coeficientes: {value!r} ({type(value).__name__})")


def common_level(values: Iterable[RingValue]) -> Level:
    return max((level_of(v) for v in values), default=Level.INTEGER)


def promote(value: RingValue, level: Level) -> RingValue:
    current = level_of(value)
    if current == level:
        return value
    if current > level:
        raise ValueError(f"promote nao rebaixa {current.name} para {level.name}; use normalize")
    if level == Level.RATIONAL:
        return Fraction(value)
    return YRing.ground_new(_qq(value))


def zero(level: Level) -> RingValue:
    return promote(0, level)


def one(level: Level) -> RingValue:
    return promote(1, level)


def unify(a: RingValue, b: RingValue):
    la, lb = level_of(a), level_of(b)
    if la == lb:
        return a, b
    top = max(la, lb)
    return promote(a, top), promote(b, top)


def add(a: RingValue, b: RingValue) -> RingValue:
    a, b = unify(a, b)
    return a + b


def sub(a: RingValue, b: RingValue) -> RingValue:
    a, b = unify(a, b)
    return a - b


def mul(a: RingValue, b: RingValue) -> RingValue:
    a, b = unify(a, b)
    return a * b


def neg(a: RingValue) -> RingValue:
    return -a


def power(a: RingValue, e: int) -> RingValue:
    """a**e with 0**0 == 1; negative exponents only for nonzero numbers."""
    if e == 0:
        return one(level_of(a))
    if e > 0:
        return a ** e
    if isinstance(a, PolyElement):
        return divide(one(Level.POLYNOMIAL), a ** (-e))
    if a == 0:
        raise ZeroDivisionError("0 elevado a expoente negativo")
    return Fraction(a) ** e


def is_zero(a: RingValue) -> bool:
    return not a


def is_unit(a: RingValue) -> bool:
    """Invertible in Q (numbers) or in Q[y] (nonzero constants)."""
    if isinstance(a, PolyElement):
        return bool(a) and a.is_ground
    return a != 0


def equal(a: RingValue, b: RingValue) -> bool:
    a, b = unify(a, b)
    return a == b


def poly_exact_div(a: PolyElement, b: PolyElement) -> PolyElement:
    if not b:
        raise ZeroDivisionError("divisao por polinomio nulo")
    try:
        return a.exquo(b)
    except ExactQuotientFailed:
        raise NonExactDivision(f"{to_text(a)} nao e divisivel por {to_text(b)}")


def divide(a: RingValue, b: RingValue) -> RingValue:
    """Exact quotient a/b; ints stay ints when the division is exact."""
    a, b = unify(a, b)
    if isinstance(a, PolyElement):
        return poly_exact_div(a, b)
    if b == 0:
        raise ZeroDivisionError("divisao por zero")
    if isinstance(a, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return a / b


def normalize(value: RingValue) -> RingValue:
    """Demote to the narrowest level that holds the value exactly."""
    if isinstance(value, PolyElement):
        if not value.is_ground:
            return value
        coeffs = poly_coefficients(value)
        return coeffs[0] if coeffs else 0
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def is_integral(value: RingValue) -> bool:
    return isinstance(normalize(value), int)


# --- Polynomial helpers ---------------------------------------------------


def poly_coefficients(p: RingValue) -> List[Union[int, Fraction]]:
    """Ascending coefficients c0..cd; [] for zero."""
    if not isinstance(p, PolyElement):
        return [normalize(p)] if p else []
    terms = {m[0]: c for m, c in p.terms()}
    if not terms:
        return []
    return [_from_qq(terms[k]) if k in terms else 0 for k in range(max(terms) + 1)]


def poly_from_coefficients(coeffs: Sequence[RingValue]) -> PolyElement:
    return YRing.from_dict({(k,): _qq(c) for k, c in enumerate(coeffs) if c})


def poly_coeff(p: RingValue, k: int) -> Union[int, Fraction]:
    coeffs = poly_coefficients(p)
    return coeffs[k] if 0 <= k < len(coeffs) else 0


def degree(p: RingValue) -> int:
    return len(poly_coefficients(p)) - 1


def evaluate(value: RingValue, at: RingValue) -> RingValue:
    """Substitute y := at (Horner)."""
    if not isinstance(value, PolyElement):
        return value
    acc: RingValue = 0
    for c in reversed(poly_coefficients(value)):
        acc = add(mul(acc, at), c)
    return normalize(acc)


# --- Combinatorial numbers ------------------------------------------------


def binomial(n: int, k: int) -> int:
    """Falling-factorial binomial: 0 for k < 0, valid for negative n."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan exige n >= 0, recebido {n}")
    return math.comb(2 * n, n) // (n + 1)


# --- Text form ------------------------------------------------------------


def _number_text(c: Union[int, Fraction]) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def to_text(value: RingValue) -> str:
    """Exact text; polynomials as ``2*y^2+6*y+5``."""
    if not isinstance(value, PolyElement):
        return _number_text(value)
    coeffs = poly_coefficients(value)
    if not coeffs:
        return "0"
    out = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _number_text(mag)
        else:
            mono = "y" if k == 1 else f"y^{k}"
            body = mono if mag == 1 else f"{_number_text(mag)}*{mono}"
        out.append(sign + body)
    text = "".join(out)
    return text[1:] if text.startswith("+") else text


def parse_value(text: str) -> RingValue:
    """Inverse of :func:`to_text`."""
    text = text.strip()
    if "y" not in text:
        try:
            return int(text)
        except ValueError:
            return normalize(Fraction(text))
    expr = sympy.sympify(text.replace("^", "**"))
    return YRing.from_expr(expr)
