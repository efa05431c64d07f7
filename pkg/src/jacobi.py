"""Jacobi continued fractions.

series_from_jacobi evaluates a (truncated) J-fraction bottom-up;
jacobi_from_series peels one level at a time off a rational series.
verify_quadratic_zero checks a denominator-cleared quadratic a z^2 + b z + c.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List

from . import exact
from .errors import InsufficientDepth, InsufficientOrder, NonUnitConstantTerm, NonzeroResidual, ZeroLambda
from .exact import RingValue, Y
from .models import JacobiCF
from .powerseries import Series

logger = logging.getLogger(__name__)


def required_depth(order: int) -> int:
    return math.ceil(order / 2) + 1


def series_from_jacobi(cf: JacobiCF, order: int) -> Series:
    if not cf.terminating and cf.depth < required_depth(order):
        raise InsufficientDepth(
            f"profundidade {cf.depth} insuficiente para ordem {order} (minimo {required_depth(order)})"
        )
    x = Series.x(order)
    tail = Series.one(order)  # bottom level, with lambda_{depth} = 0
    for i in range(cf.depth - 1, -1, -1):
        denom = Series.one(order) - x.scale(cf.b[i])
        if i < cf.depth - 1:
            denom = denom - (x * x * tail).scale(cf.lam[i])
        tail = denom.inverse()
    return tail


def jacobi_from_series(g: Series, depth: int) -> JacobiCF:
    """Extract b_0..b_{depth-1}, lambda_1..lambda_{depth-1} from g over Q.

    Needs g to order 2*depth - 1. A vanishing lambda with a vanishing
    remainder ends the fraction early (terminating=True).
    """
    g = g.normalized()
    if g.level == exact.Level.POLYNOMIAL:
        raise ValueError("extracao de fracao continua so sobre racionais; especialize y")
    if not exact.equal(g.coeffs[0], 1):
        raise NonUnitConstantTerm(f"g(0) deve ser 1, recebido {exact.to_text(g.coeffs[0])}")
    bs: List[RingValue] = []
    lams: List[RingValue] = []
    current = g
    for i in range(depth):
        if current.order < 1:
            raise InsufficientOrder(f"serie curta demais para b_{i} (profundidade pedida {depth})")
        h = Series.one(current.order) - current.inverse()
        b = exact.normalize(h.coeffs[1])
        bs.append(b)
        rest = h - Series.x(current.order).scale(b)
        if i == depth - 1:
            break
        if current.order < 2:
            raise InsufficientOrder(f"serie curta demais para lambda_{i + 1}")
        if rest.is_zero():
            logger.debug("fracao termina em profundidade %d", i + 1)
            return JacobiCF(b=tuple(bs), lam=tuple(lams), terminating=True)
        lam = exact.normalize(rest.coeffs[2])
        if not lam:
            index = next(n for n, c in enumerate(rest.coeffs) if c)
            raise ZeroLambda(f"lambda_{i + 1} = 0 mas o resto nao anula em x^{index}")
        lams.append(lam)
        current = rest.shift_down().shift_down().scale(Fraction(1) / lam).normalized()
    return JacobiCF(b=tuple(bs), lam=tuple(lams))


def verify_quadratic_zero(z: Series, a: Series, b: Series, c: Series, label: str = "") -> None:
    """a z^2 + b z + c == 0 to the common order, else NonzeroResidual."""
    residual = a * z * z + b * z + c
    for n, value in enumerate(residual.coeffs):
        if value:
            raise NonzeroResidual(n, exact.to_text(value), label)


# --- the fractions of the Borel family ---------------------------------------


def borel_cf(depth: int) -> JacobiCF:
    return JacobiCF.periodic(Y + 2, 2 * Y + 2, (Y + 1) ** 2, depth)


def catalan_triangle_cf(depth: int) -> JacobiCF:
    return JacobiCF.periodic(Y + 1, 2 * Y, Y**2, depth)


def rs_cf(r: RingValue, s: RingValue, depth: int) -> JacobiCF:
    sy = exact.mul(s, Y)
    lam = exact.mul(s, exact.add(exact.add(1, exact.mul(r, Y)), exact.mul(sy, Y)))
    return JacobiCF.periodic(exact.add(r, sy), exact.add(r, exact.mul(2, sy)), lam, depth)


def tilde_cf(r: RingValue, s: RingValue, depth: int) -> JacobiCF:
    lam = exact.add(exact.add(s, exact.mul(r, Y)), Y**2)
    return JacobiCF.periodic(exact.add(r, Y), exact.add(r, 2 * Y), lam, depth)
