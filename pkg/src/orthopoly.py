"""Orthogonal polynomials given by a three-term recurrence, their Riordan
coefficient arrays, and the moment checks (inverse column 0 and tridiagonal
production matrix).
"""

from __future__ import annotations

import logging
from typing import List

from . import exact
from .errors import InsufficientOrder, Mismatch
from .exact import RingValue, Y
from .jacobi import required_depth, series_from_jacobi
from .models import JacobiCF, MomentArraySpec, OrthoRecurrence
from .powerseries import Series
from .riordan import (
    LowerTriangle,
    ProductionMatrix,
    RiordanPair,
    assert_same,
    materialize,
    matrix_inverse,
    production_matrix,
)

logger = logging.getLogger(__name__)

Polynomial = List[RingValue]  # ascending coefficients in x


def moment_spec_borel() -> MomentArraySpec:
    return MomentArraySpec(lam_num=Y, mu_num=0, alpha=2 * (Y + 1), beta=(Y + 1) ** 2, label="borel")


def moment_spec_rs(r: RingValue, s: RingValue) -> MomentArraySpec:
    sy = exact.mul(s, Y)
    beta = exact.mul(s, exact.add(exact.add(1, exact.mul(r, Y)), exact.mul(sy, Y)))
    return MomentArraySpec(
        lam_num=sy,
        mu_num=0,
        alpha=exact.add(r, exact.mul(2, sy)),
        beta=beta,
        label=f"rs({exact.to_text(r)},{exact.to_text(s)})",
    )


def moment_spec_tilde(r: RingValue, s: RingValue) -> MomentArraySpec:
    return MomentArraySpec(
        lam_num=Y,
        mu_num=0,
        alpha=exact.add(r, 2 * Y),
        beta=exact.add(exact.add(s, exact.mul(r, Y)), Y**2),
        label=f"tilde({exact.to_text(r)},{exact.to_text(s)})",
    )


def moment_pair(spec: MomentArraySpec, order: int) -> RiordanPair:
    denom = Series.polynomial([1, spec.alpha, spec.beta], order).inverse()
    g = Series.polynomial([1, spec.lam_num, spec.mu_num], order) * denom
    return RiordanPair(g, denom.shift_up().truncate(order))


def recurrence_from_spec(spec: MomentArraySpec) -> OrthoRecurrence:
    return OrthoRecurrence(
        b0p=exact.normalize(exact.sub(spec.alpha, spec.lam_num)),
        b=spec.alpha,
        lam=spec.beta,
        lam1=exact.normalize(exact.sub(spec.beta, spec.mu_num)),
    )


def recurrence_from_production(p: ProductionMatrix) -> OrthoRecurrence:
    if p.n_rows < 3:
        raise InsufficientOrder("recorrencia exige matriz de producao com ao menos 3 linhas")
    return OrthoRecurrence(b0p=p.entry(0, 0), b=p.entry(1, 1), lam=p.entry(2, 1), lam1=p.entry(1, 0))


def recurrence_polynomials(rec: OrthoRecurrence, count: int) -> List[Polynomial]:
    if count < 1:
        raise ValueError("count deve ser >= 1")
    polys: List[Polynomial] = [[1]]
    if count == 1:
        return polys
    polys.append([exact.neg(rec.b0p), 1])
    for n in range(1, count - 1):
        prev, cur = polys[n - 1], polys[n]
        nxt: Polynomial = [0] * (n + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] = exact.add(nxt[i + 1], c)
            nxt[i] = exact.sub(nxt[i], exact.mul(rec.b, c))
        lam = rec.lam_at(n)
        for i, c in enumerate(prev):
            nxt[i] = exact.sub(nxt[i], exact.mul(lam, c))
        polys.append([exact.normalize(c) for c in nxt])
    return polys


def coefficient_array(spec: MomentArraySpec, n_rows: int) -> LowerTriangle:
    """Materialized moment pair, rows checked against the recurrence."""
    array = materialize(moment_pair(spec, max(n_rows, 1)), n_rows)
    if n_rows:
        polys = LowerTriangle(recurrence_polynomials(recurrence_from_spec(spec), n_rows))
        assert_same(array, polys, f"matriz de coeficientes {spec.label} vs recorrencia")
    return array


def moment_gf(spec: MomentArraySpec, order: int) -> Series:
    """1/g(fbar) for the moment pair."""
    pair = moment_pair(spec, order)
    return pair.g.compose(pair.f.revert()).inverse()


def moments_check(spec: MomentArraySpec, target: Series, n_rows: int) -> List[RingValue]:
    """Column 0 of the inverse array against target; returns the moments."""
    inverse = matrix_inverse(coefficient_array(spec, n_rows))
    moments = [inverse.entry(n, 0) for n in range(n_rows)]
    via_gf = moment_gf(spec, max(n_rows - 1, 1))
    for n, m in enumerate(moments):
        want = target.coefficient(n)
        if not exact.equal(m, want):
            raise Mismatch(f"momentos {spec.label} (coluna 0 da inversa)", (n, 0), exact.to_text(m), exact.to_text(want))
        if n <= via_gf.order and not exact.equal(via_gf.coeffs[n], want):
            raise Mismatch(f"momentos {spec.label} (1/g(fbar))", (n, 0), exact.to_text(via_gf.coeffs[n]), exact.to_text(want))
    logger.debug("momentos %s conferem em %d linhas", spec.label, n_rows)
    return moments


def production_check(spec: MomentArraySpec, n_rows: int) -> ProductionMatrix:
    """Production matrix of the inverse array must be the recurrence's tridiagonal."""
    p = production_matrix(matrix_inverse(coefficient_array(spec, n_rows)))
    rec = recurrence_from_spec(spec)
    for i in range(p.n_rows):
        for j in range(p.n_rows):
            if j == i + 1:
                want = 1
            elif j == i:
                want = rec.b0p if i == 0 else rec.b
            elif j == i - 1:
                want = rec.lam_at(i)
            else:
                want = 0
            if not exact.equal(p.entry(i, j), want):
                raise Mismatch(f"matriz de producao {spec.label}", (i, j), exact.to_text(p.entry(i, j)), exact.to_text(want))
    return p


def recurrence_cf(rec: OrthoRecurrence, depth: int) -> JacobiCF:
    return JacobiCF.periodic(rec.b0p, rec.b, rec.lam, depth, lam1=rec.lam_at(1))


def cf_moments_check(spec: MomentArraySpec, order: int) -> None:
    """The J-fraction built from the recurrence reproduces the moment gf."""

    rec = recurrence_from_spec(spec)
    by_cf = series_from_jacobi(recurrence_cf(rec, required_depth(order)), order)
    by_gf = moment_gf(spec, order)
    n = by_cf.first_difference(by_gf)
    if n is not None:
        raise Mismatch(f"fracao continua {spec.label}", (n,), exact.to_text(by_cf.coeffs[n]), exact.to_text(by_gf.coeffs[n]))
