"""The genus-2 family: chart specializations, point counts, nonsingular points.

Two affine charts describe the family.  Chart 1 is y^2 = f_t(x) with

    f_t(x) = -(x^6 + x^5 + t^5 x + (8 t^6 + 7)),

valid for finite parameter values; chart 2 is Y^2 = g_T(X) with

    g_T(X) = -(X^6 + T X^5 + X + (8 + 7 T^6)),

related by X = x/t, Y = y/t^3, T = 1/t, and covering the parameter at
infinity as T = 0.  Parameters with negative valuation are represented only
by their residue datum T = 0; the decision procedures downstream consume
nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .finitefield import (
    FqCtx,
    FqElem,
    field_ring,
    fq_enumerate,
    quadratic_character,
    sqrt_in_fq,
)
from .polyring import DomainError, Poly, QQ, UnsupportedCharacteristicError, ZZ, ZZ_T, is_squarefree


class Chart(Enum):
    MODEL1 = 1
    MODEL2 = 2


AT_INFINITY = "infinity"  # parameter sentinel: chart 2 at T = 0


def _zt(cs) -> Poly:
    return Poly(cs, ZZ)


def rhs_model1_bivariate() -> Poly:
    """f_t(x) over ZZ[t], ascending in x."""
    return Poly(
        [
            _zt([-7, 0, 0, 0, 0, 0, -8]),  # -(8 t^6 + 7)
            _zt([0, 0, 0, 0, 0, -1]),      # -t^5
            _zt([]),
            _zt([]),
            _zt([]),
            _zt([-1]),
            _zt([-1]),
        ],
        ZZ_T,
    )


def rhs_model2_bivariate() -> Poly:
    """g_T(X) over ZZ[T], ascending in X."""
    return Poly(
        [
            _zt([-8, 0, 0, 0, 0, 0, -7]),  # -(8 + 7 T^6)
            _zt([-1]),
            _zt([]),
            _zt([]),
            _zt([]),
            _zt([0, -1]),                  # -T
            _zt([-1]),
        ],
        ZZ_T,
    )


@dataclass
class CurveModel:
    """A hyperelliptic chart y^2 = f(x) with its provenance."""

    f: Poly
    chart: Chart
    param_label: str
    ctx: FqCtx | None  # None: over QQ

    @property
    def degenerate(self) -> bool:
        """Degree outside {5, 6}; accepted by the point search but flagged."""
        return self.f.degree not in (5, 6)


@dataclass
class PointCount:
    q: int
    affine: int
    infinity: int
    total: int
    smooth: bool  # f squarefree over F_q


def specialize_fiber(param, ctx: FqCtx | None = None, chart: Chart = Chart.MODEL1) -> CurveModel:
    """Substitute a parameter value into the requested chart.

    param is a field element (int, Fraction, FqElem) for the given chart, or
    AT_INFINITY, which selects chart 2 at T = 0.  ctx None means QQ.
    """
    if param == AT_INFINITY:
        chart = Chart.MODEL2
        param = 0
    rhs = rhs_model1_bivariate() if chart is Chart.MODEL1 else rhs_model2_bivariate()
    if ctx is None:
        value = Fraction(param)
        ring = QQ
        coeffs = [Fraction(c.evaluate(value.numerator)) if value.denominator == 1
                  else _eval_rational(c, value)
                  for c in rhs.coeffs]
        label = f"t={value}" if chart is Chart.MODEL1 else f"T={value}"
        return CurveModel(Poly(coeffs, ring), chart, label, None)
    value = param if isinstance(param, FqElem) else ctx.from_int(param)
    if value.ctx != ctx:
        raise DomainError("parameter from a different field")
    ring = field_ring(ctx)
    coeffs = [_eval_in_fq(c, value) for c in rhs.coeffs]
    label = ("t=" if chart is Chart.MODEL1 else "T=") + str(value)
    return CurveModel(Poly(coeffs, ring), chart, label, ctx)


def _eval_rational(c: Poly, value: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(c.coeffs):
        acc = acc * value + coeff
    return acc


def _eval_in_fq(c: Poly, value: FqElem) -> FqElem:
    acc = value.ctx.zero()
    for coeff in reversed(c.coeffs):
        acc = acc * value + coeff
    return acc


def points_at_infinity(c: CurveModel) -> int:
    """2 or 0 for degree 6 (leading coefficient square or not), 1 for degree 5."""
    if c.ctx is None:
        raise DomainError("points_at_infinity needs a finite field")
    if c.ctx.q % 2 == 0:
        raise UnsupportedCharacteristicError("odd q required")
    d = c.f.degree
    if d == 5:
        return 1
    if d == 6:
        return 2 if quadratic_character(c.f.lc) == 1 else 0
    raise DomainError("degenerate model: no projective point bookkeeping")


def count_points(c: CurveModel) -> PointCount:
    """Points of the smooth projective model: sum of 1 + chi(f(x)) plus the
    points at infinity.  Non-squarefree f is still counted but flagged."""
    if c.ctx is None:
        raise DomainError("count_points needs a finite field")
    if c.ctx.q % 2 == 0:
        raise UnsupportedCharacteristicError("odd q required")
    affine = 0
    for x in fq_enumerate(c.ctx):
        affine += 1 + quadratic_character(c.f.evaluate(x))
    inf = points_at_infinity(c)
    smooth = is_squarefree(c.f)
    return PointCount(c.ctx.q, affine, inf, affine + inf, smooth)


def has_nonsingular_affine_point(c: CurveModel):
    """Least witness (x0, y0) with y0^2 = f(x0) and (y0 != 0 or f'(x0) != 0).

    x0 is minimal in enumeration order; y0 is the canonical square root.
    Returns None when no nonsingular affine point exists.
    """
    if c.ctx is None:
        raise DomainError("point search needs a finite field")
    if c.ctx.q % 2 == 0:
        raise UnsupportedCharacteristicError("odd q required")
    df = c.f.derivative()
    for x in fq_enumerate(c.ctx):
        v = c.f.evaluate(x)
        if v.is_zero():
            if not df.evaluate(x).is_zero():
                return (x, c.ctx.zero())
            continue
        if quadratic_character(v) == 1:
            y = sqrt_in_fq(v)
            return (x, y)
    return None


def verify_affine_witness(c: CurveModel, witness) -> bool:
    """Re-verify a point by direct substitution plus the nonsingularity predicate."""
    x, y = witness
    if y * y != c.f.evaluate(x):
        return False
    if not y.is_zero():
        return True
    return not c.f.derivative().evaluate(x).is_zero()
