"""
Formas fechadas dos termos fantasma: produto infinito vezes combinação de somas de Lambert.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import mpmath

from src.catalog.base_family import NamedSeriesId
from src.series import InfiniteProductExpr, QProductExpr, TruncatedQSeries, expand
from src.series.truncated import Rational
from src.utils.exceptions import PoleAtPoint


@dataclass(frozen=True)
class LambertSum:
    """
    sum_{k>=0} q^(exp + k*step) / (1 + denom * q^(exp + k*step)).

    Ex.: sum_{n>=1} q^(2n)/(1 - q^(2n)) = LambertSum(2, 2, -1).
    """

    exp: Fraction
    step: Fraction
    denom: Fraction

    def term(self, k: int) -> QProductExpr:
        e = self.exp + k * self.step
        return QProductExpr.build(1, e, [(self.denom, e, -1)])

    def to_series(self, bound: Rational) -> TruncatedQSeries:
        bound = Fraction(bound)
        total = TruncatedQSeries.zero(bound)
        k = 0
        while self.exp + k * self.step < bound:
            total = total + expand(self.term(k), bound)
            k += 1
        return total

    def evaluate(self, q: complex, precision: int = 50) -> mpmath.mpc:
        with mpmath.workdps(precision + 10):
            q = mpmath.mpmathify(q)
            tol = mpmath.mpf(10) ** (-(precision + 5))
            total = mpmath.mpc(0)
            k = 0
            while True:
                e = self.exp + k * self.step
                power = q ** e.numerator if e.denominator == 1 else mpmath.power(q, mpmath.mpf(e.numerator) / e.denominator)
                den = 1 + mpmath.mpf(self.denom.numerator) / self.denom.denominator * power
                if abs(den) < tol:
                    raise PoleAtPoint(f"Soma de Lambert com denominador nulo em q = {mpmath.nstr(q, 10)}")
                total += power / den
                if abs(power) < tol:
                    break
                k += 1
            return +total


@dataclass(frozen=True)
class GhostForm:
    """G(q) = produto * (constante + sum_i peso_i * Lambert_i)."""

    series_id: NamedSeriesId
    product: InfiniteProductExpr
    constant: Fraction
    lamberts: Tuple[Tuple[Fraction, LambertSum], ...]

    def to_series(self, bound: Rational) -> TruncatedQSeries:
        """Expansão exata até q^bound."""
        bound = Fraction(bound)
        inner = TruncatedQSeries.monomial(self.constant, 0, bound) if self.constant else TruncatedQSeries.zero(bound)
        for weight, lam in self.lamberts:
            inner = inner + lam.to_series(bound).scale(weight)
        return self.product.to_series(bound) * inner

    def evaluate(self, q: complex, precision: int = 50) -> mpmath.mpc:
        """
        Avaliação numérica em |q| < 1.

        Raises:
            PoleAtPoint: se algum fator invertido ou denominador de Lambert se anula.
        """
        with mpmath.workdps(precision + 10):
            inner = mpmath.mpf(self.constant.numerator) / self.constant.denominator
            for weight, lam in self.lamberts:
                inner += mpmath.mpf(weight.numerator) / weight.denominator * lam.evaluate(q, precision)
            return +(self.product.evaluate(q, precision) * inner)

    def vanishes_inverted_at_root(self, order: int) -> bool:
        """Algum fator invertido do produto se anula na raiz primitiva de ordem ``order``."""
        return self.product.vanishes_inverted_at_root(order)


def _lambert(exp: Rational, step: Rational, denom: Rational) -> LambertSum:
    return LambertSum(Fraction(exp), Fraction(step), Fraction(denom))


# sum_{n>=1} q^n/(1-q^n)
DIVISOR_LAMBERT = _lambert(1, 1, -1)
# sum_{n>=1} q^(2n)/(1-q^(2n))
EVEN_LAMBERT = _lambert(2, 2, -1)
# sum_{n>=0} q^(2n+1)/(1+q^(2n+1))
ODD_PLUS_LAMBERT = _lambert(1, 2, 1)

# P_W = (-1; q^2)_inf / (q; q^2)_inf
PRODUCT_W = InfiniteProductExpr.poch_infinity(-1, 0, 2) * InfiniteProductExpr.poch_infinity(1, 1, 2, -1)

GHOST_FORMS = {
    NamedSeriesId.GHOST_SIGMA: GhostForm(
        NamedSeriesId.GHOST_SIGMA,
        InfiniteProductExpr.poch_infinity(-1, 1, 1, -1),
        Fraction(0),
        ((Fraction(-1), DIVISOR_LAMBERT),),
    ),
    NamedSeriesId.GHOST_SIGMA_STAR: GhostForm(
        NamedSeriesId.GHOST_SIGMA_STAR,
        InfiniteProductExpr.poch_infinity(1, 1, 2, -1),
        Fraction(1),
        ((Fraction(-2), EVEN_LAMBERT),),
    ),
    NamedSeriesId.GHOST_W: GhostForm(
        NamedSeriesId.GHOST_W,
        PRODUCT_W,
        Fraction(1, 2),
        ((Fraction(-1), EVEN_LAMBERT), (Fraction(-1), ODD_PLUS_LAMBERT)),
    ),
    NamedSeriesId.GHOST_SW: GhostForm(
        NamedSeriesId.GHOST_SW,
        InfiniteProductExpr.poch_infinity(1, 1, 2) * InfiniteProductExpr.poch_infinity(-1, 2, 2, -1),
        Fraction(0),
        ((Fraction(1), EVEN_LAMBERT), (Fraction(1), ODD_PLUS_LAMBERT)),
    ),
}

# Família renormalizada -> fantasma catalogado
GHOST_OF = {
    NamedSeriesId.SIGMA: NamedSeriesId.GHOST_SIGMA,
    NamedSeriesId.SIGMA_STAR: NamedSeriesId.GHOST_SIGMA_STAR,
    NamedSeriesId.W: NamedSeriesId.GHOST_W,
    NamedSeriesId.SW: NamedSeriesId.GHOST_SW,
}
