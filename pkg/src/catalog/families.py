"""
Famílias q-hipergeométricas do catálogo.

Cada classe informa o termo fechado H_n(q), o índice inicial e a cota de
valuação usada para encerrar a soma. As famílias com soma de caudas também
informam o limite de H_n(1/q).
"""
from fractions import Fraction
from typing import Optional

from src.catalog.base_family import NamedSeriesId, SeriesFamily
from src.series import InfiniteProductExpr, QProductExpr, poch
from src.series.truncated import Rational


def sign(n: int) -> int:
    return -1 if n % 2 else 1


def binomial(c: Rational, m: Rational, e: int = 1) -> QProductExpr:
    """(1 + c q^m)^e."""
    return QProductExpr.build(1, 0, [(c, m, e)])


def monomial(coeff: Rational, exp: Rational) -> QProductExpr:
    return QProductExpr.monomial(coeff, exp)


class SigmaFamily(SeriesFamily):
    """sigma_n = q^(n(n+1)/2) / (-q; q)_n."""

    series_id = NamedSeriesId.SIGMA
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(1, n * (n + 1) // 2) / poch(-1, 1, 1, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * (n + 1) // 2

    def limit_term(self) -> Optional[InfiniteProductExpr]:
        return InfiniteProductExpr.poch_infinity(-1, 1, 1, -1)


class SigmaStarFamily(SeriesFamily):
    """sigma*_n = 2 (-1)^n q^(n^2) / (q; q^2)_n, n >= 1."""

    series_id = NamedSeriesId.SIGMA_STAR
    n_start = 1

    def term(self, n: int) -> QProductExpr:
        return monomial(2 * sign(n), n * n) / poch(1, 1, 2, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * n

    def limit_term(self) -> Optional[InfiniteProductExpr]:
        return InfiniteProductExpr.poch_infinity(1, 1, 2, -1) * 2


class WFamily(SeriesFamily):
    """W_n = (-1; q^2)_n (-1)^n q^n / (q; q^2)_n, n >= 1."""

    series_id = NamedSeriesId.W
    n_start = 1

    def term(self, n: int) -> QProductExpr:
        return poch(-1, 0, 2, n) * monomial(sign(n), n) / poch(1, 1, 2, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n

    def limit_term(self) -> Optional[InfiniteProductExpr]:
        return InfiniteProductExpr.poch_infinity(-1, 0, 2) * InfiniteProductExpr.poch_infinity(1, 1, 2, -1)


class W2Family(WFamily):
    """W2 coincide termo a termo com W."""

    series_id = NamedSeriesId.W2


class ShadowWFamily(SeriesFamily):
    """S[W]_n = (-1)^(n+1) q^n (q; q^2)_n / (-q^2; q^2)_n, n >= 0."""

    series_id = NamedSeriesId.SW
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(-sign(n), n) * poch(1, 1, 2, n) / poch(-1, 2, 2, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n

    def limit_term(self) -> Optional[InfiniteProductExpr]:
        return (
            InfiniteProductExpr.poch_infinity(1, 1, 2)
            * InfiniteProductExpr.poch_infinity(-1, 2, 2, -1)
            * -1
        )


class W1Family(SeriesFamily):
    """W1_n = (q; q)_n (-1)^n q^(n(n+1)/2) / (-q; q)_n."""

    series_id = NamedSeriesId.W1
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return poch(1, 1, 1, n) * monomial(sign(n), n * (n + 1) // 2) / poch(-1, 1, 1, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * (n + 1) // 2


class F1Family(SeriesFamily):
    """f1_n = q^(n(n+1)/2) / ((-q)_n (1 - q^(2n+1)))."""

    series_id = NamedSeriesId.F1
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(1, n * (n + 1) // 2) / poch(-1, 1, 1, n) * binomial(-1, 2 * n + 1, -1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * (n + 1) // 2


class F1DualFamily(SeriesFamily):
    """-q^(2n+1) / ((-q)_n (1 - q^(2n+1))): termos de f1(1/q)."""

    series_id = NamedSeriesId.F1_DUAL
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(-1, 2 * n + 1) / poch(-1, 1, 1, n) * binomial(-1, 2 * n + 1, -1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return 2 * n + 1


class F2Family(SeriesFamily):
    """f2_n = q^(n(n+1)/2) / ((-q)_(n-1) (1 - q^(2n-1))), n >= 1."""

    series_id = NamedSeriesId.F2
    n_start = 1

    def term(self, n: int) -> QProductExpr:
        return monomial(1, n * (n + 1) // 2) / poch(-1, 1, 1, n - 1) * binomial(-1, 2 * n - 1, -1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * (n + 1) // 2


class F3Family(SeriesFamily):
    """f3_n = (q)_(2n) q^n / (-q)_(2n+1)."""

    series_id = NamedSeriesId.F3
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return poch(1, 1, 1, 2 * n) * monomial(1, n) / poch(-1, 1, 1, 2 * n + 1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n


class F4Family(SeriesFamily):
    """f4_n = (q)_(2n+1) q^(n+1) / (-q)_(2n+2)."""

    series_id = NamedSeriesId.F4
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return poch(1, 1, 1, 2 * n + 1) * monomial(1, n + 1) / poch(-1, 1, 1, 2 * n + 2)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n + 1


class F5Family(SeriesFamily):
    """f5_n = (-1)^n q^(n(n+1)/2) (q)_n / (q; q^2)_(n+1)."""

    series_id = NamedSeriesId.F5
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(sign(n), n * (n + 1) // 2) * poch(1, 1, 1, n) / poch(1, 1, 2, n + 1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * (n + 1) // 2


class F6Family(SeriesFamily):
    """f6_n = (-1)^n q^n (q^2; q^2)_(n-1) / (q^n; q)_n, n >= 1."""

    series_id = NamedSeriesId.F6
    n_start = 1

    def term(self, n: int) -> QProductExpr:
        return monomial(sign(n), n) * poch(1, 2, 2, n - 1) / poch(1, n, 1, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n


class F7Family(SeriesFamily):
    """f7_n = (-1)^n q^(n^2+n) (q^2; q^2)_n / (-q)_(2n+1)."""

    series_id = NamedSeriesId.F7
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(sign(n), n * n + n) * poch(1, 2, 2, n) / poch(-1, 1, 1, 2 * n + 1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * n + n


class F8Family(SeriesFamily):
    """f8_n = (q)_(n-1) q^n / (-q^n; q)_n, n >= 1."""

    series_id = NamedSeriesId.F8
    n_start = 1

    def term(self, n: int) -> QProductExpr:
        return poch(1, 1, 1, n - 1) * monomial(1, n) / poch(-1, n, 1, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n


class LLFamily(SeriesFamily):
    """LL_n = (q)_(n-1) (-1)^n q^(n(n+1)/2) / (-q)_n, n >= 1."""

    series_id = NamedSeriesId.LL
    n_start = 1

    def term(self, n: int) -> QProductExpr:
        return poch(1, 1, 1, n - 1) * monomial(sign(n), n * (n + 1) // 2) / poch(-1, 1, 1, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * (n + 1) // 2


class LFamily(SeriesFamily):
    """L_n = q^n (q^2; q^2)_(n-1) / (-q^2; q^2)_n, n >= 1."""

    series_id = NamedSeriesId.L
    n_start = 1

    def term(self, n: int) -> QProductExpr:
        return monomial(1, n) * poch(1, 2, 2, n - 1) / poch(-1, 2, 2, n)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n


class JacksonRhsFamily(SeriesFamily):
    """q^(n^2+n) / ((-q^2; q^2)_n (1 + q^(2n+1)))."""

    series_id = NamedSeriesId.JACKSON_RHS
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(1, n * n + n) / poch(-1, 2, 2, n) * binomial(1, 2 * n + 1, -1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return n * n + n


class ChallengeTailFamily(SeriesFamily):
    """q^(2n+1) / ((-q^2; q^2)_n (1 + q^(2n+1)))."""

    series_id = NamedSeriesId.CHALLENGE_TAIL
    n_start = 0

    def term(self, n: int) -> QProductExpr:
        return monomial(1, 2 * n + 1) / poch(-1, 2, 2, n) * binomial(1, 2 * n + 1, -1)

    def valuation_lower_bound(self, n: int) -> Rational:
        return Fraction(2 * n + 1)
