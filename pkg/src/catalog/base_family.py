"""
Módulo com a classe base para famílias de termos q-hipergeométricos.
"""
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Optional

from loguru import logger

from src.series import InfiniteProductExpr, QProductExpr, TruncatedQSeries, sum_tails, sum_terms
from src.series.truncated import Rational


class NamedSeriesId(str, Enum):
    """Identificadores das séries do catálogo."""

    SIGMA = "SIGMA"
    SIGMA_STAR = "SIGMA_STAR"
    W = "W"
    SW = "SW"
    W1 = "W1"
    W2 = "W2"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"
    F7 = "F7"
    F8 = "F8"
    F1_DUAL = "F1_DUAL"
    LL = "LL"
    L = "L"
    JACKSON_RHS = "JACKSON_RHS"
    CHALLENGE_TAIL = "CHALLENGE_TAIL"
    GHOST_SIGMA = "GHOST_SIGMA"
    GHOST_SIGMA_STAR = "GHOST_SIGMA_STAR"
    GHOST_W = "GHOST_W"
    GHOST_SW = "GHOST_SW"

    @property
    def is_ghost(self) -> bool:
        return self.value.startswith("GHOST_")


class SeriesFamily(ABC):
    """
    Família n -> H_n(q) cuja soma define uma série do catálogo.

    Subclasses informam o termo fechado, o índice inicial e uma cota inferior
    não decrescente para a valuação de cada termo.
    """

    series_id: NamedSeriesId
    n_start: int = 0

    @abstractmethod
    def term(self, n: int) -> QProductExpr:
        """
        Forma fechada do termo n.

        Args:
            n: Índice do termo (n >= n_start).

        Returns:
            Expressão do termo.
        """
        pass

    @abstractmethod
    def valuation_lower_bound(self, n: int) -> Rational:
        """Cota inferior para o expoente líder do termo n."""
        pass

    def limit_term(self) -> Optional[InfiniteProductExpr]:
        """Limite de H_n(1/q) quando n -> infinito, se a família o possui."""
        return None

    def transformed_term(self, n: int) -> QProductExpr:
        """H_n(1/q) em forma normal."""
        return self.term(n).subst_qinv()

    def expand(self, bound: Rational) -> TruncatedQSeries:
        """
        Soma a família até q^bound.

        Args:
            bound: Expoente de truncamento.

        Returns:
            Série truncada exata.
        """
        series, used = sum_terms(self.term, self.n_start, bound, self.valuation_lower_bound)
        logger.debug(f"{self.series_id.value}: {used} termos somados até q^{bound}")
        return series

    def expand_transformed(self, bound: Rational, stall_window: int = 50) -> TruncatedQSeries:
        """
        Soma os termos transformados H_n(1/q) até q^bound.

        Usada nas simetrias q -> 1/q das famílias sem limite (o limite é zero).
        """
        series, used = sum_tails(
            self.transformed_term,
            TruncatedQSeries.zero(bound),
            self.n_start,
            bound,
            stall_window=stall_window,
        )
        logger.debug(f"{self.series_id.value}: {used} termos transformados somados até q^{bound}")
        return series

    def head(self, count: int) -> list:
        """Primeiros ``count`` coeficientes inteiros (expoentes 0..count-1)."""
        return self.expand(Fraction(count)).coefficients(count)
