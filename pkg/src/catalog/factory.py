"""
Fábrica das séries nomeadas do catálogo.
"""
from fractions import Fraction
from typing import Dict, Optional, Union

from loguru import logger

from src.catalog.base_family import NamedSeriesId, SeriesFamily
from src.catalog.families import (
    ChallengeTailFamily,
    F1DualFamily,
    F1Family,
    F2Family,
    F3Family,
    F4Family,
    F5Family,
    F6Family,
    F7Family,
    F8Family,
    JacksonRhsFamily,
    LFamily,
    LLFamily,
    ShadowWFamily,
    SigmaFamily,
    SigmaStarFamily,
    W1Family,
    W2Family,
    WFamily,
)
from src.catalog.ghosts import GHOST_FORMS, GhostForm
from src.series import TruncatedQSeries
from src.series.truncated import Rational
from src.utils.exceptions import UnknownSeries


class SeriesFactory:
    """
    Fábrica que associa cada NamedSeriesId à sua família de termos ou à forma fechada do fantasma.
    """

    def __init__(self):
        # Mapeamento de identificadores para classes de família
        self.family_map = {
            NamedSeriesId.SIGMA: SigmaFamily,
            NamedSeriesId.SIGMA_STAR: SigmaStarFamily,
            NamedSeriesId.W: WFamily,
            NamedSeriesId.SW: ShadowWFamily,
            NamedSeriesId.W1: W1Family,
            NamedSeriesId.W2: W2Family,
            NamedSeriesId.F1: F1Family,
            NamedSeriesId.F2: F2Family,
            NamedSeriesId.F3: F3Family,
            NamedSeriesId.F4: F4Family,
            NamedSeriesId.F5: F5Family,
            NamedSeriesId.F6: F6Family,
            NamedSeriesId.F7: F7Family,
            NamedSeriesId.F8: F8Family,
            NamedSeriesId.F1_DUAL: F1DualFamily,
            NamedSeriesId.LL: LLFamily,
            NamedSeriesId.L: LFamily,
            NamedSeriesId.JACKSON_RHS: JacksonRhsFamily,
            NamedSeriesId.CHALLENGE_TAIL: ChallengeTailFamily,
        }
        self.ghost_map: Dict[NamedSeriesId, GhostForm] = dict(GHOST_FORMS)

    @staticmethod
    def resolve(series_id: Union[str, NamedSeriesId]) -> NamedSeriesId:
        """
        Normaliza um identificador textual.

        Raises:
            UnknownSeries: se o identificador não existe no catálogo.
        """
        if isinstance(series_id, NamedSeriesId):
            return series_id
        key = str(series_id).strip().upper().replace("-", "_")
        try:
            return NamedSeriesId(key)
        except ValueError:
            raise UnknownSeries(f"Série desconhecida: {series_id}") from None

    def get_family(self, series_id: Union[str, NamedSeriesId]) -> Optional[SeriesFamily]:
        """
        Obtém a família de termos da série.

        Returns:
            Instância da família ou None para os fantasmas.
        """
        series_id = self.resolve(series_id)
        if series_id not in self.family_map:
            return None
        return self.family_map[series_id]()

    def get_ghost(self, series_id: Union[str, NamedSeriesId]) -> GhostForm:
        series_id = self.resolve(series_id)
        if series_id not in self.ghost_map:
            raise UnknownSeries(f"{series_id.value} não tem forma fechada de fantasma")
        return self.ghost_map[series_id]

    def build_series(self, series_id: Union[str, NamedSeriesId], bound: Rational) -> TruncatedQSeries:
        """
        Expansão exata da série nomeada até q^bound.

        Args:
            series_id: Identificador da série.
            bound: Expoente de truncamento (> 0; bound <= 0 devolve a série vazia).

        Returns:
            Série truncada.

        Raises:
            UnknownSeries: se o identificador não existe.
        """
        series_id = self.resolve(series_id)
        bound = Fraction(bound)
        if bound <= 0:
            return TruncatedQSeries.zero(max(bound, Fraction(0)))
        if series_id.is_ghost:
            logger.debug(f"Expandindo fantasma {series_id.value} até q^{bound}")
            return self.get_ghost(series_id).to_series(bound)
        return self.get_family(series_id).expand(bound)

    def create_all_families(self) -> Dict[NamedSeriesId, SeriesFamily]:
        return {series_id: family_class() for series_id, family_class in self.family_map.items()}


_default_factory = SeriesFactory()


def build_series(series_id: Union[str, NamedSeriesId], bound: Rational) -> TruncatedQSeries:
    """Atalho para SeriesFactory().build_series."""
    return _default_factory.build_series(series_id, bound)


def get_family(series_id: Union[str, NamedSeriesId]) -> Optional[SeriesFamily]:
    return _default_factory.get_family(series_id)
