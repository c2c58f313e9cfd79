"""
Catálogo de séries nomeadas, série de Fine e verificação de identidades.
"""
from src.catalog.base_family import NamedSeriesId, SeriesFamily
from src.catalog.factory import SeriesFactory, build_series, get_family
from src.catalog.fine import fine_F
from src.catalog.ghosts import GHOST_FORMS, GHOST_OF, GhostForm, LambertSum
from src.catalog.identities import DEFAULT_PARAMS, IdentityId, VerificationReport, compare, verify_identity

__all__ = [
    "DEFAULT_PARAMS",
    "GHOST_FORMS",
    "GHOST_OF",
    "GhostForm",
    "IdentityId",
    "LambertSum",
    "NamedSeriesId",
    "SeriesFactory",
    "SeriesFamily",
    "VerificationReport",
    "build_series",
    "compare",
    "fine_F",
    "get_family",
    "verify_identity",
]
