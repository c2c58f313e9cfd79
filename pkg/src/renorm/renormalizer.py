"""
Operador de renormalização: soma de caudas, fantasma catalogado e sombra.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import mpmath
from loguru import logger

from src.catalog import GHOST_OF, NamedSeriesId, SeriesFamily, SeriesFactory, VerificationReport, compare
from src.catalog.identities import aggregate
from src.series import TruncatedQSeries, sum_tails
from src.series.truncated import Rational
from src.utils.exceptions import DomainHole, NoLimitTerm, NonExpandableTail, NotExpandable, PoleAtPoint

# família -> (parceira sob a sombra, sinal): S[H] = sinal * parceira
SHADOW_PAIRS: Dict[NamedSeriesId, Tuple[NamedSeriesId, int]] = {
    NamedSeriesId.SIGMA: (NamedSeriesId.SIGMA_STAR, -1),
    NamedSeriesId.SIGMA_STAR: (NamedSeriesId.SIGMA, -1),
    NamedSeriesId.W: (NamedSeriesId.SW, 1),
    NamedSeriesId.SW: (NamedSeriesId.W, 1),
}

# Fantasmas cujo domínio numérico exclui as raízes de ordem N = 2 mod 4
CUSP_RESTRICTED = {NamedSeriesId.GHOST_W, NamedSeriesId.GHOST_SW}


@dataclass(frozen=True)
class RenormResult:
    """tails = shadow + ghost, todos exatos até o mesmo limite."""

    series_id: NamedSeriesId
    bound: Fraction
    tails: TruncatedQSeries
    ghost: TruncatedQSeries
    shadow: TruncatedQSeries
    n_used: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "id": self.series_id.value,
            "bound": str(self.bound),
            "n_used": self.n_used,
            "tails": self.tails.to_dict(),
            "ghost": self.ghost.to_dict(),
            "shadow": self.shadow.to_dict(),
        }


class Renormalizer:
    """Aplica a construção de soma de caudas às famílias do catálogo."""

    def __init__(self, factory: Optional[SeriesFactory] = None, stall_window: int = 50):
        """
        Args:
            factory: Fábrica de séries (padrão: nova instância).
            stall_window: Termos sem ganho de valuação antes de declarar estagnação.
        """
        self.factory = factory or SeriesFactory()
        self.stall_window = stall_window

    def tails_with_count(self, family: SeriesFamily, bound: Rational) -> Tuple[TruncatedQSeries, int]:
        """
        sum_{n >= n_start} (H_n(1/q) - H_inf(1/q)) até q^bound e o número de termos usados.

        Raises:
            NoLimitTerm: se a família não tem limite catalogado.
            NonExpandableTail: se algum termo transformado não é expansível.
            StallDetected: se as valuações das diferenças param de crescer.
        """
        bound = Fraction(bound)
        limit = family.limit_term()
        if limit is None:
            raise NoLimitTerm(f"{family.series_id.value} não tem termo limite catalogado")
        try:
            series, used = sum_tails(
                family.transformed_term,
                limit.to_series(bound),
                family.n_start,
                bound,
                stall_window=self.stall_window,
            )
        except NotExpandable as e:
            raise NonExpandableTail(f"Termo transformado de {family.series_id.value} não é expansível: {e}") from e
        logger.debug(f"Caudas de {family.series_id.value}: {used} termos até q^{bound}")
        return series, used

    def tails_sum(self, family: SeriesFamily, bound: Rational) -> TruncatedQSeries:
        return self.tails_with_count(family, bound)[0]

    def shadow(self, series_id: Union[str, NamedSeriesId], bound: Rational) -> RenormResult:
        """
        Separa a soma de caudas em sombra e fantasma catalogado.

        Raises:
            NoLimitTerm: se a série não tem fantasma catalogado.
        """
        series_id = self.factory.resolve(series_id)
        bound = Fraction(bound)
        if series_id not in GHOST_OF:
            raise NoLimitTerm(f"{series_id.value} não tem fantasma catalogado")
        tails, used = self.tails_with_count(self.factory.get_family(series_id), bound)
        ghost = self.factory.build_series(GHOST_OF[series_id], bound)
        shadow = tails - ghost
        logger.info(f"Sombra de {series_id.value} até q^{bound} com {used} termos")
        return RenormResult(series_id, bound, tails, ghost, shadow, used)

    def check_involution(self, series_id: Union[str, NamedSeriesId], bound: Rational) -> VerificationReport:
        """
        Confere S[H] = sinal * parceira e sinal * S[parceira] = H até q^bound.
        """
        series_id = self.factory.resolve(series_id)
        bound = Fraction(bound)
        name = f"INVOLUTION_{series_id.value}"
        if series_id not in SHADOW_PAIRS:
            raise NoLimitTerm(f"{series_id.value} não tem par de sombra catalogado")
        if bound <= 0:
            return VerificationReport(name, bound, True, detail="comparação vazia")
        partner, sign = SHADOW_PAIRS[series_id]
        forward = self.shadow(series_id, bound)
        backward = self.shadow(partner, bound)
        cases = [
            compare(
                f"S[{series_id.value}]",
                bound,
                forward.shadow,
                self.factory.build_series(partner, bound).scale(sign),
            ),
            compare(
                f"S[{partner.value}]",
                bound,
                backward.shadow.scale(sign),
                self.factory.build_series(series_id, bound),
            ),
        ]
        return aggregate(name, bound, cases)

    def ghost_decay_profile(
        self,
        ghost_id: Union[str, NamedSeriesId],
        root_order: int,
        radii: Sequence[float],
        precision: int = 30
    ) -> "DecayProfile":
        """
        |G(r zeta)| ao longo de raios crescentes, zeta = e^(2 pi i / root_order).

        Raises:
            PoleAtPoint: se um fator invertido do produto do fantasma se anula em zeta.
            DomainHole: para os fantasmas de W e S[W] com root_order = 2 mod 4.
        """
        ghost_id = self.factory.resolve(ghost_id)
        if root_order < 1:
            raise ValueError(f"Ordem da raiz deve ser positiva, recebido {root_order}")
        radii = [float(r) for r in radii]
        if any(not 0 < r < 1 for r in radii) or any(a >= b for a, b in zip(radii, radii[1:])):
            raise ValueError(f"Raios devem ser crescentes em (0, 1): {radii}")
        form = self.factory.get_ghost(ghost_id)
        if form.vanishes_inverted_at_root(root_order):
            raise PoleAtPoint(f"{ghost_id.value} tem fator invertido nulo na raiz de ordem {root_order}")
        if ghost_id in CUSP_RESTRICTED and root_order % 4 == 2:
            raise DomainHole(f"{ghost_id.value}: raiz de ordem {root_order} pertence à classe S_1/2")
        rows: List[Tuple[float, float, Optional[float]]] = []
        with mpmath.workdps(precision + 10):
            zeta = mpmath.expjpi(mpmath.mpf(2) / root_order)
            for r in radii:
                magnitude = abs(form.evaluate(r * zeta, precision))
                exponent = None
                if magnitude > 0:
                    exponent = float(mpmath.log(magnitude) / mpmath.log(1 - mpmath.mpf(r)))
                rows.append((r, float(magnitude), exponent))
        logger.debug(f"Perfil de decaimento de {ghost_id.value} (ordem {root_order}): {rows}")
        return DecayProfile(ghost_id, root_order, tuple(rows))


@dataclass(frozen=True)
class DecayProfile:
    """Linhas (r, |G(r zeta)|, log|G| / log(1 - r))."""

    ghost_id: NamedSeriesId
    root_order: int
    rows: Tuple[Tuple[float, float, Optional[float]], ...]

    @property
    def magnitudes(self) -> List[float]:
        return [m for _, m, _ in self.rows]

    def is_strictly_decreasing(self, from_radius: Optional[float] = None) -> bool:
        """Decrescimento estrito, opcionalmente só a partir de ``from_radius``."""
        mags = [m for r, m, _ in self.rows if from_radius is None or r >= from_radius]
        return all(a > b for a, b in zip(mags, mags[1:]))

    def to_rows(self) -> List[Dict[str, object]]:
        return [
            {"order": self.root_order, "r": r, "magnitude": m, "exponent": e}
            for r, m, e in self.rows
        ]


_default = Renormalizer()


def tails_sum(family: SeriesFamily, bound: Rational) -> TruncatedQSeries:
    return _default.tails_sum(family, bound)


def shadow(series_id: Union[str, NamedSeriesId], bound: Rational) -> RenormResult:
    return _default.shadow(series_id, bound)


def check_involution(series_id: Union[str, NamedSeriesId], bound: Rational) -> VerificationReport:
    return _default.check_involution(series_id, bound)


def ghost_decay_profile(
    ghost_id: Union[str, NamedSeriesId],
    root_order: int,
    radii: Sequence[float],
    precision: int = 30
) -> DecayProfile:
    return _default.ghost_decay_profile(ghost_id, root_order, radii, precision)
