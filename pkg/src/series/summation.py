"""
Somas de famílias q-hipergeométricas: expansão termo a termo e soma de caudas.
"""
from fractions import Fraction
from typing import Callable, Iterator, Optional, Tuple

from loguru import logger

from src.series.qproduct import QProductExpr, expand, multiply_expr
from src.series.truncated import Rational, TruncatedQSeries
from src.utils.exceptions import NotExpandable, StallDetected

TermFn = Callable[[int], QProductExpr]

# Número de diferenças nulas consecutivas que encerra a soma de caudas.
SETTLE_TERMS = 3


def iter_term_series(term: TermFn, n_start: int, bound: Rational) -> Iterator[Tuple[int, TruncatedQSeries]]:
    """
    Gera (n, expansão do termo n) até q^bound.

    Quando term(n+1)/term(n) é expansível com valuação >= 0, o termo seguinte é
    obtido multiplicando a expansão anterior pela razão; caso contrário o termo é
    expandido diretamente.
    """
    bound = Fraction(bound)
    prev_expr: Optional[QProductExpr] = None
    prev_series: Optional[TruncatedQSeries] = None
    n = n_start
    while True:
        expr = term(n)
        series = None
        if prev_expr is not None and not prev_expr.normalized().is_zero:
            try:
                ratio = (expr / prev_expr).normalized()
                if ratio.is_zero:
                    series = TruncatedQSeries.zero(bound)
                elif ratio.is_expandable and ratio.prefactor_exp >= 0:
                    series = multiply_expr(prev_series, ratio).truncate(bound)
            except NotExpandable:
                series = None
        if series is None:
            series = expand(expr, bound)
        yield n, series
        prev_expr, prev_series = expr, series
        n += 1


def sum_terms(
    term: TermFn,
    n_start: int,
    bound: Rational,
    valuation_lower_bound: Callable[[int], Rational]
) -> Tuple[TruncatedQSeries, int]:
    """
    Soma os termos de n_start até o primeiro n cuja cota inferior de valuação atinge o limite.

    Returns:
        Tupla (série, quantidade de termos somados).
    """
    bound = Fraction(bound)
    total = TruncatedQSeries.zero(bound)
    used = 0
    for n, series in iter_term_series(term, n_start, bound):
        if Fraction(valuation_lower_bound(n)) >= bound:
            break
        total = total + series
        used += 1
    return total, used


def sum_tails(
    term: TermFn,
    limit: TruncatedQSeries,
    n_start: int,
    bound: Rational,
    stall_window: int = 50,
    max_terms: Optional[int] = None
) -> Tuple[TruncatedQSeries, int]:
    """
    Soma sum_n (term(n) - limit) até q^bound.

    Encerra após SETTLE_TERMS diferenças nulas consecutivas.

    Raises:
        StallDetected: se a valuação das diferenças não cresce por ``stall_window``
            termos seguidos ou se ``max_terms`` é atingido.
    """
    bound = Fraction(bound)
    limit = limit.truncate(bound)
    if max_terms is None:
        max_terms = 20 * int(bound) + 20 * stall_window + 100
    total = TruncatedQSeries.zero(bound)
    best: Optional[Fraction] = None
    since_best = 0
    zeros = 0
    used = 0
    for n, series in iter_term_series(term, n_start, bound):
        diff = series - limit
        total = total + diff
        used += 1
        if diff.is_zero:
            zeros += 1
            if zeros >= SETTLE_TERMS:
                break
        else:
            zeros = 0
        v = diff.valuation
        if best is None or v > best:
            best, since_best = v, 0
        else:
            since_best += 1
            if since_best >= stall_window:
                raise StallDetected(
                    f"Valuação das diferenças parou em q^{best} por {stall_window} termos (n = {n})"
                )
        if used >= max_terms:
            raise StallDetected(f"Soma de caudas não estabilizou após {used} termos")
    logger.debug(f"Soma de caudas encerrada com {used} termos até q^{bound}")
    return total, used
