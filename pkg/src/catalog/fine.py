"""
Série hipergeométrica básica de Fine F(a, b; t : q^k) e sua regularização.
"""
from fractions import Fraction

from loguru import logger

from src.series import Monomial, QProductExpr, TruncatedQSeries, expand, sum_tails
from src.series.truncated import Rational
from src.utils.exceptions import NonConvergentParameters, StallDetected

# Termos usados na checagem prévia de crescimento das valuações
SAMPLE_TERMS = 40


def fine_term(a: Monomial, b: Monomial, t: Monomial, n: int, base: int = 1) -> QProductExpr:
    """Termo n de F(a, b; t : q^base) = (a q^k; q^k)_n t^n / (b q^k; q^k)_n, em forma normal."""
    k = Fraction(base)
    expr = a.poch(k, n) if a.is_zero else Monomial(a.coeff, a.exp + k).poch(k, n)
    den = QProductExpr.monomial() if b.is_zero else Monomial(b.coeff, b.exp + k).poch(k, n)
    return (expr / den * t.power(n)).normalized()


def _check_parameters(a: Monomial, b: Monomial, t: Monomial, base: int) -> None:
    if not b.is_zero and b.exp + base <= 0:
        raise NonConvergentParameters(
            f"Denominador (b q^{base}; q^{base})_n com expoente não positivo: b = {b}"
        )
    if t.is_zero:
        return
    vals = []
    for n in range(SAMPLE_TERMS):
        v = fine_term(a, b, t, n, base).valuation()
        if v is None:
            return
        vals.append(v)
    half = SAMPLE_TERMS // 2
    if max(vals[half:]) <= max(vals[:half]):
        raise NonConvergentParameters(
            f"Valuações dos termos de F({a}, {b}; {t}) não crescem: {vals[:6]}..."
        )


def fine_F(
    a: Monomial,
    b: Monomial,
    t: Monomial,
    bound: Rational,
    base: int = 1,
    regularize: bool = True,
    stall_window: int = 50
) -> TruncatedQSeries:
    """
    Expande F(a, b; t : q^base) = sum_n (a q^k; q^k)_n / (b q^k; q^k)_n t^n até q^bound.

    Quando t tem valuação 0 e b valuação positiva, a série é lida através de
    F(a, b; t) = (1 - b)/(1 - t) F(at/b, t; b).

    Args:
        a, b, t: Parâmetros monomiais.
        bound: Expoente de truncamento.
        base: Potência k da base q^k.
        regularize: Aplica a transformação acima quando necessário.
        stall_window: Janela de estagnação repassada à soma.

    Raises:
        NonConvergentParameters: se as valuações dos termos não crescem.
    """
    bound = Fraction(bound)
    if regularize and not t.is_zero and t.exp == 0 and not b.is_zero and b.exp > 0:
        if t.coeff == 1:
            raise NonConvergentParameters("F(a, b; 1) não admite regularização")
        logger.warning(f"Regularizando F({a}, {b}; {t}) pela transformação de Fine")
        factor = QProductExpr.build(1, 0, [(-b.coeff, b.exp, 1), (-t.coeff, 0, -1)])
        inner = fine_F(a * t / b, t, b, bound, base=base, regularize=False, stall_window=stall_window)
        return inner * expand(factor.normalized(), bound)

    _check_parameters(a, b, t, base)
    try:
        series, used = sum_tails(
            lambda n: fine_term(a, b, t, n, base),
            TruncatedQSeries.zero(bound),
            0,
            bound,
            stall_window=stall_window,
        )
    except StallDetected as e:
        raise NonConvergentParameters(f"F({a}, {b}; {t}) não converge formalmente: {e}") from e
    logger.debug(f"F({a}, {b}; {t} : q^{base}) com {used} termos até q^{bound}")
    return series
