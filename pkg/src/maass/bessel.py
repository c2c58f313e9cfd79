"""
Funções K de Bessel modificadas em precisão arbitrária.
"""
from fractions import Fraction
from typing import Union

import mpmath

from src.utils.exceptions import PrecisionUnreachable

# Precisão máxima (dígitos) em que os testes de referência foram validados
VALIDATED_DIGITS = 60

Order = Union[int, Fraction]


def bessel_k(nu: Order, t: float, precision: int = 50, max_digits: int = VALIDATED_DIGITS) -> mpmath.mpf:
    """
    K_nu(t) para t > 0.

    Args:
        nu: Ordem (0, 1 ou 1/2).
        t: Argumento positivo.
        precision: Dígitos decimais pedidos.
        max_digits: Limite de precisão validado.

    Raises:
        ValueError: se t <= 0 ou a ordem não é suportada.
        PrecisionUnreachable: se precision excede max_digits.
    """
    if precision > max_digits:
        raise PrecisionUnreachable(f"Precisão de {precision} dígitos acima da faixa validada ({max_digits})")
    nu = Fraction(nu)
    if nu not in (0, 1, Fraction(1, 2)):
        raise ValueError(f"Ordem de Bessel não suportada: {nu}")
    with mpmath.workdps(precision + 5):
        t = mpmath.mpf(t)
        if t <= 0:
            raise ValueError(f"Argumento de K deve ser positivo, recebido {t}")
        order = mpmath.mpf(nu.numerator) / nu.denominator
        return +mpmath.besselk(order, t)


def k_half_closed_form(t: float, precision: int = 50) -> mpmath.mpf:
    """K_{1/2}(t) = sqrt(pi / 2t) e^-t."""
    with mpmath.workdps(precision + 5):
        t = mpmath.mpf(t)
        return +(mpmath.sqrt(mpmath.pi / (2 * t)) * mpmath.exp(-t))


def k0_upper_bound(t: float) -> float:
    """Cota K_0(t) <= sqrt(pi / 2t) e^-t, válida para todo t > 0."""
    return float(k_half_closed_form(t, 15))
