"""
Avaliação das formas modulares quânticas em raízes da unidade: sigma/sigma*
(relação de Cohen) e f_W nas classes de cúspide S_inf e S_0.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union

import mpmath
from loguru import logger

from src.maass.cusps import CuspKind, Matrix, classify_cusp
from src.maass.period import calibration_constant
from src.utils.exceptions import DomainHole, NonTerminating, PoleAtPoint

RationalLike = Union[Fraction, int, str]

# Geradores usados nas funções de período
GAMMAS: Dict[str, Matrix] = {
    "A": ((1, 1), (0, 1)),
    "B": ((3, -1), (4, -1)),
    "C": ((-1, 0), (0, -1)),
}


def _multiplier(name: str) -> mpmath.mpc:
    if name == "A":
        return mpmath.expjpi(mpmath.mpf(-1) / 4)
    if name == "B":
        return mpmath.mpc(1)
    return mpmath.mpc(-1)


def working_digits(precision: int, x: Fraction) -> int:
    """Precisão aumentada com a ordem da raiz."""
    return precision + x.denominator // 10 + 10


def root_of_unity(x: Fraction) -> mpmath.mpc:
    """e^(2 pi i x) na precisão corrente."""
    return mpmath.expjpi(2 * mpmath.mpf(x.numerator) / x.denominator)


def first_vanishing(x: Fraction, offset: int, step: int, sign: int) -> Optional[int]:
    """
    Menor k >= 0 com 1 + sign q^(offset + step k) = 0 em q = e^(2 pi i x), decidido em inteiros.
    """
    p, r = x.numerator, x.denominator
    for k in range(2 * r + 1):
        j = offset + step * k
        residue = (j * p) % r
        if sign == -1 and residue == 0:
            return k
        if sign == 1 and r % 2 == 0 and residue == r // 2:
            return k
    return None


@dataclass(frozen=True)
class SigmaQuantumValue:
    x: Fraction
    value_plus: mpmath.mpc
    value_minus: mpmath.mpc
    terms_plus: int
    terms_minus: int
    cohen_residual: float
    translation_residual: float

    def to_dict(self) -> Dict[str, object]:
        return {
            "x": str(self.x),
            "sigma": [float(self.value_plus.real), float(self.value_plus.imag)],
            "sigma_star": [float(self.value_minus.real), float(self.value_minus.imag)],
            "terms": [self.terms_plus, self.terms_minus],
            "cohen_residual": self.cohen_residual,
            "translation_residual": self.translation_residual,
        }


def _sigma_at_root(x: Fraction) -> tuple:
    """sigma(q) = 1 + sum_n q^(n+1) (q - 1)...(q^n - 1), truncado onde q^k = 1."""
    q = root_of_unity(x)
    stop = first_vanishing(x, 1, 1, -1) + 1
    total = mpmath.mpc(1)
    prod = mpmath.mpc(1)
    for n in range(stop):
        if n:
            prod *= q ** n - 1
        total += q ** (n + 1) * prod
    return total, stop


def _sigma_star_at_root(x: Fraction) -> tuple:
    """sigma*(q) = -2 sum_n q^(n+1) (1 - q^2)...(1 - q^2n), truncado onde q^2k = 1."""
    q = root_of_unity(x)
    stop = first_vanishing(x, 2, 2, -1) + 1
    total = mpmath.mpc(0)
    prod = mpmath.mpc(1)
    for n in range(stop):
        if n:
            prod *= 1 - q ** (2 * n)
        total += q ** (n + 1) * prod
    return -2 * total, stop


def quantum_eval_sigma(x: RationalLike, precision: int = 50) -> SigmaQuantumValue:
    """
    sigma(q) e sigma*(q) em q = e^(2 pi i x), com o resíduo |sigma(1/q) + sigma*(q)|.
    """
    x = Fraction(x)
    with mpmath.workdps(working_digits(precision, x)):
        plus, n_plus = _sigma_at_root(x)
        minus, n_minus = _sigma_star_at_root(x)
        inverse, _ = _sigma_at_root(-x)
        shifted, _ = _sigma_at_root(x + 1)
        cohen = abs(inverse + minus)

        def twist(t: Fraction) -> mpmath.mpc:
            return mpmath.expjpi(2 * mpmath.mpf(t.numerator) / (24 * t.denominator))

        translated = twist(x + 1) * shifted - mpmath.expjpi(mpmath.mpf(1) / 12) * twist(x) * plus
        logger.debug(f"sigma em x = {x}: {n_plus} e {n_minus} termos, resíduo de Cohen {mpmath.nstr(cohen, 3)}")
        return SigmaQuantumValue(x, +plus, +minus, n_plus, n_minus, float(cohen), float(abs(translated)))


@dataclass(frozen=True)
class FwValue:
    x: Fraction
    kind: CuspKind
    value: mpmath.mpc
    terms: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "x": str(self.x),
            "cusp": self.kind.value,
            "value": [float(self.value.real), float(self.value.imag)],
            "terms": self.terms,
        }


def _w_at_root(x: Fraction) -> tuple:
    """W(q) = sum_{n>=1} (-1; q^2)_n (-1)^n q^n / (q; q^2)_n, encerrada onde 1 + q^2k = 0."""
    k = first_vanishing(x, 0, 2, 1)
    if k is None:
        raise NonTerminating(f"W não termina em x = {x}")
    if first_vanishing(x, 1, 2, -1) is not None:
        raise PoleAtPoint(f"(q; q^2)_n se anula em x = {x}")
    q = root_of_unity(x)
    total = mpmath.mpc(0)
    num = mpmath.mpc(1)
    den = mpmath.mpc(1)
    for n in range(1, k + 1):
        num *= 1 + q ** (2 * (n - 1))
        den *= 1 - q ** (2 * n - 1)
        total += num * (-1) ** n * q ** n / den
    return total, k


def _shadow_at_inverse_root(x: Fraction) -> tuple:
    """-sum_{n>=0} (q; q^2)_n / (-q^2; q^2)_n, encerrada onde 1 - q^(2k+1) = 0."""
    k = first_vanishing(x, 1, 2, -1)
    if k is None:
        raise NonTerminating(f"Soma de S[W] não termina em x = {x}")
    if first_vanishing(x, 2, 2, 1) is not None:
        raise PoleAtPoint(f"(-q^2; q^2)_n se anula em x = {x}")
    q = root_of_unity(x)
    total = mpmath.mpc(0)
    ratio = mpmath.mpc(1)
    for n in range(k + 1):
        if n:
            ratio *= (1 - q ** (2 * n - 1)) / (1 + q ** (2 * n))
        total += ratio
    return -total, k + 1


def quantum_eval_fW(x: RationalLike, precision: int = 50) -> FwValue:
    """
    f_W(x) = e^(-2 pi i x/8) vezes a soma terminante adequada à classe de x.

    Raises:
        DomainHole: se x pertence a S_1/2.
        NonTerminating: se nenhum fator se anula dentro da ordem da raiz.
    """
    x = Fraction(x)
    cusp = classify_cusp(x)
    if cusp.kind == CuspKind.S_HALF:
        raise DomainHole(f"DomainHole: x = {x} in S_1/2 (denominador = 2 mod 4)")
    with mpmath.workdps(working_digits(precision, x)):
        if cusp.kind == CuspKind.S_INF:
            total, terms = _w_at_root(x)
        else:
            total, terms = _shadow_at_inverse_root(x)
        phase = mpmath.expjpi(-2 * mpmath.mpf(x.numerator) / (8 * x.denominator))
        return FwValue(x, cusp.kind, +(phase * total), terms)


@dataclass(frozen=True)
class PeriodSample:
    x: Fraction
    h: complex

    def to_row(self) -> Dict[str, object]:
        return {"x_num": self.x.numerator, "x_den": self.x.denominator, "re_h": self.h.real, "im_h": self.h.imag}


def period_function(gamma: str, x: RationalLike, precision: int = 50, calibration: complex = 1) -> complex:
    """
    h_gamma(x) = nu(gamma) f_W(x) - f_W(gamma x) (cx + d)^-1.

    Raises:
        ValueError: se gamma x = infinito.
        DomainHole: se x ou gamma x está em S_1/2.
    """
    x = Fraction(x)
    (a, b), (c, d) = GAMMAS[gamma]
    den = c * x + d
    if den == 0:
        raise ValueError(f"gamma_{gamma} leva x = {x} ao infinito")
    image = (a * x + b) / den
    here = quantum_eval_fW(x, precision).value
    there = quantum_eval_fW(image, precision).value
    with mpmath.workdps(precision + 10):
        h = _multiplier(gamma) * here - there / mpmath.mpf(den.numerator) * den.denominator
    return complex(h) / calibration


def period_function_sample(
    gamma: str,
    xs: Sequence[RationalLike],
    precision: int = 50,
    calibrate: bool = True
) -> List[PeriodSample]:
    """
    Amostra h_gamma ao longo de ``xs``; h_B é dividido pela constante de calibração do período.
    """
    gamma = gamma.upper()
    if gamma not in GAMMAS:
        raise ValueError(f"Gerador desconhecido: {gamma}")
    calibration = calibration_constant() if (gamma == "B" and calibrate) else 1
    samples = [PeriodSample(Fraction(x), period_function(gamma, x, precision, calibration)) for x in xs]
    logger.info(f"h_{gamma} amostrada em {len(samples)} pontos")
    return samples
