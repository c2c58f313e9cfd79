"""
Classes de cúspides de Gamma_0(4) e matrizes testemunha.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple, Union

from sympy import gcdex

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]
Projective = Tuple[int, int]


class CuspKind(str, Enum):
    S_INF = "S_INF"
    S_0 = "S_0"
    S_HALF = "S_HALF"


# Representante de cada classe como vetor projetivo (numerador, denominador)
REPRESENTATIVES = {
    CuspKind.S_INF: (1, 0),
    CuspKind.S_0: (0, 1),
    CuspKind.S_HALF: (1, 2),
}


def act(matrix: Matrix, point: Projective) -> Projective:
    """Ação de Moebius em coordenadas projetivas, com denominador não negativo."""
    (a, b), (c, d) = matrix
    p, r = point
    num, den = a * p + b * r, c * p + d * r
    if den < 0 or (den == 0 and num < 0):
        num, den = -num, -den
    return num, den


@dataclass(frozen=True)
class CuspClass:
    """x = p/r com a classe de cúspide e gamma em Gamma_0(4) levando x ao representante."""

    x: Fraction
    kind: CuspKind
    witness: Matrix

    def verify(self) -> bool:
        (a, b), (c, d) = self.witness
        if a * d - b * c != 1 or c % 4:
            return False
        image = act(self.witness, (self.x.numerator, self.x.denominator))
        target = REPRESENTATIVES[self.kind]
        return image[0] * target[1] == image[1] * target[0]


def _inverse_pair(u: int, v: int) -> Tuple[int, int]:
    """(s, t) com s u + t v = 1."""
    s, t, g = gcdex(abs(u), abs(v))
    if int(g) != 1:
        raise ValueError(f"{u} e {v} não são coprimos")
    return int(s) * (-1 if u < 0 else 1), int(t) * (-1 if v < 0 else 1)


def classify_cusp(x: Union[Fraction, int, str]) -> CuspClass:
    """
    Classifica x = p/r pela classe de r mod 4 e constrói a matriz testemunha.

    r = 0 mod 4 -> S_INF, r ímpar -> S_0, r = 2 mod 4 -> S_HALF.

    Raises:
        AssertionError: se a testemunha construída não verifica.
    """
    x = Fraction(x)
    p, r = x.numerator, x.denominator
    if r % 4 == 0:
        kind = CuspKind.S_INF
        # (c, d) = (r, -p) anula o denominador; -a p - b r = 1
        s, t = _inverse_pair(-p, -r)
        witness = ((s, t), (r, -p))
    elif r % 2:
        kind = CuspKind.S_0
        # (a, b) = (r, -p) anula o numerador; r d + p c = 1 com c = 4c'
        d, c4 = _inverse_pair(r, 4 * p)
        witness = ((r, -p), (4 * c4, d))
    else:
        kind = CuspKind.S_HALF
        # M1 = [[p, s], [r, t]] com p t - s r = 1 (t ímpar pois r é par)
        t, minus_s = _inverse_pair(p, r)
        s = -minus_s
        witness = ((t, -s), (2 * t - r, p - 2 * s))
    cusp = CuspClass(x, kind, witness)
    assert cusp.verify(), f"Testemunha inválida para {x}: {witness}"
    return cusp
