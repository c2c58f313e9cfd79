"""
Caractere de Dirichlet mod 16 com valores em raízes quartas da unidade e a soma
de divisores T_W(m) = sum_{d | m} chi(d) conj(chi)(m/d).
"""
from dataclasses import dataclass, field
from typing import Dict

from loguru import logger
from sympy import divisors

from src.utils.exceptions import NonRealValue

# chi(r) = i^e(r) em (Z/16)^x, fixado por chi(-1) = 1 e chi(3) = i
EXPONENTS_MOD16 = {1: 0, 3: 1, 9: 2, 11: 3, 15: 0, 13: 1, 7: 2, 5: 3}

_POWERS_OF_I = {0: complex(1, 0), 1: complex(0, 1), 2: complex(-1, 0), 3: complex(0, -1)}


@dataclass(frozen=True)
class Mod16Character:
    """chi: (Z/16)^x -> {1, i, -1, -i}, representado pelo expoente de i."""

    exponents: Dict[int, int] = field(default_factory=lambda: dict(EXPONENTS_MOD16))

    def exponent(self, n: int) -> int:
        """Expoente e(n) com chi(n) = i^e(n).

        Raises:
            ValueError: se n é par (fora do suporte).
        """
        r = n % 16
        if r not in self.exponents:
            raise ValueError(f"{n} não é invertível mod 16")
        return self.exponents[r]

    def __call__(self, n: int) -> complex:
        if n % 2 == 0:
            return complex(0, 0)
        return _POWERS_OF_I[self.exponent(n)]

    def is_multiplicative(self) -> bool:
        residues = list(self.exponents)
        return all(
            (self.exponent(a) + self.exponent(b)) % 4 == self.exponent(a * b)
            for a in residues
            for b in residues
        )


CHI_W = Mod16Character()


def tw_pos(m: int, chi: Mod16Character = CHI_W) -> int:
    """
    T_W(m) = sum_{d | m} chi(d) conj(chi)(m/d), calculada exatamente.

    Args:
        m: Índice positivo; índices pares devolvem 0.
        chi: Caractere mod 16.

    Returns:
        Valor inteiro da soma.

    Raises:
        ValueError: se m < 1.
        NonRealValue: se a parte imaginária não se anula.
    """
    if m < 1:
        raise ValueError(f"m deve ser positivo, recebido {m}")
    if m % 2 == 0:
        return 0
    counts = [0, 0, 0, 0]
    for d in divisors(m):
        counts[(chi.exponent(d) - chi.exponent(m // d)) % 4] += 1
    if counts[1] != counts[3]:
        logger.error(f"T_W({m}) com parte imaginária {counts[1] - counts[3]}")
        raise NonRealValue(f"T_W({m}) não é real: contagens por potência de i = {counts}")
    return counts[0] - counts[2]
