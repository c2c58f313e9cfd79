"""
Contagem de ideais de norma m em Z[sqrt 2] e os oráculos de coeficientes das
famílias f1-f8 e LL.
"""
from typing import Collection, Optional

from sympy import factorint

from src.arithmetic.quadratic import ORDER_SQRT2, ORDER_SQRT3, QuadOrder, class_count, signed_class_count

WEIGHTS = ("kronecker_minus4", "parity_sign")


def _local_count(p: int, e: int) -> int:
    if p == 2:
        return 1
    if p % 8 in (1, 7):
        return e + 1
    return 0 if e % 2 else 1


def kronecker_minus4(n: int) -> int:
    """(-4 / n): 0 para n par, +1 se n = 1 mod 4, -1 se n = 3 mod 4."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def ideal_count(
    order: QuadOrder,
    m: int,
    residue_condition: Optional[Collection[int]] = None,
    weight: Optional[str] = None
) -> int:
    """
    Número de ideais de Z[sqrt 2] com norma m, filtrado e ponderado.

    Args:
        order: Deve ser Z[sqrt 2].
        m: Norma (>= 1).
        residue_condition: Resíduos mod 16 aceitos para m.
        weight: None, 'kronecker_minus4' ou 'parity_sign'.

    Returns:
        Contagem (com peso) de ideais de norma m.
    """
    if order.D != 2:
        raise ValueError(f"Contagem de ideais implementada só para D = 2, recebido D = {order.D}")
    if m < 1:
        raise ValueError(f"m deve ser >= 1, recebido {m}")
    if weight is not None and weight not in WEIGHTS:
        raise ValueError(f"Peso desconhecido: {weight}")
    if residue_condition is not None and m % 16 not in residue_condition:
        return 0
    total = 1
    for p, e in factorint(m).items():
        total *= _local_count(p, e)
        if not total:
            return 0
    if weight == "kronecker_minus4":
        total *= kronecker_minus4(m)
    elif weight == "parity_sign":
        total *= -1 if m % 2 else 1
    return total


def _r(m: int, **kwargs) -> int:
    return ideal_count(ORDER_SQRT2, m, **kwargs)


def f_coeff_arith(k: int, n: int) -> int:
    """
    Coeficiente de q^n em f_k calculado aritmeticamente.

    f1-f4 contam ideais de Z[sqrt 2]; f5-f8 contam classes de elementos de
    Z[sqrt 3] sob <-1, 2 + sqrt 3> com as normas e sinais de cada família.

    Args:
        k: Índice da família (1 a 8).
        n: Expoente (>= 0).
    """
    if n < 0:
        raise ValueError(f"Expoente deve ser >= 0, recebido {n}")
    if k == 1:
        return _r(16 * n + 1, residue_condition={1})
    if k == 2:
        return _r(16 * n - 7, residue_condition={9}) if n else 0
    if k == 3:
        return _r(2 * n + 1, weight="kronecker_minus4")
    if k == 4:
        return -_r(n, weight="parity_sign") if n else 0
    if k == 5:
        return class_count(ORDER_SQRT3, 4 * n + 1)
    if k == 6:
        return -signed_class_count(ORDER_SQRT3, 4 * n - 1, sign=-1) if n else 0
    if k == 7:
        return -signed_class_count(ORDER_SQRT3, 3 * n + 1, parity_weight=True)
    if k == 8:
        return signed_class_count(ORDER_SQRT3, 3 * n - 1, sign=-1, parity_weight=True) if n else 0
    raise ValueError(f"Família f{k} inexistente")


def ll_coeff_arith(m: int) -> int:
    """Coeficiente de q^m em LL: classes de norma -m em Z[sqrt 2] sob 3 + 2 sqrt 2, com sinal."""
    if m < 0:
        raise ValueError(f"Expoente deve ser >= 0, recebido {m}")
    if m == 0:
        return 0
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return -sign * signed_class_count(ORDER_SQRT2, m, sign=-1)
