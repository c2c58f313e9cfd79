"""
Contagem de classes de soluções de u^2 - D v^2 = m módulo a ação de unidades.

Usado pelos oráculos de sigma/sigma* (Z[sqrt 6]), pelas contagens assinadas em
Z[sqrt 3] e pela contagem de normas negativas em Z[sqrt 2].
"""
from dataclasses import dataclass
from math import isqrt, sqrt
from typing import Callable, List, Optional, Tuple

from loguru import logger

from src.utils.exceptions import ClassInvariantViolation

Pair = Tuple[int, int]
Weight = Callable[[int, int], int]


@dataclass(frozen=True)
class QuadOrder:
    """Ordem Z[sqrt D] com sua unidade fundamental."""

    D: int
    fundamental_unit: Pair
    unit_norm: int

    def __post_init__(self):
        a, b = self.fundamental_unit
        if a * a - self.D * b * b != self.unit_norm:
            raise ValueError(f"Unidade {self.fundamental_unit} não tem norma {self.unit_norm} em Z[sqrt {self.D}]")

    @property
    def acting_unit(self) -> Pair:
        """Unidade de norma +1 que preserva o sinal da norma (quadrado da fundamental se necessário)."""
        a, b = self.fundamental_unit
        if self.unit_norm == 1:
            return a, b
        return a * a + self.D * b * b, 2 * a * b

    def norm(self, u: int, v: int) -> int:
        return u * u - self.D * v * v

    def window(self, m: int) -> int:
        """Janela |v| <= V(m) que contém um representante de cada classe."""
        a, b = self.acting_unit
        return int(sqrt(abs(m)) * (a + b * sqrt(self.D))) + 2

    def times_unit(self, u: int, v: int, power: int) -> Pair:
        a, b = self.acting_unit
        if power < 0:
            b = -b
        for _ in range(abs(power)):
            u, v = a * u + self.D * b * v, b * u + a * v
        return u, v


ORDER_SQRT6 = QuadOrder(6, (5, 2), 1)
ORDER_SQRT2 = QuadOrder(2, (1, 1), -1)
ORDER_SQRT3 = QuadOrder(3, (2, 1), 1)


@dataclass(frozen=True)
class PellClassSet:
    """Representantes canônicos das classes de u^2 - D v^2 = target."""

    order: QuadOrder
    target: int
    reps: Tuple[Pair, ...]

    def __len__(self) -> int:
        return len(self.reps)


def _canonical_key(pair: Pair) -> Tuple[int, bool, bool]:
    u, v = pair
    return abs(v), v < 0, u < 0


def reduce_pair(order: QuadOrder, u: int, v: int, weight: Optional[Weight] = None) -> Pair:
    """
    Reduz (u, v) ao representante canônico da sua órbita sob <-1, unidade>.

    O canônico minimiza |v|, desempata por v >= 0 e depois u > 0. Com ``weight``,
    confere que o peso é constante ao longo do caminho de redução.

    Raises:
        ClassInvariantViolation: se o peso muda dentro da órbita.
    """
    expected = weight(u, v) if weight else None

    def check(p: Pair) -> None:
        if weight is not None:
            w = weight(*p)
            if w != expected:
                raise ClassInvariantViolation(
                    f"Peso {w} em {p} difere de {expected} em ({u}, {v}) na mesma órbita (D = {order.D})"
                )

    cur = (u, v)
    while True:
        up = order.times_unit(*cur, 1)
        down = order.times_unit(*cur, -1)
        nxt = min((up, down), key=lambda p: abs(p[1]))
        if abs(nxt[1]) < abs(cur[1]):
            check(nxt)
            cur = nxt
            continue
        break
    candidates = [cur, order.times_unit(*cur, 1), order.times_unit(*cur, -1)]
    candidates = [p for p in candidates if abs(p[1]) == abs(cur[1])]
    candidates += [(-x, -y) for x, y in candidates]
    for p in candidates:
        check(p)
    return min(candidates, key=_canonical_key)


def enumerate_solutions(order: QuadOrder, m: int) -> List[Pair]:
    """Todas as soluções de u^2 - D v^2 = m com |v| na janela."""
    sols = []
    V = order.window(m)
    for v in range(-V, V + 1):
        u2 = m + order.D * v * v
        if u2 < 0:
            continue
        u = isqrt(u2)
        if u * u != u2:
            continue
        sols.append((u, v))
        if u:
            sols.append((-u, v))
    return sols


def pell_classes(order: QuadOrder, m: int, weight: Optional[Weight] = None) -> PellClassSet:
    """
    Um representante por classe de u^2 - D v^2 = m.

    Args:
        order: Ordem quadrática.
        m: Norma alvo (não nula, pode ser negativa).
        weight: Peso opcional cuja invariância nas órbitas é conferida.

    Returns:
        PellClassSet com os representantes canônicos ordenados.
    """
    if m == 0:
        raise ValueError("Norma alvo deve ser não nula")
    reps = {reduce_pair(order, u, v, weight) for u, v in enumerate_solutions(order, m)}
    ordered = tuple(sorted(reps, key=lambda p: (abs(p[1]), p[1], p[0])))
    logger.debug(f"D = {order.D}, m = {m}: {len(ordered)} classes")
    return PellClassSet(order, m, ordered)


def sigma_weight(u: int, v: int) -> int:
    """+1 se u + 3v = +-1 mod 12, -1 se u + 3v = +-5 mod 12."""
    r = (u + 3 * v) % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    raise ClassInvariantViolation(f"u + 3v = {r} mod 12 fora de {{+-1, +-5}} em ({u}, {v})")


def signed_class_total(order: QuadOrder, m: int, weight: Weight) -> int:
    """Soma dos pesos sobre as classes de norma m."""
    return sum(weight(u, v) for u, v in pell_classes(order, m, weight).reps)


def sigma_coeff_arith(n: int) -> int:
    """S(n): contagem assinada das classes de u^2 - 6v^2 = 24n + 1."""
    if n < 0:
        raise ValueError(f"Índice deve ser >= 0, recebido {n}")
    return signed_class_total(ORDER_SQRT6, 24 * n + 1, sigma_weight)


def sigma_star_coeff_arith(n: int) -> int:
    """S*(n): a mesma contagem com norma alvo -24n + 1."""
    if n < 1:
        raise ValueError(f"Índice deve ser >= 1, recebido {n}")
    return signed_class_total(ORDER_SQRT6, 1 - 24 * n, sigma_weight)


def class_count(order: QuadOrder, m: int) -> int:
    """Número de classes de elementos com norma exatamente m."""
    return len(pell_classes(order, m))


def signed_class_count(
    order: QuadOrder,
    m: int,
    sign: int = 1,
    modulus_condition: Optional[Tuple[int, Tuple[int, ...]]] = None,
    parity_weight: bool = False
) -> int:
    """
    Classes de u + v sqrt D com u^2 - D v^2 = sign * m, filtradas e ponderadas.

    Args:
        order: Ordem (tipicamente Z[sqrt 3]).
        m: Valor absoluto da norma (>= 1).
        sign: Sinal da norma.
        modulus_condition: (módulo, resíduos aceitos) aplicado à norma N = sign * m.
        parity_weight: Pondera por (-1)^N.
    """
    if m < 1:
        raise ValueError(f"m deve ser >= 1, recebido {m}")
    N = sign * m
    if modulus_condition is not None:
        mod, residues = modulus_condition
        if N % mod not in residues:
            return 0
    count = class_count(order, N)
    if parity_weight and N % 2:
        return -count
    return count
