"""
Somas duplas de theta indefinidas que servem de oráculo independente para W1, W2 e LL.
"""
from collections import defaultdict
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from loguru import logger

from src.series import TruncatedQSeries
from src.series.truncated import Rational


class ThetaId(str, Enum):
    W1_THETA = "W1_THETA"
    W2_THETA = "W2_THETA"
    LL_THETA = "LL_THETA"


Block = Iterator[Tuple[int, int]]


def _w1_block(n: int) -> Block:
    # (-1)^(n+j) q^(2n^2+n-j^2) (1 - q^(2n+1)), |j| <= n
    for j in range(-n, n + 1):
        s = -1 if (n + j) % 2 else 1
        e = 2 * n * n + n - j * j
        yield e, s
        yield e + 2 * n + 1, -s


def _w2_block(n: int) -> Block:
    # (-1)^n q^(2n^2-n-j^2+j) (1 + q^(2n)), -n < j <= n
    s = -1 if n % 2 else 1
    for j in range(-n + 1, n + 1):
        e = 2 * n * n - n - j * j + j
        yield e, s
        yield e + 2 * n, s


def _ll_block(n: int) -> Block:
    # (-1)^(n+j+1) q^(2n^2-j^2), -n < j <= n
    for j in range(-n + 1, n + 1):
        yield 2 * n * n - j * j, -1 if (n + j + 1) % 2 else 1


# id -> (primeiro n, bloco, expoente mínimo do bloco n)
THETA_SUMS = {
    ThetaId.W1_THETA: (0, _w1_block, lambda n: n * n + n),
    ThetaId.W2_THETA: (1, _w2_block, lambda n: n * n),
    ThetaId.LL_THETA: (1, _ll_block, lambda n: n * n),
}


def theta_double_sum(theta_id: ThetaId, bound: Rational) -> TruncatedQSeries:
    """
    Expansão exata da soma dupla até q^bound.

    Os blocos em n são somados enquanto o menor expoente do bloco fica abaixo de bound.
    """
    theta_id = ThetaId(theta_id)
    bound = Fraction(bound)
    n, block, min_exp = THETA_SUMS[theta_id]
    terms: Dict[int, int] = defaultdict(int)
    while min_exp(n) < bound:
        for e, c in block(n):
            if e < bound:
                terms[e] += c
        n += 1
    logger.debug(f"{theta_id.value}: {n} blocos até q^{bound}")
    return TruncatedQSeries.from_terms(dict(terms), bound)
