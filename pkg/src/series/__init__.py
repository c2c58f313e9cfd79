from src.series.qproduct import (
    Factor,
    InfiniteProductExpr,
    Monomial,
    PochBlock,
    QProductExpr,
    expand,
    multiply_expr,
    poch,
    poch_inverse,
)
from src.series.summation import iter_term_series, sum_tails, sum_terms
from src.series.truncated import TruncatedQSeries, exact

__all__ = [
    "Factor",
    "InfiniteProductExpr",
    "Monomial",
    "PochBlock",
    "QProductExpr",
    "TruncatedQSeries",
    "exact",
    "expand",
    "iter_term_series",
    "multiply_expr",
    "poch",
    "poch_inverse",
    "sum_tails",
    "sum_terms",
]
