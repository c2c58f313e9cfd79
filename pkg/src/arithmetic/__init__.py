from src.arithmetic.character import CHI_W, Mod16Character, tw_pos
from src.arithmetic.coeff_table import CoeffKind, CoeffTable
from src.arithmetic.ideals import f_coeff_arith, ideal_count, ll_coeff_arith
from src.arithmetic.quadratic import (
    ORDER_SQRT2,
    ORDER_SQRT3,
    ORDER_SQRT6,
    PellClassSet,
    QuadOrder,
    pell_classes,
    sigma_coeff_arith,
    sigma_star_coeff_arith,
    signed_class_count,
)
from src.arithmetic.theta import ThetaId, theta_double_sum

__all__ = [
    "CHI_W",
    "CoeffKind",
    "CoeffTable",
    "Mod16Character",
    "ORDER_SQRT2",
    "ORDER_SQRT3",
    "ORDER_SQRT6",
    "PellClassSet",
    "QuadOrder",
    "ThetaId",
    "f_coeff_arith",
    "ideal_count",
    "ll_coeff_arith",
    "pell_classes",
    "sigma_coeff_arith",
    "sigma_star_coeff_arith",
    "signed_class_count",
    "theta_double_sum",
]
