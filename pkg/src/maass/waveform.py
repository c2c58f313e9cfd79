"""
Avaliação das formas de Maass phi_0 e phi_{0,W} pela série de Fourier-Bessel
truncada, com cota certificada para a cauda.
"""
from dataclasses import dataclass, field
from math import ceil, exp, log, pi, sqrt
from typing import Dict

import mpmath
from loguru import logger

from src.arithmetic import sigma_coeff_arith, sigma_star_coeff_arith, tw_pos
from src.catalog import NamedSeriesId, build_series
from src.utils.exceptions import TailTooLarge


@dataclass(frozen=True)
class UpperHalfPoint:
    """
    z = x + iy com y > 0.

    As coordenadas ficam em mpf: translações e a involução de Fricke são feitas
    na precisão de trabalho, sem passar por float.
    """

    x: mpmath.mpf
    y: mpmath.mpf

    def __post_init__(self):
        # mpf(mpf) arredondaria para a precisão corrente
        if not isinstance(self.x, mpmath.mpf):
            object.__setattr__(self, "x", mpmath.mpf(self.x))
        if not isinstance(self.y, mpmath.mpf):
            object.__setattr__(self, "y", mpmath.mpf(self.y))
        if not self.y > 0:
            raise ValueError(f"Ponto fora do semiplano superior: y = {self.y}")

    @classmethod
    def from_complex(cls, z: complex) -> "UpperHalfPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(self.x, self.y)

    def shift(self, dx: float, dy: float = 0, precision: int = 50) -> "UpperHalfPoint":
        """z + dx + i dy."""
        with mpmath.workdps(precision):
            return UpperHalfPoint(self.x + mpmath.mpf(dx), self.y + mpmath.mpf(dy))

    def translate(self, dx: float, precision: int = 50) -> "UpperHalfPoint":
        return self.shift(dx, 0, precision)

    def fricke(self, precision: int = 50) -> "UpperHalfPoint":
        """-1/(4z)."""
        with mpmath.workdps(precision):
            w = -1 / (4 * self.to_mpc())
            return UpperHalfPoint(w.real, w.imag)


@dataclass(frozen=True, eq=False)
class MaassEvalContext:
    """
    Dados da soma y^(1/2) sum_n a(n) K_0(2 pi |n| y / scale) e(n x / scale).

    Attributes:
        scale: Denominador lambda (24 para phi_0, 8 para phi_{0,W}).
        coefficients: a(n) para 0 < |n| <= n_max, n = 1 mod scale.
        n_max: Maior |n| incluído.
        precision: Dígitos de trabalho.
        tail_tolerance: Maior cota de cauda aceita.
    """

    scale: int
    coefficients: Dict[int, int] = field(repr=False)
    n_max: int
    precision: int = 30
    tail_tolerance: float = 1e-10
    name: str = "phi"

    def __post_init__(self):
        if self.n_max < self.scale:
            raise ValueError(f"n_max = {self.n_max} menor que a escala {self.scale}")
        for n in self.coefficients:
            if n % self.scale != 1 % self.scale:
                raise ValueError(f"Índice {n} fora do suporte n = 1 mod {self.scale}")

    def reflected(self) -> "MaassEvalContext":
        """Forma u(-conj z): a(n) -> a(-n), usada no semiplano inferior."""
        return MaassEvalContext(
            self.scale,
            {-n: a for n, a in self.coefficients.items()},
            self.n_max,
            self.precision,
            self.tail_tolerance,
            f"{self.name}_refl",
        )

    def with_n_max(self, n_max: int) -> "MaassEvalContext":
        return MaassEvalContext(
            self.scale,
            {n: a for n, a in self.coefficients.items() if abs(n) <= n_max},
            n_max,
            self.precision,
            self.tail_tolerance,
            self.name,
        )


@dataclass(frozen=True)
class PhiValue:
    value: mpmath.mpc
    tail_bound: float


def tail_bound(scale: int, n_max: int, y: float) -> float:
    """
    Cota para sum_{|n| > n_max} |a(n)| y^(1/2) K_0(2 pi |n| y / scale).

    Usa |a(n)| <= 2 sqrt|n| e K_0(t) <= sqrt(pi/2t) e^-t: cada termo fica abaixo
    de sqrt(scale) e^(-2 pi |n| y / scale), somados nos dois sinais.
    """
    y = float(y)
    decay = exp(-2 * pi * y)
    first = exp(-2 * pi * (n_max + 1) * y / scale)
    return 2 * sqrt(scale) * first / (1 - decay)


def required_n_max(scale: int, y: float, tolerance: float) -> int:
    """Menor n_max com tail_bound(scale, n_max, y) <= tolerance."""
    y = float(y)
    decay = 1 - exp(-2 * pi * y)
    n = scale * log(2 * sqrt(scale) / (tolerance * decay)) / (2 * pi * y) - 1
    return max(scale, int(ceil(n)))


def mode(n: int, scale: int, x: mpmath.mpf, y: mpmath.mpf) -> mpmath.mpc:
    """Modo y^(1/2) K_0(2 pi |n| y / scale) e(n x / scale)."""
    arg = 2 * mpmath.pi * abs(n) * y / scale
    return mpmath.sqrt(y) * mpmath.besselk(0, arg) * mpmath.expjpi(2 * mpmath.mpf(n) * x / scale)


def phi_eval(ctx: MaassEvalContext, z: UpperHalfPoint) -> PhiValue:
    """
    Soma truncada com cota de cauda.

    Raises:
        TailTooLarge: se a cota da cauda excede ctx.tail_tolerance.
    """
    bound = tail_bound(ctx.scale, ctx.n_max, z.y)
    if bound > ctx.tail_tolerance:
        raise TailTooLarge(
            f"Cauda de {ctx.name} em y = {z.y} é {bound:.3e} > {ctx.tail_tolerance:.1e}; "
            f"use n_max >= {required_n_max(ctx.scale, z.y, ctx.tail_tolerance)}"
        )
    with mpmath.workdps(ctx.precision):
        x, y = mpmath.mpf(z.x), mpmath.mpf(z.y)
        total = mpmath.mpc(0)
        for n, a in ctx.coefficients.items():
            if a:
                total += a * mode(n, ctx.scale, x, y)
        return PhiValue(+total, bound)


def s_transform_residual(ctx: MaassEvalContext, z: UpperHalfPoint) -> Dict[str, float]:
    """|phi(-1/(4z)) - conj phi(z)| com a soma das cotas de cauda."""
    here = phi_eval(ctx, z)
    there = phi_eval(ctx, z.fricke(ctx.precision))
    residual = abs(there.value - mpmath.conj(here.value))
    return {"residual": float(residual), "tail_bound": here.tail_bound + there.tail_bound}


def translation_residual(ctx: MaassEvalContext, z: UpperHalfPoint) -> Dict[str, float]:
    """|phi(z + 1) - e(1/scale) phi(z)|, nulo termo a termo a menos de arredondamento."""
    here = phi_eval(ctx, z)
    moved = phi_eval(ctx, z.translate(1, ctx.precision))
    with mpmath.workdps(ctx.precision):
        phase = mpmath.expjpi(mpmath.mpf(2) / ctx.scale)
        residual = abs(moved.value - phase * here.value)
    return {"residual": float(residual), "tail_bound": here.tail_bound + moved.tail_bound}


def laplacian_residual(ctx: MaassEvalContext, z: UpperHalfPoint, h: float = 1e-3) -> Dict[str, float]:
    """
    |Delta_h phi - phi/4| com Delta = -y^2 (d_xx + d_yy) em diferenças centrais de 5 pontos.

    Returns:
        residual, relative (dividido por |phi|), e a escala O(h^2) esperada.
    """
    if z.y - h <= 0:
        raise ValueError(f"Passo h = {h} sai do semiplano em y = {z.y}")
    centre = phi_eval(ctx, z).value
    east = phi_eval(ctx, z.shift(h, 0, ctx.precision)).value
    west = phi_eval(ctx, z.shift(-h, 0, ctx.precision)).value
    north = phi_eval(ctx, z.shift(0, h, ctx.precision)).value
    south = phi_eval(ctx, z.shift(0, -h, ctx.precision)).value
    with mpmath.workdps(ctx.precision):
        hh = mpmath.mpf(h) ** 2
        lap = -(mpmath.mpf(z.y) ** 2) * ((east + west + north + south - 4 * centre) / hh)
        residual = abs(lap - centre / 4)
        relative = residual / abs(centre) if abs(centre) else mpmath.inf
    return {"residual": float(residual), "relative": float(relative), "h2_scale": h * h}


# Construtores dos contextos das duas formas


def phi0_context(n_max: int, precision: int = 30, tail_tolerance: float = 1e-10) -> MaassEvalContext:
    """phi_0: T(24k + 1) = S(k) e T(1 - 24k) = S*(k) pelo oráculo de Pell."""
    coeffs: Dict[int, int] = {}
    k = 0
    while 24 * k + 1 <= n_max:
        coeffs[24 * k + 1] = sigma_coeff_arith(k)
        k += 1
    k = 1
    while 24 * k - 1 <= n_max:
        coeffs[1 - 24 * k] = sigma_star_coeff_arith(k)
        k += 1
    logger.debug(f"phi_0 com {len(coeffs)} coeficientes até |n| = {n_max}")
    return MaassEvalContext(24, coeffs, n_max, precision, tail_tolerance, "phi_0")


def phi0w_context(n_max: int, precision: int = 30, tail_tolerance: float = 1e-10) -> MaassEvalContext:
    """
    phi_{0,W}: a(8k + 1) = -[q^k] S[W] (série) e a(-(8k - 1)) = T_W(8k - 1) (oráculo).
    """
    coeffs: Dict[int, int] = {}
    kmax = (n_max - 1) // 8
    shadow = build_series(NamedSeriesId.SW, kmax + 1)
    for k in range(kmax + 1):
        coeffs[8 * k + 1] = int(-shadow.coefficient(k))
    k = 1
    while 8 * k - 1 <= n_max:
        coeffs[1 - 8 * k] = tw_pos(8 * k - 1)
        k += 1
    logger.debug(f"phi_0W com {len(coeffs)} coeficientes até |n| = {n_max}")
    return MaassEvalContext(8, coeffs, n_max, precision, tail_tolerance, "phi_0W")


def single_mode_context(n: int, scale: int = 1, precision: int = 30) -> MaassEvalContext:
    """Contexto com um único modo a(n) = 1 (n_max = max(|n|, scale))."""
    return MaassEvalContext(scale, {n: 1}, max(abs(n), scale), precision, float("inf"), f"mode_{n}")


def fourier_half_sum(ctx: MaassEvalContext, z: complex) -> mpmath.mpc:
    """sum_{n>0} a(n) e(nz/scale) para Im z > 0, sum_{n<0} para Im z < 0."""
    with mpmath.workdps(ctx.precision):
        z = mpmath.mpc(z)
        upper = z.imag > 0
        total = mpmath.mpc(0)
        for n, a in ctx.coefficients.items():
            if a and (n > 0) == upper:
                total += a * mpmath.exp(2j * mpmath.pi * n * z / ctx.scale)
        return +total
