"""
Integrais de período da forma de Green ao longo do raio vertical de z a i infinito.
"""
from functools import lru_cache

import mpmath
from loguru import logger

from src.maass.waveform import MaassEvalContext, single_mode_context
from src.utils.exceptions import QuadratureNotConverged


def _waveform_with_gradient(ctx: MaassEvalContext, x: mpmath.mpf, y: mpmath.mpf):
    """(u, u_x, u_y) da soma truncada em (x, y)."""
    u = mpmath.mpc(0)
    ux = mpmath.mpc(0)
    uy = mpmath.mpc(0)
    sy = mpmath.sqrt(y)
    for n, a in ctx.coefficients.items():
        if not a:
            continue
        alpha = 2 * mpmath.pi * abs(n) / ctx.scale
        beta = 2 * mpmath.pi * n / ctx.scale
        phase = a * mpmath.expj(beta * x)
        k0 = mpmath.besselk(0, alpha * y)
        k1 = mpmath.besselk(1, alpha * y)
        u += phase * sy * k0
        ux += phase * sy * k0 * 1j * beta
        uy += phase * (k0 / (2 * sy) - sy * alpha * k1)
    return u, ux, uy


def _upper_period(ctx: MaassEvalContext, x0: float, y0: float, tolerance: float) -> mpmath.mpc:
    with mpmath.workdps(ctx.precision):
        x0, y0 = mpmath.mpf(x0), mpmath.mpf(y0)

        def integrand(t):
            y = y0 + t * t
            u, ux, uy = _waveform_with_gradient(ctx, x0, y)
            s = y + y0
            green = (ux - 1j * uy) * mpmath.sqrt(y) / mpmath.sqrt(s)
            weight = 1j * u * t * t / (2 * mpmath.sqrt(y) * s ** mpmath.mpf(1.5))
            return green + weight

        value, error = mpmath.quad(integrand, [0, 1, mpmath.inf], error=True)
        if error > tolerance:
            raise QuadratureNotConverged(
                f"Quadratura de {ctx.name} em {mpmath.nstr(x0, 6)} + {mpmath.nstr(y0, 6)}i "
                f"com erro estimado {mpmath.nstr(error, 3)} > {tolerance:.1e}"
            )
        f1 = 1j * value
        return +(-2 / mpmath.pi * f1)


def period_integral(ctx: MaassEvalContext, z: complex, tolerance: float = 1e-8) -> mpmath.mpc:
    """
    -(2/pi) vezes a integral da forma de Green de z a i infinito.

    No semiplano superior corresponde a sum_{n>0} a(n) e(nz/scale); no inferior,
    a integral é feita para a forma refletida em -z e corresponde a sum_{n<0}.

    Raises:
        ValueError: se Im z = 0.
        QuadratureNotConverged: se a estimativa de erro excede ``tolerance``.
    """
    z = complex(z)
    if z.imag == 0:
        raise ValueError("Integral de período indefinida sobre o eixo real")
    if z.imag > 0:
        value = _upper_period(ctx, z.real, z.imag, tolerance)
    else:
        value = _upper_period(ctx.reflected(), -z.real, -z.imag, tolerance)
    logger.debug(f"Período de {ctx.name} em {z}: {mpmath.nstr(value, 10)}")
    return value


@lru_cache(maxsize=8)
def calibration_constant(precision: int = 20) -> complex:
    """
    Razão medida entre o período de um modo isolado e sua forma fechada e(z) em z = 0.2 + 0.9i.
    """
    z = complex(0.2, 0.9)
    ctx = single_mode_context(1, scale=1, precision=precision)
    measured = period_integral(ctx, z)
    with mpmath.workdps(precision):
        expected = mpmath.exp(2j * mpmath.pi * mpmath.mpc(z))
        ratio = complex(measured / expected)
    logger.debug(f"Constante de calibração do período: {ratio}")
    return ratio
