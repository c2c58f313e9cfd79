#!/usr/bin/env python3
"""
Módulo principal da CLI do qrenorm.
"""
import sys
import traceback
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import click
from loguru import logger

from src.arithmetic import (
    ORDER_SQRT2,
    ORDER_SQRT3,
    ORDER_SQRT6,
    CoeffKind,
    CoeffTable,
    f_coeff_arith,
    ll_coeff_arith,
    signed_class_count,
)
from src.catalog import IdentityId, NamedSeriesId, SeriesFactory, build_series
from src.maass import (
    UpperHalfPoint,
    calibration_constant,
    fourier_half_sum,
    laplacian_residual,
    period_function_sample,
    period_integral,
    phi0_context,
    phi0w_context,
    quantum_eval_fW,
    quantum_eval_sigma,
    required_n_max,
    s_transform_residual,
    translation_residual,
)
from src.reports import ReportWriter, render
from src.utils.config_loader import ConfigLoader, RunConfig
from src.utils.exceptions import PrecisionUnreachable, QRenormError
from src.utils.logger import setup_logger
from src.verification import SUITE_NAMES, SuiteRunner
from src.verification.suites import noise_floor

ORACLES = ["sigma", "sigma_star", "tw", "ideal", "signed"] + [f"f{k}" for k in range(1, 9)] + ["ll"]

ORDERS = {"2": ORDER_SQRT2, "3": ORDER_SQRT3, "6": ORDER_SQRT6}

# Oráculos com tabela em cache: nome -> (tipo, índice da tabela, menor n)
CACHED_ORACLES = {
    "sigma": (CoeffKind.T_SIGMA, lambda n: 24 * n + 1, 0),
    "sigma_star": (CoeffKind.T_SIGMA, lambda n: 1 - 24 * n, 1),
    "tw": (CoeffKind.TW_POS, lambda n: n, 1),
    "ideal": (CoeffKind.IDEAL_COUNT, lambda n: n, 1),
}

# Formas de Maass disponíveis: nome -> (escala, construtor do contexto)
FORMS = {"phi0w": (8, phi0w_context), "phi0": (24, phi0_context)}


def common_options(command: Callable) -> Callable:
    """Opções compartilhadas pelos comandos que produzem relatório."""
    options = [
        click.option('--bound', '-b', type=int, help='Expoente de truncamento (padrão: default_bound)'),
        click.option('--precision', '-p', type=int, help='Dígitos decimais de trabalho'),
        click.option('--format', 'output_format', type=click.Choice(['json', 'csv', 'table']), help='Formato de saída'),
        click.option('--config', 'config_path', help='Arquivo de configuração chave=valor'),
        click.option('--output-dir', '-o', help='Diretório onde gravar o relatório'),
        click.option('--log-dir', help='Diretório para logs'),
        click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR']), help='Nível de log'),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _prepare(options: Dict[str, Any]) -> RunConfig:
    """Monta o RunConfig (padrões < arquivo < ambiente < opções) e configura o logger."""
    config = ConfigLoader().build_run_config(
        config_path=options.get('config_path'),
        precision_digits=options.get('precision'),
        output_format=options.get('output_format'),
        output_dir=options.get('output_dir'),
        log_level=options.get('log_level'),
    )
    setup_logger(options.get('log_dir'), config.log_level, run_name=click.get_current_context().info_name)
    return config


def _bound(options: Dict[str, Any], config: RunConfig) -> int:
    bound = options.get('bound')
    if bound is None:
        return config.default_bound
    if bound < 0:
        raise ValueError(f"--bound deve ser >= 0, recebido {bound}")
    return bound


def _run(action: Callable[[], int]) -> None:
    """Executa o comando e converte exceções em códigos de saída."""
    try:
        code = action()
    except QRenormError as e:
        message = str(e)
        if not message.startswith(type(e).__name__):
            message = f"{type(e).__name__}: {message}"
        logger.error(message)
        logger.error(traceback.format_exc())
        click.echo(message, err=True)
        code = e.exit_code
    except ValueError as e:
        logger.error(f"Entrada inválida: {e}")
        logger.error(traceback.format_exc())
        click.echo(f"Entrada inválida: {e}", err=True)
        code = 2
    except Exception as e:
        logger.error(f"Erro inesperado: {e}")
        logger.error(traceback.format_exc())
        click.echo(f"Erro inesperado: {e}", err=True)
        code = 1
    sys.exit(code)


def _emit(config: RunConfig, payload: Dict[str, Any], rows: List[Dict[str, Any]], filename: str) -> None:
    click.echo(render(payload, rows, config.output_format))
    if config.output_dir:
        ReportWriter(config.output_dir).write(payload, rows, config.output_format, filename)


def _plain(value: Fraction) -> Any:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Racional inválido: {text!r}") from None


@click.group()
def cli():
    """Renormalização de q-séries: expansões, identidades, oráculos e verificações numéricas."""
    pass


@cli.command()
@click.argument('series')
@common_options
def expand(series: str, **options):
    """Expande uma série nomeada até q^bound."""
    def action() -> int:
        config = _prepare(options)
        bound = _bound(options, config)
        series_id = SeriesFactory.resolve(series)
        result = build_series(series_id, bound)
        payload: Dict[str, Any] = {"command": "expand", "id": series_id.value, **result.to_dict()}
        if result.grid == 1:
            payload["coefficients"] = [_plain(c) for c in result.coefficients()]
        rows = [
            dict(zip(("exponent_num", "exponent_den", "num", "den"), row))
            for row in result.to_rows()
        ]
        logger.info(f"{series_id.value} expandida até q^{bound}: {len(rows)} termos não nulos")
        _emit(config, payload, rows, f"expand_{series_id.value}")
        return 0

    _run(action)


@cli.command()
@click.argument('suite', type=click.Choice(list(SUITE_NAMES) + ['all']))
@click.option('--progress', is_flag=True, help='Mostrar barra de progresso')
@common_options
def verify(suite: str, progress: bool, **options):
    """Executa uma suíte de verificação; saída 0 somente se tudo passar."""
    def action() -> int:
        config = _prepare(options)
        runner = SuiteRunner(
            _bound(options, config),
            config.precision_digits,
            parallelism=config.parallelism,
            cache_dir=config.oracle_cache_path,
            stall_window=config.stall_window,
            tail_tolerance=config.tail_tolerance,
            progress=progress,
            max_digits=config.max_validated_digits,
        )
        report = runner.run(suite)
        _emit(config, report.to_dict(), report.to_rows(), f"verify_{suite}")
        if report.passed:
            return 0
        first = report.failures[0]
        mismatch = first.detail.get("first_mismatch", first.detail.get("error"))
        click.echo(f"Falha em {first.suite}/{first.check} (primeira divergência: {mismatch})", err=True)
        return 1

    _run(action)


def oracle_value(oracle: str, n: int, cache_dir: Optional[str] = None, order: str = "3", sign: int = 1) -> int:
    """
    Valor exato de um oráculo aritmético.

    Args:
        oracle: Nome do oráculo (ver ORACLES).
        n: Índice.
        cache_dir: Diretório do cache de tabelas (opcional).
        order: D da ordem quadrática usada por ``signed``.
        sign: Sinal da norma usado por ``signed``.

    Raises:
        ValueError: se o índice é inválido para o oráculo.
    """
    oracle = oracle.lower()
    if oracle in CACHED_ORACLES:
        kind, index_of, smallest = CACHED_ORACLES[oracle]
        if n < smallest:
            raise ValueError(f"Índice de {oracle} deve ser >= {smallest}, recebido {n}")
        table = CoeffTable.cached(cache_dir, kind)
        index = index_of(n)
        known = index in table
        value = table.get(index)
        if cache_dir and not known:
            table.save(cache_dir)
        return value
    if oracle == "signed":
        return signed_class_count(ORDERS[order], n, sign=sign)
    if oracle == "ll":
        return ll_coeff_arith(n)
    if oracle.startswith("f") and oracle[1:].isdigit():
        return f_coeff_arith(int(oracle[1:]), n)
    raise ValueError(f"Oráculo desconhecido: {oracle}")


@cli.command()
@click.argument('oracle', type=click.Choice(ORACLES, case_sensitive=False))
@click.argument('n', type=int)
@click.option('--order', type=click.Choice(sorted(ORDERS)), default='3', help='D da ordem Z[sqrt D] (oráculo signed)')
@click.option('--sign', type=click.Choice(['1', '-1']), default='1', help='Sinal da norma (oráculo signed)')
@common_options
def coeff(oracle: str, n: int, order: str, sign: str, **options):
    """Imprime o valor exato de um oráculo de coeficientes."""
    def action() -> int:
        config = _prepare(options)
        value = oracle_value(oracle, n, config.oracle_cache_path, order, int(sign))
        payload = {"command": "coeff", "oracle": oracle.lower(), "n": n, "value": value}
        _emit(config, payload, [{"oracle": oracle.lower(), "n": n, "value": value}], f"coeff_{oracle.lower()}_{n}")
        return 0

    _run(action)


@cli.command()
@click.argument('check', type=click.Choice(['s-transform', 'translate', 'laplacian', 'period']))
@click.option('--x', 'x', type=float, default=0.3, help='Parte real de z')
@click.option('--y', 'y', type=float, default=0.8, help='Parte imaginária de z')
@click.option('--h', 'h', type=float, default=1e-3, help='Passo do estêncil do laplaciano')
@click.option('--n-max', type=int, help='Truncamento da série de Fourier (padrão: pela cota de cauda)')
@click.option('--form', type=click.Choice(sorted(FORMS)), default='phi0w', help='Forma de Maass avaliada')
@common_options
def maass(check: str, x: float, y: float, h: float, n_max: Optional[int], form: str, **options):
    """Resíduos numéricos das formas de Maass em um ponto."""
    def action() -> int:
        config = _prepare(options)
        scale, builder = FORMS[form]
        precision = config.precision_digits
        if precision > config.max_validated_digits:
            raise PrecisionUnreachable(
                f"Precisão de {precision} dígitos acima da faixa validada ({config.max_validated_digits})"
            )
        tolerance = config.tail_tolerance
        if check == 'period':
            if y == 0:
                raise ValueError("Integral de período indefinida sobre o eixo real")
            lowest = abs(y)
        else:
            point = UpperHalfPoint(x, y)
            lowest = {
                's-transform': min(point.y, point.fricke().y),
                'translate': point.y,
                'laplacian': point.y - h,
            }[check]
            if lowest <= 0:
                raise ValueError(f"Passo h = {h} sai do semiplano em y = {y}")
        ctx = builder(n_max or required_n_max(scale, lowest, tolerance), precision, tolerance)

        tail = 0.0
        if check == 's-transform':
            report = s_transform_residual(ctx, point)
            residual, tail = report["residual"], report["tail_bound"]
            passed = residual < 10 * tail + noise_floor(precision)
        elif check == 'translate':
            report = translation_residual(ctx, point)
            residual, tail = report["residual"], report["tail_bound"]
            passed = residual < noise_floor(precision)
        elif check == 'laplacian':
            report = laplacian_residual(ctx, point, h)
            residual = report["relative"]
            passed = residual < 1e-4
        else:
            z = complex(x, y)
            measured = complex(period_integral(ctx, z, config.quadrature_tolerance))
            expected = calibration_constant() * complex(fourier_half_sum(ctx, z))
            gap = abs(measured - expected)
            residual = gap / abs(expected) if abs(expected) > 0 else gap
            passed = residual < 1e-6

        payload = {
            "command": "maass",
            "check": check,
            "form": form,
            "grid": f"{x}+{y}i",
            "n_max": ctx.n_max,
            "max_residual": residual,
            "tail_bound": tail,
            "pass": passed,
        }
        _emit(config, payload, [payload], f"maass_{check}")
        return 0 if passed else 1

    _run(action)


@cli.command()
@click.argument('target', type=click.Choice(['sigma-cohen', 'fw', 'period-sample']))
@click.option('--x', 'xs', multiple=True, help='Racional p/q (pode repetir)')
@click.option('--gamma', type=click.Choice(['A', 'B', 'C'], case_sensitive=False), default='B', help='Gerador de Gamma_0(4)')
@click.option('--no-calibrate', is_flag=True, help='Não normalizar h_B pela constante de calibração')
@common_options
def quantum(target: str, xs: tuple, gamma: str, no_calibrate: bool, **options):
    """Avaliação das formas modulares quânticas em raízes da unidade."""
    def action() -> int:
        config = _prepare(options)
        precision = config.precision_digits
        points = [_rational(x) for x in xs]
        if target == 'period-sample':
            if not points:
                points = [Fraction(n, 3 * n + 1) for n in range(5, 90, 12)]
            samples = period_function_sample(gamma, points, precision, calibrate=not no_calibrate)
            rows = [s.to_row() for s in samples]
            payload = {"command": "quantum", "target": target, "gamma": gamma.upper(), "samples": rows}
            _emit(config, payload, rows, f"quantum_period_{gamma.upper()}")
            return 0
        if not points:
            raise ValueError(f"{target} requer ao menos um --x")
        if target == 'sigma-cohen':
            values = [quantum_eval_sigma(x, precision).to_dict() for x in points]
            rows = [
                {k: v for k, v in value.items() if k not in ("sigma", "sigma_star", "terms")}
                for value in values
            ]
            passed = all(v["cohen_residual"] < 1e-12 for v in values)
        else:
            values = [quantum_eval_fW(x, precision).to_dict() for x in points]
            rows = [
                {"x": v["x"], "cusp": v["cusp"], "re": v["value"][0], "im": v["value"][1], "terms": v["terms"]}
                for v in values
            ]
            passed = True
        payload = {"command": "quantum", "target": target, "values": values, "pass": passed}
        _emit(config, payload, rows, f"quantum_{target}")
        return 0 if passed else 1

    _run(action)


@cli.command(name='list')
def list_catalog():
    """Lista séries, identidades, suítes e oráculos disponíveis."""
    click.echo("Séries:")
    for series_id in NamedSeriesId:
        click.echo(f"  {series_id.value}")
    click.echo("\nIdentidades:")
    for identity in IdentityId:
        click.echo(f"  {identity.value}")
    click.echo("\nSuítes:")
    for suite in list(SUITE_NAMES) + ['all']:
        click.echo(f"  {suite}")
    click.echo("\nOráculos:")
    click.echo(f"  {', '.join(ORACLES)}")


if __name__ == "__main__":
    cli()
