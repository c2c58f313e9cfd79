"""
Suítes de verificação executadas por ``qrenorm verify``.

Cada verificação é uma função de módulo que devolve um CheckResult com dados
simples, de modo que possa rodar em processos separados.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np
from loguru import logger
from tqdm import tqdm

from src.arithmetic import CHI_W, CoeffKind, CoeffTable, f_coeff_arith, ll_coeff_arith
from src.catalog import GHOST_OF, IdentityId, NamedSeriesId, build_series, verify_identity
from src.maass import (
    UpperHalfPoint,
    bessel_k,
    calibration_constant,
    fourier_half_sum,
    k_half_closed_form,
    laplacian_residual,
    period_function_sample,
    period_integral,
    phi0_context,
    phi0w_context,
    phi_eval,
    quantum_eval_fW,
    quantum_eval_sigma,
    required_n_max,
    s_transform_residual,
    single_mode_context,
    translation_residual,
)
from src.maass.bessel import VALIDATED_DIGITS
from src.renorm import SHADOW_PAIRS, Renormalizer
from src.utils.exceptions import DomainHole, PoleAtPoint, QRenormError

SUITE_NAMES = ("identities", "renorm", "arithmetic", "maass", "quantum")

# Semente das amostras aleatórias das suítes numéricas
SEED = 20240101

# Raios do perfil de decaimento
DECAY_RADII = (0.8, 0.9, 0.95, 0.99)

# Casos de decaimento: (fantasma, ordem da raiz, raios, raio a partir do qual |G| decresce)
DECAY_CASES: List[Tuple[NamedSeriesId, int, Tuple[float, ...], Optional[float]]] = [
    (NamedSeriesId.GHOST_SIGMA, 1, DECAY_RADII, None),
    (NamedSeriesId.GHOST_SIGMA, 1, (0.5, 0.7, 0.9), None),
    (NamedSeriesId.GHOST_SIGMA_STAR, 2, DECAY_RADII, None),
    # em zeta = i os zeros de (-1; q^2) competem com os polos da soma par; |G| sobe até r = 0.9
    (NamedSeriesId.GHOST_W, 4, DECAY_RADII, 0.9),
    (NamedSeriesId.GHOST_SW, 1, DECAY_RADII, None),
]

# Raízes onde o fantasma não é definido: (fantasma, ordem, exceção esperada)
UNDEFINED_DECAY_CASES: List[Tuple[NamedSeriesId, int, type]] = [
    (NamedSeriesId.GHOST_SIGMA, 2, PoleAtPoint),
    (NamedSeriesId.GHOST_SIGMA, 4, PoleAtPoint),
    (NamedSeriesId.GHOST_W, 1, PoleAtPoint),
    (NamedSeriesId.GHOST_W, 2, DomainHole),
]

# Alvos de tabela: (tipo, série, índice = a n + b, sinal, n inicial)
ORACLE_TABLE_CHECKS: Dict[str, Tuple[CoeffKind, NamedSeriesId, int, int, int, int]] = {
    "SIGMA_ORACLE": (CoeffKind.T_SIGMA, NamedSeriesId.SIGMA, 24, 1, 1, 0),
    "SIGMA_STAR_ORACLE": (CoeffKind.T_SIGMA, NamedSeriesId.SIGMA_STAR, -24, 1, 1, 1),
    "W_ORACLE": (CoeffKind.TW_POS, NamedSeriesId.W, 8, -1, 1, 1),
    "SW_ORACLE": (CoeffKind.TW_POS, NamedSeriesId.SW, 8, 1, -1, 0),
}

F_SERIES = {k: NamedSeriesId(f"F{k}") for k in range(1, 9)}


@dataclass
class CheckResult:
    suite: str
    check: str
    passed: bool
    max_residual: Optional[float] = None
    detail: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "check": self.check,
            "pass": self.passed,
            "max_residual": self.max_residual,
            "detail": self.detail,
        }

    def to_row(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "check": self.check,
            "pass": self.passed,
            "max_residual": self.max_residual,
        }


@dataclass
class SuiteReport:
    suite: str
    bound: int
    precision: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "bound": self.bound,
            "precision": self.precision,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_rows(self) -> List[Dict[str, object]]:
        return [c.to_row() for c in self.checks]


Check = Tuple[str, str, Callable[[], CheckResult]]


def _guarded(suite: str, name: str, run: Callable[[], CheckResult]) -> CheckResult:
    """Executa a verificação; erros do domínio viram falha com diagnóstico."""
    try:
        return run()
    except QRenormError as e:
        logger.error(f"{suite}/{name}: {type(e).__name__}: {e}")
        return CheckResult(suite, name, False, detail={"error": type(e).__name__, "message": str(e)})


def noise_floor(precision: int) -> float:
    return 10.0 ** (5 - precision)


# Identidades


def check_identity(identity: IdentityId, bound: int) -> CheckResult:
    report = verify_identity(identity, bound)
    return CheckResult("identities", identity.value, report.passed, detail=report.to_dict())


def identity_checks(bound: int, precision: int, cache_dir: Optional[str]) -> List[Check]:
    return [("identities", i.value, partial(check_identity, i, bound)) for i in IdentityId]


# Renormalização


def check_involution(series_id: NamedSeriesId, bound: int, stall_window: int) -> CheckResult:
    report = Renormalizer(stall_window=stall_window).check_involution(series_id, bound)
    return CheckResult("renorm", report.id, report.passed, detail=report.to_dict())


def check_ghost(series_id: NamedSeriesId, bound: int, stall_window: int) -> CheckResult:
    """tails - sinal * parceira coincide com o fantasma catalogado."""
    renormalizer = Renormalizer(stall_window=stall_window)
    partner, sign = SHADOW_PAIRS[series_id]
    family = renormalizer.factory.get_family(series_id)
    tails, used = renormalizer.tails_with_count(family, bound)
    expected = tails - build_series(partner, bound).scale(sign)
    ghost = build_series(GHOST_OF[series_id], bound)
    mismatch = expected.truncate(bound).first_mismatch(ghost.truncate(bound))
    name = f"GHOST_{series_id.value}"
    return CheckResult(
        "renorm",
        name,
        mismatch is None,
        detail={"n_used": used, "first_mismatch": None if mismatch is None else str(mismatch)},
    )


def check_decay(
    ghost_id: NamedSeriesId,
    order: int,
    radii: Tuple[float, ...],
    precision: int,
    monotone_from: Optional[float] = None,
) -> CheckResult:
    profile = Renormalizer().ghost_decay_profile(ghost_id, order, radii, precision)
    radii_text = ",".join(f"{r:g}" for r in radii)
    return CheckResult(
        "renorm",
        f"DECAY_{ghost_id.value}_N{order}_r{radii_text}",
        profile.is_strictly_decreasing(monotone_from),
        detail={"rows": profile.to_rows(), "monotone_from": monotone_from},
    )


def check_undefined_decay(ghost_id: NamedSeriesId, order: int, expected: type) -> CheckResult:
    """A raiz deve ser recusada com a exceção esperada."""
    name = f"UNDEFINED_{ghost_id.value}_N{order}"
    try:
        Renormalizer().ghost_decay_profile(ghost_id, order, DECAY_RADII, 20)
    except QRenormError as e:
        return CheckResult("renorm", name, isinstance(e, expected), detail={"raised": type(e).__name__})
    return CheckResult("renorm", name, False, detail={"raised": None, "expected": expected.__name__})


def renorm_checks(bound: int, precision: int, cache_dir: Optional[str], stall_window: int = 50) -> List[Check]:
    checks: List[Check] = []
    for series_id in SHADOW_PAIRS:
        checks.append(("renorm", f"INVOLUTION_{series_id.value}", partial(check_involution, series_id, bound, stall_window)))
        checks.append(("renorm", f"GHOST_{series_id.value}", partial(check_ghost, series_id, bound, stall_window)))
    for ghost_id, order, radii, monotone_from in DECAY_CASES:
        checks.append(
            ("renorm", f"DECAY_{ghost_id.value}_N{order}", partial(check_decay, ghost_id, order, radii, min(precision, 30), monotone_from))
        )
    for ghost_id, order, expected in UNDEFINED_DECAY_CASES:
        checks.append(("renorm", f"UNDEFINED_{ghost_id.value}_N{order}", partial(check_undefined_decay, ghost_id, order, expected)))
    return checks


# Oráculos aritméticos


def _mismatch_detail(mismatches: List[Tuple[int, object, object]]) -> Dict[str, object]:
    if not mismatches:
        return {}
    n, oracle, series = mismatches[0]
    return {"first_mismatch": n, "oracle": str(oracle), "series": str(series), "count": len(mismatches)}


def check_oracle_table(name: str, bound: int, cache_dir: Optional[str]) -> CheckResult:
    """Coeficientes da série contra a tabela do oráculo (com cache opcional)."""
    kind, series_id, a, b, sign, start = ORACLE_TABLE_CHECKS[name]
    ns = list(range(start, bound))
    table = CoeffTable.cached(cache_dir, kind)
    table.fill([a * n + b for n in ns])
    if cache_dir and ns:
        table.save(cache_dir)
    series = build_series(series_id, bound)
    mismatches = _series_mismatches(series, lambda n: sign * table[a * n + b], ns)
    return CheckResult("arithmetic", name, not mismatches, detail={"checked": len(ns), **_mismatch_detail(mismatches)})


def _series_mismatches(series, oracle: Callable[[int], int], indices: Sequence[int]) -> List[Tuple[int, object, object]]:
    mismatches = []
    for n in indices:
        expected, actual = oracle(n), series.coefficient(n)
        if expected != actual:
            mismatches.append((n, expected, actual))
    return mismatches


def check_f_oracle(k: int, bound: int) -> CheckResult:
    series = build_series(F_SERIES[k], bound)
    mismatches = _series_mismatches(series, partial(f_coeff_arith, k), range(bound))
    return CheckResult("arithmetic", f"F{k}_ORACLE", not mismatches, detail={"checked": bound, **_mismatch_detail(mismatches)})


def check_ll_oracle(bound: int) -> CheckResult:
    series = build_series(NamedSeriesId.LL, bound)
    mismatches = _series_mismatches(series, ll_coeff_arith, range(bound))
    return CheckResult("arithmetic", "LL_ORACLE", not mismatches, detail={"checked": bound, **_mismatch_detail(mismatches)})


def check_character() -> CheckResult:
    return CheckResult("arithmetic", "CHI_W_MULTIPLICATIVE", CHI_W.is_multiplicative())


def arithmetic_checks(bound: int, precision: int, cache_dir: Optional[str]) -> List[Check]:
    checks: List[Check] = [("arithmetic", "CHI_W_MULTIPLICATIVE", check_character)]
    for name in ORACLE_TABLE_CHECKS:
        checks.append(("arithmetic", name, partial(check_oracle_table, name, bound, cache_dir)))
    for k in F_SERIES:
        checks.append(("arithmetic", f"F{k}_ORACLE", partial(check_f_oracle, k, bound)))
    checks.append(("arithmetic", "LL_ORACLE", partial(check_ll_oracle, bound)))
    return checks


# Formas de Maass


def check_bessel(precision: int, max_digits: int = VALIDATED_DIGITS) -> CheckResult:
    """Forma fechada de K_1/2, monotonia de K_0 e K_0' = -K_1."""
    k = partial(bessel_k, precision=precision, max_digits=max_digits)
    residuals = []
    for t in (0.5, 1.0, 2.0):
        residuals.append(float(abs(k(Fraction(1, 2), t) - k_half_closed_form(t, precision))))
    monotone = all(k(0, t) > k(0, t + 0.01) for t in (0.1, 1.0, 5.0))
    eps = 1e-6
    with mpmath.workdps(precision):
        derivative = (k(0, 1 + eps) - k(0, 1 - eps)) / (2 * eps)
        derivative_gap = float(abs(derivative + k(1, 1.0)))
    passed = max(residuals) < noise_floor(precision) and monotone and derivative_gap < 1e-8
    return CheckResult(
        "maass",
        "BESSEL",
        passed,
        max(residuals),
        {"k_half_residuals": residuals, "k0_monotone": monotone, "derivative_gap": derivative_gap},
    )


def _grid() -> List[UpperHalfPoint]:
    xs = np.linspace(-0.5, 0.5, 5)
    ys = np.linspace(0.2, 2.0, 5)
    return [UpperHalfPoint(float(x), float(y)) for x in xs for y in ys]


def _grid_context(precision: int, tolerance: float):
    points = _grid()
    lowest = min(min(p.y, p.fricke().y) for p in points)
    return phi0w_context(required_n_max(8, lowest, tolerance), precision, tolerance), points


def check_s_transform(precision: int, tolerance: float) -> CheckResult:
    ctx, points = _grid_context(precision, tolerance)
    worst, worst_tail, passed = 0.0, 0.0, True
    for z in points:
        report = s_transform_residual(ctx, z)
        allowed = 10 * report["tail_bound"] + noise_floor(precision)
        passed = passed and report["residual"] < allowed
        if report["residual"] >= worst:
            worst, worst_tail = report["residual"], report["tail_bound"]
    return CheckResult(
        "maass", "S_TRANSFORM", passed, worst,
        {"check": "s-transform", "grid": "5x5", "max_residual": worst, "tail_bound": worst_tail, "n_max": ctx.n_max},
    )


def check_translation(precision: int, tolerance: float) -> CheckResult:
    ctx, points = _grid_context(precision, tolerance)
    residuals = [translation_residual(ctx, z)["residual"] for z in points]
    worst = max(residuals)
    return CheckResult(
        "maass", "TRANSLATION", worst < noise_floor(precision), worst,
        {"check": "translate", "grid": "5x5", "max_residual": worst, "tail_bound": 0.0},
    )


def check_fixed_point(precision: int, tolerance: float) -> CheckResult:
    z = UpperHalfPoint(0.0, 0.5)
    ctx = phi0w_context(required_n_max(8, z.y, tolerance), precision, tolerance)
    value = phi_eval(ctx, z)
    imag = float(abs(value.value.imag))
    return CheckResult(
        "maass", "FIXED_POINT_REAL", imag < 10 * value.tail_bound + noise_floor(precision), imag,
        {"value": [float(value.value.real), float(value.value.imag)], "tail_bound": value.tail_bound},
    )


def check_laplacian(precision: int, tolerance: float) -> CheckResult:
    z = UpperHalfPoint(0.1, 1.0)
    ctx = phi0w_context(required_n_max(8, z.y - 1e-3, tolerance), precision, tolerance)
    report = laplacian_residual(ctx, z, 1e-3)
    mode = single_mode_context(1, scale=8, precision=precision)
    coarse = laplacian_residual(mode, z, 1e-2)["residual"]
    fine = laplacian_residual(mode, z, 5e-3)["residual"]
    ratio = coarse / fine if fine else float("inf")
    passed = report["relative"] < 1e-4 and 3.0 < ratio < 5.0
    return CheckResult(
        "maass", "LAPLACIAN", passed, report["relative"],
        {"check": "laplacian", "grid": "0.1+1.0i", "relative": report["relative"], "mode_step_ratio": ratio},
    )


def check_period_modes(precision: int, tolerance: float) -> CheckResult:
    """Integral de período de modos isolados contra e(nz), em pontos e modos aleatórios."""
    rng = np.random.default_rng(SEED)
    calibration = calibration_constant()
    worst = 0.0
    samples = []
    for n, x, y in zip(rng.integers(1, 4, 10), rng.uniform(-0.5, 0.5, 10), rng.uniform(0.4, 1.0, 10)):
        ctx = single_mode_context(int(n), scale=1, precision=min(precision, 20))
        z = complex(x, y)
        measured = complex(period_integral(ctx, z, tolerance))
        expected = calibration * complex(fourier_half_sum(ctx, z))
        relative = abs(measured - expected) / abs(expected)
        worst = max(worst, relative)
        samples.append({"n": int(n), "z": [float(x), float(y)], "relative": relative})
    return CheckResult("maass", "PERIOD_SINGLE_MODE", worst < 1e-6, worst, {"samples": samples, "calibration": [calibration.real, calibration.imag]})


# Pontos de teste da integral de período com todos os coeficientes de phi_0
PERIOD_POINTS = (complex(0.1, 1.2), complex(-0.3, 0.9), complex(0.25, 1.5))


def check_period_phi0(precision: int, tolerance: float) -> CheckResult:
    lowest = min(z.imag for z in PERIOD_POINTS)
    ctx = phi0_context(required_n_max(24, lowest, 1e-12), min(precision, 20))
    calibration = calibration_constant()
    worst = 0.0
    for z in PERIOD_POINTS:
        measured = complex(period_integral(ctx, z, tolerance))
        expected = calibration * complex(fourier_half_sum(ctx, z))
        worst = max(worst, abs(measured - expected) / abs(expected))
    return CheckResult(
        "maass", "PERIOD_PHI0", worst < 1e-6, worst,
        {"points": [[z.real, z.imag] for z in PERIOD_POINTS], "n_max": ctx.n_max},
    )


def maass_checks(
    bound: int,
    precision: int,
    cache_dir: Optional[str],
    tolerance: float = 1e-10,
    max_digits: int = VALIDATED_DIGITS
) -> List[Check]:
    precision = min(precision, 30)
    return [
        ("maass", "BESSEL", partial(check_bessel, precision, max_digits)),
        ("maass", "S_TRANSFORM", partial(check_s_transform, precision, tolerance)),
        ("maass", "TRANSLATION", partial(check_translation, precision, tolerance)),
        ("maass", "FIXED_POINT_REAL", partial(check_fixed_point, precision, tolerance)),
        ("maass", "LAPLACIAN", partial(check_laplacian, precision, tolerance)),
        ("maass", "PERIOD_SINGLE_MODE", partial(check_period_modes, precision, 1e-8)),
        ("maass", "PERIOD_PHI0", partial(check_period_phi0, precision, 1e-8)),
    ]


# Formas modulares quânticas


def primitive_rationals(max_order: int) -> List[Fraction]:
    """p/k em [0, 1) em termos mínimos, com 1 <= k <= max_order."""
    return sorted({Fraction(p, k) for k in range(1, max_order + 1) for p in range(k)})


def check_cohen(precision: int, max_order: int = 60) -> CheckResult:
    worst_cohen, worst_translation = 0.0, 0.0
    for x in primitive_rationals(max_order):
        value = quantum_eval_sigma(x, precision)
        worst_cohen = max(worst_cohen, value.cohen_residual)
        worst_translation = max(worst_translation, value.translation_residual)
    at_one = quantum_eval_sigma(0, precision)
    endpoints = abs(complex(at_one.value_plus) - 2) < 1e-12 and abs(complex(at_one.value_minus) + 2) < 1e-12
    passed = worst_cohen < 1e-12 and worst_translation < 1e-12 and endpoints
    return CheckResult(
        "quantum", "SIGMA_COHEN", passed, worst_cohen,
        {"max_order": max_order, "translation_residual": worst_translation, "sigma_at_1": endpoints},
    )


def _fw_domain(count: int) -> List[Fraction]:
    """Amostras p/r com r ímpar ou múltiplo de 4."""
    xs: List[Fraction] = []
    r = 3
    while len(xs) < count:
        if r % 4 != 2:
            xs.append(Fraction(1, r))
        r += 1
    return xs


def check_trivial_periods(precision: int) -> CheckResult:
    xs = _fw_domain(20)
    worst = 0.0
    for gamma in ("A", "C"):
        worst = max(worst, max(abs(s.h) for s in period_function_sample(gamma, xs, precision)))
    return CheckResult("quantum", "PERIOD_A_C", worst < 1e-12, worst, {"samples": len(xs)})


def check_fw_finite(precision: int) -> CheckResult:
    """f_W finita nas amostras de S_inf e S_0."""
    xs = _fw_domain(25)
    worst = max(abs(complex(quantum_eval_fW(x, precision).value)) for x in xs)
    return CheckResult("quantum", "FW_FINITE", worst < float("inf"), worst, {"samples": len(xs)})


def check_domain_hole(precision: int) -> CheckResult:
    """Toda amostra p/r com r = 2 mod 4 deve levantar DomainHole."""
    xs = [Fraction(1, 4 * k + 2) for k in range(10)]
    missed = []
    for x in xs:
        try:
            quantum_eval_fW(x, precision)
        except DomainHole:
            continue
        missed.append(str(x))
    return CheckResult("quantum", "FW_DOMAIN_HOLE", not missed, detail={"samples": len(xs), "missed": missed})


def check_period_b(precision: int) -> CheckResult:
    """h_B ao longo de x = n/(3n+1) -> 1/3 deve se estabilizar."""
    xs = [Fraction(n, 3 * n + 1) for n in range(5, 90, 12)]
    samples = period_function_sample("B", xs, precision)
    gaps = [abs(b.h - a.h) for a, b in zip(samples, samples[1:])]
    passed = gaps[-1] <= gaps[0]
    return CheckResult(
        "quantum", "PERIOD_B_CAUCHY", passed, gaps[-1],
        {"rows": [s.to_row() for s in samples], "gaps": gaps},
    )


def quantum_checks(bound: int, precision: int, cache_dir: Optional[str]) -> List[Check]:
    return [
        ("quantum", "SIGMA_COHEN", partial(check_cohen, precision)),
        ("quantum", "PERIOD_A_C", partial(check_trivial_periods, precision)),
        ("quantum", "FW_FINITE", partial(check_fw_finite, precision)),
        ("quantum", "FW_DOMAIN_HOLE", partial(check_domain_hole, precision)),
        ("quantum", "PERIOD_B_CAUCHY", partial(check_period_b, precision)),
    ]


class SuiteRunner:
    """Monta e executa as verificações de cada suíte."""

    suite_map: Dict[str, Callable[..., List[Check]]] = {
        "identities": identity_checks,
        "renorm": renorm_checks,
        "arithmetic": arithmetic_checks,
        "maass": maass_checks,
        "quantum": quantum_checks,
    }

    def __init__(
        self,
        bound: int,
        precision: int,
        parallelism: int = 1,
        cache_dir: Optional[str] = None,
        stall_window: int = 50,
        tail_tolerance: float = 1e-10,
        progress: bool = False,
        max_digits: int = VALIDATED_DIGITS
    ):
        self.bound = bound
        self.precision = precision
        self.parallelism = parallelism
        self.cache_dir = cache_dir
        self.stall_window = stall_window
        self.tail_tolerance = tail_tolerance
        self.progress = progress
        self.max_digits = max_digits

    def checks_for(self, suite: str) -> List[Check]:
        """
        Lista as verificações de uma suíte.

        Raises:
            ValueError: se a suíte não existe.
        """
        if suite not in self.suite_map:
            raise ValueError(f"Suíte desconhecida: {suite}")
        builder = self.suite_map[suite]
        if suite == "renorm":
            return builder(self.bound, self.precision, self.cache_dir, self.stall_window)
        if suite == "maass":
            return builder(self.bound, self.precision, self.cache_dir, self.tail_tolerance, self.max_digits)
        return builder(self.bound, self.precision, self.cache_dir)

    def _execute(self, checks: Sequence[Check]) -> List[CheckResult]:
        tasks = [partial(_guarded, suite, name, run) for suite, name, run in checks]
        if self.parallelism > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.parallelism) as executor:
                results = executor.map(_call, tasks)
                return list(tqdm(results, total=len(tasks), desc="verify", disable=not self.progress))
        return [task() for task in tqdm(tasks, desc="verify", disable=not self.progress)]

    def run(self, suite: str) -> SuiteReport:
        """
        Executa uma suíte (ou ``all``).

        Returns:
            SuiteReport com uma entrada por verificação, na ordem de declaração.
        """
        names = SUITE_NAMES if suite == "all" else (suite,)
        checks: List[Check] = []
        for name in names:
            checks.extend(self.checks_for(name))
        logger.info(f"Suíte {suite}: {len(checks)} verificações até q^{self.bound}")
        results = self._execute(checks)
        report = SuiteReport(suite, self.bound, self.precision, results)
        for failure in report.failures:
            logger.warning(f"Falhou: {failure.suite}/{failure.check} {failure.detail}")
        logger.info(f"Suíte {suite}: {len(results) - len(report.failures)}/{len(results)} aprovadas")
        return report


def _call(task: Callable[[], CheckResult]) -> CheckResult:
    return task()


def run_suite(suite: str, bound: int, precision: int = 50, **options) -> SuiteReport:
    return SuiteRunner(bound, precision, **options).run(suite)
