"""
Verificação exata de identidades formais entre séries do catálogo.

Cada identidade monta os dois lados como séries truncadas independentes e
compara todos os coeficientes abaixo do limite.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from loguru import logger

from src.arithmetic.character import tw_pos
from src.arithmetic.theta import ThetaId, theta_double_sum
from src.catalog.base_family import NamedSeriesId
from src.catalog.factory import build_series, get_family
from src.catalog.fine import fine_F
from src.catalog.ghosts import EVEN_LAMBERT
from src.series import InfiniteProductExpr, Monomial, QProductExpr, TruncatedQSeries, expand, poch, sum_tails, sum_terms
from src.series.truncated import Rational
from src.utils.exceptions import NonConvergentParameters

# Quantidade de termos comparados nas simetrias expressão a expressão
SYMMETRY_TERMS = 30


class IdentityId(str, Enum):
    FINE_63 = "FINE_63"
    ENTRY_172 = "ENTRY_172"
    AJO = "AJO"
    RAMA_SUMSOFTAILS = "RAMA_SUMSOFTAILS"
    DYSON_INVOLUTION = "DYSON_INVOLUTION"
    JACKSON = "JACKSON"
    JACKSON_DUAL = "JACKSON_DUAL"
    CFLZ_W1_THETA = "CFLZ_W1_THETA"
    CFLZ_W2_THETA = "CFLZ_W2_THETA"
    CFLZ_CHARACTER_SUM = "CFLZ_CHARACTER_SUM"
    LL_THETA = "LL_THETA"
    L_EQ_LL = "L_EQ_LL"
    W1_EQ_NEG_SW = "W1_EQ_NEG_SW"
    F1F2_W1 = "F1F2_W1"
    SYM_SIGMA = "SYM_SIGMA"
    SYM_W = "SYM_W"
    SYM_F1 = "SYM_F1"
    SYM_F3 = "SYM_F3"
    SYM_F4 = "SYM_F4"
    SYM_F5F6 = "SYM_F5F6"
    SYM_F7F8 = "SYM_F7F8"
    SYM_L = "SYM_L"


@dataclass
class VerificationReport:
    """Resultado de uma comparação exata (ou agregado de casos parametrizados)."""

    id: str
    bound: Fraction
    passed: bool
    first_mismatch: Optional[Fraction] = None
    lhs: Optional[TruncatedQSeries] = None
    rhs: Optional[TruncatedQSeries] = None
    detail: str = ""
    cases: List["VerificationReport"] = field(default_factory=list)

    def to_dict(self, head: int = 8) -> Dict[str, object]:
        data: Dict[str, object] = {
            "id": self.id,
            "bound": str(self.bound),
            "pass": self.passed,
            "first_mismatch": None if self.first_mismatch is None else str(self.first_mismatch),
            "lhs_head": self.lhs.head(head) if self.lhs is not None else [],
            "rhs_head": self.rhs.head(head) if self.rhs is not None else [],
        }
        if self.detail:
            data["detail"] = self.detail
        if self.cases:
            data["cases"] = [case.to_dict(head) for case in self.cases]
        return data


def compare(
    identity: str,
    bound: Rational,
    lhs: TruncatedQSeries,
    rhs: TruncatedQSeries,
    detail: str = ""
) -> VerificationReport:
    """
    Compara dois lados até q^bound.

    Falha também quando algum lado não cobre o intervalo pedido.
    """
    bound = Fraction(bound)
    lhs, rhs = lhs.truncate(bound), rhs.truncate(bound)
    mismatch = lhs.first_mismatch(rhs)
    covered = min(lhs.bound_exponent, rhs.bound_exponent)
    passed = mismatch is None and covered >= bound
    if mismatch is None and covered < bound:
        detail = f"{detail} precisão perdida: comparação só até q^{covered}".strip()
    if passed:
        logger.debug(f"{identity}: ok até q^{bound}")
    else:
        logger.warning(f"{identity}: falhou até q^{bound} (primeira divergência em q^{mismatch})")
    return VerificationReport(identity, bound, passed, mismatch, lhs, rhs, detail)


def aggregate(identity: str, bound: Rational, cases: Sequence[VerificationReport]) -> VerificationReport:
    """Junta casos parametrizados em um relatório; a primeira falha define a divergência."""
    failed = [c for c in cases if not c.passed]
    first = failed[0] if failed else (cases[0] if cases else None)
    return VerificationReport(
        identity,
        Fraction(bound),
        not failed,
        first.first_mismatch if first else None,
        first.lhs if first else None,
        first.rhs if first else None,
        first.detail if failed else "",
        list(cases),
    )


# Identidades parametrizadas


def _one_minus(m: Monomial, power: int = 1) -> QProductExpr:
    """(1 - m)^power."""
    return QProductExpr.build(1, 0, [(-m.coeff, m.exp, power)])


def verify_fine_63(bound: Rational, a: Monomial, b: Monomial, t: Monomial) -> VerificationReport:
    """F(a, b; t) = (1 - b)/(1 - t) F(at/b, t; b)."""
    lhs = fine_F(a, b, t, bound, regularize=False)
    factor = expand((_one_minus(b) * _one_minus(t, -1)).normalized(), bound)
    rhs = factor * fine_F(a * t / b, t, b, bound, regularize=False)
    return compare(IdentityId.FINE_63.value, bound, lhs, rhs, f"(a, b, t) = ({a}, {b}, {t})")


def entry_172_lhs_term(a: Monomial, b: Monomial, n: int) -> QProductExpr:
    """(-aq/b; q)_n b^n (-1)^n q^(n(n+1)/2) / (-b; q)_(n+1)."""
    ratio = Monomial(-a.coeff / b.coeff, a.exp + 1 - b.exp)
    sign = -1 if n % 2 else 1
    expr = ratio.poch(1, n) * b.power(n) * QProductExpr.monomial(sign, n * (n + 1) // 2)
    return (expr / poch(-b.coeff, b.exp, 1, n + 1)).normalized()


def entry_172_rhs_term(a: Monomial, b: Monomial, n: int) -> QProductExpr:
    """(-b)^n (-q; q)_n (-aq/b; q)_n / (aq; q^2)_(n+1)."""
    ratio = Monomial(-a.coeff / b.coeff, a.exp + 1 - b.exp)
    expr = (-b).power(n) * poch(-1, 1, 1, n) * ratio.poch(1, n)
    return (expr / poch(a.coeff, a.exp + 1, 2, n + 1)).normalized()


def verify_entry_172(bound: Rational, a: Monomial, b: Monomial) -> VerificationReport:
    """
    sum (-aq/b)_n b^n (-1)^n q^(n(n+1)/2)/(-b)_(n+1) = sum (-b)^n (-q)_n (-aq/b)_n/(aq; q^2)_(n+1).

    Com b de valuação 0 o lado direito só é lido quando a = -b, como
    (1/(1 - aq)) F(1, aq; -b : q^2) regularizada.

    Raises:
        NonConvergentParameters: se o lado direito não tem leitura formal.
    """
    bound = Fraction(bound)
    zero = TruncatedQSeries.zero(bound)
    lhs, _ = sum_tails(lambda n: entry_172_lhs_term(a, b, n), zero, 0, bound)
    if b.exp > 0:
        rhs, _ = sum_tails(lambda n: entry_172_rhs_term(a, b, n), zero, 0, bound)
    elif a == -b:
        aq = Monomial(a.coeff, a.exp + 1)
        prefactor = expand(_one_minus(aq, -1).normalized(), bound)
        rhs = prefactor * fine_F(Monomial.of(1), aq, -b, bound, base=2)
    else:
        raise NonConvergentParameters(f"Lado direito de ENTRY_172 diverge para (a, b) = ({a}, {b})")
    return compare(IdentityId.ENTRY_172.value, bound, lhs, rhs, f"(a, b) = ({a}, {b})")


def _lambert_like(coeff: Fraction, exp: Fraction, step: int, n_start: int, bound: Fraction) -> TruncatedQSeries:
    """sum_{n >= n_start} c q^(e + kn) / (1 - c q^(e + kn)), termos em forma normal."""

    def term(n: int) -> QProductExpr:
        e = exp + step * n
        return QProductExpr.build(coeff, e, [(-coeff, e, -1)]).normalized()

    series, _ = sum_tails(term, TruncatedQSeries.zero(bound), n_start, bound)
    return series


def verify_ajo(bound: Rational, t: Monomial, a: Monomial, base: int = 1) -> VerificationReport:
    """
    sum_{n>=0} (P_inf - P_n) para P_n = (t; q^k)_n/(a; q^k)_n contra a forma com somas de Lambert.
    """
    bound = Fraction(bound)
    k = base
    zero = TruncatedQSeries.zero(bound)
    p_inf = (
        InfiniteProductExpr.poch_infinity(t.coeff, t.exp, k)
        * InfiniteProductExpr.poch_infinity(a.coeff, a.exp, k, -1)
    ).to_series(bound)

    def p_n(n: int) -> QProductExpr:
        return (t.poch(k, n) / a.poch(k, n)).normalized()

    tails, _ = sum_tails(p_n, p_inf, 0, bound)
    lhs = -tails

    first = Monomial(1 / a.coeff, k - a.exp)
    second = Monomial(1 / t.coeff, k - t.exp)

    def rhs_term(n: int) -> QProductExpr:
        return (first.poch(k, n) / second.poch(k, n) * (a / t).power(n)).normalized()

    series, _ = sum_tails(rhs_term, zero, 1, bound)
    inner = (
        _lambert_like(Fraction(1), Fraction(0), k, 1, bound)
        + _lambert_like(1 / t.coeff, -t.exp, k, 1, bound)
        - _lambert_like(t.coeff, t.exp, k, 0, bound)
        - _lambert_like(a.coeff / t.coeff, a.exp - t.exp, k, 0, bound)
    )
    rhs = series + p_inf * inner
    return compare(IdentityId.AJO.value, bound, lhs, rhs, f"(t, a) = ({t}, {a}), base q^{k}")


# Identidades sem parâmetros


def verify_rama_sumsoftails(bound: Rational) -> VerificationReport:
    """sum (1/(-q)_n - 1/(-q)_inf) = -sigma* + G[sigma]."""
    bound = Fraction(bound)
    limit = InfiniteProductExpr.poch_infinity(-1, 1, 1, -1).to_series(bound)
    lhs, _ = sum_tails(lambda n: poch(-1, 1, 1, n) ** -1, limit, 0, bound)
    rhs = build_series(NamedSeriesId.GHOST_SIGMA, bound) - build_series(NamedSeriesId.SIGMA_STAR, bound)
    return compare(IdentityId.RAMA_SUMSOFTAILS.value, bound, lhs, rhs)


def verify_dyson_involution(bound: Rational) -> VerificationReport:
    """-2 sum_{n>=1} (1/(q; q^2)_n - 1/(q; q^2)_inf) = sigma + (2/(q; q^2)_inf)(-1/2 + sum q^2n/(1-q^2n))."""
    bound = Fraction(bound)
    inverse_inf = InfiniteProductExpr.poch_infinity(1, 1, 2, -1).to_series(bound)
    tails, _ = sum_tails(lambda n: poch(1, 1, 2, n) ** -1, inverse_inf, 1, bound)
    lhs = tails.scale(-2)
    inner = EVEN_LAMBERT.to_series(bound) + TruncatedQSeries.monomial(Fraction(-1, 2), 0, bound)
    rhs = build_series(NamedSeriesId.SIGMA, bound) + (inverse_inf * inner).scale(2)
    return compare(IdentityId.DYSON_INVOLUTION.value, bound, lhs, rhs)


def verify_jackson(bound: Rational) -> VerificationReport:
    """sum (q; q^2)_n (-q)^n / (-q^2; q^2)_n = sum q^(n^2+n) / ((-q^2; q^2)_n (1 + q^(2n+1)))."""

    def term(n: int) -> QProductExpr:
        return poch(1, 1, 2, n) * QProductExpr.monomial(-1 if n % 2 else 1, n) / poch(-1, 2, 2, n)

    lhs, _ = sum_terms(term, 0, bound, lambda n: n)
    return compare(IdentityId.JACKSON.value, bound, lhs, build_series(NamedSeriesId.JACKSON_RHS, bound))


def _transformed(series_id: NamedSeriesId, bound: Rational) -> TruncatedQSeries:
    return get_family(series_id).expand_transformed(bound)


def verify_symmetry(identity: IdentityId, bound: Rational) -> VerificationReport:
    """Simetrias q -> 1/q termo a termo das famílias sem limite."""
    bound = Fraction(bound)
    source, target, sign, shift = SYMMETRY_PAIRS[identity]
    lhs = _transformed(source, bound)
    rhs = build_series(target, bound + max(shift, 0))
    if shift:
        rhs = rhs.shift(shift)
    return compare(identity.value, bound, lhs, rhs.scale(sign))


# identidade -> (família transformada, série alvo, sinal, deslocamento q^s)
SYMMETRY_PAIRS: Dict[IdentityId, Tuple[NamedSeriesId, NamedSeriesId, int, int]] = {
    IdentityId.JACKSON_DUAL: (NamedSeriesId.JACKSON_RHS, NamedSeriesId.CHALLENGE_TAIL, 1, 0),
    IdentityId.SYM_F1: (NamedSeriesId.F1, NamedSeriesId.F1_DUAL, 1, 0),
    IdentityId.SYM_F3: (NamedSeriesId.F3, NamedSeriesId.F3, 1, 1),
    IdentityId.SYM_F4: (NamedSeriesId.F4, NamedSeriesId.F4, -1, 0),
    IdentityId.SYM_F5F6: (NamedSeriesId.F5, NamedSeriesId.F6, 1, 0),
    IdentityId.SYM_F7F8: (NamedSeriesId.F7, NamedSeriesId.F8, 1, 0),
    IdentityId.SYM_L: (NamedSeriesId.L, NamedSeriesId.LL, -1, 0),
}


# identidade -> (família, termo esperado de H_n(1/q))
TERMWISE_SYMMETRIES: Dict[IdentityId, Tuple[NamedSeriesId, Callable[[int], QProductExpr]]] = {
    IdentityId.SYM_SIGMA: (NamedSeriesId.SIGMA, lambda n: poch(-1, 1, 1, n) ** -1),
    IdentityId.SYM_W: (NamedSeriesId.W, lambda n: poch(-1, 0, 2, n) / poch(1, 1, 2, n)),
}


def verify_termwise(identity: IdentityId, bound: Rational) -> VerificationReport:
    """
    Confere H_n(1/q) contra a forma esperada expressão a expressão.

    A igualdade estrutural das formas normais basta; se ela falha, as expansões
    até q^bound decidem.
    """
    bound = Fraction(bound)
    series_id, expected = TERMWISE_SYMMETRIES[identity]
    family = get_family(series_id)
    count = min(SYMMETRY_TERMS, int(bound) + 1)
    for n in range(family.n_start, family.n_start + count):
        got = family.transformed_term(n)
        want = expected(n).normalized()
        if got == want:
            continue
        lhs, rhs = expand(got, bound), expand(want, bound)
        if lhs != rhs:
            return compare(identity.value, bound, lhs, rhs, f"termo n = {n}")
    return VerificationReport(identity.value, bound, True, detail=f"{count} termos conferidos")


def verify_theta(identity: IdentityId, bound: Rational) -> VerificationReport:
    series_id, theta_id = THETA_PAIRS[identity]
    return compare(identity.value, bound, build_series(series_id, bound), theta_double_sum(theta_id, bound))


THETA_PAIRS = {
    IdentityId.CFLZ_W1_THETA: (NamedSeriesId.W1, ThetaId.W1_THETA),
    IdentityId.CFLZ_W2_THETA: (NamedSeriesId.W2, ThetaId.W2_THETA),
    IdentityId.LL_THETA: (NamedSeriesId.LL, ThetaId.LL_THETA),
}


def verify_l_eq_ll(bound: Rational) -> VerificationReport:
    """L(-q) = LL(q)."""
    lhs = build_series(NamedSeriesId.L, bound).subst_neg()
    return compare(IdentityId.L_EQ_LL.value, bound, lhs, build_series(NamedSeriesId.LL, bound))


def verify_w1_eq_neg_sw(bound: Rational) -> VerificationReport:
    lhs = build_series(NamedSeriesId.W1, bound)
    return compare(IdentityId.W1_EQ_NEG_SW.value, bound, lhs, -build_series(NamedSeriesId.SW, bound))


def verify_f1f2_w1(bound: Rational) -> VerificationReport:
    """f1(q^2) - q^-1 f2(q^2) = W1(q)."""
    bound = Fraction(bound)
    f1 = build_series(NamedSeriesId.F1, ceil(bound / 2) + 1).subst_power(2)
    f2 = build_series(NamedSeriesId.F2, ceil((bound + 1) / 2) + 1).subst_power(2).shift(-1)
    return compare(IdentityId.F1F2_W1.value, bound, f1 - f2, build_series(NamedSeriesId.W1, bound))


def verify_character_sum(bound: Rational) -> VerificationReport:
    """q W1(q^8) + q^-1 W2(q^8) = sum_{m>=1} T_W(m) q^m."""
    bound = Fraction(bound)
    inner = ceil(bound / 8) + 1
    lhs = (
        build_series(NamedSeriesId.W1, inner).subst_power(8).shift(1)
        + build_series(NamedSeriesId.W2, inner).subst_power(8).shift(-1)
    )
    rhs = TruncatedQSeries.from_terms({m: tw_pos(m) for m in range(1, ceil(bound))}, bound)
    return compare(IdentityId.CFLZ_CHARACTER_SUM.value, bound, lhs, rhs)


# Substituições padrão das identidades parametrizadas
DEFAULT_PARAMS: Dict[IdentityId, List[Tuple]] = {
    IdentityId.FINE_63: [(Monomial.of(1, 1), Monomial.of(1, 2), Monomial.of(1, 3))],
    IdentityId.ENTRY_172: [(Monomial.of(-1), Monomial.of(1)), (Monomial.of(-1, 1), Monomial.of(1, 1))],
    IdentityId.AJO: [
        (Monomial.of(-1, 2), Monomial.of(1, 3), 1),
        (Monomial.of(1, 1), Monomial.of(-1, 2), 2),
    ],
}

PARAMETRIZED = {
    IdentityId.FINE_63: verify_fine_63,
    IdentityId.ENTRY_172: verify_entry_172,
    IdentityId.AJO: verify_ajo,
}

SIMPLE = {
    IdentityId.RAMA_SUMSOFTAILS: verify_rama_sumsoftails,
    IdentityId.DYSON_INVOLUTION: verify_dyson_involution,
    IdentityId.JACKSON: verify_jackson,
    IdentityId.L_EQ_LL: verify_l_eq_ll,
    IdentityId.W1_EQ_NEG_SW: verify_w1_eq_neg_sw,
    IdentityId.F1F2_W1: verify_f1f2_w1,
    IdentityId.CFLZ_CHARACTER_SUM: verify_character_sum,
}


def verify_identity(
    identity: Union[str, IdentityId],
    bound: Rational,
    params: Optional[Sequence[Tuple]] = None
) -> VerificationReport:
    """
    Verifica uma identidade do catálogo até q^bound.

    Args:
        identity: Identificador da identidade.
        bound: Expoente de truncamento.
        params: Substituições monomiais para FINE_63, ENTRY_172 e AJO; por padrão
            as de DEFAULT_PARAMS.

    Returns:
        VerificationReport; identidades parametrizadas trazem um caso por substituição.

    Raises:
        NonConvergentParameters: propagada dos construtores.
    """
    if not isinstance(identity, IdentityId):
        identity = IdentityId(identity.strip().upper())
    bound = Fraction(bound)
    logger.debug(f"Verificando {identity.value} até q^{bound}")
    if identity in PARAMETRIZED:
        cases = [PARAMETRIZED[identity](bound, *p) for p in (params or DEFAULT_PARAMS[identity])]
        return aggregate(identity.value, bound, cases)
    if identity in SIMPLE:
        return SIMPLE[identity](bound)
    if identity in SYMMETRY_PAIRS:
        return verify_symmetry(identity, bound)
    if identity in TERMWISE_SYMMETRIES:
        return verify_termwise(identity, bound)
    return verify_theta(identity, bound)
