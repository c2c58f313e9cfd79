"""
Expressões de produto finito em q e sua expansão em séries truncadas.

Uma ``QProductExpr`` representa a * q^p * prod_i (1 + c_i q^(m_i))^(e_i) com
a, p, c_i, m_i racionais e e_i inteiros. Símbolos de Pochhammer finitos e
infinitos são montados a partir dela.
"""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, NamedTuple, Optional, Tuple, Union

import mpmath

from src.series.truncated import Coeff, Rational, TruncatedQSeries, exact, on_grid
from src.utils.exceptions import NotExpandable, PoleAtPoint, ZeroFactorCoefficient


class Factor(NamedTuple):
    """Fator (1 + c q^m)^e."""

    c: Fraction
    m: Fraction
    e: int


def _merge(factors: Iterable[Tuple[Rational, Rational, int]]) -> Tuple[Factor, ...]:
    acc = defaultdict(int)
    for c, m, e in factors:
        acc[(Fraction(c), Fraction(m))] += int(e)
    merged = [Factor(c, m, e) for (c, m), e in acc.items() if e != 0]
    merged.sort(key=lambda f: (f.m, f.c))
    return tuple(merged)


@dataclass(frozen=True)
class QProductExpr:
    """Produto finito a * q^p * prod (1 + c q^m)^e com fatores agrupados por (c, m)."""

    prefactor_coeff: Fraction = Fraction(1)
    prefactor_exp: Fraction = Fraction(0)
    factors: Tuple[Factor, ...] = ()

    @classmethod
    def build(
        cls,
        coeff: Rational = 1,
        exp: Rational = 0,
        factors: Iterable[Tuple[Rational, Rational, int]] = ()
    ) -> "QProductExpr":
        coeff = Fraction(coeff)
        if coeff == 0:
            return cls(Fraction(0), Fraction(0), ())
        return cls(coeff, Fraction(exp), _merge(factors))

    @classmethod
    def monomial(cls, coeff: Rational = 1, exp: Rational = 0) -> "QProductExpr":
        return cls.build(coeff, exp)

    @property
    def is_zero(self) -> bool:
        return self.prefactor_coeff == 0

    def __mul__(self, other: Union["QProductExpr", Rational]) -> "QProductExpr":
        if isinstance(other, (int, Fraction)):
            return QProductExpr.build(self.prefactor_coeff * other, self.prefactor_exp, self.factors)
        return QProductExpr.build(
            self.prefactor_coeff * other.prefactor_coeff,
            self.prefactor_exp + other.prefactor_exp,
            self.factors + other.factors,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "QProductExpr") -> "QProductExpr":
        if other.is_zero:
            raise ZeroDivisionError("Divisão por expressão nula")
        return QProductExpr.build(
            self.prefactor_coeff / other.prefactor_coeff,
            self.prefactor_exp - other.prefactor_exp,
            self.factors + tuple(Factor(c, m, -e) for c, m, e in other.factors),
        )

    def __neg__(self) -> "QProductExpr":
        return self * -1

    def __pow__(self, k: int) -> "QProductExpr":
        if self.is_zero and k < 0:
            raise ZeroDivisionError("Potência negativa de expressão nula")
        return QProductExpr.build(
            self.prefactor_coeff ** k,
            self.prefactor_exp * k,
            tuple(Factor(c, m, e * k) for c, m, e in self.factors),
        )

    @property
    def is_expandable(self) -> bool:
        """Todo fator com expoente negativo (e c != 0) tem m > 0."""
        return all(f.m > 0 for f in self.factors if f.e < 0 and f.c != 0)

    def normalized(self) -> "QProductExpr":
        """
        Forma normal: absorve fatores constantes e reescreve m < 0 via
        (1 + c q^m) = c q^m (1 + c^-1 q^-m).

        Raises:
            NotExpandable: se um fator (1 + c)^e com 1 + c = 0 aparece com e < 0.
        """
        coeff, exp = self.prefactor_coeff, self.prefactor_exp
        if coeff == 0:
            return QProductExpr.build(0)
        out: List[Tuple[Fraction, Fraction, int]] = []
        for c, m, e in self.factors:
            if c == 0:
                continue
            if m == 0:
                base = 1 + c
                if base == 0:
                    if e > 0:
                        return QProductExpr.build(0)
                    raise NotExpandable(f"Fator (1 + {c})^{e} é identicamente infinito")
                coeff *= base ** e
                continue
            if m < 0:
                coeff *= c ** e
                exp += m * e
                c, m = 1 / c, -m
            out.append((c, m, e))
        return QProductExpr.build(coeff, exp, out)

    def subst_qinv(self) -> "QProductExpr":
        """
        Substituição q -> 1/q, devolvida em forma normal.

        Raises:
            ZeroFactorCoefficient: se algum fator tem c = 0 com m > 0.
        """
        for c, m, _ in self.factors:
            if c == 0 and m > 0:
                raise ZeroFactorCoefficient(f"Fator com c = 0 e m = {m} não admite q -> 1/q")
        flipped = QProductExpr.build(
            self.prefactor_coeff,
            -self.prefactor_exp,
            tuple((c, -m, e) for c, m, e in self.factors),
        )
        return flipped.normalized()

    def valuation(self) -> Optional[Fraction]:
        """Expoente líder da forma normal (None para a expressão nula)."""
        norm = self.normalized()
        return None if norm.is_zero else norm.prefactor_exp

    def grid(self) -> int:
        d = self.prefactor_exp.denominator
        for f in self.factors:
            d = lcm(d, f.m.denominator)
        return d

    def evaluate(self, q: complex, precision: int = 50) -> mpmath.mpc:
        """
        Avalia a expressão em um número complexo q (ramo principal para expoentes racionais).

        Raises:
            PoleAtPoint: se um fator com expoente negativo se anula em q.
        """
        with mpmath.workdps(precision + 10):
            q = mpmath.mpmathify(q)
            tol = mpmath.mpf(10) ** (-(2 * precision) // 3)
            value = mpmath.mpmathify(self.prefactor_coeff.numerator) / self.prefactor_coeff.denominator
            value *= _power(q, self.prefactor_exp)
            for c, m, e in self.factors:
                base = 1 + _frac(c) * _power(q, m)
                if e < 0 and abs(base) < tol:
                    raise PoleAtPoint(f"Fator (1 + {c} q^{m}) se anula em q = {mpmath.nstr(q, 10)}")
                value *= base ** e
            return +value

    def evaluate_rational(self, q: Rational) -> Fraction:
        """
        Avaliação exata em um racional (somente expoentes inteiros).

        Raises:
            PoleAtPoint: se um fator com expoente negativo se anula em q.
            ValueError: se há expoentes fracionários.
        """
        q = Fraction(q)
        if self.grid() != 1:
            raise ValueError("Avaliação racional exige expoentes inteiros")
        if q == 0 and (self.prefactor_exp < 0 or any(f.m < 0 for f in self.factors)):
            raise PoleAtPoint("Expoente negativo avaliado em q = 0")
        value = self.prefactor_coeff * q ** int(self.prefactor_exp)
        for c, m, e in self.factors:
            base = 1 + c * q ** int(m)
            if base == 0:
                if e < 0:
                    raise PoleAtPoint(f"Fator (1 + {c} q^{m}) se anula em q = {q}")
                return Fraction(0)
            value *= base ** e
        return value

    def to_series(self, bound: Rational) -> TruncatedQSeries:
        """Expande a expressão até q^bound."""
        return expand(self, bound)

    def __repr__(self) -> str:
        parts = [f"{self.prefactor_coeff}*q^{self.prefactor_exp}"]
        parts += [f"(1{'+' if c >= 0 else '-'}{abs(c)}q^{m})^{e}" for c, m, e in self.factors]
        return "QProductExpr(" + " ".join(parts) + ")"


def _frac(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def _power(q: mpmath.mpc, exponent: Fraction) -> mpmath.mpc:
    if exponent == 0:
        return mpmath.mpf(1)
    if exponent.denominator == 1:
        return q ** exponent.numerator
    return mpmath.power(q, _frac(exponent))


def _apply_factors(dense: List[Coeff], factors: Iterable[Tuple[Coeff, int, int]]) -> List[Coeff]:
    """Multiplica/divide o vetor denso por (1 + c q^s)^e no lugar (s em unidades da grade)."""
    length = len(dense)
    for c, s, e in factors:
        if s >= length or c == 0:
            continue
        for _ in range(abs(e)):
            if e > 0:
                for k in range(length - 1, s - 1, -1):
                    if dense[k - s]:
                        dense[k] += c * dense[k - s]
            else:
                for k in range(s, length):
                    if dense[k - s]:
                        dense[k] -= c * dense[k - s]
    return dense


def multiply_expr(series: TruncatedQSeries, expr: QProductExpr) -> TruncatedQSeries:
    """
    Multiplica uma série truncada por uma expressão expansível.

    A precisão relativa é preservada: o limite se desloca pela valuação da expressão.

    Raises:
        NotExpandable: se a expressão não é expansível.
    """
    if not expr.is_expandable:
        raise NotExpandable(f"Expressão não expansível: {expr}")
    norm = expr.normalized()
    if norm.is_zero:
        return TruncatedQSeries.zero(series.bound_exponent)
    grid = lcm(series.grid, norm.grid())
    s = series.rescale(grid)
    shift = on_grid(norm.prefactor_exp, grid)
    if s.is_zero:
        return TruncatedQSeries(grid, s.bound + shift, (), s.bound + shift)
    dense = s._dense(s.offset, s.bound)
    coeff = exact(norm.prefactor_coeff)
    dense = [coeff * c for c in dense]
    _apply_factors(dense, ((exact(c), on_grid(m, grid), e) for c, m, e in norm.factors))
    return TruncatedQSeries(grid, s.offset + shift, tuple(dense), s.bound + shift)


def expand(expr: QProductExpr, bound: Rational) -> TruncatedQSeries:
    """
    Expande uma expressão expansível até q^bound.

    Raises:
        NotExpandable: se algum fator com expoente negativo tem m <= 0.
    """
    if not expr.is_expandable:
        raise NotExpandable(f"Expressão não expansível: {expr}")
    norm = expr.normalized()
    bound = Fraction(bound)
    if norm.is_zero or norm.prefactor_exp >= bound:
        return TruncatedQSeries.zero(bound, norm.grid())
    grid = lcm(norm.grid(), bound.denominator)
    start = on_grid(norm.prefactor_exp, grid)
    seed = TruncatedQSeries(grid, start, (exact(norm.prefactor_coeff),), on_grid(bound, grid))
    return multiply_expr(seed, QProductExpr(Fraction(1), Fraction(0), norm.factors))


# Símbolos de Pochhammer


def poch(coeff: Rational, exp: Rational, step: Rational, n: int) -> QProductExpr:
    """
    (a q^exp; q^step)_n = prod_{k<n} (1 - a q^(exp + k step)); n negativo usa a extensão usual.
    """
    coeff, exp, step = Fraction(coeff), Fraction(exp), Fraction(step)
    if n >= 0:
        return QProductExpr.build(1, 0, ((-coeff, exp + k * step, 1) for k in range(n)))
    # (x; q)_{-n} = 1 / (x q^{-n}; q)_n
    return QProductExpr.build(1, 0, ((-coeff, exp + k * step, -1) for k in range(n, 0)))


def poch_inverse(coeff: Rational, exp: Rational, step: Rational, n: int) -> QProductExpr:
    return poch(coeff, exp, step, n) ** -1


@dataclass(frozen=True)
class PochBlock:
    """Bloco infinito prod_{k>=0} (1 + c q^(m + k step))^e."""

    c: Fraction
    m: Fraction
    step: Fraction
    e: int

    def factors_below(self, bound: Fraction) -> List[Tuple[Fraction, Fraction, int]]:
        out = []
        k = 0
        while self.m + k * self.step < bound:
            out.append((self.c, self.m + k * self.step, self.e))
            k += 1
        return out


@dataclass(frozen=True)
class InfiniteProductExpr:
    """Produto finito vezes blocos de Pochhammer infinitos (q-expansão convergente em |q| < 1)."""

    finite: QProductExpr
    blocks: Tuple[PochBlock, ...] = ()

    @classmethod
    def poch_infinity(cls, coeff: Rational, exp: Rational, step: Rational, power: int = 1) -> "InfiniteProductExpr":
        """(a q^exp; q^step)_inf ^ power."""
        block = PochBlock(-Fraction(coeff), Fraction(exp), Fraction(step), power)
        if block.step <= 0 or block.m < 0:
            raise NotExpandable("Pochhammer infinito exige passo positivo e expoente inicial >= 0")
        return cls(QProductExpr.monomial(), (block,))

    def __mul__(self, other: Union["InfiniteProductExpr", QProductExpr, Rational]) -> "InfiniteProductExpr":
        if isinstance(other, InfiniteProductExpr):
            return InfiniteProductExpr(self.finite * other.finite, self.blocks + other.blocks)
        return InfiniteProductExpr(self.finite * other, self.blocks)

    __rmul__ = __mul__

    def inverse(self) -> "InfiniteProductExpr":
        return InfiniteProductExpr(
            self.finite ** -1,
            tuple(PochBlock(b.c, b.m, b.step, -b.e) for b in self.blocks),
        )

    def truncate(self, bound: Rational) -> QProductExpr:
        """Produto finito que coincide com o infinito módulo q^bound."""
        bound = Fraction(bound) - min(Fraction(0), self.finite.normalized().prefactor_exp or 0)
        factors: List[Tuple[Fraction, Fraction, int]] = []
        for block in self.blocks:
            factors.extend(block.factors_below(bound))
        return self.finite * QProductExpr.build(1, 0, factors)

    def to_series(self, bound: Rational) -> TruncatedQSeries:
        return expand(self.truncate(bound), bound)

    def vanishes_inverted_at_root(self, order: int) -> bool:
        """
        Indica se algum fator invertido se anula na raiz primitiva da unidade de ordem ``order``.

        Vale para coeficientes c = +-1 e expoentes inteiros; outros fatores não se anulam
        em raízes da unidade.
        """
        candidates = [(c, m, None, e) for c, m, e in self.finite.factors]
        candidates += [(b.c, b.m, b.step, b.e) for b in self.blocks]
        for c, m, step, e in candidates:
            if e >= 0 or c not in (1, -1) or m.denominator != 1:
                continue
            # 1 + c z^j = 0  <=>  j = 0 mod N (c = -1) ou j = N/2 mod N (c = 1)
            if c == 1 and order % 2:
                continue
            target = 0 if c == -1 else order // 2
            if step is None:
                if (int(m) - target) % order == 0:
                    return True
                continue
            if step.denominator != 1:
                continue
            if (target - int(m)) % gcd(int(step), order) == 0:
                return True
        return False

    def evaluate(self, q: complex, precision: int = 50) -> mpmath.mpc:
        """
        Avalia em |q| < 1 multiplicando os blocos até a precisão pedida.

        Raises:
            PoleAtPoint: se um fator invertido se anula em q.
        """
        with mpmath.workdps(precision + 10):
            q = mpmath.mpmathify(q)
            if abs(q) >= 1:
                raise PoleAtPoint(f"Produto infinito avaliado fora do disco unitário: |q| = {mpmath.nstr(abs(q), 8)}")
            value = self.finite.evaluate(q, precision)
            tol = mpmath.mpf(10) ** (-(precision + 5))
            for block in self.blocks:
                step = q ** _frac(block.step) if block.step.denominator != 1 else q ** block.step.numerator
                term = _frac(block.c) * _power(q, block.m)
                while True:
                    base = 1 + term
                    if block.e < 0 and abs(base) < tol:
                        raise PoleAtPoint(f"Bloco infinito se anula em q = {mpmath.nstr(q, 10)}")
                    value *= base ** block.e
                    if abs(term) < tol:
                        break
                    term *= step
            return +value


@dataclass(frozen=True)
class Monomial:
    """Parâmetro monomial c * q^e usado nas identidades parametrizadas."""

    coeff: Fraction
    exp: Fraction = Fraction(0)

    @classmethod
    def of(cls, coeff: Rational, exp: Rational = 0) -> "Monomial":
        return cls(Fraction(coeff), Fraction(exp))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """
        Lê textos como "0", "-1", "q", "-q^2", "3q^-1" ou "q^(1/2)".

        Raises:
            ValueError: se o texto não é um monômio.
        """
        raw = text.replace(" ", "").replace("*", "")
        if "q" not in raw:
            return cls(Fraction(raw))
        head, _, tail = raw.partition("q")
        if head in ("", "+"):
            coeff = Fraction(1)
        elif head == "-":
            coeff = Fraction(-1)
        else:
            coeff = Fraction(head)
        if not tail:
            return cls(coeff, Fraction(1))
        if not tail.startswith("^"):
            raise ValueError(f"Monômio inválido: {text!r}")
        return cls(coeff, Fraction(tail[1:].strip("()")))

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def expr(self) -> QProductExpr:
        return QProductExpr.monomial(self.coeff, self.exp)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.coeff * other.coeff, self.exp + other.exp)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if other.is_zero:
            raise ZeroDivisionError("Divisão por monômio nulo")
        return Monomial(self.coeff / other.coeff, self.exp - other.exp)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.coeff, self.exp)

    def power(self, n: int) -> QProductExpr:
        return QProductExpr.monomial(self.coeff ** n, self.exp * n)

    def poch(self, step: Rational, n: int) -> QProductExpr:
        """(c q^e; q^step)_n."""
        return poch(self.coeff, self.exp, step, n)

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.exp == 0:
            return str(self.coeff)
        c = "" if self.coeff == 1 else "-" if self.coeff == -1 else str(self.coeff)
        return f"{c}q" if self.exp == 1 else f"{c}q^{self.exp}"
