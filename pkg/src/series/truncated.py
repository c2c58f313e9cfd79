"""
Séries de Laurent/Puiseux truncadas com coeficientes racionais exatos.

A série vive na grade de expoentes k/d (d = ``grid``) e é conhecida módulo
q^(bound/d). Os coeficientes são ``int`` quando inteiros e ``Fraction`` caso
contrário; os dois tipos se misturam sem perda de exatidão.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from src.utils.exceptions import ZeroLeadingTerm

Coeff = Union[int, Fraction]
Rational = Union[int, Fraction]


def exact(value: Rational) -> Coeff:
    """Normaliza um racional: int quando o denominador é 1, Fraction caso contrário."""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def inverse(value: Coeff) -> Coeff:
    if value == 1 or value == -1:
        return int(value)
    return exact(Fraction(1) / Fraction(value))


def grid_for(*values: Rational) -> int:
    """Menor denominador comum dos expoentes informados."""
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def on_grid(value: Rational, grid: int) -> int:
    scaled = Fraction(value) * grid
    if scaled.denominator != 1:
        raise ValueError(f"Expoente {value} fora da grade 1/{grid}")
    return scaled.numerator


@dataclass(frozen=True, eq=False)
class TruncatedQSeries:
    """
    Série truncada sum_i coeffs[i] q^((offset + i)/grid) mod q^(bound/grid).

    A forma canônica remove zeros à esquerda (offset aponta para o primeiro
    coeficiente não nulo, ou offset = bound na série nula) e zeros à direita.
    """

    grid: int
    offset: int
    coeffs: Tuple[Coeff, ...]
    bound: int

    def __post_init__(self):
        if self.grid < 1:
            raise ValueError(f"Denominador da grade deve ser >= 1, recebido {self.grid}")
        coeffs = [exact(c) for c in self.coeffs][: max(0, self.bound - self.offset)]
        offset = self.offset
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            offset, coeffs = self.bound, []
        else:
            offset, coeffs = offset + start, coeffs[start:end]
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    __hash__ = None

    # Construtores

    @classmethod
    def zero(cls, bound: Rational, grid: int = 1) -> "TruncatedQSeries":
        grid = lcm(grid, Fraction(bound).denominator)
        b = on_grid(bound, grid)
        return cls(grid, b, (), b)

    @classmethod
    def one(cls, bound: Rational) -> "TruncatedQSeries":
        return cls.monomial(1, 0, bound)

    @classmethod
    def monomial(cls, coeff: Rational, exponent: Rational, bound: Rational) -> "TruncatedQSeries":
        grid = grid_for(exponent, bound)
        return cls(grid, on_grid(exponent, grid), (exact(coeff),), on_grid(bound, grid))

    @classmethod
    def from_coefficients(
        cls,
        coeffs: Sequence[Rational],
        bound: Rational,
        offset: Rational = 0,
        grid: int = 1
    ) -> "TruncatedQSeries":
        """
        Cria a série sum_i coeffs[i] q^(offset + i/grid).

        Args:
            coeffs: Coeficientes em passos de 1/grid.
            bound: Expoente de truncamento (racional).
            offset: Expoente do primeiro coeficiente (racional).
            grid: Denominador da grade.
        """
        g = lcm(grid, Fraction(bound).denominator, Fraction(offset).denominator)
        step = g // grid
        spaced: List[Coeff] = []
        for i, c in enumerate(coeffs):
            if i:
                spaced.extend([0] * (step - 1))
            spaced.append(exact(c))
        return cls(g, on_grid(offset, g), tuple(spaced), on_grid(bound, g))

    @classmethod
    def from_terms(cls, terms: Dict[Rational, Rational], bound: Rational) -> "TruncatedQSeries":
        """Cria a série a partir de um dicionário expoente -> coeficiente."""
        grid = grid_for(bound, *terms.keys())
        b = on_grid(bound, grid)
        if not terms:
            return cls(grid, b, (), b)
        lo = min(on_grid(e, grid) for e in terms)
        dense: List[Coeff] = [0] * max(0, b - lo)
        for e, c in terms.items():
            k = on_grid(e, grid) - lo
            if k < len(dense):
                dense[k] = exact(dense[k] + exact(c))
        return cls(grid, lo, tuple(dense), b)

    # Propriedades

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def bound_exponent(self) -> Fraction:
        return Fraction(self.bound, self.grid)

    @property
    def valuation(self) -> Fraction:
        """Expoente do primeiro coeficiente não nulo (igual ao limite na série nula)."""
        return Fraction(self.offset, self.grid)

    @property
    def lead_coefficient(self) -> Coeff:
        if self.is_zero:
            raise ZeroLeadingTerm("Série nula até o limite de truncamento")
        return self.coeffs[0]

    def coefficient(self, exponent: Rational) -> Coeff:
        """
        Coeficiente de q^exponent.

        Raises:
            ValueError: se o expoente está no limite de truncamento ou acima dele.
        """
        exponent = Fraction(exponent)
        if exponent >= self.bound_exponent:
            raise ValueError(f"Coeficiente de q^{exponent} desconhecido (limite q^{self.bound_exponent})")
        scaled = exponent * self.grid
        if scaled.denominator != 1:
            return 0
        k = scaled.numerator - self.offset
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def coefficients(self, stop: Optional[int] = None, start: int = 0) -> List[Coeff]:
        """Coeficientes dos expoentes inteiros start..stop-1 (stop padrão: limite)."""
        if stop is None:
            stop = ceil(self.bound_exponent)
        return [self.coefficient(e) for e in range(start, stop)]

    def items(self) -> Iterator[Tuple[Fraction, Coeff]]:
        """Itera (expoente, coeficiente) sobre os coeficientes não nulos."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield Fraction(self.offset + i, self.grid), c

    def head(self, count: int = 10) -> List[str]:
        """Primeiros coeficientes não nulos como texto 'c*q^e', usado nos relatórios."""
        out = []
        for e, c in self.items():
            out.append(f"{c}*q^{e}")
            if len(out) >= count:
                break
        return out

    # Mudança de grade e truncamento

    def rescale(self, grid: int) -> "TruncatedQSeries":
        if grid % self.grid:
            raise ValueError(f"Grade {grid} não é múltipla de {self.grid}")
        f = grid // self.grid
        if f == 1:
            return self
        spaced: List[Coeff] = []
        for i, c in enumerate(self.coeffs):
            if i:
                spaced.extend([0] * (f - 1))
            spaced.append(c)
        return TruncatedQSeries(grid, self.offset * f, tuple(spaced), self.bound * f)

    def truncate(self, bound: Rational) -> "TruncatedQSeries":
        """Reduz o limite de truncamento (nunca o aumenta)."""
        grid = lcm(self.grid, Fraction(bound).denominator)
        s = self.rescale(grid)
        b = min(on_grid(bound, grid), s.bound)
        return TruncatedQSeries(grid, min(s.offset, b), s.coeffs, b)

    def _dense(self, start: int, stop: int) -> List[Coeff]:
        out: List[Coeff] = [0] * max(0, stop - start)
        for i, c in enumerate(self.coeffs):
            k = self.offset + i - start
            if 0 <= k < len(out):
                out[k] = c
        return out

    # Aritmética

    def __neg__(self) -> "TruncatedQSeries":
        return TruncatedQSeries(self.grid, self.offset, tuple(-c for c in self.coeffs), self.bound)

    def __add__(self, other: "TruncatedQSeries") -> "TruncatedQSeries":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        a, b = _align(self, other)
        bound = min(a.bound, b.bound)
        start = min(a.offset, b.offset, bound)
        da, db = a._dense(start, bound), b._dense(start, bound)
        return TruncatedQSeries(a.grid, start, tuple(x + y for x, y in zip(da, db)), bound)

    __radd__ = __add__

    def __sub__(self, other: "TruncatedQSeries") -> "TruncatedQSeries":
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Rational) -> "TruncatedQSeries":
        factor = exact(factor)
        return TruncatedQSeries(self.grid, self.offset, tuple(factor * c for c in self.coeffs), self.bound)

    def __mul__(self, other: Union["TruncatedQSeries", Rational]) -> "TruncatedQSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        a, b = _align(self, other)
        bound = min(a.bound + b.offset, b.bound + a.offset)
        offset = a.offset + b.offset
        length = bound - offset
        if a.is_zero or b.is_zero or length <= 0:
            return TruncatedQSeries(a.grid, bound, (), bound)
        out: List[Coeff] = [0] * length
        bc = b.coeffs
        for i, x in enumerate(a.coeffs):
            if i >= length:
                break
            if x == 0:
                continue
            for j in range(min(len(bc), length - i)):
                y = bc[j]
                if y:
                    out[i + j] += x * y
        return TruncatedQSeries(a.grid, offset, tuple(out), bound)

    def __rmul__(self, other: Rational) -> "TruncatedQSeries":
        return self.scale(other)

    def shift(self, exponent: Rational, coeff: Rational = 1) -> "TruncatedQSeries":
        """Multiplica por coeff * q^exponent (o limite se desloca junto)."""
        grid = lcm(self.grid, Fraction(exponent).denominator)
        s = self.rescale(grid)
        k = on_grid(exponent, grid)
        coeff = exact(coeff)
        return TruncatedQSeries(grid, s.offset + k, tuple(coeff * c for c in s.coeffs), s.bound + k)

    def invert(self) -> "TruncatedQSeries":
        """
        Inverso multiplicativo com a mesma precisão relativa.

        Raises:
            ZeroLeadingTerm: se a série é nula até o limite.
        """
        if self.is_zero:
            raise ZeroLeadingTerm(f"Série nula até q^{self.bound_exponent}: não há termo líder para inverter")
        a = self.coeffs
        length = self.bound - self.offset
        c0 = a[0]
        inv0 = inverse(c0)
        out: List[Coeff] = [0] * length
        out[0] = inv0
        for k in range(1, length):
            acc = 0
            for j in range(1, min(k, len(a) - 1) + 1):
                if a[j]:
                    acc += a[j] * out[k - j]
            out[k] = exact(-inv0 * acc)
        return TruncatedQSeries(self.grid, -self.offset, tuple(out), self.bound - 2 * self.offset)

    def subst_power(self, k: int) -> "TruncatedQSeries":
        """Substituição q -> q^k (k inteiro positivo)."""
        if k < 1:
            raise ValueError(f"Potência da substituição deve ser positiva, recebido {k}")
        if k == 1:
            return self
        spaced: List[Coeff] = []
        for i, c in enumerate(self.coeffs):
            if i:
                spaced.extend([0] * (k - 1))
            spaced.append(c)
        return TruncatedQSeries(self.grid, self.offset * k, tuple(spaced), self.bound * k)

    def subst_neg(self) -> "TruncatedQSeries":
        """Substituição q -> -q (somente para expoentes inteiros)."""
        out = []
        for i, c in enumerate(self.coeffs):
            e = Fraction(self.offset + i, self.grid)
            if c and e.denominator != 1:
                raise ValueError(f"q -> -q indefinida para o expoente fracionário {e}")
            out.append(-c if e.numerator % 2 else c)
        return TruncatedQSeries(self.grid, self.offset, tuple(out), self.bound)

    # Comparação

    def first_mismatch(self, other: "TruncatedQSeries") -> Optional[Fraction]:
        """Menor expoente abaixo do limite comum em que as séries diferem (None se iguais)."""
        a, b = _align(self, other)
        bound = min(a.bound, b.bound)
        start = min(a.offset, b.offset, bound)
        da, db = a._dense(start, bound), b._dense(start, bound)
        for i, (x, y) in enumerate(zip(da, db)):
            if x != y:
                return Fraction(start + i, a.grid)
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    def __repr__(self) -> str:
        return f"TruncatedQSeries({' + '.join(self.head(6)) or '0'} + O(q^{self.bound_exponent}))"

    # Serialização

    def to_dict(self) -> Dict[str, object]:
        return {
            "d": self.grid,
            "offset": self.offset,
            "bound": self.bound,
            "coeffs": [[Fraction(c).numerator, Fraction(c).denominator] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "TruncatedQSeries":
        coeffs = tuple(Fraction(int(n), int(d)) for n, d in data["coeffs"])
        return cls(int(data["d"]), int(data["offset"]), coeffs, int(data["bound"]))

    def to_rows(self) -> List[Tuple[int, int, int, int]]:
        """Linhas (exponent_num, exponent_den, num, den) dos coeficientes não nulos."""
        rows = []
        for e, c in self.items():
            c = Fraction(c)
            rows.append((e.numerator, e.denominator, c.numerator, c.denominator))
        return rows


def _align(a: TruncatedQSeries, b: TruncatedQSeries) -> Tuple[TruncatedQSeries, TruncatedQSeries]:
    grid = lcm(a.grid, b.grid)
    return a.rescale(grid), b.rescale(grid)
