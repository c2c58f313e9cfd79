"""
Tabelas de coeficientes calculados pelos oráculos, com persistência em CSV e
cabeçalho JSON.
"""
import hashlib
import json
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Optional

import pandas as pd
from loguru import logger
from tqdm import tqdm

from src.arithmetic.character import tw_pos
from src.arithmetic.ideals import ideal_count
from src.arithmetic.quadratic import ORDER_SQRT2, ORDER_SQRT3, ORDER_SQRT6, class_count, signed_class_total, sigma_weight


class CoeffKind(str, Enum):
    T_SIGMA = "T_SIGMA"
    TW_POS = "TW_POS"
    TW_NEG = "TW_NEG"
    IDEAL_COUNT = "IDEAL_COUNT"
    SIGNED_CLASS_COUNT = "SIGNED_CLASS_COUNT"


# Convenções padrão gravadas no cabeçalho de cada tabela
DEFAULT_CONVENTIONS = {
    CoeffKind.T_SIGMA: "T(m) = classes de u^2-6v^2=m com peso (u+3v mod 12); unidade 5+2sqrt6",
    CoeffKind.TW_POS: "T_W(m) = sum_{d|m} chi(d) conj chi(m/d); chi(-1)=1, chi(3)=i",
    CoeffKind.TW_NEG: "T_W(-(8k-1)) lido de -[q^k] S[W]",
    CoeffKind.IDEAL_COUNT: "ideais de Z[sqrt2] com norma m",
    CoeffKind.SIGNED_CLASS_COUNT: "classes de u^2-3v^2=m sob <-1, 2+sqrt3>",
}

DEFAULT_ORDERS = {
    CoeffKind.T_SIGMA: ORDER_SQRT6.D,
    CoeffKind.TW_POS: ORDER_SQRT2.D,
    CoeffKind.TW_NEG: ORDER_SQRT2.D,
    CoeffKind.IDEAL_COUNT: ORDER_SQRT2.D,
    CoeffKind.SIGNED_CLASS_COUNT: ORDER_SQRT3.D,
}

# Oráculos puramente aritméticos; TW_NEG é preenchido a partir da série S[W]
COEFF_PROVIDERS: Dict[CoeffKind, Callable[[int], int]] = {
    CoeffKind.T_SIGMA: lambda m: signed_class_total(ORDER_SQRT6, m, sigma_weight),
    CoeffKind.TW_POS: tw_pos,
    CoeffKind.IDEAL_COUNT: lambda m: ideal_count(ORDER_SQRT2, m),
    CoeffKind.SIGNED_CLASS_COUNT: lambda m: class_count(ORDER_SQRT3, m),
}


@dataclass
class CoeffTable:
    """Mapa índice -> inteiro exato de um tipo de oráculo."""

    kind: CoeffKind
    order_D: int
    conventions: str
    entries: Dict[int, int] = field(default_factory=dict)

    @classmethod
    def empty(cls, kind: CoeffKind) -> "CoeffTable":
        kind = CoeffKind(kind)
        return cls(kind, DEFAULT_ORDERS[kind], DEFAULT_CONVENTIONS[kind])

    @property
    def cache_key(self) -> str:
        digest = hashlib.sha1(self.conventions.encode("utf-8")).hexdigest()[:10]
        return f"{self.kind.value.lower()}_D{self.order_D}_{digest}"

    def __contains__(self, index: int) -> bool:
        return index in self.entries

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __len__(self) -> int:
        return len(self.entries)

    def fill(
        self,
        indices: Iterable[int],
        provider: Optional[Callable[[int], int]] = None,
        progress: bool = False
    ) -> "CoeffTable":
        """
        Calcula os índices ausentes com o oráculo do tipo (ou ``provider``).

        Raises:
            ValueError: se o tipo não tem oráculo aritmético e nenhum provider foi dado.
        """
        provider = provider or COEFF_PROVIDERS.get(self.kind)
        if provider is None:
            raise ValueError(f"Tabela {self.kind.value} requer um provider explícito")
        missing = [i for i in indices if i not in self.entries]
        for index in tqdm(missing, desc=self.kind.value, disable=not progress):
            value = provider(index)
            if int(value) != value:
                raise ValueError(f"{self.kind.value}[{index}] = {value} não é inteiro")
            self.entries[index] = int(value)
        if missing:
            logger.debug(f"{self.kind.value}: {len(missing)} novos índices calculados")
        return self

    def get(self, index: int, provider: Optional[Callable[[int], int]] = None) -> int:
        if index not in self.entries:
            self.fill([index], provider)
        return self.entries[index]

    def to_dataframe(self) -> pd.DataFrame:
        rows = sorted(self.entries.items())
        return pd.DataFrame(rows, columns=["index", "value"])

    def header(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "order_D": self.order_D, "conventions": self.conventions}

    def save(self, directory: str) -> str:
        """
        Grava ``<chave>.csv`` e ``<chave>.json`` em ``directory``.

        Returns:
            Caminho do CSV gravado.
        """
        os.makedirs(directory, exist_ok=True)
        csv_path = os.path.join(directory, f"{self.cache_key}.csv")
        json_path = os.path.join(directory, f"{self.cache_key}.json")
        self.to_dataframe().to_csv(csv_path, index=False, encoding="utf-8")
        with open(json_path, "w", encoding="utf-8") as f:
            json.dump(self.header(), f, sort_keys=True, indent=2)
        logger.info(f"Tabela {self.kind.value} com {len(self)} entradas salva em: {csv_path}")
        return csv_path

    @classmethod
    def load(cls, directory: str, kind: CoeffKind, conventions: Optional[str] = None) -> Optional["CoeffTable"]:
        """
        Carrega a tabela do cache, se existir com as mesmas convenções.

        Returns:
            CoeffTable ou None quando o arquivo não existe.
        """
        table = cls.empty(kind)
        if conventions is not None:
            table.conventions = conventions
        csv_path = os.path.join(directory, f"{table.cache_key}.csv")
        json_path = os.path.join(directory, f"{table.cache_key}.json")
        if not (os.path.exists(csv_path) and os.path.exists(json_path)):
            logger.debug(f"Cache ausente para {table.kind.value} em {directory}")
            return None
        with open(json_path, "r", encoding="utf-8") as f:
            header = json.load(f)
        if header != table.header():
            logger.warning(f"Cabeçalho divergente em {json_path}; cache ignorado")
            return None
        df = pd.read_csv(csv_path)
        table.entries = {int(i): int(v) for i, v in zip(df["index"], df["value"])}
        logger.info(f"Tabela {table.kind.value} carregada com {len(table)} entradas de: {csv_path}")
        return table

    @classmethod
    def cached(cls, directory: Optional[str], kind: CoeffKind) -> "CoeffTable":
        """Tabela do cache quando houver, senão vazia."""
        if directory:
            table = cls.load(directory, kind)
            if table is not None:
                return table
        return cls.empty(kind)
