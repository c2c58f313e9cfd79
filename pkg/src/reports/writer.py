"""
Módulo com a gravação e formatação dos relatórios da CLI.
"""
import json
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

import pandas as pd
from loguru import logger

SCHEMA_VERSION = 1


def _json_default(value: Any) -> Any:
    """Converte Fraction, mpmath e afins para tipos JSON."""
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if hasattr(value, "real") and hasattr(value, "imag"):
        return [float(value.real), float(value.imag)]
    if hasattr(value, "value"):
        return value.value
    return str(value)


def render_json(payload: Dict[str, Any]) -> str:
    """
    Serializa o relatório com a versão do esquema no topo.

    Args:
        payload: Conteúdo do relatório.

    Returns:
        Texto JSON determinístico (chaves ordenadas, sem carimbo de data).
    """
    document = {"schema": SCHEMA_VERSION, **payload}
    return json.dumps(document, sort_keys=True, indent=2, default=_json_default, ensure_ascii=False)


def render_csv(rows: List[Dict[str, Any]]) -> str:
    return pd.DataFrame(rows).to_csv(index=False)


def render_table(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return "(vazio)"
    return pd.DataFrame(rows).to_string(index=False)


def render(payload: Dict[str, Any], rows: List[Dict[str, Any]], output_format: str) -> str:
    """
    Formata um relatório no formato pedido.

    Args:
        payload: Relatório completo (usado em json).
        rows: Visão tabular do mesmo relatório (usada em csv e table).
        output_format: json, csv ou table.

    Returns:
        Texto formatado.
    """
    if output_format == "json":
        return render_json(payload)
    if output_format == "csv":
        return render_csv(rows)
    if output_format == "table":
        return render_table(rows)
    raise ValueError(f"Formato de saída não suportado: {output_format}")


class ReportWriter:
    """Classe responsável por gravar os relatórios em disco."""

    def __init__(self, output_dir: str = None, include_timestamp: bool = False):
        """
        Inicializa o gravador de relatórios.

        Args:
            output_dir: Diretório de saída. Se None, usa data/output na raiz do projeto.
            include_timestamp: Se deve incluir timestamp no nome dos arquivos.
        """
        if output_dir is None:
            self.output_dir = os.path.join(
                os.path.dirname(os.path.dirname(os.path.dirname(__file__))),
                "data", "output"
            )
        else:
            self.output_dir = output_dir
        self.include_timestamp = include_timestamp

        os.makedirs(self.output_dir, exist_ok=True)

    def _path(self, filename: str, extension: str) -> str:
        if self.include_timestamp:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"{filename}_{timestamp}"
        return os.path.join(self.output_dir, f"{filename}.{extension}")

    def write_json(self, payload: Dict[str, Any], filename: str = "report") -> Optional[str]:
        """
        Salva o relatório em JSON.

        Args:
            payload: Conteúdo do relatório.
            filename: Nome do arquivo (sem extensão).

        Returns:
            Caminho do arquivo salvo.
        """
        if not payload:
            logger.warning("Relatório vazio fornecido para salvar em JSON")
            return None
        file_path = self._path(filename, "json")
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(render_json(payload))
            f.write("\n")
        logger.info(f"Relatório salvo com sucesso em: {file_path}")
        return file_path

    def save_to_csv(self, rows: List[Dict[str, Any]], filename: str = "report") -> Optional[str]:
        """
        Salva as linhas do relatório em CSV.

        Args:
            rows: Linhas do relatório.
            filename: Nome do arquivo (sem extensão).

        Returns:
            Caminho do arquivo salvo.
        """
        df = pd.DataFrame(rows)
        if df.empty:
            logger.warning("DataFrame vazio fornecido para salvar em CSV")
            return None
        file_path = self._path(filename, "csv")
        df.to_csv(file_path, index=False, encoding="utf-8")
        logger.info(f"DataFrame salvo com sucesso em: {file_path}")
        return file_path

    def write_table(self, rows: List[Dict[str, Any]], filename: str = "report") -> Optional[str]:
        """Salva as linhas como tabela de texto alinhada."""
        if not rows:
            logger.warning("Tabela vazia fornecida para salvar")
            return None
        file_path = self._path(filename, "txt")
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(render_table(rows))
            f.write("\n")
        logger.info(f"Tabela salva com sucesso em: {file_path}")
        return file_path

    def write(
        self,
        payload: Dict[str, Any],
        rows: List[Dict[str, Any]],
        output_format: str,
        filename: str = "report"
    ) -> Optional[str]:
        """Grava no formato pedido (json, csv ou table)."""
        if output_format == "json":
            return self.write_json(payload, filename)
        if output_format == "csv":
            return self.save_to_csv(rows, filename)
        if output_format == "table":
            return self.write_table(rows, filename)
        raise ValueError(f"Formato de saída não suportado: {output_format}")
