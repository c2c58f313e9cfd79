"""
Módulo para carregar e gerenciar configurações do projeto.
"""
import os
from dataclasses import dataclass, fields, replace
from typing import Dict, Any, Optional

from dotenv import dotenv_values
from loguru import logger

from src.utils.exceptions import ConfigError

ENV_PREFIX = "QRENORM_"
OUTPUT_FORMATS = ("json", "csv", "table")


@dataclass(frozen=True)
class RunConfig:
    """Parâmetros de uma execução da CLI."""

    default_bound: int = 200
    precision_digits: int = 50
    output_format: str = "json"
    oracle_cache_path: Optional[str] = None
    parallelism: int = 1
    stall_window: int = 50
    max_validated_digits: int = 60
    tail_tolerance: float = 1e-10
    quadrature_tolerance: float = 1e-8
    output_dir: Optional[str] = None
    log_level: str = "INFO"

    def __post_init__(self):
        if self.default_bound < 1:
            raise ConfigError(f"default_bound deve ser >= 1, recebido {self.default_bound}")
        if self.precision_digits < 15:
            raise ConfigError(f"precision_digits deve ser >= 15, recebido {self.precision_digits}")
        if self.parallelism < 1:
            raise ConfigError(f"parallelism deve ser >= 1, recebido {self.parallelism}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format inválido: {self.output_format}")
        if self.stall_window < 1:
            raise ConfigError(f"stall_window deve ser >= 1, recebido {self.stall_window}")

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """
        Retorna uma cópia com os valores informados (valores None são ignorados).

        Args:
            overrides: Campos a sobrescrever, normalmente vindos das opções da CLI.

        Returns:
            Nova instância de RunConfig.
        """
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values)


def _coerce(name: str, raw: str) -> Any:
    """Converte o texto do arquivo para o tipo declarado no campo."""
    field_types = {f.name: f.type for f in fields(RunConfig)}
    declared = field_types[name]
    if raw is None or raw.strip() == "":
        if "Optional" in str(declared):
            return None
        raise ConfigError(f"Valor vazio para a chave obrigatória: {name}")
    raw = raw.strip()
    try:
        if declared in (int, "int"):
            return int(raw)
        if declared in (float, "float"):
            return float(raw)
    except ValueError as e:
        raise ConfigError(f"Valor inválido para {name}: {raw!r}") from e
    return raw


class ConfigLoader:
    """Classe responsável por carregar e gerenciar configurações do projeto."""

    def __init__(self, config_dir: str = None):
        """
        Inicializa o carregador de configurações.

        Args:
            config_dir: Diretório de configurações. Se None, usa o diretório config/ na raiz.
        """
        if config_dir is None:
            self.config_dir = os.path.join(
                os.path.dirname(os.path.dirname(os.path.dirname(__file__))),
                "config"
            )
        else:
            self.config_dir = config_dir

        self.configs: Dict[str, Dict[str, Any]] = {}

    def load_config(self, config_name: str) -> Dict[str, Any]:
        """
        Carrega um arquivo de configuração chave=valor.

        Args:
            config_name: Nome do arquivo (sem extensão) ou caminho completo.

        Returns:
            Dicionário com os valores já convertidos para os tipos do RunConfig.
        """
        if os.path.isfile(config_name):
            config_path = config_name
        else:
            config_path = os.path.join(self.config_dir, f"{config_name}.env")

        if not os.path.exists(config_path):
            logger.error(f"Arquivo de configuração não encontrado: {config_path}")
            raise FileNotFoundError(f"Arquivo de configuração não encontrado: {config_path}")

        config = self._normalize(dotenv_values(config_path), origem=config_path)
        self.configs[config_name] = config
        logger.debug(f"Configuração carregada de {config_path}: {sorted(config)}")
        return config

    def get_config(self, config_name: str) -> Dict[str, Any]:
        """
        Obtém uma configuração já carregada ou carrega-a caso não esteja.

        Args:
            config_name: Nome da configuração.

        Returns:
            Dicionário com as configurações.
        """
        if config_name not in self.configs:
            return self.load_config(config_name)
        return self.configs[config_name]

    def from_environment(self, environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
        """
        Lê as variáveis QRENORM_* do ambiente.

        Args:
            environ: Mapeamento a usar no lugar de os.environ (útil em testes).

        Returns:
            Dicionário com os valores convertidos.
        """
        environ = os.environ if environ is None else environ
        raw = {k: v for k, v in environ.items() if k.startswith(ENV_PREFIX)}
        return self._normalize(raw, origem="ambiente")

    def build_run_config(
        self,
        config_path: Optional[str] = None,
        environ: Optional[Dict[str, str]] = None,
        **overrides: Any
    ) -> RunConfig:
        """
        Monta o RunConfig: padrões < arquivo < ambiente < opções da CLI.

        Args:
            config_path: Arquivo chave=valor opcional.
            environ: Ambiente opcional (padrão os.environ).
            overrides: Valores vindos das opções da CLI.

        Returns:
            RunConfig validado.
        """
        values: Dict[str, Any] = {}
        if config_path:
            try:
                values.update(self.load_config(config_path))
            except FileNotFoundError as e:
                raise ConfigError(str(e)) from e
        values.update(self.from_environment(environ))
        values.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig(**values)

    @staticmethod
    def _normalize(raw: Dict[str, Optional[str]], origem: str) -> Dict[str, Any]:
        known = {f.name for f in fields(RunConfig)}
        config: Dict[str, Any] = {}
        for key, value in raw.items():
            name = key[len(ENV_PREFIX):] if key.upper().startswith(ENV_PREFIX) else key
            name = name.lower()
            if name not in known:
                logger.warning(f"Chave de configuração desconhecida ignorada ({origem}): {key}")
                continue
            config[name] = _coerce(name, value)
        return config
