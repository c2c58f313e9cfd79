"""
Configuração de logging do qrenorm.
"""
import os
import sys
import time
from loguru import logger

from src.utils.exceptions import ConfigError

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"


def setup_logger(log_dir: str = None, level: str = "INFO", run_name: str = "qrenorm"):
    """
    Configura o logger para uma execução da CLI.

    Args:
        log_dir: Diretório para os arquivos de log. Se None, só registra no console.
        level: Nível de log (DEBUG, INFO, WARNING, ERROR).
        run_name: Prefixo do arquivo de log, em geral o nome do comando.

    Raises:
        ConfigError: se o nível não é conhecido pelo loguru.
    """
    # Aceita "debug" vindo do arquivo de configuração
    level = str(level).upper()
    try:
        logger.level(level)
    except ValueError:
        raise ConfigError(f"Nível de log desconhecido: {level}") from None

    # Remove o handler padrão do loguru
    logger.remove()

    # Console sempre ativo
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level, colorize=True)

    # Arquivo por execução, nomeado pelo comando
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        log_file = os.path.join(log_dir, f"{run_name}_{time.strftime('%Y%m%d_%H%M%S')}.log")
        logger.add(
            log_file,
            format=FILE_FORMAT,
            level=level,
            rotation="10 MB",  # suítes longas em DEBUG passam disso
            retention="1 month",
            compression="zip"  # logs rotacionados
        )
        logger.info(f"Log configurado em: {log_file}")

    return logger


def get_logger():
    """Instância configurada do logger."""
    return logger
