import pytest
from loguru import logger


@pytest.fixture(autouse=True)
def quiet_logger():
    """Silencia o loguru durante os testes."""
    logger.remove()
    yield
    logger.remove()
