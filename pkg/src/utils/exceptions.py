"""
Hierarquia de exceções do qrenorm.

Cada exceção carrega o código de saída que a CLI devolve quando ela chega
até a borda do programa.
"""


class QRenormError(Exception):
    """Erro base do projeto."""

    exit_code = 1


# Entradas inválidas (saída 2)

class UsageError(QRenormError):
    exit_code = 2


class ZeroLeadingTerm(UsageError):
    """Inversão de uma série nula até o limite de truncamento."""


class NotExpandable(UsageError):
    """Fator invertido com expoente não positivo: não há expansão em série de potências."""


class ZeroFactorCoefficient(UsageError):
    """Fator com coeficiente zero não pode ser normalizado sob q -> 1/q."""


class NonConvergentParameters(UsageError):
    """Parâmetros cujas valuações dos termos não crescem sem limite."""


class NoLimitTerm(UsageError):
    """Família sem termo limite catalogado."""


class NonExpandableTail(UsageError):
    """Termo transformado por q -> 1/q sem expansão em série de potências."""


class PoleAtPoint(UsageError):
    """Um fator invertido se anula no ponto de avaliação."""


class UnknownSeries(UsageError):
    """Identificador de série, identidade ou oráculo desconhecido."""


class ConfigError(UsageError):
    """Arquivo ou valor de configuração inválido."""


# Falhas de verificação ou numéricas (saída 1)

class StallDetected(QRenormError):
    """As valuações das diferenças da soma de caudas deixaram de crescer."""


class ClassInvariantViolation(QRenormError):
    """Dois membros da mesma classe de Pell receberam pesos diferentes."""


class NonRealValue(QRenormError):
    """Soma de caracteres com parte imaginária não nula."""


class PrecisionUnreachable(QRenormError):
    """Precisão pedida acima da faixa validada."""


class TailTooLarge(QRenormError):
    """Cota da cauda da série de Fourier acima da tolerância."""


class QuadratureNotConverged(QRenormError):
    """Refinamentos sucessivos da quadratura discordam além da tolerância."""


class NonTerminating(QRenormError):
    """Soma numa raiz da unidade que não terminou dentro da ordem da raiz."""


# Buraco do domínio (saída 3)

class DomainHole(QRenormError):
    """Ponto na classe de cúspide S_1/2, fora do domínio de f_W."""

    exit_code = 3
