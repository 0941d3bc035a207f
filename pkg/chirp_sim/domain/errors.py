"""
Jerarquía de errores de ChirpSim.

Todos los errores derivan de ChirpSimError, que a su vez hereda de ValueError
para que los validadores de pydantic los conviertan en ValidationError.
"""


class ChirpSimError(ValueError):
    """Error base de la librería."""


class InvalidDimensionError(ChirpSimError):
    """Dimensión nula o incompatible para una matriz o transformada."""


class InvalidInputError(ChirpSimError):
    """Matriz de entrada que no cumple las precondiciones (cuadrada, hermítica)."""


class InvalidArgumentError(ChirpSimError):
    """Argumento escalar fuera de rango (retardo, índice de chirp...)."""


class InvalidLengthError(ChirpSimError):
    """Longitud de bits o de señal distinta de la esperada."""


class UnsupportedConstellationError(ChirpSimError):
    """Orden de constelación no soportado (debe ser potencia de 2)."""


class InvalidConfigError(ChirpSimError):
    """Configuración del sistema incoherente con las señales recibidas."""


class InvalidDelayError(ChirpSimError):
    """Retardo de camino mayor o igual que el tamaño del bloque."""


class InvalidPairError(ChirpSimError):
    """Par de candidatos idénticos en el cálculo de PEP."""


class InvalidComparisonError(ChirpSimError):
    """Etiquetas de bits de distinta longitud."""


class UndefinedPaprError(ChirpSimError):
    """PAPR de una señal nula."""


class DegenerateConfigError(ChirpSimError):
    """No existe ningún orden de chirp libre de ambigüedad."""


class SearchSpaceTooLargeError(ChirpSimError):
    """El número de candidatos del detector ML supera el límite configurado."""
