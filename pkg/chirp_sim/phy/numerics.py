"""
Utilidades numéricas de ChirpSim.

Matrices DFT unitarias, matrices de desplazamiento cíclico y descomposición
espectral de matrices hermíticas semidefinidas positivas con rango tolerado.
Todas las funciones son puras y devuelven arrays nuevos de numpy.

Example:
    >>> import numpy as np
    >>> from chirp_sim.phy.numerics import dft_matrix
    >>> f = dft_matrix(8)
    >>> bool(np.allclose(f @ dft_matrix(8, inverse=True), np.eye(8)))
    True
"""

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from chirp_sim.domain.errors import (
    InvalidArgumentError,
    InvalidDimensionError,
    InvalidInputError,
)

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]

DEFAULT_RANK_TOLERANCE = 1e-10
HERMITIAN_TOLERANCE = 1e-9


class EigenResult(BaseModel):
    """
    Autovalores de una matriz hermítica semidefinida positiva.

    Attributes:
        eigenvalues: Autovalores en orden descendente.
        rank: Autovalores mayores que tolerance·max(λ_max, 1).
        tolerance: Tolerancia relativa usada para el rango.
    """

    eigenvalues: tuple[float, ...] = Field(..., description="Autovalores descendentes")
    rank: int = Field(..., ge=0, description="Rango numérico")
    tolerance: float = Field(..., gt=0.0, description="Tolerancia relativa")

    @property
    def nonzero(self) -> tuple[float, ...]:
        """Los `rank` autovalores significativos."""
        return self.eigenvalues[: self.rank]

    model_config = {
        "frozen": True,
    }


def dft_matrix(size: int, inverse: bool = False) -> ComplexMatrix:
    """
    Matriz DFT unitaria de `size` puntos.

    La entrada (k, n) vale exp(−j2πkn/size)/√size; con inverse=True se devuelve
    la conjugada, que es la inversa por ser unitaria.

    Raises:
        InvalidDimensionError: Si size < 1.
    """
    if size < 1:
        raise InvalidDimensionError(f"Tamaño de DFT inválido: {size}")
    k = np.arange(size)
    sign = 1.0 if inverse else -1.0
    return np.exp(sign * 2j * np.pi * np.outer(k, k) / size) / np.sqrt(size)


def circular_shift_matrix(size: int, delay: int) -> ComplexMatrix:
    """
    Matriz de permutación Π^delay del desplazamiento cíclico hacia delante.

    Cumple (Π^l x)[n] = x[(n − l) mod size].

    Raises:
        InvalidArgumentError: Si delay no está en [0, size).
    """
    if size < 1:
        raise InvalidDimensionError(f"Tamaño inválido: {size}")
    if not 0 <= delay < size:
        raise InvalidArgumentError(f"Retardo {delay} fuera de [0, {size})")
    return np.roll(np.eye(size, dtype=np.complex128), delay, axis=0)


def hermitian_eigen(
    m: ComplexMatrix, tolerance: float = DEFAULT_RANK_TOLERANCE
) -> EigenResult:
    """
    Autovalores y rango numérico de una matriz hermítica semidefinida positiva.

    Args:
        m: Matriz cuadrada hermítica (dentro de 1e-9 por entrada).
        tolerance: Tolerancia relativa al mayor autovalor para el rango.

    Returns:
        EigenResult con autovalores descendentes; los negativos por redondeo
        se recortan a 0.

    Raises:
        InvalidInputError: Si la matriz no es cuadrada, no es hermítica o tiene
            autovalores claramente negativos.
    """
    matrix = np.asarray(m, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidInputError(f"Se esperaba una matriz cuadrada, forma {matrix.shape}")
    if matrix.shape[0] == 0:
        return EigenResult(eigenvalues=(), rank=0, tolerance=tolerance)
    if not np.allclose(matrix, matrix.conj().T, atol=HERMITIAN_TOLERANCE, rtol=0.0):
        raise InvalidInputError("La matriz no es hermítica")

    values = np.linalg.eigvalsh(matrix)[::-1]
    scale = max(float(values[0]), 1.0)
    threshold = tolerance * scale
    if values[-1] < -threshold:
        raise InvalidInputError(
            f"La matriz no es semidefinida positiva (λ_min = {values[-1]:.3e})"
        )
    values = np.where(values < 0.0, 0.0, values)
    rank = int(np.count_nonzero(values > threshold))
    return EigenResult(
        eigenvalues=tuple(float(v) for v in values),
        rank=rank,
        tolerance=tolerance,
    )
