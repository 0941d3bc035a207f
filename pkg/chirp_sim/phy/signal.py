"""
Señal compleja en banda base para ChirpSim.

Example:
    >>> import numpy as np
    >>> from chirp_sim.phy.signal import ComplexSignal
    >>> s = ComplexSignal(samples=np.array([1, 1j, -1, -1j]))
    >>> s.length, s.energy(), s.is_unit_modulus()
    (4, 4.0, True)
"""

from typing import Any

import numpy as np
from pydantic import BaseModel, Field, field_validator

from chirp_sim.phy.numerics import ComplexVector


class ComplexSignal(BaseModel):
    """
    Secuencia de muestras complejas de longitud fija.

    Las muestras se copian a un array complex128 de solo lectura al construir.

    Attributes:
        samples: Muestras complejas (array 1-D).
    """

    samples: Any = Field(..., description="Muestras complejas")

    @field_validator("samples")
    @classmethod
    def validate_samples(cls, v: Any) -> ComplexVector:
        """Convierte a complex128 1-D, finito y de solo lectura."""
        array = np.array(v, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(array)):
            raise ValueError("La señal contiene valores no finitos")
        array.flags.writeable = False
        return array

    @property
    def length(self) -> int:
        """Número de muestras."""
        return int(self.samples.shape[0])

    def energy(self) -> float:
        """Energía Σ|s[n]|²."""
        return float(np.sum(np.abs(self.samples) ** 2))

    def is_unit_modulus(self, tolerance: float = 1e-10) -> bool:
        """Indica si todas las muestras tienen módulo 1."""
        return bool(np.all(np.abs(np.abs(self.samples) - 1.0) <= tolerance))

    def __len__(self) -> int:
        return self.length

    model_config = {
        "frozen": True,
        "arbitrary_types_allowed": True,
    }
