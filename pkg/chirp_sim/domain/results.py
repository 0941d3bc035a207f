"""
Modelos de resultados para ChirpSim.

Este módulo define los registros inmutables que producen el detector, el
análisis (cota de BER, optimización del orden de chirp) y el motor Monte Carlo.

Example:
    >>> from chirp_sim.domain import BerRow
    >>> row = BerRow.from_counts(ebn0_db=10.0, trials=100, bit_errors=12, bits_per_trial=12)
    >>> row.ber
    0.01
"""

import math

from pydantic import BaseModel, Field, model_validator

from chirp_sim.domain.message import CandidateMessage


class DetectionResult(BaseModel):
    """
    Decisión del detector ML para un bloque recibido.

    Attributes:
        decided: Candidato elegido.
        metric: Norma del residuo ‖r − Σ H_u s_u‖₂ del candidato elegido.
        bit_errors: Errores de bit frente al mensaje transmitido (0 si se desconoce).
        total_bits: Bits de información del bloque.
    """

    decided: CandidateMessage = Field(..., description="Candidato decidido")
    metric: float = Field(..., ge=0.0, description="Norma del residuo")
    bit_errors: int = Field(default=0, ge=0, description="Errores de bit")
    total_bits: int = Field(..., ge=0, description="Bits por bloque")

    @model_validator(mode="after")
    def validate_error_count(self) -> "DetectionResult":
        """Los errores no pueden superar el número de bits."""
        if self.bit_errors > self.total_bits:
            raise ValueError("bit_errors no puede superar total_bits")
        return self

    model_config = {
        "frozen": True,
    }


class PairTerm(BaseModel):
    """
    Término de la cota para un par ordenado de candidatos (a → â).

    Attributes:
        a_index: Índice del candidato transmitido.
        a_hat_index: Índice del candidato decidido erróneamente.
        rank: Rango R de Θ(a, â).
        eigenvalues: Autovalores no nulos λ_1..λ_R en orden descendente.
        pep: Probabilidad de error por pares aproximada.
        hamming: Bits distintos entre ambos candidatos.
    """

    a_index: int = Field(..., ge=0)
    a_hat_index: int = Field(..., ge=0)
    rank: int = Field(..., ge=0)
    eigenvalues: tuple[float, ...] = Field(default=())
    pep: float = Field(..., ge=0.0)
    hamming: int = Field(..., ge=0)

    model_config = {
        "frozen": True,
    }


class BoundReport(BaseModel):
    """
    Cota superior de BER de un usuario evaluada para una relación señal/ruido.

    Attributes:
        gamma: Relación 1/σ².
        pair_terms: Términos de todos los pares ordenados.
        f: Peso de normalización Q^M·M·log₂Q + P·log₂P.
        p_e: Valor de la cota.
        diversity_order: Rango mínimo entre todos los pares.
    """

    gamma: float = Field(..., gt=0.0, description="1/σ²")
    pair_terms: tuple[PairTerm, ...] = Field(default=())
    f: float = Field(..., gt=0.0, description="Peso de normalización")
    p_e: float = Field(..., ge=0.0, description="Valor de la cota")
    diversity_order: int = Field(..., ge=0, description="Orden de diversidad")

    @property
    def degenerate_pairs(self) -> int:
        """Número de pares indistinguibles (R = 0)."""
        return sum(1 for term in self.pair_terms if term.rank == 0)

    model_config = {
        "frozen": True,
    }


class ChirpOrderStep(BaseModel):
    """
    Ronda del algoritmo de reducción a la mitad de P̃.

    Attributes:
        p_tilde: Orden de chirp probado.
        ambiguous: Si existen dos candidatos con la misma señal compuesta.
        colliding_pair: Índices del primer par en colisión (si lo hay).
    """

    p_tilde: int = Field(..., ge=1)
    ambiguous: bool
    colliding_pair: tuple[int, int] | None = None

    model_config = {
        "frozen": True,
    }


class ChirpOrderResult(BaseModel):
    """
    Resultado de la optimización del orden de chirp.

    Attributes:
        p_star: Mayor orden libre de ambigüedad (P★).
        trace: Rondas ejecutadas, desde P̃ = N hasta P★.
    """

    p_star: int = Field(..., ge=1)
    trace: tuple[ChirpOrderStep, ...] = Field(default=())

    @model_validator(mode="after")
    def validate_trace(self) -> "ChirpOrderResult":
        """Todas las rondas con P̃ > P★ deben ser ambiguas."""
        for step in self.trace:
            if step.p_tilde > self.p_star and not step.ambiguous:
                raise ValueError(f"P̃ = {step.p_tilde} > P★ debería ser ambiguo")
        return self

    model_config = {
        "frozen": True,
    }


class BerRow(BaseModel):
    """
    Fila de una curva de BER simulada.

    Attributes:
        ebn0_db: Eb/N0 del punto en dB.
        trials: Bloques simulados.
        bit_errors: Errores de bit acumulados.
        ber: Tasa de error de bit.
        stderr: Error estándar binomial de la BER.
    """

    ebn0_db: float
    trials: int = Field(..., ge=0)
    bit_errors: int = Field(..., ge=0)
    ber: float = Field(..., ge=0.0, le=1.0)
    stderr: float = Field(..., ge=0.0)

    @classmethod
    def from_counts(
        cls, ebn0_db: float, trials: int, bit_errors: int, bits_per_trial: int
    ) -> "BerRow":
        """Construye la fila a partir de los contadores enteros."""
        n_bits = trials * bits_per_trial
        ber = bit_errors / n_bits if n_bits else 0.0
        stderr = math.sqrt(ber * (1.0 - ber) / n_bits) if n_bits else 0.0
        return cls(
            ebn0_db=ebn0_db,
            trials=trials,
            bit_errors=bit_errors,
            ber=ber,
            stderr=stderr,
        )

    model_config = {
        "frozen": True,
    }


class BerCurve(BaseModel):
    """
    Curva de BER de una forma de onda.

    Attributes:
        label: Nombre de la curva (columna `waveform` del CSV).
        rows: Filas en el orden del barrido de Eb/N0.
    """

    label: str = Field(default="", description="Nombre de la curva")
    rows: tuple[BerRow, ...] = Field(default=())

    model_config = {
        "frozen": True,
    }


class PaprEntry(BaseModel):
    """
    PAPR medido sobre varios vectores de símbolos.

    Attributes:
        label: Curva o forma de onda medida.
        nu: Índice de chirp fijado (None si se sortea con el mensaje).
        chirp_bits: Bits de chirp correspondientes a nu, como texto ("01").
        max_papr_db: PAPR máximo en dB.
        mean_papr_db: PAPR medio en dB.
        draws: Vectores de símbolos evaluados.
    """

    label: str
    nu: int | None = None
    chirp_bits: str = ""
    max_papr_db: float
    mean_papr_db: float
    draws: int = Field(..., ge=1)

    model_config = {
        "frozen": True,
    }
