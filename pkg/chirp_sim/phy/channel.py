"""
Canal retardo-Doppler de ChirpSim.

Este módulo muestrea realizaciones del canal, construye la matriz del canal en
el tiempo H = Σ_l h_l D_l Π^l, la aplica a las señales de todos los usuarios y
calibra la varianza del ruido a partir de Eb/N0.

Example:
    >>> import numpy as np
    >>> from chirp_sim.domain import ChannelParams
    >>> from chirp_sim.phy.channel import sample_channel
    >>> rng = np.random.default_rng(7)
    >>> realization = sample_channel(ChannelParams(L=3), U=2, rng=rng)
    >>> [path.delay for path in realization.users[0]]
    [0, 1, 2]
"""

from collections.abc import Sequence

import numpy as np

from chirp_sim.domain.channel import ChannelParams, ChannelRealization, PathState
from chirp_sim.domain.errors import InvalidConfigError, InvalidDelayError
from chirp_sim.domain.system_config import SystemConfig
from chirp_sim.phy.numerics import ComplexMatrix, ComplexVector
from chirp_sim.phy.signal import ComplexSignal


def sample_channel(
    params: ChannelParams, U: int, rng: np.random.Generator
) -> ChannelRealization:
    """
    Muestrea una realización del canal para U usuarios.

    Ganancias gaussianas complejas circulares i.i.d. de varianza 1/L, Doppler
    normalizado uniforme en [−f̄_max, f̄_max] y retardos {0, …, L−1} (o
    distintos y aleatorios en [0, max_delay] si random_delays está activo).
    """
    L = params.L
    f_bar = params.max_normalized_doppler
    users = []
    for _ in range(U):
        gains = np.sqrt(0.5 / L) * (rng.standard_normal(L) + 1j * rng.standard_normal(L))
        if f_bar > 0.0:
            dopplers = rng.uniform(-f_bar, f_bar, size=L)
        else:
            dopplers = np.zeros(L)
        if params.random_delays:
            delays = np.sort(
                rng.choice(params.resolved_max_delay + 1, size=L, replace=False)
            )
        else:
            delays = np.arange(L)
        users.append(
            tuple(
                PathState(gain=complex(g), doppler=float(v), delay=int(d))
                for g, v, d in zip(gains, dopplers, delays)
            )
        )
    return ChannelRealization(users=tuple(users))


def channel_matrix(paths: Sequence[PathState], N: int) -> ComplexMatrix:
    """
    Matriz del canal en el tiempo H = Σ_l h_l D_l Π^l para un usuario.

    D_l = diag(exp(j2π v_l n / N)) y Π^l es el desplazamiento cíclico hacia
    delante de l muestras.

    Raises:
        InvalidDelayError: Si algún retardo es mayor o igual que N.
    """
    n = np.arange(N)
    h = np.zeros((N, N), dtype=np.complex128)
    for path in paths:
        if path.delay >= N:
            raise InvalidDelayError(f"Retardo {path.delay} no cabe en un bloque de {N}")
        doppler = np.exp(2j * np.pi * path.doppler * n / N)
        h[n, (n - path.delay) % N] += path.gain * doppler
    return h


def channel_matrices(realization: ChannelRealization, N: int) -> list[ComplexMatrix]:
    """Matrices H_u de todos los usuarios de una realización."""
    return [channel_matrix(paths, N) for paths in realization.users]


def noise(N: int, sigma2: float, rng: np.random.Generator) -> ComplexVector:
    """Ruido gaussiano complejo circular de varianza sigma2 por muestra."""
    if sigma2 <= 0.0:
        return np.zeros(N, dtype=np.complex128)
    return np.sqrt(sigma2 / 2.0) * (rng.standard_normal(N) + 1j * rng.standard_normal(N))


def apply_channel(
    tx: Sequence[ComplexSignal],
    realization: ChannelRealization,
    sigma2: float,
    rng: np.random.Generator,
) -> ComplexSignal:
    """
    Señal recibida r = Σ_u H_u s_u + w (modelo tras eliminar el CP).

    Raises:
        InvalidConfigError: Si el número de señales no coincide con los usuarios
            o las longitudes difieren.
    """
    if len(tx) != realization.num_users:
        raise InvalidConfigError(
            f"{len(tx)} señales para {realization.num_users} usuarios del canal"
        )
    if not tx:
        raise InvalidConfigError("No hay señales que transmitir")
    N = tx[0].length
    if any(s.length != N for s in tx):
        raise InvalidConfigError("Todas las señales deben tener la misma longitud")
    r = np.zeros(N, dtype=np.complex128)
    for s, paths in zip(tx, realization.users):
        r += channel_matrix(paths, N) @ s.samples
    return ComplexSignal(samples=r + noise(N, sigma2, rng))


def convolve_with_cp(
    s_with_cp: ComplexSignal, paths: Sequence[PathState], cp_len: int
) -> ComplexSignal:
    """
    Convolución lineal variante en el tiempo sobre la señal con CP.

    La fase Doppler toma como referencia la primera muestra tras el CP, de modo
    que al eliminar el CP el resultado coincide con `channel_matrix`.
    """
    t = s_with_cp.samples
    N = t.shape[0] - cp_len
    m = np.arange(t.shape[0])
    y = np.zeros_like(t)
    for path in paths:
        if path.delay > cp_len:
            raise InvalidDelayError(f"Retardo {path.delay} mayor que el CP ({cp_len})")
        delayed = np.zeros_like(t)
        delayed[path.delay :] = t[: t.shape[0] - path.delay]
        doppler = np.exp(2j * np.pi * path.doppler * (m - cp_len) / N)
        y += path.gain * doppler * delayed
    return ComplexSignal(samples=y)


def noise_variance_for_ebn0(config: SystemConfig, ebn0_db: float) -> float:
    """
    Varianza de ruido por muestra σ² para un Eb/N0 dado.

    Con símbolos de energía unidad y ganancia media del canal unitaria, la
    energía por bloque es U·M y Eb la reparte entre todos los bits de
    información (constelación, chirp y sentido).
    """
    block_energy = config.U * config.M
    eb = block_energy / config.total_bits
    return eb / 10.0 ** (ebn0_db / 10.0)
