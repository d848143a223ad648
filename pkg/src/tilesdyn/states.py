"""The tiles bound entangled state, the auxiliary qutrit, and their product."""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import ConfigError, PreconditionError
from .tensor import DensityMatrix

NORM_TOL = 1e-9

_E = np.eye(3, dtype=complex)


def tiles_basis() -> list[np.ndarray]:
    """The five product kets of the tiles unextendible product basis on A(x)B."""
    e0, e1, e2 = _E
    s = 1 / np.sqrt(2)
    uniform = (e0 + e1 + e2) / np.sqrt(3)
    factors = [
        (e0, s * (e0 - e1)),
        (s * (e0 - e1), e2),
        (e2, s * (e1 - e2)),
        (s * (e1 - e2), e0),
        (uniform, uniform),
    ]
    return [np.kron(a, b) for a, b in factors]


def bennett_state() -> DensityMatrix:
    """(I - sum_i |psi_i><psi_i|) / 4 on two qutrits."""
    proj = sum(np.outer(k, k.conj()) for k in tiles_basis())
    return DensityMatrix((np.eye(9) - proj) / 4, (3, 3))


class AuxAmplitudes(NamedTuple):
    alpha: complex
    beta: complex
    gamma: complex

    @classmethod
    def from_reals(cls, values: Sequence[float]) -> "AuxAmplitudes":
        """Three reals, or six reals read as (re, im) pairs."""
        values = [float(v) for v in values]
        if len(values) == 3:
            return cls(*(complex(v) for v in values))
        if len(values) == 6:
            return cls(*(complex(values[i], values[i + 1]) for i in (0, 2, 4)))
        raise ConfigError(f"aux needs 3 or 6 reals, got {len(values)}")

    def vector(self) -> np.ndarray:
        return np.array(self, dtype=complex)

    def norm_defect(self) -> float:
        return abs(float(np.sum(np.abs(self.vector()) ** 2)) - 1.0)


UNIFORM_AUX = AuxAmplitudes(*([1 / np.sqrt(3)] * 3))


def aux_state(amps: AuxAmplitudes | Sequence[complex]) -> DensityMatrix:
    amps = AuxAmplitudes(*amps)
    if amps.norm_defect() > NORM_TOL:
        raise PreconditionError(
            f"auxiliary amplitudes not normalized: |a|^2+|b|^2+|c|^2 - 1 = {amps.norm_defect():.3e}"
        )
    v = amps.vector()
    return DensityMatrix(np.outer(v, v.conj()), (3,))


def initial_state(rho_ab: DensityMatrix, rho_c: DensityMatrix) -> DensityMatrix:
    if rho_ab.dims != (3, 3) or rho_c.dims != (3,):
        raise ConfigError(f"expected dims (3, 3) and (3,), got {rho_ab.dims} and {rho_c.dims}")
    for name, rho in (("rho_ab", rho_ab), ("rho_c", rho_c)):
        if abs(rho.trace() - 1) > NORM_TOL:
            raise PreconditionError(f"{name} does not have unit trace")
    return DensityMatrix(np.kron(rho_ab.data, rho_c.data), (3, 3, 3))
