"""Interaction Hamiltonians between qutrit A and the auxiliary qutrit C."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .operators import Convention, operator_triple


class Interaction(str, enum.Enum):
    HEISENBERG = "heisenberg"
    BLBQ = "blbq"
    DM = "dm"


@dataclass(frozen=True)
class HamiltonianSpec:
    kind: Interaction
    strength: float
    convention: Convention = Convention.SPIN1

    def __post_init__(self):
        object.__setattr__(self, "kind", Interaction(self.kind))
        object.__setattr__(self, "convention", Convention(self.convention))
        object.__setattr__(self, "strength", float(self.strength))
        if not math.isfinite(self.strength):
            raise ConfigError(f"strength must be finite, got {self.strength}")


def build_pair_hamiltonian(spec: HamiltonianSpec) -> np.ndarray:
    """9x9 Hamiltonian on A(x)C.

    heisenberg: -J Sz(x)Sz
    blbq:       -J [Sz(x)Sz + (Sz(x)Sz)^2]
    dm:          D (Sx(x)Sy - Sy(x)Sx)
    """
    sx, sy, sz = operator_triple(spec.convention)
    s = spec.strength
    if spec.kind is Interaction.DM:
        return s * (np.kron(sx, sy) - np.kron(sy, sx))
    zz = np.kron(sz, sz)
    if spec.kind is Interaction.HEISENBERG:
        return -s * zz
    # squares the two-site operator as a whole, not each factor
    return -s * (zz + zz @ zz)


def embed_on_tripartite(h_ac: np.ndarray) -> np.ndarray:
    """Lift a 9x9 operator on A(x)C to A(x)B(x)C, acting as identity on B."""
    h_ac = np.asarray(h_ac)
    if h_ac.shape != (9, 9):
        raise ConfigError(f"expected a 9x9 operator on A(x)C, got shape {h_ac.shape}")
    t = h_ac.reshape(3, 3, 3, 3)
    full = np.einsum("acxz,by->abcxyz", t, np.eye(3))
    return full.reshape(27, 27)


def build_hamiltonian(spec: HamiltonianSpec) -> np.ndarray:
    return embed_on_tripartite(build_pair_hamiltonian(spec))
