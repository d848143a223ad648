"""Unitary evolution of the A(x)B(x)C state and time sweeps of the measures."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigError
from .hamiltonians import HamiltonianSpec, build_hamiltonian
from .measures import (
    PAPER_LITERAL,
    Diagnostics,
    MeasurementConfig,
    bipartite_ccnr,
    bipartite_negativity,
    cut_state,
    diagnostics,
)
from .states import UNIFORM_AUX, AuxAmplitudes, aux_state, bennett_state, initial_state
from .tensor import DensityMatrix, Propagator

MEASUREMENT_COLUMNS = ("negativity", "ccnr")


@dataclass(frozen=True)
class SweepConfig:
    hamiltonian: HamiltonianSpec
    aux: AuxAmplitudes = UNIFORM_AUX
    t_start: float = 0.0
    t_end: float = 20.0
    steps: int = 801
    measurement: MeasurementConfig = PAPER_LITERAL

    def __post_init__(self):
        object.__setattr__(self, "aux", AuxAmplitudes(*self.aux))
        if int(self.steps) != self.steps or self.steps < 1:
            raise ConfigError(f"steps must be a positive integer, got {self.steps}")
        if self.t_start > self.t_end:
            raise ConfigError(f"t_start {self.t_start} exceeds t_end {self.t_end}")
        if self.steps > 1 and self.t_start == self.t_end:
            raise ConfigError("a multi-step grid needs t_start < t_end")

    def times(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([float(self.t_start)])
        return np.linspace(self.t_start, self.t_end, int(self.steps))


@dataclass(frozen=True)
class Record:
    t: float
    negativity: float
    ccnr: float
    measured: Diagnostics
    state: Diagnostics


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    records: tuple[Record, ...] = field(default_factory=tuple)

    @property
    def times(self) -> np.ndarray:
        return np.array([r.t for r in self.records])

    def column(self, name: str) -> np.ndarray:
        if name in ("t", "negativity", "ccnr"):
            return np.array([getattr(r, name) for r in self.records])
        if name in ("purity", "min_eigenvalue", "trace", "max_hermiticity_defect"):
            return np.array([getattr(r.measured, name) for r in self.records])
        if name.startswith("state_"):
            return np.array([getattr(r.state, name[6:]) for r in self.records])
        raise KeyError(name)


def evolve(rho0: DensityMatrix, h_full: np.ndarray | Propagator, t: float) -> DensityMatrix:
    """U(t) rho0 U(t)^dag with U(t) = exp(-i H t)."""
    prop = h_full if isinstance(h_full, Propagator) else Propagator.from_hamiltonian(h_full)
    u = prop(t)
    return DensityMatrix(u @ rho0.data @ u.conj().T, rho0.dims)


def _measure(t: float, rho: DensityMatrix, meas: MeasurementConfig) -> Record:
    cs = cut_state(rho, meas)
    return Record(
        t=float(t),
        negativity=bipartite_negativity(cs, meas.pt_side),
        ccnr=bipartite_ccnr(cs),
        measured=diagnostics(cs),
        state=diagnostics(rho),
    )


def run_sweep(cfg: SweepConfig) -> SweepResult:
    try:
        rho0 = initial_state(bennett_state(), aux_state(cfg.aux))
        prop = Propagator.from_hamiltonian(build_hamiltonian(cfg.hamiltonian))
        records = tuple(_measure(t, evolve(rho0, prop, t), cfg.measurement) for t in cfg.times())
    except ValueError as exc:
        raise type(exc)(f"{exc} (in sweep {describe(cfg)})") from exc
    return SweepResult(cfg, records)


def describe(cfg: SweepConfig) -> str:
    h = cfg.hamiltonian
    return (
        f"interaction={h.kind.value} strength={h.strength:g} convention={h.convention.value} "
        f"cut={cfg.measurement.cut_string()} reduce={cfg.measurement.reduce_string()}"
    )


def amplitude_sensitivity_report(cfg: SweepConfig, alt_aux: AuxAmplitudes) -> dict[str, float]:
    """Max deviation over the grid of each measurement column when the auxiliary amplitudes change."""
    a = run_sweep(cfg)
    b = run_sweep(replace(cfg, aux=AuxAmplitudes(*alt_aux)))
    return {c: float(np.max(np.abs(a.column(c) - b.column(c)))) for c in MEASUREMENT_COLUMNS}
