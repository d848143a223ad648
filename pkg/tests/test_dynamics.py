from dataclasses import replace

import numpy as np
import pytest
import scipy.linalg

from conftest import random_hermitian
from tilesdyn.dynamics import SweepConfig, amplitude_sensitivity_report, evolve, run_sweep
from tilesdyn.errors import ConfigError, PreconditionError
from tilesdyn.hamiltonians import HamiltonianSpec, Interaction, build_hamiltonian
from tilesdyn.measures import MeasurementConfig
from tilesdyn.states import UNIFORM_AUX, AuxAmplitudes, aux_state, bennett_state, initial_state
from tilesdyn.tensor import partial_trace, partial_transpose

C0 = 0.0962112874802944
A_BC = MeasurementConfig.parse("A|BC", "none")


@pytest.fixture
def rho0():
    return initial_state(bennett_state(), aux_state(UNIFORM_AUX))


def test_evolve_identity_cases(rho0, rng):
    h = random_hermitian(rng, 27)
    assert np.max(np.abs(evolve(rho0, h, 0.0).data - rho0.data)) < 1e-12
    for t in (0.5, 3.0, 19.0):
        assert np.max(np.abs(evolve(rho0, np.zeros((27, 27)), t).data - rho0.data)) < 1e-15


def test_evolve_matches_expm_and_preserves_spectrum(rho0, rng):
    h = build_hamiltonian(HamiltonianSpec("dm", 0.8))
    for t in rng.uniform(0, 20, size=4):
        u = scipy.linalg.expm(-1j * h * t)
        rho = evolve(rho0, h, t).data
        assert np.max(np.abs(rho - u @ rho0.data @ u.conj().T)) < 1e-10
        assert abs(np.trace(rho) - 1) < 1e-9
        assert abs(np.trace(rho @ rho) - np.trace(rho0.data @ rho0.data)) < 1e-9
        assert np.max(np.abs(rho - rho.conj().T)) < 1e-10
        assert np.allclose(np.linalg.eigvalsh(rho), np.linalg.eigvalsh(rho0.data), atol=1e-9)


def test_evolve_rejects_non_hermitian(rho0, rng):
    with pytest.raises(PreconditionError):
        evolve(rho0, rng.normal(size=(27, 27)), 1.0)


def test_sweep_config_grid():
    cfg = SweepConfig(HamiltonianSpec("heisenberg", 0.5), steps=801)
    t = cfg.times()
    assert len(t) == 801 and t[0] == 0 and t[-1] == 20
    assert np.allclose(np.diff(t), 0.025)
    assert SweepConfig(HamiltonianSpec("dm", 1), t_start=2.0, steps=1).times().tolist() == [2.0]


@pytest.mark.parametrize(
    "kwargs", [dict(steps=0), dict(steps=2.5), dict(t_start=3, t_end=1), dict(t_start=1, t_end=1, steps=5)]
)
def test_sweep_config_rejects(kwargs):
    with pytest.raises(ConfigError):
        SweepConfig(HamiltonianSpec("dm", 1), **kwargs)


def test_single_step_sweep():
    res = run_sweep(SweepConfig(HamiltonianSpec("dm", 1), steps=1))
    assert len(res.records) == 1
    assert abs(res.records[0].ccnr - C0) < 1e-10


@pytest.mark.parametrize("kind", list(Interaction))
def test_zero_strength_sweep_is_flat(kind):
    res = run_sweep(SweepConfig(HamiltonianSpec(kind, 0.0), steps=41))
    assert np.max(np.abs(res.column("negativity"))) < 1e-10
    assert np.max(np.abs(res.column("ccnr") - C0)) < 1e-10


def test_records_strictly_increasing_with_unit_trace():
    res = run_sweep(SweepConfig(HamiltonianSpec("blbq", 0.5), steps=51, measurement=A_BC))
    assert np.all(np.diff(res.times) > 0)
    assert np.max(np.abs(res.column("trace") - 1)) < 1e-9
    assert np.max(np.abs(res.column("state_trace") - 1)) < 1e-9
    assert res.config.measurement == A_BC


@pytest.mark.parametrize("j", [0.25, 0.5, 1.0])
def test_literal_negativity_zero_heisenberg(j):
    cfg = SweepConfig(HamiltonianSpec("heisenberg", j), steps=81)
    res = run_sweep(cfg)
    assert np.max(np.abs(res.column("negativity"))) < 1e-9
    # brute force: independent exponential and explicit PT eigenvalues at every grid point
    h = build_hamiltonian(cfg.hamiltonian)
    r0 = initial_state(bennett_state(), aux_state(cfg.aux)).data
    for t in cfg.times():
        u = scipy.linalg.expm(-1j * h * t)
        rab = partial_trace(u @ r0 @ u.conj().T, [3, 3, 3], {0, 1})
        assert np.linalg.eigvalsh(partial_transpose(rab, [3, 3], 1)).min() > -1e-9


@pytest.mark.parametrize("kind", list(Interaction))
def test_rescaling_law(kind):
    a = run_sweep(SweepConfig(HamiltonianSpec(kind, 0.5), t_end=20, steps=101, measurement=A_BC))
    b = run_sweep(SweepConfig(HamiltonianSpec(kind, 1.0), t_end=10, steps=101, measurement=A_BC))
    for col in ("negativity", "ccnr", "purity"):
        assert np.max(np.abs(a.column(col) - b.column(col))) < 1e-9


def test_heisenberg_periodicity():
    j = 0.5
    period = 2 * np.pi / j
    a = run_sweep(SweepConfig(HamiltonianSpec("heisenberg", j), t_end=5, steps=21, measurement=A_BC))
    b = run_sweep(
        SweepConfig(HamiltonianSpec("heisenberg", j), t_start=period, t_end=period + 5, steps=21, measurement=A_BC)
    )
    for col in ("negativity", "ccnr"):
        assert np.max(np.abs(a.column(col) - b.column(col))) < 1e-8


def test_blbq_state_entries_are_single_frequency():
    # H has spectrum {0, -2J}, so every matrix element of rho(t) is c0 + c1 cos(2Jt) + c2 sin(2Jt)
    j = 0.5
    h = build_hamiltonian(HamiltonianSpec("blbq", j))
    r0 = initial_state(bennett_state(), aux_state(UNIFORM_AUX))
    ts = np.linspace(0, 20, 161)
    series = np.array([evolve(r0, h, t).data.reshape(-1) for t in ts])
    basis = np.column_stack([np.ones_like(ts), np.cos(2 * j * ts), np.sin(2 * j * ts)])
    coef, *_ = np.linalg.lstsq(basis, series, rcond=None)
    assert np.max(np.abs(basis @ coef - series)) < 1e-10


def test_amplitude_sensitivity_examples():
    cfg = SweepConfig(HamiltonianSpec("heisenberg", 0.5), aux=(1, 0, 0), steps=41)
    assert amplitude_sensitivity_report(cfg, cfg.aux) == {"negativity": 0.0, "ccnr": 0.0}
    report = amplitude_sensitivity_report(cfg, AuxAmplitudes(0, 1, 0))
    assert report["negativity"] < 1e-9
    zero = replace(cfg, hamiltonian=HamiltonianSpec("dm", 0.0))
    assert max(amplitude_sensitivity_report(zero, AuxAmplitudes(0, 0, 1)).values()) < 1e-12


def test_amplitudes_do_matter_on_a_bc_cut():
    # reported, not a claim: under the A|BC cut the auxiliary amplitudes change the curves
    cfg = SweepConfig(HamiltonianSpec("blbq", 0.5), aux=(1, 0, 0), steps=41, measurement=A_BC)
    report = amplitude_sensitivity_report(cfg, UNIFORM_AUX)
    assert report["negativity"] > 1e-3


def test_sweep_error_names_configuration():
    cfg = SweepConfig(HamiltonianSpec("dm", 1.0), aux=(1, 1, 0), steps=3)
    with pytest.raises(PreconditionError, match="interaction=dm"):
        run_sweep(cfg)


def test_sweep_is_deterministic():
    cfg = SweepConfig(HamiltonianSpec("dm", 0.7), steps=31, measurement=A_BC)
    a, b = run_sweep(cfg), run_sweep(cfg)
    assert np.array_equal(a.column("ccnr"), b.column("ccnr"))
    assert isinstance(run_sweep(cfg).records[0].t, float)
